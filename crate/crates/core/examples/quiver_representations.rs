//! Representations of a quiver: parsing, decomposition, Hom and Ext.
//!
//! Run with `cargo run --example quiver_representations`.

use mrep::quiver::Quiver;
use mrep::rep::PathAlgebra;

fn main() -> mrep::Result<()> {
    let q = Quiver::parse(
        "# Kronecker quiver
         vertex 1
         vertex 2
         arrow a: 2 -> 1
         arrow b: 2 -> 1",
    )?;
    let pa = PathAlgebra::new(&q, 32003)?;

    let s1 = pa.simple(0)?;
    let s2 = pa.simple(1)?;
    println!("dim Ext¹(S2, S1) = {}", pa.ext1_dim(&s2, &s1));

    // A regular module of dimension vector (1,1): arrow maps (1, 0).
    let n = mrep::rep::Representation::from_ints(&q, 32003, &[1, 1], &[vec![vec![1]], vec![vec![0]]])?;
    println!("dim End(N) = {}, dim Ext¹(N, N) = {}", pa.hom_dim(&n, &n), pa.ext1_dim(&n, &n));

    let ext = pa.realize_extension(&n, &n, 0)?;
    println!("self-extension of N: dims {:?}, splits: {}", ext.middle.dims(), ext.splits);

    let sum = pa.direct_sum(&[&pa.projective(1)?, &n, &n]);
    for (x, mult) in pa.decompose(&sum, 7)? {
        println!("summand {:?} with multiplicity {mult}", x.dims());
    }
    Ok(())
}
