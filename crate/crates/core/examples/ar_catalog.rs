//! The complete catalog of indecomposables of a representation-finite
//! replicated algebra, its τ-orbits and the Auslander-Reiten quiver.
//!
//! `cargo run --example ar_catalog -- d4 1 > d4.dot` writes the DOT graph
//! to stdout; the summary goes to stderr.

use std::sync::Arc;

use mrep::artrans::{ArQuiver, Budget, Catalog, OrbitTable};
use mrep::quiver::Quiver;
use mrep::replicated::ReplicatedAlgebra;

fn main() -> mrep::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "a2".into());
    let m: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);

    let rep = Arc::new(ReplicatedAlgebra::new(&Quiver::named(&name)?, m, 32003)?);
    let cat = Catalog::build(rep, Budget::default())?;
    let orbits = OrbitTable::build(&cat);
    eprintln!("{} indecomposables, {} τ-orbits", cat.len(), orbits.orbits.len());
    for o in &orbits.orbits {
        let labels: Vec<&str> = o.iter().map(|&i| cat.label(i)).collect();
        eprintln!("  {}", labels.join(" -> "));
    }

    let ar = ArQuiver::build(&cat);
    eprintln!("mesh violations: {}", ar.mesh_violations(&cat).len());
    print!("{}", ar.to_dot(&cat));
    Ok(())
}
