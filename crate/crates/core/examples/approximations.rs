//! Minimal right approximations and relative syzygies over A_2, m = 1.

use std::sync::Arc;

use mrep::artrans::{Budget, Catalog};
use mrep::gencog::{GenCog, Workspace};
use mrep::quiver::Quiver;
use mrep::replicated::ReplicatedAlgebra;

fn main() -> mrep::Result<()> {
    let rep = Arc::new(ReplicatedAlgebra::new(&Quiver::named("a2")?, 1, 32003)?);
    let cat = Catalog::build(rep, Budget::default())?;
    let mut ws = Workspace::from_catalog(&cat);

    // projectives, injectives and nothing else
    let basic = ws.basic_parts()?.all();
    let m = GenCog::new(&mut ws, basic)?;
    println!("M = {}", m.summands().iter().map(|&i| ws.label(i)).collect::<Vec<_>>().join(" ⊕ "));

    for x in cat.ids().filter(|&x| !m.contains(x)) {
        let a = ws.approximate(&m, x)?;
        let check = ws.check_approximation(&m, &a)?;
        let source: Vec<String> = a.parts.iter().map(|&i| ws.label(i)).collect();
        let kernel: Vec<String> = a.kernel_ids.iter().map(|&i| ws.label(i)).collect();
        println!(
            "{} <- {}  kernel [{}]  approximation {} minimal {}",
            ws.label(x),
            source.join(" ⊕ "),
            kernel.join(", "),
            check.approximation,
            check.minimal
        );
        let r = ws.m_dimension(&m, x, 16)?;
        println!("    M-dim = {:?}", r.value);
    }
    println!("gl.dim End(M) = {}", ws.gldim_end_resolved(&m)?);
    Ok(())
}
