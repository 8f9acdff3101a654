//! For every d between 2 and the longest τ-orbit, a generator-cogenerator
//! whose endomorphism algebra has global dimension exactly d.

use std::sync::Arc;

use mrep::artrans::{Budget, Catalog, OrbitTable};
use mrep::endalg;
use mrep::gencog::{construct_thm32, Workspace};
use mrep::quiver::Quiver;
use mrep::replicated::ReplicatedAlgebra;

fn main() -> mrep::Result<()> {
    for name in ["a2", "a3", "d4"] {
        let rep = Arc::new(ReplicatedAlgebra::new(&Quiver::named(name)?, 1, 32003)?);
        let cat = Catalog::build(rep, Budget::default())?;
        let l = OrbitTable::build(&cat).max_cardinality();
        let mut ws = Workspace::from_catalog(&cat);
        println!("{name}: {} indecomposables, longest τ-orbit {l}", cat.len());
        for d in 2..=l {
            let c = construct_thm32(&mut ws, &cat, d)?;
            let gl = ws.gldim_end_resolved(&c.gencog)?;
            let oracle = endalg::end_algebra_gldim(&mut ws, &c.gencog, endalg::DEFAULT_CAP)?;
            println!(
                "  d = {d}: Z = {}, {} summands, gl.dim End = {gl}, end-algebra oracle {}",
                cat.label(c.z),
                c.gencog.len(),
                oracle.map_or("unavailable".into(), |o| o.to_string())
            );
        }
        if let Err(e) = construct_thm32(&mut ws, &cat, l + 1) {
            println!("  d = {}: {e}", l + 1);
        }
    }
    Ok(())
}
