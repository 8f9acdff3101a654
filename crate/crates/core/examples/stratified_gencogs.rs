//! The generator-cogenerators E_i built from the strata U_k, with exact
//! global dimensions over a representation-finite base.

use std::sync::Arc;

use mrep::artrans::{Budget, Catalog};
use mrep::endalg;
use mrep::gencog::{construct_e, GenCog, Workspace};
use mrep::quiver::Quiver;
use mrep::replicated::ReplicatedAlgebra;

fn main() -> mrep::Result<()> {
    let rep = Arc::new(ReplicatedAlgebra::new(&Quiver::named("a3")?, 2, 32003)?);
    let t = rep.global_dimension()?;
    let cat = Catalog::build(rep, Budget::default())?;
    let mut ws = Workspace::from_catalog(&cat);
    println!("A_3, m = 2: global dimension t = {t}");
    for i in 1..t {
        let e = construct_e(&mut ws, i)?;
        let gl = ws.gldim_end_resolved(&e)?;
        let oracle = endalg::end_algebra_gldim(&mut ws, &e, endalg::DEFAULT_CAP)?;
        println!("E_{i}: {} summands, gl.dim End = {gl}, oracle {oracle:?}", e.len());
    }
    let all = GenCog::new(&mut ws, cat.ids())?;
    println!("additive generator: gl.dim End = {}", ws.gldim_end_resolved(&all)?);
    Ok(())
}
