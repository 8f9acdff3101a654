//! Representation-infinite base: the Kronecker quiver over F_3. A window of
//! indecomposables gives lower bounds exactly and upper bounds on the window;
//! a self-extension yields infinite global dimension.

use std::sync::Arc;

use mrep::artrans::Budget;
use mrep::gencog::{construct_e, construct_lem47, construct_lem48, Workspace};
use mrep::quiver::Quiver;
use mrep::replicated::ReplicatedAlgebra;
use mrep::window::replicated_window;

fn main() -> mrep::Result<()> {
    let rep = Arc::new(ReplicatedAlgebra::new(&Quiver::named("kronecker")?, 1, 3)?);
    let mut ws = Workspace::new(rep, 0);
    let w = replicated_window(&mut ws, 3, &Budget::default())?;
    println!("window: {} modules from {} base indecomposables", w.ids.len(), w.base_count);

    for i in 1..=2 {
        let e = construct_e(&mut ws, i)?;
        let r = ws.gldim_end_windowed(&e, &w.ids)?;
        println!("E_{i}: lower bound {}, upper bound on the window {:?}", r.lower, r.upper_on_window);
    }

    let c = construct_lem47(&mut ws, 5)?;
    let r = ws.gldim_end_windowed(&c.gencog, &w.ids)?;
    println!(
        "d = 5: Z = {}, N = {}, lower bound {}, upper bound on the window {:?}",
        ws.label(c.z),
        ws.label(c.n),
        r.lower,
        r.upper_on_window
    );

    let c = construct_lem48(&mut ws, 2)?;
    let r = ws.m_dimension(&c.gencog, c.n, 16)?;
    println!(
        "N = {}, N' = {}: M-dim N = {:?}, cycle {:?}",
        ws.label(c.n),
        ws.label(c.n_prime),
        r.value,
        r.cycle
    );
    Ok(())
}
