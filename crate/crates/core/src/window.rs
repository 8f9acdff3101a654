//! Bounded windows of indecomposables for representation-infinite cases.
//!
//! Indecomposable `A`-modules with every vertex dimension at most `B` are
//! enumerated by extension closure: such a module `X` with `S_i` in its top
//! is the middle term of an extension of `S_i` by the kernel of `X -> S_i`,
//! whose summands are smaller and already known. The window of `A^(m)` then
//! consists of the cosyzygies `Ω^{-j} Z` of these modules (placed in any
//! layer) that are supported in layers `0..=m`, plus projectives and
//! injectives. This is a partial view of `ind A^(m)`; results over it are
//! labelled as such.

use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::artrans::{Budget, Registry};
use crate::endo::{self, Analysis};
use crate::error::{Error, Result};
use crate::gencog::Workspace;
use crate::module::{self, Module};
use crate::rep::{PathAlgebra, Representation};
use crate::replicated::ReplicatedAlgebra;

/// All dimension vectors in `[0, bound]^n`, by total dimension.
fn dimension_vectors(n: usize, bound: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<usize>| {
                (0..=bound).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.sort_by_key(|v| (v.iter().sum::<usize>(), v.clone()));
    out
}

/// Multisets of registered ids (nondecreasing) whose dimension vectors sum to `target`.
fn multisets(reg: &Registry, target: &[usize]) -> Vec<Vec<usize>> {
    fn go(reg: &Registry, start: usize, rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.iter().all(|&x| x == 0) {
            out.push(cur.clone());
            return;
        }
        for id in start..reg.len() {
            let d = reg.module(id).dims();
            if d.iter().zip(rest.iter()).all(|(a, b)| a <= b) {
                for (r, a) in rest.iter_mut().zip(d) {
                    *r -= a;
                }
                cur.push(id);
                go(reg, id, rest, cur, out);
                cur.pop();
                for (r, a) in rest.iter_mut().zip(d) {
                    *r += a;
                }
            }
        }
    }
    let mut out = Vec::new();
    go(reg, 0, &mut target.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// Nonzero coefficient vectors in `F_p^e` up to scalars (first nonzero entry 1).
fn projective_points(p: u32, e: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for lead in 0..e {
        let free = e - lead - 1;
        let count = (p as usize).pow(free as u32);
        for mut code in 0..count {
            let mut v = vec![0; e];
            v[lead] = 1;
            for x in v.iter_mut().skip(lead + 1) {
                *x = (code % p as usize) as u32;
                code /= p as usize;
            }
            out.push(v);
        }
    }
    out
}

/// Every indecomposable `A`-module with all vertex dimensions at most
/// `bound`, up to isomorphism, by extension closure. Meant for small primes.
pub fn base_indecomposables(pa: &PathAlgebra, bound: usize, budget: &Budget) -> Result<Vec<Representation>> {
    let alg = pa.alg_arc();
    let p = alg.p();
    let n = alg.num_vertices();
    let start = Instant::now();
    let mut reg = Registry::new(alg.clone(), 0);
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(0);
    for v in 0..n {
        reg.insert(Module::simple(&alg, v))?;
    }
    let simples: Vec<Module> = (0..n).map(|v| Module::simple(&alg, v)).collect();
    for d in dimension_vectors(n, bound) {
        if d.iter().sum::<usize>() < 2 {
            continue;
        }
        for i in (0..n).filter(|&i| d[i] > 0) {
            let mut kd = d.clone();
            kd[i] -= 1;
            for ks in multisets(&reg, &kd) {
                let parts: Vec<&Module> = ks.iter().map(|&k| reg.module(k)).collect();
                let k = Module::direct_sum(&alg, &parts);
                let data = module::ext1_data(&alg, &simples[i], &k);
                let e = data.classes.len();
                if e == 0 {
                    continue;
                }
                if (p as f64).powi(e as i32 - 1) > 1e6 {
                    return Err(Error::Budget(format!(
                        "{} extension classes to scan at p = {p}",
                        (p as f64).powi(e as i32 - 1)
                    )));
                }
                for c in projective_points(p, e) {
                    let ext = module::realize_extension(&alg, &simples[i], &k, &data, &c)?;
                    if reg.find(&ext.middle).is_some() {
                        continue;
                    }
                    if let Analysis::Local(_) = endo::analyze(&alg, &ext.middle, &mut rng)? {
                        reg.insert(ext.middle)?;
                        if reg.len() > budget.max_entries {
                            return Err(Error::Budget(format!(
                                "more than {} indecomposables below the bound",
                                budget.max_entries
                            )));
                        }
                    }
                    if start.elapsed() > budget.max_time {
                        return Err(Error::Budget("window enumeration ran out of time".into()));
                    }
                }
            }
        }
    }
    let mut out: Vec<Representation> = reg.modules().iter().map(|x| pa.from_module(x)).collect();
    out.sort_by_key(|r| (r.dim(), r.dims().to_vec()));
    Ok(out)
}

/// A bounded set of indecomposable `A^(m)`-modules, registered in a workspace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub bound: usize,
    pub p: u32,
    /// Number of base indecomposables the window was built from.
    pub base_count: usize,
    /// Workspace ids, sorted.
    pub ids: Vec<usize>,
}

/// Transport the bounded base window into `A^(m)` (see the module docs).
pub fn replicated_window(ws: &mut Workspace, bound: usize, budget: &Budget) -> Result<Window> {
    let rep = ws.rep_arc();
    let m = rep.m();
    let pa = PathAlgebra::new(rep.quiver(), rep.p())?;
    let base = base_indecomposables(&pa, bound, budget)?;
    let top = 2 * m + 2;
    let big = Arc::new(ReplicatedAlgebra::new(rep.quiver(), top, rep.p())?);
    let mut ids = Vec::new();
    for z in &base {
        for k in 0..=m {
            let mut x = big.embed(z, k)?;
            for _ in 0..=top {
                if x.is_zero() || big.min_layer(&x).is_some_and(|l| l > m) {
                    break;
                }
                if big.max_layer(&x).is_some_and(|l| l + 1 >= top) {
                    return Err(Error::anomaly("cosyzygy reached the top of the auxiliary window"));
                }
                if big.max_layer(&x).is_some_and(|l| l <= m) {
                    let y = rep.restrict_from(&big, &x)?;
                    ids.extend(ws.register_all(&y)?);
                }
                x = module::cosyzygy(big.alg(), &x);
            }
        }
    }
    let (projs, injs) = ws.projective_and_injective_ids()?;
    ids.extend(projs);
    ids.extend(injs);
    ids.sort_unstable();
    ids.dedup();
    Ok(Window {
        bound,
        p: rep.p(),
        base_count: base.len(),
        ids,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    #[test]
    fn a3_base_window_is_all_indecomposables() {
        let pa = PathAlgebra::new(&Quiver::named("a3").unwrap(), 3).unwrap();
        let all = base_indecomposables(&pa, 1, &Budget::default()).unwrap();
        // positive roots of A_3
        assert_eq!(all.len(), 6);
    }

    #[test]
    fn kronecker_base_window_counts() {
        let pa = PathAlgebra::new(&Quiver::named("kronecker").unwrap(), 2).unwrap();
        let all = base_indecomposables(&pa, 2, &Budget::default()).unwrap();
        let count = |d: [usize; 2]| all.iter().filter(|r| r.dims() == d).count();
        assert_eq!(count([1, 0]), 1);
        assert_eq!(count([0, 1]), 1);
        assert_eq!(count([2, 1]), 1);
        assert_eq!(count([1, 2]), 1);
        // regular (1,1): the points of P^1(F_2)
        assert_eq!(count([1, 1]), 3);
        // regular (2,2): 3 of length 2 at rational points, 1 at the quadratic point
        assert_eq!(count([2, 2]), 4);
        assert_eq!(all.len(), 11);
    }

    #[test]
    fn projective_points_count() {
        assert_eq!(projective_points(3, 3).len(), 13);
        assert_eq!(projective_points(2, 1), vec![vec![1]]);
    }
}
