//! The endomorphism algebra of a basic module, written out by structure
//! constants, and its global dimension computed from projective resolutions
//! of the simples. Serves as an independent check of the M-dimension route.

use crate::algebra::{Algebra, BasisElem, Sparse};
use crate::endo::LocalData;
use crate::error::Result;
use crate::field::Matrix;
use crate::gencog::{GenCog, GlDim, Workspace};
use crate::module::{self, Module, Morphism};

/// Default bound on the total dimension of the Hom spaces between summands.
pub const DEFAULT_CAP: usize = 400;

/// Coordinates with respect to a fixed linearly independent family.
struct Coords {
    rows: Vec<usize>,
    inv: Matrix,
}

impl Coords {
    fn new(p: u32, len: usize, family: &[Vec<u32>]) -> Coords {
        let b = Matrix::from_columns(p, len, family);
        let (_, pivots) = b.transpose().rref();
        let inv = b.select_rows(&pivots).inverse().expect("independent family");
        Coords { rows: pivots, inv }
    }

    fn of(&self, v: &[u32]) -> Vec<u32> {
        let sel: Vec<u32> = self.rows.iter().map(|&r| v[r]).collect();
        self.inv.mul_vec(&sel)
    }
}

/// `End(M_1 ⊕ ... ⊕ M_r)` for pairwise non-isomorphic indecomposables with
/// one-dimensional residue fields. Basis elements are `id_x`, a basis of
/// `rad End(M_x)`, and bases of `Hom(M_x, M_y)` for `x ≠ y`; the product
/// `b·c` is the composite `c ∘ b`. Returns `None` past the cap.
pub fn end_algebra(
    alg: &Algebra,
    modules: &[(&Module, &LocalData)],
    homs: impl Fn(usize, usize) -> Vec<Morphism>,
    cap: usize,
) -> Result<Option<Algebra>> {
    let r = modules.len();
    if modules.iter().any(|(_, l)| l.residue_degree != 1) {
        return Ok(None);
    }
    let mut comps: Vec<Vec<Vec<Morphism>>> = vec![vec![Vec::new(); r]; r];
    let mut total = 0;
    for x in 0..r {
        for y in 0..r {
            comps[x][y] = if x == y {
                let mut v = vec![Morphism::identity(alg, modules[x].0)];
                v.extend(modules[x].1.rad_basis.iter().cloned());
                v
            } else {
                homs(x, y)
            };
            total += comps[x][y].len();
            if total > cap {
                return Ok(None);
            }
        }
    }
    let p = alg.p();
    let mut basis = Vec::new();
    let mut index = Vec::new();
    for x in 0..r {
        for y in 0..r {
            for k in 0..comps[x][y].len() {
                basis.push(BasisElem {
                    source: x,
                    target: y,
                    idempotent: x == y && k == 0,
                    label: format!("{x}>{y}#{k}"),
                });
                index.push((x, y, k));
            }
        }
    }
    let mut offset = vec![vec![0; r]; r];
    {
        let mut off = 0;
        for x in 0..r {
            for y in 0..r {
                offset[x][y] = off;
                off += comps[x][y].len();
            }
        }
    }
    let coords: Vec<Vec<Option<Coords>>> = (0..r)
        .map(|x| {
            (0..r)
                .map(|y| {
                    let fam: Vec<Vec<u32>> = comps[x][y].iter().map(|f| f.to_vec()).collect();
                    let len = modules[x].0.dims().iter().zip(modules[y].0.dims()).map(|(a, b)| a * b).sum();
                    (!fam.is_empty()).then(|| Coords::new(p, len, &fam))
                })
                .collect()
        })
        .collect();
    let end = Algebra::new(p, (0..r).map(|x| format!("M{x}")).collect(), basis, |b, c| {
        let (x, y, i) = index[b];
        let (_, z, j) = index[c];
        let prod = comps[y][z][j].after(&comps[x][y][i]);
        if prod.is_zero() {
            return Sparse::new();
        }
        let cs = coords[x][z].as_ref().expect("nonzero composite in a zero Hom space").of(&prod.to_vec());
        cs.into_iter()
            .enumerate()
            .filter(|&(_, v)| v != 0)
            .map(|(k, v)| (offset[x][z] + k, v))
            .collect()
    })?;
    Ok(Some(end))
}

/// `gl.dim End(M)` computed directly; `None` when the oracle is unavailable
/// (cap exceeded or a non-trivial residue field). Projective dimensions
/// beyond `dim End(M) + 1` are reported as infinite.
pub fn end_algebra_gldim(ws: &mut Workspace, m: &GenCog, cap: usize) -> Result<Option<GlDim>> {
    let ids = m.summands().to_vec();
    let mut table = vec![vec![Vec::new(); ids.len()]; ids.len()];
    let mut total = 0;
    for (a, &x) in ids.iter().enumerate() {
        for (b, &y) in ids.iter().enumerate() {
            table[a][b] = ws.hom(x, y).to_vec();
            total += table[a][b].len();
            if total > cap {
                return Ok(None);
            }
        }
    }
    let alg = ws.rep_arc().alg_arc();
    let reg = ws.registry();
    let mods: Vec<(&Module, &LocalData)> = ids.iter().map(|&x| (reg.module(x), reg.local(x))).collect();
    let Some(end) = end_algebra(&alg, &mods, |a, b| table[a][b].clone(), cap)? else {
        return Ok(None);
    };
    Ok(Some(match module::global_dimension(&end, end.dim() + 1) {
        Some(d) => GlDim::Finite(d),
        None => GlDim::Infinite,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artrans::{Budget, Catalog};
    use crate::gencog::construct_e;
    use crate::quiver::Quiver;
    use crate::replicated::ReplicatedAlgebra;
    use std::sync::Arc;

    fn a2_ws() -> (Catalog, Workspace) {
        let rep = ReplicatedAlgebra::new(&Quiver::named("a2").unwrap(), 1, 101).unwrap();
        let cat = Catalog::build(Arc::new(rep), Budget::default()).unwrap();
        let ws = Workspace::from_catalog(&cat);
        (cat, ws)
    }

    #[test]
    fn end_of_regular_module_has_same_gldim() {
        let (_, mut ws) = a2_ws();
        let (projs, _) = ws.projective_and_injective_ids().unwrap();
        let m = GenCog::new(&mut ws, projs).unwrap();
        assert!(!m.is_gencog());
        let got = end_algebra_gldim(&mut ws, &m, DEFAULT_CAP).unwrap();
        assert_eq!(got, Some(GlDim::Finite(ws.rep().global_dimension().unwrap())));
    }

    #[test]
    fn e1_and_auslander_algebra() {
        let (cat, mut ws) = a2_ws();
        let e1 = construct_e(&mut ws, 1).unwrap();
        assert_eq!(end_algebra_gldim(&mut ws, &e1, DEFAULT_CAP).unwrap(), Some(GlDim::Finite(3)));
        let all = GenCog::new(&mut ws, cat.ids()).unwrap();
        let d = end_algebra_gldim(&mut ws, &all, DEFAULT_CAP).unwrap().unwrap();
        assert!(d <= GlDim::Finite(2));
    }

    #[test]
    fn cap_makes_oracle_unavailable() {
        let (cat, mut ws) = a2_ws();
        let all = GenCog::new(&mut ws, cat.ids()).unwrap();
        assert_eq!(end_algebra_gldim(&mut ws, &all, 5).unwrap(), None);
    }
}
