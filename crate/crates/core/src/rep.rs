//! Representations of a quiver over F_p, i.e. right modules over the path
//! algebra `kQ`.
//!
//! An arrow `a: i -> j` acts as a matrix of shape `dims[j] x dims[i]`, and
//! the projective `P(i)` has the paths starting at `i` as its basis.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, BasisElem};
use crate::endo;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Matrix};
use crate::module::{self, Module, Morphism};
use crate::quiver::{PathBasis, Quiver};

/// Intertwining family `f_i: M_i -> N_i`.
pub type RepMorphism = Morphism;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    p: u32,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

/// File format: dimensions and row-major arrow matrices keyed by name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepJson {
    pub dims: BTreeMap<String, usize>,
    pub arrows: BTreeMap<String, Vec<Vec<i64>>>,
}

impl Representation {
    pub fn new(q: &Quiver, p: u32, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Representation> {
        if dims.len() != q.num_vertices() || maps.len() != q.arrows().len() {
            return Err(Error::input("representation does not match the quiver"));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(Error::input(format!(
                    "arrow `{}` needs a {}x{} matrix, got {}x{}",
                    a.name,
                    dims[a.target],
                    dims[a.source],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Representation { p, dims, maps })
    }

    /// Build from integer matrices (reduced mod p).
    pub fn from_ints(q: &Quiver, p: u32, dims: &[usize], maps: &[Vec<Vec<i64>>]) -> Result<Representation> {
        let mats = q
            .arrows()
            .iter()
            .zip(maps)
            .map(|(a, rows)| Matrix::from_rows_shaped(p, dims[a.target], dims[a.source], rows))
            .collect::<Result<Vec<_>>>()?;
        Representation::new(q, p, dims.to_vec(), mats)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    /// Action of a path: the product of its arrow matrices, last arrow leftmost.
    pub fn path_action(&self, paths: &PathBasis, path: usize) -> Matrix {
        let pp = paths.path(path);
        let p = self.p;
        let mut acc = Matrix::identity(p, self.dims[pp.source]);
        for &a in &pp.arrows {
            acc = self.maps[a].mul(&acc);
        }
        acc
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn to_json(&self, q: &Quiver) -> RepJson {
        RepJson {
            dims: q
                .vertices()
                .iter()
                .cloned()
                .zip(self.dims.iter().copied())
                .collect(),
            arrows: q
                .arrows()
                .iter()
                .zip(&self.maps)
                .map(|(a, m)| (a.name.clone(), m.to_signed_rows()))
                .collect(),
        }
    }

    pub fn from_json_value(q: &Quiver, p: u32, j: &RepJson) -> Result<Representation> {
        for name in j.dims.keys() {
            q.vertex_index(name)?;
        }
        for name in j.arrows.keys() {
            q.arrow_index(name)?;
        }
        let dims: Vec<usize> = q
            .vertices()
            .iter()
            .map(|v| j.dims.get(v).copied().unwrap_or(0))
            .collect();
        let maps = q
            .arrows()
            .iter()
            .map(|a| {
                let (r, c) = (dims[a.target], dims[a.source]);
                match j.arrows.get(&a.name) {
                    Some(rows) => Matrix::from_rows_shaped(p, r, c, rows)
                        .map_err(|e| Error::input(format!("arrow `{}`: {e}", a.name))),
                    None if r == 0 || c == 0 => Ok(Matrix::zeros(p, r, c)),
                    None => Err(Error::input(format!("missing matrix for arrow `{}`", a.name))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Representation::new(q, p, dims, maps)
    }

    pub fn from_json(q: &Quiver, p: u32, text: &str) -> Result<Representation> {
        let j: RepJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        Representation::from_json_value(q, p, &j)
    }
}

/// The path algebra `kQ` with its module-theoretic operations.
pub struct PathAlgebra {
    quiver: Quiver,
    paths: PathBasis,
    alg: Arc<Algebra>,
}

impl std::fmt::Debug for PathAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PathAlgebra(dim={})", self.alg.dim())
    }
}

impl PathAlgebra {
    pub fn new(q: &Quiver, p: u32) -> Result<PathAlgebra> {
        FieldSpec::new(p)?;
        let paths = PathBasis::new(q);
        let basis = paths
            .paths()
            .iter()
            .enumerate()
            .map(|(i, path)| BasisElem {
                source: path.source,
                target: path.target,
                idempotent: path.is_trivial(),
                label: paths.name(i).to_string(),
            })
            .collect();
        let alg = Algebra::new(p, q.vertices().to_vec(), basis, |b, c| {
            paths.compose(b, c).map(|x| vec![(x, 1)]).unwrap_or_default()
        })?;
        Ok(PathAlgebra {
            quiver: q.clone(),
            paths,
            alg: Arc::new(alg),
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn paths(&self) -> &PathBasis {
        &self.paths
    }

    pub fn alg(&self) -> &Algebra {
        &self.alg
    }

    pub fn alg_arc(&self) -> Arc<Algebra> {
        self.alg.clone()
    }

    pub fn p(&self) -> u32 {
        self.alg.p()
    }

    fn arrow_elem(&self, a: usize) -> usize {
        self.paths
            .paths()
            .iter()
            .position(|x| x.arrows == [a])
            .expect("arrow is a path")
    }

    /// The module over [`Self::alg`]; `r` must be over the same field.
    pub fn to_module(&self, r: &Representation) -> Module {
        let acts = (0..self.paths.len())
            .map(|i| r.path_action(&self.paths, i))
            .collect();
        Module::from_acts(&self.alg, r.dims.clone(), acts).expect("path actions form a module")
    }

    pub fn from_module(&self, m: &Module) -> Representation {
        let maps = (0..self.quiver.arrows().len())
            .map(|a| m.act(self.arrow_elem(a)).clone())
            .collect();
        Representation {
            p: self.p(),
            dims: m.dims().to_vec(),
            maps,
        }
    }

    fn check_vertex(&self, i: usize) -> Result<()> {
        if i >= self.quiver.num_vertices() {
            return Err(Error::input(format!("unknown vertex index {i}")));
        }
        Ok(())
    }

    pub fn simple(&self, i: usize) -> Result<Representation> {
        self.check_vertex(i)?;
        Ok(self.from_module(&Module::simple(&self.alg, i)))
    }

    pub fn projective(&self, i: usize) -> Result<Representation> {
        self.check_vertex(i)?;
        Ok(self.from_module(&Module::projective(&self.alg, i)))
    }

    pub fn injective(&self, i: usize) -> Result<Representation> {
        self.check_vertex(i)?;
        Ok(self.from_module(&Module::injective(&self.alg, i)))
    }

    pub fn zero(&self) -> Representation {
        self.from_module(&Module::zero(&self.alg))
    }

    pub fn direct_sum(&self, parts: &[&Representation]) -> Representation {
        let mods: Vec<Module> = parts.iter().map(|r| self.to_module(r)).collect();
        self.from_module(&Module::direct_sum(&self.alg, &mods.iter().collect::<Vec<_>>()))
    }

    pub fn hom_basis(&self, m: &Representation, n: &Representation) -> Vec<RepMorphism> {
        module::hom_basis(&self.alg, &self.to_module(m), &self.to_module(n))
    }

    pub fn hom_dim(&self, m: &Representation, n: &Representation) -> usize {
        self.hom_basis(m, n).len()
    }

    /// Indecomposable summands up to isomorphism, with multiplicities, in
    /// order of first appearance.
    pub fn decompose(&self, m: &Representation, seed: u64) -> Result<Vec<(Representation, usize)>> {
        let parts = endo::decompose(&self.alg, &self.to_module(m), seed)?;
        let mut out: Vec<(Module, usize)> = Vec::new();
        for (x, _) in parts {
            match out.iter_mut().find(|(y, _)| endo::iso_indec(&self.alg, &x, y).is_some()) {
                Some(slot) => slot.1 += 1,
                None => out.push((x, 1)),
            }
        }
        Ok(out.into_iter().map(|(x, k)| (self.from_module(&x), k)).collect())
    }

    pub fn is_iso(&self, m: &Representation, n: &Representation, seed: u64) -> Result<bool> {
        endo::is_iso(&self.alg, &self.to_module(m), &self.to_module(n), seed)
    }

    pub fn ext1_dim(&self, m: &Representation, n: &Representation) -> usize {
        module::ext1_dim(&self.alg, &self.to_module(m), &self.to_module(n))
    }

    /// Realize the `class`-th basis element of `Ext¹(M, N)` as
    /// `0 -> N -> E -> M -> 0`.
    pub fn realize_extension(&self, m: &Representation, n: &Representation, class: usize) -> Result<RepExtension> {
        let (mm, nn) = (self.to_module(m), self.to_module(n));
        let data = module::ext1_data(&self.alg, &mm, &nn);
        let k = data.classes.len();
        if class >= k {
            return Err(Error::input(format!(
                "extension class {class} out of range (dim Ext¹ = {k})"
            )));
        }
        let mut coeffs = vec![0; k];
        coeffs[class] = 1;
        let ext = module::realize_extension(&self.alg, &mm, &nn, &data, &coeffs)?;
        let splits = module::extension_splits(&self.alg, &nn, &ext);
        Ok(RepExtension {
            middle: self.from_module(&ext.middle),
            inj: ext.inj,
            proj: ext.proj,
            splits,
        })
    }
}

/// A realized short exact sequence `0 -> N -> E -> M -> 0`.
#[derive(Clone, Debug)]
pub struct RepExtension {
    pub middle: Representation,
    pub inj: RepMorphism,
    pub proj: RepMorphism,
    pub splits: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a2() -> PathAlgebra {
        PathAlgebra::new(&Quiver::named("a2").unwrap(), 32003).unwrap()
    }

    #[test]
    fn a2_projectives() {
        let a = a2();
        assert_eq!(a.projective(0).unwrap().dims(), &[1, 0]);
        assert_eq!(a.projective(1).unwrap().dims(), &[1, 1]);
        assert_eq!(a.injective(0).unwrap().dims(), &[1, 1]);
        assert_eq!(a.injective(1).unwrap().dims(), &[0, 1]);
        let (p1, p2) = (a.projective(0).unwrap(), a.projective(1).unwrap());
        assert_eq!(a.hom_dim(&p1, &p2), 1);
        assert_eq!(a.hom_dim(&p2, &p1), 0);
        assert!(a.simple(5).is_err());
    }

    #[test]
    fn a2_decompose_rank_one() {
        let a = a2();
        let q = a.quiver().clone();
        let m = Representation::from_ints(&q, a.p(), &[2, 1], &[vec![vec![3], vec![5]]]).unwrap();
        let parts = a.decompose(&m, 0).unwrap();
        let mut dims: Vec<Vec<usize>> = parts.iter().map(|(x, _)| x.dims().to_vec()).collect();
        dims.sort();
        assert_eq!(dims, vec![vec![1, 0], vec![1, 1]]);
        let p1 = a.projective(0).unwrap();
        let parts = a.decompose(&a.direct_sum(&[&p1, &p1]), 0).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].1, 2);
        let s = a.direct_sum(&[&a.simple(0).unwrap(), &a.simple(1).unwrap()]);
        assert!(!a.is_iso(&a.projective(1).unwrap(), &s, 0).unwrap());
    }

    #[test]
    fn kronecker_self_extension() {
        let q = Quiver::named("kronecker").unwrap();
        let a = PathAlgebra::new(&q, 32003).unwrap();
        let n = Representation::from_ints(&q, a.p(), &[1, 1], &[vec![vec![1]], vec![vec![0]]]).unwrap();
        assert_eq!(a.ext1_dim(&n, &n), 1);
        let e = a.realize_extension(&n, &n, 0).unwrap();
        assert_eq!(e.middle.dims(), &[2, 2]);
        assert!(!e.splits);
        assert!(a.realize_extension(&n, &n, 1).is_err());
    }

    #[test]
    fn json_round_trip() {
        let q = Quiver::named("kronecker").unwrap();
        let r = Representation::from_ints(&q, 7, &[1, 2], &[vec![vec![1, 2]], vec![vec![0, 6]]]).unwrap();
        let text = serde_json::to_string(&r.to_json(&q)).unwrap();
        assert_eq!(Representation::from_json(&q, 7, &text).unwrap(), r);
        assert!(Representation::from_json(&q, 7, "{\"dims\":{\"1\":1},\"arrows\":{\"z\":[]}}").is_err());
    }

    fn small_rep(q: &Quiver, p: u32) -> impl Strategy<Value = Representation> {
        let q = q.clone();
        let n = q.num_vertices();
        proptest::collection::vec(0usize..=2, n).prop_flat_map(move |dims| {
            let q = q.clone();
            let sizes: Vec<usize> = q.arrows().iter().map(|a| dims[a.source] * dims[a.target]).collect();
            let total: usize = sizes.iter().sum();
            proptest::collection::vec(0..p, total).prop_map(move |entries| {
                let mut maps = Vec::new();
                let mut off = 0;
                for a in q.arrows() {
                    let (r, c) = (dims[a.target], dims[a.source]);
                    maps.push(Matrix::from_vec(p, r, c, entries[off..off + r * c].to_vec()));
                    off += r * c;
                }
                Representation::new(&q, p, dims.clone(), maps).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn euler_form_on_a3(m in small_rep(&Quiver::named("a3mid").unwrap(), 3),
                            n in small_rep(&Quiver::named("a3mid").unwrap(), 3)) {
            let a = PathAlgebra::new(&Quiver::named("a3mid").unwrap(), 3).unwrap();
            let lhs = a.hom_dim(&m, &n) as i64 - a.ext1_dim(&m, &n) as i64;
            prop_assert_eq!(lhs, a.quiver().euler_form(m.dims(), n.dims()));
        }

        #[test]
        fn presented_hom_matches_direct(m in small_rep(&Quiver::named("kronecker").unwrap(), 3),
                                        n in small_rep(&Quiver::named("kronecker").unwrap(), 3)) {
            let a = PathAlgebra::new(&Quiver::named("kronecker").unwrap(), 3).unwrap();
            let (mm, nn) = (a.to_module(&m), a.to_module(&n));
            let direct = module::hom_basis_direct(a.alg(), &mm, &nn);
            let presented = module::hom_basis_presented(a.alg(), &mm, &nn);
            prop_assert_eq!(direct.len(), presented.len());
            for f in &presented {
                prop_assert!(f.is_homomorphism(a.alg(), &mm, &nn));
            }
            if let Some(first) = direct.first() {
                let mut rr = crate::field::RowReducer::new(3, first.to_vec().len());
                for f in &direct {
                    rr.insert(f.to_vec());
                }
                for f in &presented {
                    prop_assert!(rr.contains(&f.to_vec()));
                }
            }
        }

        #[test]
        fn projective_and_injective_hom_identities(m in small_rep(&Quiver::named("kronecker").unwrap(), 5)) {
            let a = PathAlgebra::new(&Quiver::named("kronecker").unwrap(), 5).unwrap();
            for i in 0..2 {
                prop_assert_eq!(a.hom_dim(&a.projective(i).unwrap(), &m), m.dims()[i]);
                prop_assert_eq!(a.hom_dim(&m, &a.injective(i).unwrap()), m.dims()[i]);
            }
        }

        #[test]
        fn decomposition_is_additive(m in small_rep(&Quiver::named("a3").unwrap(), 3),
                                     n in small_rep(&Quiver::named("a3").unwrap(), 3)) {
            let a = PathAlgebra::new(&Quiver::named("a3").unwrap(), 3).unwrap();
            let count = |x: &Representation| -> usize {
                a.decompose(x, 0).unwrap().iter().map(|(_, k)| k).sum()
            };
            prop_assert_eq!(count(&a.direct_sum(&[&m, &n])), count(&m) + count(&n));
            let total: Vec<usize> = {
                let parts = a.decompose(&m, 0).unwrap();
                let mut t = vec![0; 3];
                for (x, k) in parts {
                    for v in 0..3 { t[v] += k * x.dims()[v]; }
                }
                t
            };
            prop_assert_eq!(total, m.dims().to_vec());
        }
    }
}
