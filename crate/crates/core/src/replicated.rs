//! The m-replicated algebra `A^(m)` of a path algebra `A = kQ`, layered
//! modules over it, and the strata `Σ_k` / `U_k`.
//!
//! Vertex `(i, k)` (vertex `i` of `Q` in layer `k`) has index `k * n + i`.
//! Basis: `(p, k)` for every path `p` and `0 <= k <= m`, and dual elements
//! `(p*, k)` for `1 <= k <= m`, where `(p*, k)` runs from `(t(p), k)` to
//! `(s(p), k-1)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, BasisElem, Sparse};
use crate::endo;
use crate::error::{Error, Result};
use crate::field::Matrix;
use crate::module::{self, Module};
use crate::quiver::{PathBasis, Quiver};
use crate::rep::{RepJson, Representation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    Path,
    Dual,
}

/// A layered module is a module over the replicated algebra; the layer
/// structure is read off the vertex indexing.
pub type LayeredModule = Module;

pub struct ReplicatedAlgebra {
    quiver: Quiver,
    paths: PathBasis,
    m: usize,
    alg: Arc<Algebra>,
    elems: Vec<(Kind, usize, usize)>,
    index: HashMap<(Kind, usize, usize), usize>,
}

impl std::fmt::Debug for ReplicatedAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ReplicatedAlgebra(m={}, dim={})", self.m, self.alg.dim())
    }
}

impl ReplicatedAlgebra {
    /// Build `A^(m)` for `m >= 1`; associativity is checked on all basis triples.
    pub fn new(q: &Quiver, m: usize, p: u32) -> Result<ReplicatedAlgebra> {
        if m == 0 {
            return Err(Error::input("the replication level m must be at least 1"));
        }
        Self::build(q, m, p)
    }

    fn build(q: &Quiver, m: usize, p: u32) -> Result<ReplicatedAlgebra> {
        crate::field::FieldSpec::new(p)?;
        let paths = PathBasis::new(q);
        let n = q.num_vertices();
        let mut elems = Vec::new();
        for k in 0..=m {
            for i in 0..paths.len() {
                elems.push((Kind::Path, i, k));
            }
        }
        for k in 1..=m {
            for i in 0..paths.len() {
                elems.push((Kind::Dual, i, k));
            }
        }
        let index: HashMap<_, _> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let basis: Vec<BasisElem> = elems
            .iter()
            .map(|&(kind, i, k)| {
                let path = paths.path(i);
                match kind {
                    Kind::Path => BasisElem {
                        source: k * n + path.source,
                        target: k * n + path.target,
                        idempotent: path.is_trivial(),
                        label: format!("{}@{}", paths.name(i), k),
                    },
                    Kind::Dual => BasisElem {
                        source: k * n + path.target,
                        target: (k - 1) * n + path.source,
                        idempotent: false,
                        label: format!("{}*@{}", paths.name(i), k),
                    },
                }
            })
            .collect();
        let labels = (0..=m)
            .flat_map(|k| q.vertices().iter().map(move |v| format!("({v},{k})")))
            .collect();
        let mult = |b: usize, c: usize| -> Sparse {
            let (kb, pb, lb) = elems[b];
            let (kc, pc, lc) = elems[c];
            let hit = |kind, path: Option<usize>, layer| {
                path.map(|x| vec![(index[&(kind, x, layer)], 1)]).unwrap_or_default()
            };
            match (kb, kc) {
                (Kind::Path, Kind::Path) if lb == lc => hit(Kind::Path, paths.compose(pb, pc), lb),
                // (p,k)(q*,k) = r* with q = r p
                (Kind::Path, Kind::Dual) if lb == lc => hit(Kind::Dual, paths.strip_suffix(pc, pb), lb),
                // (q*,k)(p,k-1) = r* with q = p r
                (Kind::Dual, Kind::Path) if lc + 1 == lb => hit(Kind::Dual, paths.strip_prefix(pb, pc), lb),
                _ => vec![],
            }
        };
        let alg = Algebra::new(p, labels, basis, mult)?;
        alg.check_associative()?;
        Ok(ReplicatedAlgebra {
            quiver: q.clone(),
            paths,
            m,
            alg: Arc::new(alg),
            elems,
            index,
        })
    }

    pub fn alg(&self) -> &Algebra {
        &self.alg
    }

    pub fn alg_arc(&self) -> Arc<Algebra> {
        self.alg.clone()
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn paths(&self) -> &PathBasis {
        &self.paths
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn p(&self) -> u32 {
        self.alg.p()
    }

    pub fn n(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn vertex(&self, i: usize, k: usize) -> usize {
        k * self.n() + i
    }

    /// `(i, k)` for a vertex index.
    pub fn vertex_layer(&self, v: usize) -> (usize, usize) {
        (v % self.n(), v / self.n())
    }

    pub fn element(&self, kind: Kind, path: usize, layer: usize) -> Option<usize> {
        self.index.get(&(kind, path, layer)).copied()
    }

    pub fn element_data(&self, b: usize) -> (Kind, usize, usize) {
        self.elems[b]
    }

    fn check_vertex(&self, i: usize, k: usize) -> Result<()> {
        if i >= self.n() || k > self.m {
            return Err(Error::input(format!(
                "vertex ({i},{k}) out of range for {} vertices and m = {}",
                self.n(),
                self.m
            )));
        }
        Ok(())
    }

    pub fn simple(&self, i: usize, k: usize) -> Result<Module> {
        self.check_vertex(i, k)?;
        Ok(Module::simple(&self.alg, self.vertex(i, k)))
    }

    /// Indecomposable projective at `(i, k)`; projective-injective for `k >= 1`.
    pub fn proj(&self, i: usize, k: usize) -> Result<Module> {
        self.check_vertex(i, k)?;
        Ok(Module::projective(&self.alg, self.vertex(i, k)))
    }

    /// Indecomposable injective at `(i, k)`.
    pub fn inj(&self, i: usize, k: usize) -> Result<Module> {
        self.check_vertex(i, k)?;
        Ok(Module::injective(&self.alg, self.vertex(i, k)))
    }

    /// All indecomposable projectives in vertex order.
    pub fn projectives(&self) -> Vec<Module> {
        (0..self.alg.num_vertices())
            .map(|v| Module::projective(&self.alg, v))
            .collect()
    }

    pub fn injectives(&self) -> Vec<Module> {
        (0..self.alg.num_vertices())
            .map(|v| Module::injective(&self.alg, v))
            .collect()
    }

    /// Dimension vectors per layer.
    pub fn layer_dims(&self, m: &Module) -> Vec<Vec<usize>> {
        let n = self.n();
        (0..=self.m)
            .map(|k| m.dims()[k * n..(k + 1) * n].to_vec())
            .collect()
    }

    /// Compact rendering such as `(0,1|1,0)`.
    pub fn format_dims(&self, m: &Module) -> String {
        format_layered(&self.layer_dims(m))
    }

    /// Highest layer carrying a nonzero component.
    pub fn max_layer(&self, m: &Module) -> Option<usize> {
        (0..=self.m).rev().find(|&k| self.layer_dims(m)[k].iter().any(|&d| d > 0))
    }

    pub fn min_layer(&self, m: &Module) -> Option<usize> {
        (0..=self.m).find(|&k| self.layer_dims(m)[k].iter().any(|&d| d > 0))
    }

    /// Supported in layer 0, i.e. an `A`-module.
    pub fn is_layer0(&self, m: &Module) -> bool {
        self.max_layer(m).is_none_or(|k| k == 0)
    }

    fn same_quiver(&self, other: &ReplicatedAlgebra) -> Result<()> {
        if self.quiver != other.quiver || self.p() != other.p() {
            return Err(Error::input("replicated algebras over different quivers or fields"));
        }
        Ok(())
    }

    /// View a module over `self` as a module over a larger window `target`.
    pub fn lift_to(&self, target: &ReplicatedAlgebra, m: &Module) -> Result<Module> {
        self.same_quiver(target)?;
        if target.m < self.m {
            return Err(Error::input("lift target window is smaller"));
        }
        let p = self.p();
        let mut dims = vec![0; target.alg.num_vertices()];
        dims[..m.dims().len()].copy_from_slice(m.dims());
        let acts = (0..target.dim())
            .map(|b| {
                let (kind, path, layer) = target.elems[b];
                let e = target.alg.elem(b);
                match self.element(kind, path, layer) {
                    Some(sb) => m.act(sb).clone(),
                    None if e.idempotent => Matrix::identity(p, dims[e.source]),
                    None => Matrix::zeros(p, dims[e.target], dims[e.source]),
                }
            })
            .collect();
        Module::from_acts(&target.alg, dims, acts)
    }

    /// Restrict a module over a larger window `source`, supported in layers
    /// `<= self.m`, to a module over `self`.
    pub fn restrict_from(&self, source: &ReplicatedAlgebra, m: &Module) -> Result<Module> {
        self.same_quiver(source)?;
        if source.max_layer(m).is_some_and(|k| k > self.m) {
            return Err(Error::input("module is not supported in the target window"));
        }
        let nv = self.alg.num_vertices();
        let dims = m.dims()[..nv].to_vec();
        let acts = (0..self.dim())
            .map(|b| {
                let (kind, path, layer) = self.elems[b];
                m.act(source.element(kind, path, layer).expect("window contains element")).clone()
            })
            .collect();
        Module::from_acts(&self.alg, dims, acts)
    }

    /// Projective dimension (iterated syzygies; finite for these algebras).
    pub fn pd(&self, m: &Module) -> Result<usize> {
        module::projective_dimension(&self.alg, m, 4 * self.m + 4)
            .ok_or_else(|| Error::anomaly("projective dimension exceeds 4m+4"))
    }

    pub fn global_dimension(&self) -> Result<usize> {
        let mut best = 0;
        for v in 0..self.alg.num_vertices() {
            best = best.max(self.pd(&Module::simple(&self.alg, v))?);
        }
        Ok(best)
    }

    /// `Σ_k`: `k` cosyzygies of the indecomposable projective `A`-modules,
    /// computed in the window `A^(K)`, `K = max(k+1, m)`.
    pub fn sigma_stratum(&self, k: usize) -> Result<SigmaStratum> {
        let window = ReplicatedAlgebra::build(&self.quiver, (k + 1).max(self.m), self.p())?;
        let members = window.sigma_members(k)?;
        Ok(SigmaStratum { k, window, members })
    }

    /// `Σ_k` computed inside this algebra, which must have `m >= k`: a
    /// cosyzygy is only taken of modules below the top layer, where the
    /// injective envelope agrees with the one over the right repetitive
    /// algebra.
    pub fn sigma_members(&self, k: usize) -> Result<Vec<Module>> {
        let mut members: Vec<Module> = (0..self.n())
            .map(|i| Module::projective(&self.alg, self.vertex(i, 0)))
            .collect();
        for step in 1..=k {
            let mut next = Vec::new();
            for x in &members {
                if self.max_layer(x).is_some_and(|l| l >= self.m) {
                    return Err(Error::anomaly(format!(
                        "Σ_{step} needs a window larger than m = {}",
                        self.m
                    )));
                }
                let c = module::cosyzygy(&self.alg, x);
                let parts = endo::decompose(&self.alg, &c, 0)?;
                if parts.len() != 1 {
                    return Err(Error::anomaly(format!(
                        "a cosyzygy in Σ_{step} decomposes into {} summands",
                        parts.len()
                    )));
                }
                next.push(c);
            }
            members = next;
        }
        for (i, x) in members.iter().enumerate() {
            if members[..i].iter().any(|y| endo::iso_indec(&self.alg, x, y).is_some()) {
                return Err(Error::anomaly(format!("Σ_{k} has isomorphic members")));
            }
        }
        Ok(members)
    }

    /// `U_k`: the members of `Σ_k` that are modules over `A^(m)`.
    pub fn u_stratum(&self, k: usize) -> Result<Vec<Module>> {
        let s = self.sigma_stratum(k)?;
        s.members
            .iter()
            .filter(|x| s.window.max_layer(x).is_none_or(|l| l <= self.m))
            .map(|x| self.restrict_from(&s.window, x))
            .collect()
    }

    /// Place an `A`-module in layer `k`.
    pub fn embed(&self, r: &Representation, k: usize) -> Result<Module> {
        if k > self.m || r.dims().len() != self.n() {
            return Err(Error::input("cannot embed representation in this layer"));
        }
        let n = self.n();
        let mut dims = vec![0; self.alg.num_vertices()];
        dims[k * n..(k + 1) * n].copy_from_slice(r.dims());
        let p = self.p();
        let acts = (0..self.dim())
            .map(|b| {
                let (kind, path, layer) = self.elems[b];
                let e = self.alg.elem(b);
                if kind == Kind::Path && layer == k {
                    r.path_action(&self.paths, path)
                } else {
                    Matrix::zeros(p, dims[e.target], dims[e.source])
                }
            })
            .collect();
        Module::from_acts(&self.alg, dims, acts)
    }

    /// The layer-`k` part of a module, as a representation of `Q`.
    pub fn layer(&self, m: &Module, k: usize) -> Representation {
        let n = self.n();
        let maps = (0..self.quiver.arrows().len())
            .map(|a| m.act(self.index[&(Kind::Path, self.arrow_path(a), k)]).clone())
            .collect();
        Representation::new(&self.quiver, self.p(), m.dims()[k * n..(k + 1) * n].to_vec(), maps)
            .expect("layer shapes match")
    }

    pub fn to_json(&self, m: &Module) -> LayeredJson {
        let n = self.n();
        let layers = (0..=self.m)
            .map(|k| {
                let mut dims = BTreeMap::new();
                for i in 0..n {
                    dims.insert(self.quiver.vertex_name(i).to_string(), m.dims()[k * n + i]);
                }
                let mut arrows = BTreeMap::new();
                for (ai, a) in self.quiver.arrows().iter().enumerate() {
                    let path = self.arrow_path(ai);
                    let b = self.index[&(Kind::Path, path, k)];
                    arrows.insert(a.name.clone(), m.act(b).to_signed_rows());
                }
                RepJson { dims, arrows }
            })
            .collect();
        let mut connecting = Vec::new();
        for k in 1..=self.m {
            for path in 0..self.paths.len() {
                let b = self.index[&(Kind::Dual, path, k)];
                if !m.act(b).is_zero() {
                    connecting.push(ConnJson {
                        k,
                        path: self.paths.name(path).to_string(),
                        matrix: m.act(b).to_signed_rows(),
                    });
                }
            }
        }
        LayeredJson {
            m: self.m,
            layers,
            connecting,
        }
    }

    fn arrow_path(&self, arrow: usize) -> usize {
        self.paths
            .paths()
            .iter()
            .position(|p| p.arrows == [arrow])
            .expect("every arrow is a path")
    }

    /// Parse a layered module; all relations are validated.
    pub fn from_json(&self, j: &LayeredJson) -> Result<Module> {
        if j.m != self.m || j.layers.len() != self.m + 1 {
            return Err(Error::input(format!(
                "layered module has m = {} with {} layers, expected m = {}",
                j.m,
                j.layers.len(),
                self.m
            )));
        }
        let p = self.p();
        let n = self.n();
        let reps: Vec<Representation> = j
            .layers
            .iter()
            .map(|l| Representation::from_json_value(&self.quiver, p, l))
            .collect::<Result<_>>()?;
        let mut dims = Vec::new();
        for r in &reps {
            dims.extend_from_slice(r.dims());
        }
        let mut dual: HashMap<(usize, usize), Matrix> = HashMap::new();
        for c in &j.connecting {
            if c.k == 0 || c.k > self.m {
                return Err(Error::input(format!("connecting matrix at invalid layer {}", c.k)));
            }
            let path = self.paths.by_name(&c.path)?;
            let pp = self.paths.path(path);
            let (rows, cols) = (dims[(c.k - 1) * n + pp.source], dims[c.k * n + pp.target]);
            let mat = Matrix::from_rows_shaped(p, rows, cols, &c.matrix)?;
            if dual.insert((c.k, path), mat).is_some() {
                return Err(Error::input(format!("duplicate connecting matrix ({}, {})", c.k, c.path)));
            }
        }
        let acts = (0..self.dim())
            .map(|b| {
                let (kind, path, k) = self.elems[b];
                let e = self.alg.elem(b);
                match kind {
                    Kind::Path => reps[k].path_action(&self.paths, path),
                    Kind::Dual => dual
                        .get(&(k, path))
                        .cloned()
                        .unwrap_or_else(|| Matrix::zeros(p, dims[e.target], dims[e.source])),
                }
            })
            .collect();
        Module::from_acts(&self.alg, dims, acts)
    }
}

pub fn format_layered(layers: &[Vec<usize>]) -> String {
    let parts: Vec<String> = layers
        .iter()
        .map(|l| l.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","))
        .collect();
    format!("({})", parts.join("|"))
}

/// A stratum `Σ_k` together with the window it was computed in.
pub struct SigmaStratum {
    pub k: usize,
    pub window: ReplicatedAlgebra,
    pub members: Vec<Module>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnJson {
    pub k: usize,
    pub path: String,
    pub matrix: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayeredJson {
    pub m: usize,
    pub layers: Vec<RepJson>,
    pub connecting: Vec<ConnJson>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2(m: usize) -> ReplicatedAlgebra {
        ReplicatedAlgebra::new(&Quiver::named("a2").unwrap(), m, 32003).unwrap()
    }

    #[test]
    fn dimension_formula() {
        assert_eq!(a2(1).dim(), 9);
        assert_eq!(a2(2).dim(), 15);
        assert!(ReplicatedAlgebra::new(&Quiver::named("a2").unwrap(), 0, 7).is_err());
    }

    #[test]
    fn a2_m1_generators_form_linear_a4() {
        let r = a2(1);
        // two layer arrows and the dual of the maximal path
        assert_eq!(r.alg().generators().len(), 3);
    }

    #[test]
    fn projective_shapes() {
        let r = a2(1);
        // vertex 1 is index 0, vertex 2 is index 1
        assert_eq!(r.format_dims(&r.proj(0, 1).unwrap()), "(1,1|1,0)");
        assert_eq!(r.format_dims(&r.inj(1, 1).unwrap()), "(0,0|0,1)");
        for i in 0..2 {
            let pi = r.proj(i, 1).unwrap();
            let ii = r.inj(i, 0).unwrap();
            assert!(crate::endo::iso_indec(r.alg(), &pi, &ii).is_some());
        }
    }

    #[test]
    fn json_round_trip() {
        let r = a2(1);
        let x = r.proj(0, 1).unwrap();
        let j = r.to_json(&x);
        let y = r.from_json(&j).unwrap();
        assert_eq!(x, y);
        let text = serde_json::to_string(&j).unwrap();
        let j2: LayeredJson = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&r.to_json(&r.from_json(&j2).unwrap())).unwrap(), text);
    }

    #[test]
    fn cosyzygy_of_simple_projective() {
        let r = a2(1);
        let s = r.proj(0, 0).unwrap();
        let c = module::cosyzygy(r.alg(), &s);
        assert_eq!(r.format_dims(&c), "(0,1|1,0)");
    }

    #[test]
    fn u1_for_a2() {
        let r = a2(1);
        let u1 = r.u_stratum(1).unwrap();
        let mut shapes: Vec<String> = u1.iter().map(|x| r.format_dims(x)).collect();
        shapes.sort();
        assert_eq!(shapes, vec!["(0,0|1,0)", "(0,1|1,0)"]);
    }

    #[test]
    fn global_dimensions() {
        // A_2^(m) is the linear Nakayama algebra on 2m+2 vertices with rad^3 = 0
        for m in 1..=4 {
            let n1 = 2 * m + 1;
            let expected = 2 * (n1 / 3) + usize::from(n1 % 3 != 0);
            assert_eq!(a2(m).global_dimension().unwrap(), expected);
        }
        let k = ReplicatedAlgebra::new(&Quiver::named("kronecker").unwrap(), 1, 32003).unwrap();
        assert_eq!(k.global_dimension().unwrap(), 3);
    }

    #[test]
    fn layer_embedding_round_trip() {
        let r = a2(2);
        let pa = crate::rep::PathAlgebra::new(r.quiver(), r.p()).unwrap();
        let x = pa.injective(0).unwrap();
        for k in 0..=2 {
            let e = r.embed(&x, k).unwrap();
            assert_eq!(r.layer(&e, k), x);
            assert_eq!(r.min_layer(&e), Some(k));
        }
    }
}
