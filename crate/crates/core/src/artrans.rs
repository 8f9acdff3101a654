//! Auslander-Reiten theory over a replicated algebra: the catalog of
//! indecomposables closed under `τ` and `τ⁻¹`, the AR quiver with its
//! meshes, `τ`-orbits, the predecessor preorder and stable Hom.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::{Arc, OnceLock};
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::endo::{self, Analysis, LocalData};
use crate::error::{Error, Result};
use crate::field::RowReducer;
use crate::module::{self, Module, Morphism};
use crate::replicated::ReplicatedAlgebra;

/// Limits for enumerations that may not terminate.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_entries: usize,
    pub max_time: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_entries: 10_000,
            max_time: Duration::from_secs(60),
        }
    }
}

impl Budget {
    pub fn entries(n: usize) -> Budget {
        Budget {
            max_entries: n,
            ..Budget::default()
        }
    }
}

/// Indecomposables up to isomorphism, with certified local endomorphism rings.
#[derive(Clone)]
pub struct Registry {
    alg: Arc<Algebra>,
    modules: Vec<Module>,
    local: Vec<LocalData>,
    by_dims: HashMap<Vec<usize>, Vec<usize>>,
    rng: ChaCha8Rng,
}

impl Registry {
    pub fn new(alg: Arc<Algebra>, seed: u64) -> Registry {
        Registry {
            alg,
            modules: Vec::new(),
            local: Vec::new(),
            by_dims: HashMap::new(),
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn alg(&self) -> &Algebra {
        &self.alg
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn module(&self, id: usize) -> &Module {
        &self.modules[id]
    }

    pub fn modules(&self) -> &[Module] {
        &self.modules
    }

    pub fn local(&self, id: usize) -> &LocalData {
        &self.local[id]
    }

    pub fn find(&self, x: &Module) -> Option<usize> {
        self.by_dims
            .get(x.dims())?
            .iter()
            .copied()
            .find(|&i| endo::iso_indec(&self.alg, x, &self.modules[i]).is_some())
    }

    /// Register an indecomposable; returns its id and whether it is new.
    /// Fails if `x` is zero or decomposable.
    pub fn insert(&mut self, x: Module) -> Result<(usize, bool)> {
        if let Some(i) = self.find(&x) {
            return Ok((i, false));
        }
        let local = match endo::analyze(&self.alg, &x, &mut self.rng)? {
            Analysis::Local(l) => l,
            Analysis::Zero => return Err(Error::anomaly("zero module offered as indecomposable")),
            Analysis::Split(..) => {
                return Err(Error::anomaly(format!(
                    "module of dimension {:?} expected indecomposable but splits",
                    x.dims()
                )))
            }
        };
        Ok((self.push(x, local), true))
    }

    fn push(&mut self, x: Module, local: LocalData) -> usize {
        let id = self.modules.len();
        self.by_dims.entry(x.dims().to_vec()).or_default().push(id);
        self.modules.push(x);
        self.local.push(local);
        id
    }

    /// Decompose `x` and register its summands; ids with repetition.
    pub fn insert_all(&mut self, x: &Module, seed: u64) -> Result<Vec<usize>> {
        let mut ids = Vec::new();
        for (y, local) in endo::decompose(&self.alg, x, seed)? {
            match self.find(&y) {
                Some(i) => ids.push(i),
                None => ids.push(self.push(y, local)),
            }
        }
        Ok(ids)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryFlags {
    pub projective: bool,
    pub injective: bool,
    pub layer0: bool,
}

impl EntryFlags {
    pub fn proj_inj(&self) -> bool {
        self.projective && self.injective
    }
}

/// A complete set of indecomposables over `A^(m)` (representation-finite case).
pub struct Catalog {
    rep: Arc<ReplicatedAlgebra>,
    reg: Registry,
    flags: Vec<EntryFlags>,
    labels: Vec<String>,
    tau: Vec<Option<usize>>,
    tau_inv: Vec<Option<usize>>,
    homs: OnceLock<Vec<Vec<Vec<Morphism>>>>,
    reach: OnceLock<Vec<Vec<bool>>>,
}

impl std::fmt::Debug for Catalog {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Catalog({} modules)", self.len())
    }
}

/// Serialized catalog: modules in id order and the `τ` tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogData {
    pub m: usize,
    pub p: u32,
    pub modules: Vec<Module>,
    pub tau: Vec<Option<usize>>,
    pub tau_inv: Vec<Option<usize>>,
}

impl Catalog {
    /// Closure of all indecomposable projectives and injectives under `τ`
    /// and `τ⁻¹`, in breadth-first discovery order.
    pub fn build(rep: Arc<ReplicatedAlgebra>, budget: Budget) -> Result<Catalog> {
        let start = Instant::now();
        let alg = rep.alg_arc();
        let mut reg = Registry::new(alg.clone(), 0);
        let mut queue = VecDeque::new();
        for x in rep.projectives().into_iter().chain(rep.injectives()) {
            let (id, new) = reg.insert(x)?;
            if new {
                queue.push_back(id);
            }
        }
        let mut tau = HashMap::new();
        let mut tau_inv = HashMap::new();
        while let Some(id) = queue.pop_front() {
            if reg.len() > budget.max_entries || start.elapsed() > budget.max_time {
                return Err(Error::Budget(format!(
                    "not representation-finite within budget ({} modules after {:.1?})",
                    reg.len(),
                    start.elapsed()
                )));
            }
            let x = reg.module(id).clone();
            for (forward, table) in [(true, &mut tau), (false, &mut tau_inv)] {
                let y = if forward {
                    module::tau(&alg, &x)
                } else {
                    module::tau_inverse(&alg, &x)
                };
                if y.is_zero() {
                    continue;
                }
                let (j, new) = reg.insert(y)?;
                table.insert(id, j);
                if new {
                    queue.push_back(j);
                }
            }
        }
        let n = reg.len();
        let tau = (0..n).map(|i| tau.get(&i).copied()).collect();
        let tau_inv = (0..n).map(|i| tau_inv.get(&i).copied()).collect();
        Ok(Catalog::assemble(rep, reg, tau, tau_inv))
    }

    fn assemble(
        rep: Arc<ReplicatedAlgebra>,
        reg: Registry,
        tau: Vec<Option<usize>>,
        tau_inv: Vec<Option<usize>>,
    ) -> Catalog {
        let alg = rep.alg();
        let flags: Vec<EntryFlags> = reg
            .modules()
            .iter()
            .map(|x| EntryFlags {
                projective: module::is_projective(alg, x),
                injective: module::is_injective(alg, x),
                layer0: rep.is_layer0(x),
            })
            .collect();
        let mut seen: HashMap<String, usize> = HashMap::new();
        let labels = reg
            .modules()
            .iter()
            .map(|x| {
                let base = rep.format_dims(x);
                let k = seen.entry(base.clone()).or_insert(0);
                *k += 1;
                if *k == 1 {
                    base
                } else {
                    format!("{base}#{k}")
                }
            })
            .collect();
        Catalog {
            rep,
            reg,
            flags,
            labels,
            tau,
            tau_inv,
            homs: OnceLock::new(),
            reach: OnceLock::new(),
        }
    }

    pub fn to_data(&self) -> CatalogData {
        CatalogData {
            m: self.rep.m(),
            p: self.rep.p(),
            modules: self.reg.modules().to_vec(),
            tau: self.tau.clone(),
            tau_inv: self.tau_inv.clone(),
        }
    }

    /// Rebuild from serialized data; modules are revalidated and their
    /// endomorphism rings recertified.
    pub fn from_data(rep: Arc<ReplicatedAlgebra>, data: CatalogData) -> Result<Catalog> {
        let n = data.modules.len();
        if data.m != rep.m() || data.p != rep.p() || data.tau.len() != n || data.tau_inv.len() != n {
            return Err(Error::input("catalog data does not match the algebra"));
        }
        if data.tau.iter().chain(&data.tau_inv).flatten().any(|&j| j >= n) {
            return Err(Error::input("catalog τ table points outside the catalog"));
        }
        let mut reg = Registry::new(rep.alg_arc(), 0);
        for x in data.modules {
            x.validate(rep.alg())?;
            let (_, new) = reg.insert(x)?;
            if !new {
                return Err(Error::input("catalog data has isomorphic entries"));
            }
        }
        Ok(Catalog::assemble(rep, reg, data.tau, data.tau_inv))
    }

    pub fn rep(&self) -> &ReplicatedAlgebra {
        &self.rep
    }

    pub fn rep_arc(&self) -> Arc<ReplicatedAlgebra> {
        self.rep.clone()
    }

    pub fn alg(&self) -> &Algebra {
        self.rep.alg()
    }

    pub fn registry(&self) -> &Registry {
        &self.reg
    }

    pub fn len(&self) -> usize {
        self.reg.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reg.is_empty()
    }

    pub fn module(&self, id: usize) -> &Module {
        self.reg.module(id)
    }

    pub fn flags(&self, id: usize) -> &EntryFlags {
        &self.flags[id]
    }

    pub fn label(&self, id: usize) -> &str {
        &self.labels[id]
    }

    pub fn tau(&self, id: usize) -> Option<usize> {
        self.tau[id]
    }

    pub fn tau_inv(&self, id: usize) -> Option<usize> {
        self.tau_inv[id]
    }

    pub fn find(&self, x: &Module) -> Option<usize> {
        self.reg.find(x)
    }

    pub fn id_of_label(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::input(format!("no catalog module labelled `{label}`")))
    }

    /// Decompose a module into catalog ids (with repetition).
    pub fn ids_of(&self, x: &Module, seed: u64) -> Result<Vec<usize>> {
        endo::decompose(self.alg(), x, seed)?
            .into_iter()
            .map(|(y, _)| {
                self.find(&y).ok_or_else(|| {
                    Error::anomaly(format!(
                        "indecomposable {} missing from the catalog",
                        self.rep.format_dims(&y)
                    ))
                })
            })
            .collect()
    }

    pub fn ids(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn projective_ids(&self) -> Vec<usize> {
        self.ids().filter(|&i| self.flags[i].projective).collect()
    }

    pub fn injective_ids(&self) -> Vec<usize> {
        self.ids().filter(|&i| self.flags[i].injective).collect()
    }

    pub fn proj_inj_ids(&self) -> Vec<usize> {
        self.ids().filter(|&i| self.flags[i].proj_inj()).collect()
    }

    /// `τ^k X`, or `None` once it vanishes.
    pub fn tau_pow(&self, id: usize, k: usize) -> Option<usize> {
        (0..k).try_fold(id, |x, _| self.tau[x])
    }

    /// Bases of `Hom(X_i, X_j)` for all pairs, computed once.
    pub fn homs(&self) -> &Vec<Vec<Vec<Morphism>>> {
        self.homs.get_or_init(|| {
            let alg = self.alg();
            self.ids()
                .map(|i| {
                    self.ids()
                        .map(|j| module::hom_basis(alg, self.module(i), self.module(j)))
                        .collect()
                })
                .collect()
        })
    }

    pub fn hom(&self, i: usize, j: usize) -> &[Morphism] {
        &self.homs()[i][j]
    }

    /// Basis of `rad(X_i, X_j)`.
    pub fn rad(&self, i: usize, j: usize) -> Vec<Morphism> {
        if i == j {
            self.reg.local(i).rad_basis.clone()
        } else {
            self.hom(i, j).to_vec()
        }
    }

    /// `reach[i][j]` iff `X_i <= X_j` (a chain of nonzero maps).
    pub fn reach(&self) -> &Vec<Vec<bool>> {
        self.reach.get_or_init(|| {
            let n = self.len();
            let mut r: Vec<Vec<bool>> = (0..n)
                .map(|i| (0..n).map(|j| i == j || !self.hom(i, j).is_empty()).collect())
                .collect();
            for k in 0..n {
                for i in 0..n {
                    if r[i][k] {
                        for j in 0..n {
                            if r[k][j] {
                                r[i][j] = true;
                            }
                        }
                    }
                }
            }
            r
        })
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.reach()[i][j]
    }

    /// The set relation `S1 <= S2` (strict: `S1 < S2`).
    pub fn set_leq(&self, s1: &[usize], s2: &[usize], strict: bool) -> bool {
        set_leq_with(|a, b| self.leq(a, b), s1, s2, strict)
    }

    /// `dim Hom(X_i, X_j)` minus the maps factoring through projective-injectives.
    pub fn stable_hom_dim(&self, i: usize, j: usize) -> usize {
        let pis = self.proj_inj_ids();
        stable_hom_dim_with(
            self.hom(i, j),
            pis.iter().map(|&q| (self.hom(i, q), self.hom(q, j))),
        )
    }
}

/// The four-clause set relation for an arbitrary preorder.
pub fn set_leq_with(leq: impl Fn(usize, usize) -> bool, s1: &[usize], s2: &[usize], strict: bool) -> bool {
    let every_s2_has_pred = s2.iter().all(|&y| s1.iter().any(|&x| leq(x, y)));
    let every_s1_has_succ = s1.iter().all(|&x| s2.iter().any(|&y| leq(x, y)));
    let no_s2_succ_in_s1 = !s2.iter().any(|&y| s1.iter().any(|&x| leq(y, x)));
    let no_s1_pred_in_s2 = !s1.iter().any(|&x| s2.iter().any(|&y| leq(y, x)));
    let disjoint = !s1.iter().any(|x| s2.contains(x));
    every_s2_has_pred && every_s1_has_succ && no_s2_succ_in_s1 && no_s1_pred_in_s2 && (!strict || disjoint)
}

/// `dim Hom(M, N)` minus the dimension of the span of all `g ∘ f` with
/// `f: M -> P`, `g: P -> N` over the given projective-injectives `P`.
pub fn stable_hom_dim_with<'a>(
    hom_mn: &[Morphism],
    through: impl Iterator<Item = (&'a [Morphism], &'a [Morphism])>,
) -> usize {
    let Some(first) = hom_mn.first() else {
        return 0;
    };
    let len = first.to_vec().len();
    let mut rr = RowReducer::new(first.maps.first().map_or(2, |m| m.p()), len.max(1));
    for (fs, gs) in through {
        for f in fs {
            for g in gs {
                rr.insert(g.after(f).to_vec());
            }
        }
    }
    hom_mn.len() - rr.rank()
}

/// The AR quiver of a complete catalog.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArQuiver {
    /// `(from, to, dim rad/rad²)` for every irreducible pair.
    pub arrows: Vec<(usize, usize, usize)>,
    /// For each non-projective `Z`: `(Z, τZ, middle term multiset)`.
    pub meshes: Vec<Mesh>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mesh {
    pub end: usize,
    pub start: usize,
    pub middle: Vec<(usize, usize)>,
}

impl ArQuiver {
    pub fn build(cat: &Catalog) -> ArQuiver {
        let n = cat.len();
        let mut arrows = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let rad = cat.rad(i, j);
                if rad.is_empty() {
                    continue;
                }
                let len = rad[0].to_vec().len();
                let mut rr = RowReducer::new(cat.alg().p(), len);
                for z in 0..n {
                    let (a, b) = (cat.rad(i, z), cat.rad(z, j));
                    if a.is_empty() || b.is_empty() {
                        continue;
                    }
                    for f in &a {
                        for g in &b {
                            rr.insert(g.after(f).to_vec());
                        }
                    }
                }
                let mult = rad.len() - rr.rank();
                if mult > 0 {
                    arrows.push((i, j, mult));
                }
            }
        }
        let meshes = (0..n)
            .filter_map(|z| {
                let t = cat.tau(z)?;
                let middle = arrows
                    .iter()
                    .filter(|a| a.1 == z)
                    .map(|&(y, _, k)| (y, k))
                    .collect();
                Some(Mesh {
                    end: z,
                    start: t,
                    middle,
                })
            })
            .collect();
        ArQuiver { arrows, meshes }
    }

    pub fn multiplicity(&self, from: usize, to: usize) -> usize {
        self.arrows
            .iter()
            .find(|a| a.0 == from && a.1 == to)
            .map_or(0, |a| a.2)
    }

    /// Nodes where the mesh dimension identity fails: first at each
    /// non-projective `Z` (arrows into `Z`), then dually at each
    /// non-injective `X` (arrows out of `X`).
    pub fn mesh_violations(&self, cat: &Catalog) -> Vec<usize> {
        let nv = cat.alg().num_vertices();
        let dims = |i: usize| cat.module(i).dims().to_vec();
        let mut bad = Vec::new();
        for mesh in &self.meshes {
            let mut lhs = dims(mesh.start);
            for (v, d) in dims(mesh.end).iter().enumerate() {
                lhs[v] += d;
            }
            let mut rhs = vec![0; nv];
            for &(y, k) in &mesh.middle {
                for (v, d) in dims(y).iter().enumerate() {
                    rhs[v] += k * d;
                }
            }
            if lhs != rhs {
                bad.push(mesh.end);
            }
        }
        for x in cat.ids() {
            let Some(t) = cat.tau_inv(x) else { continue };
            let mut lhs = dims(x);
            for (v, d) in dims(t).iter().enumerate() {
                lhs[v] += d;
            }
            let mut rhs = vec![0; nv];
            for &(a, y, k) in &self.arrows {
                if a == x {
                    for (v, d) in dims(y).iter().enumerate() {
                        rhs[v] += k * d;
                    }
                }
            }
            if lhs != rhs && !bad.contains(&x) {
                bad.push(x);
            }
        }
        bad
    }

    /// Graphviz rendering; `τ` drawn as dashed back-edges.
    pub fn to_dot(&self, cat: &Catalog) -> String {
        let mut s = String::from("digraph ar {\n  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n");
        for i in cat.ids() {
            let f = cat.flags(i);
            let style = if f.proj_inj() {
                ", style=bold"
            } else if f.projective || f.injective {
                ", style=rounded"
            } else {
                ""
            };
            s.push_str(&format!("  n{i} [label=\"{i}: {}\"{style}];\n", cat.label(i)));
        }
        for &(a, b, k) in &self.arrows {
            if k == 1 {
                s.push_str(&format!("  n{a} -> n{b};\n"));
            } else {
                s.push_str(&format!("  n{a} -> n{b} [label=\"{k}\"];\n"));
            }
        }
        for mesh in &self.meshes {
            s.push_str(&format!(
                "  n{} -> n{} [style=dashed, constraint=false];\n",
                mesh.end, mesh.start
            ));
        }
        s.push_str("}\n");
        s
    }
}

/// The `τ`-orbits of a catalog, each listed from its `τ`-most member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitTable {
    pub orbits: Vec<Vec<usize>>,
}

impl OrbitTable {
    pub fn build(cat: &Catalog) -> OrbitTable {
        let n = cat.len();
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            // walk to the τ-end (guarding against periodic orbits)
            let mut first = start;
            let mut steps = 0;
            while let Some(t) = cat.tau(first) {
                if t == start || steps > n {
                    break;
                }
                first = t;
                steps += 1;
            }
            let mut orbit = vec![first];
            seen[first] = true;
            let mut cur = first;
            while let Some(t) = cat.tau_inv(cur) {
                if seen[t] {
                    break;
                }
                seen[t] = true;
                orbit.push(t);
                cur = t;
            }
            orbits.push(orbit);
        }
        OrbitTable { orbits }
    }

    pub fn cardinalities(&self) -> Vec<usize> {
        let mut c: Vec<usize> = self.orbits.iter().map(|o| o.len()).collect();
        c.sort_by(|a, b| b.cmp(a));
        c
    }

    pub fn max_cardinality(&self) -> usize {
        self.orbits.iter().map(|o| o.len()).max().unwrap_or(0)
    }

    pub fn to_json(&self, cat: &Catalog) -> serde_json::Value {
        let orbits: Vec<BTreeMap<&str, serde_json::Value>> = self
            .orbits
            .iter()
            .map(|o| {
                let mut e = BTreeMap::new();
                e.insert("cardinality", serde_json::json!(o.len()));
                e.insert("ids", serde_json::json!(o));
                e.insert(
                    "labels",
                    serde_json::json!(o.iter().map(|&i| cat.label(i)).collect::<Vec<_>>()),
                );
                e
            })
            .collect();
        serde_json::json!({
            "catalog_size": cat.len(),
            "max_cardinality": self.max_cardinality(),
            "orbits": orbits,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn a2_catalog() -> Catalog {
        let rep = ReplicatedAlgebra::new(&Quiver::named("a2").unwrap(), 1, 32003).unwrap();
        Catalog::build(Arc::new(rep), Budget::default()).unwrap()
    }

    #[test]
    fn a2_m1_catalog_and_orbits() {
        let cat = a2_catalog();
        assert_eq!(cat.len(), 9);
        let orbits = OrbitTable::build(&cat);
        assert_eq!(orbits.cardinalities(), vec![4, 3, 1, 1]);
        for pi in cat.proj_inj_ids() {
            assert!(orbits.orbits.contains(&vec![pi]));
        }
        let ar = ArQuiver::build(&cat);
        assert!(ar.mesh_violations(&cat).is_empty());
        for x in cat.ids() {
            if let Some(t) = cat.tau(x) {
                assert_eq!(cat.tau_inv(t), Some(x));
            }
        }
    }

    #[test]
    fn a2_m1_predecessors() {
        let cat = a2_catalog();
        let rep = cat.rep_arc();
        let p10 = cat.find(&rep.proj(0, 0).unwrap()).unwrap();
        let i11 = cat.find(&rep.inj(0, 1).unwrap()).unwrap();
        assert!(cat.leq(p10, i11));
        assert!(!cat.leq(i11, p10));
        assert!(cat.leq(p10, p10));
        assert!(cat.set_leq(&[p10], &[i11], true));
        assert!(!cat.set_leq(&[i11], &[p10], true));
        for pi in cat.proj_inj_ids() {
            for x in cat.ids() {
                assert_eq!(cat.stable_hom_dim(pi, x), 0);
                assert_eq!(cat.stable_hom_dim(x, pi), 0);
            }
        }
        for x in cat.ids().filter(|&x| !cat.flags(x).proj_inj()) {
            assert!(cat.stable_hom_dim(x, x) >= 1);
        }
    }

    #[test]
    fn kronecker_exceeds_budget() {
        let rep = ReplicatedAlgebra::new(&Quiver::named("kronecker").unwrap(), 1, 32003).unwrap();
        match Catalog::build(Arc::new(rep), Budget::entries(60)) {
            Err(Error::Budget(_)) => {}
            other => panic!("{:?}", other.map(|c| c.len())),
        }
    }

    #[test]
    fn catalog_data_round_trip() {
        let cat = a2_catalog();
        let data = cat.to_data();
        let text = serde_json::to_string(&data).unwrap();
        let back: CatalogData = serde_json::from_str(&text).unwrap();
        let cat2 = Catalog::from_data(cat.rep_arc(), back).unwrap();
        assert_eq!(cat2.to_data(), data);
        assert_eq!(cat2.label(3), cat.label(3));
    }
}
