//! Generator-cogenerators over replicated algebras: minimal right
//! approximations, relative syzygies `Ω_M`, M-dimension and the global
//! dimension of `End(M)`.
//!
//! Everything works on a [`Workspace`], a registry of indecomposables with a
//! lazily filled table of Hom bases. A workspace built from a complete
//! catalog is *closed*: meeting an unregistered indecomposable there is an
//! anomaly, and exact global dimensions are available.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::artrans::{Catalog, OrbitTable, Registry};
use crate::error::{Error, Result};
use crate::field::{Matrix, RowReducer};
use crate::module::{self, Module, Morphism};
use crate::replicated::ReplicatedAlgebra;

/// Registered indecomposables of one replicated algebra plus cached Hom spaces.
pub struct Workspace {
    rep: Arc<ReplicatedAlgebra>,
    reg: Registry,
    homs: HashMap<(usize, usize), Vec<Morphism>>,
    kinds: Vec<Option<(bool, bool)>>,
    omega: HashMap<Vec<usize>, HashMap<usize, Vec<usize>>>,
    closed: bool,
    seed: u64,
}

impl Workspace {
    /// An open workspace; indecomposables are registered as they appear.
    pub fn new(rep: Arc<ReplicatedAlgebra>, seed: u64) -> Workspace {
        let reg = Registry::new(rep.alg_arc(), seed);
        Workspace {
            rep,
            reg,
            homs: HashMap::new(),
            kinds: Vec::new(),
            omega: HashMap::new(),
            closed: false,
            seed,
        }
    }

    /// A closed workspace sharing the catalog's ids.
    pub fn from_catalog(cat: &Catalog) -> Workspace {
        let mut homs = HashMap::new();
        for i in cat.ids() {
            for j in cat.ids() {
                homs.insert((i, j), cat.hom(i, j).to_vec());
            }
        }
        let kinds = cat
            .ids()
            .map(|i| Some((cat.flags(i).projective, cat.flags(i).injective)))
            .collect();
        Workspace {
            rep: cat.rep_arc(),
            reg: cat.registry().clone(),
            homs,
            kinds,
            omega: HashMap::new(),
            closed: true,
            seed: 0,
        }
    }

    pub fn rep(&self) -> &ReplicatedAlgebra {
        &self.rep
    }

    pub fn rep_arc(&self) -> Arc<ReplicatedAlgebra> {
        self.rep.clone()
    }

    pub fn alg(&self) -> &crate::algebra::Algebra {
        self.rep.alg()
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn len(&self) -> usize {
        self.reg.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reg.is_empty()
    }

    pub fn registry(&self) -> &Registry {
        &self.reg
    }

    pub fn module(&self, id: usize) -> &Module {
        self.reg.module(id)
    }

    pub fn label(&self, id: usize) -> String {
        self.rep.format_dims(self.reg.module(id))
    }

    pub fn find(&self, x: &Module) -> Option<usize> {
        self.reg.find(x)
    }

    /// Register an indecomposable module.
    pub fn register(&mut self, x: Module) -> Result<usize> {
        let (id, new) = self.reg.insert(x)?;
        if new {
            self.on_new(id)?;
        }
        Ok(id)
    }

    /// Decompose and register; ids with repetition, sorted.
    pub fn register_all(&mut self, x: &Module) -> Result<Vec<usize>> {
        let before = self.reg.len();
        let mut ids = self.reg.insert_all(x, self.seed)?;
        for id in before..self.reg.len() {
            self.on_new(id)?;
        }
        ids.sort_unstable();
        Ok(ids)
    }

    fn on_new(&mut self, id: usize) -> Result<()> {
        if self.closed {
            return Err(Error::anomaly(format!(
                "indecomposable {} is missing from a complete catalog",
                self.label(id)
            )));
        }
        Ok(())
    }

    /// Basis of `Hom(X_i, X_j)`.
    pub fn hom(&mut self, i: usize, j: usize) -> &[Morphism] {
        let reg = &self.reg;
        self.homs
            .entry((i, j))
            .or_insert_with(|| module::hom_basis(reg.alg(), reg.module(i), reg.module(j)))
    }

    /// Basis of `rad(X_i, X_j)`.
    pub fn rad(&mut self, i: usize, j: usize) -> Vec<Morphism> {
        if i == j {
            self.reg.local(i).rad_basis.clone()
        } else {
            self.hom(i, j).to_vec()
        }
    }

    fn kind(&mut self, id: usize) -> (bool, bool) {
        if self.kinds.len() <= id {
            self.kinds.resize(id + 1, None);
        }
        if let Some(k) = self.kinds[id] {
            return k;
        }
        let x = self.reg.module(id);
        let k = (module::is_projective(self.alg(), x), module::is_injective(self.alg(), x));
        self.kinds[id] = Some(k);
        k
    }

    pub fn is_projective(&mut self, id: usize) -> bool {
        self.kind(id).0
    }

    pub fn is_injective(&mut self, id: usize) -> bool {
        self.kind(id).1
    }

    pub fn is_proj_inj(&mut self, id: usize) -> bool {
        let (p, i) = self.kind(id);
        p && i
    }

    /// Whether the module lives in layer 0, i.e. is an `A`-module.
    pub fn is_layer0(&self, id: usize) -> bool {
        self.rep.is_layer0(self.reg.module(id))
    }

    /// `τ X_id`, registered; `None` when `X_id` is projective.
    pub fn tau(&mut self, id: usize) -> Result<Option<usize>> {
        let t = module::tau(self.alg(), self.reg.module(id));
        if t.is_zero() {
            return Ok(None);
        }
        self.register(t).map(Some)
    }

    /// The standard summands of a basic generator-cogenerator.
    pub fn basic_parts(&mut self) -> Result<BasicParts> {
        let (n, m) = (self.rep.n(), self.rep.m());
        let mut a = Vec::new();
        let mut da = Vec::new();
        let mut p = Vec::new();
        for i in 0..n {
            let x = self.rep.proj(i, 0)?;
            a.push(self.register(x)?);
            let y = self.rep.inj(i, m)?;
            da.push(self.register(y)?);
            for k in 1..=m {
                let z = self.rep.proj(i, k)?;
                p.push(self.register(z)?);
            }
        }
        Ok(BasicParts { a, da, p })
    }

    /// Ids of all indecomposable projectives and injectives.
    pub fn projective_and_injective_ids(&mut self) -> Result<(Vec<usize>, Vec<usize>)> {
        let projs = self.rep.projectives();
        let injs = self.rep.injectives();
        let mut p = Vec::new();
        for x in projs {
            p.push(self.register(x)?);
        }
        let mut q = Vec::new();
        for x in injs {
            q.push(self.register(x)?);
        }
        Ok((p, q))
    }
}

/// `A` (layer-0 projectives), `DA_m` (top-layer injectives) and `P`
/// (projective-injectives), as workspace ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicParts {
    pub a: Vec<usize>,
    pub da: Vec<usize>,
    pub p: Vec<usize>,
}

impl BasicParts {
    pub fn all(&self) -> Vec<usize> {
        self.a.iter().chain(&self.da).chain(&self.p).copied().collect()
    }
}

/// A basic module given by its indecomposable summands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenCog {
    summands: Vec<usize>,
    pub contains_projectives: bool,
    pub contains_injectives: bool,
}

impl GenCog {
    pub fn new(ws: &mut Workspace, ids: impl IntoIterator<Item = usize>) -> Result<GenCog> {
        let set: BTreeSet<usize> = ids.into_iter().collect();
        let summands: Vec<usize> = set.into_iter().collect();
        let (projs, injs) = ws.projective_and_injective_ids()?;
        let has = |x: &usize| summands.binary_search(x).is_ok();
        Ok(GenCog {
            contains_projectives: projs.iter().all(has),
            contains_injectives: injs.iter().all(has),
            summands,
        })
    }

    pub fn summands(&self) -> &[usize] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn contains(&self, id: usize) -> bool {
        self.summands.binary_search(&id).is_ok()
    }

    pub fn is_gencog(&self) -> bool {
        self.contains_projectives && self.contains_injectives
    }

    pub fn require(&self) -> Result<()> {
        if self.is_gencog() {
            Ok(())
        } else {
            Err(Error::contract(format!(
                "not a generator-cogenerator (projectives: {}, injectives: {})",
                self.contains_projectives, self.contains_injectives
            )))
        }
    }
}

/// A minimal right add-M approximation `f: M' -> X` and its kernel.
#[derive(Clone, Debug)]
pub struct ApproxResult {
    pub target: usize,
    /// `(summand id, multiplicity)` for summands occurring in `M'`.
    pub multiplicities: Vec<(usize, usize)>,
    /// The summand id of each component of `M'`, in order.
    pub parts: Vec<usize>,
    pub source: Module,
    pub map: Morphism,
    pub kernel: Module,
    /// Indecomposable summands of the kernel, with repetition.
    pub kernel_ids: Vec<usize>,
    pub surjective: bool,
}

/// Outcome of checking the two defining properties of an approximation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproxCheck {
    pub approximation: bool,
    pub minimal: bool,
}

impl Workspace {
    /// Minimal right add-M approximation of `X_x`, built from the top of the
    /// functor `Hom(-, X)` restricted to add M.
    pub fn approximate(&mut self, m: &GenCog, x: usize) -> Result<ApproxResult> {
        let p = self.alg().p();
        let mut parts = Vec::new();
        let mut comps = Vec::new();
        let mut multiplicities = Vec::new();
        for &s in m.summands() {
            let h = self.hom(s, x).to_vec();
            if h.is_empty() {
                continue;
            }
            let len = h[0].to_vec().len();
            let mut rr = RowReducer::new(p, len);
            for &t in m.summands() {
                let gs = self.hom(t, x).to_vec();
                if gs.is_empty() {
                    continue;
                }
                for r in self.rad(s, t) {
                    for g in &gs {
                        rr.insert(g.after(&r).to_vec());
                    }
                }
            }
            let radical = rr.rank();
            let local = self.reg.local(s).clone();
            let mut picks = 0;
            for f in &h {
                if rr.contains(&f.to_vec()) {
                    continue;
                }
                for e in &local.end_basis {
                    rr.insert(f.after(e).to_vec());
                }
                parts.push(s);
                comps.push(f.clone());
                picks += 1;
            }
            if picks * local.residue_degree != h.len() - radical {
                return Err(Error::anomaly(format!(
                    "top of Hom({}, {}) is not free over the residue field",
                    self.label(s),
                    self.label(x)
                )));
            }
            if picks > 0 {
                multiplicities.push((s, picks));
            }
        }
        let alg = self.rep.alg_arc();
        let xm = self.reg.module(x).clone();
        let (source, map) = if parts.is_empty() {
            let z = Module::zero(&alg);
            let f = Morphism::zero(&alg, &z, &xm);
            (z, f)
        } else {
            let mods: Vec<&Module> = parts.iter().map(|&s| self.reg.module(s)).collect();
            (Module::direct_sum(&alg, &mods), module::from_sum(&alg, &comps))
        };
        let surjective = map.maps.iter().all(|f| f.rank() == f.rows());
        let (kernel, _) = module::kernel(&alg, &source, &map);
        let kernel_ids = self.register_all(&kernel)?;
        Ok(ApproxResult {
            target: x,
            multiplicities,
            parts,
            source,
            map,
            kernel,
            kernel_ids,
            surjective,
        })
    }

    /// Check the approximation property and right minimality directly.
    pub fn check_approximation(&mut self, m: &GenCog, a: &ApproxResult) -> Result<ApproxCheck> {
        let alg = self.rep.alg_arc();
        let p = alg.p();
        let mut approximation = true;
        for &s in m.summands() {
            let target = self.hom(s, a.target).len();
            if target == 0 {
                continue;
            }
            let gs = module::hom_basis(&alg, self.reg.module(s), &a.source);
            let len = self.hom(s, a.target)[0].to_vec().len();
            let mut rr = RowReducer::new(p, len);
            for g in &gs {
                rr.insert(a.map.after(g).to_vec());
            }
            if rr.rank() != target {
                approximation = false;
            }
        }
        let minimal = if a.parts.is_empty() {
            true
        } else {
            let end = module::hom_basis(&alg, &a.source, &a.source);
            let xm = self.reg.module(a.target);
            let rows = xm.dims().iter().zip(a.source.dims()).map(|(r, c)| r * c).sum::<usize>();
            let cols: Vec<Vec<u32>> = end.iter().map(|h| a.map.after(h).to_vec()).collect();
            let killed = Matrix::from_columns(p, rows, &cols).kernel_basis();
            let mods: Vec<&Module> = a.parts.iter().map(|&s| self.reg.module(s)).collect();
            let (incl, proj) = module::sum_injections(&alg, &mods);
            killed.iter().all(|c| {
                let h = Morphism::combine(&alg, &a.source, &a.source, &end, c);
                (0..a.parts.len()).all(|i| {
                    (0..a.parts.len()).all(|j| {
                        a.parts[i] != a.parts[j]
                            || self.reg.local(a.parts[i]).in_radical(&proj[j].after(&h).after(&incl[i]))
                    })
                })
            })
        };
        Ok(ApproxCheck {
            approximation,
            minimal,
        })
    }

    /// `Ω_M(X_x)` as summand ids with repetition.
    pub fn omega(&mut self, m: &GenCog, x: usize) -> Result<Vec<usize>> {
        if m.contains(x) {
            return Ok(Vec::new());
        }
        if let Some(v) = self.omega.get(m.summands()).and_then(|c| c.get(&x)) {
            return Ok(v.clone());
        }
        let a = self.approximate(m, x)?;
        self.omega
            .entry(m.summands().to_vec())
            .or_default()
            .insert(x, a.kernel_ids.clone());
        Ok(a.kernel_ids)
    }

    /// Iterate `Ω_M` on the set of indecomposable summand types until the
    /// non-add-M part vanishes or repeats.
    pub fn m_dimension(&mut self, m: &GenCog, x: usize, max_steps: usize) -> Result<MDimResult> {
        let mut chain = vec![vec![x]];
        if m.contains(x) {
            return Ok(MDimResult {
                value: MDim::Finite(0),
                chain,
                cycle: None,
            });
        }
        let mut state: Vec<usize> = vec![x];
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
        seen.insert(state.clone(), 0);
        for step in 1..=max_steps {
            let mut next = BTreeSet::new();
            for &y in &state {
                next.extend(self.omega(m, y)?);
            }
            chain.push(next.iter().copied().collect());
            let outside: Vec<usize> = next.into_iter().filter(|&y| !m.contains(y)).collect();
            if outside.is_empty() {
                return Ok(MDimResult {
                    value: MDim::Finite(step),
                    chain,
                    cycle: None,
                });
            }
            if let Some(&first) = seen.get(&outside) {
                return Ok(MDimResult {
                    value: MDim::Infinite,
                    chain,
                    cycle: Some((first, step)),
                });
            }
            seen.insert(outside.clone(), step);
            state = outside;
        }
        Ok(MDimResult {
            value: MDim::Indeterminate,
            chain,
            cycle: None,
        })
    }

    fn default_steps(&self) -> usize {
        4 * self.rep.m() + 8 + if self.closed { self.len() } else { 0 }
    }

    /// `gl.dim End(M)` from the M-dimensions of all catalog indecomposables.
    pub fn gldim_end(&mut self, m: &GenCog) -> Result<EndGlDim> {
        m.require()?;
        if !self.closed {
            return Err(Error::contract("exact mode needs a complete catalog"));
        }
        let steps = self.default_steps();
        let mut max = 0;
        let mut witness = None;
        for x in 0..self.len() {
            if m.contains(x) {
                continue;
            }
            let r = self.m_dimension(m, x, steps)?;
            match r.value {
                MDim::Finite(k) => {
                    if k > max {
                        max = k;
                        witness = Some(x);
                    }
                }
                MDim::Infinite => {
                    return Ok(EndGlDim {
                        value: EndDim::Infinite,
                        witness: Some(x),
                        max_mdim: None,
                    })
                }
                MDim::Indeterminate => {
                    return Err(Error::Budget(format!(
                        "M-dimension of {} undecided after {steps} steps",
                        self.label(x)
                    )))
                }
            }
        }
        let value = if max == 0 { EndDim::AtMostTwo } else { EndDim::Exact(2 + max) };
        Ok(EndGlDim {
            value,
            witness,
            max_mdim: Some(max),
        })
    }

    /// Exact `gl.dim End(M)`; values up to 2 are settled by [`Self::low_gldim_end`].
    pub fn gldim_end_resolved(&mut self, m: &GenCog) -> Result<GlDim> {
        match self.gldim_end(m)?.value {
            EndDim::Exact(d) => Ok(GlDim::Finite(d)),
            EndDim::Infinite => Ok(GlDim::Infinite),
            EndDim::AtMostTwo => Ok(GlDim::Finite(self.low_gldim_end(m)?)),
        }
    }

    /// `gl.dim End(M)` given that it is at most 2. The simple End(M)-module
    /// at `M_i` has projective dimension 0 when `rad(M, M_i) = 0`, and at
    /// most 1 exactly when the sum of the irreducible maps in add M ending
    /// at `M_i` is a monomorphism (M is a generator, so the kernel of the
    /// induced presentation vanishes only if this kernel does).
    pub fn low_gldim_end(&mut self, m: &GenCog) -> Result<usize> {
        let ids = m.summands().to_vec();
        let mut best = 0;
        for &i in &ids {
            let mut sources = Vec::new();
            let mut maps = Vec::new();
            for &j in &ids {
                let rad = self.rad(j, i);
                if rad.is_empty() {
                    continue;
                }
                let len = rad[0].to_vec().len();
                let mut red = RowReducer::new(self.rep.p(), len);
                for &k in &ids {
                    let first = self.rad(j, k);
                    if first.is_empty() {
                        continue;
                    }
                    for g in self.rad(k, i) {
                        for h in &first {
                            red.insert(g.after(h).to_vec());
                        }
                    }
                }
                for f in rad {
                    if red.insert(f.to_vec()) {
                        sources.push(j);
                        maps.push(f);
                    }
                }
            }
            if maps.is_empty() {
                continue;
            }
            best = best.max(1);
            let total = module::from_sum(self.alg(), &maps);
            let dim: usize = sources.iter().map(|&j| self.module(j).dim()).sum();
            if total.rank() < dim {
                return Ok(2);
            }
        }
        Ok(best)
    }

    /// Lower bound from exact M-dimensions of the given modules and an
    /// upper bound valid on that window only.
    pub fn gldim_end_windowed(&mut self, m: &GenCog, window: &[usize]) -> Result<WindowedGlDim> {
        m.require()?;
        let steps = self.default_steps();
        let mut best: Option<(usize, usize)> = None;
        let mut infinite = None;
        let mut indeterminate = Vec::new();
        for &x in window {
            if m.contains(x) {
                continue;
            }
            let r = self.m_dimension(m, x, steps)?;
            match r.value {
                MDim::Finite(k) => {
                    if best.is_none_or(|(b, _)| k > b) {
                        best = Some((k, x));
                    }
                }
                MDim::Infinite => {
                    infinite.get_or_insert(x);
                }
                MDim::Indeterminate => indeterminate.push(x),
            }
        }
        let max = best.map_or(0, |b| b.0);
        let lower = if infinite.is_some() {
            GlDim::Infinite
        } else {
            GlDim::Finite(2 + max)
        };
        let upper = if infinite.is_some() || !indeterminate.is_empty() {
            None
        } else {
            Some(2 + max)
        };
        Ok(WindowedGlDim {
            lower,
            lower_witness: infinite.or(best.filter(|b| b.0 > 0).map(|b| b.1)),
            upper_on_window: upper,
            window_size: window.len(),
            indeterminate,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MDim {
    Finite(usize),
    Infinite,
    /// The iteration cap was reached without a verdict.
    Indeterminate,
}

/// M-dimension with its witness chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MDimResult {
    pub value: MDim,
    /// Summand types of `Ω_M^i(X)` for `i = 0, 1, ...`.
    pub chain: Vec<Vec<usize>>,
    /// Steps `(i, j)`, `i < j`, whose non-add-M parts coincide.
    pub cycle: Option<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GlDim {
    Finite(usize),
    Infinite,
}

impl std::fmt::Display for GlDim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GlDim::Finite(d) => write!(f, "{d}"),
            GlDim::Infinite => write!(f, "∞"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EndDim {
    /// Every M-dimension is 0; the value is at most 2.
    AtMostTwo,
    Exact(usize),
    Infinite,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndGlDim {
    pub value: EndDim,
    /// A module realizing the maximum (or an infinite M-dimension).
    pub witness: Option<usize>,
    pub max_mdim: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowedGlDim {
    pub lower: GlDim,
    pub lower_witness: Option<usize>,
    /// `2 + max M-dim` over the window, when every window module got a verdict.
    pub upper_on_window: Option<usize>,
    pub window_size: usize,
    pub indeterminate: Vec<usize>,
}

/// The module of the construction for a given `d`, with its witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thm32 {
    pub gencog: GenCog,
    pub z: usize,
    /// `Z, τZ, ..., τ^{d-3}Z`, the modules left out.
    pub removed: Vec<usize>,
}

/// Leave out a τ-chain of length `d - 2` ending above a projective.
pub fn construct_thm32(ws: &mut Workspace, cat: &Catalog, d: usize) -> Result<Thm32> {
    if d < 2 {
        return Err(Error::input("d must be at least 2"));
    }
    let z = cat
        .ids()
        .find(|&z| {
            !cat.flags(z).injective && cat.tau_pow(z, d - 2).is_some_and(|q| cat.flags(q).projective)
        })
        .ok_or_else(|| {
            Error::NotFound(format!(
                "no non-injective Z with τ^{}Z projective: max orbit cardinality {} < {d}",
                d - 2,
                OrbitTable::build(cat).max_cardinality()
            ))
        })?;
    let removed: Vec<usize> = (0..d.saturating_sub(2)).map(|i| cat.tau_pow(z, i).expect("orbit")).collect();
    let gencog = GenCog::new(ws, cat.ids().filter(|x| !removed.contains(x)))?;
    Ok(Thm32 { gencog, z, removed })
}

/// `E_i = A ⊕ DA_m ⊕ P ⊕ U_i ⊕ ... ⊕ U_{t-1}` with `t = gl.dim A^(m)`.
pub fn construct_e(ws: &mut Workspace, i: usize) -> Result<GenCog> {
    let t = ws.rep().global_dimension()?;
    if i == 0 || i + 1 > t {
        return Err(Error::input(format!("E_i needs 1 <= i <= {}", t.saturating_sub(1))));
    }
    let mut ids = ws.basic_parts()?.all();
    for k in i..t {
        for x in ws.rep_arc().u_stratum(k)? {
            ids.push(ws.register(x)?);
        }
    }
    GenCog::new(ws, ids)
}

/// Data of the construction with a long τ-chain of a preprojective module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lem47 {
    pub gencog: GenCog,
    pub d: usize,
    /// Layer-0 preprojective with `τ^{d-(2m+2)} Z` simple projective.
    pub z: usize,
    /// Middle terms of the almost split sequence ending in `Z`.
    pub y: Vec<usize>,
    /// `N = Ω^{-2m} Z`.
    pub n: usize,
}

pub fn construct_lem47(ws: &mut Workspace, d: usize) -> Result<Lem47> {
    let m = ws.rep().m();
    if d < 2 * m + 3 {
        return Err(Error::input(format!("d must be at least 2m+3 = {}", 2 * m + 3)));
    }
    if ws.rep().quiver().is_dynkin() {
        return Err(Error::contract("the base algebra is representation-finite"));
    }
    let s = d - (2 * m + 2);
    let alg = ws.rep_arc().alg_arc();
    // simple projective A-modules sit at sinks of the quiver
    let sink = (0..ws.rep().n())
        .find(|&v| ws.rep().quiver().arrows().iter().all(|a| a.source != v))
        .ok_or_else(|| Error::contract("quiver without a sink"))?;
    let mut z = ws.rep().proj(sink, 0)?;
    for _ in 0..s {
        z = module::tau_inverse(&alg, &z);
        if z.is_zero() || !ws.rep().is_layer0(&z) {
            return Err(Error::anomaly("τ⁻¹-walk left the preprojective A-modules"));
        }
    }
    let z_id = ws.register(z.clone())?;
    if ws.is_injective(z_id) {
        return Err(Error::anomaly("Z is injective"));
    }
    let tz = module::tau(&alg, &z);
    let data = module::ext1_data(&alg, &z, &tz);
    if data.classes.len() != 1 {
        return Err(Error::anomaly(format!(
            "Ext¹(Z, τZ) has dimension {}, expected 1 for a brick",
            data.classes.len()
        )));
    }
    let ext = module::realize_extension(&alg, &z, &tz, &data, &[1])?;
    let y = ws.register_all(&ext.middle)?;
    let mut ids = ws.basic_parts()?.all();
    for &yj in &y {
        let mut cur = Some(yj);
        for _ in 0..=(d - (2 * m + 3)) {
            let Some(c) = cur else { break };
            ids.push(c);
            cur = ws.tau(c)?;
        }
    }
    let mut nmod = z;
    for _ in 0..2 * m {
        nmod = module::cosyzygy(&alg, &nmod);
    }
    let n = ws.register(nmod)?;
    let gencog = GenCog::new(ws, ids)?;
    Ok(Lem47 {
        gencog,
        d,
        z: z_id,
        y,
        n,
    })
}

/// Data of the construction with infinite global dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lem48 {
    pub gencog: GenCog,
    /// Layer-0 brick with self-extensions.
    pub n: usize,
    /// Middle term of a non-split self-extension of `N`.
    pub n_prime: usize,
}

/// Build the construction from a brick `N` in layer 0 with `Ext¹(N, N) ≠ 0`.
pub fn construct_lem48_with(ws: &mut Workspace, n: &Module) -> Result<Lem48> {
    if ws.rep().quiver().is_dynkin() {
        return Err(Error::contract("the base algebra is representation-finite"));
    }
    let alg = ws.rep_arc().alg_arc();
    if !ws.rep().is_layer0(n) {
        return Err(Error::input("N must be an A-module (layer 0)"));
    }
    if module::hom_dim(&alg, n, n) != 1 {
        return Err(Error::contract("End(N) is not the ground field"));
    }
    let data = module::ext1_data(&alg, n, n);
    if data.classes.is_empty() {
        return Err(Error::contract("Ext¹(N, N) = 0"));
    }
    let mut coeffs = vec![0; data.classes.len()];
    coeffs[0] = 1;
    let ext = module::realize_extension(&alg, n, n, &data, &coeffs)?;
    if module::extension_splits(&alg, n, &ext) {
        return Err(Error::anomaly("a nonzero Ext class split"));
    }
    let n_id = ws.register(n.clone())?;
    let np = ws.register(ext.middle)?;
    let mut ids = ws.basic_parts()?.all();
    ids.push(np);
    let gencog = GenCog::new(ws, ids)?;
    Ok(Lem48 {
        gencog,
        n: n_id,
        n_prime: np,
    })
}

/// Search layer-0 indecomposables of the given dimension bound for a brick
/// with self-extensions, smallest first, and build the construction.
pub fn construct_lem48(ws: &mut Workspace, bound: usize) -> Result<Lem48> {
    let pa = crate::rep::PathAlgebra::new(ws.rep().quiver(), ws.rep().p())?;
    let indecs = crate::window::base_indecomposables(&pa, bound, &crate::artrans::Budget::default())?;
    for r in indecs {
        let x = pa.to_module(&r);
        if module::hom_dim(pa.alg(), &x, &x) == 1 && module::ext1_dim(pa.alg(), &x, &x) > 0 {
            let n = ws.rep().embed(&r, 0)?;
            return construct_lem48_with(ws, &n);
        }
    }
    Err(Error::contract(format!(
        "no brick with self-extensions of dimension at most {bound} per vertex"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artrans::Budget;
    use crate::quiver::Quiver;

    fn a2() -> (Catalog, Workspace) {
        let rep = ReplicatedAlgebra::new(&Quiver::named("a2").unwrap(), 1, 32003).unwrap();
        let cat = Catalog::build(Arc::new(rep), Budget::default()).unwrap();
        let ws = Workspace::from_catalog(&cat);
        (cat, ws)
    }

    #[test]
    fn approximation_of_summand_is_identity() {
        let (cat, mut ws) = a2();
        let m = GenCog::new(&mut ws, cat.ids()).unwrap();
        for x in cat.ids() {
            let a = ws.approximate(&m, x).unwrap();
            assert_eq!(a.multiplicities, vec![(x, 1)]);
            assert!(a.kernel.is_zero());
            assert!(a.map.is_iso());
        }
    }

    #[test]
    fn basic_gencog_approximations_are_minimal() {
        let (cat, mut ws) = a2();
        let ids = ws.basic_parts().unwrap().all();
        let m = GenCog::new(&mut ws, ids).unwrap();
        assert!(m.is_gencog());
        for x in cat.ids() {
            let a = ws.approximate(&m, x).unwrap();
            let c = ws.check_approximation(&m, &a).unwrap();
            assert!(c.approximation && c.minimal, "{}", cat.label(x));
            assert!(a.surjective);
        }
    }

    #[test]
    fn e1_over_a2() {
        let (cat, mut ws) = a2();
        let e1 = construct_e(&mut ws, 1).unwrap();
        assert_eq!(e1.len(), 8);
        let missing: Vec<usize> = cat.ids().filter(|&x| !e1.contains(x)).collect();
        assert_eq!(missing.len(), 1);
        assert_eq!(cat.label(missing[0]), "(0,1|0,0)");
        assert_eq!(ws.gldim_end(&e1).unwrap().value, EndDim::Exact(3));
    }

    #[test]
    fn thm32_over_a2() {
        let (cat, mut ws) = a2();
        let t = construct_thm32(&mut ws, &cat, 4).unwrap();
        assert_eq!(cat.label(t.z), "(0,0|1,0)");
        assert_eq!(t.gencog.len(), 7);
        assert_eq!(ws.gldim_end(&t.gencog).unwrap().value, EndDim::Exact(4));
        let r = ws.m_dimension(&t.gencog, t.z, 10).unwrap();
        assert_eq!(r.value, MDim::Finite(2));
        for i in 0..=2 {
            assert_eq!(r.chain[i], vec![cat.tau_pow(t.z, i).unwrap()]);
        }
        assert!(matches!(construct_thm32(&mut ws, &cat, 5), Err(Error::NotFound(_))));
        let all = construct_thm32(&mut ws, &cat, 2).unwrap();
        assert_eq!(all.gencog.len(), 9);
        assert_eq!(ws.gldim_end(&all.gencog).unwrap().value, EndDim::AtMostTwo);
    }
}
