//! Right modules over an [`Algebra`], morphisms, and the basic homological
//! constructions: Hom, kernels, cokernels, covers, envelopes, syzygies,
//! duality and the Auslander-Reiten translate.
//!
//! A module stores a matrix for every basis element: the element `b` of
//! `e_s A e_t` acts as a map `M_s -> M_t`, acting on column vectors, so the
//! product `b c` acts by `M(c) * M(b)`.

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Matrix, RowReducer, Split};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Module {
    dims: Vec<usize>,
    acts: Vec<Matrix>,
}

impl std::fmt::Debug for Module {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Module{:?}", self.dims)
    }
}

/// A family of linear maps `f_v: M_v -> N_v`, one per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub maps: Vec<Matrix>,
}

impl Module {
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn act(&self, b: usize) -> &Matrix {
        &self.acts[b]
    }

    pub fn acts(&self) -> &[Matrix] {
        &self.acts
    }

    pub fn zero(alg: &Algebra) -> Module {
        let dims = vec![0; alg.num_vertices()];
        Module::from_acts_unchecked(alg, dims, |_| None)
    }

    /// Assemble from a closure giving the action of each basis element;
    /// idempotents get identities and `None` means zero.
    fn from_acts_unchecked(
        alg: &Algebra,
        dims: Vec<usize>,
        mut f: impl FnMut(usize) -> Option<Matrix>,
    ) -> Module {
        let p = alg.p();
        let acts = (0..alg.dim())
            .map(|b| {
                let e = alg.elem(b);
                if e.idempotent {
                    return Matrix::identity(p, dims[e.source]);
                }
                f(b).unwrap_or_else(|| Matrix::zeros(p, dims[e.target], dims[e.source]))
            })
            .collect();
        Module { dims, acts }
    }

    /// Build and validate from explicit actions of every basis element.
    pub fn from_acts(alg: &Algebra, dims: Vec<usize>, acts: Vec<Matrix>) -> Result<Module> {
        if dims.len() != alg.num_vertices() || acts.len() != alg.dim() {
            return Err(Error::input("module data does not match the algebra"));
        }
        let m = Module { dims, acts };
        m.validate(alg)?;
        Ok(m)
    }

    /// Build from the actions of the generators only; the other basis
    /// elements are expanded through [`Algebra::words`]. Validated.
    pub fn from_generators(alg: &Algebra, dims: Vec<usize>, gens: &[(usize, Matrix)]) -> Result<Module> {
        let p = alg.p();
        if dims.len() != alg.num_vertices() {
            return Err(Error::input("dimension vector has the wrong length"));
        }
        let mut gen_act: Vec<Option<Matrix>> = vec![None; alg.dim()];
        for (g, m) in gens {
            if !alg.generators().contains(g) {
                return Err(Error::input(format!("{} is not a generator", alg.elem(*g).label)));
            }
            let e = alg.elem(*g);
            if m.shape() != (dims[e.target], dims[e.source]) {
                return Err(Error::input(format!(
                    "matrix for {} has shape {:?}, expected {:?}",
                    e.label,
                    m.shape(),
                    (dims[e.target], dims[e.source])
                )));
            }
            gen_act[*g] = Some(m.clone());
        }
        let words = alg.words();
        let m = Module::from_acts_unchecked(alg, dims.clone(), |b| {
            let e = alg.elem(b);
            let mut acc = Matrix::zeros(p, dims[e.target], dims[e.source]);
            for (w, c) in &words[b] {
                let mut cur = Matrix::identity(p, dims[alg.elem(w[0]).source]);
                for &g in w {
                    let ge = alg.elem(g);
                    let gm = gen_act[g]
                        .clone()
                        .unwrap_or_else(|| Matrix::zeros(p, dims[ge.target], dims[ge.source]));
                    cur = gm.mul(&cur);
                }
                acc = acc.axpy(*c, &cur);
            }
            Some(acc)
        });
        m.validate(alg)?;
        Ok(m)
    }

    /// Check shapes, idempotent actions, and compatibility with every product.
    pub fn validate(&self, alg: &Algebra) -> Result<()> {
        let p = alg.p();
        for b in 0..alg.dim() {
            let e = alg.elem(b);
            if self.acts[b].shape() != (self.dims[e.target], self.dims[e.source]) {
                return Err(Error::input(format!("action of {} has the wrong shape", e.label)));
            }
            if e.idempotent && self.acts[b] != Matrix::identity(p, self.dims[e.source]) {
                return Err(Error::input(format!("{} does not act as the identity", e.label)));
            }
        }
        for b in 0..alg.dim() {
            let eb = alg.elem(b);
            if eb.idempotent || self.dims[eb.source] == 0 {
                continue;
            }
            for c in 0..alg.dim() {
                let ec = alg.elem(c);
                if ec.idempotent || ec.source != eb.target || self.dims[ec.target] == 0 {
                    continue;
                }
                let lhs = self.acts[c].mul(&self.acts[b]);
                let mut rhs = Matrix::zeros(p, self.dims[ec.target], self.dims[eb.source]);
                for &(d, k) in alg.mul(b, c) {
                    rhs = rhs.axpy(k, &self.acts[d]);
                }
                if lhs != rhs {
                    return Err(Error::input(format!(
                        "action violates the relation for {} * {}",
                        eb.label, ec.label
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn simple(alg: &Algebra, v: usize) -> Module {
        let mut dims = vec![0; alg.num_vertices()];
        dims[v] = 1;
        Module::from_acts_unchecked(alg, dims, |_| None)
    }

    /// The indecomposable projective `e_v A`, basis the basis elements with source `v`.
    pub fn projective(alg: &Algebra, v: usize) -> Module {
        let p = alg.p();
        let nv = alg.num_vertices();
        let dims: Vec<usize> = (0..nv).map(|w| alg.between(v, w).len()).collect();
        Module::from_acts_unchecked(alg, dims.clone(), |c| {
            let e = alg.elem(c);
            let (w1, w2) = (e.source, e.target);
            let mut m = Matrix::zeros(p, dims[w2], dims[w1]);
            for (j, &b) in alg.between(v, w1).iter().enumerate() {
                for &(d, k) in alg.mul(b, c) {
                    m.set(alg.position(d), j, k);
                }
            }
            Some(m)
        })
    }

    /// The indecomposable injective `D(A e_v)`.
    pub fn injective(alg: &Algebra, v: usize) -> Module {
        Module::projective(&alg.op(), v).dual()
    }

    /// Vector-space dual; a module over the opposite algebra (and back).
    pub fn dual(&self) -> Module {
        Module {
            dims: self.dims.clone(),
            acts: self.acts.iter().map(|m| m.transpose()).collect(),
        }
    }

    pub fn direct_sum(alg: &Algebra, parts: &[&Module]) -> Module {
        let p = alg.p();
        let nv = alg.num_vertices();
        let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|m| m.dims[v]).sum()).collect();
        Module::from_acts_unchecked(alg, dims.clone(), |b| {
            let e = alg.elem(b);
            let mut m = Matrix::zeros(p, dims[e.target], dims[e.source]);
            let (mut r, mut c) = (0, 0);
            for part in parts {
                m.put_block(r, c, &part.acts[b]);
                r += part.dims[e.target];
                c += part.dims[e.source];
            }
            Some(m)
        })
    }

    /// Is `M` supported only at the given vertices?
    pub fn supported_in(&self, vertices: impl Fn(usize) -> bool) -> bool {
        self.dims.iter().enumerate().all(|(v, &d)| d == 0 || vertices(v))
    }

    /// Restrict to a subspace `U_v` (columns of `basis[v]`) closed under the action.
    pub fn submodule(&self, alg: &Algebra, basis: &[Matrix]) -> Module {
        let splits: Vec<Split> = basis.iter().map(Split::new).collect();
        let dims: Vec<usize> = splits.iter().map(|s| s.dim()).collect();
        Module::from_acts_unchecked(alg, dims, |b| {
            let e = alg.elem(b);
            let s = &splits[e.source];
            let t = &splits[e.target];
            Some(t.sub_coords().mul(&self.acts[b]).mul(&s.basis))
        })
    }

    /// Inverse of [`Module::submodule`]'s coordinate choice: the inclusion.
    pub fn submodule_inclusion(basis: &[Matrix]) -> Morphism {
        Morphism {
            maps: basis.iter().map(|b| Split::new(b).basis).collect(),
        }
    }

    /// The radical `rad M` as a subspace per vertex.
    pub fn radical_subspaces(&self, alg: &Algebra) -> Vec<Matrix> {
        let p = alg.p();
        (0..alg.num_vertices())
            .map(|v| {
                let mut span = Matrix::zeros(p, self.dims[v], 0);
                for &g in alg.generators() {
                    if alg.elem(g).target == v {
                        span = span.hstack(&self.acts[g]);
                    }
                }
                crate::field::column_space(&span)
            })
            .collect()
    }

    /// Dimension vector of the top `M / rad M`.
    pub fn top_dims(&self, alg: &Algebra) -> Vec<usize> {
        self.radical_subspaces(alg)
            .iter()
            .zip(&self.dims)
            .map(|(r, &d)| d - r.cols())
            .collect()
    }

    /// Dimension vector of the socle.
    pub fn socle_dims(&self, alg: &Algebra) -> Vec<usize> {
        self.dual().top_dims(&alg.op())
    }

    /// Socle as a subspace per vertex: common kernel of all radical generators.
    pub fn socle_subspaces(&self, alg: &Algebra) -> Vec<Matrix> {
        let p = alg.p();
        (0..alg.num_vertices())
            .map(|v| {
                let mut stack = Matrix::zeros(p, 0, self.dims[v]);
                for &g in alg.generators() {
                    if alg.elem(g).source == v {
                        stack = stack.vstack(&self.acts[g]);
                    }
                }
                stack.kernel()
            })
            .collect()
    }
}

impl Morphism {
    pub fn zero(alg: &Algebra, m: &Module, n: &Module) -> Morphism {
        Morphism {
            maps: (0..alg.num_vertices())
                .map(|v| Matrix::zeros(alg.p(), n.dims[v], m.dims[v]))
                .collect(),
        }
    }

    pub fn identity(alg: &Algebra, m: &Module) -> Morphism {
        Morphism {
            maps: m.dims.iter().map(|&d| Matrix::identity(alg.p(), d)).collect(),
        }
    }

    /// `self ∘ g` (apply `g` first).
    pub fn after(&self, g: &Morphism) -> Morphism {
        Morphism {
            maps: self.maps.iter().zip(&g.maps).map(|(a, b)| a.mul(b)).collect(),
        }
    }

    pub fn add(&self, o: &Morphism) -> Morphism {
        Morphism {
            maps: self.maps.iter().zip(&o.maps).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, o: &Morphism) -> Morphism {
        Morphism {
            maps: self.maps.iter().zip(&o.maps).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: u32) -> Morphism {
        Morphism {
            maps: self.maps.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn axpy(&self, c: u32, o: &Morphism) -> Morphism {
        Morphism {
            maps: self.maps.iter().zip(&o.maps).map(|(a, b)| a.axpy(c, b)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(|m| m.is_zero())
    }

    pub fn is_iso(&self) -> bool {
        self.maps.iter().all(|m| m.is_square() && (m.rows() == 0 || m.det() != 0))
    }

    pub fn transpose(&self) -> Morphism {
        Morphism {
            maps: self.maps.iter().map(|m| m.transpose()).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.maps.iter().map(|m| m.rank()).sum()
    }

    /// Coordinates concatenated vertex by vertex (row-major per block).
    pub fn to_vec(&self) -> Vec<u32> {
        self.maps.iter().flat_map(|m| m.data().iter().copied()).collect()
    }

    pub fn from_vec(alg: &Algebra, m: &Module, n: &Module, v: &[u32]) -> Morphism {
        let mut off = 0;
        let maps = (0..alg.num_vertices())
            .map(|i| {
                let (r, c) = (n.dims[i], m.dims[i]);
                let mm = Matrix::from_vec(alg.p(), r, c, v[off..off + r * c].to_vec());
                off += r * c;
                mm
            })
            .collect();
        Morphism { maps }
    }

    /// Linear combination `sum c_i f_i`; all `f_i` share domain and codomain.
    pub fn combine(alg: &Algebra, m: &Module, n: &Module, fs: &[Morphism], cs: &[u32]) -> Morphism {
        let mut acc = Morphism::zero(alg, m, n);
        for (f, &c) in fs.iter().zip(cs) {
            if c != 0 {
                acc = acc.axpy(c, f);
            }
        }
        acc
    }

    /// Check `f_t M(b) = N(b) f_s` for every generator.
    pub fn is_homomorphism(&self, alg: &Algebra, m: &Module, n: &Module) -> bool {
        alg.generators().iter().all(|&g| {
            let e = alg.elem(g);
            self.maps[e.target].mul(m.act(g)) == n.act(g).mul(&self.maps[e.source])
        })
    }
}

/// Basis of `Hom(M, N)`.
pub fn hom_basis(alg: &Algebra, m: &Module, n: &Module) -> Vec<Morphism> {
    let direct: usize = m.dims.iter().zip(&n.dims).map(|(a, b)| a * b).sum();
    if direct <= 64 {
        hom_basis_direct(alg, m, n)
    } else {
        hom_basis_presented(alg, m, n)
    }
}

/// `Hom(M, N)` as `ker(Hom(P0, N) -> Hom(ΩM, N))`: the unknowns are the
/// images of the top generators of `M`, so the system is far smaller than
/// the per-vertex one for large modules.
pub fn hom_basis_presented(alg: &Algebra, m: &Module, n: &Module) -> Vec<Morphism> {
    let p = alg.p();
    let nv = alg.num_vertices();
    let cover = projective_cover(alg, m);
    if cover.tops.is_empty() {
        return vec![];
    }
    let mut xoff = vec![0];
    for &u in &cover.tops {
        xoff.push(xoff.last().unwrap() + n.dims[u]);
    }
    let nx = *xoff.last().unwrap();
    if nx == 0 {
        return vec![];
    }
    // offset of summand i inside P0 at vertex w
    let block_off = |w: usize| -> Vec<usize> {
        let mut o = vec![0];
        for &u in &cover.tops {
            o.push(o.last().unwrap() + alg.between(u, w).len());
        }
        o
    };
    let mut eq_rows: Vec<u32> = Vec::new();
    for w in 0..nv {
        if n.dims[w] == 0 {
            continue;
        }
        let omega = cover.map.maps[w].kernel();
        if omega.cols() == 0 {
            continue;
        }
        let bo = block_off(w);
        for c in 0..omega.cols() {
            let y = omega.column(c);
            let mut e = Matrix::zeros(p, n.dims[w], nx);
            for (i, &u) in cover.tops.iter().enumerate() {
                for (pos, &b) in alg.between(u, w).iter().enumerate() {
                    let coef = y[bo[i] + pos];
                    if coef == 0 {
                        continue;
                    }
                    let nb = n.act(b);
                    for r in 0..n.dims[w] {
                        for k in 0..n.dims[u] {
                            let v = crate::field::mul(p, coef, nb.get(r, k));
                            if v != 0 {
                                let old = e.get(r, xoff[i] + k);
                                e.set(r, xoff[i] + k, crate::field::add(p, old, v));
                            }
                        }
                    }
                }
            }
            for r in 0..e.rows() {
                if e.row(r).iter().any(|&x| x != 0) {
                    eq_rows.extend_from_slice(e.row(r));
                }
            }
        }
    }
    let sections: Vec<Matrix> = (0..nv)
        .map(|v| {
            let pi = &cover.map.maps[v];
            pi.solve_matrix(&Matrix::identity(p, pi.rows()))
                .expect("shape")
                .expect("cover is surjective")
        })
        .collect();
    let eqs = Matrix::from_vec(p, eq_rows.len() / nx, nx, eq_rows);
    eqs.kernel_basis()
        .into_iter()
        .map(|x| {
            let parts: Vec<Morphism> = cover
                .tops
                .iter()
                .enumerate()
                .map(|(i, &u)| map_from_projective(alg, u, n, &x[xoff[i]..xoff[i + 1]]))
                .collect();
            let phi = from_sum(alg, &parts);
            Morphism {
                maps: (0..nv).map(|v| phi.maps[v].mul(&sections[v])).collect(),
            }
        })
        .collect()
}

/// `Hom(M, N)` by solving for all per-vertex matrices at once.
pub fn hom_basis_direct(alg: &Algebra, m: &Module, n: &Module) -> Vec<Morphism> {
    let p = alg.p();
    let nv = alg.num_vertices();
    let mut off = vec![0; nv + 1];
    for v in 0..nv {
        off[v + 1] = off[v] + m.dims[v] * n.dims[v];
    }
    let nvars = off[nv];
    if nvars == 0 {
        return vec![];
    }
    let mut rr = RowReducer::new(p, nvars);
    for &g in alg.generators() {
        let e = alg.elem(g);
        let (s, t) = (e.source, e.target);
        let (ms, mt, ns, nt) = (m.dims[s], m.dims[t], n.dims[s], n.dims[t]);
        if ms == 0 || nt == 0 {
            continue;
        }
        let ma = m.act(g);
        let na = n.act(g);
        // entry (r, c) of f_t M(g) - N(g) f_s, with f_v stored row-major (n_v x m_v)
        for r in 0..nt {
            for c in 0..ms {
                let mut row = vec![0u32; nvars];
                for k in 0..mt {
                    let coef = ma.get(k, c);
                    if coef != 0 {
                        let idx = off[t] + r * mt + k;
                        row[idx] = crate::field::add(p, row[idx], coef);
                    }
                }
                for k in 0..ns {
                    let coef = na.get(r, k);
                    if coef != 0 {
                        let idx = off[s] + k * ms + c;
                        row[idx] = crate::field::sub(p, row[idx], coef);
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    rr.insert(row);
                }
            }
        }
    }
    rr.null_space()
        .into_iter()
        .map(|v| Morphism::from_vec(alg, m, n, &v))
        .collect()
}

pub fn hom_dim(alg: &Algebra, m: &Module, n: &Module) -> usize {
    hom_basis(alg, m, n).len()
}

/// Kernel of `f: M -> N` with its inclusion.
pub fn kernel(alg: &Algebra, m: &Module, f: &Morphism) -> (Module, Morphism) {
    let basis: Vec<Matrix> = f.maps.iter().map(|fv| fv.kernel()).collect();
    (m.submodule(alg, &basis), Module::submodule_inclusion(&basis))
}

/// Image of `f: M -> N` as a submodule of `N`, with its inclusion.
pub fn image(alg: &Algebra, n: &Module, f: &Morphism) -> (Module, Morphism) {
    let basis: Vec<Matrix> = f.maps.iter().map(crate::field::column_space).collect();
    (n.submodule(alg, &basis), Module::submodule_inclusion(&basis))
}

/// Cokernel of `f: M -> N` with its projection.
pub fn cokernel(alg: &Algebra, n: &Module, f: &Morphism) -> (Module, Morphism) {
    quotient(alg, n, &f.maps)
}

/// `N / U` for a submodule given by spanning columns per vertex.
pub fn quotient(alg: &Algebra, n: &Module, span: &[Matrix]) -> (Module, Morphism) {
    let splits: Vec<Split> = span.iter().map(Split::new).collect();
    let dims: Vec<usize> = splits.iter().map(|s| s.ambient() - s.dim()).collect();
    let c = Module::from_acts_unchecked(alg, dims, |b| {
        let e = alg.elem(b);
        Some(
            splits[e.target]
                .quotient_map()
                .mul(n.act(b))
                .mul(&splits[e.source].complement),
        )
    });
    let proj = Morphism {
        maps: splits.iter().map(|s| s.quotient_map()).collect(),
    };
    (c, proj)
}

/// The map `P(v) -> N` sending `e_v` to `x` (a vector of `N_v`).
pub fn map_from_projective(alg: &Algebra, v: usize, n: &Module, x: &[u32]) -> Morphism {
    let p = alg.p();
    let maps = (0..alg.num_vertices())
        .map(|w| {
            let cols: Vec<Vec<u32>> = alg
                .between(v, w)
                .iter()
                .map(|&b| n.act(b).mul_vec(x))
                .collect();
            Matrix::from_columns(p, n.dims[w], &cols)
        })
        .collect();
    Morphism { maps }
}

/// A map out of a direct sum, given componentwise.
pub fn from_sum(alg: &Algebra, parts: &[Morphism]) -> Morphism {
    let nv = alg.num_vertices();
    let maps = (0..nv)
        .map(|v| {
            let mut acc: Option<Matrix> = None;
            for f in parts {
                acc = Some(match acc {
                    None => f.maps[v].clone(),
                    Some(a) => a.hstack(&f.maps[v]),
                });
            }
            acc.expect("at least one component")
        })
        .collect();
    Morphism { maps }
}

/// A map into a direct sum, given componentwise.
pub fn into_sum(alg: &Algebra, parts: &[Morphism]) -> Morphism {
    let nv = alg.num_vertices();
    let maps = (0..nv)
        .map(|v| {
            let mut acc: Option<Matrix> = None;
            for f in parts {
                acc = Some(match acc {
                    None => f.maps[v].clone(),
                    Some(a) => a.vstack(&f.maps[v]),
                });
            }
            acc.expect("at least one component")
        })
        .collect();
    Morphism { maps }
}

/// Block-diagonal sum of morphisms.
pub fn diag(alg: &Algebra, parts: &[Morphism]) -> Morphism {
    let p = alg.p();
    let maps = (0..alg.num_vertices())
        .map(|v| {
            let r: usize = parts.iter().map(|f| f.maps[v].rows()).sum();
            let c: usize = parts.iter().map(|f| f.maps[v].cols()).sum();
            let mut m = Matrix::zeros(p, r, c);
            let (mut r0, mut c0) = (0, 0);
            for f in parts {
                m.put_block(r0, c0, &f.maps[v]);
                r0 += f.maps[v].rows();
                c0 += f.maps[v].cols();
            }
            m
        })
        .collect();
    Morphism { maps }
}

/// Projections and inclusions of a direct sum with the given summand dimension vectors.
pub fn sum_injections(alg: &Algebra, parts: &[&Module]) -> (Vec<Morphism>, Vec<Morphism>) {
    let p = alg.p();
    let nv = alg.num_vertices();
    let totals: Vec<usize> = (0..nv).map(|v| parts.iter().map(|m| m.dims[v]).sum()).collect();
    let mut incl = Vec::new();
    let mut proj = Vec::new();
    let mut off = vec![0; nv];
    for part in parts {
        let mut im = Vec::new();
        let mut pm = Vec::new();
        for v in 0..nv {
            let d = part.dims[v];
            let mut i = Matrix::zeros(p, totals[v], d);
            let mut q = Matrix::zeros(p, d, totals[v]);
            for k in 0..d {
                i.set(off[v] + k, k, 1);
                q.set(k, off[v] + k, 1);
            }
            im.push(i);
            pm.push(q);
            off[v] += d;
        }
        incl.push(Morphism { maps: im });
        proj.push(Morphism { maps: pm });
    }
    (incl, proj)
}

/// Result of a projective cover computation.
pub struct Cover {
    /// The projective module, a direct sum of `P(v)` for `v` in `tops`.
    pub module: Module,
    pub map: Morphism,
    pub tops: Vec<usize>,
    /// Images of the generators `e_v` of the summands.
    pub gens: Vec<Vec<u32>>,
}

/// Minimal projective cover.
pub fn projective_cover(alg: &Algebra, m: &Module) -> Cover {
    let rad = m.radical_subspaces(alg);
    let mut tops = Vec::new();
    let mut gens = Vec::new();
    for (v, r) in rad.iter().enumerate() {
        let s = Split::new(r);
        for c in 0..s.complement.cols() {
            tops.push(v);
            gens.push(s.complement.column(c));
        }
    }
    let projs: Vec<Module> = {
        let mut cache: Vec<Option<Module>> = vec![None; alg.num_vertices()];
        tops.iter()
            .map(|&v| {
                cache[v]
                    .get_or_insert_with(|| Module::projective(alg, v))
                    .clone()
            })
            .collect()
    };
    let refs: Vec<&Module> = projs.iter().collect();
    let module = Module::direct_sum(alg, &refs);
    let map = if tops.is_empty() {
        Morphism::zero(alg, &module, m)
    } else {
        let parts: Vec<Morphism> = tops
            .iter()
            .zip(&gens)
            .map(|(&v, x)| map_from_projective(alg, v, m, x))
            .collect();
        from_sum(alg, &parts)
    };
    Cover {
        module,
        map,
        tops,
        gens,
    }
}

/// First syzygy: kernel of the projective cover.
pub fn syzygy(alg: &Algebra, m: &Module) -> Module {
    let c = projective_cover(alg, m);
    kernel(alg, &c.module, &c.map).0
}

/// Injective envelope `M -> I`.
pub fn injective_envelope(alg: &Algebra, m: &Module) -> (Module, Morphism) {
    let op = alg.op();
    let c = projective_cover(&op, &m.dual());
    (c.module.dual(), c.map.transpose())
}

/// First cosyzygy: cokernel of the injective envelope.
pub fn cosyzygy(alg: &Algebra, m: &Module) -> Module {
    let (i, f) = injective_envelope(alg, m);
    cokernel(alg, &i, &f).0
}

/// Projective dimension, capped; `None` if the cap is reached.
pub fn projective_dimension(alg: &Algebra, m: &Module, cap: usize) -> Option<usize> {
    let mut cur = m.clone();
    if cur.is_zero() {
        return Some(0);
    }
    for k in 0..=cap {
        let next = syzygy(alg, &cur);
        if next.is_zero() {
            return Some(k);
        }
        cur = next;
    }
    None
}

/// Global dimension as the maximum projective dimension of the simples.
pub fn global_dimension(alg: &Algebra, cap: usize) -> Option<usize> {
    let mut best = 0;
    for v in 0..alg.num_vertices() {
        best = best.max(projective_dimension(alg, &Module::simple(alg, v), cap)?);
    }
    Some(best)
}

pub fn is_projective(alg: &Algebra, m: &Module) -> bool {
    projective_cover(alg, m).module.dim() == m.dim()
}

pub fn is_injective(alg: &Algebra, m: &Module) -> bool {
    is_projective(&alg.op(), &m.dual())
}

/// Minimal projective presentation `P1 -> P0 -> M -> 0`.
pub struct Presentation {
    pub p0: Cover,
    pub p1: Cover,
    /// `P1 -> P0`
    pub map: Morphism,
}

pub fn presentation(alg: &Algebra, m: &Module) -> Presentation {
    let p0 = projective_cover(alg, m);
    let (k, incl) = kernel(alg, &p0.module, &p0.map);
    let p1 = projective_cover(alg, &k);
    let map = incl.after(&p1.map);
    Presentation { p0, p1, map }
}

/// Components `f_{ji}` of a map between sums of indecomposable projectives:
/// the image of the generator of the `j`-th summand of the source, split
/// along the summands of the target, as coefficient vectors over
/// `between(u_i, v_j)`.
fn projective_map_components(alg: &Algebra, pres: &Presentation) -> Vec<Vec<Vec<u32>>> {
    let u = &pres.p0.tops;
    let v = &pres.p1.tops;
    let mut out = Vec::new();
    // offsets of summand j inside P1 at vertex v_j: generator is e_{v_j}
    let nv = alg.num_vertices();
    let mut off1 = vec![0usize; nv];
    for &vj in v {
        let mut gen = vec![0u32; pres.p1.module.dims()[vj]];
        gen[off1[vj] + alg.position(alg.idempotent(vj))] = 1;
        for w in 0..nv {
            off1[w] += alg.between(vj, w).len();
        }
        let img = pres.map.maps[vj].mul_vec(&gen);
        let mut comps = Vec::new();
        let mut off0 = 0;
        for &ui in u {
            let len = alg.between(ui, vj).len();
            comps.push(img[off0..off0 + len].to_vec());
            off0 += len;
        }
        out.push(comps);
    }
    out
}

/// Transpose `Tr M`, a module over the opposite algebra. `op` must be the
/// opposite of `alg` with the same basis indexing.
pub fn transpose(alg: &Algebra, op: &Algebra, m: &Module) -> Module {
    let pres = presentation(alg, m);
    if pres.p1.tops.is_empty() {
        return Module::zero(op);
    }
    let comps = projective_map_components(alg, &pres);
    let u = &pres.p0.tops;
    let v = &pres.p1.tops;
    let targets: Vec<Module> = v.iter().map(|&vj| Module::projective(op, vj)).collect();
    let trefs: Vec<&Module> = targets.iter().collect();
    let big = Module::direct_sum(op, &trefs);
    // the generator of P^op(u_i) goes to sum_j f_{ji}, which sits at vertex u_i
    let parts: Vec<Morphism> = u
        .iter()
        .enumerate()
        .map(|(i, &ui)| {
            let mut x = Vec::new();
            for (j, &vj) in v.iter().enumerate() {
                let block_len = op.between(vj, ui).len();
                debug_assert_eq!(block_len, comps[j][i].len());
                x.extend_from_slice(&comps[j][i]);
            }
            map_from_projective(op, ui, &big, &x)
        })
        .collect();
    let g = from_sum(op, &parts);
    cokernel(op, &big, &g).0
}

/// Auslander-Reiten translate `τ M = D Tr M`.
pub fn tau(alg: &Algebra, m: &Module) -> Module {
    transpose(alg, &alg.op(), m).dual()
}

/// Inverse translate `τ⁻¹ M = Tr D M`.
pub fn tau_inverse(alg: &Algebra, m: &Module) -> Module {
    transpose(&alg.op(), alg, &m.dual())
}

/// Nakayama-functor route to `τ M`: the kernel of `ν P1 -> ν P0`, with `ν P(v) = I(v)`.
/// Used as an independent check of [`tau`].
pub fn tau_via_nakayama(alg: &Algebra, m: &Module) -> Module {
    let pres = presentation(alg, m);
    if pres.p1.tops.is_empty() {
        return Module::zero(alg);
    }
    let op = alg.op();
    let comps = projective_map_components(alg, &pres);
    let u = &pres.p0.tops;
    let v = &pres.p1.tops;
    // ν P1 = ⊕ I(v_j) -> ν P0 = ⊕ I(u_i): built directly on dual bases.
    // I(w) = D(P^op(w)); the component I(v_j) -> I(u_i) is the dual of
    // P^op(u_i) -> P^op(v_j), e_{u_i} ↦ f_{ji}.
    let inj_src: Vec<Module> = v.iter().map(|&w| Module::injective(alg, w)).collect();
    let inj_tgt: Vec<Module> = u.iter().map(|&w| Module::injective(alg, w)).collect();
    let src = Module::direct_sum(alg, &inj_src.iter().collect::<Vec<_>>());
    let tgt = Module::direct_sum(alg, &inj_tgt.iter().collect::<Vec<_>>());
    let mut rows = Vec::new();
    for (i, &ui) in u.iter().enumerate() {
        let mut cols = Vec::new();
        for (j, &vj) in v.iter().enumerate() {
            let pv = Module::projective(&op, vj);
            let f = map_from_projective(&op, ui, &pv, &comps[j][i]);
            cols.push(f.transpose());
        }
        rows.push(from_sum(alg, &cols));
    }
    let nu = into_sum(alg, &rows);
    debug_assert!(nu.is_homomorphism(alg, &src, &tgt));
    kernel(alg, &src, &nu).0
}

/// `dim Ext¹(M, N)` computed from a projective cover `0 -> ΩM -> P0 -> M -> 0`.
pub fn ext1_dim(alg: &Algebra, m: &Module, n: &Module) -> usize {
    ext1_data(alg, m, n).classes.len()
}

/// Representatives of a basis of `Ext¹(M, N)` as maps `ΩM -> N`, with the
/// cover data needed to realize them.
pub struct Ext1Data {
    pub omega: Module,
    pub incl: Morphism,
    pub cover: Cover,
    pub classes: Vec<Morphism>,
}

pub fn ext1_data(alg: &Algebra, m: &Module, n: &Module) -> Ext1Data {
    let cover = projective_cover(alg, m);
    let (omega, incl) = kernel(alg, &cover.module, &cover.map);
    let hom_omega = hom_basis(alg, &omega, n);
    let hom_p0 = hom_basis(alg, &cover.module, n);
    let nvars = hom_omega.first().map_or(0, |h| h.to_vec().len());
    let mut rr = RowReducer::new(alg.p(), nvars.max(1));
    if nvars > 0 {
        for g in &hom_p0 {
            rr.insert(g.after(&incl).to_vec());
        }
    }
    let mut classes = Vec::new();
    for h in hom_omega {
        if rr.insert(h.to_vec()) {
            classes.push(h);
        }
    }
    Ext1Data {
        omega,
        incl,
        cover,
        classes,
    }
}

/// A short exact sequence `0 -> N -> E -> M -> 0`.
pub struct Extension {
    pub middle: Module,
    pub inj: Morphism,
    pub proj: Morphism,
}

/// Realize the extension class `sum coeffs[i] * class_i` by a pushout along `ΩM -> P0`.
pub fn realize_extension(alg: &Algebra, m: &Module, n: &Module, data: &Ext1Data, coeffs: &[u32]) -> Result<Extension> {
    if coeffs.len() != data.classes.len() {
        return Err(Error::input(format!(
            "expected {} class coefficients, got {}",
            data.classes.len(),
            coeffs.len()
        )));
    }
    let phi = Morphism::combine(alg, &data.omega, n, &data.classes, coeffs);
    let sum = Module::direct_sum(alg, &[n, &data.cover.module]);
    // ΩM -> N ⊕ P0, x ↦ (φ x, -ι x)
    let g = into_sum(alg, &[phi, data.incl.scale(alg.p() - 1)]);
    let (e, q) = cokernel(alg, &sum, &g);
    let (incls, _) = sum_injections(alg, &[n, &data.cover.module]);
    let inj = q.after(&incls[0]);
    // E -> M induced by (0, π)
    let zero_n = Morphism::zero(alg, n, m);
    let to_m = from_sum(alg, &[zero_n, data.cover.map.clone()]);
    // factor to_m through q: q has a section given by the complement basis
    let section = Morphism {
        maps: sum
            .dims()
            .iter()
            .enumerate()
            .map(|(v, _)| {
                let qm = &q.maps[v];
                // right inverse of a surjective matrix
                qm.solve_matrix(&Matrix::identity(alg.p(), qm.rows()))
                    .expect("shape")
                    .expect("quotient map is surjective")
            })
            .collect(),
    };
    let proj = to_m.after(&section);
    Ok(Extension {
        middle: e,
        inj,
        proj,
    })
}

/// Whether `0 -> N -> E -> M -> 0` splits: `id_N` factors through `inj`.
pub fn extension_splits(alg: &Algebra, n: &Module, ext: &Extension) -> bool {
    let homs = hom_basis(alg, &ext.middle, n);
    let target = Morphism::identity(alg, n).to_vec();
    let cols: Vec<Vec<u32>> = homs.iter().map(|h| h.after(&ext.inj).to_vec()).collect();
    if target.is_empty() {
        return true;
    }
    let a = Matrix::from_columns(alg.p(), target.len(), &cols);
    a.solve(&target).expect("shape").is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BasisElem;

    /// The path algebra of 1 <- 2 written out by hand.
    fn a2() -> Algebra {
        let basis = vec![
            BasisElem { source: 0, target: 0, idempotent: true, label: "e1".into() },
            BasisElem { source: 1, target: 1, idempotent: true, label: "e2".into() },
            BasisElem { source: 1, target: 0, idempotent: false, label: "a".into() },
        ];
        Algebra::new(7, vec!["1".into(), "2".into()], basis, |b, c| match (b, c) {
            (0, 0) => vec![(0, 1)],
            (1, 1) => vec![(1, 1)],
            (1, 2) => vec![(2, 1)],
            (2, 0) => vec![(2, 1)],
            _ => vec![],
        })
        .unwrap()
    }

    #[test]
    fn projectives_and_injectives() {
        let alg = a2();
        assert_eq!(alg.generators(), &[2]);
        assert_eq!(Module::projective(&alg, 0).dims(), &[1, 0]);
        assert_eq!(Module::projective(&alg, 1).dims(), &[1, 1]);
        assert_eq!(Module::injective(&alg, 0).dims(), &[1, 1]);
        assert_eq!(Module::injective(&alg, 1).dims(), &[0, 1]);
        for v in 0..2 {
            Module::projective(&alg, v).validate(&alg).unwrap();
            Module::injective(&alg, v).validate(&alg).unwrap();
        }
    }

    #[test]
    fn hom_dims() {
        let alg = a2();
        let p1 = Module::projective(&alg, 0);
        let p2 = Module::projective(&alg, 1);
        assert_eq!(hom_dim(&alg, &p1, &p2), 1);
        assert_eq!(hom_dim(&alg, &p2, &p1), 0);
        let s2 = Module::simple(&alg, 1);
        assert_eq!(hom_dim(&alg, &p2, &s2), 1);
    }

    #[test]
    fn tau_of_simple_injective() {
        let alg = a2();
        let s2 = Module::simple(&alg, 1);
        let t = tau(&alg, &s2);
        assert_eq!(t.dims(), &[1, 0]);
        assert_eq!(tau_via_nakayama(&alg, &s2).dims(), &[1, 0]);
        assert_eq!(tau_inverse(&alg, &t).dims(), &[0, 1]);
        assert!(tau(&alg, &Module::projective(&alg, 1)).is_zero());
    }

    #[test]
    fn syzygy_and_gldim() {
        let alg = a2();
        let s2 = Module::simple(&alg, 1);
        assert_eq!(syzygy(&alg, &s2).dims(), &[1, 0]);
        assert_eq!(global_dimension(&alg, 10), Some(1));
        assert_eq!(cosyzygy(&alg, &Module::simple(&alg, 0)).dims(), &[0, 1]);
    }

    #[test]
    fn ext_between_simples() {
        let alg = a2();
        let s1 = Module::simple(&alg, 0);
        let s2 = Module::simple(&alg, 1);
        assert_eq!(ext1_dim(&alg, &s2, &s1), 1);
        assert_eq!(ext1_dim(&alg, &s1, &s2), 0);
        let data = ext1_data(&alg, &s2, &s1);
        let e = realize_extension(&alg, &s2, &s1, &data, &[1]).unwrap();
        assert_eq!(e.middle.dims(), &[1, 1]);
        assert!(!extension_splits(&alg, &s1, &e));
        let z = realize_extension(&alg, &s2, &s1, &data, &[0]).unwrap();
        assert!(extension_splits(&alg, &s1, &z));
    }
}
