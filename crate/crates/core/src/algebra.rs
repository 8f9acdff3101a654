//! Finite-dimensional basic algebras over F_p given by structure constants.
//!
//! An algebra is described by a basis in which every element `b` lies in a
//! single Peirce component `e_s A e_t` (`s = source(b)`, `t = target(b)`),
//! one basis element per vertex is the primitive idempotent `e_v`, and the
//! remaining basis elements span the Jacobson radical. Path algebras, the
//! replicated algebras and endomorphism algebras of basic modules all fit.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::{self, Matrix, RowReducer};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElem {
    pub source: usize,
    pub target: usize,
    pub idempotent: bool,
    pub label: String,
}

/// Sparse product: a list of `(basis index, coefficient)`.
pub type Sparse = Vec<(usize, u32)>;

pub struct Algebra {
    p: u32,
    vertex_labels: Vec<String>,
    basis: Vec<BasisElem>,
    mult: Vec<Vec<Sparse>>,
    idem: Vec<usize>,
    gens: Vec<usize>,
    between: Vec<Vec<Vec<usize>>>,
    pos: Vec<usize>,
    op: OnceLock<Arc<Algebra>>,
    words: OnceLock<Vec<Vec<(Vec<usize>, u32)>>>,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Algebra(p={}, vertices={}, dim={})",
            self.p,
            self.vertex_labels.len(),
            self.basis.len()
        )
    }
}

impl Algebra {
    /// `mult(b, c)` must return the product `b * c` as a sparse vector; it is
    /// only queried when `target(b) == source(c)`.
    pub fn new(
        p: u32,
        vertex_labels: Vec<String>,
        basis: Vec<BasisElem>,
        mut mult: impl FnMut(usize, usize) -> Sparse,
    ) -> Result<Algebra> {
        let nv = vertex_labels.len();
        let n = basis.len();
        let mut idem = vec![usize::MAX; nv];
        for (i, b) in basis.iter().enumerate() {
            if b.source >= nv || b.target >= nv {
                return Err(Error::input(format!("basis element {i} has an unknown vertex")));
            }
            if b.idempotent {
                if b.source != b.target || idem[b.source] != usize::MAX {
                    return Err(Error::input("idempotents must be one loop per vertex"));
                }
                idem[b.source] = i;
            }
        }
        if idem.contains(&usize::MAX) {
            return Err(Error::input("missing idempotent for some vertex"));
        }
        let mut table = vec![vec![Vec::new(); n]; n];
        for b in 0..n {
            for c in 0..n {
                if basis[b].target != basis[c].source {
                    continue;
                }
                let mut prod: Sparse = mult(b, c)
                    .into_iter()
                    .map(|(i, v)| (i, v % p))
                    .filter(|&(_, v)| v != 0)
                    .collect();
                prod.sort();
                for &(i, _) in &prod {
                    if basis[i].source != basis[b].source || basis[i].target != basis[c].target {
                        return Err(Error::input(format!(
                            "product of {} and {} leaves its Peirce component",
                            basis[b].label, basis[c].label
                        )));
                    }
                }
                table[b][c] = prod;
            }
        }
        let mut between = vec![vec![Vec::new(); nv]; nv];
        let mut pos = vec![0; n];
        for (i, b) in basis.iter().enumerate() {
            pos[i] = between[b.source][b.target].len();
            between[b.source][b.target].push(i);
        }
        let mut alg = Algebra {
            p,
            vertex_labels,
            basis,
            mult: table,
            idem,
            gens: Vec::new(),
            between,
            pos,
            op: OnceLock::new(),
            words: OnceLock::new(),
        };
        alg.check_idempotents()?;
        alg.gens = alg.compute_generators();
        Ok(alg)
    }

    fn check_idempotents(&self) -> Result<()> {
        for b in 0..self.dim() {
            let e_s = self.idem[self.basis[b].source];
            let e_t = self.idem[self.basis[b].target];
            if self.mult[e_s][b] != vec![(b, 1)] || self.mult[b][e_t] != vec![(b, 1)] {
                return Err(Error::input(format!(
                    "idempotents do not act as identities on {}",
                    self.basis[b].label
                )));
            }
        }
        Ok(())
    }

    /// Radical elements independent modulo the square of the radical.
    fn compute_generators(&self) -> Vec<usize> {
        let n = self.dim();
        let rad: Vec<usize> = (0..n).filter(|&b| !self.basis[b].idempotent).collect();
        let mut rr = RowReducer::new(self.p, n);
        for &b in &rad {
            for &c in &rad {
                if self.basis[b].target != self.basis[c].source {
                    continue;
                }
                let prod = &self.mult[b][c];
                if prod.is_empty() {
                    continue;
                }
                rr.insert(self.dense(prod));
            }
        }
        let mut gens = Vec::new();
        for &b in &rad {
            let mut v = vec![0; n];
            v[b] = 1;
            if rr.insert(v) {
                gens.push(b);
            }
        }
        gens
    }

    pub fn dense(&self, s: &Sparse) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        for &(i, c) in s {
            v[i] = field::add(self.p, v[i], c);
        }
        v
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertex_labels[v]
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }

    pub fn basis(&self) -> &[BasisElem] {
        &self.basis
    }

    pub fn elem(&self, b: usize) -> &BasisElem {
        &self.basis[b]
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.idem[v]
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn mul(&self, b: usize, c: usize) -> &Sparse {
        &self.mult[b][c]
    }

    /// Basis elements of `e_s A e_t`, in index order.
    pub fn between(&self, s: usize, t: usize) -> &[usize] {
        &self.between[s][t]
    }

    /// Position of `b` inside `between(source(b), target(b))`.
    pub fn position(&self, b: usize) -> usize {
        self.pos[b]
    }

    /// The opposite algebra, on the same basis with sources and targets swapped.
    pub fn op(&self) -> Arc<Algebra> {
        self.op
            .get_or_init(|| {
                let basis = self
                    .basis
                    .iter()
                    .map(|b| BasisElem {
                        source: b.target,
                        target: b.source,
                        idempotent: b.idempotent,
                        label: b.label.clone(),
                    })
                    .collect();
                let alg = Algebra::new(self.p, self.vertex_labels.clone(), basis, |b, c| {
                    self.mult[c][b].clone()
                })
                .expect("opposite of a valid algebra is valid");
                Arc::new(alg)
            })
            .clone()
    }

    /// Check `(bc)d = b(cd)` on all composable basis triples.
    pub fn check_associative(&self) -> Result<()> {
        let n = self.dim();
        for b in 0..n {
            for c in 0..n {
                if self.basis[b].target != self.basis[c].source {
                    continue;
                }
                for d in 0..n {
                    if self.basis[c].target != self.basis[d].source {
                        continue;
                    }
                    let left = self.mul_sparse(&self.mult[b][c], &[(d, 1)]);
                    let right = self.mul_sparse(&[(b, 1)], &self.mult[c][d]);
                    if left != right {
                        return Err(Error::anomaly(format!(
                            "associativity fails on ({}, {}, {})",
                            self.basis[b].label, self.basis[c].label, self.basis[d].label
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Product of two sparse elements, result sorted.
    pub fn mul_sparse(&self, x: &[(usize, u32)], y: &[(usize, u32)]) -> Sparse {
        let p = self.p;
        let mut acc = std::collections::BTreeMap::new();
        for &(b, u) in x {
            for &(c, v) in y {
                if self.basis[b].target != self.basis[c].source {
                    continue;
                }
                for &(d, w) in &self.mult[b][c] {
                    let e = acc.entry(d).or_insert(0u32);
                    *e = field::add(p, *e, field::mul(p, field::mul(p, u, v), w));
                }
            }
        }
        acc.into_iter().filter(|&(_, v)| v != 0).collect()
    }

    /// Each radical basis element as a linear combination of words in the
    /// generators (a word `[g1, g2, ...]` means the product `g1 g2 ...`).
    /// Idempotents map to the empty word.
    pub fn words(&self) -> &[Vec<(Vec<usize>, u32)>] {
        self.words.get_or_init(|| self.compute_words())
    }

    fn compute_words(&self) -> Vec<Vec<(Vec<usize>, u32)>> {
        let n = self.dim();
        let p = self.p;
        let mut kept: Vec<(Vec<usize>, Sparse)> = Vec::new();
        let mut rr = RowReducer::new(p, n);
        let mut queue: std::collections::VecDeque<(Vec<usize>, Sparse)> =
            self.gens.iter().map(|&g| (vec![g], vec![(g, 1)])).collect();
        let rad_dim = n - self.num_vertices();
        while let Some((w, v)) = queue.pop_front() {
            if rr.rank() == rad_dim {
                break;
            }
            if v.is_empty() || !rr.insert(self.dense(&v)) {
                continue;
            }
            let last = *w.last().unwrap();
            for &g in &self.gens {
                if self.basis[last].target != self.basis[g].source {
                    continue;
                }
                let nv = self.mul_sparse(&v, &[(g, 1)]);
                let mut nw = w.clone();
                nw.push(g);
                queue.push_back((nw, nv));
            }
            kept.push((w, v));
        }
        let cols: Vec<Vec<u32>> = kept.iter().map(|(_, v)| self.dense(v)).collect();
        let wm = Matrix::from_columns(p, n, &cols);
        (0..n)
            .map(|b| {
                if self.basis[b].idempotent {
                    return vec![(vec![], 1)];
                }
                let mut e = vec![0; n];
                e[b] = 1;
                let x = wm
                    .solve(&e)
                    .expect("shape")
                    .expect("generators span the radical");
                x.iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| (kept[i].0.clone(), c))
                    .collect()
            })
            .collect()
    }
}
