//! Endomorphism rings: locality certificates, Fitting splitting into
//! indecomposable summands, and isomorphism tests.
//!
//! Randomness only steers which endomorphism is tried for splitting; every
//! verdict is certified. A module is declared indecomposable only after its
//! endomorphism ring modulo an explicitly computed nilpotent ideal is shown
//! to be a field.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Matrix, RowReducer};
use crate::module::{hom_basis, Module, Morphism};
use crate::poly::{self, Poly};

/// Certified structure of a local endomorphism ring.
#[derive(Clone, Debug)]
pub struct LocalData {
    /// Basis of `End(X)`.
    pub end_basis: Vec<Morphism>,
    /// Basis of the radical `J(End X)`.
    pub rad_basis: Vec<Morphism>,
    /// `End(X)/J` is the field with `p^residue_degree` elements.
    pub residue_degree: usize,
}

impl LocalData {
    /// Membership test for the radical.
    pub fn in_radical(&self, f: &Morphism) -> bool {
        if self.rad_basis.is_empty() {
            return f.is_zero();
        }
        let v = f.to_vec();
        let mut rr = RowReducer::new(f.maps[0].p(), v.len());
        for j in &self.rad_basis {
            rr.insert(j.to_vec());
        }
        rr.contains(&v)
    }
}

/// Outcome of analysing one module.
pub enum Analysis {
    Zero,
    Local(LocalData),
    /// Two complementary nonzero submodules, given by per-vertex bases.
    Split(Vec<Matrix>, Vec<Matrix>),
}

/// Random attempts before giving up on a module that is neither certified
/// local nor split. Each attempt fails with probability well below 1/2.
const MAX_ATTEMPTS: usize = 200;

pub fn analyze(alg: &Algebra, m: &Module, rng: &mut ChaCha8Rng) -> Result<Analysis> {
    if m.is_zero() {
        return Ok(Analysis::Zero);
    }
    let end = hom_basis(alg, m, m);
    analyze_with(alg, m, end, rng)
}

pub fn analyze_with(alg: &Algebra, m: &Module, end: Vec<Morphism>, rng: &mut ChaCha8Rng) -> Result<Analysis> {
    let p = alg.p();
    if end.len() == 1 {
        return Ok(Analysis::Local(LocalData {
            end_basis: end,
            rad_basis: vec![],
            residue_degree: 1,
        }));
    }
    let mut degrees = Vec::new();
    for f in &end {
        match try_split(f, m)? {
            Trial::Split(u, w) => return Ok(Analysis::Split(u, w)),
            Trial::Primary(d) => degrees.push(d),
        }
    }
    if let Some(local) = certify_local(alg, m, &end, &degrees)? {
        return Ok(Analysis::Local(local));
    }
    for _ in 0..MAX_ATTEMPTS {
        let cs: Vec<u32> = (0..end.len()).map(|_| rng.gen_range(0..p)).collect();
        let f = Morphism::combine(alg, m, m, &end, &cs);
        if let Trial::Split(u, w) = try_split(&f, m)? {
            return Ok(Analysis::Split(u, w));
        }
    }
    Err(Error::Budget(format!(
        "no splitting endomorphism found for a module of dimension {:?}",
        m.dims()
    )))
}

enum Trial {
    Split(Vec<Matrix>, Vec<Matrix>),
    /// All vertex characteristic polynomials are powers of one irreducible of this degree.
    Primary(usize),
}

fn try_split(f: &Morphism, m: &Module) -> Result<Trial> {
    let mut factors: Vec<Poly> = Vec::new();
    for fv in &f.maps {
        if fv.rows() == 0 {
            continue;
        }
        for (g, _) in poly::factor_char_poly(fv)? {
            if !factors.contains(&g) {
                factors.push(g);
            }
        }
    }
    factors.sort_by(|a, b| (a.deg(), a.coeffs()).cmp(&(b.deg(), b.coeffs())));
    if factors.len() <= 1 {
        return Ok(Trial::Primary(factors.first().map_or(1, |g| g.deg())));
    }
    let g = &factors[0];
    let n = m.dim() as u64;
    let mut u = Vec::new();
    let mut w = Vec::new();
    for fv in &f.maps {
        let h = g.eval_matrix(fv).pow(n);
        u.push(h.kernel());
        w.push(crate::field::column_space(&h));
    }
    Ok(Trial::Split(u, w))
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Try to prove `End(M)` local. Returns `None` when the candidate ideal
/// fails one of the checks (then `End(M)` is not local).
fn certify_local(alg: &Algebra, m: &Module, end: &[Morphism], degrees: &[usize]) -> Result<Option<LocalData>> {
    let p = alg.p();
    let n = m.dim();
    let r = degrees.iter().copied().fold(1, lcm);
    // N: a multiple of r with p^N >= n
    let mut big_n = r;
    while (p as f64).powi(big_n as i32) < n as f64 {
        big_n += r;
    }
    let nvars = end[0].to_vec().len();
    let mut rr = RowReducer::new(p, nvars);
    let mut jb: Vec<Morphism> = Vec::new();
    let push = |f: Morphism, rr: &mut RowReducer, jb: &mut Vec<Morphism>| {
        if !f.is_zero() && rr.insert(f.to_vec()) {
            jb.push(f);
        }
    };
    for f in end {
        let mut fp = f.clone();
        for _ in 0..big_n {
            fp = Morphism {
                maps: fp.maps.iter().map(|x| x.pow(p as u64)).collect(),
            };
        }
        push(f.sub(&fp), &mut rr, &mut jb);
    }
    for (i, f) in end.iter().enumerate() {
        for g in &end[i + 1..] {
            push(f.after(g).sub(&g.after(f)), &mut rr, &mut jb);
        }
    }
    // two-sided ideal closure
    let mut idx = 0;
    while idx < jb.len() {
        if jb.len() >= end.len() {
            return Ok(None);
        }
        let j = jb[idx].clone();
        for e in end {
            push(e.after(&j), &mut rr, &mut jb);
            push(j.after(e), &mut rr, &mut jb);
        }
        idx += 1;
    }
    if end.len() - jb.len() != r {
        return Ok(None);
    }
    // nilpotency: powers of the ideal reach zero
    let mut power = jb.clone();
    let mut steps = 0;
    while !power.is_empty() {
        steps += 1;
        if steps > n + 1 {
            return Ok(None);
        }
        let mut prr = RowReducer::new(p, nvars);
        let mut next = Vec::new();
        for a in &power {
            for b in &jb {
                let c = a.after(b);
                if !c.is_zero() && prr.insert(c.to_vec()) {
                    next.push(c);
                }
            }
        }
        power = next;
    }
    // the quotient is generated by a single element of degree r
    if r > 1 {
        let ok = end.iter().any(|g| {
            let mut q = RowReducer::new(p, nvars);
            for j in &jb {
                q.insert(j.to_vec());
            }
            let mut pw = Morphism::identity(alg, m);
            for _ in 0..r {
                if !q.insert(pw.to_vec()) {
                    return false;
                }
                pw = pw.after(g);
            }
            true
        });
        if !ok {
            return Ok(None);
        }
    }
    Ok(Some(LocalData {
        end_basis: end.to_vec(),
        rad_basis: jb,
        residue_degree: r,
    }))
}

/// Indecomposable summands (with repetition) together with their certificates.
pub fn decompose(alg: &Algebra, m: &Module, seed: u64) -> Result<Vec<(Module, LocalData)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut work = vec![m.clone()];
    while let Some(x) = work.pop() {
        match analyze(alg, &x, &mut rng)? {
            Analysis::Zero => {}
            Analysis::Local(l) => out.push((x, l)),
            Analysis::Split(u, w) => {
                work.push(x.submodule(alg, &w));
                work.push(x.submodule(alg, &u));
            }
        }
    }
    Ok(out)
}

/// Indecomposable summands with their inclusions into `M` (`M ≅ ⊕` of them).
pub fn decompose_with_maps(
    alg: &Algebra,
    m: &Module,
    seed: u64,
) -> Result<Vec<(Module, LocalData, Morphism)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut work = vec![(m.clone(), Morphism::identity(alg, m))];
    while let Some((x, incl)) = work.pop() {
        match analyze(alg, &x, &mut rng)? {
            Analysis::Zero => {}
            Analysis::Local(l) => out.push((x, l, incl)),
            Analysis::Split(u, w) => {
                for basis in [w, u] {
                    let sub = x.submodule(alg, &basis);
                    let i = Module::submodule_inclusion(&basis);
                    work.push((sub, incl.after(&i)));
                }
            }
        }
    }
    Ok(out)
}

/// An isomorphism `X -> Y` between indecomposables, if one exists.
pub fn iso_indec(alg: &Algebra, x: &Module, y: &Module) -> Option<Morphism> {
    if x.dims() != y.dims() {
        return None;
    }
    if x.is_zero() {
        return Some(Morphism::zero(alg, x, y));
    }
    let xy = hom_basis(alg, x, y);
    if xy.is_empty() {
        return None;
    }
    // cheap first pass: some basis element may already be invertible
    if let Some(f) = xy.iter().find(|f| f.is_iso()) {
        return Some(f.clone());
    }
    let yx = hom_basis(alg, y, x);
    for f in &xy {
        for g in &yx {
            if g.after(f).is_iso() {
                return Some(f.clone());
            }
        }
    }
    None
}

/// General isomorphism test by comparing decompositions.
pub fn is_iso(alg: &Algebra, m: &Module, n: &Module, seed: u64) -> Result<bool> {
    if m.dims() != n.dims() {
        return Ok(false);
    }
    let a = decompose(alg, m, seed)?;
    let mut b: Vec<Module> = decompose(alg, n, seed)?.into_iter().map(|x| x.0).collect();
    if a.len() != b.len() {
        return Ok(false);
    }
    for (x, _) in &a {
        match b.iter().position(|y| iso_indec(alg, x, y).is_some()) {
            Some(i) => {
                b.swap_remove(i);
            }
            None => return Ok(false),
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BasisElem;

    fn kronecker(p: u32) -> Algebra {
        let basis = vec![
            BasisElem { source: 0, target: 0, idempotent: true, label: "e1".into() },
            BasisElem { source: 1, target: 1, idempotent: true, label: "e2".into() },
            BasisElem { source: 1, target: 0, idempotent: false, label: "a".into() },
            BasisElem { source: 1, target: 0, idempotent: false, label: "b".into() },
        ];
        Algebra::new(p, vec!["1".into(), "2".into()], basis, |b, c| match (b, c) {
            (0, 0) => vec![(0, 1)],
            (1, 1) => vec![(1, 1)],
            (1, x) if x >= 2 => vec![(x, 1)],
            (x, 0) if x >= 2 => vec![(x, 1)],
            _ => vec![],
        })
        .unwrap()
    }

    fn rep(alg: &Algebra, d1: usize, d2: usize, a: &[Vec<i64>], b: &[Vec<i64>]) -> Module {
        let p = alg.p();
        let ma = Matrix::from_rows_shaped(p, d1, d2, a).unwrap();
        let mb = Matrix::from_rows_shaped(p, d1, d2, b).unwrap();
        Module::from_generators(alg, vec![d1, d2], &[(2, ma), (3, mb)]).unwrap()
    }

    #[test]
    fn regular_module_with_irreducible_parameter_is_local_of_degree_two() {
        // over F_3, a = I, b = companion of x^2 + 1 gives a degree-2 point
        let alg = kronecker(3);
        let m = rep(&alg, 2, 2, &[vec![1, 0], vec![0, 1]], &[vec![0, -1], vec![1, 0]]);
        let d = decompose(&alg, &m, 0).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].1.residue_degree, 2);
    }

    #[test]
    fn split_parameters_decompose() {
        let alg = kronecker(3);
        let m = rep(&alg, 2, 2, &[vec![1, 0], vec![0, 1]], &[vec![1, 0], vec![0, 2]]);
        let d = decompose(&alg, &m, 0).unwrap();
        assert_eq!(d.len(), 2);
        assert!(iso_indec(&alg, &d[0].0, &d[1].0).is_none());
        // a repeated point: End contains M_2(F_p)
        let m2 = rep(&alg, 2, 2, &[vec![1, 0], vec![0, 1]], &[vec![1, 0], vec![0, 1]]);
        let d2 = decompose(&alg, &m2, 0).unwrap();
        assert_eq!(d2.len(), 2);
        assert!(iso_indec(&alg, &d2[0].0, &d2[1].0).is_some());
    }

    #[test]
    fn jordan_block_is_local() {
        let alg = kronecker(5);
        let m = rep(&alg, 2, 2, &[vec![1, 0], vec![0, 1]], &[vec![2, 1], vec![0, 2]]);
        let d = decompose(&alg, &m, 0).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].1.rad_basis.len(), 1);
    }

    #[test]
    fn iso_detects_sums() {
        let alg = kronecker(7);
        let s1 = Module::simple(&alg, 0);
        let p2 = Module::projective(&alg, 1);
        let a = Module::direct_sum(&alg, &[&s1, &p2]);
        let b = Module::direct_sum(&alg, &[&p2, &s1]);
        assert!(is_iso(&alg, &a, &b, 0).unwrap());
        let s2 = Module::simple(&alg, 1);
        let c = Module::direct_sum(&alg, &[&s1, &s1, &s2]);
        assert!(!is_iso(&alg, &p2, &Module::direct_sum(&alg, &[&s1, &s1, &s2]), 0).unwrap());
        assert_eq!(c.dims(), p2.dims());
    }
}
