//! Univariate polynomials over F_p: characteristic polynomials and
//! factorization into irreducibles.
//!
//! Coefficients are stored lowest degree first with no trailing zeros, so the
//! zero polynomial is the empty vector.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{self, Matrix};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    p: u32,
    c: Vec<u32>,
}

impl Poly {
    pub fn new(p: u32, mut c: Vec<u32>) -> Poly {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly { p, c }
    }

    pub fn from_signed(p: u32, c: &[i64]) -> Poly {
        Poly::new(p, c.iter().map(|&v| field::reduce(p, v)).collect())
    }

    pub fn zero(p: u32) -> Poly {
        Poly { p, c: vec![] }
    }

    pub fn one(p: u32) -> Poly {
        Poly { p, c: vec![1] }
    }

    /// The monomial `x`.
    pub fn x(p: u32) -> Poly {
        Poly { p, c: vec![0, 1] }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lead(&self) -> u32 {
        *self.c.last().unwrap_or(&0)
    }

    pub fn is_one(&self) -> bool {
        self.c == [1]
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let li = field::inv(self.p, self.lead());
        self.scale(li)
    }

    pub fn scale(&self, s: u32) -> Poly {
        Poly::new(self.p, self.c.iter().map(|&a| field::mul(self.p, a, s)).collect())
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|i| {
                field::add(
                    self.p,
                    *self.c.get(i).unwrap_or(&0),
                    *o.c.get(i).unwrap_or(&0),
                )
            })
            .collect();
        Poly::new(self.p, c)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|i| {
                field::sub(
                    self.p,
                    *self.c.get(i).unwrap_or(&0),
                    *o.c.get(i).unwrap_or(&0),
                )
            })
            .collect();
        Poly::new(self.p, c)
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(self.p);
        }
        let p = self.p as u64;
        let mut acc = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u64 * b as u64) % p;
            }
        }
        Poly::new(self.p, acc.into_iter().map(|v| v as u32).collect())
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let p = self.p;
        let mut r = self.c.clone();
        let dd = d.c.len() - 1;
        if r.len() <= dd {
            return (Poly::zero(p), self.clone());
        }
        let li = field::inv(p, d.lead());
        let mut q = vec![0u32; r.len() - dd];
        for i in (0..q.len()).rev() {
            let coef = field::mul(p, r[i + dd], li);
            q[i] = coef;
            if coef == 0 {
                continue;
            }
            for j in 0..=dd {
                r[i + j] = field::sub(p, r[i + j], field::mul(p, coef, d.c[j]));
            }
        }
        r.truncate(dd);
        (Poly::new(p, q), Poly::new(p, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        let p = self.p;
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| field::mul(p, a, (i as u64 % p as u64) as u32))
            .collect();
        Poly::new(p, c)
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.rem(m);
        let mut acc = Poly::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    /// Evaluate at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, a: &Matrix) -> Matrix {
        let n = a.rows();
        let mut acc = Matrix::zeros(self.p, n, n);
        for &coef in self.c.iter().rev() {
            acc = acc.mul(a).add(&Matrix::scalar(self.p, n, coef));
        }
        acc
    }

    pub fn eval(&self, x: u32) -> u32 {
        let mut acc = 0;
        for &coef in self.c.iter().rev() {
            acc = field::add(self.p, field::mul(self.p, acc, x), coef);
        }
        acc
    }

    /// Human-readable rendering, highest degree first, e.g. `x^2 + 2*x + 1`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, &a) in self.c.iter().enumerate().rev() {
            if a == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            };
            terms.push(match (a, i) {
                (_, 0) => a.to_string(),
                (1, _) => mono,
                _ => format!("{a}*{mono}"),
            });
        }
        terms.join(" + ")
    }
}

impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

/// Characteristic polynomial `det(xI - A)` via reduction to upper Hessenberg form.
pub fn char_poly(a: &Matrix) -> Result<Poly> {
    if !a.is_square() {
        return Err(Error::input(format!(
            "characteristic polynomial of a non-square {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let p = a.p();
    let n = a.rows();
    let mut h: Vec<Vec<u32>> = (0..n).map(|r| a.row(r).to_vec()).collect();
    // similarity transform to Hessenberg form
    for c in 0..n.saturating_sub(2) {
        let Some(piv) = (c + 1..n).find(|&r| h[r][c] != 0) else {
            continue;
        };
        if piv != c + 1 {
            h.swap(piv, c + 1);
            for row in h.iter_mut() {
                row.swap(piv, c + 1);
            }
        }
        let iv = field::inv(p, h[c + 1][c]);
        for r in c + 2..n {
            let f = field::mul(p, h[r][c], iv);
            if f == 0 {
                continue;
            }
            // row_r -= f * row_{c+1}
            for j in 0..n {
                let v = field::mul(p, f, h[c + 1][j]);
                h[r][j] = field::sub(p, h[r][j], v);
            }
            // col_{c+1} += f * col_r
            for row in h.iter_mut() {
                let v = field::mul(p, f, row[r]);
                row[c + 1] = field::add(p, row[c + 1], v);
            }
        }
    }
    // recurrence on leading principal minors
    let mut polys: Vec<Poly> = vec![Poly::one(p)];
    for k in 0..n {
        let xk = Poly::new(p, vec![field::neg(p, h[k][k]), 1]);
        let mut next = xk.mul(&polys[k]);
        let mut prod = 1u32;
        for i in (0..k).rev() {
            prod = field::mul(p, prod, h[i + 1][i]);
            if prod == 0 {
                break;
            }
            let coef = field::mul(p, prod, h[i][k]);
            next = next.sub(&polys[i].scale(coef));
        }
        polys.push(next);
    }
    Ok(polys.pop().unwrap())
}

/// Squarefree decomposition: monic pairs `(g, e)` with `f = lc * prod g^e`, each `g` squarefree.
pub fn squarefree(f: &Poly) -> Vec<(Poly, u32)> {
    let p = f.p();
    let f = f.monic();
    if f.deg() == 0 {
        return vec![];
    }
    let mut out = Vec::new();
    sqf_rec(&f, 1, p, &mut out);
    out.sort();
    out
}

fn sqf_rec(f: &Poly, mult: u32, p: u32, out: &mut Vec<(Poly, u32)>) {
    if f.deg() == 0 {
        return;
    }
    let d = f.derivative();
    if d.is_zero() {
        // f = g(x^p) = g(x)^p over F_p
        let g = Poly::new(p, f.c.iter().step_by(p as usize).copied().collect());
        sqf_rec(&g, mult * p, p, out);
        return;
    }
    let mut c = f.gcd(&d);
    let mut w = f.divrem(&c).0;
    let mut i = 1;
    while w.deg() > 0 {
        let y = w.gcd(&c);
        let z = w.divrem(&y).0;
        if z.deg() > 0 {
            out.push((z.monic(), i * mult));
        }
        i += 1;
        w = y;
        c = c.divrem(&w).0;
    }
    if c.deg() > 0 {
        let g = Poly::new(p, c.c.iter().step_by(p as usize).copied().collect());
        sqf_rec(&g, mult * p, p, out);
    }
}

/// Distinct-degree factorization of a monic squarefree polynomial.
fn distinct_degree(f: &Poly) -> Vec<(Poly, usize)> {
    let p = f.p();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = Poly::x(p);
    let mut h = x.clone();
    let mut d = 0;
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.powmod(p as u64, &rest);
        let g = h.sub(&x).gcd(&rest);
        if g.deg() > 0 {
            out.push((g.clone(), d));
            rest = rest.divrem(&g).0;
            h = h.rem(&rest);
        }
    }
    if rest.deg() > 0 {
        let dd = rest.deg();
        out.push((rest, dd));
    }
    out
}

/// Equal-degree splitting (Cantor-Zassenhaus) of a monic squarefree
/// polynomial all of whose irreducible factors have degree `d`.
fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) {
    let n = f.deg();
    if n == d {
        out.push(f.clone());
        return;
    }
    let p = f.p();
    loop {
        let a = Poly::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.deg() == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        } else {
            // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
            let mut t = a.rem(f);
            let mut norm = t.clone();
            for _ in 1..d {
                t = t.powmod(p as u64, f);
                norm = norm.mul(&t).rem(f);
            }
            norm.powmod(((p - 1) / 2) as u64, f).sub(&Poly::one(p))
        };
        let g = b.gcd(f);
        if g.deg() > 0 && g.deg() < n {
            let h = f.divrem(&g).0.monic();
            equal_degree(&g, d, rng, out);
            equal_degree(&h, d, rng, out);
            return;
        }
    }
}

/// Factor a nonzero polynomial into monic irreducibles with multiplicity,
/// sorted by (degree, coefficients). The leading coefficient is dropped.
pub fn factor(f: &Poly) -> Vec<(Poly, u32)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut acc: Vec<(Poly, u32)> = Vec::new();
    for (g, e) in squarefree(f) {
        for (h, d) in distinct_degree(&g) {
            let mut pieces = Vec::new();
            equal_degree(&h, d, &mut rng, &mut pieces);
            for q in pieces {
                match acc.iter_mut().find(|(r, _)| *r == q) {
                    Some((_, m)) => *m += e,
                    None => acc.push((q, e)),
                }
            }
        }
    }
    acc.sort_by(|(a, _), (b, _)| (a.deg(), &a.c).cmp(&(b.deg(), &b.c)));
    acc
}

/// Factor the characteristic polynomial of a square matrix.
pub fn factor_char_poly(a: &Matrix) -> Result<Vec<(Poly, u32)>> {
    Ok(factor(&char_poly(a)?))
}

pub fn is_irreducible(f: &Poly) -> bool {
    let fs = factor(f);
    fs.len() == 1 && fs[0].1 == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: det(xI - A) by cofactor expansion with polynomial entries.
    fn det_poly(m: &[Vec<Poly>]) -> Poly {
        let n = m.len();
        let p = m[0][0].p();
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = Poly::zero(p);
        for j in 0..n {
            let minor: Vec<Vec<Poly>> = (1..n)
                .map(|r| (0..n).filter(|&c| c != j).map(|c| m[r][c].clone()).collect())
                .collect();
            let term = m[0][j].mul(&det_poly(&minor));
            acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    fn cofactor_char_poly(a: &Matrix) -> Poly {
        let p = a.p();
        let n = a.rows();
        let m: Vec<Vec<Poly>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let mut e = Poly::new(p, vec![field::neg(p, a.get(r, c))]);
                        if r == c {
                            e = e.add(&Poly::x(p));
                        }
                        e
                    })
                    .collect()
            })
            .collect();
        det_poly(&m)
    }

    fn expand(fs: &[(Poly, u32)], p: u32) -> Poly {
        fs.iter().fold(Poly::one(p), |acc, (g, e)| acc.mul(&g.pow(*e as u64)))
    }

    #[test]
    fn companion_of_x2_plus_1_over_f2() {
        let m = Matrix::from_rows(2, &[vec![0, 1], vec![1, 0]]).unwrap();
        let fs = factor_char_poly(&m).unwrap();
        assert_eq!(fs, vec![(Poly::from_signed(2, &[1, 1]), 2)]);
    }

    #[test]
    fn diagonal_over_f3() {
        let m = Matrix::from_rows(3, &[vec![1, 0], vec![0, -1]]).unwrap();
        let fs = factor_char_poly(&m).unwrap();
        assert_eq!(
            fs,
            vec![
                (Poly::from_signed(3, &[1, 1]), 1),
                (Poly::from_signed(3, &[-1, 1]), 1)
            ]
        );
    }

    #[test]
    fn non_square_rejected() {
        assert!(factor_char_poly(&Matrix::zeros(5, 2, 3)).is_err());
    }

    #[test]
    fn irreducible_quadratic_stays() {
        // x^2 + 1 is irreducible over F_3
        let f = Poly::from_signed(3, &[1, 0, 1]);
        assert!(is_irreducible(&f));
        assert!(!is_irreducible(&Poly::from_signed(5, &[1, 0, 1])));
    }

    #[test]
    fn squarefree_handles_pth_powers() {
        // (x+1)^3 (x^2+1) over F_3
        let p = 3;
        let f = Poly::from_signed(p, &[1, 1]).pow(3).mul(&Poly::from_signed(p, &[1, 0, 1]));
        let fs = factor(&f);
        assert_eq!(expand(&fs, p), f.monic());
        assert_eq!(fs.len(), 2);
    }

    proptest::proptest! {
        #[test]
        fn factorization_reexpands_to_cofactor_det(seed in 0u64..400, n in 1usize..7, pi in 0usize..4) {
            let p = [2u32, 3, 5, 32003][pi];
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            // small entries make repeated factors common
            let bound = p.min(3);
            let a = Matrix::from_fn(p, n, n, |_, _| rng.gen_range(0..bound));
            let cp = char_poly(&a).unwrap();
            proptest::prop_assert_eq!(&cp, &cofactor_char_poly(&a));
            let fs = factor(&cp);
            proptest::prop_assert_eq!(expand(&fs, p), cp);
            for (g, _) in &fs {
                proptest::prop_assert!(g.deg() >= 1);
                proptest::prop_assert_eq!(g.lead(), 1);
            }
        }
    }
}
