//! Exact characteristic polynomials (Berkowitz, division free) and real-root
//! isolation by Sturm sequences over the rationals.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::SymMatrix;

/// Coefficients of `det(xI - M)`, highest power first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Highest power first; `coeffs()[0] == 1`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty() && coeffs[0].is_one(),
            "char poly must be monic"
        );
        CharPoly { coeffs }
    }

    /// Exact evaluation at an integer.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .fold(<BigInt as Zero>::zero(), |acc, c| acc * x + c)
    }

    /// All real roots with multiplicity, descending, each within `tol`.
    ///
    /// The polynomial of a symmetric matrix splits over the reals, so the
    /// result has `degree()` entries.
    pub fn real_roots(&self, tol: f64) -> Vec<f64> {
        let p: Poly = self
            .coeffs
            .iter()
            .rev()
            .map(|c| BigRational::from(c.clone()))
            .collect();
        let tol = rational_from_f64(tol);
        let mut roots = Vec::with_capacity(self.degree());
        for (mult, factor) in square_free(&p) {
            for r in isolate_roots(&factor, &tol) {
                roots.extend(core::iter::repeat_n(r, mult));
            }
        }
        roots.sort_unstable_by(|a, b| b.total_cmp(a));
        roots
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            let pow = n - i;
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let unit = mag.is_one();
            match (pow, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{pow}")?,
                (_, false) => write!(f, "{mag}x^{pow}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
}

/// Checked 128-bit integers; `None` records an overflow.
#[derive(Clone, Copy, Debug)]
struct Ck(Option<i128>);

impl Ring for Ck {
    fn zero() -> Self {
        Ck(Some(0))
    }
    fn one() -> Self {
        Ck(Some(1))
    }
    fn from_i64(v: i64) -> Self {
        Ck(Some(v as i128))
    }
    fn add(&self, o: &Self) -> Self {
        Ck(self.0.zip(o.0).and_then(|(a, b)| a.checked_add(b)))
    }
    fn mul(&self, o: &Self) -> Self {
        Ck(self.0.zip(o.0).and_then(|(a, b)| a.checked_mul(b)))
    }
    fn neg(&self) -> Self {
        Ck(self.0.and_then(i128::checked_neg))
    }
    fn is_zero(&self) -> bool {
        self.0 == Some(0)
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Sparse rows: `(column, value)` pairs in ascending column order.
fn sparse_rows(m: &SymMatrix) -> Vec<Vec<(usize, i64)>> {
    let n = m.order();
    (0..n)
        .map(|i| {
            (0..n)
                .filter_map(|j| Some((j, m.get(i, j))).filter(|p| p.1 != 0))
                .collect()
        })
        .collect()
}

/// Berkowitz over the trailing principal submatrices `M[t.., t..]`.
fn berkowitz<R: Ring>(rows: &[Vec<(usize, i64)>]) -> Vec<R> {
    let n = rows.len();
    if n == 0 {
        return vec![R::one()];
    }
    let entry = |i: usize, j: usize| -> i64 {
        rows[i]
            .binary_search_by_key(&j, |p| p.0)
            .map_or(0, |k| rows[i][k].1)
    };
    let mut poly = vec![R::one(), R::from_i64(entry(n - 1, n - 1)).neg()];
    for t in (0..n - 1).rev() {
        let s = n - t;
        // diags[0] = 1, diags[1] = -a, diags[j+2] = -R A^j C.
        let mut diags = Vec::with_capacity(s + 1);
        diags.push(R::one());
        diags.push(R::from_i64(entry(t, t)).neg());
        // v = C, a column of length s-1 indexed by t+1..n.
        let mut v: Vec<R> = (t + 1..n).map(|i| R::from_i64(entry(i, t))).collect();
        for j in 0..s - 1 {
            if j > 0 {
                let mut w = vec![R::zero(); s - 1];
                for (wi, i) in w.iter_mut().zip(t + 1..n) {
                    let mut acc = R::zero();
                    for &(c, a) in rows[i].iter().filter(|p| p.0 > t) {
                        let x = &v[c - t - 1];
                        if !x.is_zero() {
                            acc = acc.add(&x.mul(&R::from_i64(a)));
                        }
                    }
                    *wi = acc;
                }
                v = w;
            }
            let mut dot = R::zero();
            for &(c, a) in rows[t].iter().filter(|p| p.0 > t) {
                dot = dot.add(&v[c - t - 1].mul(&R::from_i64(a)));
            }
            diags.push(dot.neg());
        }
        let mut next = vec![R::zero(); s + 1];
        for (i, out) in next.iter_mut().enumerate() {
            let mut acc = R::zero();
            for (j, p) in poly.iter().enumerate().take(i + 1) {
                let d = &diags[i - j];
                if !d.is_zero() && !p.is_zero() {
                    acc = acc.add(&d.mul(p));
                }
            }
            *out = acc;
        }
        poly = next;
    }
    poly
}

/// Exact characteristic polynomial. Runs in checked `i128` and redoes the
/// computation with big integers if any intermediate overflows.
pub fn char_poly(m: &SymMatrix) -> CharPoly {
    let rows = sparse_rows(m);
    let fast: Vec<Ck> = berkowitz(&rows);
    let coeffs = if fast.iter().all(|c| c.0.is_some()) {
        fast.into_iter()
            .map(|c| BigInt::from(c.0.unwrap()))
            .collect()
    } else {
        berkowitz::<BigInt>(&rows)
    };
    CharPoly { coeffs }
}

#[cfg(test)]
pub(crate) fn char_poly_bigint(m: &SymMatrix) -> CharPoly {
    CharPoly {
        coeffs: berkowitz::<BigInt>(&sparse_rows(m)),
    }
}

// Rational polynomials, lowest power first, no trailing zeros.
type Poly = Vec<BigRational>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn deg(p: &Poly) -> usize {
    p.len().saturating_sub(1)
}

fn derivative(p: &Poly) -> Poly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect(),
    )
}

fn sub(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let z = BigRational::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
            .collect(),
    )
}

fn div_rem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = a.clone();
    if a.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead = b.last().unwrap();
    let mut q = vec![BigRational::zero(); a.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / lead;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &c * bc;
        }
        q[shift] = c;
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

fn monic(p: Poly) -> Poly {
    let lead = p.last().cloned().expect("nonzero polynomial");
    p.into_iter().map(|c| c / &lead).collect()
}

fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let (_, r) = div_rem(&a, &b);
        a = b;
        b = r;
    }
    monic(a)
}

fn exact_div(a: &Poly, b: &Poly) -> Poly {
    let (q, r) = div_rem(a, b);
    debug_assert!(r.is_empty());
    q
}

/// Yun's algorithm: `p = prod a_i^i` with squarefree, coprime `a_i`.
fn square_free(p: &Poly) -> Vec<(usize, Poly)> {
    let mut out = Vec::new();
    if deg(p) == 0 {
        return out;
    }
    let dp = derivative(p);
    let a0 = gcd(p, &dp);
    let mut b = exact_div(p, &a0);
    let c = exact_div(&dp, &a0);
    let mut d = sub(&c, &derivative(&b));
    let mut i = 1;
    while deg(&b) > 0 {
        let a = if d.is_empty() {
            monic(b.clone())
        } else {
            gcd(&b, &d)
        };
        b = exact_div(&b, &a);
        let c = exact_div(&d, &a);
        d = sub(&c, &derivative(&b));
        if deg(&a) > 0 {
            out.push((i, a));
        }
        i += 1;
    }
    out
}

fn eval(p: &Poly, x: &BigRational) -> BigRational {
    p.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), derivative(p)];
    loop {
        let n = chain.len();
        if chain[n - 1].is_empty() {
            chain.pop();
            break;
        }
        let (_, r) = div_rem(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(r.into_iter().map(|c| -c).collect());
    }
    chain
}

fn sign_changes(chain: &[Poly], x: &BigRational) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for p in chain {
        let v = eval(p, x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

fn rational_from_f64(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite tolerance")
}

/// Distinct real roots of a squarefree polynomial, refined to width `tol`.
fn isolate_roots(p: &Poly, tol: &BigRational) -> Vec<f64> {
    let chain = sturm_chain(p);
    // Cauchy bound: every root lies in (-bound, bound).
    let lead = p.last().unwrap().abs();
    let bound = p[..p.len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .fold(BigRational::zero(), |m, c| if c > m { c } else { m })
        + BigRational::one();
    let count =
        |lo: &BigRational, hi: &BigRational| sign_changes(&chain, lo) - sign_changes(&chain, hi);
    let two = BigRational::from_integer(BigInt::from(2));
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        match count(&lo, &hi) {
            0 => {}
            1 => {
                let (mut lo, mut hi) = (lo, hi);
                while &hi - &lo > *tol {
                    let mid = (&lo + &hi) / &two;
                    if count(&lo, &mid) == 1 {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                out.push(hi.to_f64().expect("finite root"));
            }
            _ => {
                let mid = (&lo + &hi) / &two;
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    out
}
