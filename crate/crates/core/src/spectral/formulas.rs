//! Closed-form spectra of total graphs of regular graphs, incidence-energy
//! bounds and the order/degree recurrences of regular iterates.

use alloc::vec::Vec;
use core::fmt;

use libm::sqrt;

use super::Spectrum;
use crate::transforms::Operator;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpectralError {
    /// The `-2` (or `2r-2`) eigenvalue would have negative or fractional
    /// multiplicity `n(r-2)/2`.
    Multiplicity { n: usize, r: usize },
    /// The supplied spectrum does not have `n` entries.
    SpectrumLength { expected: usize, got: usize },
    /// A square root of a negative quantity.
    NegativeRadicand { n: usize, r: usize, radicand: i64 },
    /// Degree of a line iterate dropped below zero, or a product overflowed.
    InvalidParams(&'static str),
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralError::Multiplicity { n, r } => {
                write!(f, "need r >= 2 and n(r-2)/2 integral, got n = {n}, r = {r}")
            }
            SpectralError::SpectrumLength { expected, got } => {
                write!(f, "spectrum has {got} values, expected {expected}")
            }
            SpectralError::NegativeRadicand { n, r, radicand } => write!(
                f,
                "bound undefined for n = {n}, r = {r}: radicand {radicand} is negative"
            ),
            SpectralError::InvalidParams(why) => f.write_str(why),
        }
    }
}

impl core::error::Error for SpectralError {}

/// `f1(x) = (2x + r - 2 + sqrt(4x + r^2 + 4)) / 2`.
pub fn f1(x: f64, r: f64) -> f64 {
    (2.0 * x + r - 2.0 + root(4.0 * x + r * r + 4.0)) / 2.0
}

/// `f2(x) = (2x + r - 2 - sqrt(4x + r^2 + 4)) / 2`.
pub fn f2(x: f64, r: f64) -> f64 {
    (2.0 * x + r - 2.0 - root(4.0 * x + r * r + 4.0)) / 2.0
}

fn root(x: f64) -> f64 {
    sqrt(x.max(0.0))
}

fn extra_multiplicity(spec: &Spectrum, n: usize, r: usize) -> Result<usize, SpectralError> {
    if spec.len() != n {
        return Err(SpectralError::SpectrumLength {
            expected: n,
            got: spec.len(),
        });
    }
    if r < 2 || !(n * (r - 2)).is_multiple_of(2) {
        return Err(SpectralError::Multiplicity { n, r });
    }
    Ok(n * (r - 2) / 2)
}

/// Adjacency spectrum of `T(G)` from the adjacency spectrum of an
/// `r`-regular `G` on `n` vertices.
pub fn total_adjacency_spectrum_formula(
    spec: &Spectrum,
    n: usize,
    r: usize,
) -> Result<Spectrum, SpectralError> {
    let extra = extra_multiplicity(spec, n, r)?;
    let rf = r as f64;
    let mut out: Vec<f64> = spec
        .values()
        .iter()
        .flat_map(|&l| [f1(l, rf), f2(l, rf)])
        .collect();
    out.extend(core::iter::repeat_n(-2.0, extra));
    Ok(Spectrum::new(out))
}

/// Signless Laplacian spectrum of `T(G)`, same hypotheses.
pub fn total_q_spectrum_formula(
    spec: &Spectrum,
    n: usize,
    r: usize,
) -> Result<Spectrum, SpectralError> {
    let extra = extra_multiplicity(spec, n, r)?;
    let rf = r as f64;
    let mut out: Vec<f64> = spec
        .values()
        .iter()
        .flat_map(|&l| {
            let s = root(4.0 * l + rf * rf + 4.0);
            [
                (5.0 * rf + 2.0 * l - 2.0 + s) / 2.0,
                (5.0 * rf + 2.0 * l - 2.0 - s) / 2.0,
            ]
        })
        .collect();
    out.extend(core::iter::repeat_n(2.0 * rf - 2.0, extra));
    Ok(Spectrum::new(out))
}

/// Lower and upper bounds on `IE(T(G))` for a connected `r`-regular `G` on
/// `n` vertices.
pub fn ie_total_bounds(n: usize, r: usize) -> (f64, f64) {
    let (nf, rf) = (n as f64, r as f64);
    let head = nf * (rf - 2.0) * root(2.0 * rf - 2.0) / 2.0;
    let upper = head + 2.0 * nf * sqrt(rf) + (nf - 1.0) * root(3.0 * rf - 2.0);
    let lower =
        head + (nf + 1.0) * sqrt(rf) + root(3.0 * rf - 2.0) + (nf - 1.0) * root(2.0 * rf - 2.0);
    (lower, upper)
}

/// Upper bound on the incidence energy of the line graph of an `r`-regular
/// graph on `n` vertices.
pub fn ie_line_bound(n: usize, r: usize) -> Result<f64, SpectralError> {
    let (ni, ri) = (n as i64, r as i64);
    let tail = (ni - 1) * ((3 * ri - 4) * (ni - 1) - ri);
    if tail < 0 {
        return Err(SpectralError::NegativeRadicand {
            n,
            r,
            radicand: tail,
        });
    }
    if ri < 2 {
        return Err(SpectralError::NegativeRadicand {
            n,
            r,
            radicand: 2 * ri - 4,
        });
    }
    let (nf, rf) = (n as f64, r as f64);
    Ok(nf * (rf - 2.0) / 2.0 * sqrt(2.0 * rf - 4.0) + sqrt(4.0 * rf - 4.0) + sqrt(tail as f64))
}

/// Bounds on `IE(T^k(G))`, `k >= 1`, written with the orders and degrees of
/// the last two total iterates: `(n_k, r_k)` and `(n_{k-1}, r_{k-1})`.
pub fn ie_total_iterate_bounds(n_k: u64, r_k: u64, n_prev: u64, r_prev: u64) -> (f64, f64) {
    let (nk, rk, np, rp) = (n_k as f64, r_k as f64, n_prev as f64, r_prev as f64);
    let head = (nk - 2.0 * np) * root(rk - 2.0);
    let mixed = root(rk + rp - 2.0);
    let upper = head + np * root(2.0 * rk) + (np - 1.0) * mixed;
    let lower = head + (np + 1.0) * root(rp) + mixed + (np - 1.0) * root(rk - 2.0);
    (lower, upper)
}

/// Orders and degrees of the iterates `op^i(G)`, `i = 0..=k`, of an
/// `r0`-regular graph on `n0` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularIterateParams {
    pub op: Operator,
    pub n0: u64,
    pub r0: u64,
    pub k: usize,
    /// `(n_i, r_i)` for `i = 0..=k`.
    pub levels: Vec<(u64, u64)>,
}

impl RegularIterateParams {
    pub fn order(&self) -> u64 {
        self.levels[self.k].0
    }

    pub fn degree(&self) -> u64 {
        self.levels[self.k].1
    }

    /// `(n_{k-1}, r_{k-1})`, absent for `k = 0`.
    pub fn previous(&self) -> Option<(u64, u64)> {
        self.k.checked_sub(1).map(|i| self.levels[i])
    }

    /// Edge count `n_i r_i / 2` of level `i`.
    pub fn size(&self, i: usize) -> u64 {
        let (n, r) = self.levels[i];
        n * r / 2
    }
}

const OVERFLOW: SpectralError = SpectralError::InvalidParams("iterate parameters overflow u64");

/// Closed forms: for total graphs `r_k = 2^k r0` and
/// `n_k = n0 / 2^k * prod_{i<k} (2^i r0 + 2)`; for line graphs
/// `r_k = 2^k r0 - 2^{k+1} + 2` and `n_k = n0 / 2^k * prod_{i<k} r_i`.
pub fn regular_iterate_params(
    n0: u64,
    r0: u64,
    k: usize,
    op: Operator,
) -> Result<RegularIterateParams, SpectralError> {
    if r0 < 1 {
        return Err(SpectralError::InvalidParams("r0 must be at least 1"));
    }
    let mut levels = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let pow = 1u128.checked_shl(i as u32).ok_or(OVERFLOW)?;
        let scaled = pow.checked_mul(r0 as u128).ok_or(OVERFLOW)?;
        let r = match op {
            Operator::Total => scaled,
            Operator::Line => {
                (scaled + 2)
                    .checked_sub(2 * pow)
                    .ok_or(SpectralError::InvalidParams(
                        "line iterate degree is negative",
                    ))?
            }
        };
        let mut num: u128 = n0 as u128;
        for j in 0..i {
            let pj = 1u128 << j;
            let factor = match op {
                Operator::Total => pj * r0 as u128 + 2,
                Operator::Line => pj * r0 as u128 + 2 - 2 * pj,
            };
            num = num.checked_mul(factor).ok_or(OVERFLOW)?;
        }
        assert!(num.is_multiple_of(pow), "non-integral order at level {i}");
        let n = u64::try_from(num / pow).map_err(|_| OVERFLOW)?;
        levels.push((n, u64::try_from(r).map_err(|_| OVERFLOW)?));
    }
    Ok(RegularIterateParams {
        op,
        n0,
        r0,
        k,
        levels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::complete;
    use crate::named::petersen;
    use crate::spectral::{adjacency, eigenvalues, signless_laplacian};
    use crate::transforms::{iterate, total_graph};

    const S2: f64 = core::f64::consts::SQRT_2;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12 * (1.0 + b.abs())
    }

    #[test]
    fn c4_adjacency_formula() {
        let spec = Spectrum::new([2.0, 0.0, 0.0, -2.0].into());
        let out = total_adjacency_spectrum_formula(&spec, 4, 2).unwrap();
        let expect = Spectrum::new([4.0, S2, S2, 0.0, -S2, -S2, -2.0, -2.0].into());
        assert!(out.approx_eq(&expect, 1e-12));
    }

    #[test]
    fn k3_q_formula() {
        let spec = eigenvalues(&adjacency(&complete(3).unwrap()));
        let out = total_q_spectrum_formula(&spec, 3, 2).unwrap();
        let expect = Spectrum::new([8.0, 4.0, 4.0, 4.0, 2.0, 2.0].into());
        assert!(out.approx_eq(&expect, 1e-12));
        let direct = eigenvalues(&signless_laplacian(
            &total_graph(&complete(3).unwrap()).graph,
        ));
        assert!(out.approx_eq(&direct, 1e-8));
    }

    #[test]
    fn k4_extra_multiplicity() {
        let spec = eigenvalues(&adjacency(&complete(4).unwrap()));
        let out = total_adjacency_spectrum_formula(&spec, 4, 3).unwrap();
        assert_eq!(out.len(), 10);
        // f2(-1) = -2 for each of the three eigenvalues -1, plus n(r-2)/2 = 2.
        assert_eq!(
            out.values()
                .iter()
                .filter(|&&x| (x + 2.0).abs() < 1e-9)
                .count(),
            3 + 2
        );
    }

    #[test]
    fn formula_preconditions() {
        let k2 = Spectrum::new([1.0, -1.0].into());
        assert_eq!(
            total_adjacency_spectrum_formula(&k2, 2, 1),
            Err(SpectralError::Multiplicity { n: 2, r: 1 })
        );
        let odd = Spectrum::new([3.0; 5].into());
        assert!(total_q_spectrum_formula(&odd, 5, 3).is_err());
        assert!(total_q_spectrum_formula(&odd, 4, 3).is_err());
    }

    #[test]
    fn total_bounds_examples() {
        let (lo, hi) = ie_total_bounds(2, 1);
        assert!(close(lo, 4.0) && close(hi, 5.0));
        let (lo, hi) = ie_total_bounds(3, 2);
        assert!(close(lo, 2.0 + 6.0 * S2) && close(hi, 4.0 + 6.0 * S2));
    }

    #[test]
    fn line_bound_examples() {
        // IE(L(K4)) = 6 + 4 sqrt 2 meets the bound at (4, 3).
        assert!(close(ie_line_bound(4, 3).unwrap(), 6.0 + 4.0 * S2));
        assert!(matches!(
            ie_line_bound(2, 1),
            Err(SpectralError::NegativeRadicand { .. })
        ));
    }

    #[test]
    fn iterate_params_examples() {
        let t = regular_iterate_params(4, 3, 2, Operator::Total).unwrap();
        assert_eq!((t.order(), t.degree()), (40, 12));
        assert_eq!(t.previous(), Some((10, 6)));
        let l = regular_iterate_params(10, 3, 2, Operator::Line).unwrap();
        assert_eq!((l.order(), l.degree()), (30, 6));
        let z = regular_iterate_params(7, 2, 0, Operator::Line).unwrap();
        assert_eq!((z.order(), z.degree(), z.previous()), (7, 2, None));
        assert!(regular_iterate_params(2, 1, 2, Operator::Line).is_err());
    }

    #[test]
    fn iterate_params_match_recurrences_and_construction() {
        for (g, r0) in [
            (complete(4).unwrap(), 3u64),
            (petersen(), 3),
            (complete(5).unwrap(), 4),
        ] {
            let n0 = g.order() as u64;
            for op in [Operator::Total, Operator::Line] {
                let p = regular_iterate_params(n0, r0, 3, op).unwrap();
                let (mut n, mut r) = (n0, r0);
                for i in 1..=3 {
                    (n, r) = match op {
                        Operator::Total => (n * (r + 2) / 2, 2 * r),
                        Operator::Line => (r * n / 2, 2 * r - 2),
                    };
                    assert_eq!(p.levels[i], (n, r));
                }
                for i in 0..=2 {
                    let Ok(it) = iterate(&g, op, i, 2000) else {
                        continue;
                    };
                    assert_eq!(it.graph.order() as u64, p.levels[i].0);
                    assert_eq!(it.graph.is_regular().map(|d| d as u64), Some(p.levels[i].1));
                }
            }
        }
    }
}
