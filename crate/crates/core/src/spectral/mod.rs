//! Adjacency, signless Laplacian and incidence matrices; floating and exact
//! spectra; incidence energy; closed forms for total graphs of regular
//! graphs; cospectrality certificates.

mod charpoly;
mod eigen;
mod formulas;
mod matrix;

use alloc::vec::Vec;

pub use charpoly::{char_poly, CharPoly};
pub use eigen::symmetric_eigenvalues;
pub use formulas::{
    f1, f2, ie_line_bound, ie_total_bounds, ie_total_iterate_bounds, regular_iterate_params,
    total_adjacency_spectrum_formula, total_q_spectrum_formula, RegularIterateParams,
    SpectralError,
};
pub use matrix::{
    adjacency, incidence, signless_laplacian, IncidenceMatrix, IntMatrix, MatrixKind, SymMatrix,
};

use crate::graph::Graph;
use crate::iso::isomorphic;

/// Relative tolerance used to group equal eigenvalues for display.
pub const GROUPING_TOL: f64 = 1e-6;

/// Real eigenvalues sorted in descending order.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum(Vec<f64>);

impl Spectrum {
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_unstable_by(|a, b| b.total_cmp(a));
        Spectrum(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Elementwise comparison with `|a - b| <= tol * (1 + max(|a|, |b|))`.
    pub fn approx_eq(&self, other: &Spectrum, tol: f64) -> bool {
        self.len() == other.len()
            && self
                .0
                .iter()
                .zip(&other.0)
                .all(|(a, b)| (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs())))
    }

    /// Distinct values with multiplicities, for display only.
    pub fn grouped(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        for &x in &self.0 {
            match out.last_mut() {
                Some((v, m)) if (*v - x).abs() <= GROUPING_TOL * (1.0 + v.abs()) => *m += 1,
                _ => out.push((x, 1)),
            }
        }
        out
    }
}

pub fn eigenvalues(m: &SymMatrix) -> Spectrum {
    Spectrum(symmetric_eigenvalues(&m.to_f64(), m.order()))
}

/// Eigenvalues of `Q` below this multiple of `max(1, |Q|_F)` are rounding
/// noise around zero (`Q` is positive semidefinite).
pub const ZERO_EIGENVALUE_TOL: f64 = 1e-12;

/// `IE(G)`: the sum of square roots of the signless Laplacian eigenvalues.
///
/// Eigenvalues at noise level are clamped to zero before the square root,
/// since the square root would amplify `1e-16` noise to `1e-8`.
pub fn incidence_energy(g: &Graph) -> f64 {
    let q = signless_laplacian(g);
    let floor = ZERO_EIGENVALUE_TOL * q.norm().max(1.0);
    eigenvalues(&q)
        .values()
        .iter()
        .map(|&x| if x <= floor { 0.0 } else { libm::sqrt(x) })
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CospectralCertificate {
    pub cospectral: bool,
    pub isomorphic: bool,
}

impl CospectralCertificate {
    /// Cospectral and not isomorphic.
    pub fn certified(&self) -> bool {
        self.cospectral && !self.isomorphic
    }
}

/// Cospectrality by exact characteristic polynomials, isomorphism by search.
pub fn cospectral_certificate(a: &Graph, b: &Graph, kind: MatrixKind) -> CospectralCertificate {
    let cospectral = a.order() == b.order() && char_poly(&kind.of(a)) == char_poly(&kind.of(b));
    CospectralCertificate {
        cospectral,
        isomorphic: isomorphic(a, b),
    }
}
