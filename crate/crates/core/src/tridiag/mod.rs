//! Real symmetric eigenvalues from scratch.
//!
//! Symmetric tridiagonal matrices are solved by Sturm-sequence bisection,
//! one independent bracket per eigenvalue index. Small dense symmetric
//! matrices are first reduced to tridiagonal form by Householder
//! reflections ([`dense`]).

pub mod dense;
mod spectrum;

pub use dense::{dense_sym_eigenvalues, householder_tridiagonalize, DenseSymmetricMatrix, SquareMatrix};
pub use spectrum::SpectrumSample;

use crate::error::{Error, Result};
use crate::par::{self, Exec};

/// Real symmetric tridiagonal matrix stored as its diagonal and first
/// off-diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalSymmetricMatrix {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
    offdiag_sq: Vec<f64>,
    pivot_guard: f64,
    gershgorin: (f64, f64),
}

impl TridiagonalSymmetricMatrix {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        let n = diag.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if offdiag.len() != n - 1 {
            return Err(Error::ShapeMismatch { expected: n - 1, got: offdiag.len() });
        }
        if let Some(pos) = diag.iter().chain(&offdiag).position(|x| !x.is_finite()) {
            return Err(Error::NonFinite(pos));
        }

        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        let mut norm = 0.0_f64;
        for i in 0..n {
            let left = if i > 0 { offdiag[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { offdiag[i].abs() } else { 0.0 };
            let r = left + right;
            lo = lo.min(diag[i] - r);
            hi = hi.max(diag[i] + r);
            norm = norm.max(diag[i].abs() + r);
        }
        let pivot_guard = (f64::EPSILON * norm).max(f64::MIN_POSITIVE);
        let offdiag_sq = offdiag.iter().map(|e| e * e).collect();
        Ok(Self { diag, offdiag, offdiag_sq, pivot_guard, gershgorin: (lo, hi) })
    }

    /// Symmetric tridiagonal Toeplitz matrix with constant diagonal and off-diagonal.
    pub fn toeplitz(n: usize, diag: f64, offdiag: f64) -> Result<Self> {
        Self::new(vec![diag; n], vec![offdiag; n.saturating_sub(1)])
    }

    pub fn order(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    /// Gershgorin hull `[lo, hi]` containing every eigenvalue.
    pub fn gershgorin_bounds(&self) -> (f64, f64) {
        self.gershgorin
    }

    /// `max(|lo|, |hi|)` of the Gershgorin hull.
    pub fn gershgorin_radius(&self) -> f64 {
        self.gershgorin.0.abs().max(self.gershgorin.1.abs())
    }

    /// Scale-aware default bisection tolerance.
    pub fn default_tol(&self) -> f64 {
        1e-12 * self.gershgorin_radius().max(1.0)
    }

    pub fn trace(&self) -> f64 {
        self.diag.iter().sum()
    }

    pub fn to_dense(&self) -> DenseSymmetricMatrix {
        let n = self.order();
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            entries[i * n + i] = self.diag[i];
            if i + 1 < n {
                entries[i * n + i + 1] = self.offdiag[i];
                entries[(i + 1) * n + i] = self.offdiag[i];
            }
        }
        DenseSymmetricMatrix::new(n, entries).expect("tridiagonal matrix is symmetric")
    }

    // Bracket [lo, hi) such that sturm_count(lo) == 0 and sturm_count(hi) == n.
    fn initial_bracket(&self) -> (f64, f64) {
        let (lo, hi) = self.gershgorin;
        let pad = 2.0 * self.pivot_guard + 4.0 * f64::EPSILON * hi.abs().max(lo.abs());
        (lo - pad, hi + pad)
    }

    fn bisect_index(&self, k: usize, tol: f64) -> f64 {
        let (mut lo, mut hi) = self.initial_bracket();
        for _ in 0..256 {
            if hi - lo <= tol {
                break;
            }
            let mid = lo + 0.5 * (hi - lo);
            if mid <= lo || mid >= hi {
                break;
            }
            if sturm_count(self, mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        lo + 0.5 * (hi - lo)
    }
}

/// Number of eigenvalues of `m` strictly less than `x`.
///
/// Counts negative pivots of the `LDL^T` factorization of `m - x I`. A
/// pivot smaller in magnitude than `eps * ||m||` is replaced by that value
/// with the pivot's sign (zero counts as positive).
pub fn sturm_count(m: &TridiagonalSymmetricMatrix, x: f64) -> usize {
    let guard = m.pivot_guard;
    let mut count = 0;
    let mut q = m.diag[0] - x;
    for i in 0..m.diag.len() {
        if i > 0 {
            q = (m.diag[i] - x) - m.offdiag_sq[i - 1] / q;
        }
        if q.abs() < guard {
            q = if q < 0.0 { -guard } else { guard };
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// All eigenvalues of `m`, sorted, each bisected to an interval of width `tol`.
pub fn tridiag_eigenvalues(m: &TridiagonalSymmetricMatrix, tol: f64) -> SpectrumSample {
    tridiag_eigenvalues_with(m, tol, Exec::default())
}

pub fn tridiag_eigenvalues_with(m: &TridiagonalSymmetricMatrix, tol: f64, exec: Exec) -> SpectrumSample {
    assert!(tol > 0.0, "bisection tolerance must be positive");
    let values = par::map_range(exec, m.order(), |k| m.bisect_index(k, tol));
    SpectrumSample::from_sorted(values)
}

/// Eigenvalues of `m` lying in `[lo, hi)`, sorted.
///
/// Each value is bit-identical to the corresponding entry of
/// [`tridiag_eigenvalues`] with the same `tol`: brackets start from the
/// Gershgorin hull regardless of the window.
pub fn tridiag_eigenvalues_in(m: &TridiagonalSymmetricMatrix, lo: f64, hi: f64, tol: f64, exec: Exec) -> Vec<f64> {
    assert!(tol > 0.0, "bisection tolerance must be positive");
    if lo.partial_cmp(&hi) != Some(std::cmp::Ordering::Less) {
        return Vec::new();
    }
    let first = sturm_count(m, lo);
    let last = sturm_count(m, hi);
    par::map_range(exec, last.saturating_sub(first), |i| m.bisect_index(first + i, tol))
}
