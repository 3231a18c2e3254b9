//! Small dense matrices and Householder tridiagonalization.

use std::fmt;

use super::{tridiag_eigenvalues, SpectrumSample, TridiagonalSymmetricMatrix};
use crate::error::{Error, Result};

/// Square real matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl SquareMatrix {
    pub fn new(n: usize, entries: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != n * n {
            return Err(Error::ShapeMismatch { expected: n * n, got: entries.len() });
        }
        if let Some(pos) = entries.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonFinite(pos));
        }
        Ok(Self { n, entries })
    }

    pub fn zeros(n: usize) -> Self {
        Self { n, entries: vec![0.0; n * n] }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn matmul(&self, other: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.n, other.n, "matrix orders differ");
        let n = self.n;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * other.entries[k * n + j];
                }
            }
        }
        SquareMatrix { n, entries: out }
    }

    pub fn sub(&self, other: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.n, other.n, "matrix orders differ");
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        SquareMatrix { n: self.n, entries }
    }

    pub fn transpose(&self) -> SquareMatrix {
        let n = self.n;
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        SquareMatrix { n, entries }
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// `max |m(i,j) + m(j,i)|`; zero for an exactly skew-symmetric matrix.
    pub fn skew_defect(&self) -> f64 {
        let n = self.n;
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in 0..=i {
                worst = worst.max((self.get(i, j) + self.get(j, i)).abs());
            }
        }
        worst
    }

    /// `max |m - I|` entrywise.
    pub fn identity_defect(&self) -> f64 {
        let n = self.n;
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in 0..n {
                let id = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((self.get(i, j) - id).abs());
            }
        }
        worst
    }
}

/// Dense real symmetric matrix, stored full and exactly symmetric.
#[derive(Clone, PartialEq)]
pub struct DenseSymmetricMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl fmt::Debug for DenseSymmetricMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[f64]> = self.entries.chunks(self.n).collect();
        f.debug_struct("DenseSymmetricMatrix").field("n", &self.n).field("rows", &rows).finish()
    }
}

impl DenseSymmetricMatrix {
    /// Accepts row-major `entries` whose transpose pairs agree to within
    /// `1e-12 * max(1, max|a_ij|)`; the stored matrix is the symmetric part.
    pub fn new(n: usize, entries: Vec<f64>) -> Result<Self> {
        let SquareMatrix { n, mut entries } = SquareMatrix::new(n, entries)?;
        let scale = entries.iter().fold(1.0_f64, |m, x| m.max(x.abs()));
        for i in 0..n {
            for j in 0..i {
                let (a, b) = (entries[i * n + j], entries[j * n + i]);
                let diff = (a - b).abs();
                if diff > 1e-12 * scale {
                    return Err(Error::NotSymmetric { i, j, diff });
                }
                let avg = 0.5 * (a + b);
                entries[i * n + j] = avg;
                entries[j * n + i] = avg;
            }
        }
        Ok(Self { n, entries })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_diagonal(&vec![1.0; n])
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        let mut entries = vec![0.0; n * n];
        for (i, d) in diag.iter().enumerate() {
            entries[i * n + i] = *d;
        }
        Self { n, entries }
    }

    /// Block-diagonal matrix built from symmetric blocks.
    pub fn block_diagonal(blocks: &[DenseSymmetricMatrix]) -> Self {
        let n = blocks.iter().map(|b| b.n).sum();
        let mut entries = vec![0.0; n * n];
        let mut offset = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    entries[(offset + i) * n + offset + j] = b.get(i, j);
                }
            }
            offset += b.n;
        }
        Self { n, entries }
    }

    /// Symmetric part `(m + m^T) / 2` of a general square matrix.
    pub fn symmetric_part(m: &SquareMatrix) -> Self {
        let n = m.order();
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] = 0.5 * (m.get(i, j) + m.get(j, i));
            }
        }
        Self { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn to_square(&self) -> SquareMatrix {
        SquareMatrix { n: self.n, entries: self.entries.clone() }
    }

    pub fn matmul(&self, other: &DenseSymmetricMatrix) -> SquareMatrix {
        self.to_square().matmul(&other.to_square())
    }

    pub fn add(&self, other: &DenseSymmetricMatrix) -> DenseSymmetricMatrix {
        assert_eq!(self.n, other.n, "matrix orders differ");
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        DenseSymmetricMatrix { n: self.n, entries }
    }
}

/// Reduces `m` to a similar symmetric tridiagonal matrix with Householder
/// reflections `H = I - beta v v^T`.
pub fn householder_tridiagonalize(m: &DenseSymmetricMatrix) -> TridiagonalSymmetricMatrix {
    let n = m.n;
    let mut a = m.entries.clone();
    let mut offdiag = vec![0.0; n.saturating_sub(1)];

    for k in 0..n.saturating_sub(1) {
        let len = n - k - 1;
        let mut v: Vec<f64> = (0..len).map(|i| a[(k + 1 + i) * n + k]).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if len == 1 || norm == 0.0 {
            offdiag[k] = v[0];
            continue;
        }
        let alpha = if v[0] > 0.0 { -norm } else { norm };
        v[0] -= alpha;
        let vtv: f64 = v.iter().map(|x| x * x).sum();
        if vtv == 0.0 {
            offdiag[k] = v[0] + alpha;
            continue;
        }
        let beta = 2.0 / vtv;

        // p = beta * A22 v
        let p: Vec<f64> = (0..len)
            .map(|i| {
                let row = (k + 1 + i) * n + k + 1;
                beta * a[row..row + len].iter().zip(&v).map(|(x, y)| x * y).sum::<f64>()
            })
            .collect();
        let kappa = 0.5 * beta * p.iter().zip(&v).map(|(x, y)| x * y).sum::<f64>();
        let w: Vec<f64> = p.iter().zip(&v).map(|(pi, vi)| pi - kappa * vi).collect();

        // A22 <- A22 - v w^T - w v^T
        for i in 0..len {
            for j in 0..len {
                a[(k + 1 + i) * n + k + 1 + j] -= v[i] * w[j] + w[i] * v[j];
            }
        }
        for i in 0..len {
            a[(k + 1 + i) * n + k] = 0.0;
            a[k * n + k + 1 + i] = 0.0;
        }
        offdiag[k] = alpha;
    }

    let diag = (0..n).map(|i| a[i * n + i]).collect();
    TridiagonalSymmetricMatrix::new(diag, offdiag).expect("finite input stays finite")
}

/// Eigenvalues of a dense symmetric matrix via Householder reduction and
/// Sturm bisection.
pub fn dense_sym_eigenvalues(m: &DenseSymmetricMatrix, tol: f64) -> SpectrumSample {
    tridiag_eigenvalues(&householder_tridiagonalize(m), tol)
}
