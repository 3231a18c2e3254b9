//! Involution pairs and their finite sections.
//!
//! A pair in one-shifted form is
//!
//! ```text
//! A = diag(r(w_1), r(w_2), r(w_3), ...)
//! B = diag(1, r(t_1), r(t_2), ...)
//! ```
//!
//! with rotation-reflection blocks `r(eta) = [[cos eta, sin eta], [sin eta, -cos eta]]`.
//! The blocks of `B` are offset by one row, so `A + B` is tridiagonal.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::theory::TwoAngleParams;
use crate::tridiag::{DenseSymmetricMatrix, SquareMatrix, TridiagonalSymmetricMatrix};

/// Tolerance for accepting a matrix as a selfadjoint involution.
pub const INVOLUTION_TOL: f64 = 1e-12;

fn check_angle(a: f64) -> Result<f64> {
    if a.is_finite() && a > 0.0 && a < PI {
        Ok(a)
    } else {
        Err(Error::AngleOutOfRange(a))
    }
}

/// An angle sequence: finitely many leading angles followed by a constant tail.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleSpec {
    head: Vec<f64>,
    tail: f64,
}

impl AngleSpec {
    pub fn new(head: Vec<f64>, tail: f64) -> Result<Self> {
        for &a in &head {
            check_angle(a)?;
        }
        check_angle(tail)?;
        Ok(Self { head, tail })
    }

    pub fn constant(angle: f64) -> Result<Self> {
        Self::new(Vec::new(), angle)
    }

    pub fn head(&self) -> &[f64] {
        &self.head
    }

    pub fn tail(&self) -> f64 {
        self.tail
    }

    /// The `k`-th angle, 1-based.
    pub fn at(&self, k: usize) -> f64 {
        debug_assert!(k >= 1);
        self.head.get(k - 1).copied().unwrap_or(self.tail)
    }
}

/// Angle sequences of `A` (`omega`) and `B` (`theta`) for a pair in
/// one-shifted form.
#[derive(Debug, Clone, PartialEq)]
pub struct PairFamily {
    pub omega: AngleSpec,
    pub theta: AngleSpec,
}

impl PairFamily {
    pub fn new(omega: AngleSpec, theta: AngleSpec) -> Self {
        Self { omega, theta }
    }

    /// Constant-angle form: every block of both operators is `r(theta)`.
    pub fn constant(theta: f64) -> Result<Self> {
        Ok(Self::new(AngleSpec::constant(theta)?, AngleSpec::constant(theta)?))
    }

    /// Constant angle `theta` with the first block of `A` replaced by `r(omega)`.
    pub fn leading_block(omega: f64, theta: f64) -> Result<Self> {
        Ok(Self::new(AngleSpec::new(vec![omega], theta)?, AngleSpec::constant(theta)?))
    }

    /// Constant angle `theta` perturbed by `A = diag(r(3/2), r(2), ...)` and
    /// `B = diag(1, r(5/2), ...)`.
    pub fn two_block_perturbation(theta: f64) -> Result<Self> {
        Ok(Self::new(AngleSpec::new(vec![1.5, 2.0], theta)?, AngleSpec::new(vec![2.5], theta)?))
    }

    /// All blocks of `A` are `r(omega)`, all blocks of `B` are `r(theta)`.
    pub fn two_constant(omega: f64, theta: f64) -> Result<Self> {
        Ok(Self::new(AngleSpec::constant(omega)?, AngleSpec::constant(theta)?))
    }

    /// Parameters of the limiting block Toeplitz operator.
    pub fn tail_params(&self) -> TwoAngleParams {
        TwoAngleParams::new(self.omega.tail, self.theta.tail).expect("angles validated on construction")
    }

    /// True when no leading angle differs from the tails.
    pub fn has_constant_angles(&self) -> bool {
        self.omega.head.iter().all(|&a| a == self.omega.tail) && self.theta.head.iter().all(|&a| a == self.theta.tail)
    }
}

/// `r(eta) = [[cos eta, sin eta], [sin eta, -cos eta]]`.
pub fn rotation_block(eta: f64) -> DenseSymmetricMatrix {
    let (s, c) = eta.sin_cos();
    DenseSymmetricMatrix::new(2, vec![c, s, s, -c]).expect("rotation block is symmetric")
}

/// Top-left `n x n` corner of the infinite tridiagonal matrix `A + B`.
pub fn build_sum_truncation(f: &PairFamily, n: usize) -> Result<TridiagonalSymmetricMatrix> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::BadTruncationOrder(n));
    }
    let mut diag = vec![0.0; n];
    let mut offdiag = vec![0.0; n - 1];
    diag[0] = 1.0 + f.omega.at(1).cos();
    for k in 1..=n / 2 {
        let (sw, cw) = f.omega.at(k).sin_cos();
        let (st, ct) = f.theta.at(k).sin_cos();
        diag[2 * k - 1] = ct - cw;
        offdiag[2 * k - 2] = sw;
        if 2 * k < n {
            diag[2 * k] = f.omega.at(k + 1).cos() - ct;
            offdiag[2 * k - 1] = st;
        }
    }
    TridiagonalSymmetricMatrix::new(diag, offdiag)
}

/// Pair of selfadjoint involutions of equal order.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralPair {
    a: DenseSymmetricMatrix,
    b: DenseSymmetricMatrix,
}

impl GeneralPair {
    pub fn new(a: DenseSymmetricMatrix, b: DenseSymmetricMatrix) -> Result<Self> {
        if a.order() != b.order() {
            return Err(Error::OrderMismatch(a.order(), b.order()));
        }
        if !validate_involution(&a, INVOLUTION_TOL) {
            return Err(Error::NotInvolution("A"));
        }
        if !validate_involution(&b, INVOLUTION_TOL) {
            return Err(Error::NotInvolution("B"));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> &DenseSymmetricMatrix {
        &self.a
    }

    pub fn b(&self) -> &DenseSymmetricMatrix {
        &self.b
    }

    pub fn order(&self) -> usize {
        self.a.order()
    }

    pub fn sum(&self) -> DenseSymmetricMatrix {
        self.a.add(&self.b)
    }
}

/// Finite pair of order `2m`: `A` carries the blocks `r(w_1..w_m)`, `B` is
/// `diag(1, r(t_1), ..., r(t_{m-1}), -1)`.
pub fn build_dense_pair(f: &PairFamily, m: usize) -> Result<GeneralPair> {
    if m == 0 {
        return Err(Error::InvalidArgument("block count must be at least 1".into()));
    }
    let a_blocks: Vec<_> = (1..=m).map(|k| rotation_block(f.omega.at(k))).collect();
    let mut b_blocks = Vec::with_capacity(m + 1);
    b_blocks.push(DenseSymmetricMatrix::identity(1));
    b_blocks.extend((1..m).map(|k| rotation_block(f.theta.at(k))));
    b_blocks.push(DenseSymmetricMatrix::from_diagonal(&[-1.0]));
    GeneralPair::new(DenseSymmetricMatrix::block_diagonal(&a_blocks), DenseSymmetricMatrix::block_diagonal(&b_blocks))
}

/// The 3x3 pair `A = diag(1, 1, -1)`, `B = diag(1, r(eta))` with
/// `cos eta = 2x - 1`, whose sum has spectrum `{-2 sqrt x, 2 sqrt x, 2}`.
///
/// The off-diagonal entry of `B` is `2 sqrt(x (1 - x))`; with half that
/// value `B` would not square to the identity.
pub fn three_by_three_example(x: f64) -> Result<GeneralPair> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::InvalidArgument(format!("x = {x} must lie in (0, 1)")));
    }
    let a = DenseSymmetricMatrix::from_diagonal(&[1.0, 1.0, -1.0]);
    let c = 2.0 * x - 1.0;
    let s = 2.0 * (x * (1.0 - x)).sqrt();
    let b = DenseSymmetricMatrix::new(3, vec![1.0, 0.0, 0.0, 0.0, c, s, 0.0, s, -c])?;
    GeneralPair::new(a, b)
}

/// True iff `max |m m - I| <= tol`.
pub fn validate_involution(m: &DenseSymmetricMatrix, tol: f64) -> bool {
    m.matmul(m).identity_defect() <= tol
}

/// `[A, B] = AB - BA`.
pub fn commutator(p: &GeneralPair) -> SquareMatrix {
    p.a.matmul(&p.b).sub(&p.b.matmul(&p.a))
}
