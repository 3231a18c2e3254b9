//! Spectral radius of commutators of selfadjoint involutions and of the
//! Bell-CHSH operator.
//!
//! The crate is organized bottom-up:
//!
//! - [`tridiag`]: Sturm-sequence bisection for symmetric tridiagonal matrices
//!   and Householder reduction for small dense symmetric matrices.
//! - [`operators`]: involution pairs in one-shifted form, their finite
//!   sections `P_n (A + B) P_n`, and dense finite pairs.
//! - [`theory`]: closed-form spectra, the `lambda_0` selection rule, the
//!   outlier equation and the piecewise spectral-radius formulas.
//! - [`analysis`]: finite-section experiments that cross-check the closed
//!   forms (outlier detection, Hausdorff convergence, Tsirelson suite).
//! - [`validation`]: the named check list run by `chsh-spectra validate`.
//!
//! Data-parallel loops (bisection per eigenvalue index, sweep points,
//! random trials) run on rayon when the `parallel` feature is enabled and
//! fall back to plain iterators otherwise. Both paths produce identical
//! results.

pub mod analysis;
pub mod error;
pub mod operators;
pub mod par;
pub mod theory;
pub mod tridiag;
pub mod validation;

pub use error::{Error, Result};
pub use par::Exec;
