//! Isolated eigenvalues of `T(a) + K` outside the essential spectrum.
//!
//! For `|l| > 2s` the three-term recurrence `x_{k-1} - (l/s) x_k + x_{k+1} = 0`
//! has characteristic roots `q1 q2 = 1` with `|q1| < 1 < |q2|`; square-summable
//! solutions are multiples of `q1^k`, and the boundary rows decide whether
//! such a solution exists.

use super::TwoAngleParams;
use crate::error::{Error, Result};

const GRID_POINTS: usize = 10_000;
const EDGE_OFFSET: f64 = 1e-9;
const ROOT_WIDTH: f64 = 1e-13;
const Q_RESIDUAL_TOL: f64 = 1e-12;
const EQ_RESIDUAL_TOL: f64 = 1e-10;
const CORNER_TOL: f64 = 1e-10;

/// One outlier of the leading-block family with its decaying recurrence root.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutlierSolveResult {
    pub lambda: f64,
    pub q: f64,
}

/// Root of `q^2 - mu q + 1 = 0` of modulus below one, for `|mu| >= 2`.
pub fn recurrence_root(mu: f64) -> f64 {
    let disc = (mu * mu - 4.0).max(0.0).sqrt();
    2.0 / (mu + mu.signum() * disc)
}

/// The `(0, 0)` entry `1 - (1 + c) / (s q2)` of `I + T^{-1}(a - l) K` for the
/// constant-angle symbol `a = 2s cos phi` and `K = (1 + c) e_0 e_0^T`.
///
/// `T^{-1}(a - l)` comes from the Wiener-Hopf factorization
/// `a - l = -s q2 (1 - q1/t)(1 - t/q2)`; its `(0, 0)` entry is `-1 / (s q2)`.
pub fn wiener_hopf_corner_entry(theta: f64, lambda: f64) -> Result<f64> {
    let p = TwoAngleParams::new(theta, theta)?;
    let (s, c) = (p.s(), p.c());
    if !lambda.is_finite() || lambda.abs() <= 2.0 * s {
        return Err(Error::InsideEssentialSpectrum { lambda, edge: 2.0 * s });
    }
    let q2 = 1.0 / recurrence_root(lambda / s);
    Ok(1.0 - (1.0 + c) / (s * q2))
}

/// True iff `lambda` (outside `[-2s, 2s]`) is an eigenvalue of the
/// constant-angle sum `A(theta) + B(theta)`.
pub fn wiener_hopf_outlier_check(theta: f64, lambda: f64) -> Result<bool> {
    let entry = wiener_hopf_corner_entry(theta, lambda)?;
    let q2 = 1.0 / recurrence_root(lambda / theta.sin());
    Ok(entry.abs() <= CORNER_TOL && q2 > 1.0)
}

/// Left-hand side of `l^2 - (c + s q + 1) l + (1 + gamma)(c + s q - 1)` with
/// `q = q(l)` the decaying recurrence root.
pub fn outlier_residual(p: &TwoAngleParams, lambda: f64) -> f64 {
    let (s, c, gamma) = (p.s(), p.c(), p.gamma());
    let u = c + s * recurrence_root(lambda / s);
    lambda * lambda - (u + 1.0) * lambda + (1.0 + gamma) * (u - 1.0)
}

/// Outliers of `A + B` for `A = diag(r(omega), r(theta), r(theta), ...)`,
/// `B = diag(1, r(theta), r(theta), ...)`.
///
/// Scans `+-(2s (1 + 1e-9), 2]` on a uniform grid, bisects each sign change
/// to width `1e-13` and keeps roots passing both residual checks.
pub fn outlier_solve_eq4(omega: f64, theta: f64) -> Result<Vec<OutlierSolveResult>> {
    let p = TwoAngleParams::new(omega, theta)?;
    let lo = 2.0 * p.s() * (1.0 + EDGE_OFFSET);
    if lo >= 2.0 {
        return Ok(Vec::new());
    }
    let mut roots = Vec::new();
    for sign in [-1.0, 1.0] {
        let f = |x: f64| outlier_residual(&p, sign * x);
        let grid: Vec<f64> = (0..GRID_POINTS).map(|i| lo + (2.0 - lo) * i as f64 / (GRID_POINTS - 1) as f64).collect();
        let values: Vec<f64> = grid.iter().map(|&x| f(x)).collect();
        for i in 0..GRID_POINTS - 1 {
            let (fa, fb) = (values[i], values[i + 1]);
            if fa == 0.0 {
                roots.push(sign * grid[i]);
            } else if fa * fb < 0.0 {
                roots.push(sign * bisect(&f, grid[i], grid[i + 1], fa));
            }
        }
        if values[GRID_POINTS - 1].abs() <= Q_RESIDUAL_TOL {
            roots.push(sign * 2.0);
        }
    }

    let mut results: Vec<OutlierSolveResult> = Vec::new();
    roots.sort_by(f64::total_cmp);
    for lambda in roots {
        let q = recurrence_root(lambda / p.s());
        let q_res = q * q - (lambda / p.s()) * q + 1.0;
        let eq_res = outlier_residual(&p, lambda);
        if q.abs() >= 1.0 || q_res.abs() > Q_RESIDUAL_TOL || eq_res.abs() > EQ_RESIDUAL_TOL {
            continue;
        }
        match results.last_mut() {
            Some(prev) if (prev.lambda - lambda).abs() <= 1e-9 => {
                if eq_res.abs() < outlier_residual(&p, prev.lambda).abs() {
                    *prev = OutlierSolveResult { lambda, q };
                }
            }
            _ => results.push(OutlierSolveResult { lambda, q }),
        }
    }
    Ok(results)
}

fn bisect(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64, mut fa: f64) -> f64 {
    while b - a > ROOT_WIDTH {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}
