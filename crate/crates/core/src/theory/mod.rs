//! Closed-form spectral content.
//!
//! The spectral radius of `[A, B]` for selfadjoint involutions is
//! `sqrt(l0^2 (4 - l0^2))`, where `l0` is a point of `sigma(A + B)` whose
//! square is closest to 2 ([`select_lambda0`], [`rho_from_lambda`]). The
//! rest of the module supplies spectra of `A + B` (or limit sets of its
//! finite sections) for the one-shifted families, and the resulting
//! piecewise formulas.

mod limit_set;
mod outliers;

pub use limit_set::{Interval, LimitSet};
pub use outliers::{
    outlier_residual, outlier_solve_eq4, recurrence_root, wiener_hopf_corner_entry, wiener_hopf_outlier_check,
    OutlierSolveResult,
};

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, SQRT_2};
use std::fmt;

use crate::error::{Error, Result};

/// Tolerance used to decide that a selected point coincides with `c - gamma`.
pub const EXCLUSION_TOL: f64 = 1e-6;

// Score differences below this are treated as ties in `select_lambda0`.
const TIE_TOL: f64 = 1e-14;

/// Trigonometric parameters of a two-angle block Toeplitz symbol.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoAngleParams {
    omega: f64,
    theta: f64,
    gamma: f64,
    delta: f64,
    c: f64,
    s: f64,
}

impl TwoAngleParams {
    pub fn new(omega: f64, theta: f64) -> Result<Self> {
        for a in [omega, theta] {
            if !(a.is_finite() && a > 0.0 && a < PI) {
                return Err(Error::AngleOutOfRange(a));
            }
        }
        let (delta, gamma) = omega.sin_cos();
        let (s, c) = theta.sin_cos();
        Ok(Self { omega, theta, gamma, delta, c, s })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }
    pub fn theta(&self) -> f64 {
        self.theta
    }
    /// `cos omega`
    pub fn gamma(&self) -> f64 {
        self.gamma
    }
    /// `sin omega`
    pub fn delta(&self) -> f64 {
        self.delta
    }
    /// `cos theta`
    pub fn c(&self) -> f64 {
        self.c
    }
    /// `sin theta`
    pub fn s(&self) -> f64 {
        self.s
    }

    /// Inner edge of the essential spectrum, `2 |sin((theta - omega) / 2)|`.
    pub fn lambda1(&self) -> f64 {
        2.0 * (0.5 * (self.theta - self.omega)).sin().abs()
    }

    /// Outer edge of the essential spectrum, `2 |sin((theta + omega) / 2)|`.
    pub fn lambda2(&self) -> f64 {
        2.0 * (0.5 * (self.theta + self.omega)).sin().abs()
    }

    /// The gap point `c - gamma`.
    pub fn c_minus_gamma(&self) -> f64 {
        self.c - self.gamma
    }
}

/// Which closed form or selection rule produced a [`RhoReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhoBranch {
    /// Selection from a known spectrum.
    Selection,
    /// `2 sin 2theta`, `0 < theta <= pi/4`.
    ConstantSmallAngle,
    /// `2`, `pi/4 <= theta <= 3pi/4`.
    ConstantMiddle,
    /// `2 |sin 2theta|`, `3pi/4 <= theta < pi`.
    ConstantLargeAngle,
    /// `2 |sin(theta + omega)|`: the outer edge `lambda2` is selected.
    TwoAngleOuterEdge,
    /// `2`: `sqrt 2` lies in the essential spectrum.
    TwoAngleMiddle,
    /// `2 |sin(theta - omega)|`: the inner edge `lambda1` is selected.
    TwoAngleInnerEdge,
    /// `sqrt 2` in `[lambda1, lambda2]`.
    Sqrt2InBand,
    /// `sqrt 2` in `(lambda2, 2)`: the gap point cannot be selected.
    Sqrt2AboveBand,
    /// Selected point differs from `c - gamma`.
    SelectedPointInSpectrum,
    /// Selected point is `c - gamma`; only bounds are known.
    GapPointBounds,
    /// Finite-section estimate.
    Numeric,
}

impl RhoBranch {
    pub fn label(self) -> &'static str {
        match self {
            RhoBranch::Selection => "selection",
            RhoBranch::ConstantSmallAngle => "constant:2sin(2theta)",
            RhoBranch::ConstantMiddle => "constant:2",
            RhoBranch::ConstantLargeAngle => "constant:2|sin(2theta)|",
            RhoBranch::TwoAngleOuterEdge => "two-angle:2|sin(theta+omega)|",
            RhoBranch::TwoAngleMiddle => "two-angle:2",
            RhoBranch::TwoAngleInnerEdge => "two-angle:2|sin(theta-omega)|",
            RhoBranch::Sqrt2InBand => "general:sqrt2-in-band",
            RhoBranch::Sqrt2AboveBand => "general:sqrt2-above-band",
            RhoBranch::SelectedPointInSpectrum => "general:selected-point",
            RhoBranch::GapPointBounds => "general:gap-point-bounds",
            RhoBranch::Numeric => "numeric",
        }
    }
}

impl fmt::Display for RhoBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Spectral radius result; `rho_low == rho_high` when the value is exact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RhoReport {
    pub rho_low: f64,
    pub rho_high: f64,
    /// The selected spectral point, when the value is exact.
    pub lambda0: Option<f64>,
    pub branch: RhoBranch,
}

impl RhoReport {
    pub fn exact(rho: f64, lambda0: Option<f64>, branch: RhoBranch) -> Self {
        Self { rho_low: rho, rho_high: rho, lambda0, branch }
    }

    pub fn is_exact(&self) -> bool {
        self.rho_low == self.rho_high
    }

    pub fn value(&self) -> Option<f64> {
        self.is_exact().then_some(self.rho_low)
    }
}

/// `sqrt(l^2 (4 - l^2))`, clamped to `[0, 2]`.
pub fn rho_from_lambda(lambda0: f64) -> Result<f64> {
    if !lambda0.is_finite() || lambda0.abs() > 2.0 + 1e-12 {
        return Err(Error::LambdaOutOfRange(lambda0));
    }
    let sq = lambda0 * lambda0;
    Ok((sq * (4.0 - sq)).max(0.0).sqrt().min(2.0))
}

/// A point of `spec` minimizing `|l^2 - 2|`.
///
/// Within an interval the minimizer is the clamp of `+-sqrt 2`. Ties go to
/// the nonnegative candidate, then to the one of smallest magnitude; the
/// resulting spectral radius is the same either way.
pub fn select_lambda0(spec: &LimitSet) -> Result<f64> {
    let clamps = spec.intervals().iter().flat_map(|iv| [SQRT_2.clamp(iv.lo, iv.hi), (-SQRT_2).clamp(iv.lo, iv.hi)]);
    let mut best: Option<(f64, f64)> = None;
    for x in clamps.chain(spec.points().iter().copied()) {
        let score = (x * x - 2.0).abs();
        best = match best {
            None => Some((x, score)),
            Some((bx, bs)) => {
                let better = score < bs - TIE_TOL
                    || ((score - bs).abs() <= TIE_TOL && ((x >= 0.0) as u8, -x.abs()) > ((bx >= 0.0) as u8, -bx.abs()));
                if better {
                    Some((x, score))
                } else {
                    Some((bx, bs))
                }
            }
        };
    }
    best.map(|(x, _)| x).ok_or(Error::EmptySet)
}

/// Spectrum of `A(theta) + B(theta)` in constant-angle form:
/// `[-2s, 2s] U {2}` for `theta <= pi/2`, `[-2s, 2s]` otherwise.
pub fn constant_angle_limit_set(theta: f64) -> Result<LimitSet> {
    let p = TwoAngleParams::new(theta, theta)?;
    let edge = 2.0 * p.s;
    let points = if theta <= FRAC_PI_2 { vec![2.0] } else { Vec::new() };
    LimitSet::new(vec![(-edge, edge)], points)
}

/// Spectral radius of `[A(theta), B(theta)]` in constant-angle form.
pub fn rho_constant_angle(theta: f64) -> Result<RhoReport> {
    let p = TwoAngleParams::new(theta, theta)?;
    let edge = 2.0 * p.s;
    let report = if theta <= FRAC_PI_4 {
        RhoReport::exact(2.0 * (2.0 * theta).sin(), Some(edge), RhoBranch::ConstantSmallAngle)
    } else if theta <= 3.0 * FRAC_PI_4 {
        RhoReport::exact(2.0, Some(SQRT_2), RhoBranch::ConstantMiddle)
    } else {
        RhoReport::exact(2.0 * (2.0 * theta).sin().abs(), Some(edge), RhoBranch::ConstantLargeAngle)
    };
    Ok(report)
}

/// `sigma_ess = [-lambda2, -lambda1] U [lambda1, lambda2]`, one interval
/// when `lambda1 = 0`.
pub fn two_angle_essential(p: &TwoAngleParams) -> LimitSet {
    let (l1, l2) = (p.lambda1(), p.lambda2());
    LimitSet::new(vec![(-l2, -l1), (l1, l2)], Vec::new()).expect("edges are finite and ordered")
}

/// The isolated point `c - gamma` of `sigma(T(a~))`, present iff `s > delta`.
pub fn tilde_point(p: &TwoAngleParams) -> Option<f64> {
    (p.s > p.delta).then(|| p.c_minus_gamma())
}

/// Spectral radius for the two-constant-angle family
/// `A = diag(r(w), r(w), ...)`, `B = diag(1, r(t), r(t), ...)`.
pub fn rho_two_constant_angles(p: &TwoAngleParams) -> RhoReport {
    let (w, t) = (p.omega, p.theta);
    let outer = || RhoReport::exact(2.0 * (t + w).sin().abs(), Some(p.lambda2()), RhoBranch::TwoAngleOuterEdge);
    let middle = || RhoReport::exact(2.0, Some(SQRT_2), RhoBranch::TwoAngleMiddle);
    let inner = || RhoReport::exact(2.0 * (t - w).sin().abs(), Some(p.lambda1()), RhoBranch::TwoAngleInnerEdge);
    if w <= FRAC_PI_2 {
        if t <= FRAC_PI_2 - w {
            outer()
        } else if t <= FRAC_PI_2 + w {
            middle()
        } else {
            inner()
        }
    } else if t <= w - FRAC_PI_2 {
        inner()
    } else if t <= 1.5 * PI - w {
        middle()
    } else {
        outer()
    }
}

/// Spectral radius from a limit set `lam` of finite sections of a
/// two-angle family.
///
/// Exact unless the selected point is the gap point `c - gamma` strictly
/// inside `(-lambda1, lambda1)`, which may belong to the limit set without
/// belonging to `sigma(A + B)`. Then the report carries the bounds
/// `rho(l*) <= rho <= min(2, rho(l0))` with `l*` selected from `lam`
/// without the gap point.
pub fn theorem_bounds_general(p: &TwoAngleParams, lam: &LimitSet) -> Result<RhoReport> {
    let (l1, l2) = (p.lambda1(), p.lambda2());
    if l1 <= SQRT_2 && SQRT_2 <= l2 {
        return Ok(RhoReport::exact(2.0, Some(SQRT_2), RhoBranch::Sqrt2InBand));
    }
    let lambda0 = select_lambda0(lam)?;
    let gap_point = p.c_minus_gamma();
    let in_open_gap = gap_point.abs() < l1;
    if !in_open_gap || (lambda0 - gap_point).abs() > EXCLUSION_TOL {
        let branch = if SQRT_2 > l2 { RhoBranch::Sqrt2AboveBand } else { RhoBranch::SelectedPointInSpectrum };
        return Ok(RhoReport::exact(rho_from_lambda(lambda0)?, Some(lambda0), branch));
    }
    let lambda_star = select_lambda0(&lam.without_point(gap_point, EXCLUSION_TOL))?;
    Ok(RhoReport {
        rho_low: rho_from_lambda(lambda_star)?,
        rho_high: rho_from_lambda(lambda0)?.min(2.0),
        lambda0: None,
        branch: RhoBranch::GapPointBounds,
    })
}

/// Spectral radius of the Bell-CHSH operator, `sqrt(4 + rho1 rho2)`.
///
/// Inputs within `1e-9` outside `[0, 2]` are clamped (rounding in computed
/// radii); anything further out is rejected.
pub fn bell_chsh_rho(rho1: f64, rho2: f64) -> Result<f64> {
    let check = |r: f64| {
        if r.is_finite() && (-1e-9..=2.0 + 1e-9).contains(&r) {
            Ok(r.clamp(0.0, 2.0))
        } else {
            Err(Error::RhoOutOfRange(r))
        }
    };
    Ok((4.0 + check(rho1)? * check(rho2)?).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_PI_3;

    #[test]
    fn rho_from_lambda_values() {
        assert_abs_diff_eq!(rho_from_lambda(SQRT_2).unwrap(), 2.0, epsilon = 1e-15);
        assert_eq!(rho_from_lambda(0.0).unwrap(), 0.0);
        assert_eq!(rho_from_lambda(2.0).unwrap(), 0.0);
        let r = rho_from_lambda(1.5).unwrap();
        assert_abs_diff_eq!(r, 3.9375f64.sqrt(), epsilon = 1e-15);
        assert!((r - 1.9843).abs() < 5e-5);
        assert_eq!(rho_from_lambda(2.1), Err(Error::LambdaOutOfRange(2.1)));
    }

    #[test]
    fn select_uses_squared_distance() {
        let s = LimitSet::from_points(vec![-0.2, 0.2, 2.0]).unwrap();
        assert_eq!(select_lambda0(&s).unwrap(), 0.2);
        let s = LimitSet::interval(-1.8, 1.8).unwrap();
        assert_eq!(select_lambda0(&s).unwrap(), SQRT_2);
        assert_eq!(select_lambda0(&LimitSet::from_points(vec![2.0]).unwrap()).unwrap(), 2.0);
        assert_eq!(select_lambda0(&LimitSet::empty()), Err(Error::EmptySet));
    }

    #[test]
    fn select_tie_breaking() {
        // 0 and 2 are both at squared distance 2
        let s = LimitSet::from_points(vec![2.0, 0.0]).unwrap();
        assert_eq!(select_lambda0(&s).unwrap(), 0.0);
        let s = LimitSet::from_points(vec![-0.5, 0.5]).unwrap();
        assert_eq!(select_lambda0(&s).unwrap(), 0.5);
    }

    #[test]
    fn constant_angle_sets() {
        let s3 = 3f64.sqrt();
        let set = constant_angle_limit_set(FRAC_PI_3).unwrap();
        assert_abs_diff_eq!(set.intervals()[0].hi, s3, epsilon = 1e-15);
        assert_eq!(set.points(), &[2.0]);
        let set = constant_angle_limit_set(2.0 * FRAC_PI_3).unwrap();
        assert_abs_diff_eq!(set.intervals()[0].lo, -s3, epsilon = 1e-15);
        assert!(set.points().is_empty());
        let set = constant_angle_limit_set(FRAC_PI_2).unwrap();
        assert_eq!(set.intervals(), &[Interval { lo: -2.0, hi: 2.0 }]);
        assert!(set.points().is_empty());
    }

    #[test]
    fn constant_angle_rho_branches() {
        let r = rho_constant_angle(PI / 6.0).unwrap();
        assert_abs_diff_eq!(r.rho_low, 3f64.sqrt(), epsilon = 1e-15);
        assert_eq!(r.branch, RhoBranch::ConstantSmallAngle);
        assert_eq!(rho_constant_angle(FRAC_PI_2).unwrap().rho_low, 2.0);
        let r = rho_constant_angle(0.9 * PI).unwrap();
        assert_abs_diff_eq!(r.rho_low, 2.0 * (0.2 * PI).sin(), epsilon = 1e-14);
        assert_eq!(r.branch, RhoBranch::ConstantLargeAngle);
    }

    #[test]
    fn two_angle_params_edges() {
        let p = TwoAngleParams::new(0.3, 2.0).unwrap();
        let (g, d, c, s) = (p.gamma(), p.delta(), p.c(), p.s());
        assert_abs_diff_eq!(p.lambda1().powi(2), (c - g).powi(2) + (s - d).powi(2), epsilon = 1e-14);
        assert_abs_diff_eq!(p.lambda2().powi(2), (c - g).powi(2) + (s + d).powi(2), epsilon = 1e-14);
        let cg = p.c_minus_gamma();
        assert!(-2.0 <= -p.lambda2() && -p.lambda2() < -p.lambda1());
        assert!(-p.lambda1() < cg && cg < p.lambda1() && p.lambda1() < p.lambda2() && p.lambda2() <= 2.0);
        assert!(TwoAngleParams::new(0.0, 1.0).is_err());
    }

    #[test]
    fn essential_spectrum_examples() {
        let p = TwoAngleParams::new(1.2, 1.2).unwrap();
        let ess = two_angle_essential(&p);
        assert_eq!(ess.intervals().len(), 1);
        assert_abs_diff_eq!(ess.intervals()[0].hi, 2.0 * 1.2f64.sin(), epsilon = 1e-15);
        let ess = two_angle_essential(&TwoAngleParams::new(FRAC_PI_2, FRAC_PI_2).unwrap());
        assert_eq!(ess.intervals(), &[Interval { lo: -2.0, hi: 2.0 }]);
    }

    #[test]
    fn essential_spectrum_matches_symbol_determinant() {
        let p = TwoAngleParams::new(0.3, 2.0).unwrap();
        let (g, d, c, s) = (p.gamma(), p.delta(), p.c(), p.s());
        let steps = 100_000;
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for i in 0..=steps {
            let phi = 2.0 * PI * i as f64 / steps as f64;
            let lam = ((c - g).powi(2) + d * d + 2.0 * d * s * phi.cos() + s * s).sqrt();
            lo = lo.min(lam);
            hi = hi.max(lam);
        }
        let ess = two_angle_essential(&p);
        assert_abs_diff_eq!(ess.intervals()[1].lo, lo, epsilon = 1e-8);
        assert_abs_diff_eq!(ess.intervals()[1].hi, hi, epsilon = 1e-8);
        assert_abs_diff_eq!(ess.intervals()[0].lo, -hi, epsilon = 1e-8);
        assert_abs_diff_eq!(ess.intervals()[0].hi, -lo, epsilon = 1e-8);
    }

    #[test]
    fn tilde_point_presence() {
        let p = TwoAngleParams::new(0.3, 2.0).unwrap();
        assert_eq!(tilde_point(&p), Some(2f64.cos() - 0.3f64.cos()));
        assert_eq!(tilde_point(&TwoAngleParams::new(2.4, 0.2).unwrap()), None);
        assert_eq!(tilde_point(&TwoAngleParams::new(1.0, 1.0).unwrap()), None);
    }

    #[test]
    fn two_constant_branches() {
        let p = TwoAngleParams::new(PI / 6.0, FRAC_PI_2).unwrap();
        assert_eq!(rho_two_constant_angles(&p).rho_low, 2.0);
        let p = TwoAngleParams::new(PI / 6.0, FRAC_PI_4).unwrap();
        assert_abs_diff_eq!(rho_two_constant_angles(&p).rho_low, 2.0 * (5.0 * PI / 12.0).sin(), epsilon = 1e-15);
        let p = TwoAngleParams::new(0.3, 2.0).unwrap();
        let r = rho_two_constant_angles(&p);
        assert_abs_diff_eq!(r.rho_low, 2.0 * 1.7f64.sin(), epsilon = 1e-15);
        assert_eq!(r.branch, RhoBranch::TwoAngleInnerEdge);
        // theta + omega >= 3pi/2: the outer branch stays nonnegative
        let p = TwoAngleParams::new(2.4, 3.0).unwrap();
        let r = rho_two_constant_angles(&p);
        assert_eq!(r.branch, RhoBranch::TwoAngleOuterEdge);
        assert_abs_diff_eq!(r.rho_low, rho_from_lambda(p.lambda2()).unwrap(), epsilon = 1e-14);
    }

    #[test]
    fn general_bounds_cases() {
        // sqrt 2 in [lambda1, lambda2]
        let p = TwoAngleParams::new(PI / 6.0, FRAC_PI_2).unwrap();
        let r = theorem_bounds_general(&p, &two_angle_essential(&p)).unwrap();
        assert_eq!((r.rho_low, r.rho_high, r.branch), (2.0, 2.0, RhoBranch::Sqrt2InBand));

        // lambda2 < sqrt 2: outer edge selected
        let p = TwoAngleParams::new(0.3, 0.5).unwrap();
        let r = theorem_bounds_general(&p, &two_angle_essential(&p)).unwrap();
        assert_eq!(r.branch, RhoBranch::Sqrt2AboveBand);
        assert_abs_diff_eq!(r.rho_low, rho_from_lambda(p.lambda2()).unwrap(), epsilon = 1e-15);

        // gap point selected: interval
        let p = TwoAngleParams::new(0.3, 2.0).unwrap();
        let lam = two_angle_essential(&p).with_points(&[p.c_minus_gamma()]);
        let r = theorem_bounds_general(&p, &lam).unwrap();
        assert_eq!(r.branch, RhoBranch::GapPointBounds);
        assert!(!r.is_exact());
        assert_abs_diff_eq!(r.rho_low, rho_from_lambda(p.lambda1()).unwrap(), epsilon = 1e-15);
        assert_abs_diff_eq!(r.rho_high, rho_from_lambda(p.c_minus_gamma()).unwrap(), epsilon = 1e-15);
        assert!(r.rho_low < r.rho_high && r.rho_high <= 2.0);
    }

    #[test]
    fn bell_chsh_values() {
        assert_abs_diff_eq!(bell_chsh_rho(2.0, 2.0).unwrap(), 2.0 * SQRT_2, epsilon = 1e-15);
        assert_eq!(bell_chsh_rho(0.0, 1.3).unwrap(), 2.0);
        let want = (4.0 + 2.0 * 3.9375f64.sqrt()).sqrt();
        assert_abs_diff_eq!(bell_chsh_rho(1.9843, 2.0).unwrap(), want, epsilon = 1e-4);
        assert!((bell_chsh_rho(1.9843, 2.0).unwrap() - 2.822871).abs() < 1e-6);
        assert_eq!(bell_chsh_rho(2.5, 1.0), Err(Error::RhoOutOfRange(2.5)));
        assert_eq!(bell_chsh_rho(-0.1, 1.0), Err(Error::RhoOutOfRange(-0.1)));
    }

    proptest! {
        #[test]
        fn rho_symmetries(l in -2.0..=2.0f64) {
            let r = rho_from_lambda(l).unwrap();
            prop_assert!((r - rho_from_lambda(-l).unwrap()).abs() <= 1e-12);
            let mirror = (4.0 - l * l).max(0.0).sqrt();
            prop_assert!((r - rho_from_lambda(mirror).unwrap()).abs() <= 1e-7);
            prop_assert!((0.0..=2.0).contains(&r));
        }

        #[test]
        fn constant_angle_rho_is_selection_composed(theta in 0.001..(PI - 0.001)) {
            let closed = rho_constant_angle(theta).unwrap().rho_low;
            let composed = rho_from_lambda(select_lambda0(&constant_angle_limit_set(theta).unwrap()).unwrap()).unwrap();
            prop_assert!((closed - composed).abs() <= 1e-12, "theta={} closed={} composed={}", theta, closed, composed);
        }

        #[test]
        fn reports_respect_tsirelson(w in 0.001..(PI - 0.001), t in 0.001..(PI - 0.001), r1 in 0.0..=2.0f64, r2 in 0.0..=2.0f64) {
            let p = TwoAngleParams::new(w, t).unwrap();
            prop_assert!(rho_two_constant_angles(&p).rho_high <= 2.0 + 1e-12);
            let r = theorem_bounds_general(&p, &two_angle_essential(&p)).unwrap();
            prop_assert!(r.rho_low <= r.rho_high && r.rho_high <= 2.0 + 1e-12);
            prop_assert!(bell_chsh_rho(r1, r2).unwrap() <= 2.0 * SQRT_2 + 1e-12);
        }

        #[test]
        fn gap_ordering(w in 0.01..(PI - 0.01), t in 0.01..(PI - 0.01)) {
            let p = TwoAngleParams::new(w, t).unwrap();
            prop_assume!((p.s() - p.delta()).abs() > 1e-6);
            let cg = p.c_minus_gamma();
            prop_assert!(-2.0 - 1e-15 <= -p.lambda2());
            prop_assert!(-p.lambda2() < -p.lambda1());
            prop_assert!(-p.lambda1() < cg && cg < p.lambda1());
            prop_assert!(p.lambda2() <= 2.0 + 1e-15);
        }
    }
}
