//! Finite-section experiments tying truncations to the closed forms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::operators::{build_dense_pair, build_sum_truncation, commutator, AngleSpec, GeneralPair, PairFamily};
use crate::par::{self, Exec};
use crate::theory::{
    bell_chsh_rho, outlier_solve_eq4, rho_constant_angle, rho_from_lambda, rho_two_constant_angles, select_lambda0,
    tilde_point, two_angle_essential, Interval, LimitSet, RhoBranch, RhoReport, EXCLUSION_TOL,
};
use crate::tridiag::{
    dense_sym_eigenvalues, householder_tridiagonalize, tridiag_eigenvalues_in, tridiag_eigenvalues_with,
    DenseSymmetricMatrix, SpectrumSample, TridiagonalSymmetricMatrix,
};

/// Default distance from the essential spectrum beyond which an
/// eigenvalue may count as an outlier.
pub const DEFAULT_MARGIN: f64 = 0.02;
/// Order increment of the second truncation used for stabilization.
pub const DEFAULT_STEP: usize = 200;
/// Lower end of the angle range for random Tsirelson trials.
pub const RANDOM_ANGLE_PAD: f64 = 0.05;
/// Largest block count of a random Tsirelson pair.
pub const RANDOM_MAX_BLOCKS: usize = 6;

/// A set of reals usable in [`hausdorff_distance`].
pub trait SpectralSet {
    /// Sorted closed components; isolated points are degenerate intervals.
    fn components(&self) -> Vec<Interval>;
}

impl SpectralSet for LimitSet {
    fn components(&self) -> Vec<Interval> {
        LimitSet::components(self)
    }
}

impl SpectralSet for SpectrumSample {
    fn components(&self) -> Vec<Interval> {
        self.values().iter().map(|&x| Interval { lo: x, hi: x }).collect()
    }
}

impl SpectralSet for [f64] {
    fn components(&self) -> Vec<Interval> {
        let mut v: Vec<Interval> = self.iter().map(|&x| Interval { lo: x, hi: x }).collect();
        v.sort_by(|a, b| a.lo.total_cmp(&b.lo));
        v
    }
}

fn distance_to(sorted: &[Interval], x: f64) -> f64 {
    let idx = sorted.partition_point(|c| c.lo <= x);
    let below = idx.checked_sub(1).map_or(f64::INFINITY, |i| (x - sorted[i].hi).max(0.0));
    let above = sorted.get(idx).map_or(f64::INFINITY, |c| c.lo - x);
    below.min(above)
}

// sup over a of the distance to b. On each component of a the distance
// function is piecewise linear with maxima at the component's ends or at
// midpoints of gaps of b.
fn directed(a: &[Interval], b: &[Interval]) -> f64 {
    let mut worst = 0.0_f64;
    for comp in a {
        worst = worst.max(distance_to(b, comp.lo)).max(distance_to(b, comp.hi));
        if comp.hi > comp.lo {
            let start = b.partition_point(|c| c.hi < comp.lo).saturating_sub(1);
            for pair in b[start..].windows(2) {
                let mid = 0.5 * (pair[0].hi + pair[1].lo);
                if mid > comp.hi {
                    break;
                }
                if mid >= comp.lo {
                    worst = worst.max(distance_to(b, mid));
                }
            }
        }
    }
    worst
}

/// Hausdorff distance `max(sup_a d(a, B), sup_b d(b, A))`.
pub fn hausdorff_distance<A, B>(a: &A, b: &B) -> Result<f64>
where
    A: SpectralSet + ?Sized,
    B: SpectralSet + ?Sized,
{
    let (ca, cb) = (a.components(), b.components());
    if ca.is_empty() || cb.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(directed(&ca, &cb).max(directed(&cb, &ca)))
}

/// Eigenvalues of `s` farther than `margin` from `ess` whose nearest
/// neighbour in the larger truncation `s_next` lies within `margin / 10`.
pub fn detect_outliers(s: &SpectrumSample, ess: &LimitSet, margin: f64, s_next: &SpectrumSample) -> Vec<f64> {
    stable_exterior(s.values(), ess, margin, s_next.values())
}

fn stable_exterior(values: &[f64], ess: &LimitSet, margin: f64, next: &[f64]) -> Vec<f64> {
    let next: Vec<Interval> = next.iter().map(|&x| Interval { lo: x, hi: x }).collect();
    values.iter().copied().filter(|&x| ess.distance(x) > margin && distance_to(&next, x) < 0.1 * margin).collect()
}

/// Eigenvalues of `m` at distance at least `margin` from `ess`, computed
/// by bisecting only the indices that fall outside the widened set.
pub fn exterior_eigenvalues(m: &TridiagonalSymmetricMatrix, ess: &LimitSet, margin: f64, exec: Exec) -> Vec<f64> {
    let tol = m.default_tol();
    let (glo, ghi) = m.gershgorin_bounds();
    let mut out = Vec::new();
    let mut start = glo - 1.0;
    for iv in ess.components() {
        let end = iv.lo - margin;
        if end > start {
            out.extend(tridiag_eigenvalues_in(m, start, end, tol, exec));
        }
        start = start.max(iv.hi + margin);
    }
    if ghi + 1.0 > start {
        out.extend(tridiag_eigenvalues_in(m, start, ghi + 1.0, tol, exec));
    }
    out
}

/// Knobs of the finite-section limit-set estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiniteSectionOptions {
    pub margin: f64,
    pub step: usize,
    pub exec: Exec,
}

impl Default for FiniteSectionOptions {
    fn default() -> Self {
        Self { margin: DEFAULT_MARGIN, step: DEFAULT_STEP, exec: Exec::default() }
    }
}

/// Limit set estimated from the order-`n` section of `f`: the analytic
/// essential spectrum of the tail symbol plus the stabilized exterior
/// eigenvalues. Returns the set and the detected outliers.
pub fn limit_set_estimate(f: &PairFamily, n: usize, opts: &FiniteSectionOptions) -> Result<(LimitSet, Vec<f64>)> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::BadTruncationOrder(n));
    }
    if opts.step == 0 || !opts.step.is_multiple_of(2) || opts.margin.is_nan() || opts.margin <= 0.0 {
        return Err(Error::InvalidArgument("step must be positive and even, margin positive".into()));
    }
    let ess = two_angle_essential(&f.tail_params());
    let current = exterior_eigenvalues(&build_sum_truncation(f, n)?, &ess, opts.margin, opts.exec);
    let next = exterior_eigenvalues(&build_sum_truncation(f, n + opts.step)?, &ess, 0.5 * opts.margin, opts.exec);
    let outliers = stable_exterior(&current, &ess, opts.margin, &next);
    Ok((ess.with_points(&outliers), outliers))
}

/// The gap point to exclude for a two-constant-angle family, if any.
pub fn default_exclusion(f: &PairFamily) -> Option<f64> {
    if f.has_constant_angles() {
        tilde_point(&f.tail_params())
    } else {
        None
    }
}

/// Closed-form spectral radius when `f` has constant angles.
pub fn closed_form_rho(f: &PairFamily) -> Option<RhoReport> {
    if !f.has_constant_angles() {
        return None;
    }
    let p = f.tail_params();
    if p.omega() == p.theta() {
        rho_constant_angle(p.theta()).ok()
    } else {
        Some(rho_two_constant_angles(&p))
    }
}

/// Spectral radius of `[A, B]` from the order-`n` section of `f`, with
/// isolated points within `1e-6` of `exclusion` removed before selection.
pub fn rho_numeric(f: &PairFamily, n: usize, exclusion: Option<f64>) -> Result<RhoReport> {
    rho_numeric_with(f, n, exclusion, &FiniteSectionOptions::default())
}

pub fn rho_numeric_with(
    f: &PairFamily,
    n: usize,
    exclusion: Option<f64>,
    opts: &FiniteSectionOptions,
) -> Result<RhoReport> {
    let (mut lam, _) = limit_set_estimate(f, n, opts)?;
    if let Some(x) = exclusion {
        lam = lam.without_point(x, EXCLUSION_TOL);
    }
    let lambda0 = select_lambda0(&lam)?;
    Ok(RhoReport::exact(rho_from_lambda(lambda0)?, Some(lambda0), RhoBranch::Numeric))
}

/// `rho([A, B])` of a finite pair as `sqrt(lambda_max(-C^2))`, `C = [A, B]`.
pub fn rho_commutator_direct(p: &GeneralPair) -> f64 {
    let c = commutator(p);
    // -C^2 = C^T C for skew-symmetric C
    let gram = DenseSymmetricMatrix::symmetric_part(&c.transpose().matmul(&c));
    let reduced = householder_tridiagonalize(&gram);
    let top = crate::tridiag::tridiag_eigenvalues(&reduced, reduced.default_tol()).max().unwrap_or(0.0);
    top.max(0.0).sqrt()
}

/// Spectrum of `A + B` for a finite pair.
pub fn pair_sum_spectrum(p: &GeneralPair) -> SpectrumSample {
    let sum = p.sum();
    let reduced = householder_tridiagonalize(&sum);
    dense_sym_eigenvalues(&sum, reduced.default_tol())
}

/// Bell-CHSH spectral radius for two finite pairs.
pub fn bell_chsh_value(p1: &GeneralPair, p2: &GeneralPair) -> Result<f64> {
    bell_chsh_rho(rho_commutator_direct(p1), rho_commutator_direct(p2))
}

/// `A = r(pi/2)`, `B = diag(1, -1)`: reflections at angle `pi/4` to each
/// other, with `[A, B] = [[0, -2], [2, 0]]` and `rho = 2`.
pub fn tsirelson_maximizing_pair() -> GeneralPair {
    let f = PairFamily::constant(FRAC_PI_2).expect("pi/2 is a valid angle");
    build_dense_pair(&f, 1).expect("one block")
}

/// Random finite pair for trial `trial` of the stream seeded by `seed`.
///
/// ChaCha8 seeded with `seed`, stream `trial`: block count uniform in
/// `1..=6`, angles uniform in `(0.05, pi - 0.05)`.
pub fn random_pair(seed: u64, trial: u64) -> GeneralPair {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let m = rng.gen_range(1..=RANDOM_MAX_BLOCKS);
    let mut angle = || rng.gen_range(RANDOM_ANGLE_PAD..PI - RANDOM_ANGLE_PAD);
    let omega: Vec<f64> = (0..m).map(|_| angle()).collect();
    let theta: Vec<f64> = (0..m.saturating_sub(1)).map(|_| angle()).collect();
    let f = PairFamily::new(
        AngleSpec::new(omega, FRAC_PI_2).expect("angles drawn inside (0, pi)"),
        AngleSpec::new(theta, FRAC_PI_2).expect("angles drawn inside (0, pi)"),
    );
    build_dense_pair(&f, m).expect("m >= 1")
}

/// Largest Bell-CHSH spectral radius over `trials` random pairs of pairs.
pub fn tsirelson_suite(seed: u64, trials: usize) -> Result<f64> {
    tsirelson_suite_with(seed, trials, Exec::default())
}

pub fn tsirelson_suite_with(seed: u64, trials: usize, exec: Exec) -> Result<f64> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let values = par::map_range(exec, trials, |t| {
        let t = t as u64;
        bell_chsh_value(&random_pair(seed, 2 * t), &random_pair(seed, 2 * t + 1))
    });
    values.into_iter().try_fold(f64::NEG_INFINITY, |m, v| Ok(m.max(v?)))
}

/// Hausdorff distance of a truncation spectrum to a limit set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRecord {
    pub n: usize,
    pub hausdorff_to_limit: f64,
}

pub fn convergence_study(f: &PairFamily, orders: &[usize], limit: &LimitSet) -> Result<Vec<ConvergenceRecord>> {
    convergence_study_with(f, orders, limit, Exec::default())
}

pub fn convergence_study_with(
    f: &PairFamily,
    orders: &[usize],
    limit: &LimitSet,
    exec: Exec,
) -> Result<Vec<ConvergenceRecord>> {
    if orders.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("orders must be strictly increasing".into()));
    }
    let matrices = orders.iter().map(|&n| build_sum_truncation(f, n)).collect::<Result<Vec<_>>>()?;
    let records = par::map_slice(exec, &matrices, |m| {
        let spectrum = tridiag_eigenvalues_with(m, m.default_tol(), Exec::Sequential);
        hausdorff_distance(&spectrum, limit).map(|d| ConvergenceRecord { n: m.order(), hausdorff_to_limit: d })
    });
    records.into_iter().collect()
}

/// One grid point of a parameter sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub theta: f64,
    pub eigenvalues: SpectrumSample,
    pub detected_outliers: Vec<f64>,
    pub rho_numeric: f64,
    pub rho_closed: Option<f64>,
}

/// Evaluates `family(theta)` for every grid point: the order-`n` spectrum,
/// stabilized outliers, and numeric and closed-form spectral radii.
/// Grid points are independent; the output does not depend on `exec`.
pub fn sweep<F>(thetas: &[f64], n: usize, family: F, exec: Exec) -> Result<Vec<SweepRow>>
where
    F: Fn(f64) -> Result<PairFamily> + Sync + Send,
{
    if thetas.is_empty() {
        return Err(Error::InvalidArgument("empty parameter grid".into()));
    }
    let opts = FiniteSectionOptions { exec: Exec::Sequential, ..FiniteSectionOptions::default() };
    let rows = par::map_slice(exec, thetas, |&theta| -> Result<SweepRow> {
        let f = family(theta)?;
        let m = build_sum_truncation(&f, n)?;
        let eigenvalues = tridiag_eigenvalues_with(&m, m.default_tol(), Exec::Sequential);
        let (mut lam, detected_outliers) = limit_set_estimate(&f, n.max(4), &opts)?;
        if let Some(x) = default_exclusion(&f) {
            lam = lam.without_point(x, EXCLUSION_TOL);
        }
        let rho_numeric = rho_from_lambda(select_lambda0(&lam)?)?;
        let rho_closed = closed_form_rho(&f).and_then(|r| r.value());
        Ok(SweepRow { theta, eigenvalues, detected_outliers, rho_numeric, rho_closed })
    });
    rows.into_iter().collect()
}

/// Largest point of `sigma(A + B)` for the leading-block family:
/// `max(2s, largest outlier)`.
pub fn leading_block_lambda_max(omega: f64, theta: f64) -> Result<f64> {
    let edge = 2.0 * theta.sin();
    let outliers = outlier_solve_eq4(omega, theta)?;
    Ok(outliers.iter().map(|r| r.lambda).fold(edge, f64::max))
}

/// Abscissa in `(lo, hi)` where the largest point of `sigma(A + B)` for
/// the leading-block family crosses `2 |cos theta|`, by bisection to `1e-10`.
pub fn outlier_edge_crossing(omega: f64, lo: f64, hi: f64) -> Result<f64> {
    let g = |t: f64| leading_block_lambda_max(omega, t).map(|l| l - 2.0 * t.cos().abs());
    let (mut a, mut b) = (lo, hi);
    let ga = g(a)?;
    if (ga < 0.0) == (g(b)? < 0.0) {
        return Err(Error::InvalidArgument(format!("no sign change of lambda_max - 2|cos| on [{lo}, {hi}]")));
    }
    while b - a > 1e-10 {
        let mid = 0.5 * (a + b);
        if (g(mid)? < 0.0) == (ga < 0.0) {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok(0.5 * (a + b))
}
