//! Reference computations shared by the integration tests. None of these
//! call into the library's solvers.

#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_4, PI, SQRT_2};

/// `det(diag(d) + offdiag(e) - x I)` by the continuant recursion.
pub fn continuant(d: &[f64], e: &[f64], x: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, d[0] - x);
    for k in 1..d.len() {
        let next = (d[k] - x) * cur - e[k - 1] * e[k - 1] * prev;
        prev = cur;
        cur = next;
    }
    cur
}

fn bisect_sign_change(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let mut fa = f(a);
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// Eigenvalues of a symmetric tridiagonal matrix as the roots of its
/// characteristic polynomial, by a sign-change scan refined by bisection.
pub fn charpoly_eigenvalues(d: &[f64], e: &[f64]) -> Vec<f64> {
    let n = d.len();
    let r = (0..n)
        .map(|i| d[i].abs() + if i > 0 { e[i - 1].abs() } else { 0.0 } + if i + 1 < n { e[i].abs() } else { 0.0 })
        .fold(0.0, f64::max)
        + 1.0;
    let mut points = 50_000;
    loop {
        let step = 2.0 * r / points as f64;
        let mut roots = Vec::new();
        let mut a = -r;
        let mut fa = continuant(d, e, a);
        for i in 1..=points {
            let b = -r + step * i as f64;
            let fb = continuant(d, e, b);
            if fa == 0.0 {
                roots.push(a);
            } else if fa.signum() != fb.signum() && fb != 0.0 {
                roots.push(bisect_sign_change(|x| continuant(d, e, x), a, b));
            }
            a = b;
            fa = fb;
        }
        if roots.len() == n || points > 10_000_000 {
            return roots;
        }
        points *= 10;
    }
}

/// Eigenvalues of a dense symmetric matrix (row-major) by cyclic Jacobi rotations.
pub fn jacobi_eigenvalues(n: usize, entries: &[f64]) -> Vec<f64> {
    let mut a = entries.to_vec();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j].powi(2))
            .sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let t = if tau == 0.0 { 1.0 } else { t };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    ev.sort_by(f64::total_cmp);
    ev
}

pub fn matmul(n: usize, x: &[f64], y: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; n * n];
    for i in 0..n {
        for k in 0..n {
            let xik = x[i * n + k];
            for j in 0..n {
                out[i * n + j] += xik * y[k * n + j];
            }
        }
    }
    out
}

/// Spectral radius of `AB - BA` from the eigenvalues of `-(AB - BA)^2`.
pub fn commutator_radius(n: usize, a: &[f64], b: &[f64]) -> f64 {
    let (ab, ba) = (matmul(n, a, b), matmul(n, b, a));
    let k: Vec<f64> = ab.iter().zip(&ba).map(|(x, y)| x - y).collect();
    let sq = matmul(n, &k, &k);
    let neg: Vec<f64> = sq.iter().map(|x| -x).collect();
    jacobi_eigenvalues(n, &neg).last().copied().unwrap_or(0.0).max(0.0).sqrt()
}

/// Spectral radius of `[A, B]` for constant angle `theta`, from the point of
/// `[-2 sin theta, 2 sin theta]` whose square is closest to 2.
pub fn constant_angle_rho(theta: f64) -> f64 {
    let s = theta.sin();
    if 2.0 * s >= SQRT_2 {
        2.0
    } else {
        let l = 2.0 * s;
        (l * l * (4.0 - l * l)).sqrt()
    }
}

/// Largest outlier of the leading-block family with `omega = pi/2` in
/// `(2 sin theta, 2]`, from `l^2 - (c + s q + 1) l + (c + s q - 1) = 0`
/// with `q` the root of `q^2 - (l/s) q + 1` inside the unit disk.
pub fn leading_block_outlier(theta: f64) -> Option<f64> {
    let (s, c) = theta.sin_cos();
    let g = |l: f64| {
        let mu = l / s;
        let q = 0.5 * (mu - (mu * mu - 4.0).sqrt());
        l * l - (c + s * q + 1.0) * l + (c + s * q - 1.0)
    };
    let lo = 2.0 * s * (1.0 + 1e-12);
    let steps = 20_000;
    let h = (2.0 - lo) / steps as f64;
    let mut best = None;
    let mut a = lo;
    let mut ga = g(a);
    for i in 1..=steps {
        let b = lo + h * i as f64;
        let gb = g(b);
        if ga.signum() != gb.signum() {
            best = Some(bisect_sign_change(g, a, b));
        }
        a = b;
        ga = gb;
    }
    best
}

/// Abscissa in `(3 pi / 4, pi)` where the largest point of `sigma(A + B)`
/// of the `omega = pi/2` leading-block family meets `2 |cos theta|`.
pub fn crossing_abscissa() -> f64 {
    let f = |t: f64| leading_block_outlier(t).unwrap_or(2.0 * t.sin()) - 2.0 * t.cos().abs();
    bisect_sign_change(f, 3.0 * FRAC_PI_4 + 1e-6, PI - 0.05)
}

/// Hausdorff distance between a finite set and a union of closed intervals.
pub fn hausdorff_points_intervals(points: &[f64], intervals: &[(f64, f64)]) -> f64 {
    let dist_to_intervals = |x: f64| {
        intervals
            .iter()
            .map(|&(lo, hi)| {
                if x < lo {
                    lo - x
                } else if x > hi {
                    x - hi
                } else {
                    0.0
                }
            })
            .fold(f64::INFINITY, f64::min)
    };
    let forward = points.iter().map(|&x| dist_to_intervals(x)).fold(0.0, f64::max);
    let mut sorted = points.to_vec();
    sorted.sort_by(f64::total_cmp);
    let dist_to_points = |y: f64| sorted.iter().map(|&p| (p - y).abs()).fold(f64::INFINITY, f64::min);
    let mut backward: f64 = 0.0;
    for &(lo, hi) in intervals {
        backward = backward.max(dist_to_points(lo)).max(dist_to_points(hi));
        for w in sorted.windows(2) {
            let mid = 0.5 * (w[0] + w[1]);
            if (lo..=hi).contains(&mid) {
                backward = backward.max(dist_to_points(mid));
            }
        }
    }
    forward.max(backward)
}

#[test]
fn oracles_agree_on_small_cases() {
    let roots = charpoly_eigenvalues(&[0.0, 0.0, 0.0], &[1.0, 1.0]);
    assert!((roots[0] + SQRT_2).abs() < 1e-13 && roots[1].abs() < 1e-13 && (roots[2] - SQRT_2).abs() < 1e-13);
    let j = jacobi_eigenvalues(3, &[0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0]);
    for (a, b) in roots.iter().zip(&j) {
        assert!((a - b).abs() < 1e-13);
    }
    let h = hausdorff_points_intervals(&[-1.0, 0.0, 1.0], &[(-1.0, 1.0)]);
    assert!((h - 0.5).abs() < 1e-15);
    assert!((hausdorff_points_intervals(&[0.0, 3.0], &[(-1.0, 1.0)]) - 2.0).abs() < 1e-15);
}
