use crate::error::{Error, Result};

/// Closed interval `[lo, hi]` of the real line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn distance(&self, x: f64) -> f64 {
        if x < self.lo {
            self.lo - x
        } else if x > self.hi {
            x - self.hi
        } else {
            0.0
        }
    }
}

/// Finite union of closed intervals and isolated points.
///
/// Stored normalized: intervals sorted and pairwise disjoint (touching or
/// overlapping intervals are merged), points sorted, deduplicated and
/// outside every interval.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct LimitSet {
    intervals: Vec<Interval>,
    points: Vec<f64>,
}

impl LimitSet {
    pub fn new(intervals: Vec<(f64, f64)>, points: Vec<f64>) -> Result<Self> {
        let mut ivs = Vec::with_capacity(intervals.len());
        for (lo, hi) in intervals {
            if !(lo.is_finite() && hi.is_finite()) || lo > hi {
                return Err(Error::InvalidArgument(format!("bad interval [{lo}, {hi}]")));
            }
            ivs.push(Interval { lo, hi });
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidArgument("non-finite point".into()));
        }
        Ok(Self::normalized(ivs, points))
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn interval(lo: f64, hi: f64) -> Result<Self> {
        Self::new(vec![(lo, hi)], Vec::new())
    }

    pub fn from_points(points: Vec<f64>) -> Result<Self> {
        Self::new(Vec::new(), points)
    }

    fn normalized(mut intervals: Vec<Interval>, mut points: Vec<f64>) -> Self {
        intervals.sort_by(|a, b| a.lo.total_cmp(&b.lo));
        let mut merged: Vec<Interval> = Vec::with_capacity(intervals.len());
        for iv in intervals {
            match merged.last_mut() {
                Some(last) if iv.lo <= last.hi => last.hi = last.hi.max(iv.hi),
                _ => merged.push(iv),
            }
        }
        points.sort_by(f64::total_cmp);
        points.dedup();
        points.retain(|&p| !merged.iter().any(|iv| iv.contains(p)));
        Self { intervals: merged, points }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty() && self.points.is_empty()
    }

    pub fn union(&self, other: &LimitSet) -> LimitSet {
        let intervals = self.intervals.iter().chain(&other.intervals).copied().collect();
        let points = self.points.iter().chain(&other.points).copied().collect();
        Self::normalized(intervals, points)
    }

    /// Adds isolated points (absorbed if they fall into an interval).
    pub fn with_points(&self, extra: &[f64]) -> LimitSet {
        let points = self.points.iter().chain(extra).copied().collect();
        Self::normalized(self.intervals.clone(), points)
    }

    /// Drops isolated points within `tol` of `x`. Intervals are untouched.
    pub fn without_point(&self, x: f64, tol: f64) -> LimitSet {
        let points = self.points.iter().copied().filter(|p| (p - x).abs() > tol).collect();
        LimitSet { intervals: self.intervals.clone(), points }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.intervals.iter().any(|iv| iv.contains(x)) || self.points.contains(&x)
    }

    /// Distance from `x` to the set; infinite for the empty set.
    pub fn distance(&self, x: f64) -> f64 {
        let ivs = self.intervals.iter().map(|iv| iv.distance(x));
        let pts = self.points.iter().map(|p| (p - x).abs());
        ivs.chain(pts).fold(f64::INFINITY, f64::min)
    }

    /// All components as sorted closed intervals, points as `[p, p]`.
    pub fn components(&self) -> Vec<Interval> {
        let mut all: Vec<Interval> =
            self.intervals.iter().copied().chain(self.points.iter().map(|&p| Interval { lo: p, hi: p })).collect();
        all.sort_by(|a, b| a.lo.total_cmp(&b.lo));
        all
    }

    /// Largest absolute value in the set.
    pub fn max_abs(&self) -> Option<f64> {
        self.components().iter().map(|c| c.lo.abs().max(c.hi.abs())).reduce(f64::max)
    }
}
