// Copyright 2026 the Cayley-Cspace Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Brute-force ground truth for configuration spaces: sample the base
//! non-edge length on a uniform grid, decide realizability at each sample by
//! exhaustive orientation search, and refine every realizability boundary by
//! bisection. Deliberately independent of the analytic endpoint machinery so
//! the two can cross-validate each other.

use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalSet};
use crate::linkage::Linkage;
use crate::realize::{rc_realize, OrientationSeq, Tolerance, ORIENTATION_CAP};
use rayon::prelude::*;
use std::sync::Once;

/// Width to which realizability boundaries are bisected.
pub const BISECTION_WIDTH: f64 = 1e-9;

/// Realizability sampled over a grid, with bisected boundary values.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepProfile {
    pub grid: Vec<f64>,
    pub realizable: Vec<bool>,
    pub refined_boundaries: Vec<f64>,
}

/// Honors the `CSPACE_THREADS` environment variable the first time any
/// parallel work runs.
pub fn init_thread_pool() {
    static ONCE: Once = Once::new();
    ONCE.call_once(|| {
        if let Ok(v) = std::env::var("CSPACE_THREADS") {
            if let Ok(n) = v.parse::<usize>() {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
            }
        }
    });
}

/// Whether some orientation sequence realizes the linkage with the base
/// non-edge at length `dstar`.
pub fn realizable_at(l: &Linkage, dstar: f64, tol: &Tolerance) -> Result<bool> {
    if !(dstar > 0.0) {
        return Ok(false);
    }
    let c = l.construction();
    let k = c.steps.len();
    if k > ORIENTATION_CAP {
        return Err(Error::TooManyOrientations(k, ORIENTATION_CAP));
    }
    for mask in 0u64..(1 << k) {
        let sigma = OrientationSeq::from_mask(mask, k);
        match rc_realize(c, l.delta(), dstar, &sigma, tol) {
            Ok(Some(_)) => return Ok(true),
            Ok(None) => {}
            // A step whose two anchors coincide cannot be placed under this
            // orientation; treat as unrealizable rather than failing the
            // whole sweep.
            Err(Error::DegenerateStep(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(false)
}

/// The default sweep window: from half the smallest candidate value (or half
/// the smallest edge length) up to 1.25 times the total edge length, which
/// encloses every realizable base length.
pub fn default_sweep_range(l: &Linkage, smallest_candidate: Option<f64>, tol: &Tolerance) -> (f64, f64) {
    let lo_seed = smallest_candidate.unwrap_or_else(|| l.min_length());
    let lo = (lo_seed / 2.0).max(tol.abs_tol);
    let hi = 1.25 * l.total_length();
    (lo, hi)
}

/// Sweeps `n` uniform samples of the base length over `[lo, hi]` and
/// bisects every realizability sign change down to [`BISECTION_WIDTH`].
pub fn sweep(l: &Linkage, lo: f64, hi: f64, n: usize, tol: &Tolerance) -> Result<SweepProfile> {
    if !(0.0 < lo && lo < hi) || n < 2 {
        return Err(Error::InvalidInput(format!(
            "invalid sweep range [{lo}, {hi}] with {n} points"
        )));
    }
    init_thread_pool();
    let grid: Vec<f64> = (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect();
    let realizable: Vec<bool> = grid
        .par_iter()
        .map(|&d| realizable_at(l, d, tol))
        .collect::<Result<Vec<bool>>>()?;
    let mut refined_boundaries = Vec::new();
    for i in 1..n {
        if realizable[i - 1] != realizable[i] {
            refined_boundaries.push(bisect_boundary(
                l,
                grid[i - 1],
                realizable[i - 1],
                grid[i],
                tol,
            )?);
        }
    }
    Ok(SweepProfile { grid, realizable, refined_boundaries })
}

/// Bisects a single bracketed realizability change to [`BISECTION_WIDTH`]
/// and returns the midpoint of the final bracket.
fn bisect_boundary(
    l: &Linkage,
    mut a: f64,
    a_realizable: bool,
    mut b: f64,
    tol: &Tolerance,
) -> Result<f64> {
    while b - a > BISECTION_WIDTH {
        let m = 0.5 * (a + b);
        if realizable_at(l, m, tol)? == a_realizable {
            a = m;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

impl SweepProfile {
    /// The realizable region as an interval set, with boundaries replaced by
    /// their bisected refinements. A run that starts at the first grid point
    /// is extended down toward zero when realizability persists below the
    /// window (the window is chosen to avoid this for well-posed inputs).
    pub fn to_interval_set(&self, tol: &Tolerance) -> IntervalSet {
        let mut intervals = Vec::new();
        let mut boundary_iter = self.refined_boundaries.iter();
        let mut start: Option<f64> = None;
        for i in 0..self.grid.len() {
            let r = self.realizable[i];
            let prev = i > 0 && self.realizable[i - 1];
            if r && (i == 0 || !prev) {
                start = Some(if i == 0 {
                    self.grid[0]
                } else {
                    *boundary_iter.next().expect("boundary recorded per change")
                });
            }
            if !r && prev {
                let end = *boundary_iter.next().expect("boundary recorded per change");
                intervals.push(Interval::new(start.take().unwrap(), end));
            }
        }
        if let Some(s) = start {
            intervals.push(Interval::new(s, *self.grid.last().unwrap()));
        }
        IntervalSet::from_intervals(intervals, tol.abs_tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::linkage::load_linkage;

    fn tri3() -> Linkage {
        let g = Graph::build(3, &[(0, 2), (1, 2)]).unwrap();
        load_linkage(g, &[((0, 2), 3.0), ((1, 2), 4.0)], (0, 1)).unwrap()
    }

    #[test]
    fn triangle_inequality_decides_realizability() {
        let l = tri3();
        let tol = Tolerance::default();
        assert!(realizable_at(&l, 5.0, &tol).unwrap());
        assert!(realizable_at(&l, 1.0, &tol).unwrap());
        assert!(realizable_at(&l, 7.0, &tol).unwrap());
        assert!(!realizable_at(&l, 8.0, &tol).unwrap());
        assert!(!realizable_at(&l, 0.5, &tol).unwrap());
        assert!(!realizable_at(&l, 0.0, &tol).unwrap());
    }

    #[test]
    fn sweep_finds_triangle_boundaries() {
        let l = tri3();
        let tol = Tolerance::default();
        let p = sweep(&l, 0.5, 8.0, 76, &tol).unwrap();
        assert_eq!(p.refined_boundaries.len(), 2);
        assert!((p.refined_boundaries[0] - 1.0).abs() < 1e-8);
        assert!((p.refined_boundaries[1] - 7.0).abs() < 1e-8);
        let s = p.to_interval_set(&tol);
        assert_eq!(s.intervals().len(), 1);
        assert!((s.intervals()[0].lo - 1.0).abs() < 1e-8);
        assert!((s.intervals()[0].hi - 7.0).abs() < 1e-8);
    }

    #[test]
    fn empty_region_has_no_boundaries() {
        let l = tri3();
        let tol = Tolerance::default();
        let p = sweep(&l, 8.0, 9.0, 11, &tol).unwrap();
        assert!(p.realizable.iter().all(|&r| !r));
        assert!(p.refined_boundaries.is_empty());
        assert!(p.to_interval_set(&tol).is_empty());
    }

    #[test]
    fn default_range_encloses_total_length() {
        let l = tri3();
        let tol = Tolerance::default();
        let (lo, hi) = default_sweep_range(&l, Some(1.0), &tol);
        assert!(lo < 1.0 && hi > 7.0);
        let (lo, hi) = default_sweep_range(&l, None, &tol);
        assert!(lo > 0.0 && hi > 7.0);
    }
}
