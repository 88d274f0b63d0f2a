// Copyright 2026 the Cayley-Cspace Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Closed real intervals and finite unions thereof, with optional endpoint
//! provenance recording which extreme linkage produced an endpoint value.

use serde::{Deserialize, Serialize};

/// Where an interval endpoint value came from: the construction step and
/// length variant of the extreme linkage, the orientation sequence (as a
/// bitmask, low bit = first step), and the index of the realization among
/// the deduplicated successful ones. `oracle_fallback` marks values obtained
/// by bisection against the brute-force oracle rather than the analytic
/// realization path.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EndpointProvenance {
    pub step: usize,
    pub variant: u8,
    pub orientation_mask: Option<u64>,
    pub realization_index: usize,
    pub oracle_fallback: bool,
}

/// A candidate endpoint value with its provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateEndpoint {
    pub value: f64,
    pub provenance: EndpointProvenance,
}

/// A closed interval `[lo, hi]`; `lo == hi` encodes an isolated point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lo_provenance: Option<EndpointProvenance>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hi_provenance: Option<EndpointProvenance>,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo.is_finite() && hi.is_finite() && lo <= hi);
        Interval { lo, hi, lo_provenance: None, hi_provenance: None }
    }

    pub fn point(x: f64) -> Self {
        Interval::new(x, x)
    }

    pub fn contains(&self, x: f64, tol: f64) -> bool {
        x >= self.lo - tol && x <= self.hi + tol
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// A finite union of closed intervals, kept sorted and disjoint; adjacent
/// intervals whose gap is below the merge tolerance are fused.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct IntervalSet {
    intervals: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet { intervals: Vec::new() }
    }

    /// Normalizes an arbitrary collection: sorts by lower endpoint and merges
    /// intervals that overlap or whose gap is smaller than `merge_tol`.
    /// Provenance of surviving outer endpoints is retained.
    pub fn from_intervals(mut items: Vec<Interval>, merge_tol: f64) -> Self {
        items.sort_by(|a, b| {
            a.lo.partial_cmp(&b.lo)
                .unwrap()
                .then(a.hi.partial_cmp(&b.hi).unwrap())
        });
        let mut out: Vec<Interval> = Vec::new();
        for it in items {
            match out.last_mut() {
                Some(last) if it.lo <= last.hi + merge_tol => {
                    if it.hi > last.hi {
                        last.hi = it.hi;
                        last.hi_provenance = it.hi_provenance;
                    }
                }
                _ => out.push(it),
            }
        }
        IntervalSet { intervals: out }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, x: f64, tol: f64) -> bool {
        self.intervals.iter().any(|i| i.contains(x, tol))
    }

    /// All interval endpoints, ascending (duplicated for isolated points).
    pub fn endpoints(&self) -> Vec<f64> {
        self.intervals.iter().flat_map(|i| [i.lo, i.hi]).collect()
    }

    /// Union of two sets under the given merge tolerance.
    pub fn union(&self, other: &IntervalSet, merge_tol: f64) -> IntervalSet {
        let mut all = self.intervals.clone();
        all.extend(other.intervals.iter().cloned());
        IntervalSet::from_intervals(all, merge_tol)
    }

    /// Whether the two sets have the same interval structure with all
    /// endpoints within `tol`.
    pub fn approx_eq(&self, other: &IntervalSet, tol: f64) -> bool {
        self.intervals.len() == other.intervals.len()
            && self
                .intervals
                .iter()
                .zip(other.intervals.iter())
                .all(|(a, b)| (a.lo - b.lo).abs() <= tol && (a.hi - b.hi).abs() <= tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_sorts_and_merges() {
        let s = IntervalSet::from_intervals(
            vec![
                Interval::new(5.0, 7.0),
                Interval::new(1.0, 2.0),
                Interval::new(2.0, 3.0),
                Interval::new(6.0, 6.5),
            ],
            1e-9,
        );
        assert_eq!(s.intervals().len(), 2);
        assert_eq!((s.intervals()[0].lo, s.intervals()[0].hi), (1.0, 3.0));
        assert_eq!((s.intervals()[1].lo, s.intervals()[1].hi), (5.0, 7.0));
    }

    #[test]
    fn tiny_gaps_merge_but_real_gaps_do_not() {
        let s = IntervalSet::from_intervals(
            vec![Interval::new(0.0, 1.0), Interval::new(1.0 + 1e-12, 2.0)],
            1e-9,
        );
        assert_eq!(s.intervals().len(), 1);
        let s2 = IntervalSet::from_intervals(
            vec![Interval::new(0.0, 1.0), Interval::new(1.1, 2.0)],
            1e-9,
        );
        assert_eq!(s2.intervals().len(), 2);
    }

    #[test]
    fn isolated_points_are_kept() {
        let s = IntervalSet::from_intervals(vec![Interval::point(4.0)], 1e-9);
        assert_eq!(s.intervals().len(), 1);
        assert!(s.contains(4.0, 0.0));
        assert!(!s.contains(4.1, 1e-9));
    }

    #[test]
    fn membership_honors_tolerance() {
        let s = IntervalSet::from_intervals(vec![Interval::new(1.0, 2.0)], 1e-9);
        assert!(s.contains(2.0 + 1e-10, 1e-9));
        assert!(!s.contains(2.1, 1e-9));
    }
}
