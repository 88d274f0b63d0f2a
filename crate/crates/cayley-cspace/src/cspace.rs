// Copyright 2026 the Cayley-Cspace Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Configuration-space computation for the base non-edge length: candidate
//! interval endpoints are collected from the realizations of the extreme
//! linkages (one per construction step and length variant), and the actual
//! intervals are assembled per orientation sequence by probing realizability
//! at midpoints between consecutive candidates.

use crate::error::{Error, Result};
use crate::henneberg::recognize_henneberg;
use crate::interval::{CandidateEndpoint, EndpointProvenance, Interval, IntervalSet};
use crate::linkage::{ExtremeLinkage, ExtremeStatus, Linkage};
use crate::oracle;
use crate::realize::{
    measured_distance, orientation_of, rc_realize, realize_all_orientations, OrientationSeq,
    Tolerance, ORIENTATION_CAP,
};

/// How a configuration space was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Candidate endpoints from extreme linkages plus midpoint probing.
    Extremes,
    /// Quadrilateral-chain peeling.
    Qdim,
    /// Brute-force sweep.
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Extremes => "extremes",
            Method::Qdim => "qdim",
            Method::Oracle => "oracle",
        }
    }
}

/// Candidate endpoints plus a note whether any extreme linkage required the
/// sweep-oracle fallback (its graph not being buildable from any edge).
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateSet {
    pub endpoints: Vec<CandidateEndpoint>,
    pub oracle_fallback_used: bool,
}

/// A computed configuration space with its provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct CspaceResult {
    pub intervals: IntervalSet,
    pub candidates: Vec<CandidateEndpoint>,
    pub method: Method,
    pub oracle_fallback_used: bool,
    /// The linkage all candidate and endpoint provenance refers to: the
    /// input after rigid-subsystem reduction, which can have fewer vertices
    /// and differently numbered steps than the input. Equal to the input
    /// when nothing reduces.
    pub reduced: Linkage,
}

/// Collects every candidate endpoint value: for each defined extreme
/// linkage, the base-non-edge distance in each of its realizations.
///
/// Extreme linkages whose added pair is the base non-edge itself contribute
/// their added length directly (the measured distance would be exactly
/// that). A zero-length short variant (equal incident lengths on the base
/// non-edge) is dropped; the assembly probes toward zero instead.
pub fn candidate_endpoints(l: &Linkage, tol: &Tolerance) -> Result<CandidateSet> {
    let f = l.base_nonedge();
    let mut endpoints = Vec::new();
    let mut oracle_fallback_used = false;
    for status in l.extreme_statuses()? {
        let (x1, x2) = match status {
            ExtremeStatus::Suppressed { .. } => continue,
            ExtremeStatus::Defined(b) => *b,
        };
        for x in [x1, x2] {
            if x.added_length <= tol.abs_tol {
                continue;
            }
            if x.added_pair == f {
                endpoints.push(CandidateEndpoint {
                    value: x.added_length,
                    provenance: EndpointProvenance {
                        step: x.step_index,
                        variant: x.variant,
                        orientation_mask: None,
                        realization_index: 0,
                        oracle_fallback: false,
                    },
                });
                continue;
            }
            let mut base = recognize_henneberg(&x.graph, x.added_pair)?;
            if base.is_none() {
                for &e in x.graph.edges() {
                    base = recognize_henneberg(&x.graph, e)?;
                    if base.is_some() {
                        break;
                    }
                }
            }
            match base {
                Some(con) => {
                    let d = x.delta[&con.base_edge];
                    for (m, (_, r)) in
                        realize_all_orientations(&con, &x.delta, d, tol)?.iter().enumerate()
                    {
                        // The extreme graph realizes from its own
                        // construction; the recorded orientation must refer
                        // to the linkage's construction, so recover it from
                        // the coordinates.
                        let sigma = orientation_of(l.construction(), r);
                        endpoints.push(CandidateEndpoint {
                            value: measured_distance(r, f.0, f.1),
                            provenance: EndpointProvenance {
                                step: x.step_index,
                                variant: x.variant,
                                orientation_mask: Some(sigma.mask()),
                                realization_index: m,
                                oracle_fallback: false,
                            },
                        });
                    }
                }
                None => {
                    oracle_fallback_used = true;
                    endpoints.extend(fallback_candidates(l, &x, tol)?);
                }
            }
        }
    }
    endpoints.sort_by(|a, b| a.value.partial_cmp(&b.value).unwrap());
    Ok(CandidateSet { endpoints, oracle_fallback_used })
}

/// Oracle fallback for an extreme linkage whose graph is not buildable from
/// any edge: sweep the base non-edge length and, per orientation sequence,
/// bisect both the parameter values where the distance across the extreme's
/// added pair crosses the extreme length and the boundaries of the
/// orientation's realizability domain. The latter matter because an extreme
/// is typically attained exactly where its step's triple goes collinear and
/// the orientation's domain ends — the tracked distance then touches the
/// target one-sidedly and never changes sign. Domain boundaries form a
/// superset of the configuration space's endpoints, so emitting them keeps
/// the candidate set complete; interior extras are absorbed by midpoint
/// probing during assembly.
fn fallback_candidates(
    l: &Linkage,
    x: &ExtremeLinkage,
    tol: &Tolerance,
) -> Result<Vec<CandidateEndpoint>> {
    const SAMPLES: usize = 2001;
    let c = l.construction();
    let k = c.steps.len();
    if k > ORIENTATION_CAP {
        return Err(Error::TooManyOrientations(k, ORIENTATION_CAP));
    }
    let (lo, hi) = oracle::default_sweep_range(l, None, tol);
    let (u, w) = x.added_pair;
    let target = x.added_length;
    let mut out = Vec::new();
    for mask in 0u64..(1 << k) {
        let sigma = OrientationSeq::from_mask(mask, k);
        let h = |d: f64| -> Option<f64> {
            match rc_realize(c, l.delta(), d, &sigma, tol) {
                Ok(Some(r)) => Some(measured_distance(&r, u, w) - target),
                _ => None,
            }
        };
        let candidate = |value: f64| CandidateEndpoint {
            value,
            provenance: EndpointProvenance {
                step: x.step_index,
                variant: x.variant,
                orientation_mask: Some(mask),
                realization_index: 0,
                oracle_fallback: true,
            },
        };
        // Bisects the realizability boundary in (a, b) where exactly one
        // side realizes, returning the realizable side's value.
        let domain_boundary = |mut a: f64, mut b: f64, a_realizes: bool| -> f64 {
            for _ in 0..80 {
                let m = 0.5 * (a + b);
                if h(m).is_some() == a_realizes {
                    a = m;
                } else {
                    b = m;
                }
                if b - a <= 1e-12 {
                    break;
                }
            }
            if a_realizes {
                a
            } else {
                b
            }
        };
        let mut prev: Option<(f64, Option<f64>)> = None;
        for i in 0..SAMPLES {
            let d = lo + (hi - lo) * i as f64 / (SAMPLES - 1) as f64;
            let val = h(d);
            match (prev, val) {
                (Some((pd, Some(pv))), Some(v)) if pv == 0.0 || pv.signum() != v.signum() => {
                    let (mut a, mut b, va) = (pd, d, pv);
                    for _ in 0..80 {
                        let m = 0.5 * (a + b);
                        match h(m) {
                            Some(vm) if vm.signum() == va.signum() => a = m,
                            Some(_) => b = m,
                            None => break,
                        }
                        if b - a <= 1e-12 {
                            break;
                        }
                    }
                    out.push(candidate(0.5 * (a + b)));
                }
                (Some((pd, Some(_))), None) => {
                    out.push(candidate(domain_boundary(pd, d, true)));
                }
                (Some((pd, None)), Some(_)) => {
                    out.push(candidate(domain_boundary(pd, d, false)));
                }
                _ => {}
            }
            prev = Some((d, val));
        }
    }
    Ok(out)
}

/// Assembles the interval set from candidate values: per orientation
/// sequence, each candidate and each midpoint between consecutive
/// candidates is tested for realizability; maximal realizable runs become
/// closed intervals. A probe below the smallest candidate extends the first
/// interval down to zero when it succeeds (the zero endpoint arises from
/// dropped zero-length variants), and a probe above the largest candidate
/// is checked for consistency (nothing may be realizable there).
pub fn assemble_intervals(
    l: &Linkage,
    cands: &[CandidateEndpoint],
    tol: &Tolerance,
) -> Result<IntervalSet> {
    let mut values: Vec<f64> = cands
        .iter()
        .map(|c| c.value)
        .filter(|&v| v > tol.abs_tol)
        .collect();
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    values.dedup_by(|a, b| (*a - *b).abs() <= 1e-10 * (1.0 + b.abs()));
    if values.is_empty() {
        return Ok(IntervalSet::empty());
    }
    let c = l.construction();
    let k = c.steps.len();
    if k > ORIENTATION_CAP {
        return Err(Error::TooManyOrientations(k, ORIENTATION_CAP));
    }
    let m = values.len();
    let provenance_for = |v: f64| -> Option<EndpointProvenance> {
        cands
            .iter()
            .find(|ce| (ce.value - v).abs() <= 1e-9 * (1.0 + v.abs()))
            .map(|ce| ce.provenance.clone())
    };
    let mut intervals: Vec<Interval> = Vec::new();
    for mask in 0u64..(1 << k) {
        let sigma = OrientationSeq::from_mask(mask, k);
        let eval = |d: f64| -> bool {
            matches!(rc_realize(c, l.delta(), d, &sigma, tol), Ok(Some(_)))
        };
        let below = eval(0.5 * values[0]);
        let above = eval(values[m - 1] * 1.1 + 1.0);
        debug_assert!(!above, "realizable beyond all candidates under one orientation");
        let at: Vec<bool> = values.iter().map(|&v| eval(v)).collect();
        let mid: Vec<bool> = (0..m - 1)
            .map(|i| eval(0.5 * (values[i] + values[i + 1])))
            .collect();
        // Walk candidates left to right, growing realizable runs; a run is
        // closed whenever the gap to the next candidate is unrealizable.
        let mut start: Option<f64> = None;
        for i in 0..m {
            let here = at[i] || (i > 0 && mid[i - 1]) || (i + 1 < m && mid[i]) || (i == 0 && below);
            if here && start.is_none() {
                start = Some(if i == 0 && below { 0.0 } else { values[i] });
            }
            let continues_right = i + 1 < m && mid[i];
            if let Some(s) = start {
                if here && !continues_right {
                    let mut iv = Interval::new(s, values[i]);
                    iv.lo_provenance = provenance_for(s);
                    iv.hi_provenance = provenance_for(values[i]);
                    intervals.push(iv);
                    start = None;
                } else if !here {
                    start = None;
                }
            }
        }
    }
    Ok(IntervalSet::from_intervals(intervals, tol.abs_tol))
}

/// Computes the configuration space of the base non-edge: reduces rigid
/// subsystems, then either runs the analytic extreme-endpoint path or — when
/// a step with equal incident lengths invalidates it — the sweep oracle.
/// An unrealizable rigid subsystem yields the empty set.
pub fn config_space(l: &Linkage, tol: &Tolerance) -> Result<CspaceResult> {
    let reduced = match l.two_sum_reduce() {
        Ok(r) => r,
        Err(Error::SubsystemUnrealizable) => {
            return Ok(CspaceResult {
                intervals: IntervalSet::empty(),
                candidates: Vec::new(),
                method: Method::Extremes,
                oracle_fallback_used: false,
                reduced: l.clone(),
            })
        }
        Err(e) => return Err(e),
    };
    if !reduced.blocking_degenerate_steps().is_empty() {
        let lo = 1e-6_f64.max(tol.abs_tol);
        let hi = 1.25 * reduced.total_length();
        let profile = oracle::sweep(&reduced, lo, hi, 4001, tol)?;
        return Ok(CspaceResult {
            intervals: profile.to_interval_set(tol),
            candidates: Vec::new(),
            method: Method::Oracle,
            oracle_fallback_used: true,
            reduced,
        });
    }
    let cands = candidate_endpoints(&reduced, tol)?;
    let intervals = assemble_intervals(&reduced, &cands.endpoints, tol)?;
    Ok(CspaceResult {
        intervals,
        candidates: cands.endpoints,
        method: Method::Extremes,
        oracle_fallback_used: cands.oracle_fallback_used,
        reduced,
    })
}
