// Copyright 2026 the Cayley-Cspace Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Ruler-and-compass realization of vertex-addition constructions: place the
//! two base vertices on the x-axis, then place each new vertex at one of the
//! (at most two) intersection points of the circles around its two anchors.
//! One orientation sign per step selects the intersection; enumerating all
//! sign sequences enumerates all realizations.

use crate::error::{Error, Result};
use crate::graph::{pair, Pair, VertexId};
use crate::henneberg::HennebergConstruction;
use std::collections::HashMap;

/// Numeric comparison thresholds used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    /// Absolute tolerance on lengths and coordinates.
    pub abs_tol: f64,
    /// Tolerance governing the clamping window for near-tangent circle
    /// intersections (collinear configurations).
    pub collinearity_tol: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { abs_tol: 1e-9, collinearity_tol: 1e-9 }
    }
}

/// A point in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn dist(self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// One intersection-side choice per construction step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationSeq {
    pub bits: Vec<bool>,
}

impl OrientationSeq {
    /// The sequence encoded by the low `len` bits of `mask` (bit k is the
    /// sign of step k).
    pub fn from_mask(mask: u64, len: usize) -> Self {
        OrientationSeq { bits: (0..len).map(|k| mask >> k & 1 == 1).collect() }
    }

    pub fn mask(&self) -> u64 {
        self.bits
            .iter()
            .enumerate()
            .fold(0u64, |m, (k, &b)| if b { m | 1 << k } else { m })
    }

    /// Every sign flipped: mirrors the realization across the x-axis.
    pub fn flipped(&self) -> Self {
        OrientationSeq { bits: self.bits.iter().map(|&b| !b).collect() }
    }
}

/// A planar placement of every vertex, in the pinned frame: the first base
/// vertex at the origin, the second on the positive x-axis.
#[derive(Debug, Clone, PartialEq)]
pub struct Realization {
    points: Vec<Point>,
}

impl Realization {
    pub fn point(&self, v: VertexId) -> Point {
        self.points[v]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Largest coordinate-wise difference to another realization of the same
    /// vertex set.
    pub fn max_deviation(&self, other: &Realization) -> f64 {
        self.points
            .iter()
            .zip(other.points.iter())
            .map(|(p, q)| (p.x - q.x).abs().max((p.y - q.y).abs()))
            .fold(0.0, f64::max)
    }
}

/// Edge lengths keyed by normalized vertex pair.
pub type LengthMap = HashMap<Pair, f64>;

/// Fetches a length, panicking with a clear message if the edge is unknown;
/// internal callers only construct complete maps.
fn length(delta: &LengthMap, u: VertexId, w: VertexId) -> f64 {
    *delta
        .get(&pair(u, w))
        .unwrap_or_else(|| panic!("missing length for edge ({u}, {w})"))
}

/// Intersects the circles around `a` (radius `ra`) and `b` (radius `rb`).
///
/// In the frame with `a` at the origin and `b` on the positive x-axis at
/// distance `r3`, the intersection has `x = (ra^2 + r3^2 - rb^2) / (2 r3)`
/// and `y^2` given by the four-factor radicand
/// `(ra+rb+r3)(ra+rb-r3)(ra-rb+r3)(-ra+rb+r3) / (4 r3^2)`.
///
/// `sign` selects the half-plane (`true` = positive local y). A slightly
/// negative radicand within the clamping window is treated as tangency
/// (collinear configuration) and clamped to zero; below the window the
/// circles genuinely miss and `None` is returned. The window scales with the
/// cube of the size of the configuration so that it corresponds to a length
/// perturbation of order `collinearity_tol`.
pub fn circle_intersect(
    a: Point,
    ra: f64,
    b: Point,
    rb: f64,
    sign: bool,
    tol: &Tolerance,
) -> Result<Option<Point>> {
    let r3 = a.dist(b);
    if r3 <= tol.abs_tol {
        return Err(Error::CoincidentCenters);
    }
    let x = (ra * ra + r3 * r3 - rb * rb) / (2.0 * r3);
    let s = ra + rb + r3;
    let radicand = s * (ra + rb - r3) * (ra - rb + r3) * (-ra + rb + r3);
    let window = tol.collinearity_tol * s.powi(3).max(1.0);
    let y2 = if radicand >= 0.0 {
        radicand
    } else if radicand >= -window {
        0.0
    } else {
        return Ok(None);
    };
    let y = y2.sqrt() / (2.0 * r3);
    let (ux, uy) = ((b.x - a.x) / r3, (b.y - a.y) / r3);
    let yy = if sign { y } else { -y };
    Ok(Some(Point {
        x: a.x + x * ux - yy * uy,
        y: a.y + x * uy + yy * ux,
    }))
}

/// Realizes a construction step by step under the orientation sequence
/// `sigma`: base vertices pinned at `(0,0)` and `(d, 0)`, each new vertex
/// placed by [`circle_intersect`]. Returns `None` as soon as one step's
/// circles fail to intersect.
pub fn rc_realize(
    c: &HennebergConstruction,
    delta: &LengthMap,
    base_length: f64,
    sigma: &OrientationSeq,
    tol: &Tolerance,
) -> Result<Option<Realization>> {
    if sigma.bits.len() != c.steps.len() {
        return Err(Error::InvalidInput(format!(
            "orientation sequence has {} bits for {} steps",
            sigma.bits.len(),
            c.steps.len()
        )));
    }
    if !(base_length > 0.0) {
        return Err(Error::NonpositiveLength(c.base_edge.0, c.base_edge.1));
    }
    let n = c.vertex_count();
    let mut points = vec![Point { x: f64::NAN, y: f64::NAN }; n];
    points[c.base_edge.0] = Point { x: 0.0, y: 0.0 };
    points[c.base_edge.1] = Point { x: base_length, y: 0.0 };
    for (k, step) in c.steps.iter().enumerate() {
        let (u, w) = step.base_pair;
        let v = step.new_vertex;
        let placed = circle_intersect(
            points[u],
            length(delta, v, u),
            points[w],
            length(delta, v, w),
            sigma.bits[k],
            tol,
        )
        .map_err(|e| match e {
            Error::CoincidentCenters => Error::DegenerateStep(k),
            other => other,
        })?;
        match placed {
            Some(p) => points[v] = p,
            None => return Ok(None),
        }
    }
    Ok(Some(Realization { points }))
}

/// Cap on the number of orientation bits enumerated exhaustively.
pub const ORIENTATION_CAP: usize = 16;

/// Attempts every orientation sequence and returns the successful ones,
/// dropping realizations numerically identical to an earlier one (which
/// happens exactly when every differing sign sits at a collinear step).
/// Output order follows ascending bitmask, so it is deterministic.
pub fn realize_all_orientations(
    c: &HennebergConstruction,
    delta: &LengthMap,
    base_length: f64,
    tol: &Tolerance,
) -> Result<Vec<(OrientationSeq, Realization)>> {
    let k = c.steps.len();
    if k > ORIENTATION_CAP {
        return Err(Error::TooManyOrientations(k, ORIENTATION_CAP));
    }
    let mut out: Vec<(OrientationSeq, Realization)> = Vec::new();
    for mask in 0u64..(1 << k) {
        let sigma = OrientationSeq::from_mask(mask, k);
        if let Some(r) = rc_realize(c, delta, base_length, &sigma, tol)? {
            let duplicate = out
                .iter()
                .any(|(_, prev)| prev.max_deviation(&r) <= tol.abs_tol);
            if !duplicate {
                out.push((sigma, r));
            }
        }
    }
    Ok(out)
}

/// Recovers the orientation sequence of a construction from realized
/// coordinates: bit `k` is the sign of the cross product of the step's
/// anchor direction `w - u` with `v - u`. A collinear step has zero cross
/// product and gets `true`; both signs place it identically there, but
/// only one of them may remain valid as the configuration opens up, so
/// consumers probing near a collinear configuration should try the
/// returned sequence with that step's bit in either state.
pub fn orientation_of(c: &HennebergConstruction, r: &Realization) -> OrientationSeq {
    let bits = c
        .steps
        .iter()
        .map(|s| {
            let (u, w) = s.base_pair;
            let (pu, pw, pv) = (r.point(u), r.point(w), r.point(s.new_vertex));
            (pw.x - pu.x) * (pv.y - pu.y) - (pw.y - pu.y) * (pv.x - pu.x) >= 0.0
        })
        .collect();
    OrientationSeq { bits }
}

/// Euclidean distance between two realized vertices.
pub fn measured_distance(p: &Realization, u: VertexId, w: VertexId) -> f64 {
    p.point(u).dist(p.point(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::henneberg::ConstructionStep;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn right_triangle_intersection() {
        let p = circle_intersect(
            Point { x: 0.0, y: 0.0 },
            3.0,
            Point { x: 4.0, y: 0.0 },
            5.0,
            true,
            &tol(),
        )
        .unwrap()
        .unwrap();
        assert!((p.x - 0.0).abs() < 1e-12 && (p.y - 3.0).abs() < 1e-12);
    }

    #[test]
    fn disjoint_circles_are_absent() {
        let r = circle_intersect(
            Point { x: 0.0, y: 0.0 },
            1.0,
            Point { x: 4.0, y: 0.0 },
            1.0,
            true,
            &tol(),
        )
        .unwrap();
        assert!(r.is_none());
    }

    #[test]
    fn tangency_clamps_to_midpoint() {
        for sign in [true, false] {
            let p = circle_intersect(
                Point { x: 0.0, y: 0.0 },
                2.0,
                Point { x: 4.0, y: 0.0 },
                2.0,
                sign,
                &tol(),
            )
            .unwrap()
            .unwrap();
            assert!((p.x - 2.0).abs() < 1e-12 && p.y.abs() < 1e-12);
        }
    }

    #[test]
    fn coincident_centers_error() {
        let r = circle_intersect(
            Point { x: 1.0, y: 1.0 },
            2.0,
            Point { x: 1.0, y: 1.0 },
            2.0,
            true,
            &tol(),
        );
        assert_eq!(r, Err(Error::CoincidentCenters));
    }

    fn triangle_345() -> (HennebergConstruction, LengthMap) {
        let c = HennebergConstruction {
            base_edge: (0, 1),
            steps: vec![ConstructionStep { new_vertex: 2, base_pair: (0, 1) }],
        };
        let mut delta = LengthMap::new();
        delta.insert(pair(0, 2), 3.0);
        delta.insert(pair(1, 2), 4.0);
        (c, delta)
    }

    #[test]
    fn realize_345_triangle() {
        let (c, delta) = triangle_345();
        let sigma = OrientationSeq::from_mask(1, 1);
        let r = rc_realize(&c, &delta, 5.0, &sigma, &tol()).unwrap().unwrap();
        let p = r.point(2);
        assert!((p.x - 1.8).abs() < 1e-12 && (p.y - 2.4).abs() < 1e-12);
        for (u, w, d) in [(0, 1, 5.0), (0, 2, 3.0), (1, 2, 4.0)] {
            assert!((measured_distance(&r, u, w) - d).abs() < 1e-9);
        }
    }

    #[test]
    fn triangle_has_mirror_pair() {
        let (c, delta) = triangle_345();
        let all = realize_all_orientations(&c, &delta, 5.0, &tol()).unwrap();
        assert_eq!(all.len(), 2);
        let (a, b) = (&all[0].1, &all[1].1);
        assert!((a.point(2).y + b.point(2).y).abs() < 1e-12);
    }

    #[test]
    fn impossible_base_length_fails_for_all_orientations() {
        let (c, delta) = triangle_345();
        let all = realize_all_orientations(&c, &delta, 8.0, &tol()).unwrap();
        assert!(all.is_empty());
    }

    #[test]
    fn collinear_step_deduplicates() {
        let (c, delta) = triangle_345();
        // Base length 7 = 3 + 4: the apex lies on the base line, both signs
        // coincide.
        let all = realize_all_orientations(&c, &delta, 7.0, &tol()).unwrap();
        assert_eq!(all.len(), 1);
        assert!(all[0].1.point(2).y.abs() < 1e-9);
    }

    #[test]
    fn flipping_all_bits_reflects_across_x_axis() {
        let c = HennebergConstruction {
            base_edge: (0, 1),
            steps: vec![
                ConstructionStep { new_vertex: 2, base_pair: (0, 1) },
                ConstructionStep { new_vertex: 3, base_pair: (1, 2) },
            ],
        };
        let mut delta = LengthMap::new();
        delta.insert(pair(0, 2), 3.0);
        delta.insert(pair(1, 2), 4.0);
        delta.insert(pair(1, 3), 2.0);
        delta.insert(pair(2, 3), 3.5);
        let sigma = OrientationSeq::from_mask(0b01, 2);
        let t = tol();
        let r = rc_realize(&c, &delta, 5.0, &sigma, &t).unwrap().unwrap();
        let rf = rc_realize(&c, &delta, 5.0, &sigma.flipped(), &t)
            .unwrap()
            .unwrap();
        for v in 0..4 {
            assert!((r.point(v).x - rf.point(v).x).abs() < 1e-12);
            assert!((r.point(v).y + rf.point(v).y).abs() < 1e-12);
        }
    }
}
