// Copyright 2026 the Cayley-Cspace Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! The quadrilateral diagonal interval map and the linear-time
//! configuration-space recursion built on it.
//!
//! Four points with fixed side lengths and two unknown diagonals are
//! coplanar exactly when the 5-point Cayley-Menger determinant in the
//! squared distances vanishes (the spanned tetrahedron has volume zero).
//! For fixed sides that determinant is a quadratic polynomial in either
//! squared diagonal, so an interval of one diagonal maps to at most two
//! intervals of the other; pushing intervals through this curve, link by
//! link along a chain of quadrilaterals seeded at a triangle, computes the
//! configuration space of suitable linkages in time linear in the vertex
//! count.

use crate::error::{Error, Result};
use crate::graph::{pair, Graph, VertexId};
use crate::interval::{Interval, IntervalSet};
use crate::linkage::Linkage;
use crate::realize::{LengthMap, Tolerance};

/// A quadrilateral with fixed sides and two diagonals: vertices `v1, v2`
/// carry the output diagonal `f = (v1, v2)`, vertices `v3, v4` the input
/// diagonal `e = (v3, v4)`. Sides: `e1 = d(v1,v3)`, `e2 = d(v2,v3)`,
/// `e3 = d(v1,v4)`, `e4 = d(v2,v4)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadMap {
    pub e1: f64,
    pub e2: f64,
    pub e3: f64,
    pub e4: f64,
}

impl QuadMap {
    pub fn new(e1: f64, e2: f64, e3: f64, e4: f64) -> Result<Self> {
        for (i, s) in [e1, e2, e3, e4].iter().enumerate() {
            if !(*s > 0.0) || !s.is_finite() {
                return Err(Error::InvalidInput(format!("side {} nonpositive", i + 1)));
            }
        }
        Ok(QuadMap { e1, e2, e3, e4 })
    }

    /// Range of the input diagonal allowed by the two triangles it splits
    /// the quadrilateral into.
    pub fn e_feasibility(&self) -> (f64, f64) {
        (
            (self.e1 - self.e3).abs().max((self.e2 - self.e4).abs()),
            (self.e1 + self.e3).min(self.e2 + self.e4),
        )
    }

    /// Range of the output diagonal allowed by its two triangles.
    pub fn f_feasibility(&self) -> (f64, f64) {
        (
            (self.e1 - self.e2).abs().max((self.e3 - self.e4).abs()),
            (self.e1 + self.e2).min(self.e3 + self.e4),
        )
    }

    /// The 5-point Cayley-Menger determinant at squared diagonals `x`
    /// (input) and `f2` (output).
    fn cm_det(&self, x: f64, f2: f64) -> f64 {
        let (d13, d23, d14, d24) =
            (self.e1 * self.e1, self.e2 * self.e2, self.e3 * self.e3, self.e4 * self.e4);
        let m = [
            [0.0, 1.0, 1.0, 1.0, 1.0],
            [1.0, 0.0, f2, d13, d14],
            [1.0, f2, 0.0, d23, d24],
            [1.0, d13, d23, 0.0, x],
            [1.0, d14, d24, x, 0.0],
        ];
        det5(m)
    }

    /// Squared-scale used to normalize near-zero discriminants; the
    /// determinant is degree 4 in the lengths per entry, so its quadratic
    /// coefficients grow like high powers of the size.
    fn size(&self) -> f64 {
        self.e1 + self.e2 + self.e3 + self.e4
    }

    /// Roots of the quadratic `q(t) = det` viewed along one variable,
    /// sampled at t = 0, 1, 2. Returns ascending real roots; a slightly
    /// negative discriminant within the clamping window counts as a double
    /// root (tangency).
    fn quadratic_roots(d0: f64, d1: f64, d2: f64, window: f64) -> Vec<f64> {
        let a = (d2 - 2.0 * d1 + d0) / 2.0;
        let b = d1 - d0 - a;
        let c = d0;
        if a.abs() < 1e-300 {
            if b.abs() < 1e-300 {
                return Vec::new();
            }
            return vec![-c / b];
        }
        let disc = b * b - 4.0 * a * c;
        let disc = if disc >= 0.0 {
            disc
        } else if disc >= -window {
            0.0
        } else {
            return Vec::new();
        };
        let sq = disc.sqrt();
        let mut r = vec![(-b - sq) / (2.0 * a), (-b + sq) / (2.0 * a)];
        r.sort_by(|p, q| p.partial_cmp(q).unwrap());
        r
    }

    fn window(&self, tol: &Tolerance) -> f64 {
        // The discriminant scales like size^12; the window corresponds to a
        // length perturbation of order collinearity_tol.
        tol.collinearity_tol * self.size().powi(11).max(1.0)
    }

    /// The at-most-two output diagonal values compatible with input diagonal
    /// `e`, ascending.
    pub fn f_for_e(&self, e: f64, tol: &Tolerance) -> Vec<f64> {
        let x = e * e;
        let roots = Self::quadratic_roots(
            self.cm_det(x, 0.0),
            self.cm_det(x, 1.0),
            self.cm_det(x, 2.0),
            self.window(tol),
        );
        roots
            .into_iter()
            .filter(|&f2| f2 >= -self.window(tol))
            .map(|f2| f2.max(0.0).sqrt())
            .collect()
    }

    /// The at-most-two input diagonal values compatible with output diagonal
    /// `f`, ascending.
    pub fn e_for_f(&self, f: f64, tol: &Tolerance) -> Vec<f64> {
        let f2 = f * f;
        let roots = Self::quadratic_roots(
            self.cm_det(0.0, f2),
            self.cm_det(1.0, f2),
            self.cm_det(2.0, f2),
            self.window(tol),
        );
        roots
            .into_iter()
            .filter(|&x| x >= -self.window(tol))
            .map(|x| x.max(0.0).sqrt())
            .collect()
    }

    /// Whether output value `f` is attainable with the input diagonal lying
    /// in `[lo, hi]`.
    fn attainable(&self, f: f64, lo: f64, hi: f64, tol: &Tolerance) -> bool {
        let slack = 1e-7 * (1.0 + self.size());
        self.e_for_f(f, tol)
            .into_iter()
            .any(|e| e >= lo - slack && e <= hi + slack)
    }
}

/// 5x5 determinant by Gaussian elimination with partial pivoting.
fn det5(mut m: [[f64; 5]; 5]) -> f64 {
    let mut det = 1.0;
    for col in 0..5 {
        let piv = (col..5)
            .max_by(|&i, &j| m[i][col].abs().partial_cmp(&m[j][col].abs()).unwrap())
            .unwrap();
        if m[piv][col] == 0.0 {
            return 0.0;
        }
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        det *= m[col][col];
        for row in (col + 1)..5 {
            let factor = m[row][col] / m[col][col];
            for k in col..5 {
                m[row][k] -= factor * m[col][k];
            }
        }
    }
    det
}

/// Pushes an interval set of the input diagonal through the volume-zero
/// curve to the output diagonal. Errors with `EmptyFeasibility` when no
/// input value is geometrically feasible at all.
pub fn quad_diagonal_map(q: &QuadMap, input: &IntervalSet, tol: &Tolerance) -> Result<IntervalSet> {
    let (elo, ehi) = q.e_feasibility();
    let (flo, fhi) = q.f_feasibility();
    let slack = 1e-9 * (1.0 + q.size());
    let mut out: Vec<Interval> = Vec::new();
    let mut any_feasible = false;
    for iv in input.intervals() {
        let lo = iv.lo.max(elo);
        let hi = iv.hi.min(ehi);
        if lo > hi + slack {
            continue;
        }
        let (lo, hi) = (lo.min(hi), hi);
        any_feasible = true;
        // Candidate output values: images of the two clipped endpoints plus
        // the feasibility extremes of the output whose preimages fall inside
        // the clipped input.
        let mut cands: Vec<f64> = Vec::new();
        cands.extend(q.f_for_e(lo, tol));
        cands.extend(q.f_for_e(hi, tol));
        for fext in [flo, fhi] {
            if q.attainable(fext, lo, hi, tol) {
                cands.push(fext);
            }
        }
        cands.retain(|&f| f >= flo - slack && f <= fhi + slack);
        cands.sort_by(|a, b| a.partial_cmp(b).unwrap());
        cands.dedup_by(|a, b| (*a - *b).abs() <= slack);
        // Midpoint probing between consecutive candidates classifies each
        // gap; candidate values attainable on their own become isolated
        // points when both neighborhoods are empty.
        let m = cands.len();
        let mut run_start: Option<f64> = None;
        for i in 0..m {
            let attain_here = q.attainable(cands[i], lo, hi, tol);
            let gap_right = i + 1 < m && q.attainable(0.5 * (cands[i] + cands[i + 1]), lo, hi, tol);
            if attain_here && run_start.is_none() {
                run_start = Some(cands[i]);
            }
            if !gap_right {
                if let Some(s) = run_start.take() {
                    if attain_here {
                        out.push(Interval::new(s, cands[i]));
                    }
                }
            }
        }
        if let Some(s) = run_start {
            out.push(Interval::new(s, cands[m - 1]));
        }
    }
    if !any_feasible {
        return Err(Error::EmptyFeasibility);
    }
    Ok(IntervalSet::from_intervals(out, tol.abs_tol))
}

/// Result of the linear-time chain recursion.
#[derive(Debug, Clone, PartialEq)]
pub enum QdimOutcome {
    Set(IntervalSet),
    /// The graph does not peel into a chain of quadrilaterals over the base
    /// non-edge; the generic endpoint machinery must be used instead.
    NotApplicable,
}

/// Computes the configuration space by peeling quadrilaterals: the base
/// pair must have exactly two common neighbors `c, d`, and at least one
/// base vertex must have degree 2; dropping the degree-2 base vertices
/// leaves a smaller instance on `(c, d)`, whose interval set is pushed
/// through the quadrilateral. The innermost instance is a triangle whose
/// interval follows from the triangle inequality.
pub fn qdim_config_space(l: &Linkage, tol: &Tolerance) -> Result<QdimOutcome> {
    let f = l.base_nonedge();
    match qdim_rec(l.graph(), l.delta(), f.0, f.1, tol)? {
        Some(set) => Ok(QdimOutcome::Set(set)),
        None => Ok(QdimOutcome::NotApplicable),
    }
}

fn qdim_rec(
    g: &Graph,
    delta: &LengthMap,
    a: VertexId,
    b: VertexId,
    tol: &Tolerance,
) -> Result<Option<IntervalSet>> {
    if g.has_edge(a, b) {
        return Ok(None);
    }
    let n = g.vertex_count();
    if n == 3 {
        let c = (0..3).find(|&v| v != a && v != b).unwrap();
        if g.edge_count() == 2 && g.has_edge(a, c) && g.has_edge(b, c) {
            let ra = delta[&pair(a, c)];
            let rb = delta[&pair(b, c)];
            return Ok(Some(IntervalSet::from_intervals(
                vec![Interval::new((ra - rb).abs(), ra + rb)],
                tol.abs_tol,
            )));
        }
        return Ok(None);
    }
    let cn = g.common_neighbors(a, b);
    if cn.len() != 2 {
        return Ok(None);
    }
    let (c, d) = (cn[0], cn[1]);
    let q = QuadMap::new(
        delta[&pair(a, c)],
        delta[&pair(b, c)],
        delta[&pair(a, d)],
        delta[&pair(b, d)],
    )?;
    let drop: Vec<VertexId> = match (g.degree(a) == 2, g.degree(b) == 2) {
        (true, true) => vec![a, b],
        (true, false) => vec![a],
        (false, true) => vec![b],
        (false, false) => return Ok(None),
    };
    let keep: Vec<VertexId> = (0..n).filter(|v| !drop.contains(v)).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in keep.iter().enumerate() {
        index[v] = i;
    }
    let sub = g.induced(&keep);
    let mut sub_delta = LengthMap::new();
    for &(x, y) in g.edges() {
        if index[x] != usize::MAX && index[y] != usize::MAX {
            sub_delta.insert(pair(index[x], index[y]), delta[&pair(x, y)]);
        }
    }
    let (ci, di) = (index[c], index[d]);
    let inner: IntervalSet = if sub.vertex_count() == 2 {
        // Both base vertices dropped over a bare edge or nothing: only the
        // adjacent case is meaningful and it pins the inner diagonal.
        if sub.has_edge(ci, di) {
            IntervalSet::from_intervals(
                vec![Interval::point(sub_delta[&pair(ci, di)])],
                tol.abs_tol,
            )
        } else {
            return Ok(None);
        }
    } else if sub.has_edge(ci, di) {
        // The inner pair is an actual edge: its length is fixed, and the
        // chain must end here with nothing else attached.
        if sub.edge_count() == 1 {
            IntervalSet::from_intervals(
                vec![Interval::point(sub_delta[&pair(ci, di)])],
                tol.abs_tol,
            )
        } else {
            return Ok(None);
        }
    } else {
        match qdim_rec(&sub, &sub_delta, ci, di, tol)? {
            Some(s) => s,
            None => return Ok(None),
        }
    };
    match quad_diagonal_map(&q, &inner, tol) {
        Ok(set) => Ok(Some(set)),
        Err(Error::EmptyFeasibility) => Ok(Some(IntervalSet::empty())),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkage::load_linkage;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn fig_quad() -> QuadMap {
        QuadMap::new(7.0, 7.0, 6.0, 8.0).unwrap()
    }

    #[test]
    fn feasibility_ranges() {
        let q = fig_quad();
        assert_eq!(q.e_feasibility(), (1.0, 13.0));
        assert_eq!(q.f_feasibility(), (2.0, 14.0));
    }

    #[test]
    fn maps_the_reference_interval_to_two_intervals() {
        let q = fig_quad();
        let input = IntervalSet::from_intervals(vec![Interval::new(4.0, 5.0)], 1e-9);
        let out = quad_diagonal_map(&q, &input, &tol()).unwrap();
        assert_eq!(out.intervals().len(), 2);
        let expected = [
            0.4 * (565.0 - 360.0 * 2.0_f64.sqrt()).sqrt(),
            0.125 * (6214.0 - 90.0 * 3553.0_f64.sqrt()).sqrt(),
            0.4 * (565.0 + 360.0 * 2.0_f64.sqrt()).sqrt(),
            0.125 * (6214.0 + 90.0 * 3553.0_f64.sqrt()).sqrt(),
        ];
        let got = out.endpoints();
        for (g, e) in got.iter().zip(expected.iter()) {
            assert!((g - e).abs() < 1e-9, "endpoint {g} vs expected {e}");
        }
        // The value between the two intervals is not attainable from this
        // input range.
        assert!(!out.contains(0.125 * (6214.0 + 6.0 * 3553.0_f64.sqrt()).sqrt(), 1e-6));
    }

    #[test]
    fn point_input_maps_to_points() {
        let q = fig_quad();
        let input = IntervalSet::from_intervals(vec![Interval::point(4.5)], 1e-9);
        let out = quad_diagonal_map(&q, &input, &tol()).unwrap();
        assert_eq!(out.intervals().len(), 2);
        for iv in out.intervals() {
            assert!(iv.width() < 1e-9);
        }
    }

    #[test]
    fn infeasible_input_errors() {
        let q = fig_quad();
        let input = IntervalSet::from_intervals(vec![Interval::new(20.0, 25.0)], 1e-9);
        assert_eq!(quad_diagonal_map(&q, &input, &tol()).unwrap_err(), Error::EmptyFeasibility);
    }

    #[test]
    fn triangle_seed_recursion() {
        let g = Graph::build(3, &[(0, 2), (1, 2)]).unwrap();
        let l = load_linkage(g, &[((0, 2), 3.0), ((1, 2), 4.0)], (0, 1)).unwrap();
        match qdim_config_space(&l, &tol()).unwrap() {
            QdimOutcome::Set(s) => {
                assert_eq!(s.intervals().len(), 1);
                assert!((s.intervals()[0].lo - 1.0).abs() < 1e-12);
                assert!((s.intervals()[0].hi - 7.0).abs() < 1e-12);
            }
            QdimOutcome::NotApplicable => panic!("triangle must be applicable"),
        }
    }

    #[test]
    fn five_vertex_chain_matches_reference_values() {
        let g = Graph::build(5, &[(0, 2), (1, 2), (0, 3), (1, 3), (2, 4), (3, 4)]).unwrap();
        let l = load_linkage(
            g,
            &[
                ((0, 2), 7.0),
                ((1, 2), 7.0),
                ((0, 3), 6.0),
                ((1, 3), 8.0),
                ((2, 4), 4.5),
                ((3, 4), 0.5),
            ],
            (0, 1),
        )
        .unwrap();
        match qdim_config_space(&l, &tol()).unwrap() {
            QdimOutcome::Set(s) => {
                assert_eq!(s.intervals().len(), 2);
                assert!((s.intervals()[0].lo - 2.9902004627298355).abs() < 1e-9);
                assert!((s.intervals()[0].hi - 3.642985145502582).abs() < 1e-9);
                assert!((s.intervals()[1].lo - 13.10948897526865).abs() < 1e-9);
                assert!((s.intervals()[1].hi - 13.450507768469096).abs() < 1e-9);
            }
            QdimOutcome::NotApplicable => panic!("chain must be applicable"),
        }
    }

    #[test]
    fn branching_base_pair_is_not_applicable() {
        // Base pair with three common neighbors.
        let g = Graph::build(
            6,
            &[(0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4), (2, 5), (3, 5)],
        )
        .unwrap();
        let l = load_linkage(
            g,
            &[
                ((0, 2), 3.0),
                ((1, 2), 4.0),
                ((0, 3), 5.0),
                ((1, 3), 4.0),
                ((0, 4), 2.0),
                ((1, 4), 3.0),
                ((2, 5), 2.0),
                ((3, 5), 2.5),
            ],
            (0, 1),
        )
        .unwrap();
        assert_eq!(qdim_config_space(&l, &tol()).unwrap(), QdimOutcome::NotApplicable);
    }
}
