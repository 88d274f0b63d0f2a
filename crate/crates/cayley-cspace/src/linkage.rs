// Copyright 2026 the Cayley-Cspace Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! The linkage data model: a graph with positive edge lengths and a
//! distinguished base non-edge whose length is the free parameter. Includes
//! the enumeration of extreme linkages (one per construction step and length
//! variant) and the 2-sum reduction that collapses rigid subsystems hinged
//! at an edge.

use crate::error::{Error, Result};
use crate::graph::{pair, Graph, Pair, RigidityStatus, VertexId};
use crate::henneberg::{recognize_henneberg, recognize_with_added_base, HennebergConstruction};
use crate::realize::{realize_all_orientations, LengthMap, Tolerance};

/// A validated 1-dof linkage: `graph` plus the base non-edge `f` is
/// buildable from `f` by degree-2 vertex additions, and every edge carries a
/// positive length.
#[derive(Debug, Clone, PartialEq)]
pub struct Linkage {
    graph: Graph,
    delta: LengthMap,
    base_nonedge: Pair,
    /// Canonical construction of `graph` plus the base non-edge, from it.
    construction: HennebergConstruction,
    /// Steps whose two incident lengths are equal. Steps based on the base
    /// non-edge itself are benign (the short length variant degenerates to
    /// zero and is simply dropped); steps based elsewhere block the analytic
    /// endpoint path and force the oracle fallback.
    equal_length_steps: Vec<usize>,
}

/// One extreme linkage: the graph with the step's base pair added as an
/// edge, at one of the two extreme lengths (sum or absolute difference of
/// the step's incident lengths).
#[derive(Debug, Clone, PartialEq)]
pub struct ExtremeLinkage {
    pub step_index: usize,
    /// 1 = sum of the incident lengths, 2 = absolute difference.
    pub variant: u8,
    pub graph: Graph,
    pub delta: LengthMap,
    pub added_pair: Pair,
    pub added_length: f64,
}

/// Outcome of extreme-linkage formation at one construction step.
#[derive(Debug, Clone, PartialEq)]
pub enum ExtremeStatus {
    /// Both length variants yield a wellconstrained extreme graph.
    Defined(Box<(ExtremeLinkage, ExtremeLinkage)>),
    /// The step's base pair already lies in a wellconstrained subgraph, so
    /// adding it would create dependence; these extremes contribute no
    /// candidate endpoints. `witness` is the rigid vertex set containing the
    /// pair.
    Suppressed { pair: Pair, witness: Vec<VertexId> },
}

/// Validates and assembles a [`Linkage`]. `delta` must list every graph
/// edge exactly once with a positive length.
pub fn load_linkage(
    graph: Graph,
    delta: &[((VertexId, VertexId), f64)],
    f: (VertexId, VertexId),
) -> Result<Linkage> {
    let mut map = LengthMap::new();
    for &((u, w), len) in delta {
        if !graph.has_edge(u, w) {
            return Err(Error::EdgeNotInGraph(u, w));
        }
        if !(len > 0.0) || !len.is_finite() {
            return Err(Error::NonpositiveLength(u, w));
        }
        if map.insert(pair(u, w), len).is_some() {
            return Err(Error::DuplicateEdge(u, w));
        }
    }
    if map.len() != graph.edge_count() {
        return Err(Error::InvalidInput(format!(
            "lengths given for {} of {} edges",
            map.len(),
            graph.edge_count()
        )));
    }
    let f = pair(f.0, f.1);
    let construction = recognize_with_added_base(&graph, f)?.ok_or(Error::NotHennebergFromF)?;
    let mut equal_length_steps = Vec::new();
    for (k, step) in construction.steps.iter().enumerate() {
        let (u, w) = step.base_pair;
        let v = step.new_vertex;
        let a = map[&pair(v, u)];
        let b = map[&pair(v, w)];
        if (a - b).abs() <= 1e-12 * (1.0 + a.abs() + b.abs()) {
            equal_length_steps.push(k);
        }
    }
    Ok(Linkage { graph, delta: map, base_nonedge: f, construction, equal_length_steps })
}

impl Linkage {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn delta(&self) -> &LengthMap {
        &self.delta
    }

    pub fn length(&self, u: VertexId, w: VertexId) -> f64 {
        self.delta[&pair(u, w)]
    }

    pub fn base_nonedge(&self) -> Pair {
        self.base_nonedge
    }

    pub fn construction(&self) -> &HennebergConstruction {
        &self.construction
    }

    /// Steps with equal incident lengths (warning-level flag).
    pub fn equal_length_steps(&self) -> &[usize] {
        &self.equal_length_steps
    }

    /// Equal-length steps whose base pair is not the base non-edge; these
    /// invalidate the analytic endpoint path (two anchor points can
    /// coincide), so downstream computation must use the oracle instead.
    pub fn blocking_degenerate_steps(&self) -> Vec<usize> {
        self.equal_length_steps
            .iter()
            .copied()
            .filter(|&k| self.construction.steps[k].base_pair != self.base_nonedge)
            .collect()
    }

    /// Whether any step carries equal incident lengths.
    pub fn has_degenerate_distances(&self) -> bool {
        !self.equal_length_steps.is_empty()
    }

    /// Sum of all edge lengths; used as a sweep upper bound.
    pub fn total_length(&self) -> f64 {
        self.delta.values().sum()
    }

    /// Smallest edge length.
    pub fn min_length(&self) -> f64 {
        self.delta.values().fold(f64::INFINITY, |m, &v| m.min(v))
    }

    /// Extreme-linkage formation at construction step `k`.
    pub fn extreme_status(&self, k: usize) -> Result<ExtremeStatus> {
        let steps = &self.construction.steps;
        if k >= steps.len() {
            return Err(Error::StepOutOfRange(k, steps.len()));
        }
        let (u, w) = steps[k].base_pair;
        let v = steps[k].new_vertex;
        if self.graph.pair_in_wellconstrained_subgraph(u, w) {
            let mut witness: Vec<VertexId> = (0..self.graph.vertex_count())
                .filter(|&x| {
                    x == u
                        || x == w
                        || (self.graph.pair_in_wellconstrained_subgraph(x, u)
                            && self.graph.pair_in_wellconstrained_subgraph(x, w))
                })
                .collect();
            witness.sort_unstable();
            return Ok(ExtremeStatus::Suppressed { pair: pair(u, w), witness });
        }
        let a = self.length(v, u);
        let b = self.length(v, w);
        let x_graph = self.graph.with_edge(u, w)?;
        debug_assert_eq!(
            x_graph.rigidity_status().unwrap(),
            RigidityStatus::Wellconstrained
        );
        let make = |variant: u8, len: f64| {
            let mut delta = self.delta.clone();
            delta.insert(pair(u, w), len);
            ExtremeLinkage {
                step_index: k,
                variant,
                graph: x_graph.clone(),
                delta,
                added_pair: pair(u, w),
                added_length: len,
            }
        };
        Ok(ExtremeStatus::Defined(Box::new((
            make(1, a + b),
            make(2, (a - b).abs()),
        ))))
    }

    /// All extreme statuses in step order.
    pub fn extreme_statuses(&self) -> Result<Vec<ExtremeStatus>> {
        (0..self.construction.steps.len())
            .map(|k| self.extreme_status(k))
            .collect()
    }

    /// Collapses every rigid proper subsystem hinged at an edge down to that
    /// edge, after checking the subsystem is realizable on its own. The
    /// configuration space of the base non-edge is unchanged. Errors with
    /// `SubsystemUnrealizable` when a collapsed subsystem admits no planar
    /// realization (the whole configuration space is then empty).
    pub fn two_sum_reduce(&self) -> Result<Linkage> {
        let tol = Tolerance::default();
        let mut current = self.clone();
        loop {
            let g = &current.graph;
            let f = current.base_nonedge;
            // Maximal rigid vertex set containing an edge: the edge's
            // endpoints plus every vertex rigidly linked to both.
            // Find a rigid subsystem hinged at a single edge; subsystems
            // attached to the rest (or to the base non-edge) through more
            // than one edge are left in place — the analytic endpoint
            // machinery handles them without reduction.
            let mut found: Option<(Vec<VertexId>, Vec<VertexId>)> = None;
            for &(a, b) in g.edges() {
                let mut c: Vec<VertexId> = (0..g.vertex_count())
                    .filter(|&x| {
                        x == a
                            || x == b
                            || (g.pair_in_wellconstrained_subgraph(x, a)
                                && g.pair_in_wellconstrained_subgraph(x, b))
                    })
                    .collect();
                c.sort_unstable();
                if c.len() < 3 {
                    continue;
                }
                // Hinge vertices: those attached to the outside, plus any
                // base non-edge endpoint inside the subsystem.
                let mut boundary: Vec<VertexId> = c
                    .iter()
                    .copied()
                    .filter(|&v| {
                        g.neighbors(v).iter().any(|n| !c.contains(n))
                            || v == f.0
                            || v == f.1
                    })
                    .collect();
                boundary.sort_unstable();
                if boundary.len() == 2 && g.has_edge(boundary[0], boundary[1]) {
                    found = Some((c, boundary));
                    break;
                }
            }
            let (c, boundary) = match found {
                None => return Ok(current),
                Some(x) => x,
            };
            let hinge = pair(boundary[0], boundary[1]);
            current.check_subsystem_realizable(&c, &tol)?;
            // Collapse: drop interior vertices and all subsystem edges
            // except the hinge.
            let keep: Vec<VertexId> = (0..g.vertex_count())
                .filter(|v| !c.contains(v) || boundary.contains(v))
                .collect();
            let mut index = vec![usize::MAX; g.vertex_count()];
            for (i, &v) in keep.iter().enumerate() {
                index[v] = i;
            }
            let mut new_delta: Vec<((VertexId, VertexId), f64)> = Vec::new();
            for &(x, y) in g.edges() {
                let inside = c.contains(&x) && c.contains(&y);
                if inside && pair(x, y) != hinge {
                    continue;
                }
                new_delta.push(((index[x], index[y]), current.delta[&pair(x, y)]));
            }
            let edges: Vec<(VertexId, VertexId)> =
                new_delta.iter().map(|&(e, _)| e).collect();
            let new_graph = Graph::build(keep.len(), &edges)?;
            current = load_linkage(new_graph, &new_delta, (index[f.0], index[f.1]))?;
        }
    }

    /// Realizes the rigid subsystem induced on `c` in isolation; errors when
    /// no orientation sequence realizes it.
    fn check_subsystem_realizable(&self, c: &[VertexId], tol: &Tolerance) -> Result<()> {
        let sub = self.graph.induced(c);
        let mut delta = LengthMap::new();
        let mut index = vec![usize::MAX; self.graph.vertex_count()];
        for (i, &v) in c.iter().enumerate() {
            index[v] = i;
        }
        for &(x, y) in self.graph.edges() {
            if c.contains(&x) && c.contains(&y) {
                delta.insert(pair(index[x], index[y]), self.delta[&pair(x, y)]);
            }
        }
        let mut base: Option<HennebergConstruction> = None;
        for &e in sub.edges() {
            if let Some(con) = recognize_henneberg(&sub, e)? {
                base = Some(con);
                break;
            }
        }
        let con = base.ok_or_else(|| {
            Error::PreconditionViolated(
                "rigid subsystem is not buildable from any of its edges".into(),
            )
        })?;
        let d = delta[&con.base_edge];
        let all = realize_all_orientations(&con, &delta, d, tol)?;
        if all.is_empty() {
            return Err(Error::SubsystemUnrealizable);
        }
        Ok(())
    }
}
