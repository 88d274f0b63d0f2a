// Copyright 2026 the Cayley-Cspace Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Degree-2 vertex-addition constructions: building a graph from a base
//! edge by repeatedly attaching a new vertex to exactly two existing
//! vertices, recognizing such graphs by reverse peeling, and the structural
//! predicates used by the classification layer.

use crate::error::{Error, Result};
use crate::graph::{pair, Graph, Pair, RigidityStatus, VertexId};

/// One vertex-addition step: `new_vertex` is attached to the two vertices of
/// `base_pair`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructionStep {
    pub new_vertex: VertexId,
    pub base_pair: Pair,
}

/// A complete construction certificate: a base edge plus an ordered list of
/// vertex-addition steps covering every other vertex exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HennebergConstruction {
    pub base_edge: Pair,
    pub steps: Vec<ConstructionStep>,
}

impl HennebergConstruction {
    /// Total number of vertices of the constructed graph.
    pub fn vertex_count(&self) -> usize {
        self.steps.len() + 2
    }

    /// Validates the incremental invariants: every step's base pair is
    /// already present, every non-base vertex appears exactly once as a new
    /// vertex, and ids are dense in `0..vertex_count`.
    pub fn validate(&self) -> Result<()> {
        let n = self.vertex_count();
        let (f0, f1) = self.base_edge;
        if f0 == f1 {
            return Err(Error::InvalidConstruction("base edge is a self loop".into()));
        }
        let mut present = vec![false; n];
        for &v in [f0, f1].iter() {
            if v >= n {
                return Err(Error::InvalidConstruction(format!(
                    "vertex {v} out of range for {n} vertices"
                )));
            }
            present[v] = true;
        }
        for step in &self.steps {
            let v = step.new_vertex;
            let (u, w) = step.base_pair;
            if v >= n || u >= n || w >= n {
                return Err(Error::InvalidConstruction(format!(
                    "vertex out of range in step {v} < ({u},{w})"
                )));
            }
            if u == w || v == u || v == w {
                return Err(Error::InvalidConstruction(format!(
                    "degenerate step {v} < ({u},{w})"
                )));
            }
            if !present[u] || !present[w] {
                return Err(Error::InvalidConstruction(format!(
                    "step {v} < ({u},{w}) references a vertex not yet constructed"
                )));
            }
            if present[v] {
                return Err(Error::InvalidConstruction(format!(
                    "vertex {v} constructed twice"
                )));
            }
            present[v] = true;
        }
        if present.iter().any(|&p| !p) {
            return Err(Error::InvalidConstruction(
                "some vertex never constructed".into(),
            ));
        }
        Ok(())
    }

    /// Builds the constructed graph (base edge plus two edges per step).
    pub fn apply(&self) -> Result<Graph> {
        self.validate()?;
        let mut edges = vec![self.base_edge];
        for step in &self.steps {
            let (u, w) = step.base_pair;
            edges.push(pair(step.new_vertex, u));
            edges.push(pair(step.new_vertex, w));
        }
        let g = Graph::build(self.vertex_count(), &edges).map_err(|e| match e {
            Error::DuplicateEdge(a, b) => Error::InvalidConstruction(format!(
                "construction creates parallel edge ({a},{b})"
            )),
            other => other,
        })?;
        debug_assert_eq!(g.edge_count(), 2 * g.vertex_count() - 3);
        debug_assert_eq!(
            g.rigidity_status().unwrap(),
            RigidityStatus::Wellconstrained
        );
        Ok(g)
    }

    /// The graph with the base edge removed: the 1-dof substrate whose
    /// Cayley parameter is the base pair.
    pub fn apply_without_base(&self) -> Result<Graph> {
        let g = self.apply()?;
        let edges: Vec<Pair> = g
            .edges()
            .iter()
            .copied()
            .filter(|&e| e != self.base_edge)
            .collect();
        Graph::build(g.vertex_count(), &edges)
    }
}

/// Attempts to recognize `h` as buildable from base edge `f` by reverse
/// peeling: repeatedly delete a degree-2 vertex not incident to `f`,
/// succeeding when exactly the edge `f` remains.
///
/// Peeling is confluent on this class — if any peel order succeeds, every
/// maximal peel order succeeds — so a deterministic greedy order (lowest id
/// first) yields a canonical construction. Returns `None` when peeling gets
/// stuck.
pub fn recognize_henneberg(h: &Graph, f: Pair) -> Result<Option<HennebergConstruction>> {
    let f = pair(f.0, f.1);
    if !h.has_edge(f.0, f.1) {
        return Err(Error::EdgeNotInGraph(f.0, f.1));
    }
    let n = h.vertex_count();
    if h.edge_count() != 2 * n - 3 {
        return Ok(None);
    }
    let mut adj: Vec<Vec<VertexId>> = (0..n).map(|v| h.neighbors(v).to_vec()).collect();
    let mut alive = vec![true; n];
    let mut peeled: Vec<ConstructionStep> = Vec::new();
    loop {
        let next = (0..n).find(|&v| {
            alive[v] && v != f.0 && v != f.1 && adj[v].len() == 2
        });
        match next {
            Some(v) => {
                let (u, w) = (adj[v][0], adj[v][1]);
                peeled.push(ConstructionStep {
                    new_vertex: v,
                    base_pair: pair(u, w),
                });
                alive[v] = false;
                adj[v].clear();
                for x in [u, w] {
                    adj[x].retain(|&y| y != v);
                }
            }
            None => break,
        }
    }
    let leftover: Vec<VertexId> = (0..n).filter(|&v| alive[v]).collect();
    if leftover == vec![f.0, f.1].into_iter().collect::<Vec<_>>()
        && adj[f.0] == vec![f.1]
    {
        peeled.reverse();
        Ok(Some(HennebergConstruction {
            base_edge: f,
            steps: peeled,
        }))
    } else {
        Ok(None)
    }
}

/// Recognizes the graph `g` plus the non-edge `t` as buildable from base
/// edge `t`; this is the validity test for a 1-dof substrate with Cayley
/// parameter `t`.
pub fn recognize_with_added_base(g: &Graph, t: Pair) -> Result<Option<HennebergConstruction>> {
    let t = pair(t.0, t.1);
    if g.has_edge(t.0, t.1) {
        return Err(Error::InvalidInput(format!(
            "({}, {}) is an edge, not a candidate base pair",
            t.0, t.1
        )));
    }
    let h = g.with_edge(t.0, t.1)?;
    recognize_henneberg(&h, t)
}

/// All edges `f` of a wellconstrained graph from which it can be built by
/// vertex-addition steps.
pub fn enumerate_base_edges(h: &Graph) -> Result<Vec<Pair>> {
    if h.rigidity_status()? != RigidityStatus::Wellconstrained {
        return Err(Error::NotWellconstrained);
    }
    let mut out = Vec::new();
    for &e in h.edges() {
        if recognize_henneberg(h, e)?.is_some() {
            out.push(e);
        }
    }
    Ok(out)
}

/// All non-adjacent vertex pairs of a substrate `g` that can serve as its
/// Cayley parameter: the pairs `t` for which `g` plus the edge `t` is
/// buildable from base edge `t`.
pub fn enumerate_base_nonedges(g: &Graph) -> Result<Vec<Pair>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for u in 0..n {
        for w in (u + 1)..n {
            if !g.has_edge(u, w) && recognize_with_added_base(g, (u, w))?.is_some() {
                out.push((u, w));
            }
        }
    }
    Ok(out)
}

/// Whether exactly one vertex other than the endpoints of the non-edge `f`
/// has degree 2 in `g`; such substrates have a unique construction path for
/// their last vertex.
pub fn is_1path(g: &Graph, f: Pair) -> bool {
    (0..g.vertex_count())
        .filter(|&v| v != f.0 && v != f.1 && g.degree(v) == 2)
        .count()
        == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_step_builds_triangle() {
        let c = HennebergConstruction {
            base_edge: (0, 1),
            steps: vec![ConstructionStep {
                new_vertex: 2,
                base_pair: (0, 1),
            }],
        };
        let g = c.apply().unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn step_referencing_future_vertex_is_invalid() {
        let c = HennebergConstruction {
            base_edge: (0, 1),
            steps: vec![
                ConstructionStep {
                    new_vertex: 2,
                    base_pair: (0, 3),
                },
                ConstructionStep {
                    new_vertex: 3,
                    base_pair: (0, 1),
                },
            ],
        };
        assert!(matches!(c.apply(), Err(Error::InvalidConstruction(_))));
    }

    #[test]
    fn recognize_triangle_from_any_edge() {
        let g = Graph::build(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        for &e in g.edges() {
            let c = recognize_henneberg(&g, e).unwrap().unwrap();
            assert_eq!(c.steps.len(), 1);
            assert_eq!(c.apply().unwrap(), g);
        }
    }

    #[test]
    fn k33_is_not_recognized() {
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        let g = Graph::build(6, &e).unwrap();
        assert_eq!(recognize_henneberg(&g, (0, 3)).unwrap(), None);
    }

    #[test]
    fn recognize_roundtrips_apply() {
        let c = HennebergConstruction {
            base_edge: (0, 1),
            steps: vec![
                ConstructionStep {
                    new_vertex: 2,
                    base_pair: (0, 1),
                },
                ConstructionStep {
                    new_vertex: 3,
                    base_pair: (0, 1),
                },
                ConstructionStep {
                    new_vertex: 4,
                    base_pair: (0, 2),
                },
                ConstructionStep {
                    new_vertex: 5,
                    base_pair: (1, 3),
                },
                ConstructionStep {
                    new_vertex: 6,
                    base_pair: (4, 5),
                },
            ],
        };
        let g = c.apply().unwrap();
        let r = recognize_henneberg(&g, (0, 1)).unwrap().unwrap();
        assert_eq!(r.apply().unwrap(), g);
    }

    #[test]
    fn one_path_predicate() {
        // 3-vertex path: the middle vertex is the only degree-2 vertex.
        let g = Graph::build(3, &[(0, 2), (1, 2)]).unwrap();
        assert!(is_1path(&g, (0, 1)));
    }
}
