// Copyright 2026 the Cayley-Cspace Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Deciding low sampling complexity — whether every wellconstrained extreme
//! graph of a substrate is triangle-decomposable, so that all interval
//! endpoints are radical-computable — and cross-checking the equivalent
//! combinatorial characterizations against each other:
//!
//! * definitional: enumerate extreme graphs, test triangle-decomposability;
//! * forbidden minors (triangle-free 1-path substrates): no K33 and no
//!   prism minor — sufficient always, necessary below 8 vertices;
//! * buildability: every extreme graph is buildable from its added pair;
//! * chain recursion (1-path substrates): the base pair has one or two
//!   common neighbors, and with two, at least one base vertex has degree 2
//!   and the substrate with its degree-2 base vertices removed recurses on
//!   the common-neighbor pair.

use crate::decompose::{is_henneberg_with_base, is_triangle_decomposable};
use crate::error::{Error, Result};
use crate::graph::{pair, Graph, Pair, VertexId};
use crate::henneberg::{
    enumerate_base_edges, enumerate_base_nonedges, is_1path, recognize_with_added_base,
};
use crate::minors::{has_minor, MinorPattern};
use std::collections::BTreeMap;

/// Facts about one construction step's extreme graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremeReport {
    pub step: usize,
    pub base_pair: Pair,
    /// Whether adding the base pair yields a wellconstrained graph (false:
    /// the pair already lies in a rigid subgraph and the extreme is
    /// suppressed).
    pub wellconstrained: bool,
    /// Triangle-decomposability of the extreme graph; `None` when
    /// suppressed.
    pub triangle_decomposable: Option<bool>,
    /// Whether the extreme graph is buildable from the added pair; `None`
    /// when suppressed.
    pub buildable_from_pair: Option<bool>,
}

/// Presence of the two forbidden minors in the substrate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinorWitnesses {
    pub k33: bool,
    pub prism: bool,
}

/// Outcome of a classification together with the per-method verdicts used
/// to cross-validate (`None` marks a method that does not apply).
#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationReport {
    pub low_sampling: bool,
    pub per_extreme: Vec<ExtremeReport>,
    pub minor_witnesses: Option<MinorWitnesses>,
    pub method_agreement: BTreeMap<String, Option<bool>>,
}

fn extreme_reports(g: &Graph, f: Pair) -> Result<Vec<ExtremeReport>> {
    let con = recognize_with_added_base(g, f)?.ok_or(Error::NotSimple1DofHenneberg)?;
    let mut out = Vec::new();
    for (k, step) in con.steps.iter().enumerate() {
        let (u, w) = step.base_pair;
        if g.pair_in_wellconstrained_subgraph(u, w) {
            out.push(ExtremeReport {
                step: k,
                base_pair: pair(u, w),
                wellconstrained: false,
                triangle_decomposable: None,
                buildable_from_pair: None,
            });
        } else {
            let x = g.with_edge(u, w)?;
            out.push(ExtremeReport {
                step: k,
                base_pair: pair(u, w),
                wellconstrained: true,
                triangle_decomposable: Some(is_triangle_decomposable(&x)),
                buildable_from_pair: Some(is_henneberg_with_base(&x, pair(u, w))?),
            });
        }
    }
    Ok(out)
}

fn definitional(per_extreme: &[ExtremeReport]) -> bool {
    per_extreme
        .iter()
        .filter(|r| r.wellconstrained)
        .all(|r| r.triangle_decomposable == Some(true))
}

/// The definitional decision: every wellconstrained extreme graph of the
/// substrate `g` with base non-edge `f` is triangle-decomposable. Purely
/// combinatorial; edge lengths are irrelevant.
pub fn low_sampling_complexity(g: &Graph, f: Pair) -> Result<ClassificationReport> {
    let per_extreme = extreme_reports(g, f)?;
    let low = definitional(&per_extreme);
    let mut agreement = BTreeMap::new();
    agreement.insert("definitional".to_string(), Some(low));
    Ok(ClassificationReport {
        low_sampling: low,
        per_extreme,
        minor_witnesses: None,
        method_agreement: agreement,
    })
}

/// Three-way classification for triangle-free 1-path substrates. The
/// definitional decision and buildability of every extreme graph from its
/// added pair coincide on this class. Absence of K33/prism minors is
/// sufficient for low sampling complexity, and on substrates with fewer
/// than 8 vertices it is also necessary; from 8 vertices on, a degree-2
/// base vertex acts as a subdivided virtual edge between the common
/// neighbors of the base pair and can complete a forbidden minor without
/// raising any endpoint's algebraic complexity (see
/// `fixtures::veiled_prism8_graph`).
pub fn classify_triangle_free_1path(g: &Graph, f: Pair) -> Result<ClassificationReport> {
    if !g.is_triangle_free() {
        return Err(Error::PreconditionViolated("graph contains a triangle".into()));
    }
    if !is_1path(g, f) {
        return Err(Error::PreconditionViolated(
            "graph is not 1-path over the base non-edge".into(),
        ));
    }
    let per_extreme = extreme_reports(g, f)?;
    let low = definitional(&per_extreme);
    let witnesses = MinorWitnesses {
        k33: has_minor(g, MinorPattern::K33),
        prism: has_minor(g, MinorPattern::Prism),
    };
    let minor_free = !(witnesses.k33 || witnesses.prism);
    let all_buildable = per_extreme
        .iter()
        .all(|r| r.wellconstrained && r.buildable_from_pair == Some(true));
    let mut agreement = BTreeMap::new();
    agreement.insert("definitional".to_string(), Some(low));
    agreement.insert("forbidden_minor".to_string(), Some(minor_free));
    agreement.insert("all_extremes_buildable".to_string(), Some(all_buildable));
    debug_assert_eq!(
        low, all_buildable,
        "definitional and buildability decisions disagree"
    );
    debug_assert!(
        low || !minor_free,
        "a minor-free triangle-free 1-path instance must be low sampling"
    );
    Ok(ClassificationReport {
        low_sampling: low,
        per_extreme,
        minor_witnesses: Some(witnesses),
        method_agreement: agreement,
    })
}

/// Chain-recursion decision for 1-path substrates. Returns `None` when the
/// base pair has exactly one common neighbor at some level (that case is
/// out of the recursion's scope) or the instance leaves the recursion's
/// structural preconditions.
fn chain_decision(g: &Graph, f: Pair) -> Result<Option<bool>> {
    if recognize_with_added_base(g, f)?.is_none() {
        return Err(Error::NotSimple1DofHenneberg);
    }
    let cn = g.common_neighbors(f.0, f.1);
    match cn.len() {
        0 => Ok(None),
        1 => {
            if g.vertex_count() == 3 {
                // Two bare edges: trivially low.
                Ok(Some(true))
            } else {
                Ok(None)
            }
        }
        2 => {
            let (c, d) = (cn[0], cn[1]);
            let deg1 = g.degree(f.0);
            let deg2 = g.degree(f.1);
            if deg1 > 2 && deg2 > 2 {
                return Ok(Some(false));
            }
            let drop: Vec<VertexId> = if deg1 == 2 && deg2 == 2 {
                vec![f.0, f.1]
            } else if deg1 == 2 {
                vec![f.0]
            } else {
                vec![f.1]
            };
            let keep: Vec<VertexId> =
                (0..g.vertex_count()).filter(|v| !drop.contains(v)).collect();
            let mut index = vec![usize::MAX; g.vertex_count()];
            for (i, &v) in keep.iter().enumerate() {
                index[v] = i;
            }
            let sub = g.induced(&keep);
            let (ci, di) = (index[c].min(index[d]), index[c].max(index[d]));
            if sub.vertex_count() == 2 {
                // Nothing beyond the common-neighbor pair remains.
                return Ok(Some(!sub.has_edge(ci, di)));
            }
            if sub.has_edge(ci, di) {
                // The recursion expects a non-edge; structurally outside.
                return Ok(None);
            }
            if recognize_with_added_base(&sub, (ci, di))?.is_none() {
                return Ok(Some(false));
            }
            chain_decision(&sub, (ci, di))
        }
        _ => Ok(Some(false)),
    }
}

/// Classification for 1-path substrates: definitional decision plus the
/// chain recursion, with minor witnesses reported for reference (the minor
/// characterization is exact only on triangle-free instances).
pub fn classify_1path(g: &Graph, f: Pair) -> Result<ClassificationReport> {
    if !is_1path(g, f) {
        return Err(Error::PreconditionViolated(
            "graph is not 1-path over the base non-edge".into(),
        ));
    }
    let per_extreme = extreme_reports(g, f)?;
    let low = definitional(&per_extreme);
    let chain = chain_decision(g, f)?;
    let witnesses = MinorWitnesses {
        k33: has_minor(g, MinorPattern::K33),
        prism: has_minor(g, MinorPattern::Prism),
    };
    let mut agreement = BTreeMap::new();
    agreement.insert("definitional".to_string(), Some(low));
    agreement.insert("chain".to_string(), chain);
    if let Some(c) = chain {
        debug_assert_eq!(c, low, "chain recursion disagrees with definition");
    }
    Ok(ClassificationReport {
        low_sampling: low,
        per_extreme,
        minor_witnesses: Some(witnesses),
        method_agreement: agreement,
    })
}

/// For a wellconstrained buildable graph, decides low sampling complexity
/// once per base edge (classifying the substrate obtained by removing that
/// edge, with the removed edge as the Cayley parameter) and reports whether
/// all verdicts agree.
///
/// Agreement is not guaranteed: removing different base edges yields
/// different substrates, and their verdicts can differ — the seven-vertex
/// witness in `fixtures::contrast7_graph` receives opposite verdicts for
/// two of its base edges. Agreement is guaranteed only among the parameter
/// choices of one fixed substrate; see [`parameter_invariance_check`].
pub fn quantifier_exchange_check(h: &Graph) -> Result<(bool, Vec<(Pair, bool)>)> {
    let bases = enumerate_base_edges(h)?;
    if bases.is_empty() {
        return Err(Error::NotHenneberg);
    }
    let mut table = Vec::new();
    for &e in &bases {
        let edges: Vec<Pair> = h.edges().iter().copied().filter(|&x| x != e).collect();
        let g = Graph::build(h.vertex_count(), &edges)?;
        let low = low_sampling_complexity(&g, e)?.low_sampling;
        table.push((e, low));
    }
    let all_agree = table.windows(2).all(|w| w[0].1 == w[1].1);
    Ok((all_agree, table))
}

/// For a fixed substrate, decides low sampling complexity once per base
/// non-edge (every candidate Cayley parameter) and reports whether all
/// verdicts agree. The verdict is an invariant of the substrate: every
/// parameter choice yields the same answer, so the returned flag is
/// expected to be true.
pub fn parameter_invariance_check(g: &Graph) -> Result<(bool, Vec<(Pair, bool)>)> {
    let bases = enumerate_base_nonedges(g)?;
    if bases.is_empty() {
        return Err(Error::NotSimple1DofHenneberg);
    }
    let mut table = Vec::new();
    for &f in &bases {
        let low = low_sampling_complexity(g, f)?.low_sampling;
        table.push((f, low));
    }
    let all_agree = table.windows(2).all(|w| w[0].1 == w[1].1);
    Ok((all_agree, table))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri3_graph() -> Graph {
        Graph::build(3, &[(0, 2), (1, 2)]).unwrap()
    }

    fn quad5_graph() -> Graph {
        Graph::build(5, &[(0, 2), (1, 2), (0, 3), (1, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn triangle_substrate_is_low() {
        let r = low_sampling_complexity(&tri3_graph(), (0, 1)).unwrap();
        assert!(r.low_sampling);
        assert_eq!(r.per_extreme.len(), 1);
        assert!(r.per_extreme[0].wellconstrained);
    }

    #[test]
    fn five_vertex_substrate_is_low_three_ways() {
        let r = classify_triangle_free_1path(&quad5_graph(), (0, 1)).unwrap();
        assert!(r.low_sampling);
        assert_eq!(r.method_agreement.len(), 3);
        assert!(r.method_agreement.values().all(|v| *v == Some(true)));
        assert_eq!(r.minor_witnesses, Some(MinorWitnesses { k33: false, prism: false }));
    }

    #[test]
    fn three_common_neighbors_fail() {
        // Base pair with three common neighbors, padded so that only the
        // last vertex has degree 2.
        let g = Graph::build(
            8,
            &[
                (0, 2),
                (1, 2),
                (0, 3),
                (1, 3),
                (0, 4),
                (1, 4),
                (2, 5),
                (3, 5),
                (2, 6),
                (4, 6),
                (5, 7),
                (6, 7),
            ],
        )
        .unwrap();
        let r = classify_1path(&g, (0, 1)).unwrap();
        assert!(!r.low_sampling);
        assert_eq!(r.method_agreement["chain"], Some(false));
    }

    #[test]
    fn both_base_degrees_three_fail() {
        // Two common neighbors but both base vertices of degree 3.
        let g = Graph::build(
            7,
            &[
                (0, 2),
                (1, 2),
                (0, 3),
                (1, 3),
                (0, 4),
                (2, 4),
                (1, 5),
                (3, 5),
                (4, 6),
                (5, 6),
            ],
        )
        .unwrap();
        let r = classify_1path(&g, (0, 1)).unwrap();
        assert!(!r.low_sampling);
        assert_eq!(r.method_agreement["chain"], Some(false));
        let w = r.minor_witnesses.unwrap();
        assert!(w.k33 || w.prism);
    }

    #[test]
    fn chain_recursion_confirms_low_instance() {
        // Both base vertices have degree 2; after removing them the
        // recursion bottoms out on a bare two-edge path.
        let r = classify_1path(&quad5_graph(), (0, 1)).unwrap();
        assert!(r.low_sampling);
        assert_eq!(r.method_agreement["chain"], Some(true));
    }

    #[test]
    fn precondition_violations_are_reported() {
        // 1-path violated: quad5 with base pair (2,3) has two free degree-2
        // vertices? Vertex 4 and ... check a clearly failing case: a path
        // of triangles queried on a non-1-path pair.
        let g = Graph::build(
            6,
            &[(0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (2, 4), (1, 5), (3, 5)],
        )
        .unwrap();
        assert!(matches!(
            classify_1path(&g, (0, 1)),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn triangle_base_edges_all_agree() {
        let k3 = Graph::build(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let (agree, table) = quantifier_exchange_check(&k3).unwrap();
        assert!(agree);
        assert_eq!(table.len(), 3);
        assert!(table.iter().all(|&(_, low)| low));
    }
}
