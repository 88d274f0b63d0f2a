// Copyright 2026 the Cayley-Cspace Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Triangle-decomposability of wellconstrained graphs via cluster merging.
//!
//! A graph is triangle-decomposable when it is a single edge, a triangle, or
//! splits into three triangle-decomposable subgraphs that pairwise share
//! exactly one vertex, with the three shared vertices distinct. Bottom-up,
//! this is decided by starting from one cluster per edge and saturating the
//! merge rule "three clusters pairwise intersecting in one vertex each, with
//! three distinct shared vertices, fuse into their union". The merge system
//! is confluent (Church-Rosser), so greedy saturation in a deterministic
//! order decides the property regardless of merge order.

use crate::error::{Error, Result};
use crate::graph::{Graph, Pair};
use crate::henneberg::recognize_henneberg;

/// A cluster is a subgraph: a set of edges with its vertex support.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Cluster {
    edge_mask: u64,
    vertex_mask: u64,
}

/// Whether `g` is triangle-decomposable. Disconnected graphs and graphs
/// without edges are rejected.
pub fn is_triangle_decomposable(g: &Graph) -> bool {
    decide(g, None)
}

/// Confluence probe used by property tests: run the saturation preferring a
/// permuted scan order; the answer must not depend on `order`.
pub fn is_triangle_decomposable_with_order(g: &Graph, order: &[usize]) -> bool {
    decide(g, Some(order))
}

fn decide(g: &Graph, order: Option<&[usize]>) -> bool {
    if g.edge_count() == 0 || !g.is_connected() {
        return false;
    }
    if g.vertex_count() <= 2 {
        return g.edge_count() == 1;
    }
    assert!(g.vertex_count() <= 64 && g.edge_count() <= 64, "desk-scale inputs only");
    let full_edges: u64 = if g.edge_count() == 64 { !0 } else { (1u64 << g.edge_count()) - 1 };
    let mut clusters: Vec<Cluster> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| Cluster {
            edge_mask: 1u64 << i,
            vertex_mask: (1u64 << a) | (1u64 << b),
        })
        .collect();
    loop {
        if clusters.iter().any(|c| c.edge_mask == full_edges) {
            return true;
        }
        let m = clusters.len();
        // Scan order: deterministic ascending by default; the permuted order
        // (mod m) first when probing confluence.
        let mut scan: Vec<usize> = Vec::with_capacity(m);
        if let Some(o) = order {
            for &x in o {
                let i = x % m;
                if !scan.contains(&i) {
                    scan.push(i);
                }
            }
        }
        for i in 0..m {
            if !scan.contains(&i) {
                scan.push(i);
            }
        }
        let mut found: Option<(usize, usize, usize)> = None;
        'search: for (si, &i) in scan.iter().enumerate() {
            for (sj, &j) in scan.iter().enumerate().skip(si + 1) {
                let ij = clusters[i].vertex_mask & clusters[j].vertex_mask;
                if ij.count_ones() != 1 {
                    continue;
                }
                for &k in &scan[sj + 1..] {
                    let ik = clusters[i].vertex_mask & clusters[k].vertex_mask;
                    let jk = clusters[j].vertex_mask & clusters[k].vertex_mask;
                    if ik.count_ones() == 1
                        && jk.count_ones() == 1
                        && ij != ik
                        && ij != jk
                        && ik != jk
                    {
                        found = Some((i, j, k));
                        break 'search;
                    }
                }
            }
        }
        match found {
            Some((i, j, k)) => {
                let union = Cluster {
                    edge_mask: clusters[i].edge_mask
                        | clusters[j].edge_mask
                        | clusters[k].edge_mask,
                    vertex_mask: clusters[i].vertex_mask
                        | clusters[j].vertex_mask
                        | clusters[k].vertex_mask,
                };
                let mut keep: Vec<Cluster> = clusters
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != i && t != j && t != k)
                    .map(|(_, &c)| c)
                    .collect();
                keep.push(union);
                keep.sort_unstable();
                keep.dedup();
                clusters = keep;
            }
            None => return false,
        }
    }
}

/// Whether `g` is buildable from base edge `e` by degree-2 vertex additions.
pub fn is_henneberg_with_base(g: &Graph, e: Pair) -> Result<bool> {
    if !g.has_edge(e.0, e.1) {
        return Err(Error::EdgeNotInGraph(e.0, e.1));
    }
    Ok(recognize_henneberg(g, e)?.is_some())
}
