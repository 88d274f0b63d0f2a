// Copyright 2026 the Cayley-Cspace Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Exhaustive generation, up to isomorphism, of small graphs built by
//! degree-2 vertex additions: complete buildable graphs for base-edge
//! sweeps, and triangle-free 1-path substrates for cross-validating the
//! classification characterizations. Intended for vertex counts small
//! enough that brute-force canonical forms (minimum over all vertex
//! permutations) are affordable.

use crate::graph::{pair, Graph, Pair};
use crate::henneberg::{is_1path, recognize_henneberg};
use itertools::Itertools;

/// Minimum edge list over all vertex relabelings; equal exactly for
/// isomorphic graphs.
fn canonical(g: &Graph) -> Vec<Pair> {
    let n = g.vertex_count();
    (0..n)
        .permutations(n)
        .map(|perm| {
            let mut edges: Vec<Pair> =
                g.edges().iter().map(|&(u, v)| pair(perm[u], perm[v])).collect();
            edges.sort_unstable();
            edges
        })
        .min()
        .unwrap()
}

/// Minimum (edge list, marked pair) over all vertex relabelings; equal
/// exactly for isomorphic graph-with-marked-pair instances.
fn canonical_with_pair(g: &Graph, f: Pair) -> (Vec<Pair>, Pair) {
    let n = g.vertex_count();
    (0..n)
        .permutations(n)
        .map(|perm| {
            let mut edges: Vec<Pair> =
                g.edges().iter().map(|&(u, v)| pair(perm[u], perm[v])).collect();
            edges.sort_unstable();
            (edges, pair(perm[f.0], perm[f.1]))
        })
        .min()
        .unwrap()
}

fn dedup_by<T, K: Ord>(items: Vec<T>, key: impl Fn(&T) -> K) -> Vec<T> {
    let mut keyed: Vec<(K, T)> = items.into_iter().map(|t| (key(&t), t)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    keyed.into_iter().map(|(_, t)| t).collect()
}

/// All graphs buildable from a single starting edge by degree-2 vertex
/// additions, with 3 to `max_n` vertices, up to isomorphism.
pub fn buildable_graphs_up_to(max_n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::build(2, &[(0, 1)]).unwrap()];
    let mut out = Vec::new();
    for n in 3..=max_n {
        let mut next = Vec::new();
        for g in &level {
            for u in 0..n - 1 {
                for w in u + 1..n - 1 {
                    let mut edges = g.edges().to_vec();
                    edges.push((u, n - 1));
                    edges.push((w, n - 1));
                    next.push(Graph::build(n, &edges).unwrap());
                }
            }
        }
        level = dedup_by(next, canonical);
        out.extend(level.iter().cloned());
    }
    out
}

/// All substrates obtained by deleting one base edge from each buildable
/// graph with 3 to `max_n` vertices, up to isomorphism. The low-sampling
/// verdict is an invariant of the substrate, so no parameter pair is
/// marked; substrates never have isolated vertices, making bare edge-list
/// canonical forms sufficient across vertex counts.
pub fn substrates_up_to(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for h in buildable_graphs_up_to(max_n) {
        for &e in h.edges() {
            if recognize_henneberg(&h, e).unwrap().is_some() {
                let edges: Vec<Pair> =
                    h.edges().iter().copied().filter(|&x| x != e).collect();
                out.push(Graph::build(h.vertex_count(), &edges).unwrap());
            }
        }
    }
    dedup_by(out, canonical)
}

/// All triangle-free 1-path substrates with 3 to `max_n` vertices, up to
/// isomorphism of the graph with its base non-edge, paired with that base
/// non-edge. Generation attaches each new vertex to a currently
/// non-adjacent pair, which is exactly the triangle-free condition.
pub fn triangle_free_1path_substrates(max_n: usize) -> Vec<(Graph, Pair)> {
    let f: Pair = (0, 1);
    let mut level = vec![Graph::build(2, &[]).unwrap()];
    let mut out = Vec::new();
    for n in 3..=max_n {
        let mut next = Vec::new();
        for g in &level {
            for u in 0..n - 1 {
                for w in u + 1..n - 1 {
                    if g.has_edge(u, w) {
                        continue;
                    }
                    let mut edges = g.edges().to_vec();
                    edges.push((u, n - 1));
                    edges.push((w, n - 1));
                    next.push(Graph::build(n, &edges).unwrap());
                }
            }
        }
        level = dedup_by(next, |g| canonical_with_pair(g, f));
        out.extend(level.iter().filter(|g| is_1path(g, f)).map(|g| (g.clone(), f)));
    }
    out
}
