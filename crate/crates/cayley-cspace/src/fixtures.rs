// Copyright 2026 the Cayley-Cspace Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Named example substrates and linkages used throughout the test suite
//! and the command-line demos. Each fixture documents the structural
//! property it exhibits; all are built from explicit degree-2 vertex
//! addition step lists.

use crate::graph::{Graph, Pair, VertexId};
use crate::linkage::{load_linkage, Linkage};

/// Builds the substrate with `n` vertices whose edges come from degree-2
/// addition steps `(new_vertex, u, w)`; the base non-edge itself
/// contributes no edges.
pub fn substrate(n: usize, steps: &[(usize, usize, usize)]) -> Graph {
    let mut edges: Vec<Pair> = Vec::with_capacity(2 * steps.len());
    for &(v, u, w) in steps {
        edges.push((u.min(v), u.max(v)));
        edges.push((w.min(v), w.max(v)));
    }
    Graph::build(n, &edges).expect("fixture step list forms a simple graph")
}

/// The three-vertex substrate: one free vertex hung on the base pair, with
/// the two given edge lengths. Its configuration space is the triangle
/// inequality interval `[|a-b|, a+b]`.
pub fn tri3(a: f64, b: f64) -> Linkage {
    let g = substrate(3, &[(2, 0, 1)]);
    load_linkage(g, &[((0, 2), a), ((1, 2), b)], (0, 1)).unwrap()
}

/// The five-vertex quadrilateral substrate: two anchor vertices on the
/// base pair and an apex hung from them.
pub fn quad5_graph() -> Graph {
    substrate(5, &[(2, 0, 1), (3, 0, 1), (4, 2, 3)])
}

/// The flagship five-vertex linkage whose configuration space is a union
/// of two intervals with nested-radical endpoints.
pub fn quad5() -> Linkage {
    load_linkage(
        quad5_graph(),
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
    .unwrap()
}

/// Seven vertices with both base vertices of degree 3: two common
/// neighbors of the base pair, side vertices hung asymmetrically, and a
/// closing apex. Not triangle-free; fails the chain recursion.
pub fn ste7_graph() -> Graph {
    substrate(7, &[(2, 0, 1), (3, 0, 1), (4, 0, 2), (5, 1, 3), (6, 4, 5)])
}

/// Seven vertices with three common neighbors of an interior pair: two
/// anchors and a third vertex on the base pair, an apex between the
/// anchors, and a closing vertex.
pub fn hex7_graph() -> Graph {
    substrate(7, &[(2, 0, 1), (3, 0, 1), (4, 2, 3), (5, 0, 1), (6, 4, 5)])
}

/// Seven-vertex ladder: two rungs of paired vertices and a final apex.
/// Triangle-free, 1-path, and fully reducible by the quadrilateral
/// diagonal recursion.
pub fn ladder7_graph() -> Graph {
    substrate(7, &[(2, 0, 1), (3, 0, 1), (4, 2, 3), (5, 2, 3), (6, 4, 5)])
}

/// Generic edge lengths for the ladder substrate.
pub fn ladder7() -> Linkage {
    load_linkage(
        ladder7_graph(),
        &[
            ((0, 2), 6.0),
            ((1, 2), 7.0),
            ((0, 3), 5.5),
            ((1, 3), 8.0),
            ((2, 4), 3.0),
            ((3, 4), 4.0),
            ((2, 5), 4.2),
            ((3, 5), 3.3),
            ((4, 6), 2.0),
            ((5, 6), 2.6),
        ],
        (0, 1),
    )
    .unwrap()
}

/// Seven-vertex snake: a quadrilateral with an apex, then two vertices
/// winding back onto one base vertex. Triangle-free, 1-path, reducible by
/// the quadrilateral diagonal recursion one base vertex at a time.
pub fn snake7_graph() -> Graph {
    substrate(7, &[(2, 0, 1), (3, 0, 1), (4, 2, 3), (5, 1, 4), (6, 3, 5)])
}

/// Generic edge lengths for the snake substrate.
pub fn snake7() -> Linkage {
    load_linkage(
        snake7_graph(),
        &[
            ((0, 2), 6.0),
            ((1, 2), 7.0),
            ((0, 3), 5.5),
            ((1, 3), 8.0),
            ((2, 4), 3.0),
            ((3, 4), 4.0),
            ((1, 5), 6.5),
            ((4, 5), 3.1),
            ((3, 6), 4.4),
            ((5, 6), 2.9),
        ],
        (0, 1),
    )
    .unwrap()
}

/// Fourteen vertices: two rigid gadgets hinged on edges through a shared
/// apex vertex, closed by a final vertex between the gadgets' tips. Has
/// both forbidden minors yet low sampling complexity — only two extreme
/// graphs are wellconstrained because every other step's base pair lies
/// inside a gadget.
pub fn double_gadget14_graph() -> Graph {
    substrate(
        14,
        &[
            (2, 0, 1),
            (3, 0, 2),
            (4, 0, 2),
            (5, 3, 4),
            (6, 0, 2),
            (7, 5, 6),
            (8, 1, 2),
            (9, 1, 2),
            (10, 1, 8),
            (11, 2, 9),
            (12, 10, 11),
            (13, 7, 12),
        ],
    )
}

/// Fourteen-vertex subdivided-K6 substrate: eight direct core edges on
/// vertices 0..6, the remaining core pairs realized through degree-2
/// connector vertices, plus one extra parallel path. Triangle-free, not
/// 1-path, and buildable from several distinct base non-edges, returned
/// alongside the graph; it has low sampling complexity on each.
pub fn subdivided_k6() -> (Graph, Vec<Pair>) {
    let g = substrate(
        14,
        &[
            (2, 0, 1),
            (3, 0, 1),
            (4, 2, 3),
            (5, 2, 3),
            (6, 0, 1),
            (7, 0, 4),
            (8, 4, 5),
            (9, 2, 3),
            (10, 0, 5),
            (11, 1, 4),
            (12, 1, 5),
            (13, 0, 4),
        ],
    );
    (g, vec![(0, 1), (2, 3), (4, 5), (0, 4), (1, 5)])
}

/// Twenty-seven-vertex fan: a long strip of triangles sharing one hub
/// vertex, closed off by two extra vertices. The base pair has a single
/// common neighbor, so the quadrilateral diagonal recursion does not
/// apply even though the instance has low sampling complexity.
pub fn fan27_graph() -> Graph {
    let mut steps = vec![(2usize, 0usize, 1usize)];
    for k in 3..=24 {
        steps.push((k, 0, k - 1));
    }
    steps.push((25, 0, 23));
    steps.push((26, 24, 25));
    substrate(27, &steps)
}

/// Generic edge lengths for the fan substrate; long hub spokes with short
/// rim edges. Used for structural queries, not for realization (the
/// construction has more steps than the orientation search supports).
pub fn fan27() -> Linkage {
    let g = fan27_graph();
    let lengths: Vec<(Pair, f64)> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| {
            let base = if u == 0 { 5.0 } else { 1.3 };
            ((u, v), base + 0.01 * i as f64)
        })
        .collect();
    load_linkage(g, &lengths, (0, 1)).unwrap()
}

/// An eight-vertex triangle-free 1-path substrate with low sampling
/// complexity (every extreme graph is buildable from its added pair) that
/// nevertheless contains a prism minor: branch sets {0}, {5}, {6, 7} and
/// {1, 2}, {3}, {4}, matched by the edges (0, 3), (4, 5), (2, 6). The
/// minor threads through the degree-2 base vertex 1, whose two edges form
/// a subdivided virtual edge between the common neighbors 2 and 3 of the
/// base pair; minor-freeness is therefore only a sufficient condition for
/// low sampling complexity from this size on.
pub fn veiled_prism8_graph() -> Graph {
    Graph::build(
        8,
        &[
            (0, 2),
            (0, 3),
            (0, 5),
            (0, 7),
            (1, 2),
            (1, 3),
            (2, 4),
            (2, 6),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 7),
        ],
    )
    .unwrap()
}

/// A seven-vertex wellconstrained graph whose base edges do not share one
/// verdict: removing (0, 1) leaves a substrate without low sampling
/// complexity (one extreme graph spans a K33 on parts {0, 1, 5} and
/// {2, 3, 4}), while removing any other base edge leaves a substrate with
/// it (edge (0, 1) then makes {0, 1, 3, 4} rigid, which suppresses the
/// offending extreme). Each individual substrate still answers identically
/// across its own parameter choices.
pub fn contrast7_graph() -> Graph {
    Graph::build(
        7,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 5),
            (3, 5),
            (4, 6),
            (5, 6),
        ],
    )
    .unwrap()
}

/// A 1-path substrate with low sampling complexity that nevertheless
/// contains a planted clique minor `K_m` (m >= 3) inside one rigid
/// gadget. Returns the graph, its base non-edge, and the vertex set of
/// the clique-bearing gadget so minor checks can restrict to it.
pub fn planted_clique(m: usize) -> (Graph, Pair, Vec<VertexId>) {
    assert!(m >= 3, "clique gadget starts at K3");
    let mut steps: Vec<(usize, usize, usize)> = vec![(2, 0, 1)];
    // Gadget rigid on edge (0,2): seed triangle, then for each clique
    // growth stage a chain of new vertices touching every current branch
    // representative; contracting the chain into its last vertex makes
    // that vertex adjacent to all representatives.
    let mut next = 3usize;
    steps.push((next, 0, 2));
    let mut reps: Vec<usize> = vec![0, 2, next];
    next += 1;
    for k in 3..m {
        let mut prev = reps[0];
        for &u in reps.iter().take(k).skip(1) {
            steps.push((next, prev, u));
            prev = next;
            next += 1;
        }
        reps.push(prev);
    }
    let gadget_last = *reps.last().unwrap();
    let mut gadget: Vec<VertexId> = vec![0, 2];
    gadget.extend(3..next);
    // Second rigid gadget on edge (1,2), mirroring the double-gadget
    // closure so exactly two extreme graphs stay wellconstrained.
    let (a, b, c, d, e) = (next, next + 1, next + 2, next + 3, next + 4);
    steps.push((a, 1, 2));
    steps.push((b, 1, 2));
    steps.push((c, 1, a));
    steps.push((d, 2, b));
    steps.push((e, c, d));
    let close = next + 5;
    steps.push((close, gadget_last, e));
    (substrate(close + 1, &steps), (0, 1), gadget)
}
