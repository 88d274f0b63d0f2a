// Copyright 2026 the Cayley-Cspace Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Shared helpers for the integration test suites: random substrates and
//! random generic linkages built from random degree-2 addition steps.

use cayley_cspace::graph::{Graph, Pair};
use cayley_cspace::linkage::{load_linkage, Linkage};
use rand::Rng;

/// A uniformly random substrate with `n` vertices built from the base
/// non-edge (0, 1): each new vertex attaches to a random pair of earlier
/// vertices.
pub fn random_substrate<R: Rng>(rng: &mut R, n: usize) -> (Graph, Pair) {
    loop {
        let mut edges: Vec<Pair> = Vec::new();
        let mut ok = true;
        for v in 2..n {
            let u = rng.gen_range(0..v);
            let mut w = rng.gen_range(0..v);
            while w == u {
                w = rng.gen_range(0..v);
            }
            let (a, b) = (u.min(w), u.max(w));
            if edges.contains(&(a, v)) || edges.contains(&(b, v)) {
                ok = false;
                break;
            }
            edges.push((a, v));
            edges.push((b, v));
        }
        if !ok {
            continue;
        }
        if let Ok(g) = Graph::build(n, &edges) {
            return (g, (0, 1));
        }
    }
}

/// A random generic linkage on a random substrate: edge lengths are drawn
/// uniformly from [1, 10], retrying until the linkage validates and its
/// rigid subsystems are realizable.
pub fn random_linkage<R: Rng>(rng: &mut R, n: usize) -> Linkage {
    loop {
        let (g, f) = random_substrate(rng, n);
        let lengths: Vec<(Pair, f64)> = g
            .edges()
            .iter()
            .map(|&e| (e, rng.gen_range(1.0..10.0)))
            .collect();
        if let Ok(l) = load_linkage(g, &lengths, f) {
            if l.blocking_degenerate_steps().is_empty() {
                return l;
            }
        }
    }
}
