// Copyright 2026 the Cayley-Cspace Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Graph-minor containment for a small family of fixed patterns: the
//! complete bipartite graph K33, the triangular prism (C3 x C2), and small
//! cliques.
//!
//! The decision procedure is a branch-set search: find pairwise disjoint
//! connected vertex sets in the host, one per pattern vertex, such that
//! every pattern edge is realized by a host edge between the corresponding
//! sets. Hosts are first simplified by deleting vertices of degree at most
//! one and suppressing degree-2 vertices; both operations preserve
//! containment of patterns whose minimum degree is at least three, which
//! covers every pattern used here.
//!
//! An independent, much slower oracle based on exhaustive edge contractions
//! plus subgraph isomorphism is provided for cross-checking on small hosts.

use crate::error::Result;
use crate::graph::{Graph, VertexId};

/// The two fixed forbidden patterns of the triangle-free characterization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinorPattern {
    /// Complete bipartite graph on 3 + 3 vertices.
    K33,
    /// Triangular prism C3 x C2: two triangles joined by a perfect matching.
    Prism,
}

/// The K33 pattern graph on vertices {0,1,2} x {3,4,5}.
pub fn k33_graph() -> Graph {
    let mut e = Vec::new();
    for a in 0..3 {
        for b in 3..6 {
            e.push((a, b));
        }
    }
    Graph::build(6, &e).expect("static pattern")
}

/// The prism pattern graph: triangles {0,1,2} and {3,4,5} plus the matching
/// (0,3), (1,4), (2,5).
pub fn prism_graph() -> Graph {
    Graph::build(
        6,
        &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
    )
    .expect("static pattern")
}

/// The complete graph on `m` vertices.
pub fn clique(m: usize) -> Graph {
    let mut e = Vec::new();
    for a in 0..m {
        for b in (a + 1)..m {
            e.push((a, b));
        }
    }
    Graph::build(m, &e).expect("static pattern")
}

/// Whether `pattern` is a minor of `host`.
pub fn has_minor(host: &Graph, pattern: MinorPattern) -> bool {
    let p = match pattern {
        MinorPattern::K33 => k33_graph(),
        MinorPattern::Prism => prism_graph(),
    };
    has_pattern_minor(host, &p)
}

/// Whether the complete graph `K_m` is a minor of `host`.
pub fn has_clique_minor(host: &Graph, m: usize) -> bool {
    has_pattern_minor(host, &clique(m))
}

/// Whether `K_6` is a minor of `host`. A `K_6` minor implies both a K33 and
/// a prism minor, since both are subgraphs of `K_6`.
pub fn k6_family_check(host: &Graph) -> bool {
    has_clique_minor(host, 6)
}

/// Branch-set minor test for an arbitrary pattern with minimum degree >= 3.
pub fn has_pattern_minor(host: &Graph, pattern: &Graph) -> bool {
    assert!(
        (0..pattern.vertex_count()).all(|v| pattern.degree(v) >= 3),
        "simplification assumes pattern minimum degree >= 3"
    );
    let host = simplify(host);
    if host.vertex_count() < pattern.vertex_count()
        || host.edge_count() < pattern.edge_count()
    {
        return false;
    }
    // Degree pruning: the host needs at least as many vertices of degree
    // >= d as the pattern for each threshold d? Not true for branch sets in
    // general, so only the count prunes above apply.
    let mut search = BranchSearch {
        host: &host,
        pattern,
        branch: vec![None; host.vertex_count()],
        sets: vec![Vec::new(); pattern.vertex_count()],
    };
    search.run()
}

/// Iteratively deletes vertices of degree <= 1 and suppresses degree-2
/// vertices (joining their two neighbors). Sound and complete for patterns
/// of minimum degree >= 3.
fn simplify(g: &Graph) -> Graph {
    let mut n = g.vertex_count();
    let mut adj: Vec<std::collections::BTreeSet<VertexId>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut alive: Vec<bool> = vec![true; n];
    loop {
        let mut changed = false;
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            match adj[v].len() {
                0 | 1 => {
                    for &u in adj[v].clone().iter() {
                        adj[u].remove(&v);
                    }
                    adj[v].clear();
                    alive[v] = false;
                    changed = true;
                }
                2 => {
                    let mut it = adj[v].iter();
                    let a = *it.next().unwrap();
                    let b = *it.next().unwrap();
                    adj[a].remove(&v);
                    adj[b].remove(&v);
                    adj[a].insert(b);
                    adj[b].insert(a);
                    adj[v].clear();
                    alive[v] = false;
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
    let keep: Vec<VertexId> = (0..n).filter(|&v| alive[v]).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in keep.iter().enumerate() {
        index[v] = i;
    }
    let mut edges = Vec::new();
    for &v in &keep {
        for &u in &adj[v] {
            if v < u {
                edges.push((index[v], index[u]));
            }
        }
    }
    n = keep.len();
    Graph::build(n, &edges).expect("simplified graph is valid")
}

struct BranchSearch<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    /// Pattern vertex each host vertex is assigned to, if any.
    branch: Vec<Option<usize>>,
    /// Host vertices of each branch set, in assignment order.
    sets: Vec<Vec<VertexId>>,
}

impl BranchSearch<'_> {
    fn run(&mut self) -> bool {
        self.step()
    }

    /// Whether some host edge joins branch sets `i` and `j`.
    fn satisfied(&self, i: usize, j: usize) -> bool {
        self.sets[i].iter().any(|&v| {
            self.host
                .neighbors(v)
                .iter()
                .any(|&w| self.branch[w] == Some(j))
        })
    }

    fn step(&mut self) -> bool {
        // First pattern edge not yet realized, preferring edges whose branch
        // sets both exist (cheap connection moves) before seeding new sets.
        let mut pending: Option<(usize, usize)> = None;
        for &(i, j) in self.pattern.edges() {
            if self.sets[i].is_empty() || self.sets[j].is_empty() {
                if pending.is_none() {
                    pending = Some((i, j));
                }
                continue;
            }
            if !self.satisfied(i, j) {
                pending = Some((i, j));
                break;
            }
        }
        let (i, j) = match pending {
            None => return true,
            Some(p) => p,
        };
        // Seeding moves: an empty side takes any unassigned host vertex.
        for side in [i, j] {
            if self.sets[side].is_empty() {
                for v in 0..self.host.vertex_count() {
                    if self.branch[v].is_none() && self.try_extend(side, v) {
                        return true;
                    }
                }
                return false;
            }
        }
        // Connection moves: grow either side by an adjacent unassigned
        // vertex.
        for side in [i, j] {
            let frontier: Vec<VertexId> = self.sets[side]
                .iter()
                .flat_map(|&v| self.host.neighbors(v).iter().copied())
                .filter(|&w| self.branch[w].is_none())
                .collect();
            let mut tried: Vec<VertexId> = Vec::new();
            for w in frontier {
                if tried.contains(&w) {
                    continue;
                }
                tried.push(w);
                if self.try_extend(side, w) {
                    return true;
                }
            }
        }
        false
    }

    fn try_extend(&mut self, side: usize, v: VertexId) -> bool {
        self.branch[v] = Some(side);
        self.sets[side].push(v);
        let ok = self.step();
        if !ok {
            self.sets[side].pop();
            self.branch[v] = None;
        }
        ok
    }
}

/// Exhaustive minor oracle: `pattern` is a minor of `host` iff some sequence
/// of edge contractions yields a graph containing `pattern` as a subgraph.
/// Exponential; intended for hosts with at most ~10 vertices after
/// simplification. The two oracles are implemented independently so they can
/// cross-validate each other.
pub fn has_minor_naive(host: &Graph, pattern: &Graph) -> Result<bool> {
    let mut memo = std::collections::HashSet::new();
    Ok(contract_search(host, pattern, &mut memo))
}

fn contract_search(
    g: &Graph,
    pattern: &Graph,
    memo: &mut std::collections::HashSet<Vec<(usize, usize)>>,
) -> bool {
    if g.vertex_count() < pattern.vertex_count() || g.edge_count() < pattern.edge_count() {
        return false;
    }
    let key = canonical_edges(g);
    if !memo.insert(key) {
        return false;
    }
    if subgraph_isomorphic(pattern, g) {
        return true;
    }
    for &(a, b) in g.edges() {
        let contracted = contract_edge(g, a, b);
        if contract_search(&contracted, pattern, memo) {
            return true;
        }
    }
    false
}

/// Contracts edge (a, b): merges `b` into `a`, removing parallel edges, and
/// relabels densely.
fn contract_edge(g: &Graph, a: VertexId, b: VertexId) -> Graph {
    let n = g.vertex_count();
    let map = |v: VertexId| -> VertexId {
        let v = if v == b { a } else { v };
        if v > b {
            v - 1
        } else {
            v
        }
    };
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(x, y)| (map(x), map(y)))
        .filter(|&(x, y)| x != y)
        .map(|(x, y)| if x < y { (x, y) } else { (y, x) })
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Graph::build(n - 1, &edges).expect("contracted graph is valid")
}

/// A cheap canonical form: the lexicographically smallest edge list over all
/// vertex permutations, with degree-partition pruning. Exponential; small
/// graphs only.
fn canonical_edges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    assert!(n <= 12, "canonical form is for small graphs only");
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    permute_all(&mut perm, 0, &mut |p| {
        let mut edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (p[a], p[b]);
                if x < y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect();
        edges.sort_unstable();
        if best.as_ref().map_or(true, |b| edges < *b) {
            best = Some(edges);
        }
    });
    best.unwrap_or_default()
}

fn permute_all(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_all(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// Backtracking subgraph-isomorphism test: is there an injective map from
/// `pattern` vertices to `g` vertices carrying every pattern edge to an
/// edge?
pub fn subgraph_isomorphic(pattern: &Graph, g: &Graph) -> bool {
    if pattern.vertex_count() > g.vertex_count() || pattern.edge_count() > g.edge_count() {
        return false;
    }
    // Map pattern vertices in decreasing-degree order for early pruning.
    let mut order: Vec<usize> = (0..pattern.vertex_count()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(pattern.degree(v)));
    let mut assign: Vec<Option<VertexId>> = vec![None; pattern.vertex_count()];
    let mut used = vec![false; g.vertex_count()];
    fn rec(
        pattern: &Graph,
        g: &Graph,
        order: &[usize],
        pos: usize,
        assign: &mut Vec<Option<VertexId>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let pv = order[pos];
        'cand: for hv in 0..g.vertex_count() {
            if used[hv] || g.degree(hv) < pattern.degree(pv) {
                continue;
            }
            for &pn in pattern.neighbors(pv) {
                if let Some(hn) = assign[pn] {
                    if !g.has_edge(hv, hn) {
                        continue 'cand;
                    }
                }
            }
            assign[pv] = Some(hv);
            used[hv] = true;
            if rec(pattern, g, order, pos + 1, assign, used) {
                return true;
            }
            assign[pv] = None;
            used[hv] = false;
        }
        false
    }
    rec(pattern, g, &order, 0, &mut assign, &mut used)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_minors() {
        assert!(has_minor(&k33_graph(), MinorPattern::K33));
        assert!(has_minor(&prism_graph(), MinorPattern::Prism));
        assert!(k6_family_check(&clique(6)));
    }

    #[test]
    fn prism_has_no_k33_minor() {
        // The prism is planar; planar graphs contain no K33 minor.
        assert!(!has_minor(&prism_graph(), MinorPattern::K33));
    }

    #[test]
    fn k33_has_no_clique5_minor() {
        assert!(!has_clique_minor(&k33_graph(), 5));
    }

    #[test]
    fn planar_grid_has_no_k6_minor() {
        // 3x3 grid graph, planar.
        let mut e = Vec::new();
        for r in 0..3 {
            for c in 0..3 {
                let v = 3 * r + c;
                if c + 1 < 3 {
                    e.push((v, v + 1));
                }
                if r + 1 < 3 {
                    e.push((v, v + 3));
                }
            }
        }
        let g = Graph::build(9, &e).unwrap();
        assert!(!k6_family_check(&g));
        assert!(!has_minor(&g, MinorPattern::K33));
    }

    #[test]
    fn subdivided_k33_is_detected() {
        // Subdivide every edge of K33 once: 6 + 9 vertices.
        let base = k33_graph();
        let mut edges = Vec::new();
        for (i, &(a, b)) in base.edges().iter().enumerate() {
            let mid = 6 + i;
            edges.push((a, mid));
            edges.push((mid, b));
        }
        let g = Graph::build(15, &edges).unwrap();
        assert!(has_minor(&g, MinorPattern::K33));
        assert!(!has_minor(&g, MinorPattern::Prism));
    }

    #[test]
    fn naive_oracle_agrees_on_small_hosts() {
        let hosts = [
            clique(5),
            clique(6),
            k33_graph(),
            prism_graph(),
            Graph::build(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (0, 3), (1, 4), (2, 5)]).unwrap(),
        ];
        for h in &hosts {
            for (p, pg) in [
                (MinorPattern::K33, k33_graph()),
                (MinorPattern::Prism, prism_graph()),
            ] {
                assert_eq!(
                    has_minor(h, p),
                    has_minor_naive(h, &pg).unwrap(),
                    "oracle mismatch on host {:?} pattern {:?}",
                    h.edges(),
                    p
                );
            }
        }
    }

    #[test]
    fn monotone_under_edge_addition() {
        let g = prism_graph();
        assert!(has_minor(&g.with_edge(0, 4).unwrap(), MinorPattern::Prism));
    }
}
