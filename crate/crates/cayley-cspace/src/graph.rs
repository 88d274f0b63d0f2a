// Copyright 2026 the Cayley-Cspace Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Undirected simple graphs with dense vertex ids, plus generic 2D rigidity
//! counting via the (2,3) pebble game.

use crate::error::{Error, Result};

/// Dense vertex identifier; ids inside a [`Graph`] are `0..vertex_count`.
pub type VertexId = usize;

/// An unordered vertex pair, stored with the smaller id first.
pub type Pair = (VertexId, VertexId);

/// Normalizes an unordered pair to `(min, max)`.
pub fn pair(a: VertexId, b: VertexId) -> Pair {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Generic 2D rigidity classification of a graph.
///
/// The classification combines two independent booleans computed by the
/// (2,3) pebble game: whether the edge set is independent in the generic
/// rigidity matroid (no redundant edge), and whether the edge set has full
/// rank `2|V| - 3` (the graph is generically rigid).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RigidityStatus {
    /// Independent and rigid: exactly the Laman graphs (`|E| = 2|V| - 3`
    /// with hereditary sparsity).
    Wellconstrained,
    /// Independent but not rigid: too few constraints, at least one internal
    /// degree of freedom.
    Underconstrained,
    /// Rigid with at least one redundant edge.
    Overconstrained,
    /// Synonym for the rigid-and-dependent case: rigid as a framework while
    /// carrying redundant constraints. [`Graph::rigidity_status`] reports
    /// [`RigidityStatus::Overconstrained`] for such graphs; this variant
    /// exists so callers can name the synonym explicitly.
    WellOverconstrained,
    /// Not rigid and with at least one redundant edge: a flexible graph
    /// containing an overconstrained part.
    FlexibleWithDependence,
}

/// Undirected simple graph with dense vertex ids.
///
/// Immutable after construction; adjacency is precomputed for O(1) lookups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Pair>,
    adjacency: Vec<Vec<VertexId>>,
}

impl Graph {
    /// Builds a graph from a vertex count and an edge list.
    ///
    /// Edge order is irrelevant to all downstream results; edges are
    /// normalized and sorted internally.
    pub fn build(vertex_count: usize, edge_list: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(a, b) in edge_list {
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            if a >= vertex_count {
                return Err(Error::VertexOutOfRange(a, vertex_count));
            }
            if b >= vertex_count {
                return Err(Error::VertexOutOfRange(b, vertex_count));
            }
            edges.push(pair(a, b));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(a, b) in &edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for n in &mut adjacency {
            n.sort_unstable();
        }
        Ok(Self {
            vertex_count,
            edges,
            adjacency,
        })
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Sorted, normalized edge list.
    pub fn edges(&self) -> &[Pair] {
        &self.edges
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    /// Degree of `v`.
    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    /// Whether the unordered pair `(a, b)` is an edge.
    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Vertices adjacent to both `a` and `b`, in increasing order.
    pub fn common_neighbors(&self, a: VertexId, b: VertexId) -> Vec<VertexId> {
        self.adjacency[a]
            .iter()
            .copied()
            .filter(|&x| self.has_edge(b, x))
            .collect()
    }

    /// Returns a copy of this graph with one extra edge.
    pub fn with_edge(&self, a: VertexId, b: VertexId) -> Result<Self> {
        let mut edge_list = self.edges.clone();
        edge_list.push(pair(a, b));
        Self::build(self.vertex_count, &edge_list)
    }

    /// Returns the subgraph induced on `keep` (a strictly increasing vertex
    /// list), with vertices relabeled densely in the order given.
    pub fn induced(&self, keep: &[VertexId]) -> Self {
        let mut index = vec![usize::MAX; self.vertex_count];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edge_list: Vec<Pair> = self
            .edges
            .iter()
            .filter(|&&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
            .map(|&(a, b)| (index[a], index[b]))
            .collect();
        Self::build(keep.len(), &edge_list).expect("induced subgraph of a valid graph is valid")
    }

    /// Whether the graph contains a 3-clique.
    pub fn is_triangle_free(&self) -> bool {
        !self.edges.iter().any(|&(a, b)| {
            self.adjacency[a]
                .iter()
                .any(|&c| c != b && self.has_edge(b, c))
        })
    }

    /// Whether the graph is connected (vacuously true for `|V| <= 1`).
    pub fn is_connected(&self) -> bool {
        if self.vertex_count <= 1 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertex_count
    }

    /// Classifies generic 2D rigidity via the (2,3) pebble game.
    ///
    /// Requires at least two vertices. The pebble game inserts edges one by
    /// one; an edge is accepted when four pebbles can be gathered on its
    /// endpoints, and the number of accepted edges equals the rank of the
    /// edge set in the generic rigidity matroid.
    pub fn rigidity_status(&self) -> Result<RigidityStatus> {
        if self.vertex_count < 2 {
            return Err(Error::InvalidInput(
                "rigidity classification needs at least 2 vertices".into(),
            ));
        }
        let mut game = PebbleGame::new(self.vertex_count);
        let mut independent = true;
        for &(a, b) in &self.edges {
            if !game.try_insert(a, b) {
                independent = false;
            }
        }
        let rigid = game.accepted() == 2 * self.vertex_count - 3;
        Ok(match (independent, rigid) {
            (true, true) => RigidityStatus::Wellconstrained,
            (true, false) => RigidityStatus::Underconstrained,
            (false, true) => RigidityStatus::Overconstrained,
            (false, false) => RigidityStatus::FlexibleWithDependence,
        })
    }

    /// Rank of the edge set in the generic 2D rigidity matroid.
    pub fn rigidity_rank(&self) -> usize {
        let mut game = PebbleGame::new(self.vertex_count);
        for &(a, b) in &self.edges {
            game.try_insert(a, b);
        }
        game.accepted()
    }

    /// Whether adding the edge `(a, b)` would be rejected by the pebble
    /// game after inserting all current edges — equivalently, whether some
    /// wellconstrained (minimally rigid) subgraph already spans `a` and `b`.
    ///
    /// The equivalence holds because an extra edge is dependent exactly when
    /// its endpoints lie in a common rigid block, and on independent edge
    /// sets rigid blocks are wellconstrained subgraphs.
    pub fn pair_in_wellconstrained_subgraph(&self, a: VertexId, b: VertexId) -> bool {
        let mut game = PebbleGame::new(self.vertex_count);
        for &(x, y) in &self.edges {
            game.try_insert(x, y);
        }
        !game.can_insert(a, b)
    }

    /// Exhaustive hereditary-count classification, for cross-checking the
    /// pebble game on small graphs (exponential in `|V|`).
    ///
    /// Checks `|E(S)| <= 2|S| - 3` over every vertex subset `S` with
    /// `|S| >= 2` for independence, and total count `|E| = 2|V| - 3` plus
    /// independence for rigidity of independent graphs; for dependent edge
    /// sets, rigidity is decided via the matroid rank restricted to subsets.
    pub fn rigidity_status_by_counting(&self) -> Result<RigidityStatus> {
        if self.vertex_count < 2 {
            return Err(Error::InvalidInput(
                "rigidity classification needs at least 2 vertices".into(),
            ));
        }
        let n = self.vertex_count;
        assert!(n <= 16, "subset counting is for small graphs only");
        let mut independent = true;
        'subsets: for mask in 1u32..(1 << n) {
            let size = mask.count_ones() as usize;
            if size < 2 {
                continue;
            }
            let mut count = 0usize;
            for &(a, b) in &self.edges {
                if mask & (1 << a) != 0 && mask & (1 << b) != 0 {
                    count += 1;
                }
            }
            if count > 2 * size - 3 {
                independent = false;
                break 'subsets;
            }
        }
        // Rank via greedy matroid extension using the hereditary count as
        // the independence test, fully independent of the pebble game.
        let mut chosen: Vec<Pair> = Vec::new();
        for &e in &self.edges {
            chosen.push(e);
            if !subset_counts_ok(n, &chosen) {
                chosen.pop();
            }
        }
        let rigid = chosen.len() == 2 * n - 3;
        Ok(match (independent, rigid) {
            (true, true) => RigidityStatus::Wellconstrained,
            (true, false) => RigidityStatus::Underconstrained,
            (false, true) => RigidityStatus::Overconstrained,
            (false, false) => RigidityStatus::FlexibleWithDependence,
        })
    }
}

fn subset_counts_ok(n: usize, edges: &[Pair]) -> bool {
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < 2 {
            continue;
        }
        let mut count = 0usize;
        for &(a, b) in edges {
            if mask & (1 << a) != 0 && mask & (1 << b) != 0 {
                count += 1;
            }
        }
        if count > 2 * size - 3 {
            return false;
        }
    }
    true
}

/// The (2,3) pebble game: each vertex holds up to two pebbles; inserting an
/// edge requires gathering four pebbles on its endpoints, then pays one
/// pebble and orients the edge away from the payer.
struct PebbleGame {
    pebbles: Vec<u8>,
    /// Directed out-neighbors of each vertex.
    out: Vec<Vec<VertexId>>,
}

impl PebbleGame {
    fn new(n: usize) -> Self {
        Self {
            pebbles: vec![2; n],
            out: vec![Vec::new(); n],
        }
    }

    fn accepted(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// Depth-first search for a free pebble reachable from `root` along
    /// directed edges, excluding `a` and `b` as sources of pebbles other
    /// than themselves; on success reverses the path to move one pebble to
    /// `root`.
    fn pull_pebble(&mut self, root: VertexId, a: VertexId, b: VertexId) -> bool {
        let n = self.pebbles.len();
        let mut seen = vec![false; n];
        let mut parent: Vec<Option<VertexId>> = vec![None; n];
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(v) = stack.pop() {
            if v != root && v != a && v != b && self.pebbles[v] > 0 {
                // Reverse the path from v back to root, moving one pebble.
                self.pebbles[v] -= 1;
                let mut cur = v;
                while let Some(p) = parent[cur] {
                    // Edge p -> cur flips to cur -> p.
                    let i = self.out[p]
                        .iter()
                        .position(|&x| x == cur)
                        .expect("tree edge");
                    self.out[p].swap_remove(i);
                    self.out[cur].push(p);
                    cur = p;
                }
                self.pebbles[root] += 1;
                return true;
            }
            for i in 0..self.out[v].len() {
                let w = self.out[v][i];
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    stack.push(w);
                }
            }
        }
        false
    }

    fn gather(&mut self, a: VertexId, b: VertexId) -> bool {
        loop {
            let total = self.pebbles[a] + self.pebbles[b];
            if total >= 4 {
                return true;
            }
            if self.pebbles[a] < 2 && self.pull_pebble(a, a, b) {
                continue;
            }
            if self.pebbles[b] < 2 && self.pull_pebble(b, a, b) {
                continue;
            }
            return false;
        }
    }

    fn try_insert(&mut self, a: VertexId, b: VertexId) -> bool {
        if self.gather(a, b) {
            debug_assert!(self.pebbles[a] + self.pebbles[b] >= 4);
            self.pebbles[a] -= 1;
            self.out[a].push(b);
            true
        } else {
            false
        }
    }

    /// Whether an edge `(a, b)` could be inserted, without mutating the
    /// accepted edge set (pebble motions are rank-preserving, so running the
    /// gather is safe).
    fn can_insert(&mut self, a: VertexId, b: VertexId) -> bool {
        self.gather(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        let mut e = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                e.push((a, b));
            }
        }
        Graph::build(n, &e).unwrap()
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            Graph::build(3, &[(0, 2), (0, 2)]),
            Err(Error::DuplicateEdge(0, 2))
        );
        assert_eq!(
            Graph::build(3, &[(0, 2), (2, 0)]),
            Err(Error::DuplicateEdge(0, 2))
        );
        assert_eq!(Graph::build(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::build(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange(2, 2))
        );
    }

    #[test]
    fn triangle_is_wellconstrained() {
        assert_eq!(k(3).rigidity_status().unwrap(), RigidityStatus::Wellconstrained);
    }

    #[test]
    fn k4_is_overconstrained() {
        assert_eq!(k(4).rigidity_status().unwrap(), RigidityStatus::Overconstrained);
    }

    #[test]
    fn path_is_underconstrained() {
        let g = Graph::build(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(g.rigidity_status().unwrap(), RigidityStatus::Underconstrained);
    }

    #[test]
    fn disjoint_triangle_plus_k4_is_flexible_with_dependence() {
        let mut e = vec![(0, 1), (1, 2), (0, 2)];
        for a in 3..7 {
            for b in (a + 1)..7 {
                e.push((a, b));
            }
        }
        let g = Graph::build(7, &e).unwrap();
        assert_eq!(
            g.rigidity_status().unwrap(),
            RigidityStatus::FlexibleWithDependence
        );
    }

    #[test]
    fn counting_cross_check_agrees_on_small_graphs() {
        // All graphs on 5 vertices: cross-check pebble game vs counting.
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|a| ((a + 1)..5).map(move |b| (a, b)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::build(5, &edges).unwrap();
            assert_eq!(
                g.rigidity_status().unwrap(),
                g.rigidity_status_by_counting().unwrap(),
                "mismatch on edges {edges:?}"
            );
        }
    }

    #[test]
    fn triangle_freeness() {
        assert!(!k(3).is_triangle_free());
        // Complete bipartite K33 is triangle-free.
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        assert!(Graph::build(6, &e).unwrap().is_triangle_free());
    }

    #[test]
    fn pair_in_wellconstrained_subgraph_detects_rigid_blocks() {
        // Triangle {0,1,2} with a pendant edge (2,3): pair (0,1) lies in the
        // rigid triangle, pair (0,3) does not.
        let g = Graph::build(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert!(g.pair_in_wellconstrained_subgraph(0, 1));
        assert!(!g.pair_in_wellconstrained_subgraph(0, 3));
    }
}
