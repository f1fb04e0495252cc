//! Undirected simple graphs on up to 64 vertices with per-vertex adjacency
//! bitsets, plus the predicates and transformations used by the verifiers.
//!
//! Word-width bitsets make neighborhood intersection, independence tests and
//! the Hamiltonian subset DP single instructions per 64 vertices; every
//! operation here is pure and `Graph` values are immutable after
//! construction.

mod graph6;
mod hamilton;
mod iso;
mod split;

pub use graph6::{decode_graph6, encode_graph6};
pub use hamilton::{is_fully_cycle_extendable, is_hamiltonian};
pub use iso::{are_isomorphic, canonical_form};
pub use split::{split_witness, SplitWitness};

use crate::{Error, Result};

/// Hard representation bound: adjacency rows are single 64-bit words.
pub const MAX_VERTICES: usize = 64;

/// Bitmask with the low `n` bits set.
#[inline]
pub(crate) fn low_bits(n: usize) -> u64 {
    debug_assert!(n <= 64);
    if n == 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bit positions of a word, ascending.
#[inline]
pub(crate) fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let v = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(v)
        }
    })
}

/// Undirected simple graph: vertex count plus one adjacency bitset per
/// vertex.
///
/// Invariants (checked by constructors, preserved by transformations):
/// adjacency is symmetric, irreflexive, and confined to bits `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                op: "graph construction",
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list; duplicate pairs collapse to one
    /// edge.
    ///
    /// Errors on endpoints `>= n` and on self-loops.
    pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Wraps adjacency rows produced by trusted internal generators.
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        let g = Graph { n: adj.len(), adj };
        debug_assert!(g.check_invariants(), "adjacency rows violate invariants");
        g
    }

    pub(crate) fn check_invariants(&self) -> bool {
        if self.n > MAX_VERTICES {
            return false;
        }
        let mask = low_bits(self.n);
        for u in 0..self.n {
            if self.adj[u] & !mask != 0 || self.adj[u] & (1 << u) != 0 {
                return false;
            }
            for v in bits(self.adj[u]) {
                if self.adj[v] & (1 << u) == 0 {
                    return false;
                }
            }
        }
        true
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Neighborhood of `u` as a bitmask.
    #[inline]
    pub fn neighbors(&self, u: usize) -> u64 {
        self.adj[u]
    }

    /// Closed neighborhood `N[u] = N(u) + u`.
    #[inline]
    pub fn closed_neighbors(&self, u: usize) -> u64 {
        self.adj[u] | (1 << u)
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1 << v) != 0
    }

    /// Mask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_bits(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edge list with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !low_bits(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// True iff every vertex is reachable from vertex 0.
    ///
    /// The single-vertex graph counts as connected; the empty graph is
    /// rejected.
    pub fn is_connected(&self) -> Result<bool> {
        if self.n == 0 {
            return Err(Error::TooSmall {
                op: "is_connected",
                n: 0,
                min: 1,
            });
        }
        Ok(self.reach_from(1) == self.vertex_mask())
    }

    /// Set of vertices reachable from the seed mask (inclusive).
    #[inline]
    pub(crate) fn reach_from(&self, seed: u64) -> u64 {
        let mut seen = seed;
        let mut frontier = seed;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen
    }

    /// True iff the subgraph induced by `sub` is connected (and nonempty).
    pub(crate) fn is_connected_within(&self, sub: u64) -> bool {
        if sub == 0 {
            return false;
        }
        let seed = 1u64 << sub.trailing_zeros();
        let mut seen = seed;
        let mut frontier = seed;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & sub & !seen;
            seen |= frontier;
        }
        seen == sub
    }

    /// True iff no vertex has `r` pairwise nonadjacent neighbors; `r = 3` is
    /// claw-freeness.
    pub fn is_k1r_free(&self, r: usize) -> Result<bool> {
        if r < 3 {
            return Err(Error::SmallR(r));
        }
        for u in 0..self.n {
            if self.has_independent_subset(self.adj[u], r) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Branch-and-prune search for an independent set of size `want` inside
    /// the `pool` mask.
    pub(crate) fn has_independent_subset(&self, pool: u64, want: usize) -> bool {
        if want == 0 {
            return true;
        }
        if (pool.count_ones() as usize) < want {
            return false;
        }
        let v = pool.trailing_zeros() as usize;
        // Either take v (dropping its neighbors) or skip it.
        if self.has_independent_subset(pool & !self.closed_neighbors(v), want - 1) {
            return true;
        }
        self.has_independent_subset(pool & !(1 << v), want)
    }

    /// True iff the graph stays connected after deleting every vertex subset
    /// of size `< k`; brute force over subsets, `k <= 4`.
    pub fn vertex_connectivity_at_least(&self, k: usize) -> Result<bool> {
        if !(1..=4).contains(&k) {
            return Err(Error::TooLarge {
                op: "vertex_connectivity_at_least",
                n: k,
                max: 4,
            });
        }
        if self.n <= k {
            return Err(Error::TooSmall {
                op: "vertex_connectivity_at_least",
                n: self.n,
                min: k + 1,
            });
        }
        if !self.is_connected()? {
            return Ok(false);
        }
        let all = self.vertex_mask();
        let mut deleted: Vec<u64> = vec![0];
        for size in 1..k {
            let mut next = Vec::new();
            for &s in &deleted {
                // Extend each deletion set by one vertex above its current
                // maximum, so every subset appears once.
                let start = if s == 0 {
                    0
                } else {
                    63 - s.leading_zeros() as usize + 1
                };
                for v in start..self.n {
                    next.push(s | (1 << v));
                }
            }
            for &s in &next {
                debug_assert_eq!(s.count_ones() as usize, size);
                if !self.is_connected_within(all & !s) {
                    return Ok(false);
                }
            }
            deleted = next;
        }
        Ok(true)
    }

    /// Rewires, for each `w` in `targets`, the edge `vw` into `uw`.
    ///
    /// Preconditions per the rotation lemma: every target is adjacent to `v`
    /// and outside the closed neighborhood of `u`.
    pub fn rotate_edges(&self, v: usize, targets: &[usize], u: usize) -> Result<Graph> {
        let n = self.n;
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::BadRotation("u and v must differ".into()));
        }
        let mut adj = self.adj.clone();
        for &w in targets {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
            if adj[v] & (1 << w) == 0 {
                return Err(Error::BadRotation(format!(
                    "target {w} not adjacent to {v}"
                )));
            }
            if w == u || adj[u] & (1 << w) != 0 {
                return Err(Error::BadRotation(format!(
                    "target {w} already in the closed neighborhood of {u}"
                )));
            }
            adj[v] &= !(1 << w);
            adj[w] &= !(1 << v);
            adj[u] |= 1 << w;
            adj[w] |= 1 << u;
        }
        Ok(Graph::from_adjacency(adj))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::build_graph(n, &edges).unwrap()
    }

    #[test]
    fn build_triangle() {
        let g = Graph::build_graph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(2, 0));
    }

    #[test]
    fn build_empty_graph() {
        let g = Graph::build_graph(4, &[]).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.n(), 4);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::build_graph(4, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert!(Graph::build_graph(3, &[(0, 3)]).is_err());
        assert!(Graph::build_graph(3, &[(1, 1)]).is_err());
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(k(4).is_connected().unwrap());
        let two_edges = Graph::build_graph(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected().unwrap());
        assert!(Graph::empty(1).unwrap().is_connected().unwrap());
        assert!(Graph::empty(0).unwrap().is_connected().is_err());
    }

    #[test]
    fn k1r_free_star() {
        // K_{1,4}: center 0.
        let star = Graph::build_graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(!star.is_k1r_free(4).unwrap());
        assert!(!star.is_k1r_free(3).unwrap());
        assert!(star.is_k1r_free(5).unwrap());
        assert!(star.is_k1r_free(2).is_err());
        assert!(k(6).is_k1r_free(3).unwrap());
    }

    #[test]
    fn connectivity_at_least() {
        assert!(k(5).vertex_connectivity_at_least(4).unwrap());
        let path = Graph::build_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(path.vertex_connectivity_at_least(1).unwrap());
        assert!(!path.vertex_connectivity_at_least(2).unwrap());
        let c5 = Graph::build_graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(c5.vertex_connectivity_at_least(2).unwrap());
        assert!(!c5.vertex_connectivity_at_least(3).unwrap());
        assert!(k(3).vertex_connectivity_at_least(3).is_err());
    }

    #[test]
    fn rotation_moves_edges() {
        // Path a-b-c-d: rotate v=c, targets={d}, u=a gives {ab, bc, ad}.
        let p4 = Graph::build_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let rotated = p4.rotate_edges(2, &[3], 0).unwrap();
        let mut edges = rotated.edges();
        edges.sort_unstable();
        assert_eq!(edges, vec![(0, 1), (0, 3), (1, 2)]);
        // Empty target set: identical graph.
        assert_eq!(p4.rotate_edges(2, &[], 0).unwrap(), p4);
        // Input graph unchanged.
        assert_eq!(p4.edge_count(), 3);
    }

    #[test]
    fn rotation_preconditions() {
        let p4 = Graph::build_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        // Target not adjacent to v.
        assert!(p4.rotate_edges(2, &[0], 3).is_err());
        // Target adjacent to u already.
        assert!(p4.rotate_edges(2, &[1], 0).is_err());
        // Target equal to u.
        assert!(p4.rotate_edges(2, &[3], 3).is_err());
        assert!(p4.rotate_edges(2, &[], 2).is_err());
    }
}
