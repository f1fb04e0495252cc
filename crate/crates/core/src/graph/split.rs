//! Split-graph recognition and typed witnesses.
//!
//! Recognition uses the degree-sequence characterization: with degrees
//! `d_1 >= ... >= d_n` and `m = max{i : d_i >= i-1}`, the graph is split iff
//! `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`. The returned witness clique is
//! confirmed maximum by exact branch-and-bound.

use super::{bits, Graph};

/// A split partition `(K, I)` in which `K` is a maximum clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitWitness {
    clique: Vec<usize>,
    independent: Vec<usize>,
}

impl SplitWitness {
    /// Clique vertices, ascending.
    pub fn clique(&self) -> &[usize] {
        &self.clique
    }

    /// Independent-set vertices, ascending.
    pub fn independent(&self) -> &[usize] {
        &self.independent
    }

    pub fn clique_mask(&self) -> u64 {
        self.clique.iter().map(|&v| 1u64 << v).sum()
    }

    pub fn independent_mask(&self) -> u64 {
        self.independent.iter().map(|&v| 1u64 << v).sum()
    }
}

/// Degree-sequence split test.
pub(crate) fn is_split(g: &Graph) -> bool {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    deg.sort_unstable_by(|a, b| b.cmp(a));
    let mut m = 0;
    for (i, &d) in deg.iter().enumerate() {
        if d >= i {
            m = i + 1;
        } else {
            break;
        }
    }
    let lhs: usize = deg[..m].iter().sum();
    let rhs = m * m.saturating_sub(1) + deg[m..].iter().sum::<usize>();
    lhs == rhs
}

/// Greedy-coloring upper bound on the clique number of the induced subgraph
/// on `pool`.
fn color_bound(g: &Graph, pool: u64) -> usize {
    let mut colors = 0;
    let mut rem = pool;
    while rem != 0 {
        colors += 1;
        let mut avail = rem;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            rem &= !(1 << v);
            avail &= !(g.neighbors(v) | (1 << v));
        }
    }
    colors
}

/// All maximum cliques, as masks, together with the clique number.
pub(crate) fn maximum_cliques(g: &Graph) -> (usize, Vec<u64>) {
    let mut best = 0usize;
    let mut out: Vec<u64> = vec![0];
    expand(g, 0, 0, g.vertex_mask(), &mut best, &mut out);
    (best, out)
}

fn expand(g: &Graph, r: u64, r_size: usize, p: u64, best: &mut usize, out: &mut Vec<u64>) {
    if p == 0 {
        match r_size.cmp(best) {
            std::cmp::Ordering::Greater => {
                *best = r_size;
                out.clear();
                out.push(r);
            }
            std::cmp::Ordering::Equal => out.push(r),
            std::cmp::Ordering::Less => {}
        }
        return;
    }
    if r_size + color_bound(g, p) < *best {
        return;
    }
    let mut rest = p;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if r_size + 1 + ((rest & g.neighbors(v)).count_ones() as usize) < *best {
            continue;
        }
        expand(
            g,
            r | (1 << v),
            r_size + 1,
            rest & g.neighbors(v),
            best,
            out,
        );
    }
}

fn is_independent(g: &Graph, mask: u64) -> bool {
    bits(mask).all(|v| g.neighbors(v) & mask == 0)
}

/// Returns a typed split witness, or `None` when the graph is not split.
///
/// Among maximum cliques whose complement is independent (at least one
/// exists in every split graph), the lexicographically least under vertex
/// order is chosen, so witnesses are stable across runs.
pub fn split_witness(g: &Graph) -> Option<SplitWitness> {
    if !is_split(g) {
        return None;
    }
    let (omega, cliques) = maximum_cliques(g);
    debug_assert!(omega <= g.n());
    let all = g.vertex_mask();
    let mut best: Option<Vec<usize>> = None;
    for k_mask in cliques {
        if !is_independent(g, all & !k_mask) {
            continue;
        }
        let verts: Vec<usize> = bits(k_mask).collect();
        if best.as_ref().is_none_or(|b| verts < *b) {
            best = Some(verts);
        }
    }
    let clique = best.expect("every split graph admits a typed maximum clique");
    let k_mask: u64 = clique.iter().map(|&v| 1u64 << v).sum();
    let independent: Vec<usize> = bits(all & !k_mask).collect();
    Some(SplitWitness {
        clique,
        independent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::build_graph(n, &edges).unwrap()
    }

    #[test]
    fn c4_is_not_split() {
        let c4 = Graph::build_graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(split_witness(&c4).is_none());
    }

    #[test]
    fn complete_graph_witness() {
        let w = split_witness(&complete(5)).unwrap();
        assert_eq!(w.clique(), &[0, 1, 2, 3, 4]);
        assert!(w.independent().is_empty());
    }

    #[test]
    fn path_witness_is_typed_and_least() {
        // P_4 as 0-1-2-3: maximum cliques {0,1}, {1,2}, {2,3}; only {1,2}
        // leaves an independent complement.
        let p4 = Graph::build_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let w = split_witness(&p4).unwrap();
        assert_eq!(w.clique(), &[1, 2]);
        assert_eq!(w.independent(), &[0, 3]);
    }

    #[test]
    fn full_join_enlarges_clique() {
        // K_3 fully joined to 2 independent vertices: the maximum clique
        // absorbs one independent vertex.
        let mut edges = vec![(0, 1), (0, 2), (1, 2)];
        for u in 3..5 {
            for v in 0..3 {
                edges.push((u, v));
            }
        }
        let g = Graph::build_graph(5, &edges).unwrap();
        let w = split_witness(&g).unwrap();
        assert_eq!(w.clique(), &[0, 1, 2, 3]);
        assert_eq!(w.independent(), &[4]);
    }

    #[test]
    fn degenerate_orders() {
        let w = split_witness(&Graph::empty(0).unwrap()).unwrap();
        assert!(w.clique().is_empty() && w.independent().is_empty());
        let w1 = split_witness(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(w1.clique(), &[0]);
        let w3 = split_witness(&Graph::empty(3).unwrap()).unwrap();
        assert_eq!(w3.clique().len(), 1);
        assert_eq!(w3.independent().len(), 2);
    }

    #[test]
    fn maximum_clique_matches_exhaustive_subsets() {
        let mut state = 0x9e3779b9u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for n in 1..=9usize {
            for _ in 0..30 {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if next() % 100 < 50 {
                            edges.push((u, v));
                        }
                    }
                }
                let g = Graph::build_graph(n, &edges).unwrap();
                let naive = (0u64..1 << n)
                    .filter(|&s| bits(s).all(|v| g.neighbors(v) & s == s & !(1 << v)))
                    .map(|s| s.count_ones() as usize)
                    .max()
                    .unwrap();
                let (omega, cliques) = maximum_cliques(&g);
                assert_eq!(omega, naive, "{g:?}");
                assert!(cliques.iter().all(|&c| c.count_ones() as usize == omega));
            }
        }
    }
}
