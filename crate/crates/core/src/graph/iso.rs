//! Graph isomorphism by color refinement plus individualization
//! backtracking to a canonical labeling.

use super::{bits, Graph};
use crate::{Error, Result};

/// Order bound for canonical forms.
pub const MAX_ISO: usize = 16;

/// Iteratively splits color classes by the multiset of neighbor colors until
/// stable; the final coloring is relabeling-invariant.
fn refine(g: &Graph, colors: &mut [u32]) {
    let n = g.n();
    let mut count = {
        let mut cs = colors.to_vec();
        cs.sort_unstable();
        cs.dedup();
        cs.len()
    };
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = bits(g.neighbors(v)).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        for (v, sig) in sigs.iter().enumerate() {
            colors[v] = sorted.binary_search(sig).unwrap() as u32;
        }
        if sorted.len() == count {
            return;
        }
        count = sorted.len();
    }
}

/// Color classes in color order, vertices ascending inside each.
fn cells_of(colors: &[u32]) -> Vec<Vec<usize>> {
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = (0..colors.len()).collect();
    order.sort_by_key(|&v| (colors[v], v));
    for v in order {
        match cells.last_mut() {
            Some(cell) if colors[cell[0]] == colors[v] => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    cells
}

/// True when all cell members are interchangeable by transpositions: the
/// cell induces a complete or empty subgraph and every member has the same
/// neighbors outside the cell. Branching on one member then suffices.
fn interchangeable(g: &Graph, cell: &[usize]) -> bool {
    let cmask: u64 = cell.iter().map(|&v| 1u64 << v).sum();
    let inside = g.neighbors(cell[0]) & cmask;
    let complete = inside == cmask & !(1 << cell[0]);
    let empty = inside == 0;
    if !complete && !empty {
        return false;
    }
    let outside = g.neighbors(cell[0]) & !cmask;
    cell.iter().all(|&v| {
        let nb = g.neighbors(v);
        nb & !cmask == outside
            && if complete {
                nb & cmask == cmask & !(1 << v)
            } else {
                nb & cmask == 0
            }
    })
}

fn encode(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut enc = vec![0u64; n];
    for (i, &v) in order.iter().enumerate() {
        for w in bits(g.neighbors(v)) {
            enc[i] |= 1 << pos[w];
        }
    }
    enc
}

fn search(g: &Graph, mut colors: Vec<u32>, best: &mut Option<Vec<u64>>) {
    refine(g, &mut colors);
    let cells = cells_of(&colors);
    match cells.iter().find(|c| c.len() > 1) {
        None => {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let enc = encode(g, &order);
            if best.as_ref().is_none_or(|b| enc < *b) {
                *best = Some(enc);
            }
        }
        Some(cell) => {
            let candidates: &[usize] = if interchangeable(g, cell) {
                &cell[..1]
            } else {
                cell
            };
            for &v in candidates {
                // Split v off its class while keeping relative color order.
                let mut next: Vec<u32> = colors.iter().map(|&c| 2 * c + 1).collect();
                next[v] = 2 * colors[v];
                search(g, next, best);
            }
        }
    }
}

/// Canonical adjacency bitsets: equal for two graphs iff they are
/// isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Vec<u64>> {
    if g.n() > MAX_ISO {
        return Err(Error::TooLarge {
            op: "canonical_form",
            n: g.n(),
            max: MAX_ISO,
        });
    }
    let mut best = None;
    search(g, vec![0; g.n()], &mut best);
    Ok(best.unwrap_or_default())
}

/// True iff a vertex bijection preserving adjacency exists.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        // Still enforce the size bound for predictable errors.
        if g.n().max(h.n()) > MAX_ISO {
            return Err(Error::TooLarge {
                op: "are_isomorphic",
                n: g.n().max(h.n()),
                max: MAX_ISO,
            });
        }
        return Ok(false);
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let edges: Vec<(usize, usize)> =
            g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::build_graph(g.n(), &edges).unwrap()
    }

    /// Brute-force isomorphism over all vertex bijections.
    fn naive_isomorphic(g: &Graph, h: &Graph) -> bool {
        if g.n() != h.n() {
            return false;
        }
        let mut perm: Vec<usize> = (0..g.n()).collect();
        loop {
            if g.edges().iter().all(|&(u, v)| h.has_edge(perm[u], perm[v]))
                && g.edge_count() == h.edge_count()
            {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        let n = p.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    #[test]
    fn relabeling_is_isomorphic() {
        let g = Graph::build_graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
            .unwrap();
        let h = relabel(&g, &[3, 5, 0, 4, 1, 2]);
        assert!(are_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn regular_non_isomorphic_pair() {
        // C_6 versus two triangles: same order, size, and degree sequence.
        let c6 = Graph::build_graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let tri2 =
            Graph::build_graph(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!are_isomorphic(&c6, &tri2).unwrap());
    }

    #[test]
    fn matches_brute_force_on_pseudorandom_pairs() {
        let mut state = 0xdeadbeefu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for n in 2..=6usize {
            for _ in 0..25 {
                let mut build = |density: u64| {
                    let mut edges = Vec::new();
                    for u in 0..n {
                        for v in u + 1..n {
                            if next() % 100 < density {
                                edges.push((u, v));
                            }
                        }
                    }
                    Graph::build_graph(n, &edges).unwrap()
                };
                let g = build(50);
                let h = build(50);
                assert_eq!(
                    are_isomorphic(&g, &h).unwrap(),
                    naive_isomorphic(&g, &h),
                    "{g:?} vs {h:?}"
                );
            }
        }
    }

    #[test]
    fn size_bound() {
        let g = Graph::empty(17).unwrap();
        assert!(canonical_form(&g).is_err());
        assert!(are_isomorphic(&g, &g).is_err());
    }

    #[test]
    fn empty_and_tiny() {
        let e0 = Graph::empty(0).unwrap();
        assert!(are_isomorphic(&e0, &e0).unwrap());
        let k1 = Graph::empty(1).unwrap();
        assert!(are_isomorphic(&k1, &k1).unwrap());
    }
}
