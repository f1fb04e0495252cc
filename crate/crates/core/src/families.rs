//! Deterministic constructors for the named split-graph families and their
//! canonical equitable partitions.
//!
//! Every family is a clique `K = {v_1, .., v_k}` plus an independent set
//! `I = {u_1, .., u_t}` with a fixed cross-edge pattern. Vertices are
//! numbered clique first (`v_j` is index `j-1`), then independent set
//! (`u_j` is index `k+j-1`), so constructions, graph6 strings, and test
//! fixtures are bit-stable across runs.

use std::fmt;

use crate::equitable::{coarsest_equitable, Partition};
use crate::graph::Graph;
use crate::{Error, Result};

/// A named family instance.
///
/// `G` and `Gamma` take the order `n` and independent-set size `t`.
/// `GammaPrime` (t in 2..=5) and `GammaDoublePrime` (t in {2, 3, 5}) are
/// the competing constructions the sweep lemmas compare against `Gamma`.
/// `GammaStar`/`GammaStarStar` are the two candidate shapes for
/// independent sets of size at least 6. `S` is `S(1, p, 1, q)`: a complete
/// split graph with clique size `p + 1` and `q` fully joined independent
/// vertices, plus one pendant vertex. `CompleteSplit` is the full join of
/// a clique with isolated vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    G { n: usize, t: usize },
    Gamma { n: usize, t: usize },
    GammaPrime { n: usize, t: usize },
    GammaDoublePrime { n: usize, t: usize },
    GammaStar { n: usize, i_size: usize },
    GammaStarStar { n: usize, i_size: usize },
    S { p: usize, q: usize },
    CompleteSplit { k: usize, i_size: usize },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::G { n, t } => write!(f, "G({n},{t})"),
            FamilySpec::Gamma { n, t } => write!(f, "Gamma({n},{t})"),
            FamilySpec::GammaPrime { n, t } => write!(f, "GammaP({n},{t})"),
            FamilySpec::GammaDoublePrime { n, t } => write!(f, "GammaPP({n},{t})"),
            FamilySpec::GammaStar { n, i_size } => write!(f, "GammaStar({n},{i_size})"),
            FamilySpec::GammaStarStar { n, i_size } => write!(f, "GammaStarStar({n},{i_size})"),
            FamilySpec::S { p, q } => write!(f, "S(1,{p},1,{q})"),
            FamilySpec::CompleteSplit { k, i_size } => write!(f, "CompleteSplit({k},{i_size})"),
        }
    }
}

fn param_err(family: &'static str, msg: String) -> Error {
    Error::FamilyParameter { family, msg }
}

impl FamilySpec {
    /// Parses a CLI-facing family name plus its two numeric parameters.
    pub fn from_name(name: &str, params: &[usize]) -> Result<FamilySpec> {
        let pair = |family: &'static str| -> Result<(usize, usize)> {
            match params {
                [a, b] => Ok((*a, *b)),
                _ => Err(param_err(
                    family,
                    format!("expected 2 parameters, got {}", params.len()),
                )),
            }
        };
        let spec = match name {
            "G" => {
                let (n, t) = pair("G")?;
                FamilySpec::G { n, t }
            }
            "Gamma" => {
                let (n, t) = pair("Gamma")?;
                FamilySpec::Gamma { n, t }
            }
            "GammaP" => {
                let (n, t) = pair("GammaP")?;
                FamilySpec::GammaPrime { n, t }
            }
            "GammaPP" => {
                let (n, t) = pair("GammaPP")?;
                FamilySpec::GammaDoublePrime { n, t }
            }
            "GammaStar" => {
                let (n, i_size) = pair("GammaStar")?;
                FamilySpec::GammaStar { n, i_size }
            }
            "GammaStarStar" => {
                let (n, i_size) = pair("GammaStarStar")?;
                FamilySpec::GammaStarStar { n, i_size }
            }
            "S" => {
                // Accept both the short form `p q` and the full
                // four-number form `1 p 1 q`.
                let (p, q) = match params {
                    [p, q] => (*p, *q),
                    [1, p, 1, q] => (*p, *q),
                    _ => {
                        return Err(param_err(
                            "S",
                            format!("expected `p q` or `1 p 1 q`, got {params:?}"),
                        ))
                    }
                };
                FamilySpec::S { p, q }
            }
            "CompleteSplit" => {
                let (k, i_size) = pair("CompleteSplit")?;
                FamilySpec::CompleteSplit { k, i_size }
            }
            other => return Err(Error::UnknownId(other.into())),
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Number of vertices of the constructed graph.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::G { n, .. }
            | FamilySpec::Gamma { n, .. }
            | FamilySpec::GammaPrime { n, .. }
            | FamilySpec::GammaDoublePrime { n, .. }
            | FamilySpec::GammaStar { n, .. }
            | FamilySpec::GammaStarStar { n, .. } => n,
            FamilySpec::S { p, q } => p + q + 2,
            FamilySpec::CompleteSplit { k, i_size } => k + i_size,
        }
    }

    /// Size of the independent side as labeled by the construction.
    pub fn i_size(&self) -> usize {
        match *self {
            FamilySpec::G { t, .. }
            | FamilySpec::Gamma { t, .. }
            | FamilySpec::GammaPrime { t, .. }
            | FamilySpec::GammaDoublePrime { t, .. } => t,
            FamilySpec::GammaStar { i_size, .. } | FamilySpec::GammaStarStar { i_size, .. } => {
                i_size
            }
            FamilySpec::S { q, .. } => q + 1,
            FamilySpec::CompleteSplit { i_size, .. } => i_size,
        }
    }

    /// Size of the clique side as labeled by the construction.
    pub fn k_size(&self) -> usize {
        self.order() - self.i_size()
    }

    /// Checks the parameter hypotheses of the construction.
    pub fn validate(&self) -> Result<()> {
        let fail = |family: &'static str, msg: String| Err(param_err(family, msg));
        match *self {
            FamilySpec::G { n, t } => {
                if n < 4 || t < 1 || 2 * t > n {
                    return fail(
                        "G",
                        format!("need n >= 4 and 1 <= t <= n/2, got n={n}, t={t}"),
                    );
                }
            }
            FamilySpec::Gamma { n, t } => {
                if n < 5 || t < 1 || 2 * t > n {
                    return fail(
                        "Gamma",
                        format!("need n >= 5 and 1 <= t <= n/2, got n={n}, t={t}"),
                    );
                }
            }
            FamilySpec::GammaPrime { n, t } => {
                let min_n = match t {
                    2 => 5,
                    3 => 6,
                    4 => 8,
                    5 => 10,
                    _ => {
                        return fail("GammaP", format!("t must be in 2..=5, got {t}"));
                    }
                };
                if n < min_n {
                    return fail("GammaP", format!("need n >= {min_n} for t={t}, got n={n}"));
                }
            }
            FamilySpec::GammaDoublePrime { n, t } => {
                let min_n = match t {
                    2 => 5,
                    3 => 6,
                    5 => 10,
                    _ => {
                        return fail("GammaPP", format!("t must be 2, 3, or 5, got {t}"));
                    }
                };
                if n < min_n {
                    return fail("GammaPP", format!("need n >= {min_n} for t={t}, got n={n}"));
                }
            }
            FamilySpec::GammaStar { n, i_size } => {
                if i_size < 6 || n < 2 * i_size {
                    return fail(
                        "GammaStar",
                        format!("need |I| >= 6 and n >= 2|I|, got n={n}, |I|={i_size}"),
                    );
                }
            }
            FamilySpec::GammaStarStar { n, i_size } => {
                if i_size < 6 || n < 2 * i_size {
                    return fail(
                        "GammaStarStar",
                        format!("need |I| >= 6 and n >= 2|I|, got n={n}, |I|={i_size}"),
                    );
                }
            }
            FamilySpec::S { p, q } => {
                if p < 1 || q < 1 {
                    return fail("S", format!("need p >= 1 and q >= 1, got p={p}, q={q}"));
                }
            }
            FamilySpec::CompleteSplit { k, .. } => {
                if k < 1 {
                    return fail("CompleteSplit", "need k >= 1".into());
                }
            }
        }
        Ok(())
    }
}

fn clique_edges(k: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(k * (k.saturating_sub(1)) / 2);
    for u in 0..k {
        for v in u + 1..k {
            edges.push((u, v));
        }
    }
    edges
}

fn attach(edges: &mut Vec<(usize, usize)>, u: usize, targets: impl IntoIterator<Item = usize>) {
    for v in targets {
        edges.push((u, v));
    }
}

/// Clique-side vertex classes of the `GammaStar` construction.
///
/// The clique splits into `v1` (carries a pendant matching from `v4`),
/// `v2`, and the single vertex `z`; the independent side is the matching
/// `v4` plus five special vertices `v5..v9`. Every clique vertex has
/// exactly three independent neighbors.
#[derive(Clone, Debug)]
pub struct StarLayout {
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
    pub z: usize,
    pub v4: Vec<usize>,
    pub v5: usize,
    pub v6: usize,
    pub v7: usize,
    pub v8: usize,
    pub v9: usize,
}

/// Returns the vertex classes of `GammaStar(n, i_size)`.
pub fn star_layout(n: usize, i_size: usize) -> Result<StarLayout> {
    FamilySpec::GammaStar { n, i_size }.validate()?;
    let a = i_size - 5;
    let k = n - i_size;
    Ok(StarLayout {
        v1: (0..a).collect(),
        v2: (a..k - 1).collect(),
        z: k - 1,
        v4: (k..k + a).collect(),
        v5: k + a,
        v6: k + a + 1,
        v7: k + a + 2,
        v8: k + a + 3,
        v9: k + a + 4,
    })
}

/// Clique-side vertex classes of the `GammaStarStar` construction.
///
/// Like [`StarLayout`] but with two special clique vertices `t[0]`,
/// `t[1]` instead of one, and six special independent vertices: the pair
/// `s`, the vertices `v6` and `v7`, and the pendant pair `w`.
#[derive(Clone, Debug)]
pub struct StarStarLayout {
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
    pub t: [usize; 2],
    pub v4: Vec<usize>,
    pub s: [usize; 2],
    pub v6: usize,
    pub v7: usize,
    pub w: [usize; 2],
}

/// Returns the vertex classes of `GammaStarStar(n, i_size)`.
pub fn star_star_layout(n: usize, i_size: usize) -> Result<StarStarLayout> {
    FamilySpec::GammaStarStar { n, i_size }.validate()?;
    let a = i_size - 5;
    let k = n - i_size;
    Ok(StarStarLayout {
        v1: (0..a - 1).collect(),
        v2: (a - 1..k - 2).collect(),
        t: [k - 2, k - 1],
        v4: (k..k + a - 1).collect(),
        s: [k + a - 1, k + a],
        v6: k + a + 1,
        v7: k + a + 2,
        w: [k + a + 3, k + a + 4],
    })
}

/// Builds the graph of a family instance.
pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.order();
    let k = spec.k_size();
    let mut edges = clique_edges(k);
    match *spec {
        FamilySpec::G { n, t } => {
            if t == 1 {
                attach(&mut edges, k, [0]);
            } else {
                // Pendant matching u_i v_i, then u_t joined to v_t..v_{n-t}.
                for i in 1..t {
                    attach(&mut edges, k + i - 1, [i - 1]);
                }
                attach(&mut edges, k + t - 1, (t - 1)..(n - t));
            }
        }
        FamilySpec::Gamma { n, t } => match t {
            1 => attach(&mut edges, k, [0]),
            2 => {
                attach(&mut edges, k, 0..n - 3);
                attach(&mut edges, k + 1, [n - 4]);
            }
            3 => {
                attach(&mut edges, k, 0..n - 4);
                attach(&mut edges, k + 1, 0..n - 4);
                attach(&mut edges, k + 2, [n - 4]);
            }
            4 => {
                attach(&mut edges, k, 0..n - 5);
                attach(&mut edges, k + 1, 0..n - 5);
                attach(&mut edges, k + 2, 1..n - 4);
                attach(&mut edges, k + 3, [n - 5]);
            }
            5 => {
                attach(&mut edges, k, [0, n - 6]);
                attach(&mut edges, k + 1, 0..n - 6);
                attach(&mut edges, k + 2, 0..n - 6);
                attach(&mut edges, k + 3, 1..n - 5);
                attach(&mut edges, k + 4, [n - 6]);
            }
            _ => {
                // General rule for t >= 6: a pendant matching on the first
                // t-5 clique vertices, three wide vertices, two pendants.
                for i in 1..=t - 5 {
                    attach(&mut edges, k + i - 1, [i - 1]);
                }
                attach(&mut edges, k + t - 5, 0..n - t - 1);
                attach(&mut edges, k + t - 4, 0..n - t - 2);
                attach(&mut edges, k + t - 4, [n - t - 1]);
                attach(&mut edges, k + t - 3, t - 5..n - t);
                attach(&mut edges, k + t - 2, [n - t - 2]);
                attach(&mut edges, k + t - 1, [n - t - 1]);
            }
        },
        FamilySpec::GammaPrime { n, t } => match t {
            2 => {
                attach(&mut edges, k, [0, 1]);
                attach(&mut edges, k + 1, [0, 1]);
            }
            3 => {
                attach(&mut edges, k, [0, 1]);
                attach(&mut edges, k + 1, [0, 1]);
                attach(&mut edges, k + 2, 1..n - 3);
            }
            4 => {
                // Clique classes: a = v_1, middle run, b = v_{n-6}, c = v_{n-5}.
                let (a, b, c) = (0, n - 6, n - 5);
                attach(&mut edges, k, [a, b]);
                attach(&mut edges, k, 1..n - 6);
                attach(&mut edges, k + 1, [a, c]);
                attach(&mut edges, k + 1, 1..n - 6);
                attach(&mut edges, k + 2, [b, c]);
                attach(&mut edges, k + 2, 1..n - 6);
                attach(&mut edges, k + 3, [a]);
            }
            _ => {
                // t = 5. Clique classes: a = v_1, middle run, d, e; the
                // last independent vertex is pendant at d, and e has no
                // pendant.
                let (a, d, e) = (0, n - 7, n - 6);
                attach(&mut edges, k, [a]);
                attach(&mut edges, k + 1, [a, d]);
                attach(&mut edges, k + 1, 1..n - 7);
                attach(&mut edges, k + 2, [a, e]);
                attach(&mut edges, k + 2, 1..n - 7);
                attach(&mut edges, k + 3, [d, e]);
                attach(&mut edges, k + 3, 1..n - 7);
                attach(&mut edges, k + 4, [d]);
            }
        },
        FamilySpec::GammaDoublePrime { n, t } => match t {
            2 => {
                attach(&mut edges, k, 0..n - 3);
                attach(&mut edges, k + 1, [n - 3]);
            }
            3 => {
                // Clique classes: v_1 = 0, v_2 = 1, v_3 = 2, middle run.
                attach(&mut edges, k, [0, 1]);
                attach(&mut edges, k, 3..n - 3);
                attach(&mut edges, k + 1, [2, 1]);
                attach(&mut edges, k + 1, 3..n - 3);
                attach(&mut edges, k + 2, [1]);
            }
            _ => {
                // t = 5. Same clique classes as GammaPrime t=5, but the
                // outer pendants sit at both ends: first independent
                // vertex spans {a, d}, last is pendant at e.
                let (a, d, e) = (0, n - 7, n - 6);
                attach(&mut edges, k, [a, d]);
                attach(&mut edges, k + 1, [a, d]);
                attach(&mut edges, k + 1, 1..n - 7);
                attach(&mut edges, k + 2, [a, e]);
                attach(&mut edges, k + 2, 1..n - 7);
                attach(&mut edges, k + 3, [d, e]);
                attach(&mut edges, k + 3, 1..n - 7);
                attach(&mut edges, k + 4, [e]);
            }
        },
        FamilySpec::GammaStar { n, i_size } => {
            let lay = star_layout(n, i_size)?;
            for (j, &u) in lay.v4.iter().enumerate() {
                attach(&mut edges, u, [lay.v1[j]]);
            }
            attach(&mut edges, lay.v5, lay.v1.iter().copied());
            attach(&mut edges, lay.v5, [lay.z]);
            attach(&mut edges, lay.v6, lay.v1.iter().copied());
            attach(&mut edges, lay.v6, lay.v2.iter().copied());
            attach(&mut edges, lay.v7, lay.v2.iter().copied());
            attach(&mut edges, lay.v7, [lay.z]);
            attach(&mut edges, lay.v8, lay.v2.iter().copied());
            attach(&mut edges, lay.v9, [lay.z]);
        }
        FamilySpec::GammaStarStar { n, i_size } => {
            let lay = star_star_layout(n, i_size)?;
            for (j, &u) in lay.v4.iter().enumerate() {
                attach(&mut edges, u, [lay.v1[j]]);
            }
            for (idx, &s) in lay.s.iter().enumerate() {
                attach(&mut edges, s, lay.v1.iter().copied());
                attach(&mut edges, s, lay.v2.iter().copied());
                attach(&mut edges, s, [lay.t[idx]]);
            }
            attach(&mut edges, lay.v6, lay.v2.iter().copied());
            attach(&mut edges, lay.v7, lay.t);
            attach(&mut edges, lay.w[0], [lay.t[0]]);
            attach(&mut edges, lay.w[1], [lay.t[1]]);
        }
        FamilySpec::S { q, .. } => {
            attach(&mut edges, k, [0]);
            for j in 1..=q {
                attach(&mut edges, k + j, 0..k);
            }
        }
        FamilySpec::CompleteSplit { k, i_size } => {
            for j in 0..i_size {
                attach(&mut edges, k + j, 0..k);
            }
        }
    }
    Graph::build_graph(n, &edges)
}

fn cell(range: std::ops::RangeInclusive<usize>) -> Vec<usize> {
    range.collect()
}

/// Canonical equitable partition of a family instance.
///
/// For the six families whose quotient matrices have closed-form
/// characteristic polynomials, the hand-fixed cell order reproduces those
/// matrices row for row. Every other family falls back to the coarsest
/// equitable refinement of the degree partition.
pub fn family_partition(spec: &FamilySpec) -> Result<Partition> {
    spec.validate()?;
    let n = spec.order();
    let cells = match *spec {
        FamilySpec::Gamma { n, t: 3 } => vec![
            cell(0..=n - 5),
            vec![n - 4],
            vec![n - 3, n - 2],
            vec![n - 1],
        ],
        FamilySpec::GammaPrime { n, t: 3 } => vec![
            cell(2..=n - 4),
            vec![1],
            vec![0],
            vec![n - 3, n - 2],
            vec![n - 1],
        ],
        FamilySpec::Gamma { n, t: 4 } => vec![
            vec![0],
            cell(1..=n - 6),
            vec![n - 5],
            vec![n - 4, n - 3],
            vec![n - 2],
            vec![n - 1],
        ],
        FamilySpec::GammaPrime { n, t: 4 } => vec![
            vec![0],
            cell(1..=n - 7),
            vec![n - 6, n - 5],
            vec![n - 1],
            vec![n - 4, n - 3],
            vec![n - 2],
        ],
        FamilySpec::Gamma { n, t: 5 } => vec![
            vec![0],
            cell(1..=n - 7),
            vec![n - 6],
            vec![n - 5],
            vec![n - 4, n - 3],
            vec![n - 2],
            vec![n - 1],
        ],
        FamilySpec::GammaDoublePrime { n, t: 5 } => vec![
            vec![0, n - 7],
            cell(1..=n - 8),
            vec![n - 6],
            vec![n - 5],
            vec![n - 4],
            vec![n - 3, n - 2],
            vec![n - 1],
        ],
        _ => {
            let g = build_family(spec)?;
            return coarsest_equitable(&g, &Partition::degrees(&g));
        }
    };
    Partition::new(n, cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equitable::{is_equitable, quotient};
    use crate::graph::split_witness;

    fn build(name: &str, a: usize, b: usize) -> Graph {
        build_family(&FamilySpec::from_name(name, &[a, b]).unwrap()).unwrap()
    }

    #[test]
    fn g_family_fixtures() {
        let g = build("G", 8, 3);
        assert_eq!(g.edge_count(), 15);
        let g = build("G", 4, 1);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.degree(3), 1);
    }

    #[test]
    fn gamma_matches_g_at_t_one() {
        for n in 5..=12 {
            assert_eq!(build("Gamma", n, 1), build("G", n, 1));
        }
    }

    #[test]
    fn gamma_7_3_fixture() {
        let g = build("Gamma", 7, 3);
        assert_eq!(g.edge_count(), 13);
        let w = split_witness(&g).unwrap();
        assert_eq!(w.clique(), &[0, 1, 2, 3]);
        assert_eq!(w.independent(), &[4, 5, 6]);
    }

    #[test]
    fn prime_families_small_fixtures() {
        // Triangle clique, both independent vertices joined to {v_1, v_2}.
        let g = build("GammaP", 5, 2);
        assert_eq!(g.edge_count(), 7);
        assert_eq!(g.degree(3), 2);
        assert_eq!(g.degree(4), 2);
        // One wide vertex, one pendant at the last clique vertex.
        let g = build("GammaPP", 5, 2);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.degree(3), 2);
        assert_eq!(g.degree(4), 1);
    }

    #[test]
    fn s_family_contains_induced_star() {
        let g = build("S", 4, 2);
        assert_eq!(g.n(), 8);
        // Pendant plus two fully joined independent vertices at v_1.
        assert!(!g.is_k1r_free(3).unwrap());
        assert!(g.is_k1r_free(4).unwrap());
        let w = split_witness(&g).unwrap();
        assert_eq!(w.clique(), &[0, 1, 2, 3, 4, 6]);
        assert_eq!(w.independent(), &[5, 7]);
    }

    #[test]
    fn families_are_typed_split_graphs() {
        let specs = [
            FamilySpec::G { n: 9, t: 3 },
            FamilySpec::Gamma { n: 9, t: 4 },
            FamilySpec::Gamma { n: 12, t: 6 },
            FamilySpec::GammaPrime { n: 10, t: 5 },
            FamilySpec::GammaDoublePrime { n: 9, t: 3 },
            FamilySpec::GammaStar { n: 12, i_size: 6 },
            FamilySpec::GammaStarStar { n: 14, i_size: 7 },
        ];
        for spec in specs {
            let g = build_family(&spec).unwrap();
            assert!(g.is_connected().unwrap(), "{spec}");
            let w = split_witness(&g).unwrap_or_else(|| panic!("{spec} not split"));
            assert_eq!(w.clique().len(), spec.k_size(), "{spec}");
            assert_eq!(w.independent().len(), spec.i_size(), "{spec}");
        }
    }

    #[test]
    fn star_families_have_three_independent_neighbors_per_clique_vertex() {
        for (n, i) in [(12, 6), (14, 6), (14, 7), (16, 8)] {
            for spec in [
                FamilySpec::GammaStar { n, i_size: i },
                FamilySpec::GammaStarStar { n, i_size: i },
            ] {
                let g = build_family(&spec).unwrap();
                let k = spec.k_size();
                for v in 0..k {
                    let into_i = (g.neighbors(v) >> k).count_ones();
                    assert_eq!(into_i, 3, "{spec} vertex {v}");
                }
            }
        }
    }

    #[test]
    fn family_partitions_are_equitable() {
        let specs = [
            FamilySpec::Gamma { n: 9, t: 3 },
            FamilySpec::GammaPrime { n: 9, t: 3 },
            FamilySpec::Gamma { n: 10, t: 4 },
            FamilySpec::GammaPrime { n: 10, t: 4 },
            FamilySpec::Gamma { n: 11, t: 5 },
            FamilySpec::GammaDoublePrime { n: 11, t: 5 },
            FamilySpec::G { n: 10, t: 3 },
            FamilySpec::Gamma { n: 13, t: 6 },
            FamilySpec::GammaDoublePrime { n: 8, t: 3 },
            FamilySpec::GammaStar { n: 13, i_size: 6 },
            FamilySpec::GammaStarStar { n: 13, i_size: 6 },
            FamilySpec::S { p: 4, q: 2 },
            FamilySpec::CompleteSplit { k: 5, i_size: 3 },
        ];
        for spec in specs {
            let g = build_family(&spec).unwrap();
            let p = family_partition(&spec).unwrap();
            assert!(is_equitable(&g, &p).unwrap(), "{spec}");
            assert!(p.len() <= 12, "{spec}: {} cells", p.len());
        }
    }

    #[test]
    fn prime_3_quotient_rows() {
        let spec = FamilySpec::GammaPrime { n: 8, t: 3 };
        let q = quotient(
            &build_family(&spec).unwrap(),
            &family_partition(&spec).unwrap(),
        )
        .unwrap();
        assert_eq!(
            q.rows(),
            &[
                vec![2, 1, 1, 0, 1],
                vec![3, 0, 1, 2, 1],
                vec![3, 1, 0, 2, 0],
                vec![0, 1, 1, 0, 0],
                vec![3, 1, 0, 0, 0]
            ]
        );
    }

    #[test]
    fn complete_split_partition_is_small() {
        let one = family_partition(&FamilySpec::CompleteSplit { k: 6, i_size: 0 }).unwrap();
        assert_eq!(one.len(), 1);
        // Full join with one extra vertex is again a complete graph.
        let also_one = family_partition(&FamilySpec::CompleteSplit { k: 5, i_size: 1 }).unwrap();
        assert_eq!(also_one.len(), 1);
        let two = family_partition(&FamilySpec::CompleteSplit { k: 5, i_size: 2 }).unwrap();
        assert_eq!(two.len(), 2);
    }

    #[test]
    fn parameter_validation() {
        assert!(FamilySpec::G { n: 7, t: 4 }.validate().is_err());
        assert!(FamilySpec::G { n: 3, t: 1 }.validate().is_err());
        assert!(FamilySpec::Gamma { n: 4, t: 1 }.validate().is_err());
        assert!(FamilySpec::GammaPrime { n: 7, t: 4 }.validate().is_err());
        assert!(FamilySpec::GammaPrime { n: 10, t: 6 }.validate().is_err());
        assert!(FamilySpec::GammaDoublePrime { n: 10, t: 4 }
            .validate()
            .is_err());
        assert!(FamilySpec::GammaStar { n: 11, i_size: 6 }
            .validate()
            .is_err());
        assert!(FamilySpec::GammaStar { n: 12, i_size: 5 }
            .validate()
            .is_err());
        assert!(FamilySpec::S { p: 0, q: 1 }.validate().is_err());
        assert!(FamilySpec::CompleteSplit { k: 0, i_size: 2 }
            .validate()
            .is_err());
    }

    #[test]
    fn name_parsing() {
        assert_eq!(
            FamilySpec::from_name("Gamma", &[8, 4]).unwrap(),
            FamilySpec::Gamma { n: 8, t: 4 }
        );
        assert_eq!(
            FamilySpec::from_name("S", &[4, 2]).unwrap(),
            FamilySpec::S { p: 4, q: 2 }
        );
        assert_eq!(
            FamilySpec::from_name("S", &[1, 4, 1, 2]).unwrap(),
            FamilySpec::S { p: 4, q: 2 }
        );
        assert!(FamilySpec::from_name("S", &[2, 4, 1, 2]).is_err());
        assert!(matches!(
            FamilySpec::from_name("Delta", &[8, 4]),
            Err(Error::UnknownId(_))
        ));
        assert!(FamilySpec::from_name("G", &[8]).is_err());
        assert!(FamilySpec::from_name("Gamma", &[4, 2]).is_err());
    }

    #[test]
    fn display_formats() {
        assert_eq!(FamilySpec::Gamma { n: 8, t: 4 }.to_string(), "Gamma(8,4)");
        assert_eq!(FamilySpec::S { p: 4, q: 2 }.to_string(), "S(1,4,1,2)");
    }
}
