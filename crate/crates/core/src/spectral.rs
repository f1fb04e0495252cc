//! Adjacency spectral radius via power iteration with Rayleigh quotients.
//!
//! Iteration runs on `A + I` so that the dominant eigenvalue is strictly
//! separated in absolute value even for bipartite graphs, whose adjacency
//! spectrum is symmetric. The reported radius and residual always refer to
//! `A` itself. For a connected graph Perron-Frobenius guarantees a simple
//! dominant eigenvalue of `A + I` with positive eigenvector, and the
//! all-ones start has positive overlap with it, so convergence is assured.

use crate::graph::{bits, Graph};
use crate::scalar::Real;
use crate::{Error, Result, Tolerance};

/// Converged output of [`spectral_radius`].
#[derive(Clone, Debug)]
pub struct SpectralResult<F = crate::Real> {
    /// Rayleigh estimate of the spectral radius.
    pub rho: F,
    /// Unit-norm Perron vector estimate, indexed by vertex.
    pub vector: Vec<F>,
    /// Final max-norm residual of `A x - rho x`.
    pub residual: F,
    /// Number of multiply-normalize sweeps performed.
    pub iterations: u64,
}

fn multiply<F: Real>(g: &Graph, x: &[F], out: &mut [F]) {
    for (u, slot) in out.iter_mut().enumerate() {
        let mut acc = F::zero();
        for w in bits(g.neighbors(u)) {
            acc += x[w];
        }
        *slot = acc;
    }
}

/// Spectral radius and Perron vector of a connected graph's adjacency
/// matrix, iterated until the max-norm residual of `A x - rho x` drops to
/// `tol` or `max_iter` sweeps elapse.
pub fn spectral_radius<F: Real>(g: &Graph, tol: F, max_iter: u64) -> Result<SpectralResult<F>> {
    if g.n() == 0 {
        return Err(Error::TooSmall {
            op: "spectral_radius",
            n: 0,
            min: 1,
        });
    }
    if !g.is_connected()? {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n == 1 {
        return Ok(SpectralResult {
            rho: F::zero(),
            vector: vec![F::one(); 1],
            residual: F::zero(),
            iterations: 0,
        });
    }
    let inv_sqrt_n = F::one() / F::from_usize(n).unwrap().sqrt();
    let mut x = vec![inv_sqrt_n; n];
    let mut y = vec![F::zero(); n];
    for it in 1..=max_iter {
        multiply(g, &x, &mut y);
        // x is unit, so the Rayleigh quotient is a plain dot product.
        let rho: F = x.iter().zip(&y).map(|(&a, &b)| a * b).sum();
        let residual = x
            .iter()
            .zip(&y)
            .map(|(&a, &b)| (b - rho * a).abs())
            .fold(F::zero(), F::max);
        if residual <= tol {
            return Ok(SpectralResult {
                rho,
                vector: x,
                residual,
                iterations: it,
            });
        }
        // Shifted step: z = (A + I) x keeps bipartite spectra one-signed.
        for (z, &old) in y.iter_mut().zip(&x) {
            *z += old;
        }
        let norm = y.iter().map(|&v| v * v).sum::<F>().sqrt();
        for (dst, &src) in x.iter_mut().zip(&*y) {
            *dst = src / norm;
        }
    }
    Err(Error::NoConvergence(max_iter))
}

/// Outcome of a margin-certified radius comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RhoOrdering {
    /// `rho(g) > rho(h)` by more than the margin.
    Greater,
    /// `rho(g) < rho(h)` by more than the margin.
    Less,
    /// The difference is within the margin; no conclusion is claimed.
    Indistinguishable,
}

/// Comparison certificate carrying both converged solver outputs.
#[derive(Clone, Debug)]
pub struct RhoComparison<F = crate::Real> {
    pub ordering: RhoOrdering,
    pub left: SpectralResult<F>,
    pub right: SpectralResult<F>,
    /// Margin the ordering was certified against.
    pub margin: F,
}

/// Compares spectral radii of two connected graphs, reporting an ordering
/// only when the difference clears `cfg.margin`; anything closer is
/// [`RhoOrdering::Indistinguishable`].
pub fn compare_rho<F: Real>(g: &Graph, h: &Graph, cfg: &Tolerance) -> Result<RhoComparison<F>> {
    cfg.validate()?;
    let tol = F::from_f64(cfg.tol).unwrap();
    let margin = F::from_f64(cfg.margin).unwrap();
    let left = spectral_radius(g, tol, cfg.max_iter)?;
    let right = spectral_radius(h, tol, cfg.max_iter)?;
    let ordering = if left.rho > right.rho + margin {
        RhoOrdering::Greater
    } else if right.rho > left.rho + margin {
        RhoOrdering::Less
    } else {
        RhoOrdering::Indistinguishable
    };
    Ok(RhoComparison {
        ordering,
        left,
        right,
        margin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn run(g: &Graph) -> SpectralResult {
        spectral_radius(g, 1e-12, 1_000_000).unwrap()
    }

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
    fn complete_graph_radius() {
        let r = run(&complete(6));
        assert!((r.rho - 5.0).abs() < 1e-10);
        assert!(r.residual <= 1e-12);
        // Perron vector of K_n is uniform.
        let expect = (1.0f64 / 6.0).sqrt();
        for &v in &r.vector {
            assert!((v - expect).abs() < 1e-8);
        }
    }

    #[test]
    fn star_is_bipartite_but_converges() {
        // K_{1,4} has spectrum {2, 0, 0, 0, -2}.
        let g = Graph::build_graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let r = run(&g);
        assert!((r.rho - 2.0).abs() < 1e-10, "{}", r.rho);
    }

    #[test]
    fn single_edge() {
        let g = Graph::build_graph(2, &[(0, 1)]).unwrap();
        let r = run(&g);
        assert!((r.rho - 1.0).abs() < 1e-10);
    }

    #[test]
    fn path_golden_ratio() {
        // rho(P_4) = 2 cos(pi/5) = (1 + sqrt 5)/2.
        let g = Graph::build_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = run(&g);
        let golden = (1.0 + 5.0f64.sqrt()) / 2.0;
        assert!((r.rho - golden).abs() < 1e-10, "{}", r.rho);
    }

    #[test]
    fn cycle_radius_two() {
        let g = Graph::build_graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let r = run(&g);
        assert!((r.rho - 2.0).abs() < 1e-10);
    }

    #[test]
    fn trivial_and_error_cases() {
        let one = Graph::empty(1).unwrap();
        let r = spectral_radius::<f64>(&one, 1e-12, 10).unwrap();
        assert_eq!(r.rho, 0.0);
        assert!(matches!(
            spectral_radius::<f64>(&Graph::empty(0).unwrap(), 1e-12, 10),
            Err(Error::TooSmall { .. })
        ));
        assert!(matches!(
            spectral_radius::<f64>(&Graph::empty(2).unwrap(), 1e-12, 10),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn degree_bounds_hold() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut checked = 0;
        while checked < 25 {
            let n = 3 + (next() % 8) as usize;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if next() % 100 < 55 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::build_graph(n, &edges).unwrap();
            if !g.is_connected().unwrap() {
                continue;
            }
            checked += 1;
            let r = run(&g);
            let avg = 2.0 * g.edge_count() as f64 / n as f64;
            let max = (0..n).map(|v| g.degree(v)).max().unwrap() as f64;
            assert!(r.rho >= avg - 1e-9, "rho {} below avg degree {avg}", r.rho);
            assert!(r.rho <= max + 1e-9, "rho {} above max degree {max}", r.rho);
        }
    }

    #[test]
    fn comparison_orders_and_fails_closed() {
        let cfg = Tolerance::default();
        let k5 = complete(5);
        let k4 = complete(4);
        let c: RhoComparison = compare_rho(&k5, &k4, &cfg).unwrap();
        assert_eq!(c.ordering, RhoOrdering::Greater);
        let c: RhoComparison = compare_rho(&k4, &k5, &cfg).unwrap();
        assert_eq!(c.ordering, RhoOrdering::Less);
        let c: RhoComparison = compare_rho(&k5, &k5, &cfg).unwrap();
        assert_eq!(c.ordering, RhoOrdering::Indistinguishable);
    }

    #[test]
    fn comparison_rejects_bad_margin() {
        let cfg = Tolerance {
            tol: 1e-6,
            margin: 1e-6,
            max_iter: 1000,
        };
        let g = complete(3);
        assert!(matches!(
            compare_rho::<f64>(&g, &g, &cfg),
            Err(Error::MarginTooSmall { .. })
        ));
    }

    #[test]
    fn f32_instantiation() {
        let r = spectral_radius::<f32>(&complete(4), 1e-6, 100_000).unwrap();
        assert!((r.rho - 3.0).abs() < 1e-4);
    }
}
