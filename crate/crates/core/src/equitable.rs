//! Equitable partitions, integer quotient matrices, exact characteristic
//! polynomials, and the closed-form quotient polynomials of the extremal
//! families.
//!
//! A partition is equitable when every vertex of cell `i` has the same
//! number of neighbors in cell `j`, for all `i, j`. The quotient matrix of
//! an equitable partition collects those constant counts; its spectral
//! radius equals the graph's, which makes exact root isolation on its
//! characteristic polynomial an independent oracle for the float solver.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::graph::Graph;
use crate::poly;
use crate::{Coeff, Error, Result};

/// Ordered partition of `{0, .., n-1}` into disjoint nonempty cells.
///
/// Cell order is significant: it fixes the row order of the quotient
/// matrix. Vertices inside each cell are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    cells: Vec<Vec<usize>>,
}

impl Partition {
    /// Builds a partition after checking it is a disjoint cover of `0..n`.
    pub fn new(n: usize, cells: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut covered = 0usize;
        for cell in &cells {
            if cell.is_empty() {
                return Err(Error::BadPartition("empty cell".into()));
            }
            for &v in cell {
                if v >= n {
                    return Err(Error::BadPartition(format!(
                        "vertex {v} out of range for n={n}"
                    )));
                }
                if seen[v] {
                    return Err(Error::BadPartition(format!(
                        "vertex {v} appears in two cells"
                    )));
                }
                seen[v] = true;
                covered += 1;
            }
        }
        if covered != n {
            return Err(Error::BadPartition(format!(
                "{covered} of {n} vertices covered"
            )));
        }
        let mut cells = cells;
        for cell in &mut cells {
            cell.sort_unstable();
        }
        Ok(Partition { n, cells })
    }

    /// Single cell holding every vertex.
    pub fn unit(n: usize) -> Self {
        if n == 0 {
            return Partition {
                n,
                cells: Vec::new(),
            };
        }
        Partition {
            n,
            cells: vec![(0..n).collect()],
        }
    }

    /// One singleton cell per vertex, in vertex order.
    pub fn singletons(n: usize) -> Self {
        Partition {
            n,
            cells: (0..n).map(|v| vec![v]).collect(),
        }
    }

    /// Cells grouped by vertex degree, ordered by minimum vertex index.
    pub fn degrees(g: &Graph) -> Self {
        let n = g.n();
        let mut cells: Vec<Vec<usize>> = Vec::new();
        let mut degree_of_cell: Vec<usize> = Vec::new();
        for v in 0..n {
            let d = g.degree(v);
            match degree_of_cell.iter().position(|&x| x == d) {
                Some(i) => cells[i].push(v),
                None => {
                    degree_of_cell.push(d);
                    cells.push(vec![v]);
                }
            }
        }
        Partition { n, cells }
    }

    /// Number of vertices partitioned.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Cells in order; each cell is sorted ascending.
    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    /// Number of cells.
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    fn cell_masks(&self) -> Vec<u64> {
        self.cells
            .iter()
            .map(|cell| cell.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect()
    }
}

fn check_compatible(g: &Graph, p: &Partition) -> Result<()> {
    if p.n() != g.n() {
        return Err(Error::BadPartition(format!(
            "partition covers {} vertices, graph has {}",
            p.n(),
            g.n()
        )));
    }
    Ok(())
}

/// True iff every vertex of each cell has the same neighbor count into
/// every cell.
pub fn is_equitable(g: &Graph, p: &Partition) -> Result<bool> {
    check_compatible(g, p)?;
    let masks = p.cell_masks();
    for cell in p.cells() {
        let first = cell[0];
        for j in &masks {
            let want = (g.neighbors(first) & j).count_ones();
            for &v in &cell[1..] {
                if (g.neighbors(v) & j).count_ones() != want {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Coarsest equitable partition refining `seed`, computed by iterated
/// splitting on neighbor-count signatures. Cells are ordered by minimum
/// vertex index.
pub fn coarsest_equitable(g: &Graph, seed: &Partition) -> Result<Partition> {
    check_compatible(g, seed)?;
    let n = g.n();
    if n == 0 {
        return Ok(Partition::unit(0));
    }
    let mut colors = vec![0u32; n];
    for (i, cell) in seed.cells().iter().enumerate() {
        for &v in cell {
            colors[v] = i as u32;
        }
    }
    let mut cell_count = seed.len();
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut near: Vec<u32> = crate::graph::bits(g.neighbors(v))
                    .map(|w| colors[w])
                    .collect();
                near.sort_unstable();
                (colors[v], near)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() == cell_count {
            break;
        }
        cell_count = sorted.len();
        for v in 0..n {
            colors[v] = sorted.binary_search(&sigs[v]).unwrap() as u32;
        }
    }
    // Gather cells and order them by their minimum vertex.
    let mut by_color: Vec<Vec<usize>> = vec![Vec::new(); cell_count];
    for v in 0..n {
        by_color[colors[v] as usize].push(v);
    }
    by_color.retain(|c| !c.is_empty());
    by_color.sort_by_key(|c| c[0]);
    Partition::new(n, by_color)
}

/// Integer matrix of constant block row sums of an equitable partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMatrix {
    entries: Vec<Vec<u64>>,
}

impl QuotientMatrix {
    /// Wraps an explicit square matrix.
    pub fn new(entries: Vec<Vec<u64>>) -> Result<Self> {
        let s = entries.len();
        if entries.iter().any(|row| row.len() != s) {
            return Err(Error::BadPartition("quotient matrix not square".into()));
        }
        Ok(QuotientMatrix { entries })
    }

    /// Side length.
    pub fn s(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> u64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.entries
    }
}

/// Quotient matrix of an equitable partition; rows follow cell order.
pub fn quotient(g: &Graph, p: &Partition) -> Result<QuotientMatrix> {
    if !is_equitable(g, p)? {
        return Err(Error::NotEquitable);
    }
    let masks = p.cell_masks();
    let entries = p
        .cells()
        .iter()
        .map(|cell| {
            masks
                .iter()
                .map(|j| u64::from((g.neighbors(cell[0]) & j).count_ones()))
                .collect()
        })
        .collect();
    Ok(QuotientMatrix { entries })
}

/// Largest side length accepted by [`char_poly`].
pub const MAX_CHAR_POLY: usize = 12;

/// Exact monic characteristic polynomial, descending coefficients, via the
/// Faddeev-LeVerrier recurrence over arbitrary-precision integers.
pub fn char_poly(q: &QuotientMatrix) -> Result<Vec<Coeff>> {
    let s = q.s();
    if s > MAX_CHAR_POLY {
        return Err(Error::QuotientTooLarge(s));
    }
    let a: Vec<Vec<Coeff>> = q
        .entries
        .iter()
        .map(|row| row.iter().map(|&e| Coeff::from(e)).collect())
        .collect();
    let mut coeffs = vec![Coeff::one()];
    // m holds N_{k-1}; starts as the identity.
    let mut m: Vec<Vec<Coeff>> = (0..s)
        .map(|i| {
            (0..s)
                .map(|j| if i == j { Coeff::one() } else { Coeff::zero() })
                .collect()
        })
        .collect();
    for k in 1..=s {
        // am = A * N_{k-1}
        let am: Vec<Vec<Coeff>> = (0..s)
            .map(|i| {
                (0..s)
                    .map(|j| (0..s).map(|l| &a[i][l] * &m[l][j]).sum())
                    .collect()
            })
            .collect();
        let trace: Coeff = (0..s).map(|i| am[i][i].clone()).sum();
        let (c, rem) = (-trace).div_rem(&Coeff::from(k as u64));
        debug_assert!(rem.is_zero(), "trace not divisible in exact recurrence");
        for (i, row) in m.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = &am[i][j] + if i == j { c.clone() } else { Coeff::zero() };
            }
        }
        coeffs.push(c);
    }
    Ok(coeffs)
}

/// Spectral radius of a quotient matrix: the largest real root of its
/// characteristic polynomial, isolated exactly to within `eps`.
pub fn quotient_radius(q: &QuotientMatrix, eps: f64) -> Result<f64> {
    let p = char_poly(q)?;
    poly::largest_real_root(&p, eps).ok_or(Error::NoRealRoot)
}

/// Identifiers for the closed-form quotient characteristic polynomials of
/// the extremal families, one group per independent-set size.
///
/// For |I| = 3: `I3F`/`I3G` are the degree-4/5 polynomials whose largest
/// roots are the radii of the two competing families, and `I3Tau` is the
/// comparison polynomial g - x f. For |I| = 4 and |I| = 5 the pairs are
/// `*F`/`*G` with difference polynomial `*H` = g - f.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedFormId {
    I3F,
    I3G,
    I3Tau,
    I44F,
    I44G,
    I44H,
    I5F,
    I5G,
    I5H,
}

impl ClosedFormId {
    pub const ALL: [ClosedFormId; 9] = [
        ClosedFormId::I3F,
        ClosedFormId::I3G,
        ClosedFormId::I3Tau,
        ClosedFormId::I44F,
        ClosedFormId::I44G,
        ClosedFormId::I44H,
        ClosedFormId::I5F,
        ClosedFormId::I5G,
        ClosedFormId::I5H,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClosedFormId::I3F => "I3_f",
            ClosedFormId::I3G => "I3_g",
            ClosedFormId::I3Tau => "I3_tau",
            ClosedFormId::I44F => "I44_f",
            ClosedFormId::I44G => "I44_g",
            ClosedFormId::I44H => "I44_h",
            ClosedFormId::I5F => "I5_f",
            ClosedFormId::I5G => "I5_g",
            ClosedFormId::I5H => "I5_h",
        }
    }
}

impl fmt::Display for ClosedFormId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClosedFormId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClosedFormId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownId(s.into()))
    }
}

/// Evaluates a closed-form template at order `n`, returning exact
/// descending coefficients. Coefficients are linear in `n`.
pub fn closed_form_poly(id: ClosedFormId, n: u64) -> Vec<Coeff> {
    let m = n as i128;
    let raw: Vec<i128> = match id {
        ClosedFormId::I3F => vec![1, -(m - 5), -(3 * m - 11), m - 5, 2 * m - 8],
        ClosedFormId::I3G => vec![1, -(m - 6), -(3 * m - 9), 2 * m - 20, 8 * m - 42, 2 * m - 8],
        ClosedFormId::I3Tau => vec![1, -2, m - 15, 6 * m - 34, 2 * m - 8],
        ClosedFormId::I44F => vec![
            1,
            -(m - 7),
            -(5 * m - 25),
            -(3 * m - 13),
            8 * m - 44,
            4 * m - 20,
            -(2 * m - 12),
        ],
        ClosedFormId::I44G => vec![
            1,
            -(m - 7),
            -(5 * m - 26),
            -(4 * m - 19),
            6 * m - 36,
            4 * m - 21,
            -(m - 7),
        ],
        ClosedFormId::I44H => vec![1, -(m - 6), -(2 * m - 8), -1, m - 5],
        ClosedFormId::I5F => vec![
            1,
            -(m - 8),
            -(5 * m - 28),
            -(m + 2),
            16 * m - 106,
            6 * m - 34,
            -(13 * m - 91),
        ],
        ClosedFormId::I5G => vec![
            1,
            -(m - 8),
            -(5 * m - 29),
            -(2 * m - 5),
            14 * m - 100,
            6 * m - 35,
            -(11 * m - 88),
        ],
        ClosedFormId::I5H => vec![1, -(m - 7), -(2 * m - 6), -1, 2 * m - 3],
    };
    raw.into_iter().map(Coeff::from).collect()
}
