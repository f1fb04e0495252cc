//! Hamiltonicity via subset dynamic programming, and the fully-cycle-
//! extendable predicate via exhaustive spanning-cycle tables.

use super::{bits, low_bits, Graph};
use crate::{Error, Result};

/// Order bound for the Hamiltonian cycle DP (endpoint sets fit in `u32`).
pub const MAX_HAMILTONIAN: usize = 24;
/// Order bound for cycle enumeration used by full cycle extendability.
pub const MAX_CYCLE_ENUM: usize = 10;

/// True iff the graph contains a Hamiltonian cycle.
///
/// Subset DP over vertex masks anchored at vertex 0: `dp[mask]` holds the
/// endpoints of paths that start at 0 and span `mask`. Deterministic, no
/// heuristics; single vertices and edges are non-Hamiltonian.
pub fn is_hamiltonian(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n > MAX_HAMILTONIAN {
        return Err(Error::TooLarge {
            op: "is_hamiltonian",
            n,
            max: MAX_HAMILTONIAN,
        });
    }
    if n < 3 {
        return Ok(false);
    }
    if (0..n).any(|v| g.degree(v) < 2) {
        return Ok(false);
    }
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v) as u32).collect();
    let full = (1usize << n) - 1;
    let mut dp = vec![0u32; 1 << n];
    dp[1] = 1;
    for mask in (1..=full).step_by(2) {
        let mut ends = dp[mask];
        if ends == 0 {
            continue;
        }
        if mask == full {
            break;
        }
        while ends != 0 {
            let e = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let mut fresh = adj[e] & !(mask as u32);
            while fresh != 0 {
                let w = fresh.trailing_zeros() as usize;
                fresh &= fresh - 1;
                dp[mask | (1 << w)] |= 1 << w;
            }
        }
    }
    Ok(dp[full] & adj[0] != 0)
}

/// For every vertex mask, whether the induced subgraph carries a spanning
/// cycle. Index is the mask; only meaningful for `|mask| >= 3`.
///
/// One pass of path DP anchored at each mask's minimum vertex: `dp[mask]`
/// holds endpoints of paths from `min(mask)` spanning `mask`, extended only
/// by vertices above the anchor so each mask is charged exactly once.
pub(crate) fn spanning_cycle_table(g: &Graph) -> Vec<bool> {
    let n = g.n();
    debug_assert!(n <= MAX_CYCLE_ENUM);
    let size = 1usize << n;
    let mut dp = vec![0u16; size];
    for v in 0..n {
        dp[1 << v] = 1 << v;
    }
    let mut cyc = vec![false; size];
    for mask in 1..size {
        let mut ends = dp[mask];
        if ends == 0 {
            continue;
        }
        let anchor = mask.trailing_zeros() as usize;
        if (mask.count_ones()) >= 3 && dp[mask] & g.neighbors(anchor) as u16 != 0 {
            cyc[mask] = true;
        }
        let above = !low_bits(anchor + 1);
        while ends != 0 {
            let e = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            for w in bits(g.neighbors(e) & !(mask as u64) & above) {
                dp[mask | (1 << w)] |= 1 << w;
            }
        }
    }
    cyc
}

/// True iff every vertex lies on a triangle and every non-Hamiltonian cycle
/// `C` extends to a cycle on one more vertex containing `V(C)`.
pub fn is_fully_cycle_extendable(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n > MAX_CYCLE_ENUM {
        return Err(Error::TooLarge {
            op: "is_fully_cycle_extendable",
            n,
            max: MAX_CYCLE_ENUM,
        });
    }
    if n == 0 {
        return Err(Error::TooSmall {
            op: "is_fully_cycle_extendable",
            n: 0,
            min: 1,
        });
    }
    if !every_vertex_on_triangle(g) {
        return Ok(false);
    }
    let cyc = spanning_cycle_table(g);
    Ok(extendable_with_table(g, &cyc))
}

pub(crate) fn every_vertex_on_triangle(g: &Graph) -> bool {
    (0..g.n()).all(|v| {
        bits(g.neighbors(v)).any(|u| g.neighbors(v) & g.neighbors(u) & !low_bits(u + 1) != 0)
    })
}

pub(crate) fn extendable_with_table(g: &Graph, cyc: &[bool]) -> bool {
    let n = g.n();
    let full = (1usize << n) - 1;
    for (mask, &has_cycle) in cyc.iter().enumerate() {
        if !has_cycle || mask == full {
            continue;
        }
        let grown = bits(!(mask as u64) & low_bits(n)).any(|w| cyc[mask | (1 << w)]);
        if !grown {
            return false;
        }
    }
    true
}
