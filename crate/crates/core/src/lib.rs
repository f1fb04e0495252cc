//! Split-graph spectral verification library.
//!
//! Builds the extremal split-graph families used in spectral Hamiltonicity
//! bounds, computes adjacency spectral radii and Perron vectors, derives
//! equitable-partition quotient matrices with exact integer characteristic
//! polynomials, and verifies the associated lemmas and theorems numerically
//! and by exhaustive small-order enumeration.
//!
//! Modules:
//! - [`graph`]: bitset graphs, predicates (connectivity, Hamiltonicity,
//!   `K_{1,r}`-freeness, vertex connectivity), split witnesses, isomorphism,
//!   and the graph6 codec.
//! - [`families`]: deterministic constructors for every named family, plus
//!   their canonical equitable partitions.
//! - [`spectral`]: power-iteration spectral radius and certified comparisons.
//! - [`equitable`]: equitable partitions, quotient matrices, exact
//!   characteristic polynomials, and the printed polynomial formulas.
//! - [`verify`]: lemma sweeps, exhaustive theorem checks over enumerated
//!   split graphs, and the randomized property harness.

pub mod equitable;
pub mod families;
pub mod graph;
pub mod poly;
pub mod scalar;
pub mod spectral;
pub mod verify;

use std::fmt;

/// Default concrete scalar for floating-point spectral computations.
pub type Real = f64;
/// Exact integer coefficient type used on the quotient-matrix path.
pub type Coeff = num_bigint::BigInt;

/// Errors shared by all modules.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} rejected")]
    SelfLoop(usize),
    #[error("{op}: order {n} exceeds supported bound {max}")]
    TooLarge {
        op: &'static str,
        n: usize,
        max: usize,
    },
    #[error("{op}: requires order at least {min}, got {n}")]
    TooSmall {
        op: &'static str,
        n: usize,
        min: usize,
    },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("power iteration did not converge within {0} iterations")]
    NoConvergence(u64),
    #[error("margin {margin:e} must be at least 10 times the solver tolerance {tol:e}")]
    MarginTooSmall { margin: f64, tol: f64 },
    #[error("{family}: {msg}")]
    FamilyParameter { family: &'static str, msg: String },
    #[error("invalid partition: {0}")]
    BadPartition(String),
    #[error("partition is not equitable")]
    NotEquitable,
    #[error("edge rotation: {0}")]
    BadRotation(String),
    #[error("independent-star scan requires r >= 3, got {0}")]
    SmallR(usize),
    #[error("enumeration budget exceeded: k*i = {0} > 25")]
    MaskBudget(usize),
    #[error("characteristic polynomial bound exceeded: {0} cells > 12")]
    QuotientTooLarge(usize),
    #[error("{target}: sweep range {range} lies outside the hypothesis {hypothesis}")]
    RangeOutsideHypothesis {
        target: String,
        range: String,
        hypothesis: String,
    },
    #[error("unknown identifier: {0}")]
    UnknownId(String),
    #[error("polynomial has no real root")]
    NoRealRoot,
}

pub type Result<T> = std::result::Result<T, Error>;

/// Solver and comparison settings shared by the spectral and verification
/// paths.
///
/// `margin` is the certified-comparison dead zone: two radii closer than this
/// are reported as indistinguishable rather than silently ordered.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    /// Power-iteration residual target (max-norm of `A x - rho x`).
    pub tol: f64,
    /// Minimum certified gap for strict comparisons; must be >= 10 * tol.
    pub margin: f64,
    /// Iteration cap for the power method.
    pub max_iter: u64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            tol: 1e-12,
            margin: 1e-6,
            max_iter: 1_000_000,
        }
    }
}

impl Tolerance {
    pub fn validate(&self) -> Result<()> {
        if self.tol <= 0.0 || self.tol.is_nan() {
            return Err(Error::MarginTooSmall {
                margin: self.margin,
                tol: self.tol,
            });
        }
        if self.margin < 10.0 * self.tol {
            return Err(Error::MarginTooSmall {
                margin: self.margin,
                tol: self.tol,
            });
        }
        Ok(())
    }
}

/// Formats a float with exactly 12 significant digits, stable across
/// platforms; used for all serialized report values.
pub fn format_sig12(x: f64) -> String {
    let mut s = format!("{:.11e}", x);
    // `{:e}` omits the sign of non-negative exponents; JSON number
    // normalization would reinsert it, so emit the signed form everywhere
    // and keep text and JSON output identical.
    if let Some(pos) = s.find('e') {
        if !matches!(s.as_bytes().get(pos + 1), Some(b'+') | Some(b'-')) {
            s.insert(pos + 1, '+');
        }
    }
    s
}

/// An `f64` that serializes as a JSON number with exactly 12 significant
/// digits, so identical runs produce byte-identical reports.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Sig12(pub f64);

impl serde::Serialize for Sig12 {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use std::str::FromStr;
        let n = serde_json::Number::from_str(&format_sig12(self.0))
            .map_err(serde::ser::Error::custom)?;
        n.serialize(ser)
    }
}

impl fmt::Display for Sig12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_sig12(self.0))
    }
}
