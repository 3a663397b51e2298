//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Cycle type does not fit inside the ambient symmetric group.
    #[error("cycle type of size {profile} does not fit in S_{ambient}")]
    SizeMismatch { profile: u64, ambient: u64 },

    /// An exhaustive-enumeration oracle was asked for more than its cost
    /// guard allows.
    #[error("input exceeds the {what} guard: {detail}")]
    GuardExceeded { what: &'static str, detail: String },

    /// Formal logarithm requires constant term exactly 1.
    #[error("series constant term must be 1, found {found}")]
    BadConstantTerm { found: String },

    /// Formal exponential requires constant term exactly 0.
    #[error("series constant term must be 0, found {found}")]
    NonzeroConstantTerm { found: String },

    #[error("Eisenstein weight must be 2, 4 or 6, got {0}")]
    BadEisensteinWeight(u32),

    /// A linear fit was requested with too few series coefficients to
    /// certify the answer.
    #[error("series order {order} too small: need at least {needed} coefficients")]
    Underdetermined { order: usize, needed: usize },

    #[error("ramification profile must be a single cycle, found {0}")]
    NotACycle(String),

    #[error("graph is invalid: {0}")]
    BadGraph(String),

    #[error("polynomial is degenerate for this operation: {0}")]
    DegeneratePolynomial(String),

    /// Numerical quadrature hit a non-finite integrand value.
    #[error("non-finite value at quadrature node (theta={theta}, phi={phi})")]
    NonFiniteSample { theta: f64, phi: f64 },

    /// Finite differences did not land near a lattice point.
    #[error("gradient ({gx}, {gy}) is not within {tol} of a lattice point")]
    NotInFacet { gx: f64, gy: f64, tol: f64 },

    #[error("point ({x}, {y}) is outside the bounding box (or too close to its edge)")]
    OutOfBounds { x: f64, y: f64 },

    #[error("invalid parameter: {0}")]
    BadParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
