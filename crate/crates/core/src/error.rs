use thiserror::Error;

use crate::exact::poly::Var;

/// Errors raised by the exact, numeric and audit layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain an operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    /// A polynomial was evaluated without a value for one of its indeterminates.
    #[error("domain error: indeterminate {0} is not bound")]
    Unbound(Var),

    /// A term of a defining series hits a singularity.
    #[error("pole: {0}")]
    Pole(String),

    /// Truncated series of different orders were combined.
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    /// Series division by a series whose constant term is zero or not a constant.
    #[error("non-invertible leading coefficient")]
    NonInvertible,

    /// A closed form did not have the algebraic shape its derivation claims.
    #[error("identity violation: {0}")]
    IdentityViolation(String),

    /// An iterative evaluation ran out of its term budget.
    #[error("no convergence: {0}")]
    NoConvergence(String),

    /// Bad configuration or command-line arguments.
    #[error("usage error: {0}")]
    Usage(String),

    /// Failure reported by the floating-point backend.
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
