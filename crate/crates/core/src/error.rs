use thiserror::Error;

/// Errors raised by the numerical routines of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum BcError {
    /// The argument is a zero divisor (one idempotent component vanishes).
    #[error("{0} lies in the null cone (min idempotent modulus {1:e})")]
    NullCone(&'static str, f64),

    /// A principal square root was requested on the negative real axis.
    #[error("idempotent component {0} lies on the principal branch cut")]
    BranchCut(String),

    /// A transform parameter lies in an explicitly excluded set.
    #[error("excluded parameter: {0}")]
    ExcludedParameter(String),

    /// An integrand produced a non-finite value at a quadrature node.
    #[error("integrand is not finite at node {0}")]
    NonFinite(String),

    /// The Jacobi-matrix eigen-solve did not converge.
    #[error("eigen-solve for a {0}-point rule did not converge")]
    Convergence(usize),

    /// Arguments outside the domain where a closed form is valid.
    #[error("domain error: {0}")]
    Domain(String),

    /// Two operands live in different spaces (different sigma or nu).
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A scalar parameter violates its precondition (e.g. sigma <= 0).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, BcError>;

pub(crate) fn require_positive(name: &str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(BcError::InvalidParameter(format!("{name} must be a positive finite number, got {value}")))
    }
}
