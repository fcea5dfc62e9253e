use thiserror::Error;

/// Errors raised by scalar and skein-algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeinError {
    /// Operands mix exact and numeric scalars, or do not match the active context.
    #[error("scalar mode mismatch")]
    ModeMismatch,

    /// Exact division by the zero scalar.
    #[error("division by zero")]
    DivisionByZero,

    /// A numeric divisor (or evaluated denominator) lies within the
    /// degeneracy tolerance of zero. For divisors of the form t^a - t^-a
    /// this signals that t is numerically indistinguishable from a root
    /// of unity at that exponent.
    #[error("degenerate scalar: numeric value within tolerance of zero")]
    DegenerateScalar,

    /// A numeric operation produced a non-finite value.
    #[error("numeric overflow: result is not finite")]
    NonFinite,

    /// The empty curve (0,0) has no gcd decomposition.
    #[error("the curve (0,0) has no primitive decomposition")]
    ZeroCurve,

    /// x^0 is the empty skein and is never converted termwise.
    #[error("exponent must be positive")]
    ZeroPower,

    /// Witness construction requires x+z and y+w both even.
    #[error("parity mismatch: x+z and y+w must both be even")]
    ParityMismatch,

    /// Witness construction requires linearly independent curves.
    #[error("dependent curves: determinant is zero")]
    DependentCurves,

    /// Simple-diagram terms need a primitive (gcd = 1) curve.
    #[error("curve is not primitive")]
    NonPrimitiveCurve,
}

/// A parse failure, with the byte offset of the offending token and the
/// set of token descriptions that would have been accepted there.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: found {found}, expected {}", expected.join(" | "))]
pub struct ParseError {
    pub position: usize,
    pub found: String,
    pub expected: Vec<String>,
}
