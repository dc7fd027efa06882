//! Error taxonomy shared by every module of the crate.
//!
//! All fallible operations return [`Result`] with this crate-wide error type.
//! Parse errors carry a byte position into the offending input; algebraic
//! precondition violations carry enough context to reconstruct the call.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Syntax error while parsing a polynomial, ideal, or fractional ideal.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// A name in the input does not belong to the declared variable list.
    #[error("unknown variable `{name}`")]
    UnknownVariable { name: String },

    /// Two operands live over different numbers of variables.
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// The zero ideal was passed to an operation that rejects it.
    #[error("the zero ideal is not allowed here")]
    ZeroIdeal,

    /// The unit ideal was passed to an operation that requires a proper ideal.
    #[error("the unit ideal is not allowed here")]
    UnitIdeal,

    /// Polyhedral operations support at most four variables.
    #[error("unsupported dimension {found}: polyhedral operations are capped at 4 variables")]
    UnsupportedDimension { found: usize },

    /// A Laurent polynomial was passed where an element of the base ring is
    /// required (all exponents nonnegative).
    #[error("negative exponents are not allowed here: the argument must lie in the base ring")]
    LaurentInput,

    /// A Laurent exponent is negative in a variable where the pseudo-uniformizer
    /// has exponent zero, so the monomial does not lie in A[1/ϖ].
    #[error("negative exponent in variable index {var} outside the support of the pseudo-uniformizer")]
    InvalidLaurentSupport { var: usize },

    /// A fractional-ideal candidate is not open: no power of the
    /// pseudo-uniformizer lies in the module.
    #[error("the module is not open: no generator is supported inside the support of the pseudo-uniformizer")]
    NotOpen,

    /// A multiplication table failed a structural check at construction.
    #[error("invalid extension data: {0}")]
    InvalidExtension(String),

    /// Exact division certified that a minimal-polynomial coefficient does not
    /// lie in the base polynomial ring.
    #[error("minimal-polynomial coefficient does not lie in the base ring: {0}")]
    CoefficientNotInBase(String),

    /// A valuation argument is not among the Rees valuations of the ideal.
    #[error("the given valuation is not a Rees valuation of the ideal")]
    NotAReesValuation,

    /// Catch-all for violated preconditions with a human-readable reason.
    #[error("{0}")]
    Invalid(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Shorthand for a parse error.
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }

    /// Shorthand for a generic precondition violation.
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_includes_position() {
        let e = Error::parse(7, "expected `)`");
        assert_eq!(e.to_string(), "parse error at byte 7: expected `)`");
    }

    #[test]
    fn display_dimension_mismatch() {
        let e = Error::DimensionMismatch { expected: 2, found: 3 };
        assert!(e.to_string().contains("expected 2"));
        assert!(e.to_string().contains("found 3"));
    }
}
