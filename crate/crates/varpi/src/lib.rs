//! Exact-arithmetic workbench for valuation theory on monomial algebras:
//! Rees valuations via Newton polyhedra, asymptotic order functions, adic
//! and spectral seminorms, fractional-ideal closure operations, boundary
//! classification of local model rings, and finite free extensions.
//!
//! Everything is computed over exact rationals (`num-rational`); there are
//! no floating-point tolerances anywhere.  Seminorm values live on the
//! logarithmic scale `2^(-q)` with `q` an exact rational (see
//! [`logvalue::LogValue`]), so equalities asserted by the high-level
//! theorems can be tested as identities.

pub mod error;
pub mod exponent;
pub mod ideal;
pub mod linalg;
pub mod logvalue;
pub mod parse;
pub mod poly;
pub mod polyhedron;
pub mod rees;
pub mod scalar;
pub mod extension;
pub mod ring_class;
pub mod seminorm;
pub mod star;
pub mod verify;

pub use error::{Error, Result};

/// Outcome of a checked identity: either it holds, or a concrete
/// counterexample is produced.
///
/// Checking routines in this crate prefer returning witnesses over booleans
/// so failures are reproducible by hand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    /// The identity holds on the checked instance.
    Pass,
    /// A concrete counterexample.
    Witness(W),
}

impl<W> Verdict<W> {
    /// True when the verdict is [`Verdict::Pass`].
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    /// Returns the witness, if any.
    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Pass => None,
            Verdict::Witness(w) => Some(w),
        }
    }
}

/// Default variable names used by the command-line tool and the tests:
/// `w` is excluded because it denotes the distinguished element in
/// fractional-ideal notation.
pub const DEFAULT_NAMES: [&str; 4] = ["x", "y", "z", "u"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts() {
        let pass: Verdict<String> = Verdict::Pass;
        assert!(pass.passed());
        assert_eq!(pass.witness(), None);
        let fail = Verdict::Witness("bad".to_string());
        assert!(!fail.passed());
        assert_eq!(fail.witness(), Some(&"bad".to_string()));
    }
}
