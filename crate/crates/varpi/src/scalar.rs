//! Exact scalar arithmetic: arbitrary-precision rationals and the extended
//! rational line used for orders and asymptotic values.
//!
//! Every numeric quantity in this crate is an exact [`Rational`] (always in
//! lowest terms with positive denominator) or an [`ExtRat`], a rational
//! extended by `+∞`.  `+∞` is the order of the zero element: it is absorbing
//! under addition and greater than every finite value.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Arbitrary-precision rational number, always reduced, denominator positive.
pub type Rational = num_rational::BigRational;

/// Builds the rational `n/d`.
///
/// # Panics
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer rational `n`.
pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Parses a rational from `"7/6"` or `"3"` syntax.
pub fn rat_from_str(s: &str) -> Option<Rational> {
    Rational::from_str(s).ok()
}

/// A rational number or `+∞`, ordered with `+∞` greatest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtRat {
    /// A finite rational value.
    Finite(Rational),
    /// Positive infinity; the order of zero.
    Infinite,
}

impl ExtRat {
    /// The finite value zero.
    pub fn zero() -> Self {
        ExtRat::Finite(Rational::zero())
    }

    /// Builds a finite value from an integer.
    pub fn from_int(n: i64) -> Self {
        ExtRat::Finite(rat_int(n))
    }

    /// True when the value is finite.
    pub fn is_finite(&self) -> bool {
        matches!(self, ExtRat::Finite(_))
    }

    /// Borrows the finite value, if any.
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            ExtRat::Finite(q) => Some(q),
            ExtRat::Infinite => None,
        }
    }

    /// Divides by a positive integer; `+∞` is fixed.
    ///
    /// # Panics
    /// Panics if `k == 0`.
    pub fn div_int(&self, k: i64) -> Self {
        assert!(k > 0, "division of an extended rational requires k > 0");
        match self {
            ExtRat::Finite(q) => ExtRat::Finite(q / rat_int(k)),
            ExtRat::Infinite => ExtRat::Infinite,
        }
    }

    /// Multiplies by a nonnegative integer; `+∞` is fixed.
    pub fn mul_int(&self, k: i64) -> Self {
        assert!(k >= 0, "scaling of an extended rational requires k >= 0");
        match self {
            ExtRat::Finite(q) => ExtRat::Finite(q * rat_int(k)),
            ExtRat::Infinite => ExtRat::Infinite,
        }
    }
}

impl From<Rational> for ExtRat {
    fn from(q: Rational) -> Self {
        ExtRat::Finite(q)
    }
}

impl PartialOrd for ExtRat {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRat {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match (self, other) {
            (ExtRat::Infinite, ExtRat::Infinite) => Ordering::Equal,
            (ExtRat::Infinite, ExtRat::Finite(_)) => Ordering::Greater,
            (ExtRat::Finite(_), ExtRat::Infinite) => Ordering::Less,
            (ExtRat::Finite(a), ExtRat::Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for ExtRat {
    type Output = ExtRat;

    fn add(self, rhs: ExtRat) -> ExtRat {
        match (self, rhs) {
            (ExtRat::Finite(a), ExtRat::Finite(b)) => ExtRat::Finite(a + b),
            _ => ExtRat::Infinite,
        }
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::Finite(q) => write!(f, "{q}"),
            ExtRat::Infinite => write!(f, "inf"),
        }
    }
}

/// Floor of a rational as a plain integer.
///
/// # Panics
/// Panics if the floor does not fit in an `i64` (never the case at the scales
/// this crate works at).
pub fn rational_floor(q: &Rational) -> i64 {
    let fl = q.floor();
    let n = fl.numer() / fl.denom();
    i64::try_from(n).expect("rational floor exceeds i64")
}

/// True when `q` is an integer.
pub fn rational_is_integer(q: &Rational) -> bool {
    q.denom().abs() == BigInt::from(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_reduce_and_print() {
        assert_eq!(rat(14, 12), rat(7, 6));
        assert_eq!(rat(7, 6).to_string(), "7/6");
        assert_eq!(rat(6, 2).to_string(), "3");
        assert_eq!(rat(-1, 2).to_string(), "-1/2");
    }

    #[test]
    fn rational_round_trip_from_str() {
        assert_eq!(rat_from_str("7/6"), Some(rat(7, 6)));
        assert_eq!(rat_from_str("3"), Some(rat_int(3)));
        assert_eq!(rat_from_str("x"), None);
    }

    #[test]
    fn extended_order_places_infinity_on_top() {
        assert!(ExtRat::Infinite > ExtRat::from_int(1_000_000));
        assert!(ExtRat::from_int(1) < ExtRat::from_int(2));
        assert_eq!(ExtRat::Infinite, ExtRat::Infinite);
    }

    #[test]
    fn infinite_absorbs_addition() {
        assert_eq!(ExtRat::Infinite + ExtRat::from_int(5), ExtRat::Infinite);
        assert_eq!(
            ExtRat::Finite(rat(1, 2)) + ExtRat::Finite(rat(1, 3)),
            ExtRat::Finite(rat(5, 6))
        );
    }

    #[test]
    fn division_and_scaling() {
        assert_eq!(ExtRat::from_int(7).div_int(6), ExtRat::Finite(rat(7, 6)));
        assert_eq!(ExtRat::Infinite.div_int(3), ExtRat::Infinite);
        assert_eq!(ExtRat::Finite(rat(7, 6)).mul_int(6), ExtRat::from_int(7));
    }

    #[test]
    fn floor_handles_negatives() {
        assert_eq!(rational_floor(&rat(5, 2)), 2);
        assert_eq!(rational_floor(&rat(-5, 2)), -3);
        assert_eq!(rational_floor(&rat_int(4)), 4);
        assert!(rational_is_integer(&rat_int(4)));
        assert!(!rational_is_integer(&rat(1, 2)));
    }

    #[test]
    fn display_infinite() {
        assert_eq!(ExtRat::Infinite.to_string(), "inf");
        assert_eq!(ExtRat::Finite(rat(7, 6)).to_string(), "7/6");
    }
}
