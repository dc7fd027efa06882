//! Seminorm values stored in exact log space.
//!
//! Every seminorm value computed by this crate has the shape `2^(−q)` with
//! `q` rational, because the pseudo-uniformizer is normalized to absolute
//! value `1/2` and every other value arises from it by products and roots.
//! A [`LogValue`] stores the exponent `q` exactly; `q = +∞` encodes the value
//! `0`.  Comparison of values *reverses* comparison of exponents, and
//! multiplication of values adds exponents, with `+∞` absorbing.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

use num_traits::{Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::scalar::{ExtRat, Rational};

/// A value `2^(−exponent)`; `exponent = +∞` is the value `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LogValue {
    exponent: ExtRat,
}

impl LogValue {
    /// The value `1` (exponent `0`).
    pub fn one() -> Self {
        LogValue { exponent: ExtRat::zero() }
    }

    /// The value `0` (exponent `+∞`).
    pub fn zero() -> Self {
        LogValue { exponent: ExtRat::Infinite }
    }

    /// The value `2^(−q)`.
    pub fn from_exponent(q: ExtRat) -> Self {
        LogValue { exponent: q }
    }

    /// The value `2^(−q)` for a finite rational exponent.
    pub fn from_rational_exponent(q: Rational) -> Self {
        LogValue { exponent: ExtRat::Finite(q) }
    }

    /// The value `2^(−n)` for an integer exponent.
    pub fn from_int_exponent(n: i64) -> Self {
        LogValue { exponent: ExtRat::from_int(n) }
    }

    /// The exact exponent.
    pub fn exponent(&self) -> &ExtRat {
        &self.exponent
    }

    /// True when the value is `0`.
    pub fn is_zero(&self) -> bool {
        !self.exponent.is_finite()
    }

    /// The `k`-th root: exponent divided by `k`.
    ///
    /// # Panics
    /// Panics if `k == 0`.
    pub fn root(&self, k: i64) -> Self {
        LogValue { exponent: self.exponent.div_int(k) }
    }

    /// The `k`-th power: exponent multiplied by `k`.
    pub fn pow(&self, k: i64) -> Self {
        LogValue { exponent: self.exponent.mul_int(k) }
    }
}

impl Mul for LogValue {
    type Output = LogValue;

    // 2^(-p) · 2^(-q) = 2^(-(p+q)): products add exponents.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: LogValue) -> LogValue {
        LogValue { exponent: self.exponent + rhs.exponent }
    }
}

impl Mul for &LogValue {
    type Output = LogValue;

    fn mul(self, rhs: &LogValue) -> LogValue {
        self.clone() * rhs.clone()
    }
}

impl PartialOrd for LogValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LogValue {
    /// Value order: `2^(−q1) ≤ 2^(−q2)` iff `q1 ≥ q2`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.exponent.cmp(&other.exponent).reverse()
    }
}

impl fmt::Display for LogValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exponent {
            ExtRat::Infinite => write!(f, "0"),
            ExtRat::Finite(q) if q.is_zero() => write!(f, "1"),
            ExtRat::Finite(q) if q.is_negative() => write!(f, "2^({})", -q),
            ExtRat::Finite(q) => write!(f, "2^(-{q})"),
        }
    }
}

impl Serialize for LogValue {
    /// Serializes as `{"log2_exponent": "1/2"}`; the value `0` uses `"inf"`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(1))?;
        map.serialize_entry("log2_exponent", &self.exponent.to_string())?;
        map.end()
    }
}
