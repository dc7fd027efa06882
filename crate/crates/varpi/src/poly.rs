//! Sparse multivariate (Laurent) polynomials with exact rational coefficients.
//!
//! Terms are stored in a canonical ordered map from exponent vector to
//! nonzero coefficient; the zero polynomial is the empty map.  Printing uses
//! graded-lexicographic order, highest term first, so output is deterministic
//! and `parse(print(p)) == p` round-trips.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::exponent::ExponentVector;
use crate::scalar::Rational;

/// Sparse polynomial: finite association from exponent vectors to nonzero
/// rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial {
    /// Ambient variable count.
    pub vars: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl Polynomial {
    /// The zero polynomial in `n` variables.
    pub fn zero(vars: usize) -> Self {
        Polynomial { vars, terms: BTreeMap::new() }
    }

    /// The constant polynomial `1` in `n` variables.
    pub fn one(vars: usize) -> Self {
        Polynomial::constant(vars, Rational::one())
    }

    /// A constant polynomial.
    pub fn constant(vars: usize, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(ExponentVector::zeros(vars), c);
        }
        Polynomial { vars, terms }
    }

    /// A single-term polynomial `c · x^b`.
    ///
    /// # Panics
    /// Panics if the exponent length disagrees with `vars`.
    pub fn monomial(vars: usize, b: ExponentVector, c: Rational) -> Self {
        assert_eq!(b.len(), vars, "exponent length mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(b, c);
        }
        Polynomial { vars, terms }
    }

    /// Builds a polynomial from raw (exponent, coefficient) pairs, merging
    /// duplicates and dropping zero coefficients.
    pub fn from_terms(vars: usize, pairs: Vec<(ExponentVector, Rational)>) -> Self {
        let mut p = Polynomial::zero(vars);
        for (b, c) in pairs {
            p.add_term(b, c);
        }
        p
    }

    fn add_term(&mut self, b: ExponentVector, c: Rational) {
        assert_eq!(b.len(), self.vars, "exponent length mismatch");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(b);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// True when this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates over (exponent, coefficient) pairs in map order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    /// Iterates over the term exponents in map order.
    pub fn exponents(&self) -> impl Iterator<Item = &ExponentVector> {
        self.terms.keys()
    }

    /// True when every exponent is nonnegative (the polynomial lies in the
    /// base ring rather than a localization).
    pub fn is_in_base_ring(&self) -> bool {
        self.terms.keys().all(|b| b.is_nonnegative())
    }

    /// When the polynomial is a single term, returns its exponent and
    /// coefficient.
    pub fn as_monomial(&self) -> Option<(ExponentVector, &Rational)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (b, c) = self.terms.iter().next().expect("one term");
        Some((b.clone(), c))
    }

    /// `self^k` by repeated squaring; `p^0 = 1`.
    pub fn pow(&self, k: u32) -> Self {
        let mut base = self.clone();
        let mut exp = k;
        let mut acc = Polynomial::one(self.vars);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Renders the polynomial with the given variable names in graded-lex
    /// order, highest term first; the zero polynomial renders as `0`.
    pub fn to_text(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.vars, "variable name count mismatch");
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<&ExponentVector> = self.terms.keys().collect();
        keys.sort_by(|a, b| grlex(b, a));
        let mut out = String::new();
        for (i, b) in keys.iter().enumerate() {
            let c = &self.terms[*b];
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mono = b.format_monomial(names);
            if mono == "1" {
                let _ = write!(out, "{abs}");
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                let _ = write!(out, "{abs}*{mono}");
            }
        }
        out
    }
}

/// Graded-lexicographic comparison: first by total degree, then lex.
fn grlex(a: &ExponentVector, b: &ExponentVector) -> Ordering {
    a.total_degree()
        .cmp(&b.total_degree())
        .then_with(|| a.cmp(b))
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.vars, rhs.vars, "variable count mismatch");
        let mut out = self.clone();
        for (b, c) in &rhs.terms {
            out.add_term(b.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.vars, rhs.vars, "variable count mismatch");
        let mut out = self.clone();
        for (b, c) in &rhs.terms {
            out.add_term(b.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars,
            terms: self.terms.iter().map(|(b, c)| (b.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.vars, rhs.vars, "variable count mismatch");
        let mut out = Polynomial::zero(self.vars);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn ev(entries: &[i64]) -> ExponentVector {
        ExponentVector::new(entries.to_vec())
    }

    #[test]
    fn construction_cancels_and_drops_zeros() {
        let p = Polynomial::from_terms(
            1,
            vec![(ev(&[2]), rat_int(1)), (ev(&[2]), rat_int(-1))],
        );
        assert!(p.is_zero());
        let q = Polynomial::from_terms(1, vec![(ev(&[1]), rat_int(0))]);
        assert!(q.is_zero());
    }

    #[test]
    fn addition_and_multiplication() {
        let x = Polynomial::monomial(2, ev(&[1, 0]), rat_int(1));
        let y = Polynomial::monomial(2, ev(&[0, 1]), rat_int(1));
        let s = &x + &y;
        let d = &s * &(&x - &y);
        // (x + y)(x - y) = x^2 - y^2: cancellation of the cross terms.
        assert_eq!(d.num_terms(), 2);
        assert_eq!(
            d,
            Polynomial::from_terms(
                2,
                vec![(ev(&[2, 0]), rat_int(1)), (ev(&[0, 2]), rat_int(-1))]
            )
        );
    }

    #[test]
    fn powers_by_squaring() {
        let x = Polynomial::monomial(1, ev(&[1]), rat_int(1));
        let one = Polynomial::one(1);
        let p = &x + &one;
        let p3 = p.pow(3);
        // (x + 1)^3 = x^3 + 3x^2 + 3x + 1.
        assert_eq!(p3.num_terms(), 4);
        assert_eq!(p3.to_text(&["x"]), "x^3 + 3*x^2 + 3*x + 1");
        assert_eq!(p.pow(0), one);
    }

    #[test]
    fn printing_is_graded_lex_descending() {
        let p = Polynomial::from_terms(
            2,
            vec![
                (ev(&[0, 0]), rat_int(3)),
                (ev(&[2, 1]), rat_int(1)),
                (ev(&[1, 1]), rat(-1, 2)),
            ],
        );
        assert_eq!(p.to_text(&["x", "y"]), "x^2*y - 1/2*x*y + 3");
        assert_eq!(Polynomial::zero(2).to_text(&["x", "y"]), "0");
    }

    #[test]
    fn laurent_detection() {
        let p = Polynomial::monomial(2, ev(&[1, -1]), rat_int(1));
        assert!(!p.is_in_base_ring());
        assert!(Polynomial::one(2).is_in_base_ring());
    }
}
