//! Integer exponent vectors for monomials, including Laurent monomials.
//!
//! An [`ExponentVector`] is a fixed-length tuple of integers; the length is
//! the ambient variable count.  The componentwise order is exactly the
//! divisibility order on monomials: `a` divides `b` iff `a ≤ b` in every
//! coordinate.  Negative entries are permitted and represent Laurent
//! monomials; operations that require honest ring elements reject them.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::Serialize;

/// Exponent vector of a (Laurent) monomial.
///
/// Serializes as a bare integer array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ExponentVector {
    /// One integer exponent per variable.
    pub entries: Vec<i64>,
}

impl ExponentVector {
    /// Builds an exponent vector from its entries.
    pub fn new(entries: Vec<i64>) -> Self {
        ExponentVector { entries }
    }

    /// The zero vector (the monomial `1`) in `n` variables.
    pub fn zeros(n: usize) -> Self {
        ExponentVector { entries: vec![0; n] }
    }

    /// The `i`-th unit vector (the variable `x_i`) in `n` variables.
    ///
    /// # Panics
    /// Panics if `i >= n`.
    pub fn unit(n: usize, i: usize) -> Self {
        assert!(i < n, "unit vector index out of range");
        let mut entries = vec![0; n];
        entries[i] = 1;
        ExponentVector { entries }
    }

    /// Number of variables.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// True when there are no variables at all.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// True when every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// True when every entry is nonnegative (an honest monomial of the ring).
    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|&e| e >= 0)
    }

    /// Componentwise divisibility: `self` divides `other`.
    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    /// Sum of the entries (total degree of the monomial).
    pub fn total_degree(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// Exact inner product with an integer weight vector.
    pub fn dot(&self, weight: &Self) -> i64 {
        debug_assert_eq!(self.len(), weight.len());
        self.entries
            .iter()
            .zip(&weight.entries)
            .map(|(a, w)| {
                a.checked_mul(*w)
                    .expect("exponent inner product overflows i64")
            })
            .fold(0i64, |acc, t| {
                acc.checked_add(t).expect("exponent inner product overflows i64")
            })
    }

    /// Componentwise maximum (the lcm of the two monomials).
    pub fn lcm(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// Componentwise difference clamped to zero in the given coordinates.
    ///
    /// Coordinates listed in `clamp` are truncated at zero after subtraction;
    /// the rest keep their (possibly negative) value.
    pub fn sub_clamped(&self, other: &Self, clamp: &[bool]) -> Self {
        debug_assert_eq!(self.len(), other.len());
        debug_assert_eq!(self.len(), clamp.len());
        ExponentVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .zip(clamp)
                .map(|((a, b), c)| if *c { (a - b).max(0) } else { a - b })
                .collect(),
        }
    }

    /// Scales every entry by an integer (negative scalars produce Laurent
    /// exponents).
    pub fn scale(&self, k: i64) -> Self {
        ExponentVector {
            entries: self.entries.iter().map(|e| e * k).collect(),
        }
    }

    /// Indices of the strictly positive entries.
    pub fn support(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Renders the monomial with the given variable names, e.g. `x^2*y`.
    ///
    /// The empty product renders as `1`; exponent one omits the caret.
    pub fn format_monomial(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.len(), "variable name count mismatch");
        let mut parts = Vec::new();
        for (i, &e) in self.entries.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].to_string()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl Add for &ExponentVector {
    type Output = ExponentVector;

    fn add(self, rhs: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.len(), rhs.len());
        ExponentVector {
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ExponentVector {
    type Output = ExponentVector;

    fn sub(self, rhs: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.len(), rhs.len());
        ExponentVector {
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &ExponentVector {
    type Output = ExponentVector;

    fn neg(self) -> ExponentVector {
        ExponentVector {
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Removes componentwise-dominated vectors and duplicates; sorts the survivors
/// lexicographically descending, the canonical generator order.
pub fn minimal_elements(mut v: Vec<ExponentVector>) -> Vec<ExponentVector> {
    v.sort();
    v.dedup();
    let mut keep = vec![true; v.len()];
    for i in 0..v.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..v.len() {
            if i != j && keep[j] && v[j].divides(&v[i]) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut out: Vec<ExponentVector> = v
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(e, _)| e)
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}
