//! Rees valuations of monomial ideals and the asymptotic order function.
//!
//! Every positive-offset facet `⟨w, b⟩ ≥ c` of the Newton polyhedron gives a
//! monomial valuation `v(x^b) = ⟨w, b⟩ / c`, normalized so the ideal has
//! value exactly one.  These finitely many valuations compute the asymptotic
//! order: `samuel(I, f) = min_v v(f) = lim_m ord_I(f^m) / m`.  The limit is
//! also approached from below directly on powers of `f` (no polyhedra
//! involved) by [`samuel_bruteforce`], which certifies the fast route by
//! reporting the first power at which the sequence `ord_I(f^m)/m` attains it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::ideal::MonomialIdeal;
use crate::linalg::LinearProgram;
use crate::poly::Polynomial;
use crate::polyhedron::NewtonPolyhedron;
use crate::scalar::{rat_int, ExtRat, Rational};

/// A monomial valuation `v(x^b) = ⟨weight, b⟩ / normalizer`, scaled so that
/// the defining ideal has value one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MonomialValuation {
    /// Primitive nonnegative weight vector.
    pub weight: ExponentVector,
    /// Value of the defining ideal under the unnormalized weight.
    pub normalizer: i64,
}

impl MonomialValuation {
    /// Value of a single monomial.
    pub fn value_monomial(&self, b: &ExponentVector) -> Rational {
        Rational::new(self.weight.dot(b).into(), self.normalizer.into())
    }

    /// Value of a polynomial: the minimum over its terms, `+∞` for zero.
    pub fn value_polynomial(&self, f: &Polynomial) -> ExtRat {
        f.exponents()
            .map(|b| ExtRat::Finite(self.value_monomial(b)))
            .min()
            .unwrap_or(ExtRat::Infinite)
    }
}

/// The Rees valuations of a proper nonzero monomial ideal: one per
/// positive-offset facet of the Newton polyhedron, in facet order (normals
/// ascending).
///
/// The zero and unit ideals are rejected.
pub fn rees_valuations(ideal: &MonomialIdeal) -> Result<Vec<MonomialValuation>> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let np = NewtonPolyhedron::of_ideal(ideal)?;
    Ok(np
        .facets
        .iter()
        .filter(|f| f.offset > 0)
        .map(|f| MonomialValuation { weight: f.normal.clone(), normalizer: f.offset })
        .collect())
}

/// Asymptotic order of `f` with respect to `I`: the common value
/// `lim_m ord_I(f^m)/m = min_v v(f)` over the Rees valuations of `I`.
///
/// Conventions: `+∞` for `f = 0`; the zero and unit ideals are rejected.
pub fn samuel(ideal: &MonomialIdeal, f: &Polynomial) -> Result<ExtRat> {
    if f.vars != ideal.vars {
        return Err(Error::DimensionMismatch { expected: ideal.vars, found: f.vars });
    }
    if !f.is_in_base_ring() {
        return Err(Error::LaurentInput);
    }
    let vals = rees_valuations(ideal)?;
    Ok(vals
        .iter()
        .map(|v| v.value_polynomial(f))
        .min()
        .unwrap_or(ExtRat::Infinite))
}

/// Membership of `f` in the integral closure of `I^k`, decided on the
/// dilated Newton polyhedron.
pub fn in_closure_of_power(ideal: &MonomialIdeal, f: &Polynomial, k: u32) -> Result<bool> {
    if f.vars != ideal.vars {
        return Err(Error::DimensionMismatch { expected: ideal.vars, found: f.vars });
    }
    if !f.is_in_base_ring() {
        return Err(Error::LaurentInput);
    }
    if f.is_zero() || k == 0 || ideal.is_unit() {
        return Ok(true);
    }
    let np = NewtonPolyhedron::of_ideal(ideal)?.scale(i64::from(k));
    Ok(f.exponents().all(|b| np.contains(b)))
}

/// Certified bracket on the asymptotic order: a lower bound computed purely
/// from powers of `f` against the polyhedral value as upper bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SamuelBracket {
    /// Best lower bound: `max_m ord_I(f^m)/m` over the computed powers
    /// (the limit is the supremum of this superadditive sequence).
    pub lower: ExtRat,
    /// The limit itself, computed on the Newton polyhedron by [`samuel`].
    pub upper: ExtRat,
    /// Smallest power at which the lower bound reaches the limit exactly,
    /// `None` when no power up to the cutoff does.
    pub m_star: Option<u32>,
}

impl SamuelBracket {
    /// Whether the power sequence attained the limit exactly.
    pub fn is_closed(&self) -> bool {
        self.m_star.is_some()
    }
}

/// Brute-force certification of `lim_m ord_I(f^m)/m`: evaluates `ord` on the
/// honest powers `f^1, …, f^max_power` and reports how the resulting lower
/// bounds compare against the polyhedral limit.
///
/// Mirrors the conventions of [`samuel`]: the bracket collapses to `+∞` for
/// `f = 0`, and the zero and unit ideals are rejected.
pub fn samuel_bruteforce(
    ideal: &MonomialIdeal,
    f: &Polynomial,
    max_power: u32,
) -> Result<SamuelBracket> {
    if max_power == 0 {
        return Err(Error::invalid("bracket needs at least one power"));
    }
    let limit = samuel(ideal, f)?;
    if f.is_zero() {
        return Ok(SamuelBracket {
            lower: ExtRat::Infinite,
            upper: ExtRat::Infinite,
            m_star: Some(1),
        });
    }
    let mut power = Polynomial::one(f.vars);
    let mut lower = ExtRat::Finite(rat_int(0));
    let mut m_star = None;
    for m in 1..=max_power {
        power = &power * f;
        let ord = match ideal.ord(&power)? {
            ExtRat::Finite(q) => q,
            ExtRat::Infinite => unreachable!("proper ideal, nonzero power"),
        };
        let low = ExtRat::Finite(&ord / rat_int(i64::from(m)));
        if low > lower {
            lower = low;
        }
        if lower == limit {
            m_star = Some(m);
            break;
        }
    }
    Ok(SamuelBracket { lower, upper: limit, m_star })
}

/// Certificate that one Rees valuation is not implied by the others: a
/// monomial `x^e` and level `d` with `u(x^e) ≥ d` for every other Rees
/// valuation `u` but `v(x^e) < d`.
///
/// Returns `None` when the ideal has a single Rees valuation (nothing to
/// compare against).  The witness is found by exact vertex enumeration:
/// minimize `⟨w_v, b⟩` over `b ≥ 0` with all other valuations at level one,
/// then clear denominators.
pub fn rees_minimality_witness(
    ideal: &MonomialIdeal,
    index: usize,
) -> Result<Option<(ExponentVector, i64)>> {
    let vals = rees_valuations(ideal)?;
    if index >= vals.len() {
        return Err(Error::NotAReesValuation);
    }
    if vals.len() == 1 {
        return Ok(None);
    }
    let n = ideal.vars;
    let mut lp = LinearProgram::new(n);
    for i in 0..n {
        let mut row = vec![rat_int(0); n];
        row[i] = rat_int(1);
        lp.add_ge(row, rat_int(0));
    }
    for (j, u) in vals.iter().enumerate() {
        if j == index {
            continue;
        }
        lp.add_ge(
            u.weight.entries.iter().map(|&v| rat_int(v)).collect(),
            rat_int(u.normalizer),
        );
    }
    let target = &vals[index];
    let objective: Vec<Rational> = target.weight.entries.iter().map(|&v| rat_int(v)).collect();
    let (point, value) = lp
        .minimize(&objective)
        .expect("region inside the orthant is pointed and nonempty");
    if value >= rat_int(target.normalizer) {
        return Ok(None);
    }
    let mut d = BigInt::one();
    for c in &point {
        d = d.lcm(c.denom());
    }
    let e = ExponentVector::new(
        point
            .iter()
            .map(|c| {
                (c * Rational::from(d.clone()))
                    .to_integer()
                    .to_i64()
                    .expect("desk-scale witness")
            })
            .collect(),
    );
    let level = d.to_i64().expect("desk-scale witness level");
    debug_assert!(e.is_nonnegative() && !point.iter().any(|c| c.is_negative()));
    Ok(Some((e, level)))
}
