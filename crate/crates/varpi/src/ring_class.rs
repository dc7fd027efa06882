//! Shilov classification of monomial pseudo-uniformizers and bounded
//! valuative probes for pluggable local-ring oracles.
//!
//! For `ϖ = x^a` in a polynomial ring, the minimal primes of `ϖ` are the
//! coordinate hyperplanes meeting its support, each localization is a
//! discrete rank-one valuation ring, and the Shilov boundary obtained by
//! specializing through those localizations is exactly the set of normalized
//! coordinate valuations — which must agree with the Rees valuations of
//! `(ϖ)` computed from the Newton polyhedron.  The valuative probe tests the
//! comparability criterion `ϖⁿ ∈ (f)` or `f ∈ (ϖⁿ)` over any local ring
//! presented as an oracle, reporting the first failing pair in enumeration
//! order.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::ideal::MonomialPrime;
use crate::poly::Polynomial;
use crate::rees::MonomialValuation;
use crate::seminorm::TateData;

/// The minimal primes of `(ϖ)`: one coordinate hyperplane `(x_i)` for each
/// variable dividing the pseudo-uniformizer.
pub fn min_primes_omega(data: &TateData) -> BTreeSet<MonomialPrime> {
    data.support().into_iter().map(MonomialPrime::single).collect()
}

/// The weakly associated primes of `(ϖ)`, computed independently of
/// [`min_primes_omega`] by witness search over the monomial-ideal calculus.
pub fn wass_omega(data: &TateData) -> Result<BTreeSet<MonomialPrime>> {
    data.omega_ideal().associated_primes()
}

/// How a ring sits relative to the Shilov-boundary theory.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShilovClass {
    /// Every weakly associated prime of `ϖ` is minimal and localizes to a
    /// rank-one valuation ring.
    Strongly,
    /// The localizations are rank-one valuation rings but some weakly
    /// associated prime is embedded.
    WeaklyOnly,
    /// Some localization fails the valuation-ring test.
    Neither,
}

impl ShilovClass {
    /// Stable name used in reports.
    pub fn as_str(&self) -> &'static str {
        match self {
            ShilovClass::Strongly => "strongly",
            ShilovClass::WeaklyOnly => "weakly-only",
            ShilovClass::Neither => "neither",
        }
    }
}

impl fmt::Display for ShilovClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The classifier's output: both prime sets, the classification, and the
/// boundary valuations (normalized so that `v(ϖ)` has exponent one).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShilovReport {
    /// Minimal primes of `(ϖ)`.
    pub min_primes: BTreeSet<MonomialPrime>,
    /// Weakly associated primes of `(ϖ)`, computed independently.
    pub wass_primes: BTreeSet<MonomialPrime>,
    /// The classification within the supported class.
    pub class: ShilovClass,
    /// The Shilov boundary via the specialization route.
    pub boundary: Vec<MonomialValuation>,
}

/// True when localizing `(ϖ)` at `p` yields the maximal ideal of a discrete
/// rank-one valuation ring: the prime is a single coordinate and the
/// localized ideal is principal with a positive order.
fn localization_is_valuation_ring(data: &TateData, p: &MonomialPrime) -> bool {
    if p.vars.len() != 1 {
        return false;
    }
    let local = data.omega_ideal().localize_at_prime(p);
    local.gens.len() == 1 && local.gens[0].total_degree() > 0
}

/// Classifies the ring `A` with pseudo-uniformizer `ϖ = x^a`.
///
/// Both prime sets are computed by independent routes so a defect in either
/// computation surfaces as a disagreement instead of being masked by the
/// known class-M answer.
pub fn classify(data: &TateData) -> Result<ShilovReport> {
    let min_primes = min_primes_omega(data);
    let wass_primes = wass_omega(data)?;
    let all_valuative = wass_primes.iter().all(|p| localization_is_valuation_ring(data, p));
    let class = if !all_valuative {
        ShilovClass::Neither
    } else if wass_primes == min_primes {
        ShilovClass::Strongly
    } else {
        ShilovClass::WeaklyOnly
    };
    Ok(ShilovReport {
        min_primes,
        wass_primes,
        class,
        boundary: data.boundary_valuations(),
    })
}

/// The Shilov boundary extracted through the specialization route: the
/// normalized coordinate valuations of the classifier.  Cross-route equality
/// with the Rees valuations of `(ϖ)` is a theorem of the supported class and
/// a standing acceptance check.
pub fn shilov_boundary(data: &TateData) -> Result<Vec<MonomialValuation>> {
    Ok(classify(data)?.boundary)
}

/// The order of `f` in the localization at the coordinate prime `(x_i)`:
/// the least `x_i`-exponent over the terms (every nonzero coefficient
/// polynomial in the remaining variables becomes a unit).  Infinite orders
/// are reported as `None` for the zero polynomial.
pub fn localized_order(f: &Polynomial, i: usize) -> Option<i64> {
    f.exponents().map(|b| b.entries[i]).min()
}

/// Membership `f ∈ (ϖⁿ)` tested through the weakly associated primes: the
/// localized order at each `(x_i)` must be at least `n·a_i`.  Equality with
/// the direct monomial-ideal membership is an exactness check on the
/// decomposition of `(ϖⁿ)`.
pub fn localization_membership(data: &TateData, f: &Polynomial, n: u32) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    for p in wass_omega(data)? {
        let &i = p.vars.iter().next().expect("primes are nonempty");
        let order = localized_order(f, i).expect("nonzero polynomial");
        if order < i64::from(n) * data.omega.entries[i] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A local ring presented operationally: an enumerator of elements up to a
/// complexity bound and a total principal-ideal membership test.  `ϖ` must
/// be a non-zero-divisor non-unit.  Oracles must be deterministic; the
/// probes run them single-threaded.
pub trait LocalRingOracle {
    /// The element representation.
    type Elem: Clone + PartialEq + fmt::Display;

    /// Identifier used in reports.
    fn name(&self) -> &str;

    /// The pseudo-uniformizer.
    fn omega(&self) -> Self::Elem;

    /// All elements up to the complexity bound, in the oracle's canonical
    /// order (degree-ascending for the built-ins).
    fn enumerate(&self, bound: u32) -> Vec<Self::Elem>;

    /// Principal-ideal membership `f ∈ (g)`.
    fn divides(&self, g: &Self::Elem, f: &Self::Elem) -> bool;

    /// Whether `f` is a unit.
    fn is_unit(&self, f: &Self::Elem) -> bool;

    /// The power `f^k`.
    fn pow(&self, f: &Self::Elem, k: u32) -> Self::Elem;
}

/// Result of a bounded valuative probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbeOutcome<E> {
    /// Every enumerated pair satisfied the comparability criterion.
    ValuativeUpToBound(u32),
    /// The first pair with `ϖⁿ ∉ (f)` and `f ∉ (ϖⁿ)`.
    Witness {
        /// The incomparable element.
        f: E,
        /// The failing power of `ϖ`.
        n: u32,
    },
}

impl<E> ProbeOutcome<E> {
    /// True when no witness was found.
    pub fn is_valuative(&self) -> bool {
        matches!(self, ProbeOutcome::ValuativeUpToBound(_))
    }
}

/// Tests the valuative criterion on every enumerated element and every
/// `n ≤ bound`: either `ϖⁿ ∈ (f)` or `f ∈ (ϖⁿ)` must hold.  Witnesses are
/// reported in enumeration order, inner loop over `n` ascending.
pub fn valuative_probe<O: LocalRingOracle>(oracle: &O, bound: u32) -> ProbeOutcome<O::Elem> {
    let omega = oracle.omega();
    for f in oracle.enumerate(bound) {
        for n in 1..=bound {
            let omega_n = oracle.pow(&omega, n);
            if !oracle.divides(&f, &omega_n) && !oracle.divides(&omega_n, &f) {
                return ProbeOutcome::Witness { f, n };
            }
        }
    }
    ProbeOutcome::ValuativeUpToBound(bound)
}

/// The rank-one refinement: the valuative probe must pass and every
/// enumerated non-unit must have a power inside `(ϖ)`, certifying that the
/// radical of `(ϖ)` exhausts the maximal ideal up to the bound.
pub fn rank_one_probe<O: LocalRingOracle>(oracle: &O, bound: u32) -> bool {
    if !valuative_probe(oracle, bound).is_valuative() {
        return false;
    }
    let omega = oracle.omega();
    oracle.enumerate(bound).iter().all(|f| {
        oracle.is_unit(f) || (1..=bound).any(|k| oracle.divides(&omega, &oracle.pow(f, k)))
    })
}

/// A monomial `x^d` in one variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct XPower(pub u32);

impl fmt::Display for XPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "1"),
            1 => write!(f, "x"),
            d => write!(f, "x^{d}"),
        }
    }
}

/// The discrete valuation ring `ℚ[x]` localized at `(x)`, with monomial
/// elements and `ϖ = x`.
#[derive(Debug, Clone, Copy, Default)]
pub struct DvrOracle;

impl LocalRingOracle for DvrOracle {
    type Elem = XPower;

    fn name(&self) -> &str {
        "dvr"
    }

    fn omega(&self) -> XPower {
        XPower(1)
    }

    fn enumerate(&self, bound: u32) -> Vec<XPower> {
        (0..=bound).map(XPower).collect()
    }

    fn divides(&self, g: &XPower, f: &XPower) -> bool {
        g.0 <= f.0
    }

    fn is_unit(&self, f: &XPower) -> bool {
        f.0 == 0
    }

    fn pow(&self, f: &XPower, k: u32) -> XPower {
        XPower(f.0 * k)
    }
}

/// A monomial `x^i·y^j` in two variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BiMonomial {
    /// Exponent of `x`.
    pub i: u32,
    /// Exponent of `y`.
    pub j: u32,
}

impl fmt::Display for BiMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mono = ExponentVector::new(vec![i64::from(self.i), i64::from(self.j)]);
        f.write_str(&mono.format_monomial(&["x", "y"]))
    }
}

/// The local ring `ℚ[x,y]` at `(x,y)` with `ϖ = x`, monomial elements
/// enumerated by total degree.  Not valuative: `x` and `y` are incomparable.
#[derive(Debug, Clone, Copy, Default)]
pub struct BivariateLocalOracle;

impl LocalRingOracle for BivariateLocalOracle {
    type Elem = BiMonomial;

    fn name(&self) -> &str {
        "bivariate"
    }

    fn omega(&self) -> BiMonomial {
        BiMonomial { i: 1, j: 0 }
    }

    fn enumerate(&self, bound: u32) -> Vec<BiMonomial> {
        let mut out = Vec::new();
        for d in 0..=bound {
            for i in (0..=d).rev() {
                out.push(BiMonomial { i, j: d - i });
            }
        }
        out
    }

    fn divides(&self, g: &BiMonomial, f: &BiMonomial) -> bool {
        g.i <= f.i && g.j <= f.j
    }

    fn is_unit(&self, f: &BiMonomial) -> bool {
        f.i == 0 && f.j == 0
    }

    fn pow(&self, f: &BiMonomial, k: u32) -> BiMonomial {
        BiMonomial { i: f.i * k, j: f.j * k }
    }
}

/// A monomial `t^d` in the semigroup ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TPower(pub u32);

impl fmt::Display for TPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "1"),
            1 => write!(f, "t"),
            d => write!(f, "t^{d}"),
        }
    }
}

/// The numerical-semigroup ring `ℚ[[t^S]]` for `S = ⟨gens⟩`, restricted to
/// monomial elements, with `ϖ = t^(min gens)`.  Membership `t^b ∈ (t^a)`
/// holds when `b − a` lies in the semigroup — unit-coefficient phenomena
/// are outside this oracle's scope.
#[derive(Debug, Clone)]
pub struct SemigroupOracle {
    gens: Vec<u32>,
    name: String,
}

impl SemigroupOracle {
    /// Builds the oracle from semigroup generators; zeros are dropped and at
    /// least one positive generator is required.
    pub fn new(gens: &[u32]) -> Result<Self> {
        let mut gens: Vec<u32> = gens.iter().copied().filter(|&g| g > 0).collect();
        gens.sort_unstable();
        gens.dedup();
        if gens.is_empty() {
            return Err(Error::invalid("a numerical semigroup needs a positive generator"));
        }
        let parts: Vec<String> = gens.iter().map(u32::to_string).collect();
        let name = format!("semigroup({})", parts.join(","));
        Ok(SemigroupOracle { gens, name })
    }

    /// Semigroup membership of `d`, decided by the coin-change recurrence.
    pub fn contains(&self, d: u32) -> bool {
        let d = d as usize;
        let mut reach = vec![false; d + 1];
        reach[0] = true;
        for v in 1..=d {
            reach[v] = self
                .gens
                .iter()
                .any(|&g| (g as usize) <= v && reach[v - g as usize]);
        }
        reach[d]
    }
}

impl LocalRingOracle for SemigroupOracle {
    type Elem = TPower;

    fn name(&self) -> &str {
        &self.name
    }

    fn omega(&self) -> TPower {
        TPower(self.gens[0])
    }

    fn enumerate(&self, bound: u32) -> Vec<TPower> {
        (0..=bound).filter(|&d| self.contains(d)).map(TPower).collect()
    }

    fn divides(&self, g: &TPower, f: &TPower) -> bool {
        f.0 >= g.0 && self.contains(f.0 - g.0)
    }

    fn is_unit(&self, f: &TPower) -> bool {
        f.0 == 0
    }

    fn pow(&self, f: &TPower, k: u32) -> TPower {
        TPower(f.0 * k)
    }
}
