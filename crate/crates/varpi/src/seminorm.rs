//! Seminorms of the Tate ring `A[1/ϖ]` for a monomial pseudo-uniformizer.
//!
//! The data of the ring is a variable count together with the exponent `a` of
//! the monomial `ϖ = x^a`.  Elements are Laurent polynomials whose negative
//! exponents are confined to the support of `a`.  Three seminorms are
//! computed exactly in log space: the ϖ-adic seminorm `‖f‖ = 2^(−n)` with
//! `n` the largest integer such that `f ∈ ϖⁿA`; the spectral seminorm, the
//! maximum of `f`'s values at the finitely many boundary valuations (one per
//! support variable, normalized so `v(ϖ) = 1`); and the generalized gauge of
//! a monomial submonoid, which on monomial arguments recovers the spectral
//! seminorm.  The power-limit `‖f^m‖^{1/m}` is bracketed against the spectral
//! value along doubling powers, certifying the limit formula on concrete
//! inputs.

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::ideal::MonomialIdeal;
use crate::logvalue::LogValue;
use crate::poly::Polynomial;
use crate::rees::MonomialValuation;
use crate::scalar::{rat_int, ExtRat, Rational};
use crate::Verdict;

/// A polynomial ring together with a monomial pseudo-uniformizer `ϖ = x^a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TateData {
    /// Ambient variable count.
    pub vars: usize,
    /// Exponent of the pseudo-uniformizer: nonnegative and nonzero.
    pub omega: ExponentVector,
}

impl TateData {
    /// Builds the ring data, rejecting unit or zero pseudo-uniformizers.
    pub fn new(vars: usize, omega: ExponentVector) -> Result<Self> {
        if omega.len() != vars {
            return Err(Error::DimensionMismatch { expected: vars, found: omega.len() });
        }
        if !omega.is_nonnegative() {
            return Err(Error::invalid("the pseudo-uniformizer must lie in the base ring"));
        }
        if omega.is_zero() {
            return Err(Error::invalid("the pseudo-uniformizer must be a non-unit"));
        }
        Ok(TateData { vars, omega })
    }

    /// Indices of the variables dividing the pseudo-uniformizer.
    pub fn support(&self) -> Vec<usize> {
        self.omega.support()
    }

    /// The principal ideal `(ϖ)`.
    pub fn omega_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::principal(self.omega.clone()).expect("omega validated at construction")
    }

    /// The pseudo-uniformizer as a polynomial.
    pub fn omega_polynomial(&self) -> Polynomial {
        Polynomial::monomial(self.vars, self.omega.clone(), rat_int(1))
    }

    /// The boundary valuations: for each support variable `i` the `x_i`-order
    /// scaled by `1/a_i`, so every one of them gives `ϖ` the value `1/2`.
    ///
    /// Ordered by ascending weight, matching the facet order of the Newton
    /// polyhedron of `(ϖ)`.
    pub fn boundary_valuations(&self) -> Vec<MonomialValuation> {
        let mut vals: Vec<MonomialValuation> = self
            .omega
            .entries
            .iter()
            .enumerate()
            .filter(|&(_, &a)| a > 0)
            .map(|(i, &a)| MonomialValuation {
                weight: ExponentVector::unit(self.vars, i),
                normalizer: a,
            })
            .collect();
        vals.sort();
        vals
    }

    /// Checks that a Laurent exponent lies in `A[1/ϖ]`: negative entries only
    /// where the pseudo-uniformizer has positive exponent.
    pub fn validate_exponent(&self, b: &ExponentVector) -> Result<()> {
        if b.len() != self.vars {
            return Err(Error::DimensionMismatch { expected: self.vars, found: b.len() });
        }
        for (i, (&bi, &ai)) in b.entries.iter().zip(&self.omega.entries).enumerate() {
            if bi < 0 && ai == 0 {
                return Err(Error::InvalidLaurentSupport { var: i });
            }
        }
        Ok(())
    }

    /// Checks that every term of `f` lies in `A[1/ϖ]`.
    pub fn validate_polynomial(&self, f: &Polynomial) -> Result<()> {
        if f.vars != self.vars {
            return Err(Error::DimensionMismatch { expected: self.vars, found: f.vars });
        }
        for b in f.exponents() {
            self.validate_exponent(b)?;
        }
        Ok(())
    }
}

/// The ϖ-adic seminorm `‖f‖ = 2^(−n)` where `n` is the largest integer with
/// `f ∈ ϖⁿA`; the zero polynomial has value `0`.
///
/// On a monomial `x^b` the exponent is `min_i ⌊b_i / a_i⌋` over the support
/// of `a` (floor division, so Laurent input yields negative exponents); on a
/// sum it is the minimum over the terms.
pub fn adic_seminorm(data: &TateData, f: &Polynomial) -> Result<LogValue> {
    data.validate_polynomial(f)?;
    let supp = data.support();
    let exponent = f
        .exponents()
        .map(|b| {
            supp.iter()
                .map(|&i| b.entries[i].div_euclid(data.omega.entries[i]))
                .min()
                .expect("nonempty support")
        })
        .min();
    Ok(match exponent {
        Some(n) => LogValue::from_int_exponent(n),
        None => LogValue::zero(),
    })
}

/// The spectral seminorm as the maximum over the boundary valuations: the
/// exponent is `min` over support variables `i` of `(x_i`-order of `f)/a_i`.
pub fn spectral_rees(data: &TateData, f: &Polynomial) -> Result<LogValue> {
    data.validate_polynomial(f)?;
    let exponent = data
        .boundary_valuations()
        .iter()
        .map(|v| v.value_polynomial(f))
        .min()
        .expect("nonempty support");
    Ok(LogValue::from_exponent(exponent))
}

/// Certified bracket for the power limit `lim_m ‖f^m‖^{1/m}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralBracket {
    /// The limit itself, computed by [`spectral_rees`].
    pub lower: LogValue,
    /// Best upper bound `min_m ‖f^m‖^{1/m}` over the evaluated powers.
    pub upper: LogValue,
    /// First evaluated power at which the upper bound reaches the limit
    /// exactly, `None` when no evaluated power does.
    pub m_star: Option<u32>,
}

impl SpectralBracket {
    /// Whether the power sequence attained the limit exactly.
    pub fn is_closed(&self) -> bool {
        self.m_star.is_some()
    }
}

/// Evaluates the power limit `‖f^m‖^{1/m}` along the doubling sequence
/// `m = 1, 2, 4, …` up to `max_power` and brackets it against the spectral
/// seminorm.
///
/// The doubling sequence is cofinal, so its infimum is the full limit; the
/// bracket closes exactly whenever some evaluated power attains it.
pub fn spectral_limit(data: &TateData, f: &Polynomial, max_power: u32) -> Result<SpectralBracket> {
    if max_power == 0 {
        return Err(Error::invalid("the power limit needs at least one power"));
    }
    let lower = spectral_rees(data, f)?;
    if f.is_zero() {
        return Ok(SpectralBracket {
            lower: LogValue::zero(),
            upper: LogValue::zero(),
            m_star: Some(1),
        });
    }
    let mut power = f.clone();
    let mut m = 1u32;
    let mut upper: Option<LogValue> = None;
    let mut m_star = None;
    loop {
        let norm = adic_seminorm(data, &power)?;
        let candidate = norm.root(i64::from(m));
        debug_assert!(lower <= candidate, "power bound fell below the limit");
        if upper.as_ref().is_none_or(|u| candidate < *u) {
            upper = Some(candidate.clone());
        }
        if candidate == lower {
            m_star = Some(m);
            break;
        }
        if m > max_power / 2 {
            break;
        }
        power = &power * &power;
        m *= 2;
    }
    Ok(SpectralBracket {
        lower,
        upper: upper.expect("at least one power evaluated"),
        m_star,
    })
}

/// A monomial submonoid of `A` serving as the unit-ball data of a gauge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GaugeMonoid {
    /// All monomials of the base ring.
    RingMonomials,
    /// The monomials of a fixed ideal containing the pseudo-uniformizer.
    IdealMonomials(MonomialIdeal),
}

impl GaugeMonoid {
    /// The monoid of all monomials of `A`.
    pub fn ring() -> Self {
        GaugeMonoid::RingMonomials
    }

    /// The monoid of monomials of `ideal`, which must contain `ϖ` (this is
    /// the openness half of being a weak pair of definition; boundedness is
    /// automatic for subsets of `A`).
    pub fn ideal(data: &TateData, ideal: MonomialIdeal) -> Result<Self> {
        if ideal.vars != data.vars {
            return Err(Error::DimensionMismatch { expected: data.vars, found: ideal.vars });
        }
        if !ideal.contains_monomial(&data.omega)? {
            return Err(Error::NotOpen);
        }
        Ok(GaugeMonoid::IdealMonomials(ideal))
    }
}

/// The generalized gauge of the monoid at a monomial argument `x^b`:
/// `sup { n/m : m ≥ 1, n ∈ ℤ, x^{mb} ∈ ϖⁿ·X₀ }`, as a value `2^(−sup)`.
///
/// For either monoid kind the supremum is `min_i b_i / a_i` over the support
/// of `a`, reached through any generator whose support outside `supp(a)` is
/// covered by `b`; at least one such generator exists because `ϖ ∈ X₀`.
pub fn gauge(data: &TateData, monoid: &GaugeMonoid, b: &ExponentVector) -> Result<LogValue> {
    data.validate_exponent(b)?;
    if let GaugeMonoid::IdealMonomials(ideal) = monoid {
        let usable = ideal.gens.iter().any(|g| {
            g.entries
                .iter()
                .enumerate()
                .all(|(i, &gi)| gi == 0 || data.omega.entries[i] > 0 || b.entries[i] > 0)
        });
        assert!(usable, "a monoid containing the pseudo-uniformizer always has a usable generator");
    }
    let exponent = data
        .support()
        .iter()
        .map(|&i| Rational::new(b.entries[i].into(), data.omega.entries[i].into()))
        .min()
        .expect("nonempty support");
    Ok(LogValue::from_rational_exponent(exponent))
}

/// Membership of `f` in the arc-closure of `(ϖⁿ)`: true exactly when the
/// spectral seminorm of `f` is at most `2^(−n)`.
pub fn arc_member(data: &TateData, n: i64, f: &Polynomial) -> Result<bool> {
    Ok(spectral_rees(data, f)? <= LogValue::from_int_exponent(n))
}

/// Checks that a finite set `S` of valuations is a boundary for the
/// arc-closures of the ideals `(ϖⁿ)`: over the given corpus and levels,
/// membership in the arc-closure must coincide with `v(f) ≤ 2^(−n)` for all
/// `v ∈ S`.  Returns the first `(f, n)` where the two sides disagree, in
/// corpus-major order.
pub fn is_boundary(
    data: &TateData,
    s: &[MonomialValuation],
    corpus: &[Polynomial],
    levels: &[i64],
) -> Result<Verdict<(Polynomial, i64)>> {
    if s.is_empty() {
        return Err(Error::invalid("a boundary candidate must be a nonempty set of valuations"));
    }
    for f in corpus {
        data.validate_polynomial(f)?;
        for &n in levels {
            let arc = arc_member(data, n, f)?;
            let level = ExtRat::from_int(n);
            let through_s = s.iter().all(|v| v.value_polynomial(f) >= level);
            if arc != through_s {
                return Ok(Verdict::Witness((f.clone(), n)));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Whether `f` is power-bounded in the Tate ring: spectral value at most `1`.
pub fn power_bounded(data: &TateData, f: &Polynomial) -> Result<bool> {
    Ok(spectral_rees(data, f)? <= LogValue::one())
}

/// Whether `f` is topologically nilpotent: spectral value strictly below `1`.
pub fn topologically_nilpotent(data: &TateData, f: &Polynomial) -> Result<bool> {
    Ok(spectral_rees(data, f)? < LogValue::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rees::rees_valuations;
    use crate::scalar::{rat, rat_int};

    fn ev(entries: &[i64]) -> ExponentVector {
        ExponentVector::new(entries.to_vec())
    }

    fn data(omega: &[i64]) -> TateData {
        TateData::new(omega.len(), ev(omega)).unwrap()
    }

    fn mono(vars: usize, b: &[i64]) -> Polynomial {
        Polynomial::monomial(vars, ev(b), rat_int(1))
    }

    #[test]
    fn construction_rejects_degenerate_uniformizers() {
        assert!(TateData::new(2, ev(&[1, 1])).is_ok());
        assert!(TateData::new(2, ev(&[0, 0])).is_err());
        assert!(TateData::new(2, ev(&[-1, 1])).is_err());
        assert!(TateData::new(2, ev(&[1])).is_err());
    }

    #[test]
    fn laurent_support_validation() {
        let d = data(&[1, 0]);
        assert!(d.validate_exponent(&ev(&[-3, 0])).is_ok());
        assert_eq!(
            d.validate_exponent(&ev(&[0, -1])),
            Err(Error::InvalidLaurentSupport { var: 1 })
        );
        assert!(d.validate_polynomial(&mono(2, &[-1, 2])).is_ok());
        assert!(d.validate_polynomial(&mono(2, &[1, -2])).is_err());
    }

    #[test]
    fn adic_frozen_values() {
        let d = data(&[1, 1]);
        assert_eq!(
            adic_seminorm(&d, &d.omega_polynomial()).unwrap(),
            LogValue::from_int_exponent(1)
        );
        assert_eq!(adic_seminorm(&d, &mono(2, &[1, 0])).unwrap(), LogValue::one());
        let sq = data(&[2]);
        assert_eq!(adic_seminorm(&sq, &mono(1, &[5])).unwrap(), LogValue::from_int_exponent(2));
        // Floor division on Laurent input: x^(-3) = ϖ^(-2)·x with ϖ = x².
        assert_eq!(adic_seminorm(&sq, &mono(1, &[-3])).unwrap(), LogValue::from_int_exponent(-2));
        assert_eq!(
            adic_seminorm(&d, &mono(2, &[1, -1])).unwrap(),
            LogValue::from_int_exponent(-1)
        );
        assert_eq!(adic_seminorm(&d, &Polynomial::zero(2)).unwrap(), LogValue::zero());
        // A sum takes the worst (largest) term value.
        let f = &mono(2, &[1, 1]) + &mono(2, &[3, 3]);
        assert_eq!(adic_seminorm(&d, &f).unwrap(), LogValue::from_int_exponent(1));
        assert!(adic_seminorm(&data(&[1, 0]), &mono(2, &[0, -1])).is_err());
    }

    #[test]
    fn spectral_frozen_values() {
        let d = data(&[1, 1]);
        for n in 1..=4i64 {
            let p = d.omega_polynomial().pow(n as u32);
            assert_eq!(spectral_rees(&d, &p).unwrap(), LogValue::from_int_exponent(n));
        }
        // ϖ = xy: the x-order of x² + y³ is 0, so the spectral value is 1.
        let f = &mono(2, &[2, 0]) + &mono(2, &[0, 3]);
        assert_eq!(spectral_rees(&d, &f).unwrap(), LogValue::one());
        let d12 = data(&[1, 2]);
        assert_eq!(
            spectral_rees(&d12, &mono(2, &[1, 1])).unwrap(),
            LogValue::from_rational_exponent(rat(1, 2))
        );
        // Laurent element x/y with ϖ = xy has spectral value 2.
        assert_eq!(
            spectral_rees(&d, &mono(2, &[1, -1])).unwrap(),
            LogValue::from_int_exponent(-1)
        );
        assert_eq!(spectral_rees(&d, &Polynomial::zero(2)).unwrap(), LogValue::zero());
    }

    #[test]
    fn boundary_valuations_match_rees_route() {
        for omega in [&[1i64, 1][..], &[1, 2], &[2, 0], &[3, 1], &[2, 3]] {
            let d = data(omega);
            let direct = d.boundary_valuations();
            let through_facets = rees_valuations(&d.omega_ideal()).unwrap();
            assert_eq!(direct, through_facets, "omega = {omega:?}");
        }
        let d3 = data(&[1, 0, 2]);
        assert_eq!(d3.boundary_valuations(), rees_valuations(&d3.omega_ideal()).unwrap());
    }

    #[test]
    fn spectral_below_adic() {
        let cases = [
            (data(&[2]), mono(1, &[1])),
            (data(&[1, 1]), &mono(2, &[2, 0]) + &mono(2, &[0, 3])),
            (data(&[1, 2]), mono(2, &[1, 1])),
            (data(&[1, 1]), mono(2, &[1, -1])),
        ];
        for (d, f) in &cases {
            let spectral = spectral_rees(d, f).unwrap();
            let adic = adic_seminorm(d, f).unwrap();
            assert!(spectral <= adic, "spectral exceeded adic for {f:?}");
        }
    }

    #[test]
    fn limit_bracket_frozen() {
        let d = data(&[1, 2]);
        // ‖xy‖ = 1 but ‖(xy)²‖ = ‖x²y²‖ = 2^(−1): the bracket closes at m=2.
        let b = spectral_limit(&d, &mono(2, &[1, 1]), 2).unwrap();
        assert_eq!(b.lower, LogValue::from_rational_exponent(rat(1, 2)));
        assert_eq!(b.upper, b.lower);
        assert_eq!(b.m_star, Some(2));
        // Cut short at M=1 the bracket stays open with upper bound 1.
        let b1 = spectral_limit(&d, &mono(2, &[1, 1]), 1).unwrap();
        assert_eq!(b1.upper, LogValue::one());
        assert_eq!(b1.m_star, None);
        let omega = spectral_limit(&d, &d.omega_polynomial(), 8).unwrap();
        assert_eq!(omega.m_star, Some(1));
        assert_eq!(omega.lower, LogValue::from_int_exponent(1));
        let zero = spectral_limit(&d, &Polynomial::zero(2), 4).unwrap();
        assert_eq!(zero.lower, LogValue::zero());
        assert_eq!(zero.m_star, Some(1));
        assert!(spectral_limit(&d, &mono(2, &[1, 1]), 0).is_err());
    }

    #[test]
    fn limit_bracket_can_stay_open_along_doubling() {
        // ϖ = xy³, f = xy: the limit exponent is 1/3, but ⌊m/3⌋/m misses it
        // at every power of two, so the bracket never closes.
        let d = data(&[1, 3]);
        let b = spectral_limit(&d, &mono(2, &[1, 1]), 64).unwrap();
        assert_eq!(b.lower, LogValue::from_rational_exponent(rat(1, 3)));
        assert_eq!(b.upper, LogValue::from_rational_exponent(rat(21, 64)));
        assert_eq!(b.m_star, None);
        assert!(b.lower <= b.upper);
    }

    #[test]
    fn gauge_frozen_values() {
        let d = data(&[1, 2]);
        let ring = GaugeMonoid::ring();
        assert_eq!(gauge(&d, &ring, &ev(&[0, 0])).unwrap(), LogValue::one());
        assert_eq!(
            gauge(&d, &ring, &ev(&[1, 1])).unwrap(),
            LogValue::from_rational_exponent(rat(1, 2))
        );
        // Shift property: multiplying the argument by ϖ multiplies the gauge
        // by 1/2, i.e. adds one to the exponent.
        for b in [[0i64, 0], [1, 1], [3, 0], [1, -1], [0, -2]] {
            let plain = gauge(&d, &ring, &ev(&b)).unwrap();
            let shifted = gauge(&d, &ring, &(&ev(&b) + &d.omega)).unwrap();
            assert_eq!(shifted, LogValue::from_int_exponent(1) * plain);
        }
        assert!(gauge(&data(&[1, 0]), &ring, &ev(&[0, -1])).is_err());
    }

    #[test]
    fn gauge_ideal_monoid() {
        let d = data(&[1, 1]);
        let ideal = MonomialIdeal::new(2, vec![ev(&[1, 1]), ev(&[3, 0])]).unwrap();
        let monoid = GaugeMonoid::ideal(&d, ideal).unwrap();
        for b in [[1i64, 0], [2, 3], [0, 0], [1, -1]] {
            assert_eq!(
                gauge(&d, &monoid, &ev(&b)).unwrap(),
                gauge(&d, &GaugeMonoid::ring(), &ev(&b)).unwrap()
            );
        }
        // The monoid must contain the pseudo-uniformizer.
        let closed_off = MonomialIdeal::new(2, vec![ev(&[3, 0]), ev(&[0, 5])]).unwrap();
        assert_eq!(GaugeMonoid::ideal(&d, closed_off), Err(Error::NotOpen));
        // A partially usable generator set still evaluates through the
        // generator dividing ϖ.
        let dx = data(&[1, 0]);
        let mixed = GaugeMonoid::ideal(&dx, MonomialIdeal::new(2, vec![ev(&[1, 0]), ev(&[0, 2])]).unwrap())
            .unwrap();
        assert_eq!(gauge(&dx, &mixed, &ev(&[3, 0])).unwrap(), LogValue::from_int_exponent(3));
    }

    #[test]
    fn gauge_matches_spectral_on_monomials() {
        let d = data(&[1, 2]);
        let ring = GaugeMonoid::ring();
        for b0 in -2..=3i64 {
            for b1 in -2..=3i64 {
                let b = ev(&[b0, b1]);
                let via_gauge = gauge(&d, &ring, &b).unwrap();
                let via_spectral = spectral_rees(&d, &mono(2, &[b0, b1])).unwrap();
                assert_eq!(via_gauge, via_spectral, "b = ({b0},{b1})");
            }
        }
    }

    #[test]
    fn spectral_is_power_multiplicative() {
        let d = data(&[1, 2]);
        let f = &mono(2, &[2, 0]) + &mono(2, &[0, 3]);
        let base = spectral_rees(&d, &f).unwrap();
        for k in [2u32, 3, 5] {
            let powered = spectral_rees(&d, &f.pow(k)).unwrap();
            assert_eq!(powered, base.pow(i64::from(k)), "k = {k}");
        }
    }

    #[test]
    fn spectral_seminorm_axioms() {
        let d = data(&[1, 1]);
        let samples = [
            mono(2, &[1, 0]),
            mono(2, &[0, 2]),
            &mono(2, &[2, 0]) + &mono(2, &[0, 3]),
            &mono(2, &[1, 1]) - &mono(2, &[0, 1]),
            mono(2, &[1, -1]),
        ];
        for f in &samples {
            for g in &samples {
                let vf = spectral_rees(&d, f).unwrap();
                let vg = spectral_rees(&d, g).unwrap();
                let sum = spectral_rees(&d, &(f + g)).unwrap();
                let prod = spectral_rees(&d, &(f * g)).unwrap();
                assert!(sum <= vf.clone().max(vg.clone()), "ultrametric failed");
                assert!(prod <= vf * vg, "submultiplicativity failed");
            }
        }
        // ϖ acts multiplicatively: scaling by ϖ halves the value.
        let f = &mono(2, &[2, 0]) + &mono(2, &[0, 3]);
        let scaled = spectral_rees(&d, &(&f * &d.omega_polynomial())).unwrap();
        assert_eq!(scaled, LogValue::from_int_exponent(1) * spectral_rees(&d, &f).unwrap());
    }

    #[test]
    fn arc_membership() {
        let d = data(&[1, 1]);
        assert!(arc_member(&d, 2, &d.omega_polynomial().pow(2)).unwrap());
        assert!(!arc_member(&d, 1, &mono(2, &[2, 0])).unwrap());
        assert!(arc_member(&d, 5, &Polynomial::zero(2)).unwrap());
        assert!(arc_member(&d, -3, &mono(2, &[1, -1])).unwrap());
    }

    #[test]
    fn rees_set_is_a_boundary_and_proper_subsets_are_not() {
        let d = data(&[1, 1]);
        let corpus = vec![
            mono(2, &[1, 0]),
            mono(2, &[0, 1]),
            &mono(2, &[1, 0]) + &mono(2, &[0, 1]),
            mono(2, &[2, 3]),
        ];
        let levels = [0, 1, 2, 3];
        let full = d.boundary_valuations();
        assert!(is_boundary(&d, &full, &corpus, &levels).unwrap().passed());
        // Dropping the y-order valuation leaves x undetected; dropping the
        // x-order valuation leaves y undetected.
        let only_y = vec![MonomialValuation { weight: ev(&[0, 1]), normalizer: 1 }];
        assert_eq!(
            is_boundary(&d, &only_y, &corpus, &levels).unwrap().witness(),
            Some(&(mono(2, &[0, 1]), 1))
        );
        let only_x = vec![MonomialValuation { weight: ev(&[1, 0]), normalizer: 1 }];
        assert_eq!(
            is_boundary(&d, &only_x, &corpus, &levels).unwrap().witness(),
            Some(&(mono(2, &[1, 0]), 1))
        );
        // Supersets of a boundary remain boundaries.
        let mut widened = full.clone();
        widened.push(MonomialValuation { weight: ev(&[1, 1]), normalizer: 2 });
        assert!(is_boundary(&d, &widened, &corpus, &levels).unwrap().passed());
        assert!(is_boundary(&d, &[], &corpus, &levels).is_err());
    }

    #[test]
    fn power_boundedness() {
        let d = data(&[1, 1]);
        assert!(!power_bounded(&d, &mono(2, &[1, -1])).unwrap());
        for f in [mono(2, &[1, 0]), mono(2, &[0, 1]), &mono(2, &[1, 0]) + &mono(2, &[0, 1])] {
            assert!(power_bounded(&d, &f).unwrap());
        }
        assert!(topologically_nilpotent(&d, &d.omega_polynomial()).unwrap());
        assert!(power_bounded(&d, &Polynomial::one(2)).unwrap());
        assert!(!topologically_nilpotent(&d, &Polynomial::one(2)).unwrap());
        assert!(power_bounded(&d, &Polynomial::zero(2)).unwrap());
        assert!(topologically_nilpotent(&d, &Polynomial::zero(2)).unwrap());
    }
}
