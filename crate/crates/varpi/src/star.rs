//! Fractional monomial ideals of `A[1/ϖ]` and their closure calculus.
//!
//! A fractional ideal is an open bounded `A`-submodule of `A[1/ϖ]`; in the
//! monomial class every such module is `ϖ^(−m)·J` for an integral monomial
//! ideal `J` that contains a monomial supported inside `supp(a)` (openness).
//! The residual `(I : J)` is computed by a shifted colon in the Laurent
//! exponent lattice, giving the `v`-closure `I_v = A : (A : I)`, the divisor
//! monoid with its lattice order, and a small registry of star operations
//! whose axioms are checked instance-wise — including one deliberately broken
//! operation that violates exactly the multiplicativity axiom.

use std::fmt;

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::parse;
use crate::poly::Polynomial;
use crate::polyhedron::integral_closure;
use crate::seminorm::TateData;
use crate::Verdict;

/// The fractional monomial ideal `ϖ^(−shift)·ideal`, kept in canonical form:
/// the shift is the least integer for which the integral part stays inside
/// `A`, so equal modules have equal representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FractionalMonomialIdeal {
    /// Power of `ϖ` dividing the integral part; may be negative.
    pub shift: i64,
    /// The integral part, a monomial ideal of `A`.
    pub ideal: MonomialIdeal,
}

impl FractionalMonomialIdeal {
    /// Builds `ϖ^(−shift)·ideal` and canonicalizes the representation.
    ///
    /// Rejects modules that are not open: the ideal must contain a monomial
    /// supported inside the support of the pseudo-uniformizer (equivalently,
    /// some power of `ϖ` lies in the module).
    pub fn new(data: &TateData, shift: i64, ideal: MonomialIdeal) -> Result<Self> {
        if ideal.vars != data.vars {
            return Err(Error::DimensionMismatch { expected: data.vars, found: ideal.vars });
        }
        let supp = data.support();
        let open = ideal
            .gens
            .iter()
            .any(|g| g.support().iter().all(|i| supp.contains(i)));
        if !open {
            return Err(Error::NotOpen);
        }
        let mut shift = shift;
        let mut gens = ideal.gens;
        while gens.iter().all(|g| data.omega.divides(g)) {
            gens = gens.iter().map(|g| g - &data.omega).collect();
            shift -= 1;
        }
        Ok(FractionalMonomialIdeal {
            shift,
            ideal: MonomialIdeal::new(data.vars, gens)?,
        })
    }

    /// The full ring `A` as a fractional ideal.
    pub fn unit(data: &TateData) -> Self {
        FractionalMonomialIdeal { shift: 0, ideal: MonomialIdeal::unit(data.vars) }
    }

    /// An integral monomial ideal viewed as a fractional ideal.
    pub fn from_integral(data: &TateData, ideal: MonomialIdeal) -> Result<Self> {
        FractionalMonomialIdeal::new(data, 0, ideal)
    }

    /// The principal module `ϖ^k·A`.
    pub fn omega_power(data: &TateData, k: i64) -> Self {
        FractionalMonomialIdeal { shift: -k, ideal: MonomialIdeal::unit(data.vars) }
    }

    /// Parses the notation `w^-2 * (x^3, x*y)` (or a bare ideal) where `w`
    /// stands for the pseudo-uniformizer.
    pub fn parse(data: &TateData, names: &[&str], input: &str) -> Result<Self> {
        let (k, ideal) = parse::parse_fractional_raw(input, names)?;
        FractionalMonomialIdeal::new(data, -k, ideal)
    }

    /// True when the module lies inside `A`.
    pub fn is_integral(&self) -> bool {
        self.shift <= 0
    }

    /// Membership of the Laurent monomial `x^b`.
    pub fn contains_exponent(&self, data: &TateData, b: &ExponentVector) -> Result<bool> {
        data.validate_exponent(b)?;
        let shifted = b + &data.omega.scale(self.shift);
        if !shifted.is_nonnegative() {
            return Ok(false);
        }
        self.ideal.contains_monomial(&shifted)
    }

    /// Containment of fractional ideals.
    pub fn contains(&self, data: &TateData, other: &Self) -> Result<bool> {
        for g in &other.ideal.gens {
            let b = g - &data.omega.scale(other.shift);
            if !self.contains_exponent(data, &b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Product of fractional ideals.
    pub fn product(&self, data: &TateData, other: &Self) -> Result<Self> {
        FractionalMonomialIdeal::new(
            data,
            self.shift + other.shift,
            self.ideal.product(&other.ideal)?,
        )
    }

    /// Sum of fractional ideals.
    pub fn sum(&self, data: &TateData, other: &Self) -> Result<Self> {
        let (a, b) = align(data, self, other);
        let shift = self.shift.max(other.shift);
        FractionalMonomialIdeal::new(data, shift, a.sum(&b)?)
    }

    /// Intersection of fractional ideals.
    pub fn intersect(&self, data: &TateData, other: &Self) -> Result<Self> {
        let (a, b) = align(data, self, other);
        let shift = self.shift.max(other.shift);
        FractionalMonomialIdeal::new(data, shift, a.intersect(&b)?)
    }

    /// Renders as `w^-2 * (x^3, x*y)`; the `w`-factor is omitted at shift 0.
    pub fn to_text(&self, names: &[&str]) -> String {
        let ideal = self.ideal.to_text(names);
        match -self.shift {
            0 => ideal,
            1 => format!("w * {ideal}"),
            k => format!("w^{k} * {ideal}"),
        }
    }
}

/// Rewrites both ideals over the larger of the two shifts.
fn align(
    data: &TateData,
    lhs: &FractionalMonomialIdeal,
    rhs: &FractionalMonomialIdeal,
) -> (MonomialIdeal, MonomialIdeal) {
    let shift = lhs.shift.max(rhs.shift);
    let raise = |f: &FractionalMonomialIdeal| {
        let extra = data.omega.scale(shift - f.shift);
        MonomialIdeal::new(
            f.ideal.vars,
            f.ideal.gens.iter().map(|g| g + &extra).collect(),
        )
        .expect("shifting generators preserves validity")
    };
    (raise(lhs), raise(rhs))
}

/// The residual `(I : J) = { f ∈ A[1/ϖ] : f·J ⊆ I }`.
///
/// The colon is taken in the full Laurent exponent lattice, then represented
/// over a shift `s` large enough that every admissible solution becomes
/// integral; `s` never exceeds the maximal generator degree of `J` times the
/// maximal exponent of the pseudo-uniformizer.
pub fn residual(
    data: &TateData,
    i: &FractionalMonomialIdeal,
    j: &FractionalMonomialIdeal,
) -> Result<FractionalMonomialIdeal> {
    let supp = data.support();
    let s = j
        .ideal
        .gens
        .iter()
        .flat_map(|h| {
            supp.iter().map(|&k| {
                let a = data.omega.entries[k];
                (h.entries[k] + a - 1).div_euclid(a)
            })
        })
        .max()
        .unwrap_or(0)
        .max(0);
    let degree_bound = j.ideal.gens.iter().map(ExponentVector::total_degree).max().unwrap_or(0);
    let omega_bound = data.omega.entries.iter().copied().max().unwrap_or(0);
    assert!(s <= degree_bound * omega_bound + 1, "residual shift exceeded its a-priori bound");
    let clamp = vec![true; data.vars];
    let mut result = MonomialIdeal::unit(data.vars);
    for h in &j.ideal.gens {
        let gens = i
            .ideal
            .gens
            .iter()
            .map(|g| (g + &data.omega.scale(s)).sub_clamped(h, &clamp))
            .collect();
        result = result.intersect(&MonomialIdeal::new(data.vars, gens)?)?;
    }
    FractionalMonomialIdeal::new(data, i.shift - j.shift + s, result)
}

/// The `v`-closure `I_v = A : (A : I)`.
pub fn v_closure(
    data: &TateData,
    i: &FractionalMonomialIdeal,
) -> Result<FractionalMonomialIdeal> {
    let unit = FractionalMonomialIdeal::unit(data);
    let dual = residual(data, &unit, i)?;
    residual(data, &unit, &dual)
}

/// The `t`-closure.  On finitely generated fractional ideals — the only kind
/// representable here — the union over finitely generated subideals is
/// realized by the ideal itself, so `t`- and `v`-closure coincide.
pub fn t_closure(
    data: &TateData,
    i: &FractionalMonomialIdeal,
) -> Result<FractionalMonomialIdeal> {
    v_closure(data, i)
}

/// Whether `I` equals its `v`-closure.
pub fn is_divisorial(data: &TateData, i: &FractionalMonomialIdeal) -> Result<bool> {
    Ok(v_closure(data, i)? == *i)
}

/// Whether `I·(A : I) = A`.
pub fn is_invertible(data: &TateData, i: &FractionalMonomialIdeal) -> Result<bool> {
    let unit = FractionalMonomialIdeal::unit(data);
    let dual = residual(data, &unit, i)?;
    Ok(i.product(data, &dual)? == unit)
}

/// A divisor: the `v`-equivalence class of a fractional ideal, stored by its
/// unique divisorial representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Divisor {
    rep: FractionalMonomialIdeal,
}

impl Divisor {
    /// The divisorial representative.
    pub fn representative(&self) -> &FractionalMonomialIdeal {
        &self.rep
    }
}

/// The divisor of a fractional ideal: its `v`-closure.
pub fn divisor(data: &TateData, i: &FractionalMonomialIdeal) -> Result<Divisor> {
    Ok(Divisor { rep: v_closure(data, i)? })
}

/// The zero divisor, represented by `A`.
pub fn divisor_zero(data: &TateData) -> Divisor {
    Divisor { rep: FractionalMonomialIdeal::unit(data) }
}

/// Divisor addition: the class of the product of representatives.
pub fn divisor_add(data: &TateData, d1: &Divisor, d2: &Divisor) -> Result<Divisor> {
    divisor(data, &d1.rep.product(data, &d2.rep)?)
}

/// Divisor negation: the class of `A : I`.
pub fn divisor_neg(data: &TateData, d: &Divisor) -> Result<Divisor> {
    let unit = FractionalMonomialIdeal::unit(data);
    divisor(data, &residual(data, &unit, &d.rep)?)
}

/// Supremum in the divisor lattice: the class of the intersection.
pub fn divisor_sup(data: &TateData, d1: &Divisor, d2: &Divisor) -> Result<Divisor> {
    divisor(data, &d1.rep.intersect(data, &d2.rep)?)
}

/// Infimum in the divisor lattice: the class of the sum.
pub fn divisor_inf(data: &TateData, d1: &Divisor, d2: &Divisor) -> Result<Divisor> {
    divisor(data, &d1.rep.sum(data, &d2.rep)?)
}

/// The divisor order: `d1 ≤ d2` when `A : I_1 ⊆ A : I_2` (larger divisors
/// have smaller representatives).
pub fn divisor_le(data: &TateData, d1: &Divisor, d2: &Divisor) -> Result<bool> {
    let unit = FractionalMonomialIdeal::unit(data);
    let r1 = residual(data, &unit, &d1.rep)?;
    let r2 = residual(data, &unit, &d2.rep)?;
    r2.contains(data, &r1)
}

/// The star operations available for instance checking.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarOp {
    /// The identity operation.
    Identity,
    /// The `v`-closure `I ↦ A : (A : I)`.
    VClosure,
    /// The `t`-closure (equal to `v` on finitely generated ideals).
    TClosure,
    /// Newton-polyhedron integral closure, applied to the integral part.
    IntegralClosure,
    /// The smallest `ϖ`-power module containing the ideal.  Deliberately
    /// broken: extensive, monotone, idempotent and strict, but it violates
    /// the multiplicativity axiom `J·I* ⊆ (J·I)*`.
    OmegaPowerEnvelope,
}

impl StarOp {
    /// The operations that are genuine strict star operations.
    pub const REGISTERED: [StarOp; 4] =
        [StarOp::Identity, StarOp::VClosure, StarOp::TClosure, StarOp::IntegralClosure];

    /// Stable name used in reports.
    pub fn name(&self) -> &'static str {
        match self {
            StarOp::Identity => "identity",
            StarOp::VClosure => "v",
            StarOp::TClosure => "t",
            StarOp::IntegralClosure => "integral-closure",
            StarOp::OmegaPowerEnvelope => "omega-power-envelope",
        }
    }

    /// Looks an operation up by its report name.
    pub fn by_name(name: &str) -> Option<StarOp> {
        [
            StarOp::Identity,
            StarOp::VClosure,
            StarOp::TClosure,
            StarOp::IntegralClosure,
            StarOp::OmegaPowerEnvelope,
        ]
        .into_iter()
        .find(|op| op.name() == name)
    }

    /// Applies the operation.
    pub fn apply(
        &self,
        data: &TateData,
        i: &FractionalMonomialIdeal,
    ) -> Result<FractionalMonomialIdeal> {
        match self {
            StarOp::Identity => Ok(i.clone()),
            StarOp::VClosure => v_closure(data, i),
            StarOp::TClosure => t_closure(data, i),
            StarOp::IntegralClosure => {
                FractionalMonomialIdeal::new(data, i.shift, integral_closure(&i.ideal)?)
            }
            StarOp::OmegaPowerEnvelope => {
                let supp = data.support();
                let t = i
                    .ideal
                    .gens
                    .iter()
                    .map(|g| {
                        supp.iter()
                            .map(|&k| g.entries[k].div_euclid(data.omega.entries[k]))
                            .min()
                            .expect("nonempty support")
                    })
                    .min()
                    .expect("fractional ideals are nonzero");
                Ok(FractionalMonomialIdeal::omega_power(data, t - i.shift))
            }
        }
    }
}

impl fmt::Display for StarOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A star-operation axiom violation: the axiom name and the ideal(s) it
/// failed on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarAxiomWitness {
    /// One of `strict`, `extensive`, `monotone`, `idempotent`,
    /// `multiplicative`.
    pub axiom: &'static str,
    /// The ideal the axiom failed on.
    pub first: FractionalMonomialIdeal,
    /// The second ideal for the two-argument axioms.
    pub second: Option<FractionalMonomialIdeal>,
}

/// Checks the star-operation axioms on every ideal and pair of the corpus:
/// strictness `A* = A`, extensivity `I ⊆ I*`, idempotence `(I*)* = I*`,
/// monotonicity `I ⊆ J ⟹ I* ⊆ J*`, and multiplicativity `J·I* ⊆ (J·I)*`.
pub fn star_axioms_check(
    data: &TateData,
    op: StarOp,
    corpus: &[FractionalMonomialIdeal],
) -> Result<Verdict<StarAxiomWitness>> {
    let unit = FractionalMonomialIdeal::unit(data);
    if op.apply(data, &unit)? != unit {
        return Ok(Verdict::Witness(StarAxiomWitness {
            axiom: "strict",
            first: unit,
            second: None,
        }));
    }
    for i in corpus {
        let star = op.apply(data, i)?;
        if !star.contains(data, i)? {
            return Ok(Verdict::Witness(StarAxiomWitness {
                axiom: "extensive",
                first: i.clone(),
                second: None,
            }));
        }
        if op.apply(data, &star)? != star {
            return Ok(Verdict::Witness(StarAxiomWitness {
                axiom: "idempotent",
                first: i.clone(),
                second: None,
            }));
        }
        for j in corpus {
            if j.contains(data, i)? {
                let star_j = op.apply(data, j)?;
                if !star_j.contains(data, &star)? {
                    return Ok(Verdict::Witness(StarAxiomWitness {
                        axiom: "monotone",
                        first: i.clone(),
                        second: Some(j.clone()),
                    }));
                }
            }
            let lhs = j.product(data, &star)?;
            let rhs = op.apply(data, &j.product(data, i)?)?;
            if !rhs.contains(data, &lhs)? {
                return Ok(Verdict::Witness(StarAxiomWitness {
                    axiom: "multiplicative",
                    first: i.clone(),
                    second: Some(j.clone()),
                }));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Checks that the operation is no coarser than the `v`-closure:
/// `I* ⊆ I_v` on every corpus ideal.
pub fn coarsest_check(
    data: &TateData,
    op: StarOp,
    corpus: &[FractionalMonomialIdeal],
) -> Result<Verdict<FractionalMonomialIdeal>> {
    for i in corpus {
        let star = op.apply(data, i)?;
        let v = v_closure(data, i)?;
        if !v.contains(data, &star)? {
            return Ok(Verdict::Witness(i.clone()));
        }
    }
    Ok(Verdict::Pass)
}

/// Checks that every weakly associated prime of `(ϖ)` localizes to a
/// `t`-closed maximal ideal: for each associated prime `P`, the maximal
/// ideal of the localized ring must equal its own `t`-closure with respect
/// to the localized pseudo-uniformizer.
pub fn wass_t_ideal_check(data: &TateData) -> Result<Verdict<MonomialPrime>> {
    for p in data.omega_ideal().associated_primes()? {
        let coords: Vec<usize> = p.vars.iter().copied().collect();
        let local_omega =
            ExponentVector::new(coords.iter().map(|&i| data.omega.entries[i]).collect());
        let local = TateData::new(coords.len(), local_omega)?;
        let maximal = MonomialIdeal::new(
            coords.len(),
            (0..coords.len()).map(|i| ExponentVector::unit(coords.len(), i)).collect(),
        )?;
        let frac = FractionalMonomialIdeal::from_integral(&local, maximal)?;
        if t_closure(&local, &frac)? != frac {
            return Ok(Verdict::Witness(p));
        }
    }
    Ok(Verdict::Pass)
}

/// Builds the integral fractional ideal `(f, ϖⁿ)` for a monomial `f`.
fn monomial_with_omega_power(
    data: &TateData,
    f: &Polynomial,
    n: u32,
) -> Result<FractionalMonomialIdeal> {
    let Some((b, _)) = f.as_monomial() else {
        return Err(Error::invalid("the element must be a monomial"));
    };
    if !b.is_nonnegative() {
        return Err(Error::LaurentInput);
    }
    let ideal = MonomialIdeal::new(data.vars, vec![b, data.omega.scale(i64::from(n))])?;
    FractionalMonomialIdeal::from_integral(data, ideal)
}

/// Instance of `v`-multiplicativity: for the ideal `I = (f, ϖⁿ)` with dual
/// `J = A : I`, the closure `(I·J)_v` must be all of `A`.  Returns the
/// closure as a witness when it is not.
pub fn v_mult_instance(
    data: &TateData,
    f: &Polynomial,
    n: u32,
) -> Result<Verdict<FractionalMonomialIdeal>> {
    let i = monomial_with_omega_power(data, f, n)?;
    let unit = FractionalMonomialIdeal::unit(data);
    let j = residual(data, &unit, &i)?;
    let closed = v_closure(data, &i.product(data, &j)?)?;
    if closed == unit {
        Ok(Verdict::Pass)
    } else {
        Ok(Verdict::Witness(closed))
    }
}

/// Finite-conductor instance: the number of generators of `A : (f, ϖⁿ)`,
/// witnessing that the residual is finitely generated.
pub fn fc_instance(data: &TateData, f: &Polynomial, n: u32) -> Result<usize> {
    let i = monomial_with_omega_power(data, f, n)?;
    let unit = FractionalMonomialIdeal::unit(data);
    let j = residual(data, &unit, &i)?;
    Ok(j.ideal.gens.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;
    use crate::DEFAULT_NAMES;

    fn ev(entries: &[i64]) -> ExponentVector {
        ExponentVector::new(entries.to_vec())
    }

    fn data(omega: &[i64]) -> TateData {
        TateData::new(omega.len(), ev(omega)).unwrap()
    }

    fn ideal(vars: usize, gens: &[&[i64]]) -> MonomialIdeal {
        MonomialIdeal::new(vars, gens.iter().map(|g| ev(g)).collect()).unwrap()
    }

    fn frac(d: &TateData, shift: i64, gens: &[&[i64]]) -> FractionalMonomialIdeal {
        FractionalMonomialIdeal::new(d, shift, ideal(d.vars, gens)).unwrap()
    }

    fn mono(vars: usize, b: &[i64]) -> Polynomial {
        Polynomial::monomial(vars, ev(b), rat_int(1))
    }

    fn names() -> Vec<&'static str> {
        DEFAULT_NAMES[..2].to_vec()
    }

    #[test]
    fn canonical_form_minimizes_the_shift() {
        let d = data(&[1, 1]);
        // (x²y²) = ϖ²·A.
        let f = frac(&d, 0, &[&[2, 2]]);
        assert_eq!(f, FractionalMonomialIdeal::omega_power(&d, 2));
        assert_eq!(f.to_text(&names()), "w^2 * (1)");
        let g = frac(&d, 3, &[&[2, 2]]);
        assert_eq!(g.shift, 1);
        assert_eq!(g.to_text(&names()), "w^-1 * (1)");
        let h = frac(&d, 0, &[&[1, 0], &[0, 1]]);
        assert_eq!(h.shift, 0);
        assert_eq!(h.to_text(&names()), "(x, y)");
        assert_eq!(frac(&d, -1, &[&[0, 0]]).to_text(&names()), "w * (1)");
    }

    #[test]
    fn openness_is_enforced() {
        let d = data(&[1, 0]);
        assert_eq!(
            FractionalMonomialIdeal::new(&d, 0, ideal(2, &[&[0, 2]])),
            Err(Error::NotOpen)
        );
        assert!(FractionalMonomialIdeal::new(&d, 0, ideal(2, &[&[0, 2], &[3, 0]])).is_ok());
        assert_eq!(
            FractionalMonomialIdeal::new(&d, 0, MonomialIdeal::zero(2)),
            Err(Error::NotOpen)
        );
    }

    #[test]
    fn parse_round_trip() {
        let d = data(&[1, 1]);
        for text in ["(x, y)", "w^-2 * (x^3, x*y)", "w^3 * (1)", "(1)"] {
            let f = FractionalMonomialIdeal::parse(&d, &names(), text).unwrap();
            assert_eq!(f.to_text(&names()), text);
        }
        // Non-canonical input normalizes.
        let f = FractionalMonomialIdeal::parse(&d, &names(), "w^-1 * (x^2*y)").unwrap();
        assert_eq!(f.to_text(&names()), "(x)");
    }

    #[test]
    fn membership_and_containment() {
        let d = data(&[1, 1]);
        let f = frac(&d, 1, &[&[0, 1]]); // ϖ^(-1)·(y) = (y/ϖ)A
        assert!(f.contains_exponent(&d, &ev(&[-1, 0])).unwrap());
        assert!(f.contains_exponent(&d, &ev(&[0, 1])).unwrap());
        assert!(!f.contains_exponent(&d, &ev(&[1, -1])).unwrap());
        let a = FractionalMonomialIdeal::unit(&d);
        assert!(f.contains(&d, &a).unwrap());
        assert!(!a.contains(&d, &f).unwrap());
        assert!(a.contains(&d, &a).unwrap());
    }

    #[test]
    fn residual_frozen_examples() {
        let d = data(&[1, 1]);
        let a = FractionalMonomialIdeal::unit(&d);
        // A : (x, y) = A: x/y and y/x both fail to multiply (x, y) into A.
        let m = frac(&d, 0, &[&[1, 0], &[0, 1]]);
        assert_eq!(residual(&d, &a, &m).unwrap(), a);
        // A : (ϖ) = ϖ^(-1)·A.
        let pw = frac(&d, 0, &[&[1, 1]]);
        assert_eq!(
            residual(&d, &a, &pw).unwrap(),
            FractionalMonomialIdeal::omega_power(&d, -1)
        );
        // A : (x) = ϖ^(-1)·(y), one generator.
        let x = frac(&d, 0, &[&[1, 0]]);
        assert_eq!(residual(&d, &a, &x).unwrap(), frac(&d, 1, &[&[0, 1]]));
        // (x) : (y) = ϖ^(-1)·(x²) = (x²/ϖ)A.
        let y = frac(&d, 0, &[&[0, 1]]);
        assert_eq!(residual(&d, &x, &y).unwrap(), frac(&d, 1, &[&[2, 0]]));
        // A : (x², y) = A.
        let k = frac(&d, 0, &[&[2, 0], &[0, 1]]);
        assert_eq!(residual(&d, &a, &k).unwrap(), a);
    }

    #[test]
    fn residual_is_adjoint_to_multiplication() {
        // f ∈ (I : J) exactly when f·J ⊆ I, checked over a Laurent box.
        let d = data(&[1, 1]);
        let cases = [
            (frac(&d, 0, &[&[1, 0], &[0, 1]]), frac(&d, 0, &[&[1, 1]])),
            (frac(&d, 1, &[&[0, 1]]), frac(&d, 0, &[&[2, 0], &[0, 1]])),
            (frac(&d, 0, &[&[2, 0], &[1, 1], &[0, 3]]), frac(&d, -1, &[&[1, 0]])),
        ];
        for (i, j) in &cases {
            let r = residual(&d, i, j).unwrap();
            for b0 in -3..=4i64 {
                for b1 in -3..=4i64 {
                    let b = ev(&[b0, b1]);
                    let direct: bool = j
                        .ideal
                        .gens
                        .iter()
                        .map(|h| &(&b + h) - &d.omega.scale(j.shift))
                        .try_fold(true, |acc, t| {
                            i.contains_exponent(&d, &t).map(|ok| acc && ok)
                        })
                        .unwrap();
                    assert_eq!(
                        r.contains_exponent(&d, &b).unwrap(),
                        direct,
                        "adjunction failed at {b:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn v_closure_frozen_examples() {
        let d = data(&[1, 1]);
        let a = FractionalMonomialIdeal::unit(&d);
        // (x, y) is not divisorial: its v-closure is all of A.
        let m = frac(&d, 0, &[&[1, 0], &[0, 1]]);
        assert_eq!(v_closure(&d, &m).unwrap(), a);
        assert!(!is_divisorial(&d, &m).unwrap());
        // Principal modules are divisorial.
        for f in [
            frac(&d, 0, &[&[1, 0]]),
            frac(&d, 0, &[&[1, 2]]),
            FractionalMonomialIdeal::omega_power(&d, 3),
        ] {
            assert!(is_divisorial(&d, &f).unwrap(), "{f:?}");
        }
        assert_eq!(t_closure(&d, &m).unwrap(), v_closure(&d, &m).unwrap());
        // v-closure is extensive, idempotent, and inside the unit ideal here.
        let k = frac(&d, 0, &[&[2, 0], &[0, 1]]);
        assert_eq!(v_closure(&d, &k).unwrap(), a);
    }

    #[test]
    fn invertibility() {
        let d = data(&[1, 1]);
        assert!(!is_invertible(&d, &frac(&d, 0, &[&[1, 0], &[0, 1]])).unwrap());
        assert!(is_invertible(&d, &frac(&d, 0, &[&[1, 1]])).unwrap());
        assert!(is_invertible(&d, &frac(&d, 0, &[&[1, 0]])).unwrap());
        assert!(is_invertible(&d, &FractionalMonomialIdeal::unit(&d)).unwrap());
    }

    #[test]
    fn integral_closure_operation() {
        let d = data(&[1, 1]);
        let i = frac(&d, 0, &[&[2, 0], &[0, 2]]);
        let closed = StarOp::IntegralClosure.apply(&d, &i).unwrap();
        assert_eq!(closed, frac(&d, 0, &[&[2, 0], &[1, 1], &[0, 2]]));
        let shifted = frac(&d, 1, &[&[2, 0], &[0, 2]]);
        let closed_shifted = StarOp::IntegralClosure.apply(&d, &shifted).unwrap();
        assert_eq!(closed_shifted, frac(&d, 1, &[&[2, 0], &[1, 1], &[0, 2]]));
    }

    #[test]
    fn registered_operations_pass_axioms_and_coarseness() {
        let d = data(&[1, 1]);
        let corpus = vec![
            FractionalMonomialIdeal::unit(&d),
            frac(&d, 0, &[&[1, 0]]),
            frac(&d, 0, &[&[0, 1]]),
            frac(&d, 0, &[&[1, 0], &[0, 1]]),
            frac(&d, 0, &[&[2, 0], &[1, 1]]),
            frac(&d, 1, &[&[2, 0], &[0, 3]]),
            FractionalMonomialIdeal::omega_power(&d, -2),
        ];
        for op in StarOp::REGISTERED {
            assert!(
                star_axioms_check(&d, op, &corpus).unwrap().passed(),
                "axioms failed for {op}"
            );
            assert!(
                coarsest_check(&d, op, &corpus).unwrap().passed(),
                "coarseness failed for {op}"
            );
        }
    }

    #[test]
    fn envelope_fails_exactly_multiplicativity() {
        // ϖ = x²: the envelope of (x) is A, but (x)·A = (x) is not inside
        // the envelope of (x)·(x) = (x²) = ϖA.
        let d = data(&[2]);
        let x = frac(&d, 0, &[&[1]]);
        let corpus = vec![FractionalMonomialIdeal::unit(&d), x.clone()];
        let verdict = star_axioms_check(&d, StarOp::OmegaPowerEnvelope, &corpus).unwrap();
        let witness = verdict.witness().expect("the envelope is not multiplicative");
        assert_eq!(witness.axiom, "multiplicative");
        assert_eq!(witness.first, x);
        assert_eq!(witness.second, Some(x.clone()));
        // It is also strictly coarser than the v-closure on (x).
        let coarse = coarsest_check(&d, StarOp::OmegaPowerEnvelope, &corpus).unwrap();
        assert_eq!(coarse.witness(), Some(&x));
        // Envelope values are ϖ-power modules.
        assert_eq!(
            StarOp::OmegaPowerEnvelope.apply(&d, &x).unwrap(),
            FractionalMonomialIdeal::unit(&d)
        );
        assert_eq!(
            StarOp::OmegaPowerEnvelope.apply(&d, &frac(&d, 0, &[&[2]])).unwrap(),
            FractionalMonomialIdeal::omega_power(&d, 1)
        );
    }

    #[test]
    fn divisor_group_laws() {
        let d = data(&[1, 1]);
        let zero = divisor_zero(&d);
        let dx = divisor(&d, &frac(&d, 0, &[&[1, 0]])).unwrap();
        let dy = divisor(&d, &frac(&d, 0, &[&[0, 1]])).unwrap();
        let dw = divisor(&d, &frac(&d, 0, &[&[1, 1]])).unwrap();
        // div I + div(A : I) = div A.
        for class in [&dx, &dy, &dw] {
            let neg = divisor_neg(&d, class).unwrap();
            assert_eq!(divisor_add(&d, class, &neg).unwrap(), zero);
        }
        // sup + inf = sum of the two divisors.
        let sup = divisor_sup(&d, &dx, &dy).unwrap();
        let inf = divisor_inf(&d, &dx, &dy).unwrap();
        assert_eq!(sup, dw);
        assert_eq!(inf, zero);
        assert_eq!(
            divisor_add(&d, &sup, &inf).unwrap(),
            divisor_add(&d, &dx, &dy).unwrap()
        );
        // Order: 0 ≤ div ϖ; the coordinate divisors are incomparable.
        assert!(divisor_le(&d, &zero, &dw).unwrap());
        assert!(!divisor_le(&d, &dw, &zero).unwrap());
        assert!(!divisor_le(&d, &dx, &dy).unwrap());
        assert!(!divisor_le(&d, &dy, &dx).unwrap());
        assert!(divisor_le(&d, &dx, &dx).unwrap());
        // Absorption laws of the lattice.
        assert_eq!(divisor_sup(&d, &dx, &inf).unwrap(), dx);
        assert_eq!(divisor_inf(&d, &dx, &sup).unwrap(), dx);
        // The non-divisorial (x, y) and A give the same divisor.
        assert_eq!(divisor(&d, &frac(&d, 0, &[&[1, 0], &[0, 1]])).unwrap(), zero);
    }

    #[test]
    fn wass_primes_are_t_ideals() {
        for omega in [&[1i64, 1][..], &[2, 3], &[1, 0], &[3]] {
            let d = data(omega);
            assert!(wass_t_ideal_check(&d).unwrap().passed(), "omega = {omega:?}");
        }
    }

    #[test]
    fn v_mult_and_fc_instances() {
        let d = data(&[1, 1]);
        // I = (x², ϖ) has dual ϖ^(-1)·(y); the product (x, y) is not A but
        // v-closes to A.
        let f = mono(2, &[2, 0]);
        assert!(v_mult_instance(&d, &f, 1).unwrap().passed());
        assert_eq!(fc_instance(&d, &f, 1).unwrap(), 1);
        assert!(v_mult_instance(&d, &mono(2, &[1, 0]), 1).unwrap().passed());
        assert_eq!(fc_instance(&d, &mono(2, &[1, 0]), 1).unwrap(), 1);
        assert_eq!(fc_instance(&d, &mono(2, &[0, 0]), 2).unwrap(), 1);
        // Non-monomial input is rejected.
        let sum = &mono(2, &[1, 0]) + &mono(2, &[0, 1]);
        assert!(v_mult_instance(&d, &sum, 1).is_err());
        assert!(fc_instance(&d, &Polynomial::zero(2), 1).is_err());
        assert!(v_mult_instance(&d, &mono(2, &[1, -1]), 1).is_err());
    }

    #[test]
    fn star_op_names_round_trip() {
        for op in [
            StarOp::Identity,
            StarOp::VClosure,
            StarOp::TClosure,
            StarOp::IntegralClosure,
            StarOp::OmegaPowerEnvelope,
        ] {
            assert_eq!(StarOp::by_name(op.name()), Some(op));
        }
        assert_eq!(StarOp::by_name("nope"), None);
    }
}
