//! Monomial ideal calculus: membership, sums, products, powers,
//! intersections, colon ideals, order functions, associated primes, and
//! localization at coordinate primes.
//!
//! A [`MonomialIdeal`] stores its unique minimal generating set (pairwise
//! non-dividing exponent vectors) sorted lexicographically descending, so
//! structural equality is ideal equality.  The zero ideal is the empty
//! generator list; the unit ideal is generated by the monomial `1`.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::exponent::{minimal_elements, ExponentVector};
use crate::poly::Polynomial;
use crate::scalar::ExtRat;

/// A monomial ideal given by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    /// Ambient variable count.
    pub vars: usize,
    /// Minimal generators, pairwise non-dividing, sorted lex descending.
    pub gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Builds an ideal from arbitrary generators, minimalizing and sorting.
    ///
    /// An empty list (or only zero-coefficient content) yields the zero
    /// ideal.  Errors if a generator has a negative exponent or a mismatched
    /// length.
    pub fn new(vars: usize, gens: Vec<ExponentVector>) -> Result<Self> {
        for g in &gens {
            if g.len() != vars {
                return Err(Error::DimensionMismatch { expected: vars, found: g.len() });
            }
            if !g.is_nonnegative() {
                return Err(Error::LaurentInput);
            }
        }
        Ok(MonomialIdeal { vars, gens: minimal_elements(gens) })
    }

    /// The zero ideal.
    pub fn zero(vars: usize) -> Self {
        MonomialIdeal { vars, gens: Vec::new() }
    }

    /// The unit ideal `(1)`.
    pub fn unit(vars: usize) -> Self {
        MonomialIdeal { vars, gens: vec![ExponentVector::zeros(vars)] }
    }

    /// The principal ideal generated by `x^b`.
    pub fn principal(b: ExponentVector) -> Result<Self> {
        let vars = b.len();
        MonomialIdeal::new(vars, vec![b])
    }

    /// True for the zero ideal.
    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// True for the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    /// True for proper ideals (everything except the unit ideal).
    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::DimensionMismatch { expected: self.vars, found: other.vars });
        }
        Ok(())
    }

    /// Membership of a monomial: some generator divides `x^b`.
    ///
    /// Errors when `b` has a negative entry.
    pub fn contains_monomial(&self, b: &ExponentVector) -> Result<bool> {
        if b.len() != self.vars {
            return Err(Error::DimensionMismatch { expected: self.vars, found: b.len() });
        }
        if !b.is_nonnegative() {
            return Err(Error::LaurentInput);
        }
        Ok(self.gens.iter().any(|g| g.divides(b)))
    }

    /// Membership of a polynomial: every term lies in the ideal.
    pub fn contains_polynomial(&self, f: &Polynomial) -> Result<bool> {
        if f.vars != self.vars {
            return Err(Error::DimensionMismatch { expected: self.vars, found: f.vars });
        }
        if !f.is_in_base_ring() {
            return Err(Error::LaurentInput);
        }
        for b in f.exponents() {
            if !self.contains_monomial(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal sum `I + J`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(MonomialIdeal { vars: self.vars, gens: minimal_elements(gens) })
    }

    /// Ideal product `I · J`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a + b);
            }
        }
        Ok(MonomialIdeal { vars: self.vars, gens: minimal_elements(gens) })
    }

    /// Ideal power `I^k` with `I^0 = (1)`.
    pub fn power(&self, k: u32) -> Self {
        let mut out = MonomialIdeal::unit(self.vars);
        for _ in 0..k {
            out = out.product(self).expect("same variable count");
        }
        out
    }

    /// Ideal intersection `I ∩ J` via pairwise lcms.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(MonomialIdeal { vars: self.vars, gens: minimal_elements(gens) })
    }

    /// Colon by a single monomial: `(I : x^h)`.
    pub fn colon_monomial(&self, h: &ExponentVector) -> Result<Self> {
        if h.len() != self.vars {
            return Err(Error::DimensionMismatch { expected: self.vars, found: h.len() });
        }
        let clamp = vec![true; self.vars];
        let gens = self
            .gens
            .iter()
            .map(|g| g.sub_clamped(h, &clamp))
            .collect();
        Ok(MonomialIdeal { vars: self.vars, gens: minimal_elements(gens) })
    }

    /// Colon ideal `(I : J) = {x^b : x^b · J ⊆ I}`.
    ///
    /// `(I : (0))` is the unit ideal by the empty-intersection convention.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = MonomialIdeal::unit(self.vars);
        for h in &other.gens {
            out = out.intersect(&self.colon_monomial(h)?)?;
        }
        Ok(out)
    }

    /// Order of `f` with respect to `I`: the largest `k` with `f ∈ I^k`
    /// (convention `I^0 = A`), `+∞` exactly for `f = 0` or the unit ideal.
    ///
    /// Membership in `I^k` is decided on the generator-sum structure directly
    /// (never by expanding `I^k`): for each term exponent `b` the search
    /// maximizes `Σλ_g` over `Σλ_g·g ≤ b` by branch-and-bound with
    /// memoization, pruned by exact weight bounds from `{0,1}` vectors.
    pub fn ord(&self, f: &Polynomial) -> Result<ExtRat> {
        if f.vars != self.vars {
            return Err(Error::DimensionMismatch { expected: self.vars, found: f.vars });
        }
        if !f.is_in_base_ring() {
            return Err(Error::LaurentInput);
        }
        if f.is_zero() || self.is_unit() {
            return Ok(ExtRat::Infinite);
        }
        if self.is_zero_ideal() {
            return Ok(ExtRat::from_int(0));
        }
        let engine = OrdEngine::new(&self.gens);
        let mut best: Option<i64> = None;
        for b in f.exponents() {
            let o = engine.ord(b);
            best = Some(best.map_or(o, |v| v.min(o)));
            if best == Some(0) {
                break;
            }
        }
        Ok(ExtRat::from_int(best.expect("nonzero polynomial has terms")))
    }

    /// Associated primes, each witnessed by a monomial `x^b` with
    /// `(I : x^b)` prime; witnesses are searched over the divisor box of the
    /// generator lcm, which contains one for every associated prime.
    ///
    /// Rejects the unit and zero ideals.
    pub fn associated_primes(&self) -> Result<BTreeSet<MonomialPrime>> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        if self.is_zero_ideal() {
            return Err(Error::ZeroIdeal);
        }
        let bounds: Vec<i64> = (0..self.vars)
            .map(|i| self.gens.iter().map(|g| g.entries[i]).max().unwrap_or(0))
            .collect();
        let mut out = BTreeSet::new();
        let mut b = vec![0i64; self.vars];
        loop {
            let witness = ExponentVector::new(b.clone());
            let q = self.colon_monomial(&witness)?;
            if let Some(p) = as_monomial_prime(&q) {
                out.insert(p);
            }
            // odometer over the box
            let mut i = 0;
            loop {
                if i == self.vars {
                    return Ok(out);
                }
                if b[i] < bounds[i] {
                    b[i] += 1;
                    break;
                }
                b[i] = 0;
                i += 1;
            }
        }
    }

    /// Localization at a coordinate prime: variables outside `p` become
    /// units, so generators are projected to the coordinates of `p` and
    /// minimalized.  The result lives over the variables of `p` in ascending
    /// index order.
    pub fn localize_at_prime(&self, p: &MonomialPrime) -> Self {
        let coords: Vec<usize> = p.vars.iter().copied().collect();
        let gens = self
            .gens
            .iter()
            .map(|g| ExponentVector::new(coords.iter().map(|&i| g.entries[i]).collect()))
            .collect();
        MonomialIdeal { vars: coords.len(), gens: minimal_elements(gens) }
    }

    /// Renders the ideal as `(x^2, y^3)` with the given variable names;
    /// the zero ideal renders as `(0)`.
    pub fn to_text(&self, names: &[&str]) -> String {
        if self.is_zero_ideal() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.format_monomial(names)).collect();
        format!("({})", parts.join(", "))
    }
}

/// Returns the prime's variable set when the ideal is a monomial prime
/// (minimally generated by distinct variables), `None` otherwise.
fn as_monomial_prime(q: &MonomialIdeal) -> Option<MonomialPrime> {
    if q.is_unit() || q.is_zero_ideal() {
        return None;
    }
    let mut vars = BTreeSet::new();
    for g in &q.gens {
        if g.total_degree() != 1 {
            return None;
        }
        vars.insert(g.support()[0]);
    }
    Some(MonomialPrime { vars })
}

/// A monomial prime ideal, identified with its nonempty set of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialPrime {
    /// Indices of the variables generating the prime.
    pub vars: BTreeSet<usize>,
}

impl MonomialPrime {
    /// Builds a prime from variable indices.
    ///
    /// Errors when the set is empty.
    pub fn new(vars: BTreeSet<usize>) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::invalid("a monomial prime needs at least one variable"));
        }
        Ok(MonomialPrime { vars })
    }

    /// Builds the principal prime `(x_i)`.
    pub fn single(i: usize) -> Self {
        MonomialPrime { vars: BTreeSet::from([i]) }
    }

    /// Renders as `(x, y)` with the given variable names.
    pub fn to_text(&self, names: &[&str]) -> String {
        let parts: Vec<&str> = self.vars.iter().map(|&i| names[i]).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vars.iter().map(|i| format!("x{i}")).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Exact maximizer of `Σλ_g` subject to `Σλ_g·g ≤ b`, `λ ≥ 0` integral:
/// branch-and-bound over generator choices with memoized subproblems.
struct OrdEngine<'a> {
    gens: Vec<&'a ExponentVector>,
    /// Valid pruning weights: `(w, min_g ⟨w,g⟩)` with positive minimum.
    weights: Vec<(ExponentVector, i64)>,
    memo: RefCell<HashMap<Vec<i64>, i64>>,
}

impl<'a> OrdEngine<'a> {
    fn new(gens: &'a [ExponentVector]) -> Self {
        let n = gens[0].len();
        let mut sorted: Vec<&ExponentVector> = gens.iter().collect();
        sorted.sort_by_key(|g| g.total_degree());
        let mut weights = Vec::new();
        // Every nonzero {0,1} weight vector whose minimum generator weight is
        // positive yields the exact bound k ≤ ⌊⟨w,b⟩ / min_g⟨w,g⟩⌋.
        for mask in 1u32..(1 << n) {
            let w = ExponentVector::new(
                (0..n).map(|i| i64::from(mask >> i & 1)).collect(),
            );
            let min_w = sorted.iter().map(|g| g.dot(&w)).min().unwrap();
            if min_w > 0 {
                weights.push((w, min_w));
            }
        }
        OrdEngine { gens: sorted, weights, memo: RefCell::new(HashMap::new()) }
    }

    fn upper_bound(&self, b: &ExponentVector) -> i64 {
        self.weights
            .iter()
            .map(|(w, min_w)| b.dot(w).div_euclid(*min_w))
            .min()
            .expect("at least the all-ones weight is valid")
            .max(0)
    }

    /// Iterative depth-first branch-and-bound (explicit stack, so arbitrarily
    /// deep subtraction chains cannot overflow the call stack).
    fn ord(&self, b0: &ExponentVector) -> i64 {
        if let Some(&v) = self.memo.borrow().get(&b0.entries) {
            return v;
        }
        struct Frame {
            b: ExponentVector,
            ub: i64,
            next_gen: usize,
            best: i64,
        }
        let mut stack = vec![Frame {
            ub: self.upper_bound(b0),
            b: b0.clone(),
            next_gen: 0,
            best: 0,
        }];
        let mut returned: Option<i64> = None;
        while !stack.is_empty() {
            enum Step {
                Push(Frame),
                Pop,
            }
            let step = {
                let top = stack.last_mut().expect("nonempty stack");
                if let Some(r) = returned.take() {
                    top.best = top.best.max(1 + r);
                }
                let mut decided = Step::Pop;
                while top.best < top.ub && top.next_gen < self.gens.len() {
                    let g = self.gens[top.next_gen];
                    top.next_gen += 1;
                    if g.divides(&top.b) {
                        let rest = &top.b - g;
                        if let Some(&v) = self.memo.borrow().get(&rest.entries) {
                            top.best = top.best.max(1 + v);
                        } else {
                            let ub = self.upper_bound(&rest);
                            decided = Step::Push(Frame { b: rest, ub, next_gen: 0, best: 0 });
                            break;
                        }
                    }
                }
                decided
            };
            match step {
                Step::Push(frame) => stack.push(frame),
                Step::Pop => {
                    let top = stack.pop().expect("nonempty stack");
                    self.memo.borrow_mut().insert(top.b.entries, top.best);
                    returned = Some(top.best);
                }
            }
        }
        returned.expect("root frame returns a value")
    }
}
