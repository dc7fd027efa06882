//! Finite free extensions of the univariate polynomial ring and their
//! spectral seminorms.
//!
//! An extension `B` of `A = ℚ[x]` is presented by a rank-`r` basis and an
//! `r×r` multiplication table of coordinate vectors; commutativity,
//! associativity on basis triples, and the unit law are checked exhaustively
//! at construction.  Minimal polynomials come from the first Krylov
//! dependency, solved exactly by fraction-free (Bareiss) elimination with
//! Cramer determinants; since `A` is normal the coefficients must land in
//! `A`, and a failed exact division signals an inconsistent table.  The
//! spectral seminorm of `f` is then `max_i |a_i|^(1/i)` over the minimal
//! polynomial `T^d + a_1·T^(d−1) + … + a_d`, cross-checked by the lattice
//! gauge limit `‖f^m‖^(1/m)` along doubling powers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::logvalue::LogValue;
use crate::parse;
use crate::poly::Polynomial;
use crate::scalar::{rat, ExtRat, Rational};
use crate::seminorm::SpectralBracket;
use crate::Verdict;

/// Maximal rank of a free extension.
pub const MAX_RANK: usize = 8;
/// Maximal degree of a multiplication-table entry.
pub const MAX_TABLE_DEGREE: usize = 32;

/// A dense univariate polynomial over `ℚ`, coefficients ascending with no
/// trailing zeros (the zero polynomial is the empty vector).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    /// Coefficient of `x^k` at index `k`.
    pub coeffs: Vec<Rational>,
}

impl UniPoly {
    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    /// The constant one.
    pub fn one() -> Self {
        UniPoly::constant(rat(1, 1))
    }

    /// A constant.
    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monomial `c·x^k`.
    pub fn monomial(k: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        UniPoly::new(coeffs)
    }

    /// The power `x^k`.
    pub fn x_power(k: usize) -> Self {
        UniPoly::monomial(k, rat(1, 1))
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The degree, or `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The `x`-adic order: index of the least nonzero coefficient.
    pub fn ord_x(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// The leading coefficient, or `None` for zero.
    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Exact division: `Some(q)` with `self = q·den` or `None` when the
    /// division leaves a remainder or the divisor is zero.
    pub fn div_exact(&self, den: &UniPoly) -> Option<UniPoly> {
        let den_deg = den.degree()?;
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        let deg = self.degree().expect("nonzero");
        if deg < den_deg {
            return None;
        }
        let lead = den.leading().expect("nonzero").clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); deg - den_deg + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + den_deg] / &lead;
            if !c.is_zero() {
                for (i, d) in den.coeffs.iter().enumerate() {
                    let t = &rem[k + i] - &(&c * d);
                    rem[k + i] = t;
                }
            }
            quot[k] = c;
        }
        if rem.iter().all(Rational::is_zero) {
            Some(UniPoly::new(quot))
        } else {
            None
        }
    }

    /// Converts a one-variable sparse polynomial; Laurent input is rejected.
    pub fn from_polynomial(f: &Polynomial) -> Result<UniPoly> {
        if f.vars != 1 {
            return Err(Error::DimensionMismatch { expected: 1, found: f.vars });
        }
        let mut coeffs = Vec::new();
        for (b, c) in f.terms() {
            let k = b.entries[0];
            if k < 0 {
                return Err(Error::LaurentInput);
            }
            let k = k as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            coeffs[k] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    /// The sparse-polynomial view (one variable).
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_terms(
            1,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (crate::exponent::ExponentVector::new(vec![k as i64]), c.clone()))
                .collect(),
        )
    }

    /// Renders in the variable `x`.
    pub fn to_text(&self) -> String {
        self.to_polynomial().to_text(&["x"])
    }

    /// Parses from text in the variable `x`.
    pub fn parse(text: &str) -> Result<UniPoly> {
        UniPoly::from_polynomial(&parse::parse_polynomial(text, &["x"])?)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut coeffs = vec![Rational::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k] = c.clone();
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            let t = &coeffs[k] + c;
            coeffs[k] = t;
        }
        UniPoly::new(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &-rhs
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs =
            vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = &coeffs[i + j] + &(a * b);
                coeffs[i + j] = t;
            }
        }
        UniPoly::new(coeffs)
    }
}

/// Outcome of fraction-free elimination: the rank and the original indices
/// of the pivot rows in pivot order.
struct Eliminated {
    rank: usize,
    pivot_rows: Vec<usize>,
}

/// Fraction-free (Bareiss) forward elimination; every interior division is
/// exact by the Sylvester determinant identity.
fn bareiss_eliminate(mut m: Vec<Vec<UniPoly>>) -> Eliminated {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut index: Vec<usize> = (0..rows).collect();
    let mut prev = UniPoly::one();
    let mut rank = 0;
    let mut pivot_rows = Vec::new();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        index.swap(rank, p);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let t = &(&m[rank][col] * &m[i][j]) - &(&m[i][col] * &m[rank][j]);
                m[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][col] = UniPoly::zero();
        }
        prev = m[rank][col].clone();
        pivot_rows.push(index[rank]);
        rank += 1;
    }
    Eliminated { rank, pivot_rows }
}

/// Exact determinant of a square matrix by Bareiss elimination.
fn bareiss_det(mut m: Vec<Vec<UniPoly>>) -> UniPoly {
    let n = m.len();
    if n == 0 {
        return UniPoly::one();
    }
    let mut prev = UniPoly::one();
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return UniPoly::zero();
        };
        if p != k {
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = UniPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// A finite free extension `B` of `A = ℚ[x]`, presented by a multiplication
/// table on a basis.  Elements are coordinate vectors over `A`.
#[derive(Debug, Clone, PartialEq)]
pub struct FreeExtension {
    /// Basis labels.
    pub basis: Vec<String>,
    /// `table[i][j]` holds the coordinates of `b_i·b_j`.
    pub table: Vec<Vec<Vec<UniPoly>>>,
    /// Coordinates of `1_B`.
    pub one: Vec<UniPoly>,
    /// `ϖ = x^e`.
    pub omega_exponent: u32,
    /// Trusted flag: `B` is an integral domain.
    pub domain: bool,
    /// Trusted flag: `B` is integrally closed in `B[1/ϖ]`; see
    /// [`integrally_closed_probe`] for the falsification route.
    pub integrally_closed: bool,
}

impl FreeExtension {
    /// Validates and builds the extension: rank and degree caps, table
    /// shape, commutativity, the unit law, and associativity on all basis
    /// triples.
    pub fn new(
        basis: Vec<String>,
        table: Vec<Vec<Vec<UniPoly>>>,
        one: Vec<UniPoly>,
        omega_exponent: u32,
        domain: bool,
        integrally_closed: bool,
    ) -> Result<Self> {
        let r = basis.len();
        if r == 0 || r > MAX_RANK {
            return Err(Error::InvalidExtension(format!(
                "rank must be between 1 and {MAX_RANK}, got {r}"
            )));
        }
        for (i, name) in basis.iter().enumerate() {
            if name.is_empty() || basis[..i].contains(name) {
                return Err(Error::InvalidExtension(format!(
                    "basis labels must be nonempty and distinct, offender {name:?}"
                )));
            }
        }
        if omega_exponent == 0 {
            return Err(Error::InvalidExtension(
                "the pseudo-uniformizer exponent must be positive".into(),
            ));
        }
        if table.len() != r
            || table.iter().any(|row| row.len() != r)
            || table.iter().flatten().any(|entry| entry.len() != r)
            || one.len() != r
        {
            return Err(Error::InvalidExtension(
                "the table must be rank × rank coordinate vectors of full length".into(),
            ));
        }
        let too_deep = table
            .iter()
            .flatten()
            .flatten()
            .chain(&one)
            .any(|p| p.degree().is_some_and(|d| d > MAX_TABLE_DEGREE));
        if too_deep {
            return Err(Error::InvalidExtension(format!(
                "table entries must have degree at most {MAX_TABLE_DEGREE}"
            )));
        }
        let ext = FreeExtension { basis, table, one, omega_exponent, domain, integrally_closed };
        for i in 0..r {
            for j in 0..i {
                if ext.table[i][j] != ext.table[j][i] {
                    return Err(Error::InvalidExtension(format!(
                        "multiplication is not commutative at basis pair ({i}, {j})"
                    )));
                }
            }
        }
        for i in 0..r {
            let e = ext.basis_element(i);
            if ext.mul_raw(&ext.one, &e) != e {
                return Err(Error::InvalidExtension(format!(
                    "the unit law fails on basis element {i}"
                )));
            }
        }
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let left = ext.mul_raw(&ext.table[i][j], &ext.basis_element(k));
                    let right = ext.mul_raw(&ext.basis_element(i), &ext.table[j][k]);
                    if left != right {
                        return Err(Error::InvalidExtension(format!(
                            "multiplication is not associative at basis triple ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        Ok(ext)
    }

    /// The rank of the extension.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// The zero element.
    pub fn zero(&self) -> Vec<UniPoly> {
        vec![UniPoly::zero(); self.rank()]
    }

    /// The `i`-th basis element as a coordinate vector.
    pub fn basis_element(&self, i: usize) -> Vec<UniPoly> {
        let mut e = self.zero();
        e[i] = UniPoly::one();
        e
    }

    /// A base-ring element embedded as `a·1_B`.
    pub fn from_base(&self, a: &UniPoly) -> Vec<UniPoly> {
        self.one.iter().map(|c| c * a).collect()
    }

    /// Validates a coordinate vector.
    pub fn check_element(&self, f: &[UniPoly]) -> Result<()> {
        if f.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: f.len() });
        }
        Ok(())
    }

    fn mul_raw(&self, f: &[UniPoly], g: &[UniPoly]) -> Vec<UniPoly> {
        let mut out = self.zero();
        for (i, a) in f.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in g.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, t) in self.table[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] = &out[k] + &(&ab * t);
                    }
                }
            }
        }
        out
    }

    /// The product of two elements.
    pub fn mul(&self, f: &[UniPoly], g: &[UniPoly]) -> Result<Vec<UniPoly>> {
        self.check_element(f)?;
        self.check_element(g)?;
        Ok(self.mul_raw(f, g))
    }

    /// The sum of two elements.
    pub fn add(&self, f: &[UniPoly], g: &[UniPoly]) -> Result<Vec<UniPoly>> {
        self.check_element(f)?;
        self.check_element(g)?;
        Ok(f.iter().zip(g).map(|(a, b)| a + b).collect())
    }

    /// Scales an element by a base-ring factor.
    pub fn scale(&self, f: &[UniPoly], a: &UniPoly) -> Result<Vec<UniPoly>> {
        self.check_element(f)?;
        Ok(f.iter().map(|c| c * a).collect())
    }

    /// The power `f^k`.
    pub fn pow(&self, f: &[UniPoly], k: u32) -> Result<Vec<UniPoly>> {
        self.check_element(f)?;
        let mut out = self.one.clone();
        for _ in 0..k {
            out = self.mul_raw(&out, f);
        }
        Ok(out)
    }
}

/// A monic polynomial in `T` over `A`, coefficients ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinPoly {
    /// `coeffs[k]` is the coefficient of `T^k`; the last entry is `1`.
    pub coeffs: Vec<UniPoly>,
}

impl MinPoly {
    /// The degree in `T`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The coefficient `a_i` of `T^(d−i)`, for `1 ≤ i ≤ d`.
    pub fn lower_coefficient(&self, i: usize) -> &UniPoly {
        &self.coeffs[self.degree() - i]
    }
}

impl fmt::Display for MinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        match d {
            1 => write!(f, "T")?,
            _ => write!(f, "T^{d}")?,
        }
        for k in (0..d).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let text = c.to_text();
            let (negative, mag_poly, mag_text) = if let Some(stripped) = text.strip_prefix('-') {
                let neg = -c;
                (true, neg.to_polynomial(), stripped.to_string())
            } else {
                (false, c.to_polynomial(), text)
            };
            let mag_text =
                if mag_poly.num_terms() > 1 { format!("({mag_text})") } else { mag_text };
            let mag_text = if negative && mag_poly.num_terms() > 1 {
                // Re-render the negated polynomial inside the parentheses.
                format!("({})", (-c).to_text())
            } else {
                mag_text
            };
            write!(f, "{}", if negative { " - " } else { " + " })?;
            let power = match k {
                0 => String::new(),
                1 => "T".to_string(),
                _ => format!("T^{k}"),
            };
            if power.is_empty() {
                write!(f, "{mag_text}")?;
            } else if mag_text == "1" {
                write!(f, "{power}")?;
            } else {
                write!(f, "{mag_text}*{power}")?;
            }
        }
        Ok(())
    }
}

/// The minimal polynomial of `f`: the first linear dependency among
/// `1, f, f², …`, solved exactly; the coefficients must lie in `A` since
/// `A` is normal, and a failed exact division reports
/// [`Error::CoefficientNotInBase`].
pub fn min_poly(ext: &FreeExtension, f: &[UniPoly]) -> Result<MinPoly> {
    ext.check_element(f)?;
    if !ext.domain {
        return Err(Error::InvalidExtension(
            "minimal polynomials require the domain flag".into(),
        ));
    }
    let r = ext.rank();
    let mut krylov: Vec<Vec<UniPoly>> = vec![ext.one.clone()];
    let mut power = ext.one.clone();
    for d in 1..=r {
        power = ext.mul_raw(&power, f);
        let augmented: Vec<Vec<UniPoly>> = (0..r)
            .map(|row| {
                krylov
                    .iter()
                    .map(|v| v[row].clone())
                    .chain([power[row].clone()])
                    .collect()
            })
            .collect();
        if bareiss_eliminate(augmented).rank > d {
            krylov.push(power.clone());
            continue;
        }
        // `power` depends on the earlier (independent) Krylov vectors;
        // solve by Cramer on a full-rank row selection.
        let matrix: Vec<Vec<UniPoly>> = (0..r)
            .map(|row| krylov.iter().map(|v| v[row].clone()).collect())
            .collect();
        let elim = bareiss_eliminate(matrix.clone());
        debug_assert_eq!(elim.rank, d);
        let rows = elim.pivot_rows;
        let square: Vec<Vec<UniPoly>> =
            rows.iter().map(|&i| matrix[i].clone()).collect();
        let den = bareiss_det(square.clone());
        let mut coeffs = Vec::with_capacity(d + 1);
        for col in 0..d {
            let mut replaced = square.clone();
            for (s, &i) in rows.iter().enumerate() {
                replaced[s][col] = power[i].clone();
            }
            let num = bareiss_det(replaced);
            let c = num.div_exact(&den).ok_or_else(|| {
                Error::CoefficientNotInBase(format!(
                    "coefficient of T^{col} is {} / {}",
                    num.to_text(),
                    den.to_text()
                ))
            })?;
            coeffs.push(-&c);
        }
        coeffs.push(UniPoly::one());
        let p = MinPoly { coeffs };
        debug_assert!(annihilates(ext, f, &p), "Krylov solution must annihilate");
        return Ok(p);
    }
    Err(Error::InvalidExtension(
        "no Krylov dependency within the rank; the table is inconsistent".into(),
    ))
}

/// Whether `p(f) = 0`, evaluated by table arithmetic.
fn annihilates(ext: &FreeExtension, f: &[UniPoly], p: &MinPoly) -> bool {
    let mut acc = ext.zero();
    let mut power = ext.one.clone();
    for (k, c) in p.coeffs.iter().enumerate() {
        if k > 0 {
            power = ext.mul_raw(&power, f);
        }
        if !c.is_zero() {
            for (slot, coord) in acc.iter_mut().zip(&power) {
                *slot = &*slot + &(coord * c);
            }
        }
    }
    acc.iter().all(UniPoly::is_zero)
}

/// The spectral value `max_i |a_i|^(1/i)` of a monic equation with lower
/// coefficients `a_1, …, a_n` (`a_i` multiplying `T^(n−i)`), in exact log
/// form: the exponent is `min_i ord_x(a_i)/(e·i)`.
fn equation_value(coeffs: &[&UniPoly], omega_exponent: u32) -> LogValue {
    let e = i64::from(omega_exponent);
    let mut best: Option<ExtRat> = None;
    for (i, a) in coeffs.iter().enumerate() {
        let Some(ord) = a.ord_x() else { continue };
        let q = ExtRat::Finite(rat(ord as i64, e * (i as i64 + 1)));
        if best.as_ref().is_none_or(|b| q < *b) {
            best = Some(q);
        }
    }
    match best {
        Some(q) => LogValue::from_exponent(q),
        None => LogValue::zero(),
    }
}

/// The spectral-seminorm value of `f` from its minimal polynomial, without
/// the integrally-closed guard; only sound as the exact seminorm when the
/// extension is integrally closed in its Tate ring.
pub fn spectral_from_min_poly(ext: &FreeExtension, f: &[UniPoly]) -> Result<LogValue> {
    let p = min_poly(ext, f)?;
    let coeffs: Vec<&UniPoly> = (1..=p.degree()).map(|i| p.lower_coefficient(i)).collect();
    Ok(equation_value(&coeffs, ext.omega_exponent))
}

/// The spectral seminorm `|f|_spc = max_i |a_i|^(1/i)` over the minimal
/// polynomial, valid when the extension is a domain and integrally closed.
pub fn spectral_norm_ext(ext: &FreeExtension, f: &[UniPoly]) -> Result<LogValue> {
    if !ext.domain || !ext.integrally_closed {
        return Err(Error::InvalidExtension(
            "the spectral formula requires the domain and integrally-closed flags".into(),
        ));
    }
    spectral_from_min_poly(ext, f)
}

/// The bound `max_i |a_i|^(1/i)` from any monic integral equation
/// `f^n + a_1·f^(n−1) + … + a_n = 0`; the equation is verified by table
/// arithmetic first.  Always at least the minimal-polynomial value — the
/// infimum over equations is attained there when `A` is normal.
pub fn integral_equation_upper_bound(
    ext: &FreeExtension,
    f: &[UniPoly],
    lower_coeffs: &[UniPoly],
) -> Result<LogValue> {
    ext.check_element(f)?;
    if lower_coeffs.is_empty() {
        return Err(Error::invalid("an integral equation needs at least one coefficient"));
    }
    let n = lower_coeffs.len();
    let descending = MinPoly {
        coeffs: lower_coeffs
            .iter()
            .rev()
            .cloned()
            .chain([UniPoly::one()])
            .collect(),
    };
    if !annihilates(ext, f, &descending) {
        return Err(Error::invalid("the equation does not annihilate the element"));
    }
    let coeffs: Vec<&UniPoly> = (0..n).map(|i| &lower_coeffs[i]).collect();
    Ok(equation_value(&coeffs, ext.omega_exponent))
}

/// The lattice seminorm `‖g‖`: the maximal `ϖ`-adic value over the
/// coordinates, with exponent `min_j ⌊ord_x(g_j)/e⌋`.
pub fn lattice_norm(ext: &FreeExtension, g: &[UniPoly]) -> Result<LogValue> {
    ext.check_element(g)?;
    let e = i64::from(ext.omega_exponent);
    let exponent = g
        .iter()
        .filter_map(|c| c.ord_x())
        .map(|ord| (ord as i64).div_euclid(e))
        .min();
    Ok(match exponent {
        Some(n) => LogValue::from_int_exponent(n),
        None => LogValue::zero(),
    })
}

/// Brackets the spectral seminorm by the lattice gauge limit: upper bounds
/// `‖f^m‖^(1/m)` along `m = 1, 2, 4, … ≤ max_power`, lower bound from the
/// minimal polynomial, with `m_star` recording exact closure.
pub fn basis_gauge_limit(
    ext: &FreeExtension,
    f: &[UniPoly],
    max_power: u32,
) -> Result<SpectralBracket> {
    if max_power == 0 {
        return Err(Error::invalid("the bracket needs at least one power"));
    }
    let lower = spectral_from_min_poly(ext, f)?;
    let mut power = f.to_vec();
    let mut m = 1u32;
    let mut upper: Option<LogValue> = None;
    let mut m_star = None;
    loop {
        let candidate = lattice_norm(ext, &power)?.root(i64::from(m));
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
        power = ext.mul_raw(&power, &power);
        m *= 2;
    }
    Ok(SpectralBracket {
        lower,
        upper: upper.expect("at least one power was tried"),
        m_star,
    })
}

/// Checks that the base ring embeds isometrically: for each `a` in the
/// corpus, `|a·1_B|_spc` must equal the `ϖ`-adic spectral value of `a` in
/// `A` (exponent `ord_x(a)/e`).
pub fn isometry_check(ext: &FreeExtension, corpus: &[UniPoly]) -> Result<Verdict<UniPoly>> {
    let e = i64::from(ext.omega_exponent);
    for a in corpus {
        let lhs = spectral_norm_ext(ext, &ext.from_base(a))?;
        let rhs = match a.ord_x() {
            Some(ord) => LogValue::from_exponent(ExtRat::Finite(rat(ord as i64, e))),
            None => LogValue::zero(),
        };
        if lhs != rhs {
            return Ok(Verdict::Witness(a.clone()));
        }
    }
    Ok(Verdict::Pass)
}

/// A failed integral-closedness claim: `basis/x^power` is integral over `A`
/// but lies outside the lattice `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureWitness {
    /// Label of the basis element.
    pub basis: String,
    /// The divided power of `x`.
    pub power: u32,
}

/// Searches for an element `b_i/x^j` that is integral over `A` but not in
/// `B`: with minimal polynomial coefficients `a_k` of `b_i`, the candidate
/// is integral exactly when `x^(j·k)` divides `a_k` for every `k`, and it
/// never lies in the lattice for `j ≥ 1`.  Returns the first witness in
/// basis order, or `None` when the probe exonerates the flag.
pub fn integrally_closed_probe(ext: &FreeExtension) -> Result<Option<ClosureWitness>> {
    for (i, label) in ext.basis.iter().enumerate() {
        let p = min_poly(ext, &ext.basis_element(i))?;
        let d = p.degree();
        let max_ord = (1..=d)
            .filter_map(|k| p.lower_coefficient(k).ord_x())
            .max()
            .unwrap_or(0);
        for j in 1..=max_ord as u32 {
            let integral = (1..=d).all(|k| {
                let a = p.lower_coefficient(k);
                a.is_zero() || a.ord_x().expect("nonzero") >= j as usize * k
            });
            if integral {
                return Ok(Some(ClosureWitness { basis: label.clone(), power: j }));
            }
        }
    }
    Ok(None)
}

/// JSON presentation of an extension: table entries as polynomial strings
/// in `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionSpec {
    /// Basis labels.
    pub basis: Vec<String>,
    /// `table[i][j]` as coordinate strings.
    pub table: Vec<Vec<Vec<String>>>,
    /// Coordinates of the unit.
    pub one: Vec<String>,
    /// `ϖ = x^e`.
    pub omega_exponent: u32,
    /// Domain flag.
    pub domain: bool,
    /// Integrally-closed flag.
    pub integrally_closed: bool,
}

impl ExtensionSpec {
    /// Parses the coordinate strings and validates the table.
    pub fn build(&self) -> Result<FreeExtension> {
        let table = self
            .table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|entry| entry.iter().map(|s| UniPoly::parse(s)).collect())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let one = self.one.iter().map(|s| UniPoly::parse(s)).collect::<Result<Vec<_>>>()?;
        FreeExtension::new(
            self.basis.clone(),
            table,
            one,
            self.omega_exponent,
            self.domain,
            self.integrally_closed,
        )
    }
}

/// The names of the shipped extensions.
pub const BUILTIN_NAMES: [&str; 3] = ["sqrt-x", "sqrt-x-plus-1", "cusp"];

/// The shipped quadratic extensions over `ℚ[x]` with `ϖ = x`:
/// `sqrt-x` adjoins `y` with `y² = x` (integrally closed), `sqrt-x-plus-1`
/// adjoins `y` with `y² = x + 1` (integrally closed), and `cusp` adjoins
/// `y` with `y² = x³` — a domain that is not integrally closed, shipped as
/// the negative control for the closure probe.
pub fn builtin(name: &str) -> Result<FreeExtension> {
    let quadratic = |square: UniPoly, integrally_closed: bool| {
        let z = UniPoly::zero;
        let o = UniPoly::one;
        FreeExtension::new(
            vec!["1".into(), "y".into()],
            vec![
                vec![vec![o(), z()], vec![z(), o()]],
                vec![vec![z(), o()], vec![square, z()]],
            ],
            vec![o(), z()],
            1,
            true,
            integrally_closed,
        )
    };
    match name {
        "sqrt-x" => quadratic(UniPoly::x_power(1), true),
        "sqrt-x-plus-1" => {
            quadratic(&UniPoly::x_power(1) + &UniPoly::one(), true)
        }
        "cusp" => quadratic(UniPoly::x_power(3), false),
        _ => Err(Error::invalid(format!(
            "unknown builtin extension {name:?}; available: {}",
            BUILTIN_NAMES.join(", ")
        ))),
    }
}
