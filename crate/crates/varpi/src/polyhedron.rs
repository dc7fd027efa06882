//! Newton polyhedra of monomial ideals with exact facet descriptions.
//!
//! The Newton polyhedron of a nonzero monomial ideal is the convex hull of
//! its generator exponents plus the nonnegative orthant.  It is cut out by
//! finitely many inequalities `⟨w, b⟩ ≥ c` with primitive nonnegative
//! integer normals `w`; the facet list here is irredundant, with offsets
//! `c = min_g ⟨w, g⟩` computed exactly.
//!
//! Facets are found by dimension: a single generator gives a translated
//! orthant, two variables use a monotone-chain hull, and three or four
//! variables run a double-description pass over the cone of valid
//! inequalities in `BigInt` arithmetic.  A slow subset-enumeration oracle
//! cross-checks all of them in tests.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exponent::{minimal_elements, ExponentVector};
use crate::ideal::MonomialIdeal;
use crate::linalg::{bigint_rank, LinearProgram};
use crate::scalar::{rat_int, Rational};

/// Largest supported ambient dimension for polyhedral computations.
pub const MAX_DIM: usize = 4;

/// One facet inequality `⟨normal, b⟩ ≥ offset`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Facet {
    /// Primitive nonnegative normal vector.
    pub normal: ExponentVector,
    /// Exact support value `min_g ⟨normal, g⟩`.
    pub offset: i64,
}

impl Facet {
    /// Evaluates the supporting form at an exponent vector.
    pub fn evaluate(&self, b: &ExponentVector) -> i64 {
        self.normal.dot(b)
    }

    /// True when the normal is a coordinate vector (the facet only states
    /// nonnegativity of one exponent beyond a common monomial factor).
    pub fn is_coordinate(&self) -> bool {
        self.normal.total_degree() == 1
    }
}

/// Newton polyhedron of a nonzero monomial ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    /// Ambient variable count.
    pub vars: usize,
    /// Irredundant facets, sorted lexicographically ascending by
    /// `(normal, offset)`.
    pub facets: Vec<Facet>,
    gens: Vec<ExponentVector>,
}

impl NewtonPolyhedron {
    /// Computes the Newton polyhedron of `ideal`.
    ///
    /// Errors on the zero ideal and on more than [`MAX_DIM`] variables.
    pub fn of_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.is_zero_ideal() {
            return Err(Error::ZeroIdeal);
        }
        let n = ideal.vars;
        if n == 0 || n > MAX_DIM {
            return Err(Error::UnsupportedDimension { found: n });
        }
        let gens = ideal.gens.clone();
        let mut facets = if gens.len() == 1 {
            translated_orthant(&gens[0])
        } else if n == 2 {
            chain_facets(&gens)
        } else {
            dd_facets(n, &gens)?
        };
        facets.sort();
        debug_assert!(facets_support(&facets, &gens));
        Ok(NewtonPolyhedron { vars: n, facets, gens })
    }

    /// The defining minimal generators.
    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    /// Membership test for a lattice point.
    pub fn contains(&self, b: &ExponentVector) -> bool {
        self.facets.iter().all(|f| f.evaluate(b) >= f.offset)
    }

    /// The dilated polyhedron `k · P`, which is the Newton polyhedron of the
    /// `k`-th power of the ideal.
    ///
    /// # Panics
    /// Panics if `k < 1`.
    pub fn scale(&self, k: i64) -> Self {
        assert!(k >= 1, "scale factor must be positive");
        NewtonPolyhedron {
            vars: self.vars,
            facets: self
                .facets
                .iter()
                .map(|f| Facet { normal: f.normal.clone(), offset: f.offset * k })
                .collect(),
            gens: self.gens.iter().map(|g| g.scale(k)).collect(),
        }
    }

    /// A rational point satisfying every facet except the chosen one, as a
    /// certificate that the facet is irredundant; `None` when the facet is
    /// implied by the others.
    ///
    /// Returns the point and its (violating) value under the chosen facet.
    pub fn facet_violation_witness(&self, index: usize) -> Option<(Vec<Rational>, Rational)> {
        let target = &self.facets[index];
        let bound = 4 * (2 + self.gens.iter().flat_map(|g| g.entries.iter()).max().copied().unwrap_or(0));
        let mut lp = LinearProgram::new(self.vars);
        for (j, f) in self.facets.iter().enumerate() {
            if j == index {
                continue;
            }
            lp.add_ge(
                f.normal.entries.iter().map(|&v| rat_int(v)).collect(),
                rat_int(f.offset),
            );
        }
        for i in 0..self.vars {
            let mut up = vec![rat_int(0); self.vars];
            up[i] = rat_int(-1);
            lp.add_ge(up, rat_int(-bound));
            let mut down = vec![rat_int(0); self.vars];
            down[i] = rat_int(1);
            lp.add_ge(down, rat_int(-bound));
        }
        let objective: Vec<Rational> =
            target.normal.entries.iter().map(|&v| rat_int(v)).collect();
        let (point, value) = lp.minimize(&objective)?;
        if value < rat_int(target.offset) {
            Some((point, value))
        } else {
            None
        }
    }
}

/// Integral closure of a monomial ideal: all lattice points of the Newton
/// polyhedron, searched over the divisor box of the generator maxima.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if ideal.is_zero_ideal() {
        return Ok(ideal.clone());
    }
    let np = NewtonPolyhedron::of_ideal(ideal)?;
    let n = ideal.vars;
    let bounds: Vec<i64> = (0..n)
        .map(|i| ideal.gens.iter().map(|g| g.entries[i]).max().expect("nonzero ideal"))
        .collect();
    let mut inside = Vec::new();
    let mut b = vec![0i64; n];
    'points: loop {
        let point = ExponentVector::new(b.clone());
        if np.contains(&point) {
            inside.push(point);
        }
        let mut i = 0;
        loop {
            if i == n {
                break 'points;
            }
            if b[i] < bounds[i] {
                b[i] += 1;
                break;
            }
            b[i] = 0;
            i += 1;
        }
    }
    MonomialIdeal::new(n, minimal_elements(inside))
}

fn translated_orthant(g: &ExponentVector) -> Vec<Facet> {
    (0..g.len())
        .map(|i| Facet { normal: ExponentVector::unit(g.len(), i), offset: g.entries[i] })
        .collect()
}

/// Two-variable case: lower-left hull of the generator staircase by a
/// monotone chain, edge normals read off consecutive hull points.
fn chain_facets(gens: &[ExponentVector]) -> Vec<Facet> {
    let mut pts: Vec<(i64, i64)> = gens.iter().map(|g| (g.entries[0], g.entries[1])).collect();
    pts.sort();
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let cross = (b.0 - a.0) * (p.1 - b.1) - (b.1 - a.1) * (p.0 - b.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let mut facets = vec![
        Facet { normal: ExponentVector::unit(2, 0), offset: pts[0].0 },
        Facet { normal: ExponentVector::unit(2, 1), offset: pts[pts.len() - 1].1 },
    ];
    for pair in hull.windows(2) {
        let (p, q) = (pair[0], pair[1]);
        let mut w0 = p.1 - q.1;
        let mut w1 = q.0 - p.0;
        let d = w0.gcd(&w1);
        w0 /= d;
        w1 /= d;
        facets.push(Facet {
            normal: ExponentVector::new(vec![w0, w1]),
            offset: w0 * p.0 + w1 * p.1,
        });
    }
    facets
}

/// Three- and four-variable case: double description on the cone of valid
/// inequalities `{(w, t) : w ≥ 0, ⟨g, w⟩ − t ≥ 0 for all generators}`.
/// Extreme rays with `w ≠ 0` are exactly the facets of the polyhedron.
fn dd_facets(n: usize, gens: &[ExponentVector]) -> Result<Vec<Facet>> {
    let dim = n + 1;
    let gen_row = |g: &ExponentVector| -> Vec<BigInt> {
        let mut row: Vec<BigInt> = g.entries.iter().map(|&v| BigInt::from(v)).collect();
        row.push(BigInt::from(-1));
        row
    };
    let coord_row = |i: usize| -> Vec<BigInt> {
        let mut row = vec![BigInt::zero(); dim];
        row[i] = BigInt::from(1);
        row
    };
    // Initial simplicial cone from the coordinate rows and the first
    // generator row; its extreme rays are the columns of the inverse matrix.
    let mut processed: Vec<Vec<BigInt>> = (0..n).map(coord_row).collect();
    processed.push(gen_row(&gens[0]));
    let mut rays: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut r = vec![BigInt::zero(); dim];
            r[i] = BigInt::from(1);
            r[n] = BigInt::from(gens[0].entries[i]);
            r
        })
        .collect();
    let mut tail = vec![BigInt::zero(); dim];
    tail[n] = BigInt::from(-1);
    rays.push(tail);

    for g in &gens[1..] {
        let a = gen_row(g);
        let vals: Vec<BigInt> = rays.iter().map(|r| dot(&a, r)).collect();
        if vals.iter().all(|v| !v.is_negative()) {
            processed.push(a);
            continue;
        }
        let mut next: Vec<Vec<BigInt>> = Vec::new();
        for (r, v) in rays.iter().zip(&vals) {
            if !v.is_negative() {
                next.push(r.clone());
            }
        }
        for (pi, pv) in vals.iter().enumerate().filter(|(_, v)| v.is_positive()) {
            for (mi, mv) in vals.iter().enumerate().filter(|(_, v)| v.is_negative()) {
                if !adjacent(&rays[pi], &rays[mi], &processed, dim) {
                    continue;
                }
                let mut combo: Vec<BigInt> = (0..dim)
                    .map(|c| pv * &rays[mi][c] - mv * &rays[pi][c])
                    .collect();
                reduce_content(&mut combo);
                next.push(combo);
            }
        }
        next.sort();
        next.dedup();
        rays = next;
        processed.push(a);
    }

    let mut facets = Vec::new();
    for r in &rays {
        if r[..n].iter().all(Zero::is_zero) {
            continue;
        }
        let normal = ExponentVector::new(
            r[..n]
                .iter()
                .map(|v| v.to_i64().ok_or_else(|| Error::invalid("facet normal overflows i64")))
                .collect::<Result<Vec<i64>>>()?,
        );
        let offset = r[n]
            .to_i64()
            .ok_or_else(|| Error::invalid("facet offset overflows i64"))?;
        facets.push(Facet { normal, offset });
    }
    Ok(facets)
}

/// Rays are adjacent when the constraints tight at both span a subspace of
/// codimension two.
fn adjacent(r: &[BigInt], s: &[BigInt], processed: &[Vec<BigInt>], dim: usize) -> bool {
    let common: Vec<Vec<BigInt>> = processed
        .iter()
        .filter(|a| dot(a, r).is_zero() && dot(a, s).is_zero())
        .cloned()
        .collect();
    bigint_rank(&common) == dim - 2
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn reduce_content(v: &mut [BigInt]) {
    let mut d = BigInt::zero();
    for x in v.iter() {
        d = d.gcd(x);
    }
    if d.is_zero() || d == BigInt::from(1) {
        return;
    }
    for x in v.iter_mut() {
        *x = &*x / &d;
    }
}

/// Checks that every generator satisfies every facet and every facet offset
/// is attained (used as a debug invariant).
fn facets_support(facets: &[Facet], gens: &[ExponentVector]) -> bool {
    facets.iter().all(|f| {
        let values: Vec<i64> = gens.iter().map(|g| f.evaluate(g)).collect();
        values.iter().all(|&v| v >= f.offset) && values.contains(&f.offset)
    })
}

/// Slow, independent facet computation for cross-checks: every candidate
/// normal orthogonal to a spanning set drawn from generator differences and
/// coordinate rays is tested for validity and for supporting a face of
/// codimension one.
#[doc(hidden)]
pub fn facets_by_subset_enumeration(ideal: &MonomialIdeal) -> Result<Vec<Facet>> {
    if ideal.is_zero_ideal() {
        return Err(Error::ZeroIdeal);
    }
    let n = ideal.vars;
    if n == 0 || n > MAX_DIM {
        return Err(Error::UnsupportedDimension { found: n });
    }
    let gens = &ideal.gens;
    let mut facets: Vec<Facet> = Vec::new();
    let gen_sets = subsets_up_to(gens.len(), n);
    for gen_set in &gen_sets {
        if gen_set.is_empty() {
            continue;
        }
        for coord_set in &subsets_up_to(n, n) {
            if gen_set.len() + coord_set.len() != n {
                continue;
            }
            let mut rows: Vec<Vec<BigInt>> = Vec::new();
            let base = &gens[gen_set[0]];
            for &gi in &gen_set[1..] {
                rows.push(
                    (&gens[gi] - base).entries.iter().map(|&v| BigInt::from(v)).collect(),
                );
            }
            for &ci in coord_set {
                let mut row = vec![BigInt::zero(); n];
                row[ci] = BigInt::from(1);
                rows.push(row);
            }
            let Some(mut w) = integer_kernel_vector(&rows, n) else { continue };
            if w.iter().all(|v| !v.is_positive()) {
                for v in w.iter_mut() {
                    *v = -v.clone();
                }
            }
            if w.iter().any(Signed::is_negative) || w.iter().all(Zero::is_zero) {
                continue;
            }
            reduce_content(&mut w);
            let normal = ExponentVector::new(
                w.iter().map(|v| v.to_i64().expect("desk-scale normal")).collect(),
            );
            let offset = gens.iter().map(|g| normal.dot(g)).min().expect("nonzero ideal");
            let candidate = Facet { normal, offset };
            if facets.contains(&candidate) {
                continue;
            }
            // Face dimension check: tight generators and tight coordinate
            // rays must span a codimension-one direction space.
            let tight: Vec<&ExponentVector> =
                gens.iter().filter(|g| candidate.evaluate(g) == offset).collect();
            let mut dirs: Vec<Vec<BigInt>> = tight[1..]
                .iter()
                .map(|g| (*g - tight[0]).entries.iter().map(|&v| BigInt::from(v)).collect())
                .collect();
            for i in 0..n {
                if candidate.normal.entries[i] == 0 {
                    let mut row = vec![BigInt::zero(); n];
                    row[i] = BigInt::from(1);
                    dirs.push(row);
                }
            }
            if bigint_rank(&dirs) == n - 1 {
                facets.push(candidate);
            }
        }
    }
    facets.sort();
    Ok(facets)
}

/// All index subsets of `{0..count}` with size at most `max_size`.
fn subsets_up_to(count: usize, max_size: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for i in 0..count {
        let mut grown: Vec<Vec<usize>> = out
            .iter()
            .filter(|s| s.len() < max_size)
            .map(|s| {
                let mut t = s.clone();
                t.push(i);
                t
            })
            .collect();
        out.append(&mut grown);
    }
    out
}

/// A nonzero integer vector orthogonal to all rows, when the rows have rank
/// exactly `n − 1`; computed from signed maximal minors.
fn integer_kernel_vector(rows: &[Vec<BigInt>], n: usize) -> Option<Vec<BigInt>> {
    if rows.len() != n - 1 {
        return None;
    }
    let mut w = Vec::with_capacity(n);
    for skip in 0..n {
        let minor: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != skip)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let sign = if skip % 2 == 0 { 1 } else { -1 };
        w.push(BigInt::from(sign) * bigint_det(&minor));
    }
    if w.iter().all(Zero::is_zero) {
        None
    } else {
        Some(w)
    }
}

/// Determinant of a small square integer matrix by fraction-free expansion.
fn bigint_det(m: &[Vec<BigInt>]) -> BigInt {
    match m.len() {
        0 => BigInt::from(1),
        1 => m[0][0].clone(),
        k => {
            let mut det = BigInt::zero();
            for j in 0..k {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                det += BigInt::from(sign) * &m[0][j] * bigint_det(&minor);
            }
            det
        }
    }
}
