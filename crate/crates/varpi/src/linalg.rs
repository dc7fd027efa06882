//! Exact linear algebra over the rationals: Gaussian elimination, ranks,
//! square solves, and a small vertex-enumeration linear-program solver.
//!
//! Everything here is dimension-four-or-less desk scale, so the linear
//! program enumerates basic feasible points exactly instead of pivoting.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::scalar::Rational;

/// Row-echelonizes in place and returns the rank.
fn eliminate(m: &mut [Vec<Rational>]) -> usize {
    let nrows = m.len();
    let ncols = if nrows == 0 { 0 } else { m[0].len() };
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        let pivot_row = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot;
            for (entry, above) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                let delta = &factor * above;
                *entry = &*entry - &delta;
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of a rational matrix.
pub fn rational_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    eliminate(&mut m)
}

/// Rank of an integer matrix.
pub fn bigint_rank(rows: &[Vec<BigInt>]) -> usize {
    let m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|row| row.iter().map(|v| Rational::from(v.clone())).collect())
        .collect();
    rational_rank(&m)
}

/// Solves the square system `a · x = b` exactly; `None` when singular.
pub fn rational_solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    assert_eq!(b.len(), n, "shape mismatch");
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), n, "shape mismatch");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, p);
        let pivot = m[col][col].clone();
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot;
            for (entry, above) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                let delta = &factor * above;
                *entry = &*entry - &delta;
            }
        }
    }
    Some((0..n).map(|i| &m[i][n] / &m[i][i]).collect())
}

/// A system of linear constraints `a · x ≥ b` over exact rationals.
#[derive(Debug, Clone, Default)]
pub struct LinearProgram {
    /// Ambient dimension.
    pub n: usize,
    constraints: Vec<(Vec<Rational>, Rational)>,
}

impl LinearProgram {
    /// An empty program in dimension `n`.
    pub fn new(n: usize) -> Self {
        LinearProgram { n, constraints: Vec::new() }
    }

    /// Adds the constraint `coeffs · x ≥ rhs`.
    pub fn add_ge(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        assert_eq!(coeffs.len(), self.n, "shape mismatch");
        self.constraints.push((coeffs, rhs));
    }

    /// Number of constraints so far.
    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    /// True when no constraint has been added.
    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    /// Minimizes `objective · x` over the feasible region by enumerating
    /// vertices (every `n`-subset of tight constraints).  Returns a minimizing
    /// vertex and its value, preferring the lexicographically smallest point
    /// among ties; `None` when the region has no vertex.
    ///
    /// Callers are expected to make the region a polytope (adding box
    /// constraints when needed), otherwise the true infimum may be missed.
    pub fn minimize(&self, objective: &[Rational]) -> Option<(Vec<Rational>, Rational)> {
        assert_eq!(objective.len(), self.n, "shape mismatch");
        let mut best: Option<(Vec<Rational>, Rational)> = None;
        let mut subset = vec![0usize; self.n];
        self.visit_subsets(0, 0, &mut subset, objective, &mut best);
        best
    }

    fn visit_subsets(
        &self,
        depth: usize,
        start: usize,
        subset: &mut Vec<usize>,
        objective: &[Rational],
        best: &mut Option<(Vec<Rational>, Rational)>,
    ) {
        if depth == self.n {
            self.consider_vertex(subset, objective, best);
            return;
        }
        for i in start..self.constraints.len() {
            subset[depth] = i;
            self.visit_subsets(depth + 1, i + 1, subset, objective, best);
        }
    }

    fn consider_vertex(
        &self,
        subset: &[usize],
        objective: &[Rational],
        best: &mut Option<(Vec<Rational>, Rational)>,
    ) {
        let a: Vec<Vec<Rational>> = subset.iter().map(|&i| self.constraints[i].0.clone()).collect();
        let b: Vec<Rational> = subset.iter().map(|&i| self.constraints[i].1.clone()).collect();
        let Some(x) = rational_solve(&a, &b) else { return };
        let feasible = self.constraints.iter().all(|(coeffs, rhs)| {
            let lhs: Rational = coeffs.iter().zip(&x).map(|(c, v)| c * v).sum();
            lhs >= *rhs
        });
        if !feasible {
            return;
        }
        let value: Rational = objective.iter().zip(&x).map(|(c, v)| c * v).sum();
        let better = match best {
            None => true,
            Some((bx, bv)) => value < *bv || (value == *bv && x < *bx),
        };
        if better {
            *best = Some((x, value));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn row(vals: &[i64]) -> Vec<Rational> {
        vals.iter().map(|&v| rat_int(v)).collect()
    }

    #[test]
    fn solve_square_system() {
        // 2x + y = 5, x - y = 1  =>  x = 2, y = 1.
        let a = vec![row(&[2, 1]), row(&[1, -1])];
        let b = row(&[5, 1]);
        assert_eq!(rational_solve(&a, &b).unwrap(), row(&[2, 1]));
        let singular = vec![row(&[1, 2]), row(&[2, 4])];
        assert!(rational_solve(&singular, &row(&[1, 2])).is_none());
    }

    #[test]
    fn solve_with_rational_result() {
        let a = vec![row(&[3])];
        let b = row(&[2]);
        assert_eq!(rational_solve(&a, &b).unwrap(), vec![rat(2, 3)]);
    }

    #[test]
    fn ranks() {
        assert_eq!(rational_rank(&[row(&[1, 2]), row(&[2, 4])]), 1);
        assert_eq!(rational_rank(&[row(&[1, 0]), row(&[0, 1])]), 2);
        assert_eq!(rational_rank(&[row(&[0, 0])]), 0);
        assert_eq!(rational_rank(&[]), 0);
        let rows: Vec<Vec<BigInt>> = vec![
            vec![BigInt::from(1), BigInt::from(2), BigInt::from(3)],
            vec![BigInt::from(2), BigInt::from(4), BigInt::from(6)],
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(0)],
        ];
        assert_eq!(bigint_rank(&rows), 2);
    }

    #[test]
    fn minimize_over_a_box_corner() {
        // min x + y over x ≥ 1, y ≥ 2, x ≤ 10, y ≤ 10.
        let mut lp = LinearProgram::new(2);
        lp.add_ge(row(&[1, 0]), rat_int(1));
        lp.add_ge(row(&[0, 1]), rat_int(2));
        lp.add_ge(row(&[-1, 0]), rat_int(-10));
        lp.add_ge(row(&[0, -1]), rat_int(-10));
        let (x, v) = lp.minimize(&row(&[1, 1])).unwrap();
        assert_eq!(x, row(&[1, 2]));
        assert_eq!(v, rat_int(3));
    }

    #[test]
    fn minimize_reports_fractional_vertices() {
        // min y subject to 2y ≥ 3, y ≤ 5.
        let mut lp = LinearProgram::new(1);
        lp.add_ge(row(&[2]), rat_int(3));
        lp.add_ge(row(&[-1]), rat_int(-5));
        let (x, v) = lp.minimize(&row(&[1])).unwrap();
        assert_eq!(x, vec![rat(3, 2)]);
        assert_eq!(v, rat(3, 2));
    }

    #[test]
    fn infeasible_program_has_no_vertex() {
        let mut lp = LinearProgram::new(1);
        lp.add_ge(row(&[1]), rat_int(2));
        lp.add_ge(row(&[-1]), rat_int(-1));
        assert!(lp.minimize(&row(&[1])).is_none());
    }
}
