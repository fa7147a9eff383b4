//! Exact elimination: linear solve, right kernel, determinant.
//!
//! Rational systems are scaled row by row to integers and reduced with
//! fraction-free elimination; after every row update the row is divided by
//! its content. The pivot in each column is the nonzero candidate with the
//! fewest bits.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer as _;
use num_traits::Zero;

use crate::arith::rational::{denominator_lcm, make_primitive, normalize_integer_vector};
use crate::arith::{ExactMatrix, Field, Integer, Rational, Ring};
use crate::error::{Error, Result};

/// An exact solution of `A x = b`. Free variables are set to zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution<T> {
    pub x: Vec<T>,
    pub unique: bool,
}

struct Echelon {
    rows: Vec<Vec<Integer>>,
    pivots: Vec<usize>,
}

pub(crate) fn integer_row(row: &[Rational]) -> Vec<Integer> {
    let l = Rational::from_integer(denominator_lcm(row));
    let mut out: Vec<Integer> = row.iter().map(|v| (v * &l).to_integer()).collect();
    make_primitive(&mut out);
    out
}

pub(crate) fn forward_eliminate(
    mut rows: Vec<Vec<Integer>>,
    pivot_cols: usize,
) -> (Vec<Vec<Integer>>, Vec<usize>) {
    let mut rank = 0;
    let mut pivots = Vec::new();
    for col in 0..pivot_cols {
        if rank == rows.len() {
            break;
        }
        let best = (rank..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].bits());
        let Some(best) = best else { continue };
        rows.swap(rank, best);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        let p = &prow[col];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = p.gcd(&row[col]);
            let pm = p / &g;
            let em = &row[col] / &g;
            for c in col..row.len() {
                if prow[c].is_zero() {
                    if !row[c].is_zero() {
                        row[c] *= &pm;
                    }
                } else {
                    row[c] = &pm * &row[c] - &em * &prow[c];
                }
            }
            make_primitive(row);
        }
        pivots.push(col);
        rank += 1;
    }
    (rows, pivots)
}

fn echelon(a: &ExactMatrix<Rational>, rhs: Option<&[Rational]>) -> Echelon {
    let rows = (0..a.rows())
        .map(|i| match rhs {
            Some(b) => {
                let mut r = a.row(i).to_vec();
                r.push(b[i].clone());
                integer_row(&r)
            }
            None => integer_row(a.row(i)),
        })
        .collect();
    let (rows, pivots) = forward_eliminate(rows, a.cols());
    Echelon { rows, pivots }
}

/// Back substitution over the pivot rows; `x` holds the free values and
/// `rhs` the optional right-hand column index.
fn back_substitute(ech: &Echelon, ncols: usize, x: &mut [Rational], rhs: Option<usize>) {
    for (k, &pc) in ech.pivots.iter().enumerate().rev() {
        let row = &ech.rows[k];
        let mut s = match rhs {
            Some(b) => Rational::from_integer(row[b].clone()),
            None => Rational::zero(),
        };
        for c in pc + 1..ncols {
            if !row[c].is_zero() && !x[c].is_zero() {
                s -= Rational::from_integer(row[c].clone()) * &x[c];
            }
        }
        x[pc] = s / Rational::from_integer(row[pc].clone());
    }
}

/// Solves `A x = b` exactly. Returns `None` when the system is inconsistent.
pub fn solve_linear(
    a: &ExactMatrix<Rational>,
    b: &[Rational],
) -> Result<Option<Solution<Rational>>> {
    if b.len() != a.rows() {
        return Err(Error::ShapeMismatch(alloc::format!(
            "{} rows but right-hand side of length {}",
            a.rows(),
            b.len()
        )));
    }
    let n = a.cols();
    let ech = echelon(a, Some(b));
    let rank = ech.pivots.len();
    if ech.rows[rank..].iter().any(|r| !r[n].is_zero()) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); n];
    back_substitute(&ech, n, &mut x, Some(n));
    Ok(Some(Solution {
        x,
        unique: rank == n,
    }))
}

/// Basis of the right kernel as primitive integer vectors whose first
/// nonzero entry is positive, one per free column in increasing order.
pub fn nullspace_integer(a: &ExactMatrix<Rational>) -> Vec<Vec<Integer>> {
    let ech = echelon(a, None);
    kernel_from_echelon(&ech, a.cols())
}

fn kernel_from_echelon(ech: &Echelon, n: usize) -> Vec<Vec<Integer>> {
    let free: Vec<usize> = (0..n).filter(|c| !ech.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); n];
            x[f] = Rational::from_integer(1.into());
            back_substitute(ech, n, &mut x, None);
            normalize_integer_vector(&x)
        })
        .collect()
}

/// Kernel of integer rows, used by the guesser which builds its equation
/// matrix directly in integers.
pub(crate) fn integer_rows_kernel(rows: Vec<Vec<Integer>>, ncols: usize) -> Vec<Vec<Integer>> {
    let (rows, pivots) = forward_eliminate(rows, ncols);
    kernel_from_echelon(&Echelon { rows, pivots }, ncols)
}

/// [`nullspace_integer`] with entries as rationals.
pub fn nullspace(a: &ExactMatrix<Rational>) -> Vec<Vec<Rational>> {
    nullspace_integer(a)
        .into_iter()
        .map(|v| v.into_iter().map(Rational::from_integer).collect())
        .collect()
}

/// Gauss–Jordan elimination over an arbitrary field.
pub fn solve_linear_field<F: Field>(a: &ExactMatrix<F>, b: &[F]) -> Result<Option<Solution<F>>> {
    if b.len() != a.rows() {
        return Err(Error::ShapeMismatch(alloc::format!(
            "{} rows but right-hand side of length {}",
            a.rows(),
            b.len()
        )));
    }
    let n = a.cols();
    let mut m: Vec<Vec<F>> = (0..a.rows())
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let best = (rank..m.len())
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].size());
        let Some(best) = best else { continue };
        m.swap(rank, best);
        let inv = m[rank][col].inverse().expect("pivot is nonzero");
        for x in &mut m[rank][col..=n] {
            *x = x.times(&inv);
        }
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row[col..=n].iter_mut().zip(&pivot[col..=n]) {
                if !p.is_zero() {
                    *x = x.minus(&f.times(p));
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if m[rank..].iter().any(|r| !r[n].is_zero()) {
        return Ok(None);
    }
    let mut x = vec![F::zero(); n];
    for (k, &pc) in pivots.iter().enumerate() {
        x[pc] = m[k][n].clone();
    }
    Ok(Some(Solution {
        x,
        unique: rank == n,
    }))
}

/// Determinant by Bareiss fraction-free elimination.
pub fn determinant<T: Ring>(a: &ExactMatrix<T>) -> Result<T> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(alloc::format!(
            "{}x{} is not square",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    if n == 0 {
        return Ok(T::one());
    }
    let mut m: Vec<Vec<T>> = (0..n).map(|i| a.row(i).to_vec()).collect();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        let best = (k..n)
            .filter(|&r| !m[r][k].is_zero())
            .min_by_key(|&r| m[r][k].size());
        let Some(best) = best else {
            return Ok(T::zero());
        };
        if best != k {
            m.swap(k, best);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].times(&m[k][k]).minus(&m[i][k].times(&m[k][j]));
                m[i][j] = v.div_exact(&prev).expect("Bareiss quotients are exact");
            }
            m[i][k] = T::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negate { d.negated() } else { d })
}
