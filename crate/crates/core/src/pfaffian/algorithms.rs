use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{PerfectMatching, SkewMatrix};
use crate::arith::{Field, Polynomial, RationalFunction, Ring};
use crate::error::{Error, Result};

/// Largest dimension accepted by [`pf_naive`]; `13!! = 135135` matchings.
pub const NAIVE_MAX_DIM: usize = 14;
/// Largest dimension accepted by [`pf_laplace`].
pub const LAPLACE_MAX_DIM: usize = 24;

/// Pfaffian as a signed sum over all perfect matchings.
pub fn pf_naive<R: Ring>(a: &SkewMatrix<R>) -> Result<R> {
    if a.dim() > NAIVE_MAX_DIM {
        return Err(Error::DimensionTooLarge {
            dim: a.dim(),
            limit: NAIVE_MAX_DIM,
        });
    }
    let mut total = R::zero();
    for m in PerfectMatching::all(a.dim()) {
        let mut term = R::one();
        for &(i, j) in m.pairs() {
            term = term.times(a.upper(i, j));
            if term.is_zero() {
                break;
            }
        }
        if term.is_zero() {
            continue;
        }
        total = if m.sign() > 0 {
            total.plus(&term)
        } else {
            total.minus(&term)
        };
    }
    Ok(total)
}

/// Pfaffian by skew-symmetric congruence elimination over a field.
///
/// Each step pairs row `k` with a pivot partner `p` (swapped into position
/// `k + 1`, flipping the sign when `p != k + 1`), multiplies the result by
/// the pivot, and replaces the trailing block by its skew Schur complement.
pub fn pf_eliminate<F: Field>(a: &SkewMatrix<F>) -> F {
    let n = a.dim();
    let mut m: Vec<Vec<F>> = (1..=n)
        .map(|i| (1..=n).map(|j| a.get(i, j)).collect())
        .collect();
    let mut result = F::one();
    let mut k = 0;
    while k < n {
        let pivot = (k + 1..n)
            .filter(|&j| !m[k][j].is_zero())
            .min_by_key(|&j| m[k][j].size());
        let Some(p) = pivot else {
            return F::zero();
        };
        if p != k + 1 {
            m.swap(p, k + 1);
            for row in m.iter_mut() {
                row.swap(p, k + 1);
            }
            result = result.negated();
        }
        let piv = m[k][k + 1].clone();
        result = result.times(&piv);
        let inv = piv.inverse().expect("nonzero pivot");
        let c0: Vec<F> = (0..n).map(|i| m[i][k].clone()).collect();
        let c1: Vec<F> = (0..n).map(|i| m[i][k + 1].clone()).collect();
        for i in k + 2..n {
            for j in i + 1..n {
                // D'_{ij} = D_{ij} + (a_{ik} a_{k+1,j} - a_{i,k+1} a_{kj}) / a
                let t = c0[i].times(&c1[j]).minus(&c1[i].times(&c0[j]));
                if t.is_zero() {
                    continue;
                }
                let v = m[i][j].minus(&t.times(&inv));
                m[j][i] = v.negated();
                m[i][j] = v;
            }
        }
        k += 2;
    }
    result
}

/// Pfaffian of a polynomial matrix, eliminating over the fraction field.
pub fn pf_polynomial(a: &SkewMatrix<Polynomial>) -> Polynomial {
    let f = a.map(|p| RationalFunction::from(p.clone()));
    pf_eliminate(&f)
        .to_polynomial()
        .expect("a Pfaffian of polynomials is a polynomial")
}

/// Pfaffian by recursive Laplace expansion along the last row, memoised
/// over index subsets. Division-free, so it works over any ring.
pub fn pf_laplace<R: Ring>(a: &SkewMatrix<R>) -> Result<R> {
    if a.dim() > LAPLACE_MAX_DIM {
        return Err(Error::DimensionTooLarge {
            dim: a.dim(),
            limit: LAPLACE_MAX_DIM,
        });
    }
    let mut memo = BTreeMap::new();
    let full: u32 = if a.dim() == 0 {
        0
    } else {
        (1u32 << a.dim()) - 1
    };
    Ok(laplace_rec(a, full, &mut memo))
}

fn laplace_rec<R: Ring>(a: &SkewMatrix<R>, set: u32, memo: &mut BTreeMap<u32, R>) -> R {
    if set == 0 {
        return R::one();
    }
    if let Some(v) = memo.get(&set) {
        return v.clone();
    }
    let last = 31 - set.leading_zeros() as usize;
    let rest = set & !(1 << last);
    let mut total = R::zero();
    // position (one-based) of k among the remaining indices fixes the sign (-1)^{pos+1}
    let mut pos = 0usize;
    let mut bits = rest;
    while bits != 0 {
        let k = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        pos += 1;
        let entry = a.upper(k + 1, last + 1);
        if entry.is_zero() {
            continue;
        }
        let term = entry.times(&laplace_rec(a, rest & !(1 << k), memo));
        total = if pos % 2 == 1 {
            total.plus(&term)
        } else {
            total.minus(&term)
        };
    }
    memo.insert(set, total.clone());
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, Rational};

    fn generic4() -> SkewMatrix<Polynomial> {
        let names = ["a", "b", "c", "d", "e", "f"];
        let mut it = names.iter();
        SkewMatrix::from_fn(4, |_, _| Polynomial::variable(it.next().unwrap())).unwrap()
    }

    #[test]
    fn generic_four_by_four() {
        let expected = Polynomial::parse("a*f - b*e + c*d").unwrap();
        let m = generic4();
        assert_eq!(pf_naive(&m).unwrap(), expected);
        assert_eq!(pf_laplace(&m).unwrap(), expected);
        assert_eq!(pf_polynomial(&m), expected);
    }

    #[test]
    fn small_dimensions() {
        let empty = SkewMatrix::<Rational>::zeros(0);
        assert_eq!(pf_naive(&empty).unwrap(), int(1));
        assert_eq!(pf_eliminate(&empty), int(1));
        assert_eq!(pf_laplace(&empty).unwrap(), int(1));
        let two = SkewMatrix::from_fn(2, |_, _| int(7)).unwrap();
        assert_eq!(pf_eliminate(&two), int(7));
        assert_eq!(pf_naive(&two).unwrap(), int(7));
    }

    #[test]
    fn zero_pivot_swaps_and_zero_rows() {
        // a_{12} = 0 forces a swap
        let m = SkewMatrix::from_fn(4, |i, j| {
            if (i, j) == (1, 2) {
                int(0)
            } else {
                int((i * j) as i64)
            }
        })
        .unwrap();
        assert_eq!(pf_eliminate(&m), pf_naive(&m).unwrap());
        let z = SkewMatrix::from_fn(4, |i, j| if i == 1 { int(0) } else { int((i + j) as i64) })
            .unwrap();
        assert_eq!(pf_eliminate(&z), int(0));
    }

    #[test]
    fn guards() {
        let big = SkewMatrix::<Rational>::zeros(16);
        assert_eq!(
            pf_naive(&big),
            Err(Error::DimensionTooLarge {
                dim: 16,
                limit: NAIVE_MAX_DIM
            })
        );
        let huge = SkewMatrix::<Rational>::zeros(26);
        assert!(pf_laplace(&huge).is_err());
    }
}
