use alloc::vec::Vec;
use core::fmt;

use crate::arith::{ExactMatrix, Ring};
use crate::error::{Error, Result};

/// A skew-symmetric matrix of even dimension, stored by its strict upper
/// triangle.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewMatrix<T> {
    dim: usize,
    upper: Vec<T>,
}

impl<T: Ring> SkewMatrix<T> {
    /// # Panics
    /// If `dim` is odd.
    pub fn zeros(dim: usize) -> Self {
        assert!(dim % 2 == 0, "odd dimension {dim}");
        SkewMatrix {
            dim,
            upper: (0..dim * dim.saturating_sub(1) / 2)
                .map(|_| T::zero())
                .collect(),
        }
    }

    /// Builds the matrix from `f(i, j)` for `1 <= i < j <= dim`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Result<Self> {
        if dim % 2 == 1 {
            return Err(Error::OddDimension(dim));
        }
        let mut upper = Vec::with_capacity(dim * dim.saturating_sub(1) / 2);
        for i in 1..=dim {
            for j in i + 1..=dim {
                upper.push(f(i, j));
            }
        }
        Ok(SkewMatrix { dim, upper })
    }

    /// Reads a dense matrix, checking `a_{j,i} = -a_{i,j}` and a zero diagonal.
    pub fn from_dense(m: &ExactMatrix<T>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::ShapeMismatch(alloc::format!(
                "{}x{} is not square",
                m.rows(),
                m.cols()
            )));
        }
        let n = m.rows();
        for i in 0..n {
            if !m.get(i, i).is_zero() {
                return Err(Error::NotSkewSymmetric { i: i + 1, j: i + 1 });
            }
            for j in i + 1..n {
                if *m.get(j, i) != m.get(i, j).negated() {
                    return Err(Error::NotSkewSymmetric { i: i + 1, j: j + 1 });
                }
            }
        }
        Self::from_fn(n, |i, j| m.get(i - 1, j - 1).clone())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        // row i (one-based) starts after sum_{r<i} (dim - r) entries
        (i - 1) * (2 * self.dim - i) / 2 + (j - i - 1)
    }

    /// `a_{i,j}` for any one-based `i, j`, with `a_{j,i} = -a_{i,j}`.
    pub fn get(&self, i: usize, j: usize) -> T {
        debug_assert!(i >= 1 && j >= 1 && i <= self.dim && j <= self.dim);
        match i.cmp(&j) {
            core::cmp::Ordering::Less => self.upper[self.offset(i, j)].clone(),
            core::cmp::Ordering::Greater => self.upper[self.offset(j, i)].negated(),
            core::cmp::Ordering::Equal => T::zero(),
        }
    }

    /// Borrow of the stored entry for `i < j`.
    pub fn upper(&self, i: usize, j: usize) -> &T {
        &self.upper[self.offset(i, j)]
    }

    /// Sets `a_{i,j}` (and implicitly `a_{j,i}`); requires `i != j`.
    pub fn set(&mut self, i: usize, j: usize, value: T) {
        assert!(i != j, "diagonal of a skew-symmetric matrix is zero");
        if i < j {
            let o = self.offset(i, j);
            self.upper[o] = value;
        } else {
            let o = self.offset(j, i);
            self.upper[o] = value.negated();
        }
    }

    /// Principal submatrix on the given ascending one-based indices; the
    /// caller guarantees an even count.
    pub(crate) fn principal(&self, keep: &[usize]) -> Self {
        let n = keep.len();
        let mut upper = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for a in 0..n {
            for b in a + 1..n {
                upper.push(self.get(keep[a], keep[b]));
            }
        }
        SkewMatrix { dim: n, upper }
    }

    /// `A(I)`: rows and columns in `removed` deleted.
    pub fn minor(&self, removed: &[usize]) -> Result<Self> {
        let mut seen = alloc::vec![false; self.dim + 1];
        for &r in removed {
            if r == 0 || r > self.dim {
                return Err(Error::IndexOutOfRange {
                    index: r,
                    dim: self.dim,
                });
            }
            if seen[r] {
                return Err(Error::DuplicateIndex(r));
            }
            seen[r] = true;
        }
        let keep: Vec<usize> = (1..=self.dim).filter(|&i| !seen[i]).collect();
        if keep.len() % 2 == 1 {
            return Err(Error::OddDimension(keep.len()));
        }
        Ok(self.principal(&keep))
    }

    pub fn to_dense(&self) -> ExactMatrix<T> {
        ExactMatrix::from_fn(self.dim, self.dim, |i, j| self.get(i + 1, j + 1))
    }

    pub fn map<U: Ring>(&self, f: impl FnMut(&T) -> U) -> SkewMatrix<U> {
        SkewMatrix {
            dim: self.dim,
            upper: self.upper.iter().map(f).collect(),
        }
    }

    /// `(i, j, a_{i,j})` for `i < j`, row by row.
    pub fn upper_entries(&self) -> impl Iterator<Item = (usize, usize, &T)> + '_ {
        let n = self.dim;
        (1..=n)
            .flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
            .zip(&self.upper)
            .map(|((i, j), v)| (i, j, v))
    }
}

impl<T: Ring> fmt::Display for SkewMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_dense(), f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, Rational};

    #[test]
    fn storage_and_access() {
        let m = SkewMatrix::from_fn(4, |i, j| int((10 * i + j) as i64)).unwrap();
        assert_eq!(m.get(2, 4), int(24));
        assert_eq!(m.get(4, 2), int(-24));
        assert_eq!(m.get(3, 3), int(0));
        let d = m.to_dense();
        assert_eq!(SkewMatrix::from_dense(&d).unwrap(), m);
        let entries: Vec<_> = m.upper_entries().map(|(i, j, _)| (i, j)).collect();
        assert_eq!(entries[..3], [(1, 2), (1, 3), (1, 4)]);
    }

    #[test]
    fn minors() {
        let m = SkewMatrix::from_fn(4, |i, j| int((10 * i + j) as i64)).unwrap();
        let r = m.minor(&[3, 4]).unwrap();
        assert_eq!(r.dim(), 2);
        assert_eq!(r.get(1, 2), int(12));
        assert_eq!(
            m.minor(&[5]),
            Err(Error::IndexOutOfRange { index: 5, dim: 4 })
        );
        assert_eq!(m.minor(&[1, 1]), Err(Error::DuplicateIndex(1)));
        assert_eq!(m.minor(&[2]), Err(Error::OddDimension(3)));
        assert_eq!(
            SkewMatrix::from_fn(3, |_, _| int(1)),
            Err(Error::OddDimension(3))
        );
    }

    #[test]
    fn rejects_non_skew() {
        let d = ExactMatrix::from_rows(alloc::vec![
            alloc::vec![int(0), int(1)],
            alloc::vec![int(1), int(0)]
        ])
        .unwrap();
        assert!(SkewMatrix::<Rational>::from_dense(&d).is_err());
    }
}
