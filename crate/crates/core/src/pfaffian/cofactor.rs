use alloc::vec::Vec;

use super::{pf_eliminate, SkewMatrix};
use crate::arith::{ExactMatrix, Field};
use crate::error::{Error, Result};

/// `Pf A(I)`: the Pfaffian with rows and columns in `removed` deleted.
pub fn pf_minor<F: Field>(a: &SkewMatrix<F>, removed: &[usize]) -> Result<F> {
    Ok(pf_eliminate(&a.minor(removed)?))
}

/// Signed cofactor `Γ_{i,j}`.
pub fn gamma<F: Field>(a: &SkewMatrix<F>, i: usize, j: usize) -> Result<F> {
    for idx in [i, j] {
        if idx == 0 || idx > a.dim() {
            return Err(Error::IndexOutOfRange {
                index: idx,
                dim: a.dim(),
            });
        }
    }
    if i == j {
        return Ok(F::zero());
    }
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    let pf = pf_minor(a, &[lo, hi])?;
    let odd = if i < j {
        (j - i - 1) % 2 == 1
    } else {
        (i - j) % 2 == 1
    };
    Ok(if odd { pf.negated() } else { pf })
}

/// The normalised cofactor vector `(c_{2n,1}, ..., c_{2n,2n-1})`: the unique
/// solution of `sum_i c_i a_{i,j} = 0` for `j < 2n` with `c_{2n-1} = 1`.
///
/// Fails with [`Error::SingularCofactorSystem`] when the solution is not
/// unique, which happens exactly when `Pf A(2n-1, 2n)` vanishes.
pub fn cofactor_vector<F: Field>(a: &SkewMatrix<F>) -> Result<Vec<F>> {
    let dim = a.dim();
    if dim == 0 {
        return Err(Error::SingularCofactorSystem { n: 0 });
    }
    let n = dim / 2;
    let m = dim - 1;
    let mut rows: Vec<Vec<F>> = (1..=m)
        .map(|j| (1..=m).map(|i| a.get(i, j)).collect())
        .collect();
    let mut norm = alloc::vec![F::zero(); m];
    norm[m - 1] = F::one();
    rows.push(norm);
    let mut rhs = alloc::vec![F::zero(); m];
    rhs.push(F::one());
    let system = ExactMatrix::from_rows(rows)?;
    match F::solve(&system, &rhs)? {
        Some(sol) if sol.unique => Ok(sol.x),
        _ => Err(Error::SingularCofactorSystem { n }),
    }
}

/// The same vector from its definition `c_{2n,j} = Γ_{j,2n} / Γ_{2n-1,2n}`.
pub fn cofactor_vector_by_gamma<F: Field>(a: &SkewMatrix<F>) -> Result<Vec<F>> {
    let dim = a.dim();
    let n = dim / 2;
    if dim == 0 {
        return Err(Error::SingularCofactorSystem { n });
    }
    let denom = gamma(a, dim - 1, dim)?;
    let inv = denom.inverse().ok_or(Error::SingularCofactorSystem { n })?;
    (1..dim)
        .map(|j| Ok(gamma(a, j, dim)?.times(&inv)))
        .collect()
}

fn check_permutation(pi: &[usize]) -> Result<()> {
    let mut seen = alloc::vec![false; pi.len() + 1];
    for &p in pi {
        if p == 0 || p > pi.len() || seen[p] {
            return Err(Error::NotAPermutation(p));
        }
        seen[p] = true;
    }
    Ok(())
}

/// Sign of a one-based permutation given as `(π(1), ..., π(m))`.
pub fn permutation_sign(pi: &[usize]) -> Result<i32> {
    check_permutation(pi)?;
    let mut visited = alloc::vec![false; pi.len()];
    let mut sign = 1;
    for start in 0..pi.len() {
        if visited[start] {
            continue;
        }
        let mut len = 0;
        let mut k = start;
        while !visited[k] {
            visited[k] = true;
            k = pi[k] - 1;
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    Ok(sign)
}

/// `A^π` with `(A^π)_{i,j} = a_{π(i),π(j)}`.
pub fn permute<F: Field>(a: &SkewMatrix<F>, pi: &[usize]) -> Result<SkewMatrix<F>> {
    if pi.len() != a.dim() {
        return Err(Error::ShapeMismatch(alloc::format!(
            "permutation of length {} for dimension {}",
            pi.len(),
            a.dim()
        )));
    }
    check_permutation(pi)?;
    SkewMatrix::from_fn(a.dim(), |i, j| a.get(pi[i - 1], pi[j - 1]))
}
