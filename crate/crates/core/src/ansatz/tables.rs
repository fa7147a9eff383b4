use alloc::vec::Vec;

use crate::arith::{Field, Rational};
use crate::error::{Error, Result};
use crate::guess::Table2;
use crate::pfaffian::{cofactor_vector, pf_eliminate};
use crate::sequences::MatrixFamily;

/// The cofactor table `c_{2n,i}` for `1 <= i <= 2n-1`, `1 <= n <= n_max`.
///
/// If the cofactor system is singular at some `n`, the table stops just
/// before it and records that `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct CTable<F> {
    rows: Vec<Vec<F>>,
    singular_at: Option<u32>,
}

impl<F: Field> CTable<F> {
    /// Largest `n` present.
    pub fn n_max(&self) -> u32 {
        self.rows.len() as u32
    }

    /// The first `n` rows (all of them if there are fewer).
    pub fn truncated(&self, n: u32) -> Self {
        let keep = (n as usize).min(self.rows.len());
        let singular_at = if keep < self.rows.len() {
            None
        } else {
            self.singular_at.filter(|&s| s <= n)
        };
        CTable {
            rows: self.rows[..keep].to_vec(),
            singular_at,
        }
    }

    pub fn singular_at(&self) -> Option<u32> {
        self.singular_at
    }

    /// `c_{2n,1..2n-1}`.
    pub fn row(&self, n: u32) -> &[F] {
        &self.rows[n as usize - 1]
    }

    /// `c_{2n,i}`, zero for `i <= 0` and `i >= 2n`.
    pub fn get(&self, n: u32, i: i64) -> F {
        let row = self.row(n);
        if i >= 1 && (i as usize) <= row.len() {
            row[i as usize - 1].clone()
        } else {
            F::zero()
        }
    }
}

impl CTable<Rational> {
    /// The table as zero-padded data in `(n, i)`.
    pub fn to_grid(&self) -> Table2 {
        Table2::new(1, self.rows.iter().map(|r| (1, r.clone())).collect(), true)
    }
}

pub fn c_table<F: Field>(family: &MatrixFamily, n_max: u32) -> Result<CTable<F>> {
    let mut rows = Vec::with_capacity(n_max as usize);
    let entries = family.entries::<F>(2 * n_max as usize)?;
    for n in 1..=n_max {
        let a = entries.skew_matrix(2 * n as usize)?;
        match cofactor_vector(&a) {
            Ok(c) => rows.push(c),
            Err(Error::SingularCofactorSystem { .. }) => {
                return Ok(CTable {
                    rows,
                    singular_at: Some(n),
                })
            }
            Err(e) => return Err(e),
        }
    }
    Ok(CTable {
        rows,
        singular_at: None,
    })
}

/// `g_{n,j} = sum_{i=1}^{2n-1} c_{2n,i} a_{i,j}` for `1 <= j <= 2n + extra`.
#[derive(Clone, Debug, PartialEq)]
pub struct RowSums<F> {
    rows: Vec<Vec<F>>,
}

impl<F: Field> RowSums<F> {
    pub fn n_max(&self) -> u32 {
        self.rows.len() as u32
    }

    /// `g_{n,1}, g_{n,2}, ...`
    pub fn row(&self, n: u32) -> &[F] {
        &self.rows[n as usize - 1]
    }

    pub fn get(&self, n: u32, j: usize) -> &F {
        &self.rows[n as usize - 1][j - 1]
    }
}

impl RowSums<Rational> {
    /// The sums as data in `(n, j)`, covered only where computed.
    pub fn to_grid(&self) -> Table2 {
        Table2::new(1, self.rows.iter().map(|r| (1, r.clone())).collect(), false)
    }
}

pub fn row_sums<F: Field>(
    family: &MatrixFamily,
    c: &CTable<F>,
    extra: usize,
) -> Result<RowSums<F>> {
    let mut rows = Vec::with_capacity(c.n_max() as usize);
    let a = family.entries::<F>(2 * c.n_max() as usize + extra)?;
    for n in 1..=c.n_max() {
        let d = 2 * n as usize;
        let cr = c.row(n);
        let mut row = Vec::with_capacity(d + extra);
        for j in 1..=d + extra {
            let mut s = F::zero();
            for (i, ci) in cr.iter().enumerate() {
                if !ci.is_zero() && i + 1 != j {
                    s = s.plus(&ci.times(&a.get(i + 1, j)));
                }
            }
            row.push(s);
        }
        rows.push(row);
    }
    Ok(RowSums { rows })
}

/// Outcome of checking `g_{n,j} = 0` for `1 <= j < 2n`.
#[derive(Clone, Debug, PartialEq)]
pub struct Identity2Check<F> {
    pub checked_up_to: u32,
    /// First `(n, j, g_{n,j})` that is not zero.
    pub witness: Option<(u32, usize, F)>,
    /// `g_{n,2n}`, which equals `r_n`.
    pub diagonal: Vec<F>,
}

impl<F> Identity2Check<F> {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

pub fn check_identity2<F: Field>(g: &RowSums<F>) -> Identity2Check<F> {
    let mut witness = None;
    let mut diagonal = Vec::new();
    for n in 1..=g.n_max() {
        let d = 2 * n as usize;
        if witness.is_none() {
            if let Some(j) = (1..d).find(|&j| !g.get(n, j).is_zero()) {
                witness = Some((n, j, g.get(n, j).clone()));
            }
        }
        diagonal.push(g.get(n, d).clone());
    }
    Identity2Check {
        checked_up_to: g.n_max(),
        witness,
        diagonal,
    }
}

/// `r_n = sum_i c_{2n,i} a_{i,2n}` for `n = 1..=n_max` of the table.
pub fn ratio_sequence<F: Field>(family: &MatrixFamily, c: &CTable<F>) -> Result<Vec<F>> {
    let g = row_sums(family, c, 0)?;
    Ok(check_identity2(&g).diagonal)
}

/// `b_{2n} = Pf` of the `2n x 2n` member, for `n = 0..=n_max`.
pub fn pfaffians<F: Field>(family: &MatrixFamily, n_max: u32) -> Result<Vec<F>> {
    let entries = family.entries::<F>(2 * n_max as usize)?;
    (0..=n_max)
        .map(|n| Ok(pf_eliminate(&entries.skew_matrix(2 * n as usize)?)))
        .collect()
}

/// `b_{2n} / b_{2n-2}` for `n = 1..`, `None` where the denominator vanishes.
pub fn pfaffian_quotients<F: Field>(b: &[F]) -> Vec<Option<F>> {
    b.windows(2).map(|w| w[1].divide(&w[0])).collect()
}

/// Partial products `prod_{m <= n} r_m` for `n = 0..=len`.
pub fn telescoped<F: Field>(r: &[F]) -> Vec<F> {
    let mut out = Vec::with_capacity(r.len() + 1);
    let mut acc = F::one();
    out.push(acc.clone());
    for v in r {
        acc = acc.times(v);
        out.push(acc.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn motzkin_start() {
        let c = c_table::<Rational>(&MatrixFamily::Motzkin, 3).unwrap();
        assert_eq!(c.row(1), [int(1)]);
        assert_eq!(c.get(1, 2), int(0));
        assert_eq!(c.get(1, 3), int(0));
        assert_eq!(c.get(2, 1), int(2));
        assert_eq!(c.get(3, 0), int(0));
        let r = ratio_sequence(&MatrixFamily::Motzkin, &c).unwrap();
        assert_eq!(r, [int(1), int(5), int(9)]);
        let b = pfaffians::<Rational>(&MatrixFamily::Motzkin, 3).unwrap();
        assert_eq!(telescoped(&r), b);
        assert_eq!(
            pfaffian_quotients(&b),
            r.into_iter().map(Some).collect::<Vec<_>>()
        );
    }

    #[test]
    fn singular_table_is_partial() {
        // a_{12} = M^{(2)}_1 = 0 makes the n = 2 system singular
        let c = c_table::<Rational>(&MatrixFamily::GenMotzkin { k: 2 }, 3).unwrap();
        assert_eq!(c.n_max(), 1);
        assert_eq!(c.singular_at(), Some(2));
    }
}
