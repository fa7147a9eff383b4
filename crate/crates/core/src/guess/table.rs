use alloc::vec::Vec;

use num_traits::Zero;

use crate::arith::Rational;

/// Exact data indexed by integer points.
pub trait Grid {
    fn arity(&self) -> usize;

    /// The value at `p`, or `None` outside the covered region.
    fn value(&self, p: &[i64]) -> Option<Rational>;

    /// Points `p` at which an operator with shifts in `[lo, hi]` (per
    /// coordinate) may be fully covered. Callers still check coverage.
    fn candidate_points(&self, lo: &[i64], hi: &[i64]) -> Vec<Vec<i64>>;
}

/// `f(start), f(start + 1), ...`
#[derive(Clone, Debug, PartialEq)]
pub struct Sequence {
    start: i64,
    values: Vec<Rational>,
}

impl Sequence {
    pub fn new(start: i64, values: Vec<Rational>) -> Self {
        Sequence { start, values }
    }

    pub fn from_fn(range: core::ops::RangeInclusive<i64>, f: impl FnMut(i64) -> Rational) -> Self {
        let start = *range.start();
        Sequence {
            start,
            values: range.map(f).collect(),
        }
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn end(&self) -> i64 {
        self.start + self.values.len() as i64 - 1
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }
}

impl Grid for Sequence {
    fn arity(&self) -> usize {
        1
    }

    fn value(&self, p: &[i64]) -> Option<Rational> {
        let k = p[0] - self.start;
        (k >= 0)
            .then(|| self.values.get(k as usize).cloned())
            .flatten()
    }

    fn candidate_points(&self, lo: &[i64], hi: &[i64]) -> Vec<Vec<i64>> {
        (self.start - lo[0]..=self.end() - hi[0])
            .map(|n| alloc::vec![n])
            .collect()
    }
}

/// Bivariate data `f(n, i)` stored row by row. Each row `n` holds explicit
/// values for a contiguous range of `i`. In a zero-padded table every `i`
/// outside that range reads as zero for rows that exist; otherwise it is
/// uncovered.
#[derive(Clone, Debug, PartialEq)]
pub struct Table2 {
    n_min: i64,
    rows: Vec<(i64, Vec<Rational>)>,
    zero_padded: bool,
}

impl Table2 {
    /// `rows[k] = (i_min, values)` describes row `n = n_min + k`.
    pub fn new(n_min: i64, rows: Vec<(i64, Vec<Rational>)>, zero_padded: bool) -> Self {
        Table2 {
            n_min,
            rows,
            zero_padded,
        }
    }

    /// Fills rows `n` in `ns` with `f(n, i)` for `i` in `i_range(n)`.
    pub fn from_fn(
        ns: core::ops::RangeInclusive<i64>,
        mut i_range: impl FnMut(i64) -> core::ops::RangeInclusive<i64>,
        mut f: impl FnMut(i64, i64) -> Rational,
        zero_padded: bool,
    ) -> Self {
        let n_min = *ns.start();
        let rows = ns
            .map(|n| {
                let r = i_range(n);
                let lo = *r.start();
                (lo, r.map(|i| f(n, i)).collect())
            })
            .collect();
        Table2 {
            n_min,
            rows,
            zero_padded,
        }
    }

    pub fn n_min(&self) -> i64 {
        self.n_min
    }

    pub fn n_max(&self) -> i64 {
        self.n_min + self.rows.len() as i64 - 1
    }

    pub fn is_zero_padded(&self) -> bool {
        self.zero_padded
    }

    /// Explicit `(i_min, values)` of row `n`.
    pub fn row(&self, n: i64) -> Option<(i64, &[Rational])> {
        let k = n - self.n_min;
        if k < 0 {
            return None;
        }
        self.rows.get(k as usize).map(|(lo, v)| (*lo, v.as_slice()))
    }

    /// All explicit `(n, i, value)` entries.
    pub fn entries(&self) -> impl Iterator<Item = (i64, i64, &Rational)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(move |(k, (lo, vals))| {
                let n = self.n_min + k as i64;
                vals.iter()
                    .enumerate()
                    .map(move |(t, v)| (n, lo + t as i64, v))
            })
    }

    fn i_bounds(&self) -> Option<(i64, i64)> {
        let lo = self
            .rows
            .iter()
            .filter(|(_, v)| !v.is_empty())
            .map(|(lo, _)| *lo)
            .min()?;
        let hi = self
            .rows
            .iter()
            .filter(|(_, v)| !v.is_empty())
            .map(|(lo, v)| lo + v.len() as i64 - 1)
            .max()?;
        Some((lo, hi))
    }
}

impl Grid for Table2 {
    fn arity(&self) -> usize {
        2
    }

    fn value(&self, p: &[i64]) -> Option<Rational> {
        let (lo, vals) = self.row(p[0])?;
        let t = p[1] - lo;
        if t >= 0 && (t as usize) < vals.len() {
            Some(vals[t as usize].clone())
        } else if self.zero_padded {
            Some(Rational::zero())
        } else {
            None
        }
    }

    fn candidate_points(&self, lo: &[i64], hi: &[i64]) -> Vec<Vec<i64>> {
        let Some((i_lo, i_hi)) = self.i_bounds() else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for n in self.n_min - lo[0]..=self.n_max() - hi[0] {
            for i in i_lo - hi[1]..=i_hi - lo[1] {
                out.push(alloc::vec![n, i]);
            }
        }
        out
    }
}
