use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{Grid, RecurrenceOperator};
use crate::arith::{integer_row, integer_rows_kernel};
use crate::arith::{Integer, Polynomial, Rational};
use crate::error::{Error, Result};

/// Which shifts a guessed operator may use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Support {
    /// Univariate only: try orders `1..=max`, each with shifts `0..=order`.
    MaxOrder(u32),
    /// All shifts in `[0, m_1] x ... x [0, m_k]`.
    Rectangle(Vec<u32>),
    /// Exactly these shifts.
    Explicit(Vec<Vec<i64>>),
}

/// How equations are split between fitting and validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Windows {
    /// The points with the largest first coordinate, at least a fifth of
    /// all usable points, are held out for validation.
    Auto,
    /// Inclusive ranges of the first coordinate.
    Explicit {
        data: (i64, i64),
        validation: (i64, i64),
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuessSpec {
    pub support: Support,
    /// Bound on the total degree of each coefficient; degrees
    /// `min_degree..=max_degree` are tried in turn.
    pub max_degree: u32,
    /// Skips smaller degrees, e.g. to fit a known non-minimal recurrence.
    pub min_degree: u32,
    /// Required excess of fitting equations over unknowns.
    pub margin: usize,
    pub windows: Windows,
}

impl GuessSpec {
    pub fn new(support: Support, max_degree: u32) -> Self {
        GuessSpec {
            support,
            max_degree,
            min_degree: 0,
            margin: 10,
            windows: Windows::Auto,
        }
    }
}

/// Result of a successful search; `operators` is empty when no operator of
/// the searched shape fits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuessOutcome {
    pub operators: Vec<RecurrenceOperator>,
    /// Shape at which the search stopped (the first fit, or the last tried).
    pub support: Vec<Vec<i64>>,
    pub degree: u32,
    pub unknowns: usize,
    pub data_equations: usize,
    pub validation_equations: usize,
    /// Range of the first coordinate over the fitting and validation points.
    pub data_window: (i64, i64),
    pub validation_window: (i64, i64),
    /// Dimension of the fitted solution space cut away by validation.
    pub rejected_by_validation: usize,
}

fn monomials(nvars: usize, degree: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for d in (0..=degree).rev() {
        push_monomials(nvars, d, &mut Vec::new(), &mut out);
    }
    out
}

// exponent vectors of total degree exactly `d`, in decreasing lex order
fn push_monomials(nvars: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if prefix.len() + 1 == nvars {
        prefix.push(d);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for e in (0..=d).rev() {
        prefix.push(e);
        push_monomials(nvars, d - e, prefix, out);
        prefix.pop();
    }
}

fn monomial_value(p: &[i64], exps: &[u32]) -> Integer {
    p.iter().zip(exps).fold(Integer::one(), |acc, (&x, &e)| {
        acc * num_traits::pow(Integer::from(x), e as usize)
    })
}

struct Equations {
    data: Vec<Vec<Integer>>,
    validation: Vec<Vec<Integer>>,
    data_window: (i64, i64),
    validation_window: (i64, i64),
}

fn build_equations(
    data: &dyn Grid,
    support: &[Vec<i64>],
    monos: &[Vec<u32>],
    windows: &Windows,
) -> Result<Equations> {
    let k = data.arity();
    let lo: Vec<i64> = (0..k)
        .map(|c| support.iter().map(|s| s[c]).min().unwrap())
        .collect();
    let hi: Vec<i64> = (0..k)
        .map(|c| support.iter().map(|s| s[c]).max().unwrap())
        .collect();
    let mut rows: Vec<(i64, Vec<Rational>)> = Vec::new();
    let mut q = alloc::vec![0i64; k];
    'points: for p in data.candidate_points(&lo, &hi) {
        let mut vals = Vec::with_capacity(support.len());
        for s in support {
            for c in 0..k {
                q[c] = p[c] + s[c];
            }
            match data.value(&q) {
                Some(v) => vals.push(v),
                None => continue 'points,
            }
        }
        if vals.iter().all(Zero::is_zero) {
            continue;
        }
        let mvals: Vec<Integer> = monos.iter().map(|m| monomial_value(&p, m)).collect();
        let mut row = Vec::with_capacity(support.len() * monos.len());
        for v in &vals {
            for m in &mvals {
                row.push(if v.is_zero() {
                    Rational::zero()
                } else {
                    v * Rational::from_integer(m.clone())
                });
            }
        }
        if row.iter().all(Zero::is_zero) {
            continue;
        }
        rows.push((p[0], row));
    }
    let (cut_lo, cut_hi, val_lo, val_hi) = match windows {
        Windows::Auto => {
            let total = rows.len();
            let want = total.div_ceil(5);
            let mut firsts: Vec<i64> = rows.iter().map(|(n, _)| *n).collect();
            firsts.sort_unstable();
            firsts.dedup();
            // smallest suffix of first coordinates holding `want` points
            let mut cut = i64::MAX;
            let mut count = 0;
            for &n in firsts.iter().rev() {
                if count >= want {
                    break;
                }
                count += rows.iter().filter(|(m, _)| *m == n).count();
                cut = n;
            }
            (i64::MIN, cut - 1, cut, i64::MAX)
        }
        Windows::Explicit { data, validation } => {
            if data.0 <= validation.1 && validation.0 <= data.1 {
                return Err(Error::Inconsistent(alloc::format!(
                    "validation window {validation:?} overlaps data window {data:?}"
                )));
            }
            (data.0, data.1, validation.0, validation.1)
        }
    };
    let mut eq = Equations {
        data: Vec::new(),
        validation: Vec::new(),
        data_window: (i64::MAX, i64::MIN),
        validation_window: (i64::MAX, i64::MIN),
    };
    for (n, row) in rows {
        let (target, window) = if (cut_lo..=cut_hi).contains(&n) {
            (&mut eq.data, &mut eq.data_window)
        } else if (val_lo..=val_hi).contains(&n) {
            (&mut eq.validation, &mut eq.validation_window)
        } else {
            continue;
        };
        target.push(integer_row(&row));
        window.0 = window.0.min(n);
        window.1 = window.1.max(n);
    }
    Ok(eq)
}

fn dot(row: &[Integer], v: &[Integer]) -> Integer {
    row.iter()
        .zip(v)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .map(|(a, b)| a * b)
        .sum()
}

/// Reduced row echelon form of the given vectors, each scaled to a
/// primitive integer vector.
fn canonical_basis(vectors: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let mut m = vectors;
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].recip();
        for x in &mut m[rank] {
            *x = &*x * &inv;
        }
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
    }
    m.truncate(rank);
    m
}

fn try_shape(
    data: &dyn Grid,
    vars: &[String],
    support: &[Vec<i64>],
    degree: u32,
    spec: &GuessSpec,
) -> Result<GuessOutcome> {
    let monos = monomials(vars.len(), degree);
    let unknowns = support.len() * monos.len();
    let eq = build_equations(data, support, &monos, &spec.windows)?;
    let needed = unknowns + spec.margin;
    if eq.data.len() < needed {
        return Err(Error::Underdetermined {
            equations: eq.data.len(),
            unknowns,
            needed,
        });
    }
    let val_needed = eq.data.len().div_ceil(4);
    if eq.validation.len() < val_needed {
        return Err(Error::InsufficientCoverage(alloc::format!(
            "{} validation equations, need at least {val_needed}",
            eq.validation.len()
        )));
    }
    let data_equations = eq.data.len();
    let kernel = integer_rows_kernel(eq.data, unknowns);
    let fitted = kernel.len();
    let survivors: Vec<Vec<Rational>> = if kernel.is_empty() {
        Vec::new()
    } else {
        // combinations of the kernel basis that also satisfy validation
        let w: Vec<Vec<Rational>> = eq
            .validation
            .iter()
            .map(|row| {
                kernel
                    .iter()
                    .map(|v| Rational::from_integer(dot(row, v)))
                    .collect()
            })
            .collect();
        let w_rows: Vec<Vec<Integer>> = w.iter().map(|r| integer_row(r)).collect();
        let lambdas = integer_rows_kernel(w_rows, kernel.len());
        lambdas
            .iter()
            .map(|lam| {
                (0..unknowns)
                    .map(|c| {
                        let s: Integer = kernel.iter().zip(lam).map(|(v, l)| &v[c] * l).sum();
                        Rational::from_integer(s)
                    })
                    .collect()
            })
            .collect()
    };
    let rejected = fitted - survivors.len();
    let mut operators = Vec::new();
    for v in canonical_basis(survivors) {
        let terms = support
            .iter()
            .enumerate()
            .map(|(si, s)| {
                let coeffs = monos
                    .iter()
                    .enumerate()
                    .map(|(mi, m)| (m.clone(), v[si * monos.len() + mi].clone()));
                Ok((s.clone(), Polynomial::from_terms(vars.to_vec(), coeffs)?))
            })
            .collect::<Result<Vec<_>>>()?;
        operators.push(RecurrenceOperator::new(vars.to_vec(), terms)?);
    }
    Ok(GuessOutcome {
        operators,
        support: support.to_vec(),
        degree,
        unknowns,
        data_equations,
        validation_equations: eq.validation.len(),
        data_window: eq.data_window,
        validation_window: eq.validation_window,
        rejected_by_validation: rejected,
    })
}

fn rectangle(bounds: &[u32]) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = alloc::vec![Vec::new()];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=b as i64).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

fn sorted_support(mut s: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    // largest shift first so echelon pivots fall on the leading coefficient
    s.sort_by(|a, b| b.cmp(a));
    s.dedup();
    s
}

fn search(data: &dyn Grid, vars: &[String], spec: &GuessSpec) -> Result<GuessOutcome> {
    let supports: Vec<Vec<Vec<i64>>> = match &spec.support {
        Support::MaxOrder(r) => {
            if vars.len() != 1 {
                return Err(Error::InvalidOperator(
                    "order bounds apply to univariate data only".into(),
                ));
            }
            (1..=*r as i64)
                .map(|o| (0..=o).map(|s| alloc::vec![s]).collect())
                .collect()
        }
        Support::Rectangle(b) => {
            if b.len() != vars.len() {
                return Err(Error::ArityMismatch {
                    expected: vars.len(),
                    got: b.len(),
                });
            }
            alloc::vec![rectangle(b)]
        }
        Support::Explicit(s) => {
            if s.is_empty() {
                return Err(Error::InvalidOperator("empty support".into()));
            }
            if let Some(bad) = s.iter().find(|v| v.len() != vars.len()) {
                return Err(Error::ArityMismatch {
                    expected: vars.len(),
                    got: bad.len(),
                });
            }
            alloc::vec![s.clone()]
        }
    };
    let mut last = None;
    for support in supports {
        let support = sorted_support(support);
        if spec.min_degree > spec.max_degree {
            return Err(Error::InvalidOperator(alloc::format!(
                "degree range {}..={} is empty",
                spec.min_degree,
                spec.max_degree
            )));
        }
        for d in spec.min_degree..=spec.max_degree {
            let outcome = try_shape(data, vars, &support, d, spec)?;
            if !outcome.operators.is_empty() {
                return Ok(outcome);
            }
            last = Some(outcome);
        }
    }
    Ok(last.expect("at least one shape is tried"))
}

/// Searches for recurrences `sum_s c_s(n) f(n + s) = 0` satisfied by the
/// sequence, trying the smallest order first and, for each order, the
/// smallest coefficient degree. Returns every operator of the first shape
/// that fits (a canonical basis of the solution space).
pub fn guess_univariate(data: &dyn Grid, spec: &GuessSpec) -> Result<GuessOutcome> {
    if data.arity() != 1 {
        return Err(Error::ArityMismatch {
            expected: 1,
            got: data.arity(),
        });
    }
    search(data, &[String::from("n")], spec)
}

/// Bivariate version of [`guess_univariate`] in variables `(n, i)` or the
/// given names; degrees are searched from zero upwards.
pub fn guess_bivariate(data: &dyn Grid, vars: [&str; 2], spec: &GuessSpec) -> Result<GuessOutcome> {
    if data.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            got: data.arity(),
        });
    }
    search(data, &[String::from(vars[0]), String::from(vars[1])], spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_enumeration() {
        assert_eq!(
            monomials(1, 2),
            [alloc::vec![2], alloc::vec![1], alloc::vec![0]]
        );
        let m = monomials(2, 2);
        assert_eq!(m.len(), 6);
        assert_eq!(m[0], [2, 0]);
        assert_eq!(m[5], [0, 0]);
    }

    #[test]
    fn rectangles() {
        assert_eq!(rectangle(&[1, 1]).len(), 4);
        assert_eq!(sorted_support(rectangle(&[1, 2]))[0], [1, 2]);
    }
}
