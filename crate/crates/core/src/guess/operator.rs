use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::Grid;
use crate::arith::{Integer, Polynomial, Rational};
use crate::error::{Error, Result};

/// A linear recurrence with polynomial coefficients,
/// `sum_s coeff_s(p) * f(p + s) = 0`.
///
/// Always kept normalised: terms sorted by shift, no zero coefficients,
/// integer coefficients with overall content one, and the coefficient of
/// the lexicographically largest shift has a positive leading term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceOperator {
    vars: Vec<String>,
    terms: Vec<(Vec<i64>, Polynomial)>,
}

impl RecurrenceOperator {
    pub fn new(vars: Vec<String>, terms: Vec<(Vec<i64>, Polynomial)>) -> Result<Self> {
        if vars.is_empty() || vars.len() > 2 {
            return Err(Error::InvalidOperator(alloc::format!(
                "arity {} is not 1 or 2",
                vars.len()
            )));
        }
        let mut out: Vec<(Vec<i64>, Polynomial)> = Vec::with_capacity(terms.len());
        for (shift, coeff) in terms {
            if shift.len() != vars.len() {
                return Err(Error::ArityMismatch {
                    expected: vars.len(),
                    got: shift.len(),
                });
            }
            if out.iter().any(|(s, _)| *s == shift) {
                return Err(Error::InvalidOperator(alloc::format!(
                    "duplicate shift {shift:?}"
                )));
            }
            let coeff = coeff.with_vars(&vars)?;
            if !coeff.is_zero() {
                out.push((shift, coeff));
            }
        }
        if out.is_empty() {
            return Err(Error::InvalidOperator("all coefficients are zero".into()));
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        let mut op = RecurrenceOperator { vars, terms: out };
        op.normalize();
        Ok(op)
    }

    /// Parses `(shift, coefficient-text)` pairs in the given variables.
    pub fn from_text(vars: &[&str], terms: &[(&[i64], &str)]) -> Result<Self> {
        let vars: Vec<String> = vars.iter().map(|v| String::from(*v)).collect();
        let terms = terms
            .iter()
            .map(|(s, t)| Ok((s.to_vec(), Polynomial::parse_in(t, &vars)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vars, terms)
    }

    fn normalize(&mut self) {
        let mut den = Integer::one();
        for (_, c) in &self.terms {
            for (_, v) in c.terms() {
                den = den.lcm(v.denom());
            }
        }
        let mut g = Integer::zero();
        for (_, c) in &self.terms {
            for (_, v) in c.terms() {
                g = g.gcd(&(v * Rational::from_integer(den.clone())).to_integer());
            }
        }
        let lead = &self.terms.last().expect("nonempty").1;
        if lead.leading_coefficient().is_negative() {
            g = -g;
        }
        let scale = Rational::new(den, g);
        if !scale.is_one() {
            for (_, c) in &mut self.terms {
                *c = c.scale(&scale);
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    /// Terms in increasing lexicographic shift order.
    pub fn terms(&self) -> &[(Vec<i64>, Polynomial)] {
        &self.terms
    }

    pub fn support(&self) -> Vec<Vec<i64>> {
        self.terms.iter().map(|(s, _)| s.clone()).collect()
    }

    pub fn leading_shift(&self) -> &[i64] {
        &self.terms.last().expect("nonempty").0
    }

    pub fn leading_coefficient(&self) -> &Polynomial {
        &self.terms.last().expect("nonempty").1
    }

    /// Largest total degree among the coefficients.
    pub fn degree(&self) -> u32 {
        self.terms
            .iter()
            .filter_map(|(_, c)| c.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Span of the shifts in each variable.
    pub fn order(&self) -> Vec<i64> {
        (0..self.arity())
            .map(|k| {
                let lo = self.terms.iter().map(|(s, _)| s[k]).min().unwrap();
                let hi = self.terms.iter().map(|(s, _)| s[k]).max().unwrap();
                hi - lo
            })
            .collect()
    }

    pub(crate) fn shift_bounds(&self) -> (Vec<i64>, Vec<i64>) {
        let lo = (0..self.arity())
            .map(|k| self.terms.iter().map(|(s, _)| s[k]).min().unwrap())
            .collect();
        let hi = (0..self.arity())
            .map(|k| self.terms.iter().map(|(s, _)| s[k]).max().unwrap())
            .collect();
        (lo, hi)
    }

    /// The residual at `p`, or `None` if some shifted value is not covered.
    pub fn apply_at(&self, data: &dyn Grid, p: &[i64]) -> Option<Rational> {
        let mut total = Rational::zero();
        let mut q = p.to_vec();
        for (shift, coeff) in &self.terms {
            for k in 0..p.len() {
                q[k] = p[k] + shift[k];
            }
            let v = data.value(&q)?;
            if !v.is_zero() {
                total += coeff.eval_i64(p).expect("arity checked") * v;
            }
        }
        Some(total)
    }
}

impl fmt::Display for RecurrenceOperator {
    /// Highest shift first, e.g. `(n + 2)*f(n+1) - (2*n + 1)*f(n)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (shift, coeff)) in self.terms.iter().rev().enumerate() {
            let (sign, c) = if coeff.leading_coefficient().is_negative() {
                ("-", -coeff)
            } else {
                ("+", coeff.clone())
            };
            match (k, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                (_, s) => write!(f, " {s} ")?,
            }
            if !c.is_one() {
                if c.num_terms() > 1 {
                    write!(f, "({c})*")?;
                } else {
                    write!(f, "{c}*")?;
                }
            }
            f.write_str("f(")?;
            for (idx, (v, s)) in self.vars.iter().zip(shift).enumerate() {
                if idx > 0 {
                    f.write_str(", ")?;
                }
                match s.signum() {
                    0 => write!(f, "{v}")?,
                    1 => write!(f, "{v}+{s}")?,
                    _ => write!(f, "{v}{s}")?,
                }
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Residuals at every point where the operator is fully covered by `data`.
pub fn residuals(op: &RecurrenceOperator, data: &dyn Grid) -> Vec<(Vec<i64>, Rational)> {
    let (lo, hi) = op.shift_bounds();
    data.candidate_points(&lo, &hi)
        .into_iter()
        .filter_map(|p| op.apply_at(data, &p).map(|r| (p, r)))
        .collect()
}

/// Residuals at the given points; every shifted value must be covered.
pub fn apply_operator(
    op: &RecurrenceOperator,
    data: &dyn Grid,
    points: &[Vec<i64>],
) -> Result<Vec<Rational>> {
    if data.arity() != op.arity() {
        return Err(Error::ArityMismatch {
            expected: op.arity(),
            got: data.arity(),
        });
    }
    points
        .iter()
        .map(|p| {
            op.apply_at(data, p).ok_or_else(|| {
                Error::InsufficientCoverage(alloc::format!(
                    "operator at {p:?} reaches outside the data"
                ))
            })
        })
        .collect()
}

/// Summary of a residual check over all covered points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilationCheck {
    pub points_checked: usize,
    /// Points with nonzero residual.
    pub failures: Vec<Vec<i64>>,
}

impl AnnihilationCheck {
    pub fn passed(&self) -> bool {
        self.points_checked > 0 && self.failures.is_empty()
    }
}

pub fn check_annihilates(op: &RecurrenceOperator, data: &dyn Grid) -> AnnihilationCheck {
    let res = residuals(op, data);
    AnnihilationCheck {
        points_checked: res.len(),
        failures: res
            .into_iter()
            .filter(|(_, r)| !r.is_zero())
            .map(|(p, _)| p)
            .collect(),
    }
}
