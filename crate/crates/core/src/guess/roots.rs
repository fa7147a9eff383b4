use alloc::string::String;
use alloc::vec::Vec;

use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::RecurrenceOperator;
use crate::arith::{Integer, Polynomial, Rational};
use crate::error::{Error, Result};

/// Integer coefficients `[a0, a1, ...]` of a primitive multiple of a
/// univariate polynomial.
fn integer_dense(p: &Polynomial) -> Result<Vec<Integer>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (_, prim) = p.content_primitive();
    let (_, coeffs) = prim
        .to_dense()
        .ok_or_else(|| Error::NotUnivariate(alloc::format!("{p}")))?;
    Ok(coeffs.into_iter().map(|c| c.to_integer()).collect())
}

fn horner(coeffs: &[Integer], x: &Integer) -> Integer {
    coeffs
        .iter()
        .rev()
        .fold(Integer::zero(), |acc, c| acc * x + c)
}

fn divisors(m: &Integer) -> Vec<Integer> {
    let m = m.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = Integer::one();
    while &d * &d <= m {
        if (&m % &d).is_zero() {
            let q = &m / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1u32;
    }
    small.extend(large.into_iter().rev());
    small
}

/// All integer roots of a univariate polynomial, in increasing order.
pub fn integer_roots(p: &Polynomial) -> Result<Vec<Integer>> {
    let coeffs = integer_dense(p)?;
    let shift = coeffs
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero polynomial");
    let rest = &coeffs[shift..];
    let mut roots = Vec::new();
    if shift > 0 {
        roots.push(Integer::zero());
    }
    if rest.len() > 1 {
        let a0 = &rest[0];
        let lead = rest.last().unwrap();
        // Cauchy bound: every root r has |r| <= 1 + max |a_k / a_lead|
        let bound = rest[..rest.len() - 1]
            .iter()
            .map(|c| c.abs().div_ceil(&lead.abs()))
            .max()
            .unwrap()
            + 1u32;
        let candidates: Vec<Integer> = if bound <= a0.abs() && bound < Integer::from(1u64 << 24) {
            let b = bound.to_i64().unwrap();
            (1..=b)
                .map(Integer::from)
                .filter(|d| (a0 % d).is_zero())
                .collect()
        } else {
            divisors(a0).into_iter().filter(|d| d <= &bound).collect()
        };
        for d in candidates {
            for x in [-d.clone(), d] {
                if horner(rest, &x).is_zero() {
                    roots.push(x);
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}

/// A conjunction of integer linear inequalities `a . v + b >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    vars: Vec<String>,
    constraints: Vec<(Vec<i64>, i64)>,
}

impl Region {
    /// The whole space.
    pub fn all(vars: &[&str]) -> Self {
        Region {
            vars: vars.iter().map(|v| String::from(*v)).collect(),
            constraints: Vec::new(),
        }
    }

    /// Parses comma-separated comparisons such as `n >= 2, i >= 2*n`.
    /// Strict comparisons are tightened to non-strict ones over the integers.
    pub fn parse(text: &str, vars: &[&str]) -> Result<Self> {
        let names: Vec<String> = vars.iter().map(|v| String::from(*v)).collect();
        let mut constraints = Vec::new();
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (op, at) = ["<=", ">=", "<", ">"]
                .iter()
                .find_map(|op| part.find(op).map(|at| (*op, at)))
                .ok_or_else(|| Error::Parse {
                    text: part.into(),
                    reason: "expected a comparison".into(),
                })?;
            let lhs = Polynomial::parse_in(&part[..at], &names)?;
            let rhs = Polynomial::parse_in(&part[at + op.len()..], &names)?;
            let (diff, strict) = match op {
                ">=" => (lhs - rhs, false),
                ">" => (lhs - rhs, true),
                "<=" => (rhs - lhs, false),
                _ => (rhs - lhs, true),
            };
            let (a, b) = linear_form(&diff, names.len()).ok_or_else(|| Error::Parse {
                text: part.into(),
                reason: "not a linear inequality with integer coefficients".into(),
            })?;
            constraints.push((a, if strict { b - 1 } else { b }));
        }
        Ok(Region {
            vars: names,
            constraints,
        })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn constraints(&self) -> &[(Vec<i64>, i64)] {
        &self.constraints
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        self.constraints
            .iter()
            .all(|(a, b)| a.iter().zip(p).map(|(x, y)| x * y).sum::<i64>() + b >= 0)
    }
}

fn linear_form(p: &Polynomial, nvars: usize) -> Option<(Vec<i64>, i64)> {
    let mut a = alloc::vec![0i64; nvars];
    let mut b = 0i64;
    for (m, c) in p.terms() {
        if !c.is_integer() {
            return None;
        }
        let c = c.to_integer().to_i64()?;
        match m.degree() {
            0 => b = c,
            1 => a[m.exponents().iter().position(|&e| e == 1)?] = c,
            _ => return None,
        }
    }
    Some((a, b))
}

#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Decided for the whole (possibly infinite) region.
    Exact,
    /// Checked at every integer point of the region inside a finite box.
    WindowVerified,
}

#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonvanishingReport {
    pub verdict: Verdict,
    pub leading_coefficient: Polynomial,
    /// Points of the region (clipped to the window when not exact) where
    /// the leading coefficient vanishes.
    pub zeros: Vec<Vec<i64>>,
    /// Zeros found on the (unbounded) boundary lines of the region.
    pub boundary_zeros: Vec<Vec<i64>>,
    /// Indices of boundary constraints along whose whole line the leading
    /// coefficient vanishes.
    pub vanishing_boundaries: Vec<usize>,
    pub window: Option<Vec<(i64, i64)>>,
}

impl NonvanishingReport {
    pub fn nonvanishing(&self) -> bool {
        self.zeros.is_empty()
            && self.boundary_zeros.is_empty()
            && self.vanishing_boundaries.is_empty()
    }
}

/// Where does the leading coefficient of `op` vanish inside `region`?
///
/// Univariate operators are decided exactly from the integer roots. For
/// bivariate operators a finite `window` (one inclusive range per
/// variable) is required unless the leading coefficient is constant.
pub fn leading_nonvanishing(
    op: &RecurrenceOperator,
    region: &Region,
    window: Option<&[(i64, i64)]>,
) -> Result<NonvanishingReport> {
    if region.vars() != op.vars() {
        return Err(Error::Inconsistent(alloc::format!(
            "region variables {:?} differ from operator variables {:?}",
            region.vars(),
            op.vars()
        )));
    }
    let lc = op.leading_coefficient().clone();
    let mut report = NonvanishingReport {
        verdict: Verdict::Exact,
        leading_coefficient: lc.clone(),
        zeros: Vec::new(),
        boundary_zeros: Vec::new(),
        vanishing_boundaries: Vec::new(),
        window: None,
    };
    if lc.is_constant() {
        return Ok(report);
    }
    if op.arity() == 1 {
        for r in integer_roots(&lc)? {
            let r = r.to_i64().expect("root fits in i64");
            if region.contains(&[r]) {
                report.zeros.push(alloc::vec![r]);
            }
        }
        return Ok(report);
    }
    let window = window.ok_or(Error::UnboundedRegion)?;
    if window.len() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            got: window.len(),
        });
    }
    report.verdict = Verdict::WindowVerified;
    report.window = Some(window.to_vec());
    for x in window[0].0..=window[0].1 {
        for y in window[1].0..=window[1].1 {
            let p = [x, y];
            if region.contains(&p) && lc.eval_i64(&p)?.is_zero() {
                report.zeros.push(p.to_vec());
            }
        }
    }
    // exact analysis along each boundary line a.v + b = 0 with a unit coefficient
    let names = op.vars();
    for (idx, (a, b)) in region.constraints().iter().enumerate() {
        let Some(k) = (0..2).find(|&k| a[k].abs() == 1) else {
            continue;
        };
        let other = 1 - k;
        // v_k = -(a_other v_other + b) / a_k
        let t = Polynomial::variable(&names[other]).with_vars(names)?;
        let expr = (t.scale(&Rational::from_integer(Integer::from(-a[other] * a[k])))
            + Polynomial::from_i64(-b * a[k]))
        .with_vars(names)?;
        let restricted = lc.substitute(&names[k], &expr)?;
        if restricted.is_zero() {
            report.vanishing_boundaries.push(idx);
            continue;
        }
        if restricted.is_constant() {
            continue;
        }
        for r in integer_roots(&restricted)? {
            let r = r.to_i64().expect("root fits in i64");
            let mut p = [0i64; 2];
            p[other] = r;
            p[k] = -(a[other] * r + b) * a[k];
            if region.contains(&p) {
                report.boundary_zeros.push(p.to_vec());
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roots(text: &str) -> Vec<i64> {
        integer_roots(&Polynomial::parse(text).unwrap())
            .unwrap()
            .into_iter()
            .map(|r| r.to_i64().unwrap())
            .collect()
    }

    #[test]
    fn integer_roots_examples() {
        assert!(roots("4*n - 7").is_empty());
        assert_eq!(roots("(n - 2)*(2*n - 5)"), [2]);
        assert_eq!(roots("n^2 - 1"), [-1, 1]);
        assert_eq!(roots("n^3 - n"), [-1, 0, 1]);
        assert_eq!(roots("(n + 1000003)*(n - 6)"), [-1000003, 6]);
        assert!(roots("n^2 + 1").is_empty());
        assert_eq!(
            integer_roots(&Polynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
        assert!(integer_roots(&Polynomial::parse("n*i").unwrap()).is_err());
    }

    #[test]
    fn region_parsing() {
        let r = Region::parse("n >= 2, i >= 2*n, i < 100", &["n", "i"]).unwrap();
        assert!(r.contains(&[2, 4]));
        assert!(!r.contains(&[2, 3]));
        assert!(!r.contains(&[1, 4]));
        assert!(!r.contains(&[2, 100]));
        assert!(Region::parse("n^2 >= 2", &["n"]).is_err());
        assert!(Region::parse("n = 2", &["n"]).is_err());
    }

    #[test]
    fn univariate_verdicts() {
        let op = RecurrenceOperator::from_text(&["n"], &[(&[1], "n - 2"), (&[0], "-1")]).unwrap();
        let rep =
            leading_nonvanishing(&op, &Region::parse("n >= 1", &["n"]).unwrap(), None).unwrap();
        assert_eq!(rep.verdict, Verdict::Exact);
        assert_eq!(rep.zeros, [alloc::vec![2]]);
        let op = RecurrenceOperator::from_text(&["n"], &[(&[1], "1"), (&[0], "-1")]).unwrap();
        assert!(leading_nonvanishing(&op, &Region::all(&["n"]), None)
            .unwrap()
            .nonvanishing());
    }

    #[test]
    fn bivariate_needs_window() {
        let op = RecurrenceOperator::from_text(&["n", "i"], &[(&[0, 1], "i - n"), (&[0, 0], "1")])
            .unwrap();
        let region = Region::parse("i >= n", &["n", "i"]).unwrap();
        assert_eq!(
            leading_nonvanishing(&op, &region, None),
            Err(Error::UnboundedRegion)
        );
        let rep = leading_nonvanishing(&op, &region, Some(&[(0, 5), (0, 5)])).unwrap();
        assert_eq!(rep.zeros.len(), 6);
        assert_eq!(rep.vanishing_boundaries, [0]);
    }
}
