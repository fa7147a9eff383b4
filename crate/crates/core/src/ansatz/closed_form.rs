use alloc::format;
use alloc::string::String;

use num_traits::{One, Zero};

use crate::arith::{Field, Integer, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::sequences::{MatrixFamily, NarayanaParam};

/// A conjectured or known value `b_{2n}` of the Pfaffians of a family,
/// as an exact evaluator. Every form evaluates to 1 at `n = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    /// `prod_{k<n} (4k+1)`
    Motzkin,
    /// `2^((n+1)(n-1)) (2n-1) prod_{k=1}^{n-1} (4k-1)`
    Delannoy,
    /// `x^(n^2) prod_{k<n} (4k+1)`
    Narayana(NarayanaParam),
    /// `2^(n^2) prod_{k<n} (4k+1)`
    Schroeder,
    /// `prod_{k<n} (a k + b)`
    Product { a: i64, b: i64 },
}

fn product(n: u32, a: i64, b: i64, from: i64) -> Integer {
    (from..n as i64).fold(Integer::one(), |acc, k| acc * Integer::from(a * k + b))
}

impl ClosedForm {
    /// The known evaluation for a family, if there is one.
    pub fn for_family(family: &MatrixFamily) -> Option<Self> {
        match family {
            MatrixFamily::Motzkin => Some(ClosedForm::Motzkin),
            MatrixFamily::Delannoy => Some(ClosedForm::Delannoy),
            MatrixFamily::Narayana(p) => Some(ClosedForm::Narayana(p.clone())),
            MatrixFamily::Schroeder => Some(ClosedForm::Schroeder),
            MatrixFamily::GenMotzkin { k: 1 } => Some(ClosedForm::Motzkin),
            _ => None,
        }
    }

    /// Looks up `motzkin`, `delannoy`, `narayana` (taking the parameter
    /// from `family` when it is a Narayana family), `schroeder`, or a
    /// product `prod(ak+b)`.
    pub fn parse(text: &str, family: &MatrixFamily) -> Result<Self> {
        let t = text.trim();
        match t {
            "motzkin" => Ok(ClosedForm::Motzkin),
            "delannoy" => Ok(ClosedForm::Delannoy),
            "schroeder" => Ok(ClosedForm::Schroeder),
            "narayana" => Ok(ClosedForm::Narayana(match family {
                MatrixFamily::Narayana(p) => p.clone(),
                _ => NarayanaParam::Symbolic,
            })),
            _ => Self::parse_product(t),
        }
    }

    fn parse_product(t: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            text: t.into(),
            reason: reason.into(),
        };
        let inner = t
            .strip_prefix("prod(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| err("expected a known name or prod(ak+b)"))?;
        // allow the juxtaposed form "4k+1"
        let mut expr = String::new();
        let mut prev_digit = false;
        for ch in inner.chars() {
            if ch == 'k' && prev_digit {
                expr.push('*');
            }
            prev_digit = ch.is_ascii_digit();
            expr.push(ch);
        }
        let p = Polynomial::parse_in(&expr, &[String::from("k")])?;
        if p.total_degree().unwrap_or(0) > 1 {
            return Err(err("factor must be linear in k"));
        }
        let dense = p.to_dense().map(|(_, c)| c).unwrap_or_default();
        let coeff = |d: usize| dense.get(d).cloned().unwrap_or_else(Rational::zero);
        let (b, a) = (coeff(0), coeff(1));
        if !a.is_integer() || !b.is_integer() {
            return Err(err("coefficients must be integers"));
        }
        let to_i64 = |r: Rational| -> Result<i64> {
            num_traits::ToPrimitive::to_i64(&r.to_integer())
                .ok_or_else(|| err("coefficient too large"))
        };
        Ok(ClosedForm::Product {
            a: to_i64(a)?,
            b: to_i64(b)?,
        })
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, ClosedForm::Narayana(NarayanaParam::Symbolic))
    }

    /// `b_{2n}` as a polynomial in `x` (constant unless symbolic).
    pub fn eval(&self, n: u32) -> Polynomial {
        let two = Integer::from(2);
        let c = |v: Integer| Polynomial::constant(Rational::from_integer(v));
        match self {
            ClosedForm::Motzkin => c(product(n, 4, 1, 0)),
            ClosedForm::Delannoy => {
                if n == 0 {
                    return Polynomial::one();
                }
                let e = ((n + 1) * (n - 1)) as usize;
                c(
                    num_traits::pow(two, e)
                        * Integer::from(2 * n as i64 - 1)
                        * product(n, 4, -1, 1),
                )
            }
            ClosedForm::Narayana(NarayanaParam::Symbolic) => {
                let xp = Polynomial::variable("x").pow(n * n);
                xp.scale(&Rational::from_integer(product(n, 4, 1, 0)))
            }
            ClosedForm::Narayana(NarayanaParam::Value(x)) => {
                let xp = num_traits::pow(x.clone(), (n * n) as usize);
                Polynomial::constant(xp * Rational::from_integer(product(n, 4, 1, 0)))
            }
            ClosedForm::Schroeder => {
                c(num_traits::pow(two, (n * n) as usize) * product(n, 4, 1, 0))
            }
            ClosedForm::Product { a, b } => c(product(n, *a, *b, 0)),
        }
    }

    pub fn eval_in<F: Field>(&self, n: u32) -> Option<F> {
        let p = self.eval(n);
        match p.constant_value() {
            Some(v) => Some(F::from_rational(&v)),
            None => F::from_polynomial(&p.with_vars(&[String::from("x")]).ok()?),
        }
    }

    pub fn description(&self) -> String {
        match self {
            ClosedForm::Motzkin => "prod_{k=0}^{n-1} (4k+1)".into(),
            ClosedForm::Delannoy => "2^((n+1)(n-1)) (2n-1) prod_{k=1}^{n-1} (4k-1)".into(),
            ClosedForm::Narayana(NarayanaParam::Symbolic) => {
                "x^(n^2) prod_{k=0}^{n-1} (4k+1)".into()
            }
            ClosedForm::Narayana(NarayanaParam::Value(x)) => {
                format!("({x})^(n^2) prod_{{k=0}}^{{n-1}} (4k+1)")
            }
            ClosedForm::Schroeder => "2^(n^2) prod_{k=0}^{n-1} (4k+1)".into(),
            ClosedForm::Product { a, b } => {
                let sign = if *b < 0 { '-' } else { '+' };
                format!("prod_{{k=0}}^{{n-1}} ({a}k{sign}{})", b.abs())
            }
        }
    }
}
