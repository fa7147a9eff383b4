//! Quotients of polynomials.
//!
//! Normal form: the denominator has leading coefficient one under graded
//! lexicographic order. When numerator and denominator involve at most one
//! common variable the pair is reduced by its gcd; multivariate pairs are
//! only reduced when the denominator divides the numerator exactly.

use core::fmt;
use core::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::arith::{Field, Polynomial, Rational, Ring};

#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// `None` if the denominator is zero.
    pub fn new(num: Polynomial, den: Polynomial) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::normalized(num, den))
    }

    fn normalized(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return RationalFunction {
                num,
                den: Polynomial::one(),
            };
        }
        if let Some(c) = den.constant_value() {
            return RationalFunction {
                num: num.scale(&c.recip()),
                den: Polynomial::one(),
            };
        }
        let (num, den) = match num.gcd_univariate(&den) {
            Some(g) if !g.is_constant() => {
                // g divides both by construction
                (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
            }
            Some(_) => (num, den),
            None => match num.div_exact(&den) {
                Some(q) => (q, Polynomial::one()),
                None => (num, den),
            },
        };
        let lc = den.leading_coefficient();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip();
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one_poly()
    }

    /// Evaluates at a named point; `None` if the denominator vanishes.
    pub fn eval_named(&self, assignment: &[(&str, Rational)]) -> crate::Result<Option<Rational>> {
        let d = self.den.eval_named(assignment)?;
        if d.is_zero() {
            return Ok(None);
        }
        Ok(Some(self.num.eval_named(assignment)? / d))
    }
}

impl Polynomial {
    fn is_one_poly(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: Self) -> Self {
        self.plus(&rhs)
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: Self) -> Self {
        self.times(&rhs)
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        Polynomial::zero().into()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Polynomial::one().into()
    }
}

impl Ring for RationalFunction {
    fn from_i64(value: i64) -> Self {
        Polynomial::from_i64(value).into()
    }
    fn plus(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::normalized(&self.num + &rhs.num, self.den.clone());
        }
        Self::normalized(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }
    fn times(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        Self::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
    fn negated(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.divide(rhs)
    }
    fn size(&self) -> u64 {
        self.num.size() + self.den.size()
    }
}

impl Field for RationalFunction {
    fn inverse(&self) -> Option<Self> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }
    fn from_polynomial(p: &Polynomial) -> Option<Self> {
        Some(p.clone().into())
    }
    fn to_polynomial(&self) -> Option<Polynomial> {
        if self.is_polynomial() {
            Some(self.num.clone())
        } else {
            self.num.div_exact(&self.den)
        }
    }
    fn from_rational(r: &Rational) -> Self {
        Polynomial::constant(r.clone()).into()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s).unwrap()
    }

    fn rf(n: &str, d: &str) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn reduces_univariate() {
        let r = rf("x^2 - 1", "2*x + 2");
        assert_eq!(r.numerator(), &p("1/2*x - 1/2"));
        assert_eq!(r.denominator(), &p("1"));
        assert!(r.is_polynomial());
    }

    #[test]
    fn field_operations() {
        let a = rf("1", "x");
        let b = rf("1", "x + 1");
        let s = a.plus(&b);
        assert_eq!(s, rf("2*x + 1", "x^2 + x"));
        assert_eq!(s.times(&rf("x^2 + x", "2*x + 1")), RationalFunction::one());
        assert_eq!(a.inverse().unwrap().to_polynomial().unwrap(), p("x"));
        assert!(RationalFunction::zero().inverse().is_none());
        assert!(RationalFunction::new(p("1"), p("0")).is_none());
    }

    #[test]
    fn multivariate_exact_quotient_collapses() {
        let r = rf("x^2 - y^2", "x - y");
        assert!(r.is_polynomial());
        assert_eq!(r.to_polynomial().unwrap(), p("x + y"));
    }
}
