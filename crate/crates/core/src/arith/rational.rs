use alloc::string::ToString;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{Field, Polynomial, Ring};
use crate::error::{Error, Result};

/// Arbitrary-precision integer.
pub type Integer = BigInt;
/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(numer.into(), denom.into())
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(value.into())
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Bits in numerator plus denominator.
pub fn bit_size(r: &Rational) -> u64 {
    r.numer().bits() + r.denom().bits()
}

/// `C(n, k)`, zero when `k < 0`, `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> Integer {
    if n < 0 || k < 0 || k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for t in 0..k {
        acc = acc * Integer::from(n - t) / Integer::from(t + 1);
    }
    acc
}

/// Parses `"p"` or `"p/q"` with an optional leading sign.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let err = |reason: &str| Error::Parse {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: Integer = num.parse().map_err(|_| err("bad numerator"))?;
    let den: Integer = den.parse().map_err(|_| err("bad denominator"))?;
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

impl Ring for Rational {
    fn from_i64(value: i64) -> Self {
        int(value)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self / rhs)
        }
    }
    fn size(&self) -> u64 {
        bit_size(self)
    }
}

impl Field for Rational {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_polynomial(p: &Polynomial) -> Option<Self> {
        p.constant_value()
    }
    fn to_polynomial(&self) -> Option<Polynomial> {
        Some(Polynomial::constant(self.clone()))
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn solve(
        a: &crate::arith::ExactMatrix<Self>,
        b: &[Self],
    ) -> crate::Result<Option<crate::arith::Solution<Self>>> {
        crate::arith::solve_linear(a, b)
    }
}

/// Least common multiple of the denominators.
pub(crate) fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Integer {
    values
        .into_iter()
        .fold(Integer::one(), |acc, v| acc.lcm(v.denom()))
}

/// Divides out the gcd of the entries; the sign is left alone.
pub(crate) fn make_primitive(row: &mut [Integer]) {
    let mut g = Integer::zero();
    for v in row.iter() {
        if !v.is_zero() {
            g = g.gcd(v);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for v in row.iter_mut() {
        if !v.is_zero() {
            *v = &*v / &g;
        }
    }
}

/// Integer vector with content 1 and first nonzero entry positive.
pub(crate) fn normalize_integer_vector(values: &[Rational]) -> alloc::vec::Vec<Integer> {
    let l = denominator_lcm(values);
    let mut out: alloc::vec::Vec<Integer> = values
        .iter()
        .map(|v| (v * Rational::from_integer(l.clone())).to_integer())
        .collect();
    make_primitive(&mut out);
    if out
        .iter()
        .find(|v| !v.is_zero())
        .is_some_and(|v| v.is_negative())
    {
        for v in out.iter_mut() {
            *v = -&*v;
        }
    }
    out
}
