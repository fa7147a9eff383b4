//! Multivariate polynomials over the rationals with named variables.
//!
//! Terms are kept in a map keyed by exponent vectors ordered graded
//! lexicographically with respect to the declared variable order, so the
//! leading term is the last entry. Zero coefficients are never stored.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::arith::rational::{bit_size, denominator_lcm, int};
use crate::arith::{Integer, Rational, Ring};
use crate::error::{Error, Result};

/// Exponent vector, ordered graded lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug)]
pub struct Polynomial {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial {
            vars: Vec::new(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(Vec::new()), c);
        }
        Polynomial {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(int(c))
    }

    pub fn variable(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![1]), Rational::one());
        Polynomial {
            vars: vec![name.to_owned()],
            terms,
        }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs; like
    /// exponents are combined and zeros dropped.
    pub fn from_terms(
        vars: Vec<String>,
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (exps, c) in terms {
            if exps.len() != vars.len() {
                return Err(Error::ArityMismatch {
                    expected: vars.len(),
                    got: exps.len(),
                });
            }
            *map.entry(Monomial(exps)).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Polynomial { vars, terms: map })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Terms in decreasing graded lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn degree_in(&self, var: &str) -> Option<u32> {
        let idx = self.vars.iter().position(|v| v == var);
        self.terms.keys().map(|m| idx.map_or(0, |k| m.0[k])).max()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.leading_term()
            .map_or_else(Rational::zero, |(_, c)| c.clone())
    }

    /// Variables that actually occur, in declared order.
    pub fn used_vars(&self) -> Vec<String> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(k, _)| self.terms.keys().any(|m| m.0[*k] > 0))
            .map(|(_, v)| v.clone())
            .collect()
    }

    /// Re-embeds into the given variable list, which must contain every
    /// variable that occurs.
    pub fn with_vars(&self, vars: &[String]) -> Result<Self> {
        if self.vars == vars {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.vars.len());
        for (k, v) in self.vars.iter().enumerate() {
            match vars.iter().position(|w| w == v) {
                Some(p) => map.push(Some(p)),
                None if self.terms.keys().all(|m| m.0[k] == 0) => map.push(None),
                None => return Err(Error::UnknownVariable(v.clone())),
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; vars.len()];
                for (k, p) in map.iter().enumerate() {
                    if let Some(p) = p {
                        e[*p] = m.0[k];
                    }
                }
                (Monomial(e), c.clone())
            })
            .collect();
        Ok(Polynomial {
            vars: vars.to_vec(),
            terms,
        })
    }

    fn union_vars(&self, other: &Polynomial) -> Vec<String> {
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars
    }

    fn aligned(&self, other: &Polynomial) -> (Polynomial, Polynomial) {
        let vars = self.union_vars(other);
        // union contains both variable lists, so re-embedding cannot fail
        (
            self.with_vars(&vars).unwrap(),
            other.with_vars(&vars).unwrap(),
        )
    }

    fn combine(&self, other: &Polynomial, sign: bool) -> Polynomial {
        let apply = |a: Polynomial, b: &Polynomial| {
            let mut terms = a.terms;
            for (m, c) in &b.terms {
                let e = terms.entry(m.clone()).or_insert_with(Rational::zero);
                if sign {
                    *e += c;
                } else {
                    *e -= c;
                }
                if e.is_zero() {
                    terms.remove(m);
                }
            }
            Polynomial {
                vars: a.vars,
                terms,
            }
        };
        if self.vars == other.vars {
            apply(self.clone(), other)
        } else {
            let (a, b) = self.aligned(other);
            apply(a, &b)
        }
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        let go = |a: &Polynomial, b: &Polynomial| {
            let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
            for (ma, ca) in &a.terms {
                for (mb, cb) in &b.terms {
                    *terms.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
                }
            }
            terms.retain(|_, c| !c.is_zero());
            Polynomial {
                vars: a.vars.clone(),
                terms,
            }
        };
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        if self.vars == other.vars {
            go(self, other)
        } else {
            let (a, b) = self.aligned(other);
            go(&a, &b)
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates at a point given in declared variable order.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.vars.len() {
            return Err(Error::ArityMismatch {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, e) in point.iter().zip(&m.0) {
                if *e > 0 {
                    t *= num_traits::pow(x.clone(), *e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Evaluates at an integer point given in declared variable order.
    pub fn eval_i64(&self, point: &[i64]) -> Result<Rational> {
        if point.len() != self.vars.len() {
            return Err(Error::ArityMismatch {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        let mut acc = Integer::zero();
        let den = denominator_lcm(self.terms.values());
        for (m, c) in &self.terms {
            let mut t = (c * Rational::from_integer(den.clone())).to_integer();
            for (x, e) in point.iter().zip(&m.0) {
                if *e > 0 {
                    t *= num_traits::pow(Integer::from(*x), *e as usize);
                }
            }
            acc += t;
        }
        Ok(Rational::new(acc, den))
    }

    /// Evaluates at named values; every occurring variable must be bound.
    pub fn eval_named(&self, assignment: &[(&str, Rational)]) -> Result<Rational> {
        let p = self.partial_eval(assignment)?;
        p.constant_value().ok_or_else(|| Error::ArityMismatch {
            expected: self.used_vars().len(),
            got: assignment.len(),
        })
    }

    /// Substitutes rational values for some variables; names the
    /// polynomial does not declare are ignored.
    pub fn partial_eval(&self, assignment: &[(&str, Rational)]) -> Result<Polynomial> {
        let mut out = self.clone();
        for (name, value) in assignment
            .iter()
            .filter(|(name, _)| self.vars.iter().any(|v| v == name))
        {
            out = out.substitute(name, &Polynomial::constant(value.clone()))?;
        }
        Ok(out)
    }

    /// Replaces `var` by `value`. The variable must be declared.
    pub fn substitute(&self, var: &str, value: &Polynomial) -> Result<Polynomial> {
        let k = self
            .vars
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| Error::UnknownVariable(var.to_owned()))?;
        let mut acc = Polynomial::zero();
        let mut powers: Vec<Polynomial> = vec![Polynomial::one()];
        for (m, c) in &self.terms {
            let e = m.0[k] as usize;
            while powers.len() <= e {
                let next = &powers[powers.len() - 1] * value;
                powers.push(next);
            }
            let mut rest = m.0.clone();
            rest[k] = 0;
            let mono = Polynomial {
                vars: self.vars.clone(),
                terms: core::iter::once((Monomial(rest), c.clone())).collect(),
            };
            acc = &acc + &(&mono * &powers[e]);
        }
        let vars: Vec<String> = acc
            .vars
            .iter()
            .filter(|v| *v != var || value.vars.contains(v))
            .cloned()
            .collect();
        acc.with_vars(&vars)
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        let (mut r, d) = self.aligned(d);
        let vars = r.vars.clone();
        let (dm, dc) = d.leading_term().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut q = Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        };
        while let Some((rm, rc)) = r.leading_term() {
            let m = rm.div(&dm)?;
            let c = rc / &dc;
            let t = Polynomial {
                vars: vars.clone(),
                terms: core::iter::once((m, c)).collect(),
            };
            r = &r - &(&t * &d);
            q = &q + &t;
        }
        Some(q)
    }

    /// `(c, p)` with `self = c * p`, where `p` has integer coefficients of
    /// content one and a positive leading coefficient.
    pub fn content_primitive(&self) -> (Rational, Polynomial) {
        if self.is_zero() {
            return (Rational::zero(), self.clone());
        }
        let den = denominator_lcm(self.terms.values());
        let scaled: Vec<Integer> = self
            .terms
            .values()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = scaled.iter().fold(Integer::zero(), |acc, v| acc.gcd(v));
        if self.leading_coefficient().is_negative() {
            g = -g;
        }
        let content = Rational::new(g, den);
        let inv = content.recip();
        (content, self.scale(&inv))
    }

    /// Dense coefficients `[c0, c1, ...]` when at most one variable occurs.
    pub fn to_dense(&self) -> Option<(Option<String>, Vec<Rational>)> {
        let used = self.used_vars();
        if used.len() > 1 {
            return None;
        }
        let k = used
            .first()
            .and_then(|u| self.vars.iter().position(|v| v == u));
        let deg = self.total_degree().unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (m, c) in &self.terms {
            let e = k.map_or(0, |k| m.0[k]) as usize;
            coeffs[e] = c.clone();
        }
        Some((used.into_iter().next(), coeffs))
    }

    pub fn from_dense(var: &str, coeffs: &[Rational]) -> Polynomial {
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (Monomial(vec![e as u32]), c.clone()))
            .collect();
        Polynomial {
            vars: vec![var.to_owned()],
            terms,
        }
    }

    /// Monic gcd of two polynomials in (at most) the same single variable.
    /// `None` if either is multivariate or they use different variables.
    pub fn gcd_univariate(&self, other: &Polynomial) -> Option<Polynomial> {
        let (va, a) = self.to_dense()?;
        let (vb, b) = other.to_dense()?;
        let var = match (va, vb) {
            (Some(x), Some(y)) if x != y => return None,
            (Some(x), _) | (_, Some(x)) => x,
            (None, None) => "x".to_owned(),
        };
        let g = dense_gcd(trim(a), trim(b));
        Some(Polynomial::from_dense(&var, &g))
    }

    /// Parses the text format, discovering variables in order of first
    /// appearance.
    pub fn parse(text: &str) -> Result<Polynomial> {
        let mut p = Parser {
            src: text,
            bytes: text.as_bytes(),
            pos: 0,
        };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != p.bytes.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(out)
    }

    /// Parses the text format over a fixed variable list.
    pub fn parse_in(text: &str, vars: &[String]) -> Result<Polynomial> {
        Self::parse(text)?.with_vars(vars)
    }
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn dense_rem(mut a: Vec<Rational>, b: &[Rational]) -> Vec<Rational> {
    let lb = b.last().unwrap();
    while a.len() >= b.len() {
        let shift = a.len() - b.len();
        let f = a.last().unwrap() / lb;
        for (k, c) in b.iter().enumerate() {
            a[k + shift] -= &f * c;
        }
        a.pop();
        a = trim(a);
    }
    a
}

fn dense_gcd(mut a: Vec<Rational>, mut b: Vec<Rational>) -> Vec<Rational> {
    while !b.is_empty() {
        let r = dense_rem(a, &b);
        a = b;
        b = r;
    }
    match a.last().cloned() {
        None => a,
        Some(lc) => a.iter().map(|c| c / &lc).collect(),
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            self.terms == other.terms
        } else {
            self.combine(other, false).is_zero()
        }
    }
}

impl Eq for Polynomial {}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident, $body:expr) => {
        impl $Trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                $body(self, rhs)
            }
        }
        impl $Trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                $body(&self, &rhs)
            }
        }
        impl $Trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Polynomial, b: &Polynomial| a
    .combine(b, true));
forward_binop!(Sub, sub, |a: &Polynomial, b: &Polynomial| a
    .combine(b, false));
forward_binop!(Mul, mul, |a: &Polynomial, b: &Polynomial| a.product(b));

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Polynomial::one()
    }
}

impl Ring for Polynomial {
    fn from_i64(value: i64) -> Self {
        Polynomial::from_i64(value)
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
        Polynomial::div_exact(self, rhs)
    }
    fn size(&self) -> u64 {
        self.terms
            .iter()
            .map(|(m, c)| bit_size(c) + u64::from(m.degree()))
            .sum()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let mono = self.monomial_text(m);
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => f.write_str(&mono)?,
                (false, false) => write!(f, "{abs}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl Polynomial {
    fn monomial_text(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (v, e) in self.vars.iter().zip(&m.0) {
            match e {
                0 => {}
                1 => parts.push(v.clone()),
                _ => parts.push(alloc::format!("{v}^{e}")),
            }
        }
        parts.join("*")
    }
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, reason: &str) -> Error {
        Error::Parse {
            text: self.src.to_string(),
            reason: alloc::format!("{reason} at byte {}", self.pos),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.factor()?;
                    let c = d
                        .constant_value()
                        .ok_or_else(|| self.error("division by a non-constant"))?;
                    if c.is_zero() {
                        return Err(self.error("division by zero"));
                    }
                    acc = acc.scale(&c.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.factor()
            }
            _ => {
                let base = self.atom()?;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.skip_ws();
                    let e = self
                        .digits()
                        .ok_or_else(|| self.error("expected exponent"))?;
                    let e: u32 = e.parse().map_err(|_| self.error("exponent too large"))?;
                    Ok(base.pow(e))
                } else {
                    Ok(base)
                }
            }
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let src = self.src;
        (self.pos > start).then(|| &src[start..self.pos])
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().unwrap();
                let v: Integer = d.parse().map_err(|_| self.error("bad number"))?;
                if self
                    .bytes
                    .get(self.pos)
                    .is_some_and(|b| b.is_ascii_alphabetic() || *b == b'_')
                {
                    return Err(self.error("implicit multiplication is not supported"));
                }
                Ok(Polynomial::constant(Rational::from_integer(v)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.bytes.len()
                    && (self.bytes[self.pos].is_ascii_alphanumeric()
                        || self.bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Ok(Polynomial::variable(&self.src[start..self.pos]))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s).unwrap()
    }

    #[test]
    fn eval_linear() {
        assert_eq!(p("4*n - 7").eval(&[int(2)]).unwrap(), int(1));
    }

    #[test]
    fn mul_simple() {
        assert_eq!(p("x") * p("x + 1"), p("x^2 + x"));
    }

    #[test]
    fn leading_coefficient_of_first_recurrence_vanishes_at_i_one() {
        let lc = Polynomial::parse_in("(i-1)*(2*n-3)*(4*n-7)", &["n".into(), "i".into()]).unwrap();
        assert_eq!(lc.eval(&[int(2), int(1)]).unwrap(), int(0));
        assert_eq!(lc.eval_i64(&[2, 1]).unwrap(), int(0));
        assert_eq!(lc.eval_i64(&[3, 2]).unwrap(), int(3 * 5));
    }

    #[test]
    fn arity_mismatch() {
        let e = p("x*y").eval(&[int(1)]).unwrap_err();
        assert_eq!(
            e,
            Error::ArityMismatch {
                expected: 2,
                got: 1
            }
        );
    }

    #[test]
    fn display_is_deterministic_and_parses_back() {
        let q = p("(i-1)*(2*n-3)*(4*n-7)");
        let text = q.to_string();
        assert_eq!(text, "8*i*n^2 - 26*i*n - 8*n^2 + 21*i + 26*n - 21");
        assert_eq!(p(&text), q);
        assert_eq!(p("-3/4*x + 1/2").to_string(), "-3/4*x + 1/2");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn equality_ignores_unused_variables() {
        let a = Polynomial::parse_in("x + 1", &["x".into(), "y".into()]).unwrap();
        assert_eq!(a, p("1 + x"));
        assert_ne!(a, p("x + y"));
    }

    #[test]
    fn substitute_and_partial_eval() {
        let q = p("x^2*y + y");
        let r = q.substitute("x", &p("y + 1")).unwrap();
        assert_eq!(r, p("y^3 + 2*y^2 + 2*y"));
        assert_eq!(
            q.eval_named(&[("x", int(2)), ("y", rat(1, 2))]).unwrap(),
            rat(5, 2)
        );
        assert!(q.substitute("z", &p("1")).is_err());
    }

    #[test]
    fn exact_division() {
        let a = p("(x+y)*(x-2*y+3)");
        assert_eq!(a.div_exact(&p("x + y")).unwrap(), p("x - 2*y + 3"));
        assert!(a.div_exact(&p("x + 2")).is_none());
        assert_eq!(p("6*x").div_exact(&p("3")).unwrap(), p("2*x"));
    }

    #[test]
    fn univariate_gcd() {
        let g = p("(x-1)*(x+2)^2")
            .gcd_univariate(&p("3*(x+2)*(x-5)"))
            .unwrap();
        assert_eq!(g, p("x + 2"));
        assert!(p("x*y").gcd_univariate(&p("x")).is_none());
    }

    #[test]
    fn content_primitive_positive_leading() {
        let (c, q) = p("-2/3*x + 4/9").content_primitive();
        assert_eq!(q, p("3*x - 2"));
        assert_eq!(c, rat(-2, 9));
    }

    #[test]
    fn parse_errors() {
        assert!(Polynomial::parse("2n").is_err());
        assert!(Polynomial::parse("(x+1").is_err());
        assert!(Polynomial::parse("x/y").is_err());
        assert!(Polynomial::parse("x +").is_err());
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(((0u32..3, 0u32..3), -5i64..6), 0..5).prop_map(|terms| {
            Polynomial::from_terms(
                vec!["x".into(), "y".into()],
                terms.into_iter().map(|((a, b), c)| (vec![a, b], int(c))),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            prop_assert!(!a.terms.values().any(|v| v.is_zero()));
        }

        #[test]
        fn text_round_trip(a in small_poly()) {
            prop_assert_eq!(Polynomial::parse(&a.to_string()).unwrap(), a);
        }

        #[test]
        fn product_divides_exactly(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        }
    }
}
