//! Combinatorial sequences and the skew-symmetric matrix families built
//! from them.
//!
//! Every value comes from its defining finite sum. A negative index gives 0.

use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::arith::{binomial, int, is_integer, parse_rational, rat, Field, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::pfaffian::SkewMatrix;

fn binom(n: i64, k: i64) -> Rational {
    Rational::from_integer(binomial(n, k))
}

/// Motzkin number `M_n = sum_k C(n, 2k) C(2k, k) / (k + 1)`.
pub fn motzkin(n: i64) -> Rational {
    if n < 0 {
        return Rational::zero();
    }
    (0..=n / 2)
        .map(|k| binom(n, 2 * k) * binom(2 * k, k) / int(k + 1))
        .sum()
}

/// Central Delannoy number `D_n = sum_k C(n, k) C(n + k, k)`.
pub fn delannoy(n: i64) -> Rational {
    if n < 0 {
        return Rational::zero();
    }
    (0..=n).map(|k| binom(n, k) * binom(n + k, k)).sum()
}

/// Large Schröder number `S_n = sum_k C(n + k, 2k) C(2k, k) / (k + 1)`.
pub fn schroeder(n: i64) -> Rational {
    if n < 0 {
        return Rational::zero();
    }
    (0..=n)
        .map(|k| binom(n + k, 2 * k) * binom(2 * k, k) / int(k + 1))
        .sum()
}

/// Narayana polynomial in `x`: `N_0 = 1`, `N_n = sum_k C(n, k) C(n, k - 1) x^k / n`.
pub fn narayana(n: i64) -> Polynomial {
    if n < 0 {
        return Polynomial::from_dense("x", &[]);
    }
    if n == 0 {
        return Polynomial::from_dense("x", &[Rational::one()]);
    }
    let coeffs: alloc::vec::Vec<Rational> = (0..=n)
        .map(|k| binom(n, k) * binom(n, k - 1) / int(n))
        .collect();
    Polynomial::from_dense("x", &coeffs)
}

/// `N_n(x)` at a rational point.
pub fn narayana_at(n: i64, x: &Rational) -> Rational {
    if n < 0 {
        return Rational::zero();
    }
    if n == 0 {
        return Rational::one();
    }
    let mut acc = Rational::zero();
    let mut power = Rational::one();
    for k in 0..=n {
        acc += binom(n, k) * binom(n, k - 1) / int(n) * &power;
        power *= x;
    }
    acc
}

fn nonpositive_integer(r: &Rational) -> Option<u64> {
    use num_traits::ToPrimitive;
    (is_integer(r) && *r <= Rational::zero())
        .then(|| (-r.to_integer()).to_u64())
        .flatten()
}

/// Terminating Gauss hypergeometric sum
/// `sum_{m=0}^{M} (a)_m (b)_m / ((c)_m m!) z^m`, where `M = -a` or `-b`,
/// whichever is a nonpositive integer (the smaller if both are).
pub fn hyp2f1_terminating(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    z: &Rational,
) -> Result<Rational> {
    let cutoff = match (nonpositive_integer(a), nonpositive_integer(b)) {
        (Some(x), Some(y)) => x.min(y),
        (Some(x), None) | (None, Some(x)) => x,
        (None, None) => {
            return Err(Error::NonTerminating {
                a: a.to_string(),
                b: b.to_string(),
            })
        }
    };
    let mut term = Rational::one();
    let mut acc = Rational::one();
    for m in 0..cutoff {
        let m = Rational::from_integer(m.into());
        let lower = c + &m;
        if lower.is_zero() {
            return Err(Error::PoleInRange { c: c.to_string() });
        }
        term = term * (a + &m) * (b + &m) * z / (lower * (m + Rational::one()));
        acc += &term;
    }
    Ok(acc)
}

/// `h(i, j)`: the Motzkin-triangle entries of the matrix `H`.
///
/// `h(i, 2k-1) = C(i-1, k-1) 2F1((k-i)/2, (k-i+1)/2; k+1; 4)` counts Motzkin
/// paths from `(0,0)` to `(i-1, k-1)`, and
/// `h(i, 2k) = (i-1) C(i-2, k-1) 2F1((k-i+1)/2, (k-i+2)/2; k+1; 4)`.
pub fn motzkin_triangle(i: i64, j: i64) -> Rational {
    if i < 1 || j < 1 {
        return Rational::zero();
    }
    let four = int(4);
    let eval = |a: Rational, b: Rational, c: Rational| {
        // both branches only call this with k <= i, where one upper
        // parameter is a nonpositive integer and c = k + 1 > 0
        hyp2f1_terminating(&a, &b, &c, &four).expect("terminating parameters")
    };
    if j % 2 == 1 {
        let k = (j + 1) / 2;
        let c = binom(i - 1, k - 1);
        if c.is_zero() {
            return c;
        }
        c * eval(rat(k - i, 2), rat(k - i + 1, 2), int(k + 1))
    } else {
        let k = j / 2;
        let c = binom(i - 2, k - 1);
        if c.is_zero() {
            return c;
        }
        int(i - 1) * c * eval(rat(k - i + 1, 2), rat(k - i + 2, 2), int(k + 1))
    }
}

/// Generalized Motzkin number `M^{(k)}_i = h(i, 2k - 1)`.
pub fn generalized_motzkin(k: u32, i: i64) -> Rational {
    motzkin_triangle(i, 2 * i64::from(k) - 1)
}

/// The parameter of the Narayana family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NarayanaParam {
    Symbolic,
    Value(Rational),
}

/// A rule `(i, j) -> a_{i,j}` defining skew-symmetric matrices of every
/// dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixFamily {
    /// `(j - i) M_{i+j-3}`
    Motzkin,
    /// `(j - i) D_{i+j-3}`
    Delannoy,
    /// `(j - i) N_{i+j-2}(x)`
    Narayana(NarayanaParam),
    /// `(j - i) S_{i+j-2}`
    Schroeder,
    /// `(j - i) M^{(k)}_{i+j-2}`
    GenMotzkin { k: u32 },
    /// `(j - i) (M^{(k)}_{i+j-2} + M^{(k)}_{i+j-1})`
    GenMotzkinSum { k: u32 },
}

impl MatrixFamily {
    pub fn is_symbolic(&self) -> bool {
        matches!(self, MatrixFamily::Narayana(NarayanaParam::Symbolic))
    }

    /// `s(t)` with `a_{i,j} = (j - i) s(i + j)`, as a polynomial in `x`.
    pub fn base(&self, t: i64) -> Polynomial {
        let c = Polynomial::constant;
        match self {
            MatrixFamily::Motzkin => c(motzkin(t - 3)),
            MatrixFamily::Delannoy => c(delannoy(t - 3)),
            MatrixFamily::Narayana(NarayanaParam::Symbolic) => narayana(t - 2),
            MatrixFamily::Narayana(NarayanaParam::Value(x)) => c(narayana_at(t - 2, x)),
            MatrixFamily::Schroeder => c(schroeder(t - 2)),
            MatrixFamily::GenMotzkin { k } => c(generalized_motzkin(*k, t - 2)),
            MatrixFamily::GenMotzkinSum { k } => {
                c(generalized_motzkin(*k, t - 2) + generalized_motzkin(*k, t - 1))
            }
        }
    }

    /// The entry `a_{i,j}` (one-based) as a polynomial in `x`, constant for
    /// every family except symbolic Narayana.
    pub fn entry(&self, i: usize, j: usize) -> Polynomial {
        if i == j {
            return Polynomial::zero();
        }
        self.base((i + j) as i64).scale(&int(j as i64 - i as i64))
    }

    /// The entry as a rational; `None` for the symbolic Narayana family.
    pub fn entry_rational(&self, i: usize, j: usize) -> Option<Rational> {
        self.entry(i, j).constant_value()
    }

    /// The entry in a coefficient field.
    pub fn entry_in<F: Field>(&self, i: usize, j: usize) -> Option<F> {
        to_field(&self.entry(i, j))
    }

    /// Entries `a_{i,j}` for `1 <= i, j <= max`, sharing one evaluation of
    /// the underlying sequence.
    pub fn entries<F: Field>(&self, max: usize) -> Result<Entries<F>> {
        let base = (0..=2 * max as i64)
            .map(|t| {
                to_field(&self.base(t))
                    .ok_or_else(|| Error::NotConstant(format!("entries of {self} are symbolic")))
            })
            .collect::<Result<alloc::vec::Vec<F>>>()?;
        Ok(Entries { base, max })
    }

    /// The `dim x dim` member of the family over the field `F`.
    pub fn skew_matrix<F: Field>(&self, dim: usize) -> Result<SkewMatrix<F>> {
        self.entries::<F>(dim)?.skew_matrix(dim)
    }
}

fn to_field<F: Field>(p: &Polynomial) -> Option<F> {
    match p.constant_value() {
        Some(r) => Some(F::from_rational(&r)),
        None => F::from_polynomial(p),
    }
}

/// Cached entries of a family up to a fixed index.
#[derive(Clone, Debug)]
pub struct Entries<F> {
    base: alloc::vec::Vec<F>,
    max: usize,
}

impl<F: Field> Entries<F> {
    /// `a_{i,j}` for `1 <= i, j <= max`.
    pub fn get(&self, i: usize, j: usize) -> F {
        assert!(i <= self.max && j <= self.max, "index beyond cached range");
        if i == j {
            return F::zero();
        }
        self.base[i + j].times(&F::from_i64(j as i64 - i as i64))
    }

    pub fn skew_matrix(&self, dim: usize) -> Result<SkewMatrix<F>> {
        SkewMatrix::from_fn(dim, |i, j| self.get(i, j))
    }
}

impl fmt::Display for MatrixFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixFamily::Motzkin => f.write_str("motzkin"),
            MatrixFamily::Delannoy => f.write_str("delannoy"),
            MatrixFamily::Narayana(NarayanaParam::Symbolic) => f.write_str("narayana:x=sym"),
            MatrixFamily::Narayana(NarayanaParam::Value(x)) => write!(f, "narayana:x={x}"),
            MatrixFamily::Schroeder => f.write_str("schroeder"),
            MatrixFamily::GenMotzkin { k } => write!(f, "genmotzkin:k={k}"),
            MatrixFamily::GenMotzkinSum { k } => write!(f, "genmotzkin-sum:k={k}"),
        }
    }
}

impl FromStr for MatrixFamily {
    type Err = Error;

    fn from_str(desc: &str) -> Result<Self> {
        let unknown = || Error::UnknownFamily(desc.to_string());
        let (name, param) = match desc.trim().split_once(':') {
            Some((n, p)) => (n.trim(), Some(p.trim())),
            None => (desc.trim(), None),
        };
        let value = |key: &str| -> Result<Option<String>> {
            match param {
                None => Ok(None),
                Some(p) => match p.split_once('=') {
                    Some((k, v)) if k.trim() == key => Ok(Some(v.trim().to_string())),
                    _ => Err(unknown()),
                },
            }
        };
        let k_param = || -> Result<u32> {
            let v = value("k")?.ok_or_else(unknown)?;
            match v.parse::<u32>() {
                Ok(k) if k >= 1 => Ok(k),
                _ => Err(unknown()),
            }
        };
        match name {
            "motzkin" | "delannoy" | "schroeder" if param.is_some() => Err(unknown()),
            "motzkin" => Ok(MatrixFamily::Motzkin),
            "delannoy" => Ok(MatrixFamily::Delannoy),
            "schroeder" => Ok(MatrixFamily::Schroeder),
            "narayana" => match value("x")?.as_deref() {
                None | Some("sym") => Ok(MatrixFamily::Narayana(NarayanaParam::Symbolic)),
                Some(v) => Ok(MatrixFamily::Narayana(NarayanaParam::Value(
                    parse_rational(v)?,
                ))),
            },
            "genmotzkin" => Ok(MatrixFamily::GenMotzkin { k: k_param()? }),
            "genmotzkin-sum" => Ok(MatrixFamily::GenMotzkinSum { k: k_param()? }),
            _ => Err(unknown()),
        }
    }
}
