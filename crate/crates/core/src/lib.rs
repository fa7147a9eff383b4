//! Exact evaluation and certification of Pfaffians by the holonomic ansatz.
//!
//! The crate is `no_std` (it needs `alloc`). It provides:
//!
//! * [`arith`]: rationals, multivariate polynomials, rational functions and
//!   exact dense linear algebra;
//! * [`sequences`]: Motzkin, Delannoy, Narayana, Schröder numbers, the
//!   Motzkin triangle and the matrix families built from them;
//! * [`pfaffian`]: skew-symmetric matrices, three Pfaffian algorithms,
//!   minors, signed cofactors and the normalized cofactor vector;
//! * [`guess`]: recurrence operators with polynomial coefficients, fitting
//!   them to exact data, and analysis of their leading coefficients;
//! * [`ansatz`]: the cofactor pipeline that certifies a closed form for a
//!   family of Pfaffians on a finite range, and the generalized Motzkin
//!   Pfaffian checker;
//! * [`msf`]: partitions, the Motzkin-triangle matrix `H(n)` and the minor
//!   summation identities built on it.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod ansatz;
pub mod arith;
mod error;
pub mod guess;
pub mod msf;
pub mod pfaffian;
pub mod sequences;
#[cfg(feature = "serde")]
mod serde_impls;

pub use arith::{
    ExactMatrix, Field, Integer, Monomial, Polynomial, Rational, RationalFunction, Ring,
};
pub use error::{Error, Result};
pub use pfaffian::SkewMatrix;
pub use sequences::MatrixFamily;
