//! Exact scalars, polynomials and dense linear algebra.

mod linalg;
mod matrix;
mod poly;
mod ratfun;
mod rational;
mod ring;

pub use linalg::{
    determinant, nullspace, nullspace_integer, solve_linear, solve_linear_field, Solution,
};
pub(crate) use linalg::{integer_row, integer_rows_kernel};
pub use matrix::ExactMatrix;
pub use poly::{Monomial, Polynomial};
pub use ratfun::RationalFunction;
pub use rational::{binomial, bit_size, int, is_integer, parse_rational, rat, Integer, Rational};
pub use ring::{Field, Ring};
