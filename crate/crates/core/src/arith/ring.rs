use core::fmt::{Debug, Display};

use num_traits::{One, Zero};

use crate::arith::{solve_linear_field, ExactMatrix, Polynomial, Rational, Solution};
use crate::error::Result;

/// A commutative ring with exact arithmetic.
///
/// Zero and one come from `num_traits`. Methods take references so that big-number values are not cloned on
/// every operation. `size` is a rough measure of representation size used
/// to pick small pivots.
pub trait Ring: Clone + PartialEq + Debug + Display + Zero + One {
    fn from_i64(value: i64) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// `self / rhs` when the quotient exists in the ring.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
    fn size(&self) -> u64;
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inverse(&self) -> Option<Self>;

    fn divide(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|inv| self.times(&inv))
    }

    /// Embeds a polynomial; `None` if it does not live in this field
    /// (a non-constant polynomial for [`Rational`]).
    fn from_polynomial(p: &Polynomial) -> Option<Self>;

    /// The field element as a polynomial, when it is one.
    fn to_polynomial(&self) -> Option<Polynomial>;

    fn from_rational(r: &Rational) -> Self;

    /// Solves `A x = b`; `None` if inconsistent. Fields with a faster exact
    /// method override this.
    fn solve(a: &ExactMatrix<Self>, b: &[Self]) -> Result<Option<Solution<Self>>> {
        solve_linear_field(a, b)
    }
}
