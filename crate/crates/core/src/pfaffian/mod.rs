//! Skew-symmetric matrices and their Pfaffians.
//!
//! All indices in this module's public API are one-based, matching the
//! usual `a_{i,j}` notation.

mod algorithms;
mod cofactor;
mod matching;
mod skew;

pub use algorithms::{
    pf_eliminate, pf_laplace, pf_naive, pf_polynomial, LAPLACE_MAX_DIM, NAIVE_MAX_DIM,
};
pub use cofactor::{
    cofactor_vector, cofactor_vector_by_gamma, gamma, permutation_sign, permute, pf_minor,
};
pub use matching::PerfectMatching;
pub use skew::SkewMatrix;
