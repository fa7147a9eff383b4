//! Guessing, applying and analysing linear recurrences with polynomial
//! coefficients on exact data.

pub mod catalog;
mod fit;
mod operator;
mod roots;
mod table;

pub use fit::{guess_bivariate, guess_univariate, GuessOutcome, GuessSpec, Support, Windows};
pub use operator::{
    apply_operator, check_annihilates, residuals, AnnihilationCheck, RecurrenceOperator,
};
pub use roots::{integer_roots, leading_nonvanishing, NonvanishingReport, Region, Verdict};
pub use table::{Grid, Sequence, Table2};
