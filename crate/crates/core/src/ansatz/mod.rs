//! The cofactor method for Pfaffians of a matrix family: cofactor tables,
//! the identities they satisfy, the ratio sequence, and certification of
//! closed-form evaluations on a finite range.

mod certify;
mod closed_form;
mod conjecture;
mod tables;

pub use certify::{
    certify, BoundaryCheck, CertVerdict, CertificationReport, CertifyOptions, CheckSummary,
    GuessPlan, GuessRecord, Witness,
};
pub use closed_form::ClosedForm;
pub use conjecture::{
    check_conjecture, conjecture_prediction, ConjectureReport, ConjectureRow, PredictionCase,
    Variant,
};
pub use tables::{
    c_table, check_identity2, pfaffian_quotients, pfaffians, ratio_sequence, row_sums, telescoped,
    CTable, Identity2Check, RowSums,
};
