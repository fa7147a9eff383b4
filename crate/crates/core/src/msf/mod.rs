//! Partitions, the Motzkin-triangle matrix `H(n)` and the identities that
//! relate its maximal minors to Motzkin Pfaffians.

mod identities;
mod partition;

pub use identities::{
    build_h, canonical_pairing, even_minor_sum, h_band, msf_q, msf_q_minors, msf_q_product,
    okinawa_lhs, okinawa_rhs, verify_even_minor_sum, verify_msf, verify_msf_canonical,
    verify_okinawa, CanonicalMsfReport, EvenMinorSumReport, MinorTerm, MsfReport, OkinawaFailure,
    OkinawaReport,
};
pub use partition::{enumerate_even_even, partitions_in_box, ColumnSelection, Partition};
