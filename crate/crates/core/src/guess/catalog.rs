//! Recurrences known from the literature for the Motzkin and Delannoy
//! families, in the conventions of this crate: `c(n, i)` is the cofactor
//! table, `g(n, j)` the row sums `sum_i c(n, i) a(i, j)`, `r(n)` the ratio
//! sequence. Each is stored with its shifts relative to the evaluation
//! point.

use super::RecurrenceOperator;

fn op(vars: &[&str], terms: &[(&[i64], &str)]) -> RecurrenceOperator {
    RecurrenceOperator::from_text(vars, terms).expect("catalog entries are well formed")
}

/// Three recurrences for the Motzkin cofactor table `c(n, i)`.
pub fn motzkin_cofactor() -> [RecurrenceOperator; 3] {
    let v = ["n", "i"];
    [
        op(
            &v,
            &[
                (&[0, 0], "(i-1)*(2*n-3)*(4*n-7)"),
                (&[-1, -1], "(2*n+i-4)*(8*i*n-8*i-8*n^2+6*n+3)"),
                (&[-1, 0], "-(i-1)*(16*i*n-16*i+8*n^2-34*n+27)"),
                (&[-1, 1], "-24*i*(i-1)*(n-1)"),
                (&[0, -1], "(2*n-3)*(4*n-7)*(2*n-i)"),
            ],
        ),
        op(
            &v,
            &[
                (&[0, 0], "(n-2)*(2*n-5)*(4*n-11)*(4*n-7)*(2*n-i-2)*(2*n-i-1)"),
                (
                    &[-1, 0],
                    "-(2*n-5)*(4*n-11)*(8*i^2*n^2-24*i^2*n+17*i^2-16*i*n^2+48*i*n-33*i-16*n^4+108*n^3-258*n^2+258*n-92)",
                ),
                (&[-2, 0], "(n-1)*(4*n-7)*(2*n+i-5)*(32*i*n^2-122*i*n+117*i-32*n^3+168*n^2-280*n+144)"),
                (&[-2, 1], "-6*i*(4*i+1)*(n-2)*(n-1)*(2*n-3)*(4*n-7)"),
                (&[-2, 2], "-36*i*(i+1)*(n-2)*(n-1)*(2*n-3)*(4*n-7)"),
            ],
        ),
        op(
            &v,
            &[
                (&[0, 0], "18*n*(i-3)*(i-2)*(i-1)"),
                (&[0, -3], "-(2*n+i-4)*(10*i^2*n-24*i*n^2-63*i*n+i+16*n^3+76*n^2+97*n-3)"),
                (&[0, -2], "2*(i-3)*n*(7*i^2-12*i*n-46*i+33*n+73)"),
                (&[0, -1], "3*(i-3)*(i-2)*n*(14*i-12*n-39)"),
                (&[1, -3], "(2*n-1)*(4*n-3)*(2*n-i+4)*(2*n-i+3)"),
            ],
        ),
    ]
}

/// Two recurrences for the Motzkin row sums `g(n, j)`.
pub fn motzkin_row_sums() -> [RecurrenceOperator; 2] {
    let v = ["n", "j"];
    [
        op(
            &v,
            &[
                (&[0, 0], "j*(4*n-7)*(2*n+j-2)"),
                (&[-1, 0], "-j*(4*n-3)*(j-n+1)"),
                (&[-1, 1], "-(n-1)*(4*n-3)*(2*n-j-3)"),
            ],
        ),
        op(
            &v,
            &[
                (&[0, 0], "(j-2*n)*(2*n+j-2)"),
                (&[0, -2], "-3*(j-2)*(j-1)"),
                (&[0, -1], "-(j-1)*(2*j-3)"),
            ],
        ),
    ]
}

/// Recurrence for the Motzkin ratio sequence `r(n)`.
pub fn motzkin_ratio() -> RecurrenceOperator {
    op(
        &["n"],
        &[
            (&[0], "2*(4*n-11)*(4*n-7)*(4*n-5)*(7*n-13)"),
            (&[-1], "-(4*n-11)*(350*n^3-1413*n^2+1798*n-714)"),
            (&[-2], "9*(n-2)*(2*n-3)*(4*n-7)*(7*n-6)"),
        ],
    )
}

/// Two recurrences for the Delannoy cofactor table.
pub fn delannoy_cofactor() -> [RecurrenceOperator; 2] {
    let v = ["n", "i"];
    [
        op(
            &v,
            &[
                (&[0, 0], "2*(i-3)*(i-2)*(i-1)"),
                (&[0, -1], "-3*(i-3)*(i-2)*(8*i-27)"),
                (&[0, -2], "(i-3)*(76*i^2-589*i-8*n^2+16*n+1109)"),
                (&[0, -3], "-3*(8*i^3-105*i^2-16*i*n^2+32*i*n+443*i+68*n^2-136*n-600)"),
                (&[0, -4], "(2*i-11)*(i-2*n-3)*(i+2*n-7)"),
            ],
        ),
        op(
            &v,
            &[
                (&[0, 0], "2*(n-2)*(2*n-3)*(4*n-9)*(i-2*n+1)*(i-2*n+2)"),
                (
                    &[-1, 0],
                    "-(n-1)*(i+2*n-5)*(68*i^2*n-102*i^2-96*i*n^2+178*i*n-43*i+64*n^3-208*n^2+200*n-56)",
                ),
                (&[-1, 1], "6*i*(n-1)*(2*n-3)*(35*i^2+4*i*n-66*i-n+14)"),
                (&[-1, 2], "-i*(i+1)*(n-1)*(2*n-3)*(70*i+4*n-31)"),
                (&[-1, 3], "6*i*(i+1)*(i+2)*(n-1)*(2*n-3)"),
            ],
        ),
    ]
}
