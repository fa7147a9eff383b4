use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{rat, Rational};
use crate::error::Result;
use crate::pfaffian::pf_eliminate;
use crate::sequences::MatrixFamily;

/// The two generalised Motzkin Pfaffian families.
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// `(j - i) M^{(k)}_{i+j-2}`
    I,
    /// `(j - i) (M^{(k)}_{i+j-2} + M^{(k)}_{i+j-1})`
    II,
}

impl Variant {
    pub fn family(self, k: u32) -> MatrixFamily {
        match self {
            Variant::I => MatrixFamily::GenMotzkin { k },
            Variant::II => MatrixFamily::GenMotzkinSum { k },
        }
    }
}

impl core::str::FromStr for Variant {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "i" | "I" | "1" => Ok(Variant::I),
            "ii" | "II" | "2" => Ok(Variant::II),
            _ => Err(crate::Error::Parse {
                text: s.into(),
                reason: "variant must be i or ii".into(),
            }),
        }
    }
}

#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PredictionCase {
    /// `k | n`
    Divisible,
    /// `k | n + floor(k/2)` with the parity condition on `k`
    Shifted,
    Zero,
}

/// The predicted Pfaffian of order `2n` and the case that produced it.
pub fn conjecture_prediction(k: u32, n: u32, variant: Variant) -> (Rational, PredictionCase) {
    let (k, n) = (k as i64, n as i64);
    let extra = match variant {
        Variant::I => 0,
        Variant::II => 1,
    };
    if n % k == 0 {
        let m = n / k;
        let mut p = Rational::one();
        for i in 0..m {
            for j in 0..k {
                p *= Rational::from_integer((4 * k * i + 2 * j + k + extra).into());
            }
        }
        return (p, PredictionCase::Divisible);
    }
    let parity_ok = match variant {
        Variant::I => k % 2 == 1,
        Variant::II => k % 2 == 0,
    };
    let h = k / 2;
    if parity_ok && (n + h) % k == 0 {
        let m = (n + h) / k;
        let mut p = Rational::one();
        for j in 1..=h {
            p *= rat(1, 2 * j - k - extra);
        }
        for i in 0..m {
            for j in 1..=k {
                p *= Rational::from_integer((4 * k * i + 2 * j - k - extra).into());
            }
        }
        return (p, PredictionCase::Shifted);
    }
    (Rational::zero(), PredictionCase::Zero)
}

#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureRow {
    pub n: u32,
    #[cfg_attr(
        feature = "serde",
        serde(serialize_with = "crate::serde_impls::rational")
    )]
    pub pfaffian: Rational,
    #[cfg_attr(
        feature = "serde",
        serde(serialize_with = "crate::serde_impls::rational")
    )]
    pub predicted: Rational,
    pub case: PredictionCase,
    pub matches: bool,
    /// `|Pf| = |predicted|`.
    pub matches_up_to_sign: bool,
}

#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub k: u32,
    pub variant: Variant,
    pub n_max: u32,
    pub rows: Vec<ConjectureRow>,
    pub all_match: bool,
    pub all_match_up_to_sign: bool,
}

/// Compares direct Pfaffians with the predicted values for `n = 1..=n_max`.
pub fn check_conjecture(k: u32, n_max: u32, variant: Variant) -> Result<ConjectureReport> {
    if k == 0 {
        return Err(crate::Error::Inconsistent("k must be positive".into()));
    }
    let family = variant.family(k);
    let mut rows = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let pf = pf_eliminate(&family.skew_matrix::<Rational>(2 * n as usize)?);
        let (predicted, case) = conjecture_prediction(k, n, variant);
        let matches = pf == predicted;
        let matches_up_to_sign = matches || pf == -predicted.clone();
        rows.push(ConjectureRow {
            n,
            pfaffian: pf,
            predicted,
            case,
            matches,
            matches_up_to_sign,
        });
    }
    Ok(ConjectureReport {
        k,
        variant,
        n_max,
        all_match: rows.iter().all(|r| r.matches),
        all_match_up_to_sign: rows.iter().all(|r| r.matches_up_to_sign),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn predictions() {
        assert_eq!(
            conjecture_prediction(1, 3, Variant::I),
            (int(45), PredictionCase::Divisible)
        );
        assert_eq!(
            conjecture_prediction(2, 1, Variant::I),
            (int(0), PredictionCase::Zero)
        );
        assert_eq!(
            conjecture_prediction(1, 1, Variant::II),
            (int(2), PredictionCase::Divisible)
        );
        // k = 3, n = 2: m = 1, 1/(2-3) * (2-3)(4-3)(6-3)
        assert_eq!(
            conjecture_prediction(3, 2, Variant::I),
            (int(3), PredictionCase::Shifted)
        );
        // k = 2, n = 1: m = 1, (1/(2-3)) * (2-3)(4-3) = 1
        assert_eq!(
            conjecture_prediction(2, 1, Variant::II),
            (int(1), PredictionCase::Shifted)
        );
    }

    #[test]
    fn k_one_is_motzkin() {
        let rep = check_conjecture(1, 5, Variant::I).unwrap();
        assert!(rep.all_match);
        assert_eq!(rep.rows[2].pfaffian, int(45));
    }
}
