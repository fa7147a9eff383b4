//! Text-based serde representations: polynomials and rationals as strings,
//! operators as `{"vars": [...], "terms": [{"shift": [...], "coeff": "..."}]}`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{Polynomial, Rational};
use crate::guess::RecurrenceOperator;

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        Polynomial::parse(&text).map_err(D::Error::custom)
    }
}

pub(crate) fn rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(r)
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    shift: Vec<i64>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct OperatorRepr {
    vars: Vec<String>,
    terms: Vec<TermRepr>,
}

impl Serialize for RecurrenceOperator {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        OperatorRepr {
            vars: self.vars().to_vec(),
            terms: self
                .terms()
                .iter()
                .map(|(shift, c)| TermRepr {
                    shift: shift.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RecurrenceOperator {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = OperatorRepr::deserialize(d)?;
        let terms = repr
            .terms
            .into_iter()
            .map(|t| {
                Ok((
                    t.shift,
                    Polynomial::parse_in(&t.coeff, &repr.vars).map_err(D::Error::custom)?,
                ))
            })
            .collect::<Result<Vec<_>, D::Error>>()?;
        RecurrenceOperator::new(repr.vars, terms).map_err(D::Error::custom)
    }
}
