//! On-disk formats: skew matrices, guessing data and shift supports.
//!
//! Matrices are `{"dim": 4, "upper": [[1, 2, "x+1"], ...]}` with one-based
//! indices and entries in polynomial text; unlisted entries are zero. A
//! dense array of rows is also accepted on input.
//!
//! Guessing data is either a plain list of numbers (read as `f(0), f(1),
//! ...`), `{"start": s, "values": [...]}` or, for tables,
//! `{"n_min": 1, "zero_padded": true, "rows": [{"start": i0, "values": [...]}, ...]}`.

use holopf_core::arith::parse_rational;
use holopf_core::guess::{Sequence, Support, Table2};
use holopf_core::{Polynomial, Rational, SkewMatrix};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    dim: usize,
    upper: Vec<(usize, usize, Value)>,
}

fn entry_text(v: &Value) -> Result<String, CliError> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        _ => Err(CliError::Usage(format!(
            "matrix entry {v} is neither a string nor a number"
        ))),
    }
}

fn poly(v: &Value) -> Result<Polynomial, CliError> {
    Ok(Polynomial::parse(&entry_text(v)?)?)
}

pub fn parse_matrix(text: &str) -> Result<SkewMatrix<Polynomial>, CliError> {
    let value: Value = serde_json::from_str(text)?;
    if let Value::Array(rows) = &value {
        let dense = rows
            .iter()
            .map(|r| match r {
                Value::Array(cells) => cells.iter().map(poly).collect::<Result<Vec<_>, _>>(),
                _ => Err(CliError::Usage("dense matrix rows must be arrays".into())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(SkewMatrix::from_dense(
            &holopf_core::ExactMatrix::from_rows(dense)?,
        )?);
    }
    let repr: MatrixRepr = serde_json::from_value(value)?;
    let mut m = SkewMatrix::from_fn(repr.dim, |_, _| Polynomial::zero())?;
    for (i, j, v) in &repr.upper {
        if *i == 0 || *j == 0 || *i > repr.dim || *j > repr.dim || i == j {
            return Err(CliError::Usage(format!(
                "entry ({i}, {j}) lies outside the strict triangle of a {0}x{0} matrix",
                repr.dim
            )));
        }
        let p = poly(v)?;
        if i < j {
            m.set(*i, *j, p);
        } else {
            m.set(*j, *i, -p);
        }
    }
    Ok(m)
}

pub fn matrix_json(m: &SkewMatrix<Polynomial>) -> Value {
    let mut upper = Vec::new();
    for i in 1..=m.dim() {
        for j in i + 1..=m.dim() {
            let p = m.upper(i, j);
            if !p.is_zero() {
                upper.push((i, j, Value::String(p.to_string())));
            }
        }
    }
    serde_json::to_value(MatrixRepr {
        dim: m.dim(),
        upper,
    })
    .expect("plain data serializes")
}

/// Data read for guessing.
#[derive(Clone, Debug, PartialEq)]
pub enum GuessData {
    Sequence(Sequence),
    Table(Table2),
}

fn number(v: &Value) -> Result<Rational, CliError> {
    Ok(parse_rational(&entry_text(v)?)?)
}

fn numbers(v: &Value) -> Result<Vec<Rational>, CliError> {
    match v {
        Value::Array(xs) => xs.iter().map(number).collect(),
        _ => Err(CliError::Usage("expected an array of values".into())),
    }
}

fn int_field(
    obj: &serde_json::Map<String, Value>,
    key: &str,
    default: i64,
) -> Result<i64, CliError> {
    match obj.get(key) {
        None => Ok(default),
        Some(v) => v
            .as_i64()
            .ok_or_else(|| CliError::Usage(format!("\"{key}\" must be an integer"))),
    }
}

pub fn parse_guess_data(text: &str) -> Result<GuessData, CliError> {
    let trimmed = text.trim_start();
    if !trimmed.starts_with('{') && !trimmed.starts_with('[') {
        let values = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| parse_rational(t).map_err(CliError::from))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(GuessData::Sequence(Sequence::new(0, values)));
    }
    let value: Value = serde_json::from_str(text)?;
    match &value {
        Value::Array(_) => Ok(GuessData::Sequence(Sequence::new(0, numbers(&value)?))),
        Value::Object(obj) if obj.contains_key("rows") => {
            let n_min = int_field(obj, "n_min", 0)?;
            let zero_padded = obj
                .get("zero_padded")
                .and_then(Value::as_bool)
                .unwrap_or(false);
            let rows = match &obj["rows"] {
                Value::Array(rows) => rows
                    .iter()
                    .map(|r| match r {
                        Value::Object(ro) => Ok((
                            int_field(ro, "start", 0)?,
                            numbers(ro.get("values").unwrap_or(&Value::Null))?,
                        )),
                        _ => Err(CliError::Usage("table rows must be objects".into())),
                    })
                    .collect::<Result<Vec<_>, _>>()?,
                _ => return Err(CliError::Usage("\"rows\" must be an array".into())),
            };
            Ok(GuessData::Table(Table2::new(n_min, rows, zero_padded)))
        }
        Value::Object(obj) => {
            let start = int_field(obj, "start", 0)?;
            Ok(GuessData::Sequence(Sequence::new(
                start,
                numbers(obj.get("values").unwrap_or(&Value::Null))?,
            )))
        }
        _ => Err(CliError::Usage("unrecognized data file".into())),
    }
}

/// `"0,0; -1,0; -1,1"` lists shifts explicitly; `"rect:1,2"` is the box
/// `[0,1] x [0,2]`.
pub fn parse_support(text: &str, arity: usize) -> Result<Support, CliError> {
    let ints = |s: &str| -> Result<Vec<i64>, CliError> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| CliError::Usage(format!("bad shift component {t:?}")))
            })
            .collect()
    };
    if let Some(rest) = text.trim().strip_prefix("rect:") {
        let dims = ints(rest)?;
        if dims.len() != arity || dims.iter().any(|&d| d < 0) {
            return Err(CliError::Usage(format!(
                "rectangle {rest:?} must list {arity} nonnegative bounds"
            )));
        }
        return Ok(Support::Rectangle(
            dims.into_iter().map(|d| d as u32).collect(),
        ));
    }
    let shifts = text
        .split(';')
        .filter(|s| !s.trim().is_empty())
        .map(ints)
        .collect::<Result<Vec<_>, _>>()?;
    if shifts.is_empty() || shifts.iter().any(|s| s.len() != arity) {
        return Err(CliError::Usage(format!(
            "support {text:?} must list shifts with {arity} components"
        )));
    }
    Ok(Support::Explicit(shifts))
}

fn rational_strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn guess_data_json(data: &GuessData) -> Value {
    match data {
        GuessData::Sequence(s) => {
            serde_json::json!({ "start": s.start(), "values": rational_strings(s.values()) })
        }
        GuessData::Table(t) => {
            let rows: Vec<Value> = (t.n_min()..=t.n_max())
                .map(|n| {
                    let (start, vals) = t.row(n).expect("row in range");
                    serde_json::json!({ "start": start, "values": rational_strings(vals) })
                })
                .collect();
            serde_json::json!({ "n_min": t.n_min(), "zero_padded": t.is_zero_padded(), "rows": rows })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_and_sparse_agree() {
        let a = parse_matrix("[[0, 7], [-7, 0]]").unwrap();
        let b = parse_matrix(r#"{"dim": 2, "upper": [[1, 2, "7"]]}"#).unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_matrix(&matrix_json(&a).to_string()).unwrap(), a);
    }

    #[test]
    fn lower_entries_flip_sign() {
        let a = parse_matrix(r#"{"dim": 2, "upper": [[2, 1, "x"]]}"#).unwrap();
        assert_eq!(a.upper(1, 2).to_string(), "-x");
    }

    #[test]
    fn rejects_bad_matrices() {
        assert!(parse_matrix("[[0, 1], [1, 0]]").is_err());
        assert!(parse_matrix(r#"{"dim": 3, "upper": []}"#).is_err());
        assert!(parse_matrix(r#"{"dim": 2, "upper": [[1, 3, "1"]]}"#).is_err());
    }

    #[test]
    fn data_files() {
        let GuessData::Sequence(s) = parse_guess_data("1 1 2\n4 9").unwrap() else {
            panic!()
        };
        assert_eq!(s.len(), 5);
        let GuessData::Sequence(s) =
            parse_guess_data(r#"{"start": 3, "values": ["1/2", 3]}"#).unwrap()
        else {
            panic!()
        };
        assert_eq!((s.start(), s.end()), (3, 4));
        let t =
            parse_guess_data(r#"{"n_min": 1, "rows": [{"start": 0, "values": [1, 2]}]}"#).unwrap();
        assert!(matches!(t, GuessData::Table(_)));
        assert_eq!(
            parse_guess_data(&guess_data_json(&t).to_string()).unwrap(),
            t
        );
    }

    #[test]
    fn supports() {
        assert_eq!(
            parse_support("0,0; -1,1", 2).unwrap(),
            Support::Explicit(vec![vec![0, 0], vec![-1, 1]])
        );
        assert_eq!(
            parse_support("rect:1,2", 2).unwrap(),
            Support::Rectangle(vec![1, 2])
        );
        assert!(parse_support("0,0,1", 2).is_err());
    }
}
