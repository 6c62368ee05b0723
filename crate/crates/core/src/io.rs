//! Text formats for matrices.
//!
//! Dense: the first line holds the order `n`, followed by `n` lines of `n`
//! whitespace-separated rationals (`p/q` or integers). Blank lines and lines
//! starting with `#` are skipped.
//!
//! Structured: a single JSON object `{"n": 4, "perm": [2, 3, 4, 1], "values":
//! ["3", "5", "2", "1"]}` with 1-indexed images and rationals as strings
//! (plain JSON integers are accepted too).
//!
//! [`MatrixFormat::Auto`] picks structured when the first non-blank character is `{`.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::monomial::MonomialMatrix;
use crate::permutation::Permutation;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MatrixFormat {
    #[default]
    Auto,
    Dense,
    Structured,
}

impl FromStr for MatrixFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "auto" => Ok(Self::Auto),
            "dense" => Ok(Self::Dense),
            "structured" => Ok(Self::Structured),
            other => Err(format!("unknown matrix format {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum Scalar {
    Text(String),
    Int(i64),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Record {
    n: usize,
    perm: Vec<usize>,
    values: Vec<Scalar>,
}

fn detect(text: &str) -> MatrixFormat {
    if text.trim_start().starts_with('{') {
        MatrixFormat::Structured
    } else {
        MatrixFormat::Dense
    }
}

/// Reads a dense matrix; structured input is densified.
pub fn read_dense(text: &str, format: MatrixFormat) -> Result<DenseMatrix> {
    let format = match format {
        MatrixFormat::Auto => detect(text),
        f => f,
    };
    match format {
        MatrixFormat::Structured => Ok(read_structured(text)?.to_dense()),
        _ => parse_dense(text),
    }
}

/// Reads a monomial matrix in either format.
pub fn read_monomial(text: &str, format: MatrixFormat) -> Result<MonomialMatrix> {
    let format = match format {
        MatrixFormat::Auto => detect(text),
        f => f,
    };
    match format {
        MatrixFormat::Structured => read_structured(text),
        _ => MonomialMatrix::from_dense(&parse_dense(text)?),
    }
}

fn parse_dense(text: &str) -> Result<DenseMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, header) = lines.next().ok_or(Error::Format {
        line: 1,
        message: "empty input".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::Format {
        line,
        message: format!("expected the matrix order, found {header:?}"),
    })?;
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let mut rows = Vec::with_capacity(n);
    for (line, l) in lines {
        if rows.len() == n {
            return Err(Error::Format {
                line,
                message: format!("more than {n} rows"),
            });
        }
        let row = l
            .split_whitespace()
            .map(|tok| {
                rational::parse(tok).map_err(|_| Error::Format {
                    line,
                    message: format!("invalid rational {tok:?}"),
                })
            })
            .collect::<Result<Vec<Rational>>>()?;
        if row.len() != n {
            return Err(Error::Format {
                line,
                message: format!("expected {n} entries, found {}", row.len()),
            });
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(Error::Format {
            line: text.lines().count(),
            message: format!("expected {n} rows, found {}", rows.len()),
        });
    }
    DenseMatrix::from_rows(rows)
}

fn read_structured(text: &str) -> Result<MonomialMatrix> {
    let record: Record = serde_json::from_str(text).map_err(|e| Error::Format {
        line: e.line(),
        message: e.to_string(),
    })?;
    if record.perm.len() != record.n || record.values.len() != record.n {
        return Err(Error::Format {
            line: 1,
            message: format!(
                "n = {} but perm has {} and values {} entries",
                record.n,
                record.perm.len(),
                record.values.len()
            ),
        });
    }
    let values = record
        .values
        .iter()
        .map(|v| match v {
            Scalar::Text(s) => rational::parse(s),
            Scalar::Int(i) => Ok(rational::int(*i)),
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialMatrix::new(values, Permutation::new(&record.perm)?)
}

pub fn write_dense(m: &DenseMatrix) -> String {
    m.to_string()
}

pub fn write_structured(m: &MonomialMatrix) -> String {
    let record = Record {
        n: m.order(),
        perm: m.perm().images(),
        values: m
            .values()
            .iter()
            .map(|v| Scalar::Text(v.to_string()))
            .collect(),
    };
    let mut s = serde_json::to_string(&record).expect("plain record");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    const A4: &str = "4\n0 3 0 0\n0 0 5 0\n0 0 0 2\n1 0 0 0\n";

    #[test]
    fn dense_round_trip() {
        let m = read_dense(A4, MatrixFormat::Auto).unwrap();
        assert_eq!(write_dense(&m), A4);
        let a = read_monomial(A4, MatrixFormat::Auto).unwrap();
        assert_eq!(
            a,
            MonomialMatrix::k_of(&[int(3), int(5), int(2), int(1)]).unwrap()
        );
    }

    #[test]
    fn structured_round_trip() {
        let a = MonomialMatrix::new(
            vec![ratio(-3, 2), int(5), ratio(1, 7)],
            Permutation::new(&[3, 1, 2]).unwrap(),
        )
        .unwrap();
        let text = write_structured(&a);
        assert_eq!(
            text,
            "{\"n\":3,\"perm\":[3,1,2],\"values\":[\"-3/2\",\"5\",\"1/7\"]}\n"
        );
        assert_eq!(read_monomial(&text, MatrixFormat::Auto).unwrap(), a);
        let ints = r#"{"n": 2, "perm": [2, 1], "values": [4, "1/2"]}"#;
        let b = read_monomial(ints, MatrixFormat::Auto).unwrap();
        assert_eq!(b.values(), &[int(4), ratio(1, 2)]);
    }

    #[test]
    fn comments_and_fractions() {
        let text = "# a 2x2\n2\n\n1/2 0\n0 -3\n";
        let m = read_dense(text, MatrixFormat::Dense).unwrap();
        assert_eq!(m[(0, 0)], ratio(1, 2));
        assert_eq!(m[(1, 1)], int(-3));
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            read_dense("2\n1 0\n", MatrixFormat::Auto),
            Err(Error::Format { .. })
        ));
        assert!(matches!(
            read_dense("2\n1 0 0\n0 1\n", MatrixFormat::Auto),
            Err(Error::Format { line: 2, .. })
        ));
        assert!(matches!(
            read_dense("2\n1 x\n0 1\n", MatrixFormat::Auto),
            Err(Error::Format { line: 2, .. })
        ));
        assert!(matches!(
            read_monomial("2\n1 1\n0 1\n", MatrixFormat::Auto),
            Err(Error::NotMonomial { row: 1, .. })
        ));
        assert!(matches!(
            read_monomial(
                r#"{"n": 2, "perm": [1, 1], "values": [1, 1]}"#,
                MatrixFormat::Auto
            ),
            Err(Error::InvalidPermutation { .. })
        ));
        assert!(matches!(
            read_monomial(
                r#"{"n": 2, "perm": [1, 2], "values": [1, 0]}"#,
                MatrixFormat::Auto
            ),
            Err(Error::ZeroEntry { index: 2 })
        ));
        assert!(read_monomial("{not json", MatrixFormat::Auto).is_err());
        assert!("csv".parse::<MatrixFormat>().is_err());
    }
}
