//! JSON front end for the browser demo.
//!
//! The functions here take plain strings and return JSON, so they run and are
//! tested natively; the `wasm_bindgen` exports are thin wrappers around them.

use monomat::io::{read_monomial, write_dense, MatrixFormat};
use monomat::oracle::dense_horner_eval;
use monomat::{counterexample, in_pn_mon, DenseMatrix, Polynomial, Rational, StructuredEval};
use num_traits::ToPrimitive;
use serde::Serialize;

/// Largest matrix order or modulus the page accepts.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Serialize)]
pub struct Cell {
    /// Exact value.
    pub value: String,
    /// Nearest `f64`, `null` when out of range.
    pub approx: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct Block {
    pub values: Vec<String>,
    pub alpha: String,
    pub coefficients: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct Evaluation {
    pub n: usize,
    pub polynomial: String,
    pub matrix: Vec<Vec<Cell>>,
    pub gamma: Vec<usize>,
    pub blocks: Vec<Block>,
    /// Closed form equals dense Horner entrywise.
    pub oracle_agrees: bool,
    pub nonnegative: bool,
}

#[derive(Debug, Serialize)]
pub struct Part {
    pub r: usize,
    pub polynomial: String,
}

#[derive(Debug, Serialize)]
pub struct Parts {
    pub n: usize,
    pub parts: Vec<Part>,
    pub sum_matches: bool,
}

#[derive(Debug, Serialize)]
pub struct FailureView {
    pub k: usize,
    pub r: usize,
    pub part: String,
    pub witness: String,
    pub value: String,
}

#[derive(Debug, Serialize)]
pub struct CounterexampleView {
    pub k: usize,
    pub r: usize,
    /// Dense text form of the witness matrix.
    pub matrix: String,
    /// `p` applied to the witness matrix.
    pub image: Vec<Vec<Cell>>,
    /// 1-indexed position of the negative entry.
    pub row: usize,
    pub col: usize,
    pub value: String,
}

#[derive(Debug, Serialize)]
pub struct Check {
    pub n: usize,
    pub polynomial: String,
    pub verdict: bool,
    pub failures: Vec<FailureView>,
    pub counterexample: Option<CounterexampleView>,
}

fn cell(v: &Rational) -> Cell {
    Cell {
        value: v.to_string(),
        approx: v.to_f64().filter(|x| x.is_finite()),
    }
}

fn cells(m: &DenseMatrix) -> Vec<Vec<Cell>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| cell(&m[(i, j)])).collect())
        .collect()
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn parse_poly(text: &str) -> Result<Polynomial, String> {
    text.parse().map_err(|e| format!("polynomial: {e}"))
}

fn check_order(n: usize) -> Result<(), String> {
    if (1..=MAX_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(format!("order must be between 1 and {MAX_ORDER}"))
    }
}

/// `p(A)` with its block structure; `matrix` is dense text or structured JSON.
pub fn evaluate(poly: &str, matrix: &str) -> Result<Evaluation, String> {
    let p = parse_poly(poly)?;
    let a = read_monomial(matrix, MatrixFormat::Auto).map_err(|e| format!("matrix: {e}"))?;
    check_order(a.order())?;
    let s = StructuredEval::new(&p, &a);
    let dense = s.to_dense();
    let oracle = dense_horner_eval(&p, &a.to_dense()).map_err(|e| e.to_string())?;
    Ok(Evaluation {
        n: a.order(),
        polynomial: p.to_string(),
        matrix: cells(&dense),
        gamma: s.form.gamma.images(),
        blocks: s
            .form
            .blocks
            .iter()
            .zip(&s.coefficients)
            .map(|(y, c)| Block {
                values: strings(y),
                alpha: monomat::monomial::alpha(y).to_string(),
                coefficients: strings(&c.c),
            })
            .collect(),
        oracle_agrees: dense == oracle,
        nonnegative: dense.is_nonnegative(),
    })
}

/// The `r mod n` parts of `p`.
pub fn parts(poly: &str, n: usize) -> Result<Parts, String> {
    let p = parse_poly(poly)?;
    check_order(n)?;
    let parts = p.parts(n).map_err(|e| e.to_string())?;
    let sum = parts.iter().fold(Polynomial::zero(), |acc, q| &acc + q);
    Ok(Parts {
        n,
        sum_matches: sum == p,
        parts: parts
            .iter()
            .enumerate()
            .map(|(r, q)| Part {
                r,
                polynomial: q.to_string(),
            })
            .collect(),
    })
}

/// Membership report with a counterexample for the preferred failure.
pub fn check(poly: &str, n: usize) -> Result<Check, String> {
    let p = parse_poly(poly)?;
    check_order(n)?;
    let report = in_pn_mon(&p, n).map_err(|e| e.to_string())?;
    let counterexample = match report.preferred_failure() {
        Some(f) => {
            let c = counterexample(&p, f).map_err(|e| e.to_string())?;
            let image = monomat::eval_monomial(&p, &c.matrix);
            Some(CounterexampleView {
                k: f.k,
                r: f.r,
                matrix: write_dense(&c.matrix.to_dense()),
                image: cells(&image),
                row: c.position.0,
                col: c.position.1,
                value: c.value.to_string(),
            })
        }
        None => None,
    };
    Ok(Check {
        n,
        polynomial: p.to_string(),
        verdict: report.verdict,
        failures: report
            .failures
            .iter()
            .map(|f| FailureView {
                k: f.k,
                r: f.r,
                part: f.part.to_string(),
                witness: f.witness.to_string(),
                value: f.part.eval(&f.witness).to_string(),
            })
            .collect(),
        counterexample,
    })
}

fn to_json<T: Serialize>(result: Result<T, String>) -> Result<String, String> {
    result.and_then(|v| serde_json::to_string(&v).map_err(|e| e.to_string()))
}

/// [`evaluate`] serialized to JSON.
pub fn evaluate_json(poly: &str, matrix: &str) -> Result<String, String> {
    to_json(evaluate(poly, matrix))
}

/// [`parts`] serialized to JSON.
pub fn parts_json(poly: &str, n: usize) -> Result<String, String> {
    to_json(parts(poly, n))
}

/// [`check`] serialized to JSON.
pub fn check_json(poly: &str, n: usize) -> Result<String, String> {
    to_json(check(poly, n))
}

#[cfg(target_arch = "wasm32")]
mod bindings {
    use wasm_bindgen::prelude::*;

    fn js(r: Result<String, String>) -> Result<String, JsValue> {
        r.map_err(|e| JsValue::from_str(&e))
    }

    #[wasm_bindgen]
    pub fn evaluate(poly: &str, matrix: &str) -> Result<String, JsValue> {
        js(super::evaluate_json(poly, matrix))
    }

    #[wasm_bindgen]
    pub fn parts(poly: &str, n: usize) -> Result<String, JsValue> {
        js(super::parts_json(poly, n))
    }

    #[wasm_bindgen]
    pub fn check(poly: &str, n: usize) -> Result<String, JsValue> {
        js(super::check_json(poly, n))
    }
}
