use std::fs;
use std::io::{Read, Write};
use std::path::Path;

use anyhow::{Context, Result};
use monomat::io::{self, MatrixFormat};
use monomat::oracle::{dense_horner_eval, dense_power};
use monomat::{
    counterexample, in_pn_mon, DenseMatrix, MembershipReport, MonomialMatrix, Polynomial,
    StructuredEval,
};
use serde::Serialize;

use crate::{
    CheckArgs, Command, EvalArgs, EvalOutput, InputFormat, MatrixSource, PartsArgs, PowerArgs,
    PowerOutput, Via,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    /// False verdict or a reported discrepancy.
    Negative,
}

pub fn run(command: &Command, out: &mut impl Write) -> Result<Outcome> {
    match command {
        Command::Eval(args) => eval(args, out),
        Command::Power(args) => power(args, out),
        Command::Parts(args) => parts(args, out),
        Command::Check(args) => check(args, out),
        Command::Bench(args) => {
            let rows = crate::bench::run(args)?;
            crate::bench::write_csv(&rows, out)?;
            Ok(Outcome::Success)
        }
    }
}

fn parse_poly(text: &str) -> Result<Polynomial> {
    text.parse()
        .with_context(|| format!("cannot parse polynomial {text:?}"))
}

fn read_source(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
    }
}

fn load_matrix(src: &MatrixSource) -> Result<MonomialMatrix> {
    let format = match src.format {
        InputFormat::Auto => MatrixFormat::Auto,
        InputFormat::Dense => MatrixFormat::Dense,
        InputFormat::Structured => MatrixFormat::Structured,
    };
    let text = read_source(&src.path)?;
    io::read_monomial(&text, format).with_context(|| format!("in {}", src.path.display()))
}

/// Prints both results and their differing entries (1-indexed); returns the count.
fn write_diff(out: &mut impl Write, closed: &DenseMatrix, oracle: &DenseMatrix) -> Result<usize> {
    writeln!(out, "# closed form")?;
    write!(out, "{closed}")?;
    writeln!(out, "# dense oracle")?;
    write!(out, "{oracle}")?;
    let diffs = closed.discrepancies(oracle);
    writeln!(out, "# discrepancies: {}", diffs.len())?;
    for (i, j, a, b) in &diffs {
        writeln!(out, "# ({}, {}): closed {a} oracle {b}", i + 1, j + 1)?;
    }
    Ok(diffs.len())
}

#[derive(Serialize)]
struct BlockJson {
    size: usize,
    values: Vec<String>,
    alpha: String,
    coefficients: Vec<String>,
}

#[derive(Serialize)]
struct BlocksJson {
    n: usize,
    gamma: Vec<usize>,
    blocks: Vec<BlockJson>,
}

fn blocks_json(s: &StructuredEval) -> BlocksJson {
    let strings = |v: &[monomat::Rational]| v.iter().map(ToString::to_string).collect();
    BlocksJson {
        n: s.form.order(),
        gamma: s.form.gamma.images(),
        blocks: s
            .form
            .blocks
            .iter()
            .zip(&s.coefficients)
            .map(|(y, c)| BlockJson {
                size: y.len(),
                values: strings(y),
                alpha: monomat::monomial::alpha(y).to_string(),
                coefficients: strings(&c.c),
            })
            .collect(),
    }
}

fn eval(args: &EvalArgs, out: &mut impl Write) -> Result<Outcome> {
    let p = parse_poly(&args.poly)?;
    let a = load_matrix(&args.matrix)?;
    if args.diff {
        let closed = monomat::eval_monomial(&p, &a);
        let oracle = dense_horner_eval(&p, &a.to_dense())?;
        let n = write_diff(out, &closed, &oracle)?;
        return Ok(if n == 0 {
            Outcome::Success
        } else {
            Outcome::Negative
        });
    }
    match (args.via, args.output) {
        (Via::Closed, EvalOutput::Blocks) => {
            let s = StructuredEval::new(&p, &a);
            serde_json::to_writer_pretty(&mut *out, &blocks_json(&s))?;
            writeln!(out)?;
        }
        (Via::Closed, EvalOutput::Dense) => write!(out, "{}", monomat::eval_monomial(&p, &a))?,
        (Via::Oracle, EvalOutput::Dense) => {
            write!(out, "{}", dense_horner_eval(&p, &a.to_dense())?)?
        }
        (Via::Oracle, EvalOutput::Blocks) => {
            anyhow::bail!("--output blocks is only available for the closed form")
        }
    }
    Ok(Outcome::Success)
}

fn power(args: &PowerArgs, out: &mut impl Write) -> Result<Outcome> {
    let a = load_matrix(&args.matrix)?;
    if args.diff {
        let closed = a.power(args.j).to_dense();
        let oracle = dense_power(&a.to_dense(), args.j)?;
        let n = write_diff(out, &closed, &oracle)?;
        return Ok(if n == 0 {
            Outcome::Success
        } else {
            Outcome::Negative
        });
    }
    match (args.via, args.output) {
        (Via::Closed, PowerOutput::Dense) => write!(out, "{}", a.power(args.j).to_dense())?,
        (Via::Closed, PowerOutput::Structured) => {
            write!(out, "{}", io::write_structured(&a.power(args.j)))?
        }
        (Via::Oracle, PowerOutput::Dense) => {
            write!(out, "{}", dense_power(&a.to_dense(), args.j)?)?
        }
        (Via::Oracle, PowerOutput::Structured) => {
            let dense = dense_power(&a.to_dense(), args.j)?;
            write!(
                out,
                "{}",
                io::write_structured(&MonomialMatrix::from_dense(&dense)?)
            )?
        }
    }
    Ok(Outcome::Success)
}

fn parts(args: &PartsArgs, out: &mut impl Write) -> Result<Outcome> {
    let p = parse_poly(&args.poly)?;
    let parts = p.parts(args.n)?;
    for (r, part) in parts.iter().enumerate() {
        writeln!(out, "p_({r},{})(t) = {part}", args.n)?;
    }
    let sum = p.parts_sum(args.n)?;
    if sum == p {
        writeln!(out, "# sum of parts reproduces p")?;
        Ok(Outcome::Success)
    } else {
        writeln!(out, "# sum of parts differs from p: {sum}")?;
        Ok(Outcome::Negative)
    }
}

#[derive(Serialize)]
struct FailureJson {
    k: usize,
    r: usize,
    part: String,
    witness: String,
    part_at_witness: String,
}

#[derive(Serialize)]
struct CounterexampleJson {
    k: usize,
    r: usize,
    matrix: String,
    row: usize,
    col: usize,
    value: String,
}

#[derive(Serialize)]
struct ReportJson {
    polynomial: String,
    n: usize,
    verdict: bool,
    failures: Vec<FailureJson>,
    counterexample: Option<CounterexampleJson>,
}

fn check(args: &CheckArgs, out: &mut impl Write) -> Result<Outcome> {
    let p = parse_poly(&args.poly)?;
    let report: MembershipReport = in_pn_mon(&p, args.n)?;
    let witness = match report.preferred_failure() {
        Some(f) => Some((f, counterexample(&p, f)?)),
        None => None,
    };
    if let (Some(path), Some((_, c))) = (&args.witness_matrix, &witness) {
        fs::write(path, io::write_dense(&c.matrix.to_dense()))
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    if args.json {
        let json = ReportJson {
            polynomial: p.to_string(),
            n: report.n,
            verdict: report.verdict,
            failures: report
                .failures
                .iter()
                .map(|f| FailureJson {
                    k: f.k,
                    r: f.r,
                    part: f.part.to_string(),
                    witness: f.witness.to_string(),
                    part_at_witness: f.part.eval(&f.witness).to_string(),
                })
                .collect(),
            counterexample: witness.as_ref().map(|(f, c)| CounterexampleJson {
                k: f.k,
                r: f.r,
                matrix: io::write_structured(&c.matrix).trim_end().to_string(),
                row: c.position.0,
                col: c.position.1,
                value: c.value.to_string(),
            }),
        };
        serde_json::to_writer_pretty(&mut *out, &json)?;
        writeln!(out)?;
    } else {
        writeln!(out, "verdict: {} (n = {})", report.verdict, report.n)?;
        for f in &report.failures {
            writeln!(
                out,
                "failure: k={} r={} t0={} part={} value={}",
                f.k,
                f.r,
                f.witness,
                f.part,
                f.part.eval(&f.witness)
            )?;
        }
        if let Some((f, c)) = &witness {
            let (i, j) = c.position;
            writeln!(
                out,
                "counterexample: k={} r={} p(A)[{i},{j}] = {}",
                f.k, f.r, c.value
            )?;
            if let Some(path) = &args.witness_matrix {
                writeln!(out, "counterexample matrix written to {}", path.display())?;
            }
        }
    }
    Ok(if report.verdict {
        Outcome::Success
    } else {
        Outcome::Negative
    })
}
