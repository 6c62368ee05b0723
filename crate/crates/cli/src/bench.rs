//! Timing harness: structured closed form versus dense Horner.

use std::io::Write;
use std::time::{Duration, Instant};

use anyhow::{bail, Result};
use clap::Args;
use monomat::oracle::{dense_horner_eval, random_monomial_with, seeded_rng};
use monomat::{eval_monomial, DenseMatrix, MonomialMatrix, Polynomial};
use rand::Rng;

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    /// Matrix orders.
    #[arg(long, value_delimiter = ',', default_values_t = [1usize, 4, 16, 64])]
    pub sizes: Vec<usize>,
    /// Polynomial degrees.
    #[arg(long, value_delimiter = ',', default_values_t = [20usize, 100, 1000])]
    pub degrees: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Worker threads; each (n, m) cell runs on one thread.
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Matrix entries are a/b with 1 ≤ a, b ≤ this bound.
    #[arg(long, default_value_t = 2)]
    pub value_bound: u64,
    /// Polynomial coefficients are integers in [-bound, bound].
    #[arg(long, default_value_t = 9)]
    pub coeff_bound: i64,
    /// Each timing repeats until this much wall time has accumulated.
    #[arg(long, default_value_t = 20)]
    pub min_time_ms: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    /// Seconds per closed-form evaluation.
    pub t_closed_form: f64,
    /// Seconds per dense Horner evaluation.
    pub t_dense: f64,
}

impl BenchRow {
    pub fn speedup(&self) -> f64 {
        self.t_dense / self.t_closed_form
    }
}

/// Degree-`m` polynomial with integer coefficients in `[-bound, bound]` and a nonzero leading term.
pub fn random_polynomial<R: Rng>(rng: &mut R, m: usize, bound: i64) -> Polynomial {
    let mut c: Vec<i64> = (0..m).map(|_| rng.random_range(-bound..=bound)).collect();
    let lead = loop {
        let v = rng.random_range(-bound..=bound);
        if v != 0 {
            break v;
        }
    };
    c.push(lead);
    Polynomial::from_i64(&c)
}

/// Deterministic instance for cell `(n, m)`.
pub fn instance(args: &BenchArgs, n: usize, m: usize) -> (Polynomial, MonomialMatrix) {
    let cell = (n as u64) << 32 | m as u64;
    let mut rng = seeded_rng(args.seed ^ cell.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let a = random_monomial_with(&mut rng, n, args.value_bound.max(1));
    let p = random_polynomial(&mut rng, m, args.coeff_bound.max(1));
    (p, a)
}

fn timed<T>(min: Duration, mut f: impl FnMut() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    let mut runs = 1u32;
    while start.elapsed() < min {
        std::hint::black_box(f());
        runs += 1;
    }
    (out, start.elapsed().as_secs_f64() / f64::from(runs))
}

/// Runs one cell; fails if the two methods disagree anywhere.
pub fn run_cell(args: &BenchArgs, n: usize, m: usize) -> Result<BenchRow> {
    let (p, a) = instance(args, n, m);
    let dense_a = a.to_dense();
    let min = Duration::from_millis(args.min_time_ms);
    let (closed, t_closed_form) = timed(min, || eval_monomial(&p, &a));
    let (dense, t_dense) = timed(min, || dense_horner_eval(&p, &dense_a));
    let dense: DenseMatrix = dense?;
    let diffs = closed.discrepancies(&dense);
    if !diffs.is_empty() {
        bail!(
            "n={n} m={m}: {} entries differ between closed form and dense Horner",
            diffs.len()
        );
    }
    Ok(BenchRow {
        n,
        m,
        t_closed_form,
        t_dense,
    })
}

pub fn run(args: &BenchArgs) -> Result<Vec<BenchRow>> {
    if args.sizes.contains(&0) {
        bail!("matrix order must be at least 1");
    }
    let cells: Vec<(usize, usize)> = args
        .sizes
        .iter()
        .flat_map(|&n| args.degrees.iter().map(move |&m| (n, m)))
        .collect();
    let threads = args.threads.clamp(1, cells.len().max(1));
    let mut slots: Vec<Option<Result<BenchRow>>> = (0..cells.len()).map(|_| None).collect();
    std::thread::scope(|s| {
        let chunks = slots.chunks_mut(cells.len().div_ceil(threads).max(1));
        let mut offset = 0;
        for chunk in chunks {
            let start = offset;
            offset += chunk.len();
            let cells = &cells;
            s.spawn(move || {
                for (slot, &(n, m)) in chunk.iter_mut().zip(&cells[start..]) {
                    *slot = Some(run_cell(args, n, m));
                }
            });
        }
    });
    slots
        .into_iter()
        .map(|r| r.expect("every cell ran"))
        .collect()
}

pub fn write_csv(rows: &[BenchRow], out: &mut impl Write) -> std::io::Result<()> {
    writeln!(out, "n,m,t_closed_form,t_dense,speedup")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{:.9},{:.9},{:.2}",
            r.n,
            r.m,
            r.t_closed_form,
            r.t_dense,
            r.speedup()
        )?;
    }
    Ok(())
}
