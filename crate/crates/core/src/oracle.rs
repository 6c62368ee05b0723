//! Naive dense reference implementations.
//!
//! Nothing here uses monomial structure: products are the textbook triple loop,
//! powers are repeated multiplication and polynomial evaluation is matrix Horner.
//! Structured fast paths elsewhere in the crate are tested against these.
//!
//! Random instances are drawn from [`ChaCha8Rng`] seeded with
//! [`SeedableRng::seed_from_u64`]; a permutation is a Fisher–Yates shuffle of
//! `1..=n` (for `i` from `n-1` down to `1`, swap slot `i` with a uniform slot in
//! `0..=i`), and a positive value is `a/b` with `a`, `b` uniform in `1..=bound`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::monomial::MonomialMatrix;
use crate::permutation::Permutation;
use crate::polynomial::Polynomial;
use crate::rational::Rational;

pub fn dense_multiply(a: &DenseMatrix, b: &DenseMatrix) -> Result<DenseMatrix> {
    if a.cols() != b.rows() {
        return Err(Error::DimensionMismatch {
            left_rows: a.rows(),
            left_cols: a.cols(),
            right_rows: b.rows(),
            right_cols: b.cols(),
        });
    }
    let mut c = DenseMatrix::zeros(a.rows(), b.cols());
    for i in 0..a.rows() {
        for k in 0..a.cols() {
            let aik = &a[(i, k)];
            if aik.is_zero() {
                continue;
            }
            for j in 0..b.cols() {
                let bkj = &b[(k, j)];
                if !bkj.is_zero() {
                    c[(i, j)] += aik * bkj;
                }
            }
        }
    }
    Ok(c)
}

fn require_square(a: &DenseMatrix) -> Result<()> {
    if a.is_square() {
        Ok(())
    } else {
        Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        })
    }
}

/// `A^j` by `j` successive multiplications.
pub fn dense_power(a: &DenseMatrix, j: u64) -> Result<DenseMatrix> {
    require_square(a)?;
    let mut acc = DenseMatrix::identity(a.rows());
    for _ in 0..j {
        acc = dense_multiply(&acc, a)?;
    }
    Ok(acc)
}

/// `(…((a_m A + a_{m-1} I) A + a_{m-2} I) …) A + a_0 I`.
pub fn dense_horner_eval(p: &Polynomial, a: &DenseMatrix) -> Result<DenseMatrix> {
    require_square(a)?;
    let n = a.rows();
    let mut acc = DenseMatrix::zeros(n, n);
    for (k, ak) in p.coeffs().iter().enumerate().rev() {
        if k + 1 < p.coeffs().len() {
            acc = dense_multiply(&acc, a)?;
        }
        if !ak.is_zero() {
            for i in 0..n {
                acc[(i, i)] += ak;
            }
        }
    }
    Ok(acc)
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        images.swap(i, j);
    }
    Permutation::new(&images).expect("shuffle of 1..=n")
}

/// `a/b` with `a, b` uniform in `1..=bound`.
pub fn random_positive_rational<R: Rng>(rng: &mut R, bound: u64) -> Rational {
    let bound = bound.max(1);
    let a = rng.random_range(1..=bound);
    let b = rng.random_range(1..=bound);
    Rational::new(BigInt::from(a), BigInt::from(b))
}

/// A positive rational with a uniformly random sign.
pub fn random_nonzero_rational<R: Rng>(rng: &mut R, bound: u64) -> Rational {
    let v = random_positive_rational(rng, bound);
    if rng.random_bool(0.5) {
        -v
    } else {
        v
    }
}

pub fn random_monomial_with<R: Rng>(rng: &mut R, n: usize, value_bound: u64) -> MonomialMatrix {
    let perm = random_permutation(rng, n);
    let values = (0..n)
        .map(|_| random_positive_rational(rng, value_bound))
        .collect();
    MonomialMatrix::new(values, perm).expect("positive values")
}

/// Deterministic nonnegative monomial matrix of order `n ≥ 1`.
pub fn random_monomial(seed: u64, n: usize, value_bound: u64) -> MonomialMatrix {
    assert!(n >= 1, "order must be at least 1");
    random_monomial_with(&mut seeded_rng(seed), n, value_bound)
}

/// Sample points used by [`sample_refute_p1`]: `0`; `points` values
/// `2^⌊e⌋ · (1 + frac(e))` for `e` evenly spaced over `[-20, 20]`; and
/// `B`, `B(1 ± 2^-j)` for `j = 1..=8` where `B` is the Cauchy bound.
pub fn refutation_grid(p: &Polynomial, points: usize) -> Vec<Rational> {
    let mut grid = vec![Rational::zero()];
    let denom = points.saturating_sub(1).max(1) as u64;
    for i in 0..points as u64 {
        let u = 40 * i;
        let whole = (u / denom) as i64 - 20;
        let frac = Rational::new(BigInt::from(u % denom), BigInt::from(denom));
        let scale = if whole >= 0 {
            Rational::from_integer(BigInt::one() << whole as usize)
        } else {
            Rational::new(BigInt::one(), BigInt::one() << (-whole) as usize)
        };
        grid.push(scale * (Rational::one() + frac));
    }
    let b = p.cauchy_bound();
    grid.push(b.clone());
    for j in 1..=8usize {
        let eps = Rational::new(BigInt::one(), BigInt::one() << j);
        grid.push(&b * (Rational::one() + &eps));
        grid.push(&b * (Rational::one() - &eps));
    }
    grid
}

/// `p` scaled by a positive integer so all coefficients are integers.
fn integer_coefficients(p: &Polynomial) -> Vec<BigInt> {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
    p.coeffs()
        .iter()
        .map(|a| a.numer() * (&lcm / a.denom()))
        .collect()
}

/// Sign of `Σ a_k u^k v^{m-k}`, which is the sign of `p(u/v)` for `v > 0`.
fn sign_at(coeffs: &[BigInt], t: &Rational) -> i8 {
    let (u, v) = (t.numer(), t.denom());
    let mut acc = BigInt::zero();
    let mut vpow = BigInt::one();
    // acc_k = a_m u^{m-k} + … + a_k v^{m-k}
    for (idx, a) in coeffs.iter().rev().enumerate() {
        if idx == 0 {
            acc = a.clone();
        } else {
            vpow *= v;
            acc = acc * u + a * &vpow;
        }
    }
    if acc.is_positive() {
        1
    } else if acc.is_negative() {
        -1
    } else {
        0
    }
}

/// Searches the refutation grid for a `t ≥ 0` with `p(t) < 0`.
///
/// Finding nothing proves nothing.
pub fn sample_refute_p1(p: &Polynomial, points: usize) -> Option<Rational> {
    if p.is_zero() {
        return None;
    }
    let coeffs = integer_coefficients(p);
    refutation_grid(p, points)
        .into_iter()
        .find(|t| sign_at(&coeffs, t) < 0)
}
