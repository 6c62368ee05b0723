//! Scalar helpers over [`num_rational::BigRational`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `base^exp` by square-and-multiply.
pub fn pow(base: &Rational, mut exp: u64) -> Rational {
    let mut acc = Rational::one();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= &sq;
        }
        exp >>= 1;
        if exp > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

/// Parses `p/q` or an integer, optionally signed, surrounding whitespace ignored.
pub fn parse(text: &str) -> Result<Rational> {
    let s = text.trim();
    let err = |message: String| Error::Parse {
        position: 0,
        message,
    };
    if s.is_empty() {
        return Err(err("empty rational".into()));
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| err(format!("invalid numerator in {s:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| err(format!("invalid denominator in {s:?}")))?;
    if den.is_zero() {
        return Err(err(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Exact `n`-th root of a positive rational, if one exists.
pub fn nth_root(value: &Rational, n: u32) -> Option<Rational> {
    if !value.is_positive() || n == 0 {
        return None;
    }
    let num = value.numer().magnitude().nth_root(n);
    let den = value.denom().magnitude().nth_root(n);
    let candidate = Rational::new(BigInt::from(num), BigInt::from(den));
    (pow(&candidate, n as u64) == *value).then_some(candidate)
}
