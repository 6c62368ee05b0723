//! Exact univariate polynomials over Q and the `r mod n` part decomposition.

pub(crate) mod integer;
mod parse;
mod roots;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use integer::IntPoly;

pub(crate) use roots::{positivity_scan, Positivity};
pub use roots::{sign_variations, sturm_sequence, SturmChain};

/// `a_0 + a_1 t + … + a_m t^m` with `a_m ≠ 0`.
///
/// Coefficients are dense and trimmed; the zero polynomial is the empty vector and
/// reports `degree() == None`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c · t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `t - root`.
    pub fn linear_root(root: Rational) -> Self {
        Self::new(vec![-root, Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `a_k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Lowest-order nonzero coefficient and its exponent.
    pub fn trailing(&self) -> Option<(usize, &Rational)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    /// Nonzero terms `(k, a_k)` in ascending degree.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &Rational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Exact `p(t)` by Horner's scheme.
    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, a| acc * t + a)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    /// `p(t) · t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// `p(t^k)`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        let mut out = Vec::new();
        for (e, a) in self.terms() {
            let idx = e * k;
            if out.len() <= idx {
                out.resize(idx + 1, Rational::zero());
            }
            out[idx] = a.clone();
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    /// Euclidean division: `self = q · d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let (dd, lc) = match (d.degree(), d.leading()) {
            (Some(dd), Some(lc)) => (dd, lc),
            _ => return Err(Error::ZeroDivisor),
        };
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / lc;
            if c.is_zero() {
                continue;
            }
            for (i, di) in d.coeffs.iter().enumerate() {
                if !di.is_zero() {
                    rem[k + i] -= &c * di;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        let (a, b) = (IntPoly::from_rational(self), IntPoly::from_rational(other));
        a.gcd(&b)
            .map(|g| g.to_rational().monic())
            .ok_or(Error::ZeroGcd)
    }

    /// `1 + max_{k<m} |a_k| / |a_m|`; every complex root has modulus strictly below it.
    pub fn cauchy_bound(&self) -> Rational {
        let Some(lc) = self.leading() else {
            return Rational::one();
        };
        let lc = lc.abs();
        let m = self.coeffs.len() - 1;
        let max = self.coeffs[..m]
            .iter()
            .map(|a| a.abs() / &lc)
            .max()
            .unwrap_or_else(Rational::zero);
        max + Rational::one()
    }

    /// The `r mod n` part `Σ_{k ≡ r (mod n)} a_k t^k`; zero when no exponent qualifies.
    pub fn part(&self, r: usize, n: usize) -> Result<Polynomial> {
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        if r >= n {
            return Err(Error::InvalidResidue { r, n });
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| {
                if k % n == r {
                    a.clone()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        Ok(Self::new(coeffs))
    }

    /// All parts `p_(0,n), …, p_(n-1,n)`.
    pub fn parts(&self, n: usize) -> Result<Vec<Polynomial>> {
        (0..n).map(|r| self.part(r, n)).collect()
    }

    /// `Σ_r p_(r,n)`; always reproduces `self`.
    pub fn parts_sum(&self, n: usize) -> Result<Polynomial> {
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(self
            .parts(n)?
            .iter()
            .fold(Polynomial::zero(), |acc, p| &acc + p))
    }

    /// Yun's square-free decomposition of a nonzero polynomial: returns monic
    /// `[f_1, f_2, …]` with `self = c · f_1 f_2² f_3³ ⋯`.
    pub fn squarefree_decomposition(&self) -> Vec<Polynomial> {
        roots::yun(self)
    }

    /// Square-free polynomial whose roots are exactly the odd-multiplicity roots of `self`.
    pub fn squarefree_odd_part(&self) -> Polynomial {
        self.squarefree_decomposition()
            .iter()
            .step_by(2)
            .fold(Polynomial::one(), |acc, f| &acc * f)
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn sturm_count(&self, lo: &Rational, hi: &Rational) -> Result<usize> {
        roots::sturm_count(self, lo, hi)
    }

    /// Divides out the largest power of `t`.
    pub fn strip_t_factors(&self) -> (Polynomial, usize) {
        match self.trailing() {
            Some((k, _)) => (Self::new(self.coeffs[k..].to_vec()), k),
            None => (Self::zero(), 0),
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

/// Canonical text form accepted back by the parser, highest degree first,
/// e.g. `t^20 + 4*t^15 - 3/2*t + 5`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (k, a)) in self.terms().rev().enumerate() {
            let mag = a.abs();
            match (idx, a.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "t")?,
                1 => write!(f, "{mag}*t")?,
                _ if unit => write!(f, "t^{k}")?,
                _ => write!(f, "{mag}*t^{k}")?,
            }
        }
        Ok(())
    }
}
