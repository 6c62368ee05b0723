//! Integer polynomials for fraction-free remainder sequences.
//!
//! Every operation here is defined up to a positive constant factor, which
//! preserves signs at every point and hence root counts and sign variations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Polynomial;
use crate::rational::Rational;

/// Trimmed coefficient vector, lowest degree first; empty for zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct IntPoly {
    c: Vec<BigInt>,
}

impl IntPoly {
    fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Self { c }
    }

    /// Positive multiple of `p` with coprime integer coefficients.
    pub(crate) fn from_rational(p: &Polynomial) -> Self {
        let den = p
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
        let c = p
            .coeffs()
            .iter()
            .map(|a| a.numer() * (&den / a.denom()))
            .collect();
        Self::new(c).primitive()
    }

    pub(crate) fn to_rational(&self) -> Polynomial {
        Polynomial::new(self.c.iter().cloned().map(Rational::from_integer).collect())
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub(crate) fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    fn leading(&self) -> Option<&BigInt> {
        self.c.last()
    }

    /// Divides out the positive content.
    pub(crate) fn primitive(mut self) -> Self {
        let g = self.c.iter().fold(BigInt::zero(), |g, a| g.gcd(a));
        if !g.is_zero() && !g.is_one() {
            for a in &mut self.c {
                *a /= &g;
            }
        }
        self
    }

    /// Same polynomial up to sign, with a positive leading coefficient.
    pub(crate) fn positive_leading(mut self) -> Self {
        if self.leading().is_some_and(Signed::is_negative) {
            for a in &mut self.c {
                *a = -&*a;
            }
        }
        self
    }

    pub(crate) fn neg(mut self) -> Self {
        for a in &mut self.c {
            *a = -&*a;
        }
        self
    }

    pub(crate) fn derivative(&self) -> Self {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a * BigInt::from(k))
                .collect(),
        )
    }

    pub(crate) fn sub(&self, other: &Self) -> Self {
        let len = self.c.len().max(other.c.len());
        let zero = BigInt::zero();
        Self::new(
            (0..len)
                .map(|i| self.c.get(i).unwrap_or(&zero) - other.c.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    /// Remainder of `c · self` by `d` for some integer `c > 0`.
    pub(crate) fn pseudo_rem(&self, d: &Self) -> Self {
        let (Some(dd), Some(lc)) = (d.degree(), d.leading()) else {
            panic!("pseudo-remainder by zero");
        };
        let lc_abs = lc.abs();
        let sign_flip = lc.is_negative();
        let mut r = self.c.clone();
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let top = r.pop().expect("nonempty");
            // r ← |lc|·r − sgn(lc)·top·t^k·d (top term cancels)
            let factor = if sign_flip { -top } else { top };
            for a in &mut r {
                *a *= &lc_abs;
            }
            for (i, di) in d.c[..dd].iter().enumerate() {
                if !di.is_zero() {
                    r[k + i] -= &factor * di;
                }
            }
            while r.last().is_some_and(Zero::is_zero) && r.len() > dd {
                r.pop();
            }
        }
        Self::new(r)
    }

    /// Exact quotient over the integers; `d` must be primitive and divide `self`.
    pub(crate) fn exact_div(&self, d: &Self) -> Self {
        let (Some(dd), Some(lc)) = (d.degree(), d.leading()) else {
            panic!("division by zero");
        };
        let mut r = self.c.clone();
        if r.len() <= dd {
            debug_assert!(r.is_empty(), "inexact division");
            return Self::new(vec![]);
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let (c, rem) = top.div_rem(lc);
            debug_assert!(rem.is_zero(), "inexact division");
            for (i, di) in d.c.iter().enumerate() {
                if !di.is_zero() {
                    r[k + i] -= &c * di;
                }
            }
            q[k] = c;
        }
        debug_assert!(r.iter().all(Zero::is_zero), "inexact division");
        Self::new(q)
    }

    /// Primitive gcd with positive leading coefficient; `None` when both are zero.
    pub(crate) fn gcd(&self, other: &Self) -> Option<Self> {
        let (mut a, mut b) = (self.clone().primitive(), other.clone().primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        (!a.is_zero()).then(|| a.positive_leading())
    }

    /// Number of sign changes in the coefficient sequence.
    pub(crate) fn coefficient_variations(&self) -> usize {
        let mut last: Option<bool> = None;
        let mut changes = 0;
        for a in self.c.iter().filter(|a| !a.is_zero()) {
            let neg = a.is_negative();
            if last.is_some_and(|l| l != neg) {
                changes += 1;
            }
            last = Some(neg);
        }
        changes
    }

    /// `q(x + 1)`.
    pub(crate) fn taylor_shift_one(&self) -> Self {
        let mut c = self.c.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let next = c[j + 1].clone();
                c[j] += next;
            }
        }
        Self::new(c)
    }

    /// `x^deg q(1/x)`.
    pub(crate) fn reversed(&self) -> Self {
        Self::new(self.c.iter().rev().cloned().collect())
    }

    /// `2^deg q(x/2)`.
    pub(crate) fn halve_argument(&self) -> Self {
        let d = self.c.len().saturating_sub(1);
        Self::new(
            self.c
                .iter()
                .enumerate()
                .map(|(i, a)| a << (d - i))
                .collect(),
        )
    }

    /// Upper bound on the roots in `(0, 1)`, exact when it is 0 or 1.
    pub(crate) fn unit_interval_variations(&self) -> usize {
        self.reversed().taylor_shift_one().coefficient_variations()
    }

    /// Sign of the value at `t`.
    pub(crate) fn sign_at(&self, t: &Rational) -> i8 {
        // homogeneous Horner for Σ a_i n^i d^(deg-i), which has the sign of p(n/d) as d > 0
        let (n, d) = (t.numer(), t.denom());
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for a in self.c.iter().rev() {
            acc = acc * n + a * &dpow;
            dpow *= d;
        }
        if acc.is_positive() {
            1
        } else if acc.is_negative() {
            -1
        } else {
            0
        }
    }
}
