//! Square-free decomposition and Sturm-sequence real root counting.

use std::collections::VecDeque;

use num_traits::{Signed, Zero};

use super::integer::IntPoly;
use super::Polynomial;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Yun's algorithm; factors are monic. The zero polynomial and constants have no factors.
pub(super) fn yun(f: &Polynomial) -> Vec<Polynomial> {
    if f.degree().unwrap_or(0) == 0 {
        return vec![];
    }
    // integer arithmetic throughout; each step is exact up to one common positive scale
    let f = IntPoly::from_rational(f);
    let df = f.derivative();
    let g = f.gcd(&df).expect("f is nonzero");
    let mut b = f.exact_div(&g);
    let c = df.exact_div(&g);
    let mut d = c.sub(&b.derivative());
    let mut factors = Vec::new();
    while b.degree() != Some(0) {
        let a = b.gcd(&d).expect("b is nonconstant");
        b = b.exact_div(&a);
        let c = d.exact_div(&a);
        d = c.sub(&b.derivative());
        factors.push(a.to_rational().monic());
    }
    // trailing unit factors carry no roots
    while factors.last().is_some_and(|a| a.degree() == Some(0)) {
        factors.pop();
    }
    factors
}

/// Fraction-free Sturm chain: each member is a positive multiple of the
/// classical `s, s', -rem(s, s'), …` and has coprime integer coefficients.
fn int_sturm_sequence(s: &Polynomial) -> Vec<IntPoly> {
    let mut seq = Vec::new();
    if s.is_zero() {
        return seq;
    }
    let s = IntPoly::from_rational(s);
    let mut next = s.derivative().primitive();
    seq.push(s);
    while !next.is_zero() {
        seq.push(next);
        let n = seq.len();
        next = seq[n - 2].pseudo_rem(&seq[n - 1]).primitive().neg();
    }
    seq
}

/// Sturm chain of `s`, each member rescaled by a positive constant to
/// integer coefficients with no common factor.
pub fn sturm_sequence(s: &Polynomial) -> Vec<Polynomial> {
    int_sturm_sequence(s)
        .iter()
        .map(IntPoly::to_rational)
        .collect()
}

fn count_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Sign changes in `seq` evaluated at `t`, zeros skipped.
pub fn sign_variations(seq: &[Polynomial], t: &Rational) -> usize {
    count_changes(seq.iter().map(|p| {
        let v = p.eval(t);
        if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        }
    }))
}

pub(super) fn sturm_count(s: &Polynomial, lo: &Rational, hi: &Rational) -> Result<usize> {
    SturmChain::new(s).count(lo, hi)
}

/// Outcome of [`positivity_scan`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Positivity {
    /// `p > 0` on `(0, hi]`.
    Positive,
    /// `p(t) < 0` at this `t` in `(0, hi)`.
    Negative(Rational),
    /// Budget exhausted or a root hit exactly.
    Unknown,
}

/// Breadth-first bisection of `(0, hi)` with Descartes' rule of signs.
///
/// Requires `p(0) > 0` and `p(hi) > 0`. Intervals without sign variations hold
/// no roots and are dropped; every split point is evaluated. Multiple roots
/// keep their interval alive, so the scan gives up after `max_nodes` intervals.
pub(crate) fn positivity_scan(p: &Polynomial, hi: &Rational, max_nodes: usize) -> Positivity {
    let scaled = Polynomial::new(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(i, a)| a * crate::rational::pow(hi, i as u64))
            .collect(),
    );
    let half = Rational::new(1.into(), 2.into());
    // (q, lo, width) with q a positive multiple of x ↦ p(lo + width·x)
    let mut queue = VecDeque::from([(
        IntPoly::from_rational(&scaled),
        Rational::zero(),
        hi.clone(),
    )]);
    let mut nodes = 0;
    while let Some((q, lo, width)) = queue.pop_front() {
        nodes += 1;
        if nodes > max_nodes {
            return Positivity::Unknown;
        }
        if q.unit_interval_variations() == 0 {
            continue;
        }
        let mid = &lo + &width * &half;
        match q.sign_at(&half) {
            -1 => return Positivity::Negative(mid),
            0 => return Positivity::Unknown,
            _ => {}
        }
        let left = q.halve_argument().primitive();
        let right = left.taylor_shift_one().primitive();
        let width = width * &half;
        queue.push_back((left, lo, width.clone()));
        queue.push_back((right, mid, width));
    }
    Positivity::Positive
}

/// A precomputed Sturm chain for repeated interval counts.
#[derive(Debug, Clone)]
pub struct SturmChain {
    poly: Polynomial,
    seq: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(s: &Polynomial) -> Self {
        Self {
            poly: s.clone(),
            seq: int_sturm_sequence(s),
        }
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.poly
    }

    /// Distinct real roots in `(lo, hi]`; endpoints must not be roots.
    pub fn count(&self, lo: &Rational, hi: &Rational) -> Result<usize> {
        if lo >= hi {
            return Err(Error::EmptyInterval);
        }
        let Some(s) = self.seq.first() else {
            return Err(Error::EndpointRoot {
                point: lo.to_string(),
            });
        };
        for t in [lo, hi] {
            if s.sign_at(t) == 0 {
                return Err(Error::EndpointRoot {
                    point: t.to_string(),
                });
            }
        }
        let variations = |t: &Rational| count_changes(self.seq.iter().map(|p| p.sign_at(t)));
        Ok(variations(lo).saturating_sub(variations(hi)))
    }
}
