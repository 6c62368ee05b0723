//! Nonnegativity preservation on nonnegative monomial matrices.
//!
//! A real polynomial `p` maps every entrywise nonnegative monomial matrix of
//! order `n` to a nonnegative matrix exactly when every part `p_(r,k)`, for
//! `k = 1..=n` and `r = 0..k-1`, is nonnegative on `[0, ∞)`. Necessity is
//! witnessed constructively: a part negative at `t₀ > 0` makes the matching
//! entry of `p(K_{(t₀,…,t₀)})` negative.
//!
//! Nonnegativity on `[0, ∞)` and on `(0, ∞)` agree for polynomials by
//! continuity; the deciders use `[0, ∞)` but always report witnesses `t₀ > 0`.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::evaluator::eval_monomial;
use crate::monomial::MonomialMatrix;
use crate::polynomial::{positivity_scan, Polynomial, Positivity, SturmChain};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum P1Decision {
    /// `p(t) ≥ 0` for all `t ≥ 0`.
    Member,
    /// `p(witness) < 0` with `witness > 0`.
    NotMember { witness: Rational },
}

impl P1Decision {
    pub fn is_member(&self) -> bool {
        matches!(self, P1Decision::Member)
    }

    pub fn witness(&self) -> Option<&Rational> {
        match self {
            P1Decision::Member => None,
            P1Decision::NotMember { witness } => Some(witness),
        }
    }
}

/// Intervals examined by the Descartes pre-pass before falling back to Sturm chains.
const SCAN_BUDGET: usize = 256;

/// Decides whether `p(t) ≥ 0` for every real `t ≥ 0`.
pub fn in_p1(p: &Polynomial) -> P1Decision {
    let (Some(lead), Some((_, low))) = (p.leading(), p.trailing()) else {
        return P1Decision::Member;
    };
    if p.coeffs().iter().all(|a| !a.is_negative()) {
        return P1Decision::Member;
    }
    let bound = p.cauchy_bound();
    if lead.is_negative() {
        // no roots at or beyond the bound, so p keeps the leading sign there
        return P1Decision::NotMember { witness: bound };
    }
    if low.is_negative() {
        return P1Decision::NotMember {
            witness: negative_near_zero(p),
        };
    }
    let (stripped, _) = p.strip_t_factors();
    if let Some((g, reduced)) = exponent_reduction(&stripped) {
        return match in_p1(&reduced) {
            P1Decision::Member => P1Decision::Member,
            P1Decision::NotMember { witness } => P1Decision::NotMember {
                witness: lift_witness(p, &witness, g),
            },
        };
    }
    match positivity_scan(&stripped, &bound, SCAN_BUDGET) {
        Positivity::Positive => return P1Decision::Member,
        Positivity::Negative(witness) => return P1Decision::NotMember { witness },
        Positivity::Unknown => {}
    }
    // p > 0 just right of 0 and beyond the bound; it can only turn negative by
    // crossing a root of odd multiplicity.
    let (odd, _) = p.squarefree_odd_part().strip_t_factors();
    if odd.degree().unwrap_or(0) == 0 {
        return P1Decision::Member;
    }
    let chain = SturmChain::new(&odd);
    let zero = Rational::zero();
    let roots = chain
        .count(&zero, &bound)
        .expect("0 and the Cauchy bound are not roots");
    if roots == 0 {
        return P1Decision::Member;
    }
    P1Decision::NotMember {
        witness: past_first_crossing(p, &odd, &chain, bound),
    }
}

/// `(g, q)` with `p(t) = q(t^g)` for the largest `g > 1`, if any.
fn exponent_reduction(p: &Polynomial) -> Option<(usize, Polynomial)> {
    let g = p.terms().fold(0, |g, (k, _)| gcd(g, k));
    (g > 1).then(|| {
        let mut c = vec![Rational::zero(); p.degree().unwrap_or(0) / g + 1];
        for (k, a) in p.terms() {
            c[k / g] = a.clone();
        }
        (g, Polynomial::new(c))
    })
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A rational `t > 0` with `p(t) < 0`, found by bisecting `t^g` towards `u`,
/// where `p(t) = t^v q(t^g)` and `q(u) < 0`.
fn lift_witness(p: &Polynomial, u: &Rational, g: usize) -> Rational {
    let two = Rational::from_integer(2.into());
    let mut lo = Rational::zero();
    let mut hi = u.clone().max(Rational::one());
    loop {
        let mid = (&lo + &hi) / &two;
        if p.eval(&mid).is_negative() {
            return mid;
        }
        if &crate::rational::pow(&mid, g as u64) < u {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// Halves `t` from 1 until `p(t) < 0`; requires a negative trailing coefficient.
fn negative_near_zero(p: &Polynomial) -> Rational {
    let two = Rational::from_integer(2.into());
    let mut t = Rational::one();
    while !p.eval(&t).is_negative() {
        t /= &two;
    }
    t
}

/// A point `> 0` with `odd(point) ≠ 0`, at or near the midpoint of `(lo, hi)`.
fn split_point(odd: &Polynomial, lo: &Rational, hi: &Rational) -> Rational {
    let two = Rational::from_integer(2.into());
    let width = hi - lo;
    let mid = lo + &width / &two;
    if !odd.eval(&mid).is_zero() {
        return mid;
    }
    // roots are finite in number; walk off the midpoint by shrinking offsets
    let mut offset = &width / Rational::from_integer(4.into());
    loop {
        let cand = &mid + &offset;
        if !odd.eval(&cand).is_zero() {
            return cand;
        }
        offset /= &two;
    }
}

/// Bisects to the smallest positive odd-multiplicity root `ρ` of `p` and
/// returns a rational just right of it where `p < 0`.
fn past_first_crossing(
    p: &Polynomial,
    odd: &Polynomial,
    chain: &SturmChain,
    bound: Rational,
) -> Rational {
    // invariant: no root of `odd` in (0, lo], at least one in (lo, hi]
    let mut lo = Rational::zero();
    let mut hi = bound;
    let count = |a: &Rational, b: &Rational| chain.count(a, b).expect("endpoints avoid roots");
    while count(&lo, &hi) > 1 {
        let mid = split_point(odd, &lo, &hi);
        if count(&lo, &mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    // (lo, hi] isolates ρ; p ≤ 0 on (ρ, hi] with finitely many zeros
    loop {
        if p.eval(&hi).is_negative() {
            return hi;
        }
        let mid = split_point(odd, &lo, &hi);
        if count(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// One violated condition: `p_(r,k)(witness) < 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub k: usize,
    pub r: usize,
    pub part: Polynomial,
    pub witness: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipReport {
    pub n: usize,
    pub verdict: bool,
    /// Ordered lexicographically by `(k, r)`.
    pub failures: Vec<Failure>,
}

impl MembershipReport {
    /// The failure with the largest order `k` (smallest `r` among those), whose
    /// counterexample matrix is closest in size to `n`.
    pub fn preferred_failure(&self) -> Option<&Failure> {
        self.failures.iter().rev().max_by_key(|f| f.k)
    }
}

/// Checks `p_(r,k) ∈ 𝒫₁` for all `k ∈ 1..=n`, `r ∈ 0..k`.
pub fn in_pn_mon(p: &Polynomial, n: usize) -> Result<MembershipReport> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let mut failures = Vec::new();
    let mut decided: HashMap<Polynomial, P1Decision> = HashMap::new();
    for k in 1..=n {
        for r in 0..k {
            let part = p.part(r, k)?;
            let decision = decided
                .entry(part.clone())
                .or_insert_with(|| in_p1(&part))
                .clone();
            if let P1Decision::NotMember { witness } = decision {
                failures.push(Failure {
                    k,
                    r,
                    part,
                    witness,
                });
            }
        }
    }
    Ok(MembershipReport {
        n,
        verdict: failures.is_empty(),
        failures,
    })
}

/// A nonnegative monomial matrix `A` with `p(A)` negative at a known entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub matrix: MonomialMatrix,
    /// 1-indexed `(row, col)`.
    pub position: (usize, usize),
    pub value: Rational,
}

/// Builds `A = K_{(t₀,…,t₀)}` of order `k` from a failure `(k, r, t₀)`.
///
/// Then `α = t₀^k` and the coefficient of `A^r` in `p(A)` is `p_(r,k)(t₀) / t₀^r`,
/// so the entry at `(1, π^r(1)) = (1, r + 1)` equals `p_(r,k)(t₀) < 0`.
pub fn counterexample(p: &Polynomial, failure: &Failure) -> Result<Counterexample> {
    let Failure { k, r, witness, .. } = failure;
    let (k, r) = (*k, *r);
    if k == 0 || r >= k || !witness.is_positive() {
        return Err(Error::NoFailure);
    }
    if !p.part(r, k)?.eval(witness).is_negative() {
        return Err(Error::NoFailure);
    }
    let matrix = MonomialMatrix::k_of(&vec![witness.clone(); k])?;
    let value = eval_monomial(p, &matrix)[(0, r)].clone();
    debug_assert!(value.is_negative());
    Ok(Counterexample {
        matrix,
        position: (1, r + 1),
        value,
    })
}
