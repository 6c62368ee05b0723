#![allow(dead_code)]

use monomat::{MonomialMatrix, Permutation, Polynomial, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=8).prop_map(|(n, d)| rat(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=12, 1i64..=6, any::<bool>()).prop_map(|(n, d, neg)| rat(if neg { -n } else { n }, d))
}

pub fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

pub fn permutation_of(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::new(&images).unwrap())
}

pub fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n).prop_flat_map(permutation_of)
}

pub fn monomial_of(n: usize) -> impl Strategy<Value = MonomialMatrix> {
    (
        permutation_of(n),
        prop::collection::vec(nonzero_rational(), n),
    )
        .prop_map(|(p, v)| MonomialMatrix::new(v, p).unwrap())
}

pub fn monomial(max_n: usize) -> impl Strategy<Value = MonomialMatrix> {
    (1..=max_n).prop_flat_map(monomial_of)
}

pub fn polynomial(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational(), 0..=max_deg + 1).prop_map(Polynomial::new)
}

/// Polynomial with small integer coefficients.
pub fn int_polynomial(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-6i64..=6, 1..=max_deg + 1).prop_map(|c| Polynomial::from_i64(&c))
}

pub fn nonneg_int_polynomial(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(0i64..=5, 1..=max_deg + 1).prop_map(|c| Polynomial::from_i64(&c))
}

/// Exact square root of a monic polynomial of even degree, when one exists.
pub fn monic_sqrt(m: &Polynomial) -> Option<Polynomial> {
    let deg = m.degree()?;
    if deg % 2 == 1 || !m.leading()?.is_one() {
        return None;
    }
    let d = deg / 2;
    let two = rat(2, 1);
    // q_{d-i} from the coefficient of t^{2d-i}
    let mut q = vec![Rational::zero(); d + 1];
    q[d] = Rational::one();
    for i in 1..=d {
        let mut acc = m.coeff(2 * d - i);
        for j in 1..i {
            acc -= &q[d - j] * &q[d - i + j];
        }
        q[d - i] = acc / &two;
    }
    let q = Polynomial::new(q);
    (&q * &q == *m).then_some(q)
}
