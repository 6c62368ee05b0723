//! Decision procedures checked against sampling and explicit matrices.

mod common;

use common::*;
use monomat::membership::{counterexample, in_p1, in_pn_mon};
use monomat::oracle::{dense_horner_eval, random_monomial, sample_refute_p1};
use monomat::{eval_monomial, Polynomial};
use num_traits::Signed;
use proptest::prelude::*;

/// `s(t) w(t)² + t v(t)²` with `s` having nonnegative coefficients.
fn nonnegative_shape() -> impl Strategy<Value = Polynomial> {
    (
        nonneg_int_polynomial(3),
        int_polynomial(3),
        int_polynomial(3),
    )
        .prop_map(|(s, w, v)| &(&s * &(&w * &w)) + &(&v * &v).shift(1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn refuter_witness_implies_not_p1(p in int_polynomial(10)) {
        let decision = in_p1(&p);
        if sample_refute_p1(&p, 10_000).is_some() {
            prop_assert!(!decision.is_member(), "{} refuted by sampling but declared in P1", p);
        }
        if let Some(w) = decision.witness() {
            prop_assert!(w.is_positive());
            prop_assert!(p.eval(w).is_negative());
        }
    }

    #[test]
    fn constructed_nonnegative_is_p1(p in nonnegative_shape()) {
        prop_assert!(in_p1(&p).is_member(), "{} wrongly rejected", p);
    }

    #[test]
    fn membership_is_monotone(p in int_polynomial(12), n in 1usize..=5) {
        if in_pn_mon(&p, n + 1).unwrap().verdict {
            prop_assert!(in_pn_mon(&p, n).unwrap().verdict);
        }
    }

    #[test]
    fn every_failure_has_a_counterexample(p in int_polynomial(12), n in 1usize..=4) {
        let report = in_pn_mon(&p, n).unwrap();
        prop_assert_eq!(report.verdict, report.failures.is_empty());
        for f in &report.failures {
            prop_assert!(f.witness.is_positive());
            prop_assert!(f.part.eval(&f.witness).is_negative());
            let c = counterexample(&p, f).unwrap();
            prop_assert!(c.matrix.is_nonnegative());
            let dense = dense_horner_eval(&p, &c.matrix.to_dense()).unwrap();
            let (i, j) = c.position;
            prop_assert_eq!(&dense[(i - 1, j - 1)], &c.value);
            prop_assert!(c.value.is_negative());
        }
    }
}

#[test]
fn true_verdicts_hold_on_random_matrices() {
    // Parts of t^a g(t^12) are all-or-nothing for every k dividing 12.
    let g: Polynomial = "t^2 - 2*t + 1".parse().unwrap();
    let p = &g.compose_power(12) + &g.compose_power(12).shift(1);
    let p = &p + &"t^3 + 2*t^5".parse().unwrap();
    let report = in_pn_mon(&p, 4).unwrap();
    assert!(report.verdict, "{:?}", report.failures);
    for n in 1..=4 {
        for seed in 0..500 {
            let a = random_monomial(seed, n, 6);
            assert!(eval_monomial(&p, &a).is_nonnegative(), "seed {seed}, n {n}");
        }
    }
}

#[test]
fn even_degree_parts_fail_beyond_first_order() {
    let p: Polynomial = "t^2 - 2*t + 1".parse().unwrap();
    assert!(in_pn_mon(&p, 1).unwrap().verdict);
    let report = in_pn_mon(&p, 2).unwrap();
    let kr: Vec<_> = report.failures.iter().map(|f| (f.k, f.r)).collect();
    assert_eq!(kr, vec![(2, 1)]);
    let c = counterexample(&p, &report.failures[0]).unwrap();
    assert!(c.value.is_negative());
}
