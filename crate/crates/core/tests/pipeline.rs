use num_integer::Integer;
use proptest::prelude::*;

use torus_concordance::covers::{
    double_branched_cover_two_strand, h1_divides_check, h1_order, is_reduced_scoped,
};
use torus_concordance::invariants::{abs_at_minus_one, determinant_sum};
use torus_concordance::{evaluate, KnotSum, Status, TorusKnotFactor};

fn factor(max_p: u64, max_q: u64) -> impl Strategy<Value = TorusKnotFactor> {
    (2..=max_p, 3..=max_q, any::<bool>())
        .prop_filter("valid torus knot", |(p, q, _)| p != q && p.gcd(q) == 1)
        .prop_map(|(p, q, pos)| {
            let f = TorusKnotFactor::positive(p, q);
            if pos {
                f
            } else {
                f.mirror()
            }
        })
}

fn sum(max_p: u64, max_q: u64, max_len: usize) -> impl Strategy<Value = KnotSum> {
    prop::collection::vec(factor(max_p, max_q), 0..=max_len).prop_map(KnotSum::from_factors)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn verdict_invariants(k in sum(7, 15, 5)) {
        let v = evaluate(&k);
        prop_assert_eq!(v.status == Status::Obstructed, !v.reasons.is_empty());
        if v.status == Status::Concordant {
            prop_assert!(k.is_empty() || k.single().is_some_and(|f| f.is_positive()));
        }
        if let (Some(p), Some(d)) = (&v.candidate_alexander, &v.candidate_determinant) {
            prop_assert_eq!(&abs_at_minus_one(p), d);
        }
        if v.fired("DetOneCorollary") {
            prop_assert!(v.fired("DivisibilityFailsThm32"));
        }
        prop_assert_eq!(v.input, k);
    }

    #[test]
    fn two_strand_covers_are_reduced(k in sum(2, 25, 6)) {
        let cover = double_branched_cover_two_strand(&k).unwrap();
        prop_assert_eq!(h1_order(&cover), determinant_sum(&k));
        prop_assert!(is_reduced_scoped(&cover).unwrap().is_reduced());
        prop_assert!(h1_divides_check(&k, &determinant_sum(&k)).unwrap());
    }

    #[test]
    fn two_strand_sums_are_classified(k in sum(2, 21, 6)) {
        let v = evaluate(&k);
        let escapes = k.is_empty() || k.single().is_some_and(|f| f.is_positive());
        let expected = if escapes { Status::Concordant } else { Status::Obstructed };
        prop_assert_eq!(v.status, expected);
    }

    #[test]
    fn verdict_json_is_stable(k in sum(5, 11, 4)) {
        let v = evaluate(&k);
        let a = v.to_json();
        prop_assert_eq!(&a, &evaluate(&k).to_json());
        let parsed: serde_json::Value = serde_json::from_str(&a).unwrap();
        prop_assert_eq!(parsed["input"].as_str().unwrap().parse::<KnotSum>().unwrap(), k);
    }
}
