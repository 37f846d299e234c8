//! Randomized invariants for the partition toolkit and the coefficient
//! oracle.

use proptest::prelude::*;

use lrhorn::{
    enumerate_partitions, CheckOptions, HornEngine, IndexSet, Oracle, Partition, Rectangle,
    Staircase, StrictPartition,
};

fn arb_partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted parts form a partition")
    })
}

fn arb_strict(max_part: u32) -> impl Strategy<Value = StrictPartition> {
    proptest::collection::btree_set(1..=max_part, 0..=max_part as usize).prop_map(|set| {
        let mut parts: Vec<u32> = set.into_iter().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        StrictPartition::new(parts).expect("distinct sorted parts are strict")
    })
}

proptest! {
    #[test]
    fn conjugate_is_an_involution(lambda in arb_partition(8, 8)) {
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().weight(), lambda.weight());
    }

    #[test]
    fn rectangle_complement_involution(lambda in arb_partition(5, 5), n in 1u32..=6, m in 1u32..=6) {
        let rect = Rectangle::new(n, m).unwrap();
        if lambda.fits_in(rect) {
            let c = lambda.complement_in(rect).unwrap();
            prop_assert!(c.fits_in(rect));
            prop_assert_eq!(lambda.weight() + c.weight(), rect.area());
            prop_assert_eq!(c.complement_in(rect).unwrap(), lambda);
        } else {
            prop_assert!(lambda.complement_in(rect).is_err());
        }
    }

    #[test]
    fn staircase_complement_involution(lambda in arb_strict(6), n in 1u32..=6) {
        let stair = Staircase::new(n).unwrap();
        if lambda.fits_in(stair) {
            let c = lambda.complement_in(stair).unwrap();
            prop_assert_eq!(lambda.weight() + c.weight(), stair.weight());
            prop_assert_eq!(c.complement_in(stair).unwrap(), lambda);
        }
    }

    #[test]
    fn partition_text_round_trips(lambda in arb_partition(20, 8)) {
        let text = lambda.to_string();
        prop_assert_eq!(text.parse::<Partition>().unwrap(), lambda);
    }

    #[test]
    fn index_set_elements_are_an_r_subset(r in 1u32..=5, extra in 0u32..=5, lambda in arb_partition(5, 5)) {
        let ambient = r + extra;
        // Clip alpha into the r x (ambient - r) box.
        let parts: Vec<u32> = lambda
            .parts()
            .iter()
            .take(r as usize)
            .map(|&p| p.min(extra))
            .collect();
        let alpha = Partition::new(parts).unwrap();
        let idx = IndexSet::from_partition(&alpha, ambient, r).unwrap();
        prop_assert_eq!(idx.elements().len(), r as usize);
        prop_assert!(idx.elements().windows(2).all(|w| w[0] < w[1]));
        prop_assert!(idx.elements().iter().all(|&e| 1 <= e && e <= ambient));
    }

    #[test]
    fn lr_a_is_symmetric_in_mu_nu(mu in arb_partition(3, 3), nu in arb_partition(3, 3), lambda in arb_partition(4, 4)) {
        let oracle = Oracle::new();
        prop_assert_eq!(
            oracle.lr_a(&lambda, &mu, &nu).unwrap(),
            oracle.lr_a(&lambda, &nu, &mu).unwrap()
        );
    }

    #[test]
    fn lr_a_respects_homogeneity(mu in arb_partition(3, 3), nu in arb_partition(3, 3), lambda in arb_partition(4, 4)) {
        let oracle = Oracle::new();
        let a = oracle.lr_a(&lambda, &mu, &nu).unwrap();
        if a != 0 {
            prop_assert_eq!(lambda.weight(), mu.weight() + nu.weight());
        }
    }

    #[test]
    fn lr_a_is_stable_under_extra_variables(mu in arb_partition(3, 3), nu in arb_partition(3, 3), lambda in arb_partition(4, 4)) {
        let oracle = Oracle::new();
        let base = oracle.lr_a(&lambda, &mu, &nu).unwrap();
        let more = oracle
            .lr_a_in_vars(&lambda, &mu, &nu, lambda.len() + 2)
            .unwrap();
        prop_assert_eq!(base, more);
    }

    #[test]
    fn q_and_p_coefficients_are_proportional(mu in arb_strict(4), nu in arb_strict(4), lambda in arb_strict(5)) {
        let oracle = Oracle::new();
        let c = oracle.lr_c(&lambda, &mu, &nu).unwrap() as u128;
        let d = oracle.lr_d(&lambda, &mu, &nu).unwrap() as u128;
        // d * 2^(len mu + len nu) = c * 2^(len lambda)
        prop_assert_eq!(
            d << (mu.len() + nu.len()),
            c << lambda.len()
        );
    }

    #[test]
    fn proportional_coefficients_vanish_together(mu in arb_strict(4), nu in arb_strict(4), lambda in arb_strict(5)) {
        let oracle = Oracle::new();
        let c = oracle.lr_c(&lambda, &mu, &nu).unwrap();
        let d = oracle.lr_d(&lambda, &mu, &nu).unwrap();
        prop_assert_eq!(c == 0, d == 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn classical_verdict_matches_oracle_on_random_triples(
        seed in 0usize..3375,
    ) {
        // Random ordered triple in the 2x4 family, decoded from one index.
        let rect = Rectangle::new(2, 4).unwrap();
        let shapes: Vec<Partition> = enumerate_partitions(rect).collect();
        let k = shapes.len();
        let (i, j, l) = (seed % k, (seed / k) % k, (seed / (k * k)) % k);
        let engine = HornEngine::new();
        let verdict = engine
            .classical_horn_feasible(&shapes[i], &shapes[j], &shapes[l], rect, &CheckOptions::default())
            .unwrap();
        let coeff = engine.oracle().sym_a(&shapes[i], &shapes[j], &shapes[l], rect).unwrap();
        prop_assert_eq!(verdict.feasible, coeff != 0);
        prop_assert_eq!(verdict.feasible, verdict.witnesses.is_empty());
    }
}
