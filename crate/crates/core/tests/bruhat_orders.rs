mod common;

use std::collections::BTreeSet;

use common::*;
use proptest::prelude::*;
use tamari_forge::bruhat::Strategy as Enumeration;
use tamari_forge::bruhat::{
    chain_to_order, enumerate_bruhat, enumerate_bruhat_with, inversion_set, is_admissible, is_consistent,
    maximal_chains, order_to_chain, q_poset, AdmissibleOrder, DEFAULT_BUDGET,
};
use tamari_forge::setcalc::subsets;
use tamari_forge::{IndexSet, Poset};

fn member_indices(u: &tamari_forge::ConsistentSet) -> Vec<usize> {
    let big = subsets(u.universe(), u.rank() + 1).unwrap();
    u.members().iter().map(|k| big.iter().position(|b| b == k).unwrap()).collect()
}

#[test]
fn sizes_of_small_orders() {
    let expected = [
        ((3, 1), 6),
        ((4, 1), 24),
        ((4, 2), 8),
        ((5, 1), 120),
        ((5, 2), 62),
        ((5, 3), 10),
        ((6, 2), 908),
        ((6, 3), 148),
        ((6, 4), 12),
    ];
    for ((big_n, n), size) in expected {
        let b = enumerate_bruhat(big_n, n).unwrap();
        assert_eq!(b.vertices().len(), size, "B({big_n},{n})");
    }
    for big_n in 3..=8 {
        assert_eq!(enumerate_bruhat(big_n, big_n - 1).unwrap().vertices().len(), 2);
    }
}

#[test]
fn strategies_agree() {
    for (big_n, n) in [(3, 1), (4, 1), (4, 2), (5, 2), (5, 3), (6, 4), (6, 5)] {
        let a = enumerate_bruhat_with(big_n, n, Enumeration::BruteForce, DEFAULT_BUDGET).unwrap();
        let b = enumerate_bruhat_with(big_n, n, Enumeration::Breadth, DEFAULT_BUDGET).unwrap();
        assert_eq!(a, b, "B({big_n},{n})");
    }
}

#[test]
fn budget_guard() {
    let err = enumerate_bruhat_with(6, 2, Enumeration::Breadth, 100).unwrap_err();
    assert!(matches!(err, tamari_forge::Error::BudgetExceeded(_)));
}

#[test]
fn maximal_chains_are_admissible_orders() {
    // maximal chains of B(N,n) are the admissible orders of (n+1)-sets
    for (big_n, n) in [(3, 1), (4, 1), (4, 2), (5, 2), (5, 3)] {
        let b = enumerate_bruhat(big_n, n).unwrap();
        let chains = maximal_chains(&b);
        assert_eq!(chains.len() as u128, b.count_maximal_chains());
        let brute = brute_admissible(big_n, n + 1);
        let total: usize = brute.values().map(|v| v.len()).sum();
        assert_eq!(chains.len(), total, "B({big_n},{n})");
        for c in &chains {
            assert!(is_admissible(c).unwrap());
            let rho = chain_to_order(c).unwrap();
            let back = order_to_chain(&rho).unwrap();
            assert_eq!(back.len(), c.len() + 1);
            assert_eq!(back[0], b.vertices()[b.source()]);
            assert_eq!(back.last(), Some(&b.vertices()[b.sink()]));
        }
    }
}

#[test]
fn q_posets_match_brute_force() {
    for (big_n, n) in [(3, 1), (3, 2), (4, 1), (4, 2), (4, 3), (5, 2)] {
        let small = subsets(big_n, n).unwrap();
        let brute = brute_admissible(big_n, n);
        let b = enumerate_bruhat(big_n, n).unwrap();
        let inv_sets: BTreeSet<Vec<usize>> = b.vertices().iter().map(member_indices).collect();
        assert_eq!(inv_sets, brute.keys().cloned().collect(), "({big_n},{n}) inversion sets");
        for u in b.vertices() {
            let q = q_poset(u).unwrap();
            let mut got = BTreeSet::new();
            q.for_each_linear_extension(|ext| {
                got.insert(
                    ext.iter().map(|x| small.iter().position(|y| y == x).unwrap()).collect::<Vec<_>>(),
                );
                true
            });
            assert_eq!(&got, &brute[&member_indices(u)], "Q({u})");
            assert_eq!(q.count_linear_extensions(), got.len() as u128);
        }
    }
}

#[test]
fn q_poset_of_square_example() {
    let u = tamari_forge::ConsistentSet::new(4, 2, &sets(4, &["123", "124"])).unwrap();
    let q = q_poset(&u).unwrap();
    let ext = q.linear_extensions(100).unwrap();
    assert_eq!(ext.len(), 4);
    for e in &ext {
        let rho = AdmissibleOrder::new(e).unwrap();
        assert_eq!(inversion_set(&rho), u);
    }
}

#[test]
fn mis_leveled_examples() {
    assert!(is_admissible(&sets(3, &["2", "1", "3"])).unwrap());
    assert!(!is_admissible(&sets(3, &["13", "12", "23"])).unwrap());
    let rho = AdmissibleOrder::new(&sets(3, &["3", "2", "1"])).unwrap();
    assert_eq!(inversion_set(&rho).members(), sets(3, &["12", "13", "23"]).as_slice());
    let rho = AdmissibleOrder::new(&sets(3, &["23", "13", "12"])).unwrap();
    assert_eq!(inversion_set(&rho).members(), sets(3, &["123"]).as_slice());
}

#[test]
fn hexagon_at_three_one() {
    let b = enumerate_bruhat(3, 1).unwrap();
    assert_eq!(b.edges().len(), 6);
    for v in 0..6 {
        let degree = b.edges().iter().filter(|e| e.0 == v || e.1 == v).count();
        assert_eq!(degree, 2);
    }
    assert_eq!(b.count_maximal_chains(), 2);
}

fn consistent_strategy() -> impl Strategy<Value = (usize, usize, usize)> {
    prop_oneof![Just((4usize, 1usize)), Just((4, 2)), Just((5, 2)), Just((5, 3)), Just((6, 3))]
        .prop_flat_map(|(big_n, n)| (Just(big_n), Just(n), any::<usize>()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complement_is_consistent((big_n, n, pick) in consistent_strategy()) {
        let b = enumerate_bruhat(big_n, n).unwrap();
        let u = &b.vertices()[pick % b.vertices().len()];
        let c = u.complement();
        prop_assert!(is_consistent(c.members(), big_n, n).unwrap());
        prop_assert!(b.index_of(&c).is_some());
    }

    #[test]
    fn q_extensions_have_the_right_inversions((big_n, n, pick) in consistent_strategy()) {
        let b = enumerate_bruhat(big_n, n).unwrap();
        let u = &b.vertices()[pick % b.vertices().len()];
        let q: Poset = q_poset(u).unwrap();
        let mut seen = 0;
        q.for_each_linear_extension(|ext| {
            let rho = AdmissibleOrder::new(ext).unwrap();
            assert_eq!(&inversion_set(&rho), u);
            seen += 1;
            seen < 50
        });
        prop_assert!(seen > 0);
    }

    #[test]
    fn single_step_covers((big_n, n, pick) in consistent_strategy()) {
        let b = enumerate_bruhat(big_n, n).unwrap();
        let v = pick % b.vertices().len();
        for &e in b.out_edges(v) {
            let (from, to, label): (usize, usize, IndexSet) = b.edges()[e];
            prop_assert_eq!(from, v);
            prop_assert_eq!(b.vertices()[to].len(), b.vertices()[from].len() + 1);
            prop_assert!(b.vertices()[to].contains(&label));
            prop_assert_eq!(b.vertices()[from].with(label).unwrap(), b.vertices()[to].clone());
        }
    }
}
