mod common;

use std::collections::BTreeSet;

use common::draw;
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tamari_forge::setcalc::{packet, subsets};
use tamari_forge::tamari::build_tamari;
use tamari_forge::tropic::*;
use tamari_forge::{BinaryTree, Error, IndexSet};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_set(rng: &mut impl Rng, universe: usize, size: usize) -> IndexSet {
    let all = subsets(universe, size).unwrap();
    all[rng.gen_range(0..all.len())]
}

#[test]
fn packet_difference_identity() {
    let mut r = rng(1);
    for _ in 0..1000 {
        let m = r.gen_range(2..=5);
        let params = draw::params(&mut r, m);
        let n = r.gen_range(2..=m);
        let k = random_set(&mut r, m + 1, n + 1);
        let t_n = draw::rational(&mut r);
        let upper = draw::rationals(&mut r, m - n);
        let mut ctx = vec![t_n.clone()];
        ctx.extend(upper.iter().cloned());
        let t_k = critical_value(&params, &k, &upper).unwrap().value;
        let elems = k.to_vec();
        for &a in &elems {
            for &b in &elems {
                let ta = critical_value(&params, &k.without(a), &ctx).unwrap().value;
                let tb = critical_value(&params, &k.without(b), &ctx).unwrap().value;
                assert_eq!(ta - tb, (params.p(a) - params.p(b)) * (&t_n - &t_k));
            }
        }
    }
}

#[test]
fn packet_values_are_ordered() {
    let mut r = rng(2);
    for _ in 0..500 {
        let m = r.gen_range(2..=5);
        let params = draw::params(&mut r, m);
        let n = r.gen_range(2..=m);
        let k = random_set(&mut r, m + 1, n + 1);
        let upper = draw::rationals(&mut r, m - n);
        let t_k = critical_value(&params, &k, &upper).unwrap().value;
        for side in [-1i64, 1] {
            let mut ctx = vec![&t_k + q_frac(side * r.gen_range(1..=20), r.gen_range(1..=5))];
            ctx.extend(upper.iter().cloned());
            let values: Vec<Q> =
                packet(&k).unwrap().iter().map(|i| critical_value(&params, i, &ctx).unwrap().value).collect();
            if side < 0 {
                assert!(values.windows(2).all(|w| w[0] < w[1]), "lex below t_K");
            } else {
                assert!(values.windows(2).all(|w| w[0] > w[1]), "reverse-lex above t_K");
            }
        }
    }
}

#[test]
fn dominance_regions_are_convex() {
    let mut r = rng(3);
    let mut pairs = 0;
    while pairs < 10_000 {
        let m = r.gen_range(2..=4);
        let params = draw::params(&mut r, m);
        let a = TropPoint::new(draw::rationals(&mut r, m));
        let b = TropPoint::new(draw::rationals(&mut r, m));
        let common = dominant_phases(&params, &a);
        let shared: Vec<usize> =
            common.elements().filter(|&j| dominant_phases(&params, &b).contains(j)).collect();
        let Some(&i) = shared.first() else { continue };
        let mid = TropPoint::new(a.coords().iter().zip(b.coords()).map(|(x, y)| (x + y) / q(2)).collect());
        assert!(dominant_phases(&params, &mid).contains(i));
        pairs += 1;
    }
}

#[test]
fn rules_agree_with_argmax() {
    let mut r = rng(4);
    for _ in 0..10_000 {
        let m = r.gen_range(2..=4);
        let params = draw::params(&mut r, m);
        let n = r.gen_range(2..=m);
        let i = random_set(&mut r, m + 1, n);
        let ctx = draw::rationals(&mut r, m + 1 - n);
        let point = coincidence_point(&params, &i, &ctx).unwrap();
        assert_eq!(
            point_visible(&params, &i, &point).unwrap(),
            rule_visible(&params, &i, &ctx).unwrap(),
            "{params:?} {i} {ctx:?}"
        );
    }
}

#[test]
fn asymptotic_classes_of_the_five_phase_example() {
    let class = |l: &str| asymptotic_class(&s(6, l));
    for l in ["1234", "1245", "1256", "2345", "2356", "3456"] {
        assert_eq!(class(l), AsymptoticClass::Below, "{l}");
    }
    for l in ["1236", "1346", "1456"] {
        assert_eq!(class(l), AsymptoticClass::Above, "{l}");
    }
    assert_eq!(class("1235"), AsymptoticClass::Bounded);
}

#[test]
fn asymptotic_visibility() {
    let mut r = rng(5);
    for _ in 0..2000 {
        let m = r.gen_range(3..=5);
        let params = draw::params(&mut r, m);
        let n = r.gen_range(2..=m);
        let i = random_set(&mut r, m + 1, n);
        let upper = draw::rationals(&mut r, m - n);
        let crit: Vec<Q> = (1..=m + 1)
            .filter(|&k| !i.contains(k))
            .map(|k| critical_value(&params, &i.with(k), &upper).unwrap().value)
            .collect();
        let lo = crit.iter().min().unwrap() - q(1);
        let hi = crit.iter().max().unwrap() + q(1);
        let visible_at = |t: Q| {
            let mut ctx = vec![t];
            ctx.extend(upper.iter().cloned());
            rule_visible(&params, &i, &ctx).unwrap()
        };
        let class = asymptotic_class(&i);
        assert_eq!(visible_at(lo), class == AsymptoticClass::Below, "{i} below");
        assert_eq!(visible_at(hi), class == AsymptoticClass::Above, "{i} above");
    }
}

fn check_evolution(
    params: &SolitonParams,
    higher: &[Q],
    chains: &BTreeSet<Vec<String>>,
) -> Result<(), Error> {
    let m = params.m();
    let chain = evolution_chain(params, higher)?;
    assert!(chains.contains(&labels(&chain)), "{params:?} {higher:?}: {chain:?}");
    let trees = evolution_trees(params, higher)?;
    assert_eq!(trees.len(), chain.len() + 1);
    assert_eq!(trees[0].1, BinaryTree::left_comb(m));
    assert_eq!(trees.last().unwrap().1, BinaryTree::right_comb(m));
    for w in trees.windows(2) {
        assert!(w[0].1.right_rotations().contains(&w[1].1));
    }
    Ok(())
}

#[test]
fn evolution_realizes_tamari_chains() {
    let mut r = rng(6);
    for m in 3..=5 {
        let chains = chain_strings(&build_tamari(m + 1, 3).unwrap().maximal_chains());
        let mut done = 0;
        while done < 100 {
            let params = draw::params(&mut r, m);
            let higher = draw::rationals(&mut r, m - 3);
            match check_evolution(&params, &higher, &chains) {
                Ok(()) => done += 1,
                Err(Error::NonGenericParameters(_)) | Err(Error::NonGenericSlice(_)) => {}
                Err(e) => panic!("{e}"),
            }
        }
    }
}

#[test]
fn the_documented_evolution() {
    let params = SolitonParams::new((0..6).map(q).collect(), vec![q(0); 6]).unwrap();
    let higher = vec![q_frac(25, 2), q(-1)];
    assert_eq!(labels(&evolution_chain(&params, &higher).unwrap()), ["1345", "1356", "1236", "3456"]);
    let t4: Vec<Q> = ["12345", "12346", "12356", "12456", "13456", "23456"]
        .iter()
        .map(|l| critical_value(&params, &s(6, l), &[q(-1)]).unwrap().value)
        .collect();
    assert_eq!(t4, (10..=15).map(q).collect::<Vec<_>>());
    let t5 = critical_value(&params, &s(6, "123456"), &[]).unwrap().value;
    assert!(q(-1) < t5);
    let tie = evolution_chain(&params, &[q(13), q(-1)]).unwrap_err();
    assert!(matches!(tie, Error::NonGenericParameters(_)));
}

#[test]
fn three_phase_graph() {
    let params = SolitonParams::new(vec![q(-1), q(0), q(1)], vec![q(0); 3]).unwrap();
    let g = soliton_graph(&params, &q(0), &[]).unwrap();
    assert_eq!(g.vertices.len(), 1);
    assert_eq!(g.segments.len(), 3);
    assert!(g.is_generic());
    assert_eq!(graph_tree(&g).unwrap(), BinaryTree::left_comb(2));
}

#[test]
fn four_phases_switch_once() {
    let mut r = rng(7);
    let params = draw::params(&mut r, 3);
    let times = critical_times(&params, &[]).unwrap();
    assert_eq!(labels(&times.iter().map(|c| c.index).collect::<Vec<_>>()), ["1234"]);
    let at = &times[0].value;
    assert_eq!(tree_at_time(&params, &(at - q(1)), &[]).unwrap(), BinaryTree::left_comb(3));
    assert_eq!(tree_at_time(&params, &(at + q(1)), &[]).unwrap(), BinaryTree::right_comb(3));
    let g = soliton_graph(&params, at, &[]).unwrap();
    assert!(!g.is_generic());
    assert!(matches!(graph_tree(&g), Err(Error::NonGenericSlice(_))));
}
