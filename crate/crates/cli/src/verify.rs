//! Quick self-checks runnable from the command line.

use std::collections::BTreeSet;

use anyhow::{ensure, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tamari_forge::bruhat::{
    enumerate_bruhat, enumerate_bruhat_with, is_admissible, maximal_chains, Strategy, DEFAULT_BUDGET,
};
use tamari_forge::rewrite::{self, RuleSet, Word};
use tamari_forge::tamari::{build_tamari, edge_nonvisible, r_poset};
use tamari_forge::tropic::{self, q, q_frac, SolitonParams, Q};
use tamari_forge::{BinaryTree, Error, IndexSet};

pub const SUITES: [&str; 5] = ["bruhat", "tamari", "rewrite", "soliton", "all"];

pub struct Report {
    pub text: String,
    pub failed: usize,
}

type Check = (&'static str, Box<dyn Fn(u64) -> Result<()>>);

fn labels(chains: &[Vec<IndexSet>]) -> BTreeSet<Vec<String>> {
    chains.iter().map(|c| c.iter().map(IndexSet::label).collect()).collect()
}

fn owned(chains: &[&[&str]]) -> BTreeSet<Vec<String>> {
    chains.iter().map(|c| c.iter().map(|s| s.to_string()).collect()).collect()
}

fn bruhat_checks() -> Vec<Check> {
    vec![
        (
            "B(3,1) has 6 vertices",
            Box::new(|_| {
                ensure!(enumerate_bruhat(3, 1)?.vertices().len() == 6);
                Ok(())
            }),
        ),
        (
            "B(4,2) has 8 vertices and 2 maximal chains",
            Box::new(|_| {
                let b = enumerate_bruhat(4, 2)?;
                ensure!(b.vertices().len() == 8 && b.count_maximal_chains() == 2);
                Ok(())
            }),
        ),
        (
            "B(N,N-1) has 2 vertices for N = 3..8",
            Box::new(|_| {
                for big_n in 3..=8 {
                    ensure!(enumerate_bruhat(big_n, big_n - 1)?.vertices().len() == 2, "N = {big_n}");
                }
                Ok(())
            }),
        ),
        (
            "enumeration strategies agree on B(5,2)",
            Box::new(|_| {
                let a = enumerate_bruhat_with(5, 2, Strategy::BruteForce, DEFAULT_BUDGET)?;
                let b = enumerate_bruhat_with(5, 2, Strategy::Breadth, DEFAULT_BUDGET)?;
                ensure!(a == b);
                Ok(())
            }),
        ),
        (
            "maximal chains of B(5,2) are admissible",
            Box::new(|_| {
                for c in maximal_chains(&enumerate_bruhat(5, 2)?) {
                    ensure!(is_admissible(&c)?);
                }
                Ok(())
            }),
        ),
    ]
}

fn tamari_checks() -> Vec<Check> {
    vec![
        (
            "T(3,1) and T(4,2) chains",
            Box::new(|_| {
                ensure!(labels(&build_tamari(3, 1)?.maximal_chains()) == owned(&[&["12", "23"], &["13"]]));
                ensure!(
                    labels(&build_tamari(4, 2)?.maximal_chains())
                        == owned(&[&["123", "134"], &["234", "124"]])
                );
                Ok(())
            }),
        ),
        (
            "T(6,3) has 14 vertices and 9 maximal chains",
            Box::new(|_| {
                let t = build_tamari(6, 3)?;
                ensure!(t.vertices().len() == 14 && t.count_maximal_chains() == 9);
                Ok(())
            }),
        ),
        (
            "T(6,4) chains",
            Box::new(|_| {
                let want = owned(&[&["12345", "12356", "13456"], &["23456", "12456", "12346"]]);
                ensure!(labels(&build_tamari(6, 4)?.maximal_chains()) == want);
                Ok(())
            }),
        ),
        (
            "T(7,5) is a heptagon",
            Box::new(|_| {
                let t = build_tamari(7, 5)?;
                let chains = t.maximal_chains();
                ensure!(t.vertices().len() == 7 && chains.len() == 2);
                Ok(())
            }),
        ),
        (
            "edge non-visibility iff equal R-posets for N <= 6 and (7,5)",
            Box::new(|_| {
                let mut sizes: Vec<(usize, usize)> =
                    (3..=6).flat_map(|big_n| (1..big_n).map(move |n| (big_n, n))).collect();
                sizes.push((7, 5));
                for (big_n, n) in sizes {
                    let b = enumerate_bruhat(big_n, n)?;
                    let posets = b.vertices().iter().map(r_poset).collect::<Result<Vec<_>, _>>()?;
                    for &(from, to, label) in b.edges() {
                        let hidden = edge_nonvisible(&b.vertices()[from], &label)?;
                        ensure!(hidden == (posets[from] == posets[to]), "({big_n},{n}) edge {label}");
                    }
                }
                Ok(())
            }),
        ),
    ]
}

fn rewrite_checks() -> Vec<Check> {
    vec![
        (
            "normal form of R1 R2 R3 R4",
            Box::new(|_| {
                let trace = rewrite::normalize(&Word::canonical(4, 1, RuleSet::Bruhat)?)?;
                let got: Vec<String> = trace.emitted().iter().map(IndexSet::label).collect();
                ensure!(got == ["12", "13", "23", "14", "24", "34"], "{got:?}");
                Ok(())
            }),
        ),
        (
            "both strategies on B(4,2) agree on the final word",
            Box::new(|_| {
                let w = Word::canonical(4, 2, RuleSet::Bruhat)?;
                let l = rewrite::normalize_with(&w, rewrite::Strategy::Leftmost)?;
                let r = rewrite::normalize_with(&w, rewrite::Strategy::Rightmost)?;
                ensure!(l.final_word.low_sequence() == r.final_word.low_sequence());
                Ok(())
            }),
        ),
        (
            "derived chains at (6,3) equal those of T(6,3)",
            Box::new(|_| {
                let derived = rewrite::derive_chains(6, 3, RuleSet::Tamari, rewrite::DEFAULT_CHAIN_BUDGET)?;
                ensure!(labels(&derived) == labels(&build_tamari(6, 3)?.maximal_chains()));
                Ok(())
            }),
        ),
        (
            "pentagon and Bruhat consistency",
            Box::new(|_| {
                for (big_n, n, rules) in
                    [(4, 2, RuleSet::Bruhat), (5, 3, RuleSet::Tamari), (6, 3, RuleSet::Tamari)]
                {
                    let r =
                        rewrite::check_simplex_consistency(big_n, n, rules, rewrite::DEFAULT_CHAIN_BUDGET)?;
                    ensure!(r.is_consistent(), "({big_n},{n}): {:?}", r.counterexample);
                }
                Ok(())
            }),
        ),
    ]
}

fn rational(rng: &mut impl Rng) -> Q {
    q_frac(rng.gen_range(-20..=20), rng.gen_range(1..=10))
}

fn random_params(rng: &mut impl Rng, m: usize) -> Result<SolitonParams> {
    loop {
        let mut p: Vec<Q> = (0..=m).map(|_| rational(rng)).collect();
        p.sort();
        p.dedup();
        if p.len() == m + 1 {
            let c = (0..=m).map(|_| rational(rng)).collect();
            return Ok(SolitonParams::new(p, c)?);
        }
    }
}

fn soliton_checks() -> Vec<Check> {
    vec![
        (
            "documented six-phase evolution",
            Box::new(|_| {
                let params = SolitonParams::new((0..6).map(q).collect(), vec![q(0); 6])?;
                let chain = tropic::evolution_chain(&params, &[q_frac(25, 2), q(-1)])?;
                let got: Vec<String> = chain.iter().map(IndexSet::label).collect();
                ensure!(got == ["1345", "1356", "1236", "3456"], "{got:?}");
                Ok(())
            }),
        ),
        (
            "random evolutions are Tamari chains between combs",
            Box::new(|seed| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                for m in 3..=5 {
                    let chains = labels(&build_tamari(m + 1, 3)?.maximal_chains());
                    let mut done = 0;
                    while done < 200 {
                        let params = random_params(&mut rng, m)?;
                        let higher: Vec<Q> = (3..m).map(|_| rational(&mut rng)).collect();
                        let trees = match tropic::evolution_trees(&params, &higher) {
                            Ok(t) => t,
                            Err(Error::NonGenericParameters(_)) => continue,
                            Err(e) => return Err(e.into()),
                        };
                        let chain = tropic::evolution_chain(&params, &higher)?;
                        ensure!(
                            chains.contains(&chain.iter().map(IndexSet::label).collect::<Vec<_>>()),
                            "{params:?}"
                        );
                        ensure!(trees[0].1 == BinaryTree::left_comb(m), "{params:?}");
                        ensure!(trees.last().map(|t| &t.1) == Some(&BinaryTree::right_comb(m)), "{params:?}");
                        done += 1;
                    }
                }
                Ok(())
            }),
        ),
    ]
}

/// Runs a named suite, or returns `None` for an unknown name.
pub fn run_suite(name: &str, seed: u64) -> Result<Option<Report>> {
    let checks: Vec<Check> = match name {
        "bruhat" => bruhat_checks(),
        "tamari" => tamari_checks(),
        "rewrite" => rewrite_checks(),
        "soliton" => soliton_checks(),
        "all" => [bruhat_checks(), tamari_checks(), rewrite_checks(), soliton_checks()]
            .into_iter()
            .flatten()
            .collect(),
        _ => return Ok(None),
    };
    let mut text = String::new();
    let mut failed = 0;
    for (name, check) in &checks {
        match check(seed) {
            Ok(()) => text.push_str(&format!("[PASS] {name}\n")),
            Err(e) => {
                failed += 1;
                text.push_str(&format!("[FAIL] {name}: {e:#}\n"));
            }
        }
    }
    text.push_str(&format!("{} of {} checks passed\n", checks.len() - failed, checks.len()));
    Ok(Some(Report { text, failed }))
}
