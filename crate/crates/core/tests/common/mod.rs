#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use tamari_forge::{BinaryTree, IndexSet};

pub fn s(universe: usize, text: &str) -> IndexSet {
    IndexSet::parse(universe, text).unwrap()
}

pub fn sets(universe: usize, labels: &[&str]) -> Vec<IndexSet> {
    labels.iter().map(|l| s(universe, l)).collect()
}

pub fn labels(seq: &[IndexSet]) -> Vec<String> {
    seq.iter().map(|k| k.label()).collect()
}

pub fn chain_strings(chains: &[Vec<IndexSet>]) -> BTreeSet<Vec<String>> {
    chains.iter().map(|c| labels(c)).collect()
}

/// Subsets of `{1..universe}` of size `k` as sorted vectors, independent of the library.
pub fn combinations(universe: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, universe: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for e in start..=universe {
            cur.push(e);
            go(e + 1, universe, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, universe, k, &mut Vec::new(), &mut out);
    out
}

/// Brute-force admissible orders of the `n`-subsets of `[universe]`, grouped by
/// inversion set. Orders and inversion sets are given as index vectors into
/// `combinations(universe, n)` and `combinations(universe, n + 1)`.
pub fn brute_admissible(universe: usize, n: usize) -> BTreeMap<Vec<usize>, BTreeSet<Vec<usize>>> {
    let small = combinations(universe, n);
    let big = combinations(universe, n + 1);
    let index: HashMap<Vec<usize>, usize> = small.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
    // packet members in lexicographic order: drop the last element first
    let packets: Vec<Vec<usize>> = big
        .iter()
        .map(|k| {
            (0..k.len())
                .rev()
                .map(|skip| {
                    let sub: Vec<usize> =
                        k.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &e)| e).collect();
                    index[&sub]
                })
                .collect()
        })
        .collect();
    let count = small.len();
    let mut perm: Vec<usize> = (0..count).collect();
    let mut pos = vec![0usize; count];
    let mut out: BTreeMap<Vec<usize>, BTreeSet<Vec<usize>>> = BTreeMap::new();
    let mut visit = |perm: &[usize]| {
        for (i, &x) in perm.iter().enumerate() {
            pos[x] = i;
        }
        let mut inv = Vec::new();
        for (b, pk) in packets.iter().enumerate() {
            let up = pk.windows(2).all(|w| pos[w[0]] < pos[w[1]]);
            let down = pk.windows(2).all(|w| pos[w[0]] > pos[w[1]]);
            if !up && !down {
                return;
            }
            if down {
                inv.push(b);
            }
        }
        out.entry(inv).or_default().insert(perm.to_vec());
    };
    // Heap's algorithm, iterative
    let mut c = vec![0usize; count];
    visit(&perm);
    let mut i = 0;
    while i < count {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            visit(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// All binary trees with leaves `lo..hi`, in no particular order.
pub fn binary_trees(lo: usize, hi: usize) -> Vec<BinaryTree> {
    if hi == lo + 1 {
        return vec![BinaryTree::Leaf(lo)];
    }
    let mut out = Vec::new();
    for mid in lo + 1..hi {
        for l in binary_trees(lo, mid) {
            for r in binary_trees(mid, hi) {
                out.push(BinaryTree::node(l.clone(), r.clone()));
            }
        }
    }
    out
}

/// The rotation lattice on binary trees with `leaves` leaves: vertices and
/// right-rotation edges.
pub fn rotation_lattice(leaves: usize) -> (Vec<BinaryTree>, BTreeSet<(usize, usize)>) {
    let trees = binary_trees(1, leaves + 1);
    let index: HashMap<String, usize> = trees.iter().enumerate().map(|(i, t)| (t.to_string(), i)).collect();
    let mut edges = BTreeSet::new();
    for (i, t) in trees.iter().enumerate() {
        for r in t.right_rotations() {
            edges.insert((i, index[&r.to_string()]));
        }
    }
    (trees, edges)
}

/// Number of maximal chains from `from` to `to` in a DAG.
pub fn count_paths(count: usize, edges: &BTreeSet<(usize, usize)>, from: usize, to: usize) -> u128 {
    let mut memo: Vec<Option<u128>> = vec![None; count];
    fn go(v: usize, to: usize, edges: &BTreeSet<(usize, usize)>, memo: &mut Vec<Option<u128>>) -> u128 {
        if v == to {
            return 1;
        }
        if let Some(x) = memo[v] {
            return x;
        }
        let total = edges.range((v, 0)..(v + 1, 0)).map(|&(_, w)| go(w, to, edges, memo)).sum();
        memo[v] = Some(total);
        total
    }
    go(from, to, edges, &mut memo)
}

pub mod draw {
    use rand::Rng;
    use tamari_forge::tropic::{q_frac, Q};
    use tamari_forge::SolitonParams;

    /// A rational with numerator in `[-20, 20]` and denominator in `[1, 10]`.
    pub fn rational(rng: &mut impl Rng) -> Q {
        q_frac(rng.gen_range(-20..=20), rng.gen_range(1..=10))
    }

    pub fn rationals(rng: &mut impl Rng, count: usize) -> Vec<Q> {
        (0..count).map(|_| rational(rng)).collect()
    }

    /// Random parameters with `M + 1` phases and distinct increasing `p`.
    pub fn params(rng: &mut impl Rng, m: usize) -> SolitonParams {
        loop {
            let mut p = rationals(rng, m + 1);
            p.sort();
            p.dedup();
            if p.len() == m + 1 {
                return SolitonParams::new(p, rationals(rng, m + 1)).unwrap();
            }
        }
    }
}
