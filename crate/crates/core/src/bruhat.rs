//! Higher Bruhat orders `B(N,n)`, admissible orders `A(N,n)` and Q-posets.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::setcalc::{classify_pattern, packet, subsets, IndexSet};

/// Vertex budget used by [`enumerate_bruhat`].
pub const DEFAULT_BUDGET: usize = 2_000_000;

/// Largest number of `(n+1)`-subsets for which all subsets are filtered directly.
pub const BRUTE_FORCE_LIMIT: usize = 24;

/// A set of `(n+1)`-subsets of `[N]` meeting every `(n+2)`-packet in a
/// beginning or ending segment.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ConsistentSet {
    universe: usize,
    n: usize,
    members: Vec<IndexSet>,
}

impl ConsistentSet {
    pub fn new(universe: usize, n: usize, members: &[IndexSet]) -> Result<Self> {
        let mut members = members.to_vec();
        members.sort();
        members.dedup();
        if !is_consistent(&members, universe, n)? {
            let shown: Vec<String> = members.iter().map(|m| m.label()).collect();
            return Err(Error::NotConsistent(format!("{{{}}}", shown.join(","))));
        }
        Ok(Self { universe, n, members })
    }

    pub fn empty(universe: usize, n: usize) -> Result<Self> {
        check_rank(universe, n)?;
        Ok(Self { universe, n, members: Vec::new() })
    }

    /// All `(n+1)`-subsets of `[N]`.
    pub fn full(universe: usize, n: usize) -> Result<Self> {
        check_rank(universe, n)?;
        Ok(Self { universe, n, members: subsets(universe, n + 1)? })
    }

    pub(crate) fn from_sorted_unchecked(universe: usize, n: usize, members: Vec<IndexSet>) -> Self {
        Self { universe, n, members }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[IndexSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, k: &IndexSet) -> bool {
        self.members.binary_search(k).is_ok()
    }

    /// `U ∪ {K}`, checked for consistency.
    pub fn with(&self, k: IndexSet) -> Result<Self> {
        let mut members = self.members.clone();
        members.push(k);
        Self::new(self.universe, self.n, &members)
    }

    /// The set of all `(n+1)`-subsets not in `self`.
    pub fn complement(&self) -> Self {
        let members = subsets(self.universe, self.n + 1)
            .unwrap_or_default()
            .into_iter()
            .filter(|k| !self.contains(k))
            .collect();
        Self { universe: self.universe, n: self.n, members }
    }
}

impl Ord for ConsistentSet {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.universe, self.n, self.members.len(), &self.members).cmp(&(
            other.universe,
            other.n,
            other.members.len(),
            &other.members,
        ))
    }
}

impl PartialOrd for ConsistentSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ConsistentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self.members.iter().map(|m| m.label()).collect();
        write!(f, "{{{}}}", shown.join(","))
    }
}

impl fmt::Debug for ConsistentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn check_rank(universe: usize, n: usize) -> Result<()> {
    if universe == 0 || universe > crate::setcalc::MAX_UNIVERSE {
        return Err(Error::UniverseOutOfRange(universe));
    }
    if n > universe {
        return Err(Error::InvalidParameters(format!("rank n={n} exceeds N={universe}")));
    }
    Ok(())
}

fn check_members(members: &[IndexSet], universe: usize, size: usize) -> Result<()> {
    for m in members {
        if m.len() != size {
            return Err(Error::RankMismatch { expected: size, found: m.len() });
        }
        if m.universe() != universe {
            return Err(Error::InvalidIndexSet(format!(
                "{m:?} lives in [{}], expected [{universe}]",
                m.universe()
            )));
        }
    }
    Ok(())
}

/// Tests the segment condition on every `(n+2)`-subset of `[N]`.
pub fn is_consistent(members: &[IndexSet], universe: usize, n: usize) -> Result<bool> {
    check_rank(universe, n)?;
    check_members(members, universe, n + 1)?;
    let present: HashSet<IndexSet> = members.iter().copied().collect();
    for l in subsets(universe, n + 2)? {
        let mut pattern = 0u32;
        for (i, x) in packet(&l)?.iter().enumerate() {
            if present.contains(x) {
                pattern |= 1 << i;
            }
        }
        if !classify_pattern(pattern, n + 2).is_segment() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Bitset over the `(n+1)`-subsets of a [`Space`].
pub(crate) type Bits = Vec<u64>;

pub(crate) fn bit(bits: &Bits, i: usize) -> bool {
    bits[i / 64] & (1 << (i % 64)) != 0
}

pub(crate) fn set_bit(bits: &mut Bits, i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

/// Precomputed index tables for one `(N, n)`.
pub(crate) struct Space {
    pub universe: usize,
    pub n: usize,
    /// `(n+1)`-subsets in lexicographic order.
    pub upper: Vec<IndexSet>,
    /// `(n+2)`-subsets' packets as indices into `upper`, lexicographic.
    pub tops: Vec<Vec<usize>>,
    /// For each upper index, the `tops` entries whose packet contains it.
    pub containing: Vec<Vec<usize>>,
}

impl Space {
    pub fn new(universe: usize, n: usize) -> Result<Self> {
        check_rank(universe, n)?;
        let upper = subsets(universe, n + 1)?;
        let slot: HashMap<u16, usize> = upper.iter().enumerate().map(|(i, k)| (k.mask(), i)).collect();
        let mut tops = Vec::new();
        let mut containing = vec![Vec::new(); upper.len()];
        for l in subsets(universe, n + 2)? {
            let members: Vec<usize> = packet(&l)?.iter().map(|x| slot[&x.mask()]).collect();
            for &m in &members {
                containing[m].push(tops.len());
            }
            tops.push(members);
        }
        Ok(Self { universe, n, upper, tops, containing })
    }

    pub fn words(&self) -> usize {
        self.upper.len().div_ceil(64).max(1)
    }

    pub fn top_ok(&self, bits: &Bits, top: usize) -> bool {
        let mut pattern = 0u32;
        for (i, &m) in self.tops[top].iter().enumerate() {
            if bit(bits, m) {
                pattern |= 1 << i;
            }
        }
        classify_pattern(pattern, self.n + 2).is_segment()
    }

    pub fn set_of(&self, bits: &Bits) -> ConsistentSet {
        let members = (0..self.upper.len()).filter(|&i| bit(bits, i)).map(|i| self.upper[i]).collect();
        ConsistentSet::from_sorted_unchecked(self.universe, self.n, members)
    }

    /// Whether adding upper index `k` to the consistent `bits` stays consistent.
    pub fn can_add(&self, bits: &Bits, k: usize) -> bool {
        let mut next = bits.clone();
        set_bit(&mut next, k);
        self.containing[k].iter().all(|&t| self.top_ok(&next, t))
    }
}

/// How [`enumerate_bruhat_with`] produces the vertex set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Brute force when small enough, breadth-first growth otherwise.
    Auto,
    /// Filter all subsets of `(n+1)`-subsets.
    BruteForce,
    /// Grow consistent sets from the empty set by single-step inclusion.
    Breadth,
}

/// The poset `B(N,n)` with its single-step inclusion edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruhatOrder {
    universe: usize,
    n: usize,
    vertices: Vec<ConsistentSet>,
    edges: Vec<(usize, usize, IndexSet)>,
    out: Vec<Vec<usize>>,
}

impl BruhatOrder {
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[ConsistentSet] {
        &self.vertices
    }

    /// Edges `(from, to, label)` sorted by endpoints.
    pub fn edges(&self) -> &[(usize, usize, IndexSet)] {
        &self.edges
    }

    /// Indices into [`BruhatOrder::edges`] leaving vertex `v`.
    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn source(&self) -> usize {
        0
    }

    pub fn sink(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn index_of(&self, u: &ConsistentSet) -> Option<usize> {
        self.vertices.binary_search(u).ok()
    }

    pub fn count_maximal_chains(&self) -> u128 {
        let mut paths = vec![0u128; self.vertices.len()];
        paths[self.sink()] = 1;
        // vertices are sorted by size, so edges always go to larger indices
        for v in (0..self.vertices.len()).rev() {
            for &e in &self.out[v] {
                paths[v] += paths[self.edges[e].1];
            }
        }
        paths[self.source()]
    }

    /// Reassembles an order from sorted vertices and single-step inclusion edges.
    pub fn from_parts(
        universe: usize,
        n: usize,
        vertices: Vec<ConsistentSet>,
        edges: Vec<(usize, usize, IndexSet)>,
    ) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Invariant("an order needs at least one vertex".into()));
        }
        if let Some(u) = vertices.iter().find(|u| u.universe() != universe || u.rank() != n) {
            return Err(Error::RankMismatch { expected: n, found: u.rank() });
        }
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Invariant("vertices must be strictly increasing".into()));
        }
        let mut edges = edges;
        edges.sort();
        edges.dedup();
        let mut out = vec![Vec::new(); vertices.len()];
        for (e, &(from, to, label)) in edges.iter().enumerate() {
            let ok = from < vertices.len()
                && to < vertices.len()
                && !vertices[from].contains(&label)
                && vertices[from].with(label).ok().as_ref() == Some(&vertices[to]);
            if !ok {
                return Err(Error::Invariant(format!(
                    "edge {from}->{to} labelled {label} is not a single step"
                )));
            }
            out[from].push(e);
        }
        Ok(Self { universe, n, vertices, edges, out })
    }
}

pub fn enumerate_bruhat(universe: usize, n: usize) -> Result<BruhatOrder> {
    enumerate_bruhat_with(universe, n, Strategy::Auto, DEFAULT_BUDGET)
}

/// Builds `B(N,n)`, giving up once more than `budget` vertices are needed.
pub fn enumerate_bruhat_with(
    universe: usize,
    n: usize,
    strategy: Strategy,
    budget: usize,
) -> Result<BruhatOrder> {
    if n == 0 || n >= universe {
        return Err(Error::InvalidParameters(format!("B(N,n) needs 1 <= n <= N-1, got N={universe}, n={n}")));
    }
    let space = Space::new(universe, n)?;
    let size = space.upper.len();
    let brute = match strategy {
        Strategy::Auto => size <= BRUTE_FORCE_LIMIT,
        Strategy::BruteForce => true,
        Strategy::Breadth => false,
    };
    let over = || Error::BudgetExceeded(format!("B({universe},{n}) has more than {budget} vertices"));
    let mut found: Vec<Bits> = if brute {
        if size > BRUTE_FORCE_LIMIT {
            return Err(Error::BudgetExceeded(format!(
                "brute force over 2^{size} subsets for B({universe},{n})"
            )));
        }
        let mut out = Vec::new();
        for mask in 0u32..(1u32 << size) {
            let bits = vec![mask as u64];
            if (0..space.tops.len()).all(|t| space.top_ok(&bits, t)) {
                if out.len() == budget {
                    return Err(over());
                }
                out.push(bits);
            }
        }
        out
    } else {
        let mut seen: HashSet<Bits> = HashSet::new();
        let mut level = vec![vec![0u64; space.words()]];
        seen.insert(level[0].clone());
        let mut out = level.clone();
        while !level.is_empty() {
            let mut next = Vec::new();
            for bits in &level {
                for k in 0..size {
                    if bit(bits, k) || !space.can_add(bits, k) {
                        continue;
                    }
                    let mut grown = bits.clone();
                    set_bit(&mut grown, k);
                    if seen.insert(grown.clone()) {
                        if seen.len() > budget {
                            return Err(over());
                        }
                        next.push(grown);
                    }
                }
            }
            out.extend(next.iter().cloned());
            level = next;
        }
        out
    };
    let mut vertices: Vec<(ConsistentSet, Bits)> = found.drain(..).map(|b| (space.set_of(&b), b)).collect();
    vertices.sort_by(|a, b| a.0.cmp(&b.0));
    let index: HashMap<&Bits, usize> = vertices.iter().enumerate().map(|(i, (_, b))| (b, i)).collect();
    let mut edges = Vec::new();
    for (i, (_, bits)) in vertices.iter().enumerate() {
        for k in 0..size {
            if bit(bits, k) {
                continue;
            }
            let mut grown = bits.clone();
            set_bit(&mut grown, k);
            if let Some(&j) = index.get(&grown) {
                edges.push((i, j, space.upper[k]));
            }
        }
    }
    edges.sort();
    let mut out = vec![Vec::new(); vertices.len()];
    for (e, &(from, _, _)) in edges.iter().enumerate() {
        out[from].push(e);
    }
    Ok(BruhatOrder { universe, n, vertices: vertices.into_iter().map(|(u, _)| u).collect(), edges, out })
}

/// All source-to-sink paths, as label sequences.
pub fn maximal_chains(order: &BruhatOrder) -> Vec<Vec<IndexSet>> {
    let mut out = Vec::new();
    let mut labels = Vec::new();
    collect_paths(order, order.source(), &mut labels, &mut out);
    out
}

fn collect_paths(order: &BruhatOrder, v: usize, labels: &mut Vec<IndexSet>, out: &mut Vec<Vec<IndexSet>>) {
    if v == order.sink() {
        out.push(labels.clone());
        return;
    }
    for &e in order.out_edges(v) {
        let (_, to, label) = order.edges[e];
        labels.push(label);
        collect_paths(order, to, labels, out);
        labels.pop();
    }
}

/// Orientation of every packet inside a linear order of `n`-subsets:
/// `Some(true)` for reverse-lexicographic, `Some(false)` for lexicographic.
/// Returns `None` for the first packet that is neither.
fn packet_orientations(seq: &[IndexSet]) -> Result<(usize, usize, Option<Vec<IndexSet>>)> {
    let first = seq.first().ok_or_else(|| Error::NotALinearOrder("empty sequence".into()))?;
    let (universe, n) = (first.universe(), first.len());
    check_rank(universe, n)?;
    let expected = subsets(universe, n)?;
    let mut pos: HashMap<IndexSet, usize> = HashMap::new();
    for (p, x) in seq.iter().enumerate() {
        if x.universe() != universe || x.len() != n {
            return Err(Error::NotALinearOrder(format!("{x:?} has the wrong size or universe")));
        }
        if pos.insert(*x, p).is_some() {
            return Err(Error::NotALinearOrder(format!("{x:?} appears twice")));
        }
    }
    if pos.len() != expected.len() {
        return Err(Error::NotALinearOrder(format!(
            "{} of {} {n}-subsets listed",
            pos.len(),
            expected.len()
        )));
    }
    let mut inversions = Vec::new();
    if n < universe {
        for k in subsets(universe, n + 1)? {
            let p: Vec<usize> = packet(&k)?.iter().map(|x| pos[x]).collect();
            if p.windows(2).all(|w| w[0] < w[1]) {
                continue;
            }
            if p.windows(2).all(|w| w[0] > w[1]) {
                inversions.push(k);
                continue;
            }
            return Ok((universe, n, None));
        }
    }
    Ok((universe, n, Some(inversions)))
}

/// Whether a permutation of all `n`-subsets of `[N]` lists every packet
/// lexicographically or reverse-lexicographically.
pub fn is_admissible(seq: &[IndexSet]) -> Result<bool> {
    Ok(packet_orientations(seq)?.2.is_some())
}

/// An element of `A(N,n)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AdmissibleOrder {
    universe: usize,
    n: usize,
    sequence: Vec<IndexSet>,
    inversions: Vec<IndexSet>,
}

impl AdmissibleOrder {
    pub fn new(seq: &[IndexSet]) -> Result<Self> {
        let (universe, n, inversions) = packet_orientations(seq)?;
        let mut inversions = inversions.ok_or_else(|| {
            let shown: Vec<String> = seq.iter().map(|x| x.label()).collect();
            Error::NotAdmissible(shown.join(","))
        })?;
        inversions.sort();
        Ok(Self { universe, n, sequence: seq.to_vec(), inversions })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn sequence(&self) -> &[IndexSet] {
        &self.sequence
    }
}

impl fmt::Debug for AdmissibleOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self.sequence.iter().map(|x| x.label()).collect();
        write!(f, "({})", shown.join(","))
    }
}

/// The `(n+1)`-sets whose packets appear reverse-lexicographically in `rho`.
pub fn inversion_set(rho: &AdmissibleOrder) -> ConsistentSet {
    ConsistentSet::from_sorted_unchecked(rho.universe, rho.n, rho.inversions.clone())
}

/// Reads the labels of a maximal chain of `B(N,n)` as an element of `A(N,n+1)`.
pub fn chain_to_order(labels: &[IndexSet]) -> Result<AdmissibleOrder> {
    let rho = AdmissibleOrder::new(labels)?;
    if rho.n == 0 {
        return Err(Error::InvalidParameters("chain labels must be nonempty sets".into()));
    }
    let (universe, n) = (rho.universe, rho.n - 1);
    for end in 0..=labels.len() {
        if !is_consistent(&labels[..end], universe, n)? {
            return Err(Error::NotConsistent(format!("prefix of length {end}")));
        }
    }
    Ok(rho)
}

/// The maximal chain of `B(N,n-1)` formed by the prefixes of `rho ∈ A(N,n)`.
pub fn order_to_chain(rho: &AdmissibleOrder) -> Result<Vec<ConsistentSet>> {
    if rho.n == 0 {
        return Err(Error::InvalidParameters("order of empty sets has no chain".into()));
    }
    (0..=rho.sequence.len())
        .map(|end| ConsistentSet::new(rho.universe, rho.n - 1, &rho.sequence[..end]))
        .collect()
}

/// The packet-chain relations defining `Q(U)`: each packet as a chain, reversed
/// for members of `U`.
pub(crate) fn q_relations(u: &ConsistentSet) -> Result<Vec<(IndexSet, IndexSet)>> {
    let mut rel = Vec::new();
    for k in subsets(u.universe, u.n + 1)? {
        let mut chain = packet(&k)?;
        if u.contains(&k) {
            chain.reverse();
        }
        rel.extend(chain.windows(2).map(|w| (w[0], w[1])));
    }
    Ok(rel)
}

/// The poset on `n`-subsets whose linear extensions are the admissible orders
/// with inversion set `U`.
pub fn q_poset(u: &ConsistentSet) -> Result<Poset> {
    let vertices = subsets(u.universe, u.n)?;
    Poset::from_relations(&vertices, &q_relations(u)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(universe: usize, labels: &[&str]) -> Vec<IndexSet> {
        labels.iter().map(|l| IndexSet::parse(universe, l).unwrap()).collect()
    }

    #[test]
    fn consistency_examples() {
        assert!(is_consistent(&sets(3, &["12", "13", "23"]), 3, 1).unwrap());
        assert!(!is_consistent(&sets(3, &["13"]), 3, 1).unwrap());
        assert!(is_consistent(&[], 5, 2).unwrap());
        assert_eq!(is_consistent(&sets(3, &["1"]), 3, 1), Err(Error::RankMismatch { expected: 2, found: 1 }));
    }

    #[test]
    fn small_orders() {
        let b = enumerate_bruhat(3, 1).unwrap();
        assert_eq!(b.vertices().len(), 6);
        assert_eq!(b.edges().len(), 6);
        assert_eq!(enumerate_bruhat(4, 2).unwrap().vertices().len(), 8);
        for n in 3..=8 {
            let b = enumerate_bruhat(n, n - 1).unwrap();
            assert_eq!(b.vertices().len(), 2);
            assert_eq!(maximal_chains(&b), vec![vec![IndexSet::full(n).unwrap()]]);
        }
        assert!(enumerate_bruhat(3, 3).is_err());
    }

    #[test]
    fn strategies_agree() {
        for (n_, n) in [(4, 1), (5, 2), (5, 3), (6, 3), (6, 4)] {
            let a = enumerate_bruhat_with(n_, n, Strategy::BruteForce, DEFAULT_BUDGET).unwrap();
            let b = enumerate_bruhat_with(n_, n, Strategy::Breadth, DEFAULT_BUDGET).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let err = enumerate_bruhat_with(5, 1, Strategy::Breadth, 10).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded(_)));
        assert!(err.to_string().contains("instance exceeds enumeration budget"));
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible(&sets(3, &["1", "2", "3"])).unwrap());
        assert!(is_admissible(&sets(3, &["2", "1", "3"])).unwrap());
        assert!(!is_admissible(&sets(3, &["13", "12", "23"])).unwrap());
        assert!(is_admissible(&sets(4, &["12", "13", "14", "23", "24", "34"])).unwrap());
        assert!(matches!(is_admissible(&sets(3, &["1", "2"])), Err(Error::NotALinearOrder(_))));
        assert!(matches!(AdmissibleOrder::new(&sets(3, &["13", "12", "23"])), Err(Error::NotAdmissible(_))));
    }

    #[test]
    fn inversion_examples() {
        let lex = AdmissibleOrder::new(&sets(3, &["1", "2", "3"])).unwrap();
        assert!(inversion_set(&lex).is_empty());
        let rev = AdmissibleOrder::new(&sets(3, &["3", "2", "1"])).unwrap();
        assert_eq!(inversion_set(&rev).members(), &sets(3, &["12", "13", "23"])[..]);
        let rev = AdmissibleOrder::new(&sets(3, &["23", "13", "12"])).unwrap();
        assert_eq!(inversion_set(&rev).members(), &sets(3, &["123"])[..]);
        let rho = AdmissibleOrder::new(&sets(4, &["12", "13", "23", "14", "24", "34"])).unwrap();
        assert!(inversion_set(&rho).is_empty());
    }

    #[test]
    fn q_poset_of_empty_set() {
        let u = ConsistentSet::empty(4, 2).unwrap();
        let q = q_poset(&u).unwrap();
        let expected: Vec<(IndexSet, IndexSet)> =
            [("12", "13"), ("13", "14"), ("13", "23"), ("14", "24"), ("23", "24"), ("24", "34")]
                .iter()
                .map(|(a, b)| (IndexSet::parse(4, a).unwrap(), IndexSet::parse(4, b).unwrap()))
                .collect();
        let mut got = q.covers();
        got.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn q_poset_examples() {
        let u = ConsistentSet::new(4, 2, &sets(4, &["123", "124"])).unwrap();
        assert_eq!(q_poset(&u).unwrap().count_linear_extensions(), 4);
        let full = ConsistentSet::full(3, 1).unwrap();
        let q = q_poset(&full).unwrap();
        assert!(q.is_chain());
        assert!(q.is_linear_extension(&sets(3, &["3", "2", "1"])));
    }

    #[test]
    fn chain_bijection_examples() {
        let labels = sets(4, &["12", "13", "23", "14", "24", "34"]);
        let rho = chain_to_order(&labels).unwrap();
        let chain = order_to_chain(&rho).unwrap();
        assert_eq!(chain.len(), 7);
        let b = enumerate_bruhat(4, 1).unwrap();
        assert!(maximal_chains(&b).contains(&labels));
        let round: Vec<IndexSet> = chain
            .windows(2)
            .map(|w| w[1].members().iter().find(|k| !w[0].contains(k)).copied().unwrap())
            .collect();
        assert_eq!(round, labels);
        let left = sets(4, &["123", "124", "134", "234"]);
        let b42 = enumerate_bruhat(4, 2).unwrap();
        assert!(maximal_chains(&b42).contains(&left));
        assert!(chain_to_order(&sets(4, &["13", "12", "23", "14", "24", "34"])).is_err());
    }

    #[test]
    fn complement_stays_consistent() {
        let b = enumerate_bruhat(5, 2).unwrap();
        for u in b.vertices() {
            assert!(b.index_of(&u.complement()).is_some());
        }
    }
}
