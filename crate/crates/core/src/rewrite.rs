//! Words in the monoids generated by `R_I` (Bruhat) or `T_I` (Tamari).
//!
//! A word at level `n` mixes low generators (`|I| = n`) and high generators
//! (`|K| = n+1`). Two generators commute when
//!
//! * both have the same size `k` and their union has more than `k+1` elements, or
//! * one is low `I`, the other high `K`, and `I ⊄ K`.
//!
//! The polygonal rule for `K` replaces a product of low generators indexed by
//! part of the packet of `K` by `R_K` followed by another such product. For
//! Bruhat words the whole packet is reversed; for Tamari words only the sets
//! `K∖{k}` with `k ∈ K_>` appear on the left and those with `k ∈ K_<` on the right.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::rc::Rc;

use crate::bruhat::is_admissible;
use crate::error::{Error, Result};
use crate::setcalc::{packet, split_side, subsets, IndexSet, Side};
use crate::tamari::is_nonvisible;
use crate::ConsistentSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    Low,
    High,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub level: Level,
    pub index: IndexSet,
}

impl Generator {
    pub fn low(index: IndexSet) -> Self {
        Self { level: Level::Low, index }
    }

    pub fn high(index: IndexSet) -> Self {
        Self { level: Level::High, index }
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleSet {
    Bruhat,
    Tamari,
}

/// Whether two generators may be swapped when adjacent.
pub fn commutes(a: &Generator, b: &Generator) -> bool {
    let (x, y) = (&a.index, &b.index);
    if x.len() == y.len() {
        x.union(y).len() > x.len() + 1
    } else {
        let (small, big) = if x.len() < y.len() { (x, y) } else { (y, x) };
        !small.is_subset(big)
    }
}

/// Left-hand side of the polygonal rule for `K`, as low indices in order.
pub fn rule_lhs(k: &IndexSet, rules: RuleSet) -> Result<Vec<IndexSet>> {
    side_factors(k, rules, Side::Greater, false)
}

/// Low factors following `K` on the right-hand side of the polygonal rule.
pub fn rule_rhs(k: &IndexSet, rules: RuleSet) -> Result<Vec<IndexSet>> {
    side_factors(k, rules, Side::Less, true)
}

fn side_factors(k: &IndexSet, rules: RuleSet, side: Side, reverse: bool) -> Result<Vec<IndexSet>> {
    let mut members = packet(k)?;
    if reverse {
        members.reverse();
    }
    if rules == RuleSet::Bruhat {
        return Ok(members);
    }
    let mut out = Vec::new();
    for m in members {
        let removed = k.single_difference(&m).expect("packet member");
        if split_side(k, removed)? == side {
            out.push(m);
        }
    }
    Ok(out)
}

/// The two sides `U ∪ {K∖{k} : k ∈ K_>}` (lexicographic) and
/// `U ∪ {K∖{k} : k ∈ K_<}` (reverse lexicographic) of the polygonal identification.
pub fn tamari_polygonal_identity(u: &[IndexSet], k: &IndexSet) -> Result<(Vec<IndexSet>, Vec<IndexSet>)> {
    let mut left = u.to_vec();
    left.extend(rule_lhs(k, RuleSet::Tamari)?);
    let mut right = u.to_vec();
    right.extend(rule_rhs(k, RuleSet::Tamari)?);
    Ok((left, right))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    universe: usize,
    n: usize,
    rules: RuleSet,
    factors: Vec<Generator>,
}

impl Word {
    pub fn new(universe: usize, n: usize, rules: RuleSet, factors: Vec<Generator>) -> Result<Self> {
        if n == 0 || n >= universe {
            return Err(Error::InvalidParameters(format!(
                "words need 1 <= n <= N-1, got N={universe}, n={n}"
            )));
        }
        for g in &factors {
            let want = match g.level {
                Level::Low => n,
                Level::High => n + 1,
            };
            if g.index.len() != want {
                return Err(Error::RankMismatch { expected: want, found: g.index.len() });
            }
            if g.index.universe() != universe {
                return Err(Error::InvalidIndexSet(format!("{:?} is not in [{universe}]", g.index)));
            }
        }
        Ok(Self { universe, n, rules, factors })
    }

    /// A word of low generators.
    pub fn low(universe: usize, n: usize, rules: RuleSet, indices: &[IndexSet]) -> Result<Self> {
        Self::new(universe, n, rules, indices.iter().map(|&i| Generator::low(i)).collect())
    }

    /// The product of all `n`-subsets in lexicographic order (Bruhat), or of the
    /// `n`-subsets visible at the empty set (Tamari).
    pub fn canonical(universe: usize, n: usize, rules: RuleSet) -> Result<Self> {
        let all = subsets(universe, n)?;
        let indices: Vec<IndexSet> = match rules {
            RuleSet::Bruhat => all,
            RuleSet::Tamari => {
                let empty = ConsistentSet::empty(universe, n)?;
                let mut kept = Vec::new();
                for i in all {
                    if !is_nonvisible(&i, &empty)? {
                        kept.push(i);
                    }
                }
                kept
            }
        };
        Self::low(universe, n, rules, &indices)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn rules(&self) -> RuleSet {
        self.rules
    }

    pub fn factors(&self) -> &[Generator] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Indices of the high generators, left to right.
    pub fn high_sequence(&self) -> Vec<IndexSet> {
        self.factors.iter().filter(|g| g.level == Level::High).map(|g| g.index).collect()
    }

    /// Indices of the low generators, left to right.
    pub fn low_sequence(&self) -> Vec<IndexSet> {
        self.factors.iter().filter(|g| g.level == Level::Low).map(|g| g.index).collect()
    }

    fn symbol(&self, g: &Generator) -> &'static str {
        match self.rules {
            RuleSet::Bruhat => "R",
            RuleSet::Tamari => match g.index.len() {
                1 => "Θ",
                2 => "X",
                3 => "Y",
                5 => "S",
                _ => "T",
            },
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.factors.iter().map(|g| format!("{}{}", self.symbol(g), g.index)).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A single rewriting step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Swap the commuting factors at `pos` and `pos + 1`.
    Commute,
    /// Replace the left-hand side for `K` starting at `pos`.
    Polygonal(IndexSet),
}

/// Applies `rule` at `pos`.
pub fn apply(w: &Word, pos: usize, rule: Rule) -> Result<Word> {
    let f = &w.factors;
    match rule {
        Rule::Commute => {
            if pos + 1 >= f.len() {
                return Err(Error::RuleNotApplicable(format!("no pair at position {pos}")));
            }
            if !commutes(&f[pos], &f[pos + 1]) {
                return Err(Error::RuleNotApplicable(format!(
                    "{:?} and {:?} do not commute",
                    f[pos],
                    f[pos + 1]
                )));
            }
            let mut out = w.clone();
            out.factors.swap(pos, pos + 1);
            Ok(out)
        }
        Rule::Polygonal(k) => {
            if k.len() != w.n + 1 || k.universe() != w.universe {
                return Err(Error::RuleNotApplicable(format!("{k:?} is not a high index")));
            }
            let lhs = rule_lhs(&k, w.rules)?;
            let matches = pos + lhs.len() <= f.len()
                && lhs.iter().zip(&f[pos..]).all(|(i, g)| g.level == Level::Low && g.index == *i);
            if !matches {
                return Err(Error::RuleNotApplicable(format!(
                    "left-hand side of the rule for {k} not found at position {pos}"
                )));
            }
            let mut out = w.clone();
            let mut replacement = vec![Generator::high(k)];
            replacement.extend(rule_rhs(&k, w.rules)?.into_iter().map(Generator::low));
            out.factors.splice(pos..pos + lhs.len(), replacement);
            Ok(out)
        }
    }
}

/// Applies the polygonal rule whose left-hand side starts at `pos`, or else
/// swaps the commuting pair at `pos`.
pub fn apply_rule(w: &Word, pos: usize) -> Result<Word> {
    let f = &w.factors;
    if pos >= f.len() {
        return Err(Error::RuleNotApplicable(format!("position {pos} is past the end")));
    }
    let mut found = Vec::new();
    for k in subsets(w.universe, w.n + 1)? {
        let lhs = rule_lhs(&k, w.rules)?;
        if lhs.first() == Some(&f[pos].index) && apply(w, pos, Rule::Polygonal(k)).is_ok() {
            found.push(k);
        }
    }
    match found.len() {
        1 => apply(w, pos, Rule::Polygonal(found[0])),
        0 => apply(w, pos, Rule::Commute)
            .map_err(|_| Error::RuleNotApplicable(format!("no rule matches at position {pos} of {w}"))),
        _ => Err(Error::RuleNotApplicable(format!(
            "ambiguous: rules for {} all match at position {pos}",
            found.iter().map(|k| k.label()).collect::<Vec<_>>().join(", ")
        ))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Step {
    pub rule: Rule,
    pub position: usize,
}

impl Step {
    pub fn emitted(&self) -> Option<IndexSet> {
        match self.rule {
            Rule::Polygonal(k) => Some(k),
            Rule::Commute => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteTrace {
    pub initial: Word,
    pub steps: Vec<Step>,
    pub final_word: Word,
}

impl RewriteTrace {
    /// High generators in emission order.
    pub fn emitted(&self) -> Vec<IndexSet> {
        self.steps.iter().filter_map(|s| s.emitted()).collect()
    }

    /// Reapplies every step to the initial word.
    pub fn replay(&self) -> Result<Word> {
        self.steps.iter().try_fold(self.initial.clone(), |w, s| apply(&w, s.position, s.rule))
    }
}

/// Which applicable polygonal rule [`normalize_with`] picks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// The left-hand side starting furthest left.
    Leftmost,
    /// The left-hand side ending furthest right.
    Rightmost,
}

/// A way to make the left-hand side for `k` contiguous inside a low word.
struct Gather {
    k: IndexSet,
    first: usize,
    last: usize,
    /// New order of the low word, as old positions.
    order: Vec<usize>,
    block: usize,
}

/// Finds the factors of `lhs` in order and moves the factors between them out
/// of the way, to the left when they commute with every block factor before
/// them and every factor already sent right, to the right otherwise.
fn gather(word: &[Generator], lhs: &[IndexSet], k: IndexSet) -> Option<Gather> {
    let mut positions = Vec::with_capacity(lhs.len());
    let mut from = 0;
    for i in lhs {
        let at = from + word[from..].iter().position(|g| g.index == *i)?;
        positions.push(at);
        from = at + 1;
    }
    let (first, last) = (positions[0], *positions.last()?);
    let mut left = Vec::new();
    let mut right: Vec<usize> = Vec::new();
    let mut next_block = 0;
    for at in first..=last {
        if positions[next_block] == at {
            next_block += 1;
            continue;
        }
        let g = &word[at];
        let blocked = positions[..next_block].iter().any(|&b| !commutes(g, &word[b]))
            || right.iter().any(|&r| !commutes(g, &word[r]));
        if blocked {
            if positions[next_block..].iter().any(|&b| !commutes(g, &word[b])) {
                return None;
            }
            right.push(at);
        } else {
            left.push(at);
        }
    }
    let mut order: Vec<usize> = (0..first).collect();
    order.extend(&left);
    let block = order.len();
    order.extend(&positions);
    order.extend(&right);
    order.extend(last + 1..word.len());
    Some(Gather { k, first, last, order, block })
}

fn gathers(word: &[Generator], universe: usize, n: usize, rules: RuleSet) -> Vec<Gather> {
    let mut out = Vec::new();
    for k in subsets(universe, n + 1).unwrap_or_default() {
        let lhs = rule_lhs(&k, rules).expect("high index");
        if let Some(g) = gather(word, &lhs, k) {
            out.push(g);
        }
    }
    out
}

/// Adjacent swaps turning `word` into `word` permuted by `order`, applied in place.
fn bubble(word: &mut [Generator], order: &[usize], offset: usize, steps: &mut Vec<Step>) -> Result<()> {
    let mut rank = vec![0usize; order.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let mut current: Vec<usize> = (0..word.len()).map(|i| rank[i]).collect();
    let mut swapped = true;
    while swapped {
        swapped = false;
        for i in 0..current.len().saturating_sub(1) {
            if current[i] > current[i + 1] {
                if !commutes(&word[i], &word[i + 1]) {
                    return Err(Error::Invariant(format!(
                        "reordering swaps non-commuting {:?} and {:?}",
                        word[i],
                        word[i + 1]
                    )));
                }
                current.swap(i, i + 1);
                word.swap(i, i + 1);
                steps.push(Step { rule: Rule::Commute, position: offset + i });
                swapped = true;
            }
        }
    }
    Ok(())
}

/// Lexicographically least word equivalent to `word` under commutation.
pub fn canonical_form(word: &[Generator]) -> Vec<Generator> {
    let mut rest: Vec<Generator> = word.to_vec();
    let mut out = Vec::with_capacity(word.len());
    while !rest.is_empty() {
        let pick = (0..rest.len())
            .filter(|&i| rest[..i].iter().all(|g| commutes(g, &rest[i])))
            .min_by_key(|&i| rest[i])
            .expect("the first factor is always free");
        out.push(rest.remove(pick));
    }
    out
}

/// Reorders `word` into its canonical form with recorded swaps.
fn canonicalize(word: &mut [Generator], offset: usize, steps: &mut Vec<Step>) -> Result<()> {
    let target = canonical_form(word);
    let mut used = vec![false; word.len()];
    let order: Vec<usize> = target
        .iter()
        .map(|g| {
            let at = (0..word.len()).find(|&i| !used[i] && word[i] == *g).expect("same factors");
            used[at] = true;
            at
        })
        .collect();
    bubble(word, &order, offset, steps)
}

pub fn normalize(w: &Word) -> Result<RewriteTrace> {
    normalize_with(w, Strategy::Leftmost)
}

/// Applies polygonal rules until none applies. Each emitted high generator is
/// moved to the front behind the earlier ones; the remaining low word is
/// finally put into canonical form.
pub fn normalize_with(w: &Word, strategy: Strategy) -> Result<RewriteTrace> {
    if w.factors.iter().any(|g| g.level == Level::High) {
        return Err(Error::InvalidParameters("normalization starts from a low word".into()));
    }
    let guard = subsets(w.universe, w.n + 1)?.len() + 1;
    let mut steps = Vec::new();
    let mut factors = w.factors.clone();
    let mut high = 0usize;
    loop {
        let candidates = gathers(&factors[high..], w.universe, w.n, w.rules);
        let chosen = match strategy {
            Strategy::Leftmost => candidates.into_iter().min_by_key(|g| (g.first, g.last, g.k)),
            Strategy::Rightmost => candidates
                .into_iter()
                .min_by_key(|g| (std::cmp::Reverse(g.last), std::cmp::Reverse(g.first), g.k)),
        };
        let Some(g) = chosen else { break };
        if high == guard {
            return Err(Error::Invariant(format!("normalization exceeded {guard} rule applications")));
        }
        bubble(&mut factors[high..], &g.order, high, &mut steps)?;
        let at = high + g.block;
        let current = Word { factors: factors.clone(), ..w.clone() };
        factors = apply(&current, at, Rule::Polygonal(g.k))?.factors;
        steps.push(Step { rule: Rule::Polygonal(g.k), position: at });
        for p in (high..at).rev() {
            if !commutes(&factors[p], &factors[p + 1]) {
                return Err(Error::Invariant(format!("emitted {} cannot pass {:?}", g.k, factors[p])));
            }
            factors.swap(p, p + 1);
            steps.push(Step { rule: Rule::Commute, position: p });
        }
        high += 1;
    }
    canonicalize(&mut factors[high..], high, &mut steps)?;
    let final_word = Word { factors, ..w.clone() };
    Ok(RewriteTrace { initial: w.clone(), steps, final_word })
}

/// Result of replacing the gathered left-hand side by the right-hand side.
fn rewrite_tail(tail: &[Generator], g: &Gather, rules: RuleSet, emit: bool) -> Vec<Generator> {
    let ordered: Vec<Generator> = g.order.iter().map(|&i| tail[i]).collect();
    let lhs_len = rule_lhs(&g.k, rules).expect("high index").len();
    let mut out: Vec<Generator> = ordered[..g.block].to_vec();
    if emit {
        out.push(Generator::high(g.k));
    }
    let level = ordered[g.block].level;
    out.extend(
        rule_rhs(&g.k, rules).expect("high index").into_iter().map(|index| Generator { level, index }),
    );
    out.extend_from_slice(&ordered[g.block + lhs_len..]);
    out
}

type Completions = Rc<(Vec<Vec<IndexSet>>, BTreeSet<Vec<Generator>>)>;

struct Explorer {
    universe: usize,
    n: usize,
    rules: RuleSet,
    budget: usize,
    memo: HashMap<Vec<Generator>, Completions>,
}

impl Explorer {
    /// All emitted sequences and final canonical tails reachable from `tail`.
    fn explore(&mut self, tail: Vec<Generator>) -> Result<Completions> {
        let tail = canonical_form(&tail);
        if let Some(done) = self.memo.get(&tail) {
            return Ok(done.clone());
        }
        let candidates = gathers(&tail, self.universe, self.n, self.rules);
        let mut chains = Vec::new();
        let mut finals = BTreeSet::new();
        if candidates.is_empty() {
            chains.push(Vec::new());
            finals.insert(tail.clone());
        }
        for g in candidates {
            let next = rewrite_tail(&tail, &g, self.rules, false);
            let sub = self.explore(next)?;
            for c in &sub.0 {
                let mut chain = vec![g.k];
                chain.extend(c);
                chains.push(chain);
                if chains.len() > self.budget {
                    return Err(Error::SearchBudgetExceeded { found: chains.len() });
                }
            }
            finals.extend(sub.1.iter().cloned());
        }
        chains.sort();
        chains.dedup();
        let done = Rc::new((chains, finals));
        self.memo.insert(tail, done.clone());
        Ok(done)
    }
}

/// Default cap on the number of chains collected by [`derive_chains`].
pub const DEFAULT_CHAIN_BUDGET: usize = 1_000_000;

/// Every sequence of high generators produced by some order of polygonal
/// rewrites of the canonical word, sorted.
pub fn derive_chains(universe: usize, n: usize, rules: RuleSet, budget: usize) -> Result<Vec<Vec<IndexSet>>> {
    let start = Word::canonical(universe, n, rules)?;
    let mut ex = Explorer { universe, n, rules, budget, memo: HashMap::new() };
    let found = ex.explore(start.factors)?;
    Ok(found.0.clone())
}

/// Outcome of exhaustively rewriting the canonical word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub universe: usize,
    pub n: usize,
    pub rules: RuleSet,
    /// Number of distinct high sequences.
    pub chains: usize,
    /// Distinct final low words in canonical form.
    pub final_words: Vec<Word>,
    /// High sequences of the leftmost and rightmost strategies.
    pub extremal: (Vec<IndexSet>, Vec<IndexSet>),
    /// All high sequences are linked by the next level's rules.
    pub connected: bool,
    /// First violated expectation, if any.
    pub counterexample: Option<String>,
}

impl ConsistencyReport {
    pub fn is_consistent(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Rewrites the canonical word at `(N, n)` in every possible order and checks
/// that all routes end in the same low word, and that the high sequences are
/// all related by the commutation and polygonal rules one level up.
pub fn check_simplex_consistency(
    universe: usize,
    n: usize,
    rules: RuleSet,
    budget: usize,
) -> Result<ConsistencyReport> {
    let start = Word::canonical(universe, n, rules)?;
    let mut ex = Explorer { universe, n, rules, budget, memo: HashMap::new() };
    let found = ex.explore(start.factors.clone())?;
    let (chains, finals) = (&found.0, &found.1);
    let left = normalize_with(&start, Strategy::Leftmost)?;
    let right = normalize_with(&start, Strategy::Rightmost)?;
    let final_words: Vec<Word> =
        finals.iter().map(|f| Word { factors: f.clone(), ..start.clone() }).collect();
    let mut counterexample = None;
    if final_words.len() != 1 {
        counterexample = Some(format!(
            "{} distinct final words: {}",
            final_words.len(),
            final_words.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" | ")
        ));
    }
    if rules == RuleSet::Bruhat && counterexample.is_none() {
        let total = subsets(universe, n + 1)?.len();
        for c in chains {
            if c.len() != total || !is_admissible(c)? {
                counterexample = Some(format!("high sequence {} is not admissible", show(c)));
                break;
            }
        }
    }
    let connected = chains_connected(chains, universe, n + 1, rules);
    if !connected && counterexample.is_none() {
        counterexample = Some("high sequences fall into several classes".into());
    }
    Ok(ConsistencyReport {
        universe,
        n,
        rules,
        chains: chains.len(),
        final_words,
        extremal: (left.emitted(), right.emitted()),
        connected,
        counterexample,
    })
}

fn show(seq: &[IndexSet]) -> String {
    seq.iter().map(|k| k.label()).collect::<Vec<_>>().join(",")
}

/// Whether the sequences form one class under commutation and the polygonal
/// rules (without emission) at level `level`.
fn chains_connected(chains: &[Vec<IndexSet>], universe: usize, level: usize, rules: RuleSet) -> bool {
    if chains.len() <= 1 {
        return true;
    }
    let as_word =
        |c: &Vec<IndexSet>| canonical_form(&c.iter().map(|&k| Generator::low(k)).collect::<Vec<_>>());
    let nodes: HashSet<Vec<Generator>> = chains.iter().map(as_word).collect();
    if level + 1 > universe {
        return nodes.len() == 1;
    }
    let mut adjacent: HashMap<Vec<Generator>, Vec<Vec<Generator>>> = HashMap::new();
    for node in &nodes {
        for g in gathers(node, universe, level, rules) {
            let next = canonical_form(&rewrite_tail(node, &g, rules, false));
            if nodes.contains(&next) {
                adjacent.entry(node.clone()).or_default().push(next.clone());
                adjacent.entry(next).or_default().push(node.clone());
            }
        }
    }
    let start = nodes.iter().next().expect("nonempty").clone();
    let mut seen: HashSet<Vec<Generator>> = HashSet::new();
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        if !seen.insert(v.clone()) {
            continue;
        }
        for w in adjacent.get(&v).into_iter().flatten() {
            if !seen.contains(w) {
                queue.push_back(w.clone());
            }
        }
    }
    seen.len() == nodes.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(universe: usize, labels: &[&str]) -> Vec<IndexSet> {
        labels.iter().map(|l| IndexSet::parse(universe, l).unwrap()).collect()
    }

    fn labels(seq: &[IndexSet]) -> Vec<String> {
        seq.iter().map(|k| k.label()).collect()
    }

    #[test]
    fn single_rules() {
        let w = Word::low(2, 1, RuleSet::Bruhat, &sets(2, &["1", "2"])).unwrap();
        assert_eq!(apply_rule(&w, 0).unwrap().to_string(), "R12 R2 R1");
        let w = Word::low(3, 2, RuleSet::Tamari, &sets(3, &["12", "23"])).unwrap();
        assert_eq!(apply_rule(&w, 0).unwrap().to_string(), "Y123 X13");
        let w = Word::low(4, 3, RuleSet::Tamari, &sets(4, &["123", "134"])).unwrap();
        assert_eq!(apply_rule(&w, 0).unwrap().to_string(), "T1234 Y234 Y124");
        let w = Word::low(3, 1, RuleSet::Tamari, &sets(3, &["1"])).unwrap();
        assert!(matches!(apply_rule(&w, 0), Err(Error::RuleNotApplicable(_))));
        let w = Word::low(4, 2, RuleSet::Bruhat, &sets(4, &["12", "34"])).unwrap();
        assert_eq!(apply_rule(&w, 0).unwrap().to_string(), "R34 R12");
        let w = Word::low(4, 2, RuleSet::Bruhat, &sets(4, &["12", "13"])).unwrap();
        assert!(apply_rule(&w, 0).is_err());
    }

    #[test]
    fn normalize_four_letters() {
        let w = Word::canonical(4, 1, RuleSet::Bruhat).unwrap();
        let trace = normalize(&w).unwrap();
        assert_eq!(labels(&trace.emitted()), ["12", "13", "23", "14", "24", "34"]);
        assert_eq!(labels(&trace.final_word.low_sequence()), ["4", "3", "2", "1"]);
        assert_eq!(trace.replay().unwrap(), trace.final_word);
    }

    #[test]
    fn two_strategies_at_rank_two() {
        let w = Word::low(4, 2, RuleSet::Bruhat, &sets(4, &["12", "13", "23", "14", "24", "34"])).unwrap();
        let left = normalize_with(&w, Strategy::Leftmost).unwrap();
        let right = normalize_with(&w, Strategy::Rightmost).unwrap();
        assert_eq!(labels(&left.emitted()), ["123", "124", "134", "234"]);
        assert_eq!(labels(&right.emitted()), ["234", "134", "124", "123"]);
        assert_eq!(left.final_word.low_sequence(), right.final_word.low_sequence());
    }

    #[test]
    fn left_association_to_fan() {
        let w = Word::canonical(6, 2, RuleSet::Tamari).unwrap();
        assert_eq!(w.to_string(), "X12 X23 X34 X45 X56");
        let trace = normalize(&w).unwrap();
        assert_eq!(trace.final_word.to_string(), "Y123 Y134 Y145 Y156 X16");
    }

    #[test]
    fn polygonal_identities() {
        let (l, r) = tamari_polygonal_identity(&[], &IndexSet::parse(4, "1234").unwrap()).unwrap();
        assert_eq!(labels(&l), ["123", "134"]);
        assert_eq!(labels(&r), ["234", "124"]);
        let (l, r) = tamari_polygonal_identity(&[], &IndexSet::parse(5, "12345").unwrap()).unwrap();
        assert_eq!(labels(&l), ["1234", "1245", "2345"]);
        assert_eq!(labels(&r), ["1345", "1235"]);
        let (l, r) = tamari_polygonal_identity(&[], &IndexSet::parse(3, "123").unwrap()).unwrap();
        assert_eq!(labels(&l), ["12", "23"]);
        assert_eq!(labels(&r), ["13"]);
    }

    #[test]
    fn pentagon_chains() {
        let chains = derive_chains(5, 3, RuleSet::Tamari, 100).unwrap();
        let shown: Vec<Vec<String>> = chains.iter().map(|c| labels(c)).collect();
        assert_eq!(shown, vec![vec!["1234", "1245", "2345"], vec!["1345", "1235"]]);
    }

    #[test]
    fn consistency_small() {
        let r = check_simplex_consistency(3, 1, RuleSet::Bruhat, 1000).unwrap();
        assert!(r.is_consistent(), "{r:?}");
        assert_eq!(labels(&r.extremal.0), ["12", "13", "23"]);
        assert_eq!(labels(&r.extremal.1), ["23", "13", "12"]);
        let r = check_simplex_consistency(4, 2, RuleSet::Bruhat, 1000).unwrap();
        assert!(r.is_consistent(), "{r:?}");
        assert_eq!(r.chains, 2);
        let r = check_simplex_consistency(5, 3, RuleSet::Tamari, 1000).unwrap();
        assert!(r.is_consistent(), "{r:?}");
    }

    #[test]
    fn budget_reports_partial_count() {
        let err = derive_chains(5, 1, RuleSet::Bruhat, 3).unwrap_err();
        assert!(matches!(err, Error::SearchBudgetExceeded { found } if found > 3));
    }
}
