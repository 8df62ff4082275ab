//! Finite posets on index sets, kept in canonical Hasse-diagram form.
//!
//! A [`Poset`] stores its vertices sorted and its covers as sorted index
//! pairs. Two posets are equal exactly when their Hasse diagrams coincide, so
//! the derived `Eq` and `Hash` serve as structural keys.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::setcalc::IndexSet;

/// Square bit matrix, row `i` holding the successors of `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BitMatrix {
    size: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub(crate) fn new(size: usize) -> Self {
        let words = size.div_ceil(64).max(1);
        Self { size, words, data: vec![0; size * words] }
    }

    pub(crate) fn set(&mut self, i: usize, j: usize) {
        self.data[i * self.words + j / 64] |= 1 << (j % 64);
    }

    pub(crate) fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.words + j / 64] & (1 << (j % 64)) != 0
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    fn row_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i).iter().enumerate().flat_map(|(w, &bits)| {
            let mut bits = bits;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + b)
            })
        })
    }

    /// Replaces the relation by its transitive closure.
    pub(crate) fn close(&mut self) {
        let w = self.words;
        for k in 0..self.size {
            let (kw, kb) = (k / 64, 1u64 << (k % 64));
            let row_k: Vec<u64> = self.row(k).to_vec();
            for i in 0..self.size {
                if self.data[i * w + kw] & kb != 0 {
                    for (d, s) in self.data[i * w..(i + 1) * w].iter_mut().zip(&row_k) {
                        *d |= s;
                    }
                }
            }
        }
    }

    /// Covers of a transitively closed acyclic relation.
    pub(crate) fn reduction(&self) -> Vec<(usize, usize)> {
        let mut covers = Vec::new();
        let mut implied = vec![0u64; self.words];
        for i in 0..self.size {
            implied.iter_mut().for_each(|x| *x = 0);
            for k in self.row_ones(i) {
                for (d, s) in implied.iter_mut().zip(self.row(k)) {
                    *d |= s;
                }
            }
            for j in self.row_ones(i) {
                if implied[j / 64] & (1 << (j % 64)) == 0 {
                    covers.push((i, j));
                }
            }
        }
        covers
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poset {
    vertices: Vec<IndexSet>,
    covers: Vec<(usize, usize)>,
}

impl Poset {
    pub fn empty() -> Self {
        Self { vertices: Vec::new(), covers: Vec::new() }
    }

    /// Order generated by `relations` (each pair `a < b`) on `vertices`.
    /// Duplicate vertices are merged; relations must mention listed vertices only.
    pub fn from_relations(vertices: &[IndexSet], relations: &[(IndexSet, IndexSet)]) -> Result<Self> {
        let mut vertices = vertices.to_vec();
        vertices.sort();
        vertices.dedup();
        let mut m = BitMatrix::new(vertices.len());
        let find = |x: &IndexSet| {
            vertices
                .binary_search(x)
                .map_err(|_| Error::InvalidIndexSet(format!("{x:?} is not a vertex of the poset")))
        };
        for (a, b) in relations {
            let (i, j) = (find(a)?, find(b)?);
            if i == j {
                return Err(Error::Cyclic(a.label()));
            }
            m.set(i, j);
        }
        Self::from_matrix(vertices, m)
    }

    /// The chain `seq[0] < seq[1] < ...`.
    pub fn chain(seq: &[IndexSet]) -> Result<Self> {
        let rel: Vec<_> = seq.windows(2).map(|w| (w[0], w[1])).collect();
        let p = Self::from_relations(seq, &rel)?;
        if p.len() != seq.len() {
            return Err(Error::NotALinearOrder("repeated element".into()));
        }
        Ok(p)
    }

    fn from_matrix(vertices: Vec<IndexSet>, mut m: BitMatrix) -> Result<Self> {
        m.close();
        if let Some(i) = (0..vertices.len()).find(|&i| m.get(i, i)) {
            return Err(Error::Cyclic(vertices[i].label()));
        }
        let mut covers = m.reduction();
        covers.sort();
        Ok(Self { vertices, covers })
    }

    /// Builds directly from canonical parts, validating them.
    pub fn from_parts(vertices: Vec<IndexSet>, covers: &[(IndexSet, IndexSet)]) -> Result<Self> {
        let p = Self::from_relations(&vertices, covers)?;
        if p.len() != vertices.len() || p.covers.len() != covers.len() {
            return Err(Error::Invariant("cover list is not a transitive reduction".into()));
        }
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[IndexSet] {
        &self.vertices
    }

    pub fn cover_indices(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn covers(&self) -> Vec<(IndexSet, IndexSet)> {
        self.covers.iter().map(|&(i, j)| (self.vertices[i], self.vertices[j])).collect()
    }

    pub fn index_of(&self, x: &IndexSet) -> Option<usize> {
        self.vertices.binary_search(x).ok()
    }

    pub fn contains(&self, x: &IndexSet) -> bool {
        self.index_of(x).is_some()
    }

    pub(crate) fn closure(&self) -> BitMatrix {
        let mut m = BitMatrix::new(self.len());
        for &(i, j) in &self.covers {
            m.set(i, j);
        }
        m.close();
        m
    }

    /// Strict comparison `a < b`.
    pub fn less(&self, a: &IndexSet, b: &IndexSet) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => i != j && self.closure().get(i, j),
            _ => false,
        }
    }

    /// Induced subposet on the vertices accepted by `keep`.
    pub fn restrict(&self, keep: impl Fn(&IndexSet) -> bool) -> Self {
        let full = self.closure();
        let kept: Vec<usize> = (0..self.len()).filter(|&i| keep(&self.vertices[i])).collect();
        let mut m = BitMatrix::new(kept.len());
        for (a, &i) in kept.iter().enumerate() {
            for (b, &j) in kept.iter().enumerate() {
                if full.get(i, j) {
                    m.set(a, b);
                }
            }
        }
        let vertices = kept.iter().map(|&i| self.vertices[i]).collect();
        // closure of an induced order is already closed and acyclic
        let mut covers = m.reduction();
        covers.sort();
        Self { vertices, covers }
    }

    pub fn minimal_elements(&self) -> Vec<IndexSet> {
        let mut has_pred = vec![false; self.len()];
        for &(_, j) in &self.covers {
            has_pred[j] = true;
        }
        (0..self.len()).filter(|&i| !has_pred[i]).map(|i| self.vertices[i]).collect()
    }

    pub fn maximal_elements(&self) -> Vec<IndexSet> {
        let mut has_succ = vec![false; self.len()];
        for &(i, _) in &self.covers {
            has_succ[i] = true;
        }
        (0..self.len()).filter(|&i| !has_succ[i]).map(|i| self.vertices[i]).collect()
    }

    pub fn is_chain(&self) -> bool {
        self.len() <= 1
            || (self.covers.len() + 1 == self.len()
                && self.minimal_elements().len() == 1
                && self.maximal_elements().len() == 1)
    }

    /// True if `seq` lists every vertex once and respects the order.
    pub fn is_linear_extension(&self, seq: &[IndexSet]) -> bool {
        if seq.len() != self.len() {
            return false;
        }
        let mut pos = vec![usize::MAX; self.len()];
        for (p, x) in seq.iter().enumerate() {
            match self.index_of(x) {
                Some(i) if pos[i] == usize::MAX => pos[i] = p,
                _ => return false,
            }
        }
        self.covers.iter().all(|&(i, j)| pos[i] < pos[j])
    }

    fn predecessor_masks(&self) -> Vec<Vec<u64>> {
        let words = self.len().div_ceil(64).max(1);
        let mut preds = vec![vec![0u64; words]; self.len()];
        for &(i, j) in &self.covers {
            preds[j][i / 64] |= 1 << (i % 64);
        }
        preds
    }

    /// Visits linear extensions in lexicographic order of vertex choices until
    /// `visit` returns false.
    pub fn for_each_linear_extension(&self, mut visit: impl FnMut(&[IndexSet]) -> bool) {
        let preds = self.predecessor_masks();
        let words = preds.first().map_or(1, |p| p.len());
        let mut placed = vec![0u64; words];
        let mut seq = Vec::with_capacity(self.len());
        self.extend(&preds, &mut placed, &mut seq, &mut visit);
    }

    fn extend(
        &self,
        preds: &[Vec<u64>],
        placed: &mut Vec<u64>,
        seq: &mut Vec<IndexSet>,
        visit: &mut impl FnMut(&[IndexSet]) -> bool,
    ) -> bool {
        if seq.len() == self.len() {
            return visit(seq);
        }
        for i in 0..self.len() {
            if placed[i / 64] & (1 << (i % 64)) != 0 {
                continue;
            }
            if preds[i].iter().zip(placed.iter()).any(|(p, s)| p & !s != 0) {
                continue;
            }
            placed[i / 64] |= 1 << (i % 64);
            seq.push(self.vertices[i]);
            let go_on = self.extend(preds, placed, seq, visit);
            seq.pop();
            placed[i / 64] &= !(1 << (i % 64));
            if !go_on {
                return false;
            }
        }
        true
    }

    /// All linear extensions, failing once more than `limit` are found.
    pub fn linear_extensions(&self, limit: usize) -> Result<Vec<Vec<IndexSet>>> {
        let mut out = Vec::new();
        let mut over = false;
        self.for_each_linear_extension(|s| {
            if out.len() == limit {
                over = true;
                return false;
            }
            out.push(s.to_vec());
            true
        });
        if over {
            return Err(Error::BudgetExceeded(format!("more than {limit} linear extensions")));
        }
        Ok(out)
    }

    /// Number of linear extensions, by dynamic programming over down-sets.
    pub fn count_linear_extensions(&self) -> u128 {
        let preds = self.predecessor_masks();
        let words = preds.first().map_or(1, |p| p.len());
        let mut memo: HashMap<Vec<u64>, u128> = HashMap::new();
        count_from(self.len(), &preds, &mut vec![0u64; words], 0, &mut memo)
    }
}

fn count_from(
    n: usize,
    preds: &[Vec<u64>],
    placed: &mut Vec<u64>,
    depth: usize,
    memo: &mut HashMap<Vec<u64>, u128>,
) -> u128 {
    if depth == n {
        return 1;
    }
    if let Some(&c) = memo.get(placed) {
        return c;
    }
    let mut total = 0u128;
    for i in 0..n {
        if placed[i / 64] & (1 << (i % 64)) != 0 {
            continue;
        }
        if preds[i].iter().zip(placed.iter()).any(|(p, s)| p & !s != 0) {
            continue;
        }
        placed[i / 64] |= 1 << (i % 64);
        total += count_from(n, preds, placed, depth + 1, memo);
        placed[i / 64] &= !(1 << (i % 64));
    }
    memo.insert(placed.clone(), total);
    total
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> =
            self.covers.iter().map(|&(i, j)| format!("{}<{}", self.vertices[i], self.vertices[j])).collect();
        let vertices: Vec<String> = self.vertices.iter().map(|v| v.label()).collect();
        write!(f, "Poset[{}; {}]", vertices.join(" "), covers.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(text: &str) -> IndexSet {
        IndexSet::parse(6, text).unwrap()
    }

    #[test]
    fn reduction_drops_implied_relations() {
        let v = [s("1"), s("2"), s("3")];
        let p = Poset::from_relations(&v, &[(v[0], v[1]), (v[1], v[2]), (v[0], v[2])]).unwrap();
        assert_eq!(p.covers(), vec![(v[0], v[1]), (v[1], v[2])]);
        assert!(p.is_chain());
        assert!(p.less(&v[0], &v[2]));
        assert_eq!(p.count_linear_extensions(), 1);
    }

    #[test]
    fn cycles_are_rejected() {
        let v = [s("1"), s("2")];
        let err = Poset::from_relations(&v, &[(v[0], v[1]), (v[1], v[0])]).unwrap_err();
        assert!(matches!(err, Error::Cyclic(_)));
    }

    #[test]
    fn antichain_extensions() {
        let v = [s("1"), s("2"), s("3"), s("4")];
        let p = Poset::from_relations(&v, &[]).unwrap();
        assert_eq!(p.count_linear_extensions(), 24);
        assert_eq!(p.linear_extensions(100).unwrap().len(), 24);
        assert!(p.linear_extensions(10).is_err());
    }

    #[test]
    fn restriction_keeps_induced_order() {
        let v = [s("1"), s("2"), s("3")];
        let p = Poset::chain(&v).unwrap();
        let q = p.restrict(|x| *x != v[1]);
        assert_eq!(q.covers(), vec![(v[0], v[2])]);
    }

    #[test]
    fn empty_poset() {
        let p = Poset::from_relations(&[], &[]).unwrap();
        assert_eq!(p, Poset::empty());
        assert_eq!(p.count_linear_extensions(), 1);
    }

    proptest! {
        #[test]
        fn extensions_agree_with_count(edges in proptest::collection::vec((0usize..6, 0usize..6), 0..10)) {
            let v: Vec<IndexSet> = (1..=6).map(|i| IndexSet::new(6, &[i]).unwrap()).collect();
            // orient every edge upward so the relation is acyclic
            let rel: Vec<_> = edges.iter().filter(|(a, b)| a < b).map(|&(a, b)| (v[a], v[b])).collect();
            let p = Poset::from_relations(&v, &rel).unwrap();
            let all = p.linear_extensions(1000).unwrap();
            prop_assert_eq!(all.len() as u128, p.count_linear_extensions());
            prop_assert!(all.iter().all(|e| p.is_linear_extension(e)));
            for (a, b) in &rel {
                prop_assert!(p.less(a, b));
            }
        }
    }
}
