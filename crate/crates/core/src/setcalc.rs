//! Index subsets of `[N] = {1, ..., N}` and the packet calculus built on them.
//!
//! An [`IndexSet`] is stored as a 16-bit occupancy mask together with the size
//! of its universe, so subset tests and membership are single bit operations.
//! The elements are always read back in increasing order.
//!
//! Equal-size sets are ordered lexicographically on their sorted element
//! sequences. The same order is used for packets, chains and exports.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported universe.
pub const MAX_UNIVERSE: usize = 16;

/// A subset of `[N]` with `N <= 16`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexSet {
    mask: u16,
    universe: u8,
}

impl IndexSet {
    /// Builds a set from arbitrary elements of `[universe]`; duplicates are rejected.
    pub fn new(universe: usize, elements: &[usize]) -> Result<Self> {
        check_universe(universe)?;
        let mut mask = 0u16;
        for &e in elements {
            if e == 0 || e > universe {
                return Err(Error::InvalidIndexSet(format!("element {e} outside [1, {universe}]")));
            }
            let bit = 1u16 << (e - 1);
            if mask & bit != 0 {
                return Err(Error::InvalidIndexSet(format!("duplicate element {e}")));
            }
            mask |= bit;
        }
        Ok(Self { mask, universe: universe as u8 })
    }

    pub fn empty(universe: usize) -> Result<Self> {
        check_universe(universe)?;
        Ok(Self { mask: 0, universe: universe as u8 })
    }

    /// The whole universe `[N]`.
    pub fn full(universe: usize) -> Result<Self> {
        check_universe(universe)?;
        let mask = if universe == 16 { u16::MAX } else { (1u16 << universe) - 1 };
        Ok(Self { mask, universe: universe as u8 })
    }

    pub(crate) fn from_mask(universe: usize, mask: u16) -> Self {
        debug_assert!(universe <= MAX_UNIVERSE);
        Self { mask, universe: universe as u8 }
    }

    pub fn mask(&self) -> u16 {
        self.mask
    }

    pub fn universe(&self) -> usize {
        self.universe as usize
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, e: usize) -> bool {
        e >= 1 && e <= self.universe() && self.mask & (1 << (e - 1)) != 0
    }

    pub fn is_subset(&self, other: &IndexSet) -> bool {
        self.mask & !other.mask == 0
    }

    /// Elements in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        let mask = self.mask;
        (0..16usize).filter(move |b| mask & (1 << b) != 0).map(|b| b + 1)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.elements().collect()
    }

    /// The `i`-th smallest element (0-based).
    pub fn nth(&self, i: usize) -> Option<usize> {
        self.elements().nth(i)
    }

    /// Position of `e` among the sorted elements (0-based).
    pub fn position(&self, e: usize) -> Option<usize> {
        if !self.contains(e) {
            return None;
        }
        let below = self.mask & ((1u16 << (e - 1)) - 1);
        Some(below.count_ones() as usize)
    }

    pub fn with(&self, e: usize) -> Self {
        debug_assert!(e >= 1 && e <= self.universe());
        Self { mask: self.mask | (1 << (e - 1)), universe: self.universe }
    }

    pub fn without(&self, e: usize) -> Self {
        debug_assert!(e >= 1 && e <= self.universe());
        Self { mask: self.mask & !(1 << (e - 1)), universe: self.universe }
    }

    pub fn union(&self, other: &IndexSet) -> Self {
        Self { mask: self.mask | other.mask, universe: self.universe.max(other.universe) }
    }

    pub fn difference(&self, other: &IndexSet) -> Self {
        Self { mask: self.mask & !other.mask, universe: self.universe }
    }

    /// The single element of `self \ other`, if there is exactly one.
    pub fn single_difference(&self, other: &IndexSet) -> Option<usize> {
        let d = self.mask & !other.mask;
        if d.count_ones() == 1 {
            Some(d.trailing_zeros() as usize + 1)
        } else {
            None
        }
    }

    /// Renders as concatenated digits for `N <= 9` and as a comma list otherwise.
    pub fn label(&self) -> String {
        if self.universe() <= 9 {
            self.elements().map(|e| char::from(b'0' + e as u8)).collect()
        } else {
            self.elements().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
        }
    }

    /// Inverse of [`IndexSet::label`]. Comma lists are accepted at any universe size.
    pub fn parse(universe: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        let text = text.strip_prefix('{').and_then(|t| t.strip_suffix('}')).unwrap_or(text).trim();
        if text.is_empty() {
            return Self::empty(universe);
        }
        let elements: Vec<usize> = if text.contains(',') || universe > 9 {
            text.split(',')
                .map(|s| {
                    s.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidIndexSet(format!("cannot parse '{s}' in '{text}'")))
                })
                .collect::<Result<_>>()?
        } else {
            text.chars()
                .map(|ch| {
                    ch.to_digit(10).map(|d| d as usize).ok_or_else(|| {
                        Error::InvalidIndexSet(format!("unexpected character '{ch}' in '{text}'"))
                    })
                })
                .collect::<Result<_>>()?
        };
        Self::new(universe, &elements)
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.elements().cmp(other.elements()))
            .then_with(|| self.universe.cmp(&other.universe))
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.elements().map(|e| e.to_string()).collect::<Vec<_>>().join(","))
    }
}

fn check_universe(universe: usize) -> Result<()> {
    if universe == 0 || universe > MAX_UNIVERSE {
        Err(Error::UniverseOutOfRange(universe))
    } else {
        Ok(())
    }
}

/// All `k`-subsets of `[universe]` in lexicographic order.
pub fn subsets(universe: usize, k: usize) -> Result<Vec<IndexSet>> {
    check_universe(universe)?;
    let mut out = Vec::new();
    if k > universe {
        return Ok(out);
    }
    let mut idx: Vec<usize> = (1..=k).collect();
    loop {
        out.push(IndexSet::new(universe, &idx)?);
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if idx[i] < universe - (k - 1 - i) {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The packet `P(K)`: all `(|K|-1)`-subsets of `K` in lexicographic order,
/// i.e. `K \ {k_last}, ..., K \ {k_1}`.
pub fn packet(k: &IndexSet) -> Result<Vec<IndexSet>> {
    if k.is_empty() {
        return Err(Error::EmptyPacket);
    }
    let elems = k.to_vec();
    Ok(elems.iter().rev().map(|&e| k.without(e)).collect())
}

/// How a subset of a packet sits inside the lexicographic packet listing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SegmentKind {
    Beginning,
    Ending,
    /// The empty set or the whole packet.
    Both,
    Neither,
}

impl SegmentKind {
    pub fn is_segment(self) -> bool {
        !matches!(self, SegmentKind::Neither)
    }
}

/// Classifies a bit pattern over a packet of `len` members, bit `i` meaning the
/// `i`-th member in lexicographic order is present.
pub(crate) fn classify_pattern(pattern: u32, len: usize) -> SegmentKind {
    let full = if len >= 32 { u32::MAX } else { (1u32 << len) - 1 };
    let pattern = pattern & full;
    if pattern == 0 || pattern == full {
        return SegmentKind::Both;
    }
    if pattern & pattern.wrapping_add(1) == 0 {
        return SegmentKind::Beginning;
    }
    let complement = !pattern & full;
    if complement & complement.wrapping_add(1) == 0 {
        return SegmentKind::Ending;
    }
    SegmentKind::Neither
}

pub fn segment_classify(s: &[IndexSet], k: &IndexSet) -> Result<SegmentKind> {
    let members = packet(k)?;
    let mut pattern = 0u32;
    for x in s {
        match members.iter().position(|m| m == x) {
            Some(i) => pattern |= 1 << i,
            None => return Err(Error::NotPacketSubset(format!("{x:?} is not in P({k:?})"))),
        }
    }
    Ok(classify_pattern(pattern, members.len()))
}

/// Which half of the alternating split an element falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Less,
    Greater,
}

/// Split of `K = {k_1 < ... < k_{n+1}}` into
/// `K_< = {k_n, k_{n-2}, ...}` and `K_> = {k_{n+1}, k_{n-1}, ...}`.
pub fn k_split(k: &IndexSet) -> Result<(IndexSet, IndexSet)> {
    if k.len() < 2 {
        return Err(Error::SplitUndefined);
    }
    let top = k.len() - 1;
    let mut less = IndexSet::from_mask(k.universe(), 0);
    let mut greater = less;
    for (pos, e) in k.elements().enumerate() {
        // k_{n+1} sits at position n; positions of the same parity go to K_>
        if (top - pos).is_multiple_of(2) {
            greater = greater.with(e);
        } else {
            less = less.with(e);
        }
    }
    Ok((less, greater))
}

/// The side of the split of `K` that contains `e`.
pub fn split_side(k: &IndexSet, e: usize) -> Result<Side> {
    if k.len() < 2 {
        return Err(Error::SplitUndefined);
    }
    let pos =
        k.position(e).ok_or_else(|| Error::InvalidIndexSet(format!("{e} is not an element of {k:?}")))?;
    Ok(if (k.len() - 1 - pos).is_multiple_of(2) { Side::Greater } else { Side::Less })
}
