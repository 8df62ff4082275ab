//! Triangulations of a convex polygon and their dual rooted binary trees.
//!
//! Polygon vertices are numbered `1..=N` counterclockwise. The dual tree is
//! rooted at the side `{1,N}`; the side `{i,i+1}` becomes leaf `i`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::setcalc::IndexSet;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    polygon: usize,
    triangles: Vec<IndexSet>,
}

fn side_key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn crosses(d: (usize, usize), e: (usize, usize)) -> bool {
    let ((a, b), (c, f)) = (d, e);
    (a < c && c < b && b < f) || (c < a && a < f && f < b)
}

impl Triangulation {
    pub fn new(polygon: usize, triangles: &[IndexSet]) -> Result<Self> {
        let bad = |why: String| Err(Error::NotATriangulation(why));
        if polygon < 3 {
            return bad(format!("a {polygon}-gon has no triangulation"));
        }
        let mut triangles = triangles.to_vec();
        triangles.sort();
        triangles.dedup();
        if triangles.len() != polygon - 2 {
            return bad(format!("{} triangles in a {polygon}-gon", triangles.len()));
        }
        let mut uses: HashMap<(usize, usize), usize> = HashMap::new();
        for t in &triangles {
            if t.len() != 3 || t.elements().any(|e| e > polygon) {
                return bad(format!("{t:?} is not a triangle of the {polygon}-gon"));
            }
            let v = t.to_vec();
            for (a, b) in [(v[0], v[1]), (v[1], v[2]), (v[0], v[2])] {
                *uses.entry(side_key(a, b)).or_default() += 1;
            }
        }
        let is_side = |(a, b): (usize, usize)| b == a + 1 || (a == 1 && b == polygon);
        for i in 1..=polygon {
            let side = side_key(i, i % polygon + 1);
            if uses.get(&side) != Some(&1) {
                return bad(format!("side {}{} is not covered exactly once", side.0, side.1));
            }
        }
        let diagonals: Vec<(usize, usize)> = uses.keys().copied().filter(|&d| !is_side(d)).collect();
        for &d in &diagonals {
            if uses[&d] != 2 {
                return bad(format!("diagonal {}{} borders {} triangles", d.0, d.1, uses[&d]));
            }
        }
        for (i, &d) in diagonals.iter().enumerate() {
            if let Some(&e) = diagonals[i + 1..].iter().find(|&&e| crosses(d, e)) {
                return bad(format!("diagonals {}{} and {}{} cross", d.0, d.1, e.0, e.1));
            }
        }
        Ok(Self { polygon, triangles })
    }

    pub fn polygon(&self) -> usize {
        self.polygon
    }

    pub fn triangles(&self) -> &[IndexSet] {
        &self.triangles
    }

    /// Diagonals as ordered pairs `(a, b)` with `a < b`.
    pub fn diagonals(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for t in &self.triangles {
            let v = t.to_vec();
            for (a, b) in [(v[0], v[1]), (v[1], v[2]), (v[0], v[2])] {
                if b != a + 1 && !(a == 1 && b == self.polygon) {
                    out.push((a, b));
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Exchanges the diagonal `{a, b}` for the other diagonal of its quadrilateral.
    pub fn flip(&self, a: usize, b: usize) -> Result<Self> {
        let (a, b) = side_key(a, b);
        let around: Vec<&IndexSet> =
            self.triangles.iter().filter(|t| t.contains(a) && t.contains(b)).collect();
        if around.len() != 2 {
            return Err(Error::NotATriangulation(format!("{a}{b} is not a diagonal")));
        }
        let apex = |t: &IndexSet| t.elements().find(|&e| e != a && e != b).expect("triangle");
        let (c, d) = (apex(around[0]), apex(around[1]));
        let mut triangles: Vec<IndexSet> =
            self.triangles.iter().filter(|t| !around.contains(t)).copied().collect();
        triangles.push(IndexSet::new(self.polygon, &[a, c, d])?);
        triangles.push(IndexSet::new(self.polygon, &[b, c, d])?);
        Self::new(self.polygon, &triangles)
    }

    /// The triangulation of all triangles `{1, i, i+1}`.
    pub fn fan(polygon: usize) -> Result<Self> {
        let t: Result<Vec<IndexSet>> = (2..polygon).map(|i| IndexSet::new(polygon, &[1, i, i + 1])).collect();
        Self::new(polygon, &t?)
    }

    /// The triangulation of all triangles `{i, i+1, N}`.
    pub fn anti_fan(polygon: usize) -> Result<Self> {
        let t: Result<Vec<IndexSet>> =
            (1..polygon - 1).map(|i| IndexSet::new(polygon, &[i, i + 1, polygon])).collect();
        Self::new(polygon, &t?)
    }
}

impl fmt::Debug for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self.triangles.iter().map(|t| t.label()).collect();
        write!(f, "{}-gon{{{}}}", self.polygon, shown.join(","))
    }
}

/// A rooted planar binary tree whose leaves are numbered left to right.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryTree {
    Leaf(usize),
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    /// `((1 2) 3) ...` with `leaves` leaves.
    pub fn left_comb(leaves: usize) -> Self {
        (2..=leaves).fold(BinaryTree::Leaf(1), |t, i| BinaryTree::node(t, BinaryTree::Leaf(i)))
    }

    /// `1 (2 (3 ...))` with `leaves` leaves.
    pub fn right_comb(leaves: usize) -> Self {
        (1..leaves).rev().fold(BinaryTree::Leaf(leaves), |t, i| BinaryTree::node(BinaryTree::Leaf(i), t))
    }

    pub fn leaves(&self) -> usize {
        match self {
            BinaryTree::Leaf(_) => 1,
            BinaryTree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    pub fn first_leaf(&self) -> usize {
        match self {
            BinaryTree::Leaf(i) => *i,
            BinaryTree::Node(l, _) => l.first_leaf(),
        }
    }

    /// Trees reachable by one rotation `((A B) C) → (A (B C))` at any node.
    pub fn right_rotations(&self) -> Vec<BinaryTree> {
        let mut out = Vec::new();
        if let BinaryTree::Node(l, r) = self {
            if let BinaryTree::Node(a, b) = l.as_ref() {
                out.push(BinaryTree::node(
                    a.as_ref().clone(),
                    BinaryTree::node(b.as_ref().clone(), r.as_ref().clone()),
                ));
            }
            for t in l.right_rotations() {
                out.push(BinaryTree::node(t, r.as_ref().clone()));
            }
            for t in r.right_rotations() {
                out.push(BinaryTree::node(l.as_ref().clone(), t));
            }
        }
        out
    }

    /// Renumbers leaves `1..` from left to right.
    pub fn relabeled(&self) -> Self {
        fn go(t: &BinaryTree, next: &mut usize) -> BinaryTree {
            match t {
                BinaryTree::Leaf(_) => {
                    *next += 1;
                    BinaryTree::Leaf(*next)
                }
                BinaryTree::Node(l, r) => {
                    let l = go(l, next);
                    BinaryTree::node(l, go(r, next))
                }
            }
        }
        go(self, &mut 0)
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Leaf(i) => write!(f, "{i}"),
            BinaryTree::Node(l, r) => write!(f, "({l} {r})"),
        }
    }
}

impl fmt::Debug for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Reads the vertices of an R-poset of `T(N,3)` as triangles of the `N`-gon.
pub fn r_poset_to_triangulation(r: &Poset, polygon: usize) -> Result<Triangulation> {
    Triangulation::new(polygon, r.vertices())
}

/// The planar dual of a triangulation, rooted at the side `{1,N}`.
pub fn triangulation_to_tree(t: &Triangulation) -> BinaryTree {
    fn build(t: &Triangulation, lo: usize, hi: usize) -> BinaryTree {
        if hi == lo + 1 {
            return BinaryTree::Leaf(lo);
        }
        let apex = t
            .triangles
            .iter()
            .filter(|tri| tri.contains(lo) && tri.contains(hi))
            .find_map(|tri| tri.elements().find(|&e| lo < e && e < hi))
            .expect("validated triangulation");
        BinaryTree::node(build(t, lo, apex), build(t, apex, hi))
    }
    build(t, 1, t.polygon)
}

/// Inverse of [`triangulation_to_tree`] for trees with leaves `1..=N-1` in order.
pub fn tree_to_triangulation(tree: &BinaryTree) -> Result<Triangulation> {
    let polygon = tree.leaves() + 1;
    let mut triangles = Vec::new();
    fn walk(t: &BinaryTree, lo: usize, polygon: usize, out: &mut Vec<IndexSet>) -> Result<usize> {
        match t {
            BinaryTree::Leaf(_) => Ok(lo + 1),
            BinaryTree::Node(l, r) => {
                let mid = walk(l, lo, polygon, out)?;
                let hi = walk(r, mid, polygon, out)?;
                out.push(IndexSet::new(polygon, &[lo, mid, hi])?);
                Ok(hi)
            }
        }
    }
    walk(tree, 1, polygon, &mut triangles)?;
    Triangulation::new(polygon, &triangles)
}
