//! Tropical approximation of tree-shaped KP line solitons with exact rational
//! arithmetic.
//!
//! A soliton family is fixed by `M`, strictly increasing `p_1 < ... < p_{M+1}`
//! and constants `c_j`. Phase `j` is `θ_j = Σ_r p_j^r t^(r) + c_j` on
//! `t = (t^(1), ..., t^(M))`; the plane sections use `x = t^(1)`, `y = t^(2)`
//! and time `t = t^(3)`.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::setcalc::{split_side, subsets, IndexSet, Side};
use crate::triangulation::BinaryTree;

/// Exact rational number.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub fn q_frac(num: i64, den: i64) -> Q {
    Q::new(num.into(), den.into())
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SolitonParams {
    p: Vec<Q>,
    c: Vec<Q>,
}

impl SolitonParams {
    pub fn new(p: Vec<Q>, c: Vec<Q>) -> Result<Self> {
        if p.len() != c.len() {
            return Err(Error::InvalidParameters(format!(
                "{} values of p but {} values of c",
                p.len(),
                c.len()
            )));
        }
        if p.len() < 3 || p.len() > crate::setcalc::MAX_UNIVERSE {
            return Err(Error::InvalidParameters(format!(
                "M+1 = {} phases, expected between 3 and 16",
                p.len()
            )));
        }
        if let Some(w) = p.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameters(format!(
                "p must be strictly increasing, found {} then {}",
                w[0], w[1]
            )));
        }
        Ok(Self { p, c })
    }

    /// Number of evolution variables `M`.
    pub fn m(&self) -> usize {
        self.p.len() - 1
    }

    /// `p_j` for `1 <= j <= M+1`.
    pub fn p(&self, j: usize) -> &Q {
        &self.p[j - 1]
    }

    pub fn c(&self, j: usize) -> &Q {
        &self.c[j - 1]
    }

    pub fn ps(&self) -> &[Q] {
        &self.p
    }

    pub fn cs(&self) -> &[Q] {
        &self.c
    }

    /// `Ω = [M+1]`.
    pub fn omega(&self) -> IndexSet {
        IndexSet::full(self.p.len()).expect("validated size")
    }

    fn check_set(&self, i: &IndexSet) -> Result<()> {
        if i.universe() != self.p.len() {
            return Err(Error::InvalidIndexSet(format!("{i:?} is not a subset of [{}]", self.p.len())));
        }
        Ok(())
    }

    fn p_of(&self, i: &IndexSet) -> Vec<Q> {
        i.elements().map(|e| self.p(e).clone()).collect()
    }
}

impl fmt::Debug for SolitonParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[Q]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "SolitonParams {{ p: [{}], c: [{}] }}", show(&self.p), show(&self.c))
    }
}

/// A point `(t^(1), ..., t^(M))`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TropPoint {
    coords: Vec<Q>,
}

impl TropPoint {
    pub fn new(coords: Vec<Q>) -> Self {
        Self { coords }
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    /// `t^(r)` for `1 <= r <= M`.
    pub fn t(&self, r: usize) -> &Q {
        &self.coords[r - 1]
    }
}

/// Complete homogeneous symmetric polynomial `h_r` of the given values.
pub fn complete_symmetric(r: usize, values: &[Q]) -> Q {
    let mut h = vec![Q::zero(); r + 1];
    h[0] = Q::one();
    for x in values {
        for d in 1..=r {
            let next = &h[d] + x * &h[d - 1];
            h[d] = next;
        }
    }
    h.swap_remove(r)
}

/// `Π_{r<s} (x_s - x_r)`.
pub fn vandermonde(values: &[Q]) -> Q {
    let mut out = Q::one();
    for s in 0..values.len() {
        for r in 0..s {
            out *= &values[s] - &values[r];
        }
    }
    out
}

/// `c_I = Δ(p_I)^{-1} Σ_s (-1)^{n-s} c_{i_s} Δ(p_{I∖{i_s}})`.
pub fn c_coeff(params: &SolitonParams, i: &IndexSet) -> Result<Q> {
    params.check_set(i)?;
    if i.is_empty() {
        return Err(Error::InvalidIndexSet("c_I needs a nonempty I".into()));
    }
    let elems = i.to_vec();
    let n = elems.len();
    let mut sum = Q::zero();
    for (s, &e) in elems.iter().enumerate() {
        let rest: Vec<Q> = elems.iter().filter(|&&x| x != e).map(|&x| params.p(x).clone()).collect();
        let term = params.c(e) * vandermonde(&rest);
        // s is 0-based here, so the sign (-1)^{n-s} uses s+1
        if (n - (s + 1)).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum / vandermonde(&params.p_of(i)))
}

/// The critical value `t_I^(n-1)` with `n = |I|`, together with its inputs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CriticalValue {
    pub index: IndexSet,
    pub value: Q,
    /// `t^(n), ..., t^(M)`.
    pub context: Vec<Q>,
}

/// `t_I^(n-1) = -Σ_{r=1}^{M+1-n} h_r(p_I) t^(n+r-1) - c_I` for `context = (t^(n), ..., t^(M))`.
pub fn critical_value(params: &SolitonParams, i: &IndexSet, context: &[Q]) -> Result<CriticalValue> {
    params.check_set(i)?;
    let n = i.len();
    if n < 2 {
        return Err(Error::InvalidIndexSet(format!("critical values need |I| >= 2, got {i:?}")));
    }
    let m = params.m();
    if context.len() != m + 1 - n {
        return Err(Error::InvalidParameters(format!(
            "critical value of {i} needs {} context values t^({n})..t^({m}), got {}",
            m + 1 - n,
            context.len()
        )));
    }
    let p = params.p_of(i);
    let mut value = -c_coeff(params, i)?;
    for (r, t) in (1..).zip(context) {
        value -= complete_symmetric(r, &p) * t;
    }
    Ok(CriticalValue { index: *i, value, context: context.to_vec() })
}

/// `θ_j` at `point`.
pub fn phase(params: &SolitonParams, j: usize, point: &TropPoint) -> Q {
    let pj = params.p(j);
    let mut power = pj.clone();
    let mut value = params.c(j).clone();
    for t in point.coords() {
        value += &power * t;
        power *= pj;
    }
    value
}

/// The point of `𝒫_I` with `t^(n), ..., t^(M)` given by `context`.
pub fn coincidence_point(params: &SolitonParams, i: &IndexSet, context: &[Q]) -> Result<TropPoint> {
    let m = params.m();
    let n = i.len();
    if n == 0 || n > m + 1 {
        return Err(Error::InvalidIndexSet(format!("no coincidence space for {i:?}")));
    }
    if context.len() != m + 1 - n {
        return Err(Error::InvalidParameters(format!(
            "coincidence point of {i} needs {} context values, got {}",
            m + 1 - n,
            context.len()
        )));
    }
    let mut tail: Vec<Q> = context.to_vec();
    let mut set = *i;
    while set.len() >= 2 {
        let cv = critical_value(params, &set, &tail)?;
        tail.insert(0, cv.value);
        let last = set.nth(set.len() - 1).expect("nonempty");
        set = set.without(last);
    }
    Ok(TropPoint::new(tail))
}

/// Whether the phases of `I` dominate all others at a point where they coincide.
pub fn point_visible(params: &SolitonParams, i: &IndexSet, point: &TropPoint) -> Result<bool> {
    params.check_set(i)?;
    if point.coords().len() != params.m() {
        return Err(Error::InvalidParameters(format!(
            "point has {} coordinates, expected {}",
            point.coords().len(),
            params.m()
        )));
    }
    let mut elems = i.elements();
    let first = elems.next().ok_or_else(|| Error::InvalidIndexSet("empty phase set".into()))?;
    let common = phase(params, first, point);
    if let Some(j) = elems.find(|&j| phase(params, j, point) != common) {
        return Err(Error::NotCoincidencePoint(format!("θ_{first} != θ_{j} for I = {i}")));
    }
    Ok((1..=params.m() + 1).filter(|&k| !i.contains(k)).all(|k| phase(params, k, point) <= common))
}

/// Which half of the line through `t_K^(n)` is hidden for `𝒫_{K∖{k}}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HalfLine {
    NonvisibleBelow,
    NonvisibleAbove,
}

/// The part of `𝒫_{K∖{k}}` hidden by phase `k`, by the split of `K`.
pub fn halfline_visibility(k_set: &IndexSet, k: usize) -> Result<HalfLine> {
    Ok(match split_side(k_set, k)? {
        Side::Less => HalfLine::NonvisibleBelow,
        Side::Greater => HalfLine::NonvisibleAbove,
    })
}

/// Visibility of the point of `𝒫_I` with coordinates `context = (t^(n), ..., t^(M))`,
/// decided by the half-line rules instead of comparing phases.
pub fn rule_visible(params: &SolitonParams, i: &IndexSet, context: &[Q]) -> Result<bool> {
    params.check_set(i)?;
    let n = i.len();
    if n == params.m() + 1 {
        return Ok(true);
    }
    if context.len() != params.m() + 1 - n || context.is_empty() {
        return Err(Error::InvalidParameters(format!(
            "rule visibility of {i} needs {} context values",
            params.m() + 1 - n
        )));
    }
    let lambda = &context[0];
    for k in (1..=params.m() + 1).filter(|&k| !i.contains(k)) {
        let big = i.with(k);
        let tk = critical_value(params, &big, &context[1..])?.value;
        let hidden = match halfline_visibility(&big, k)? {
            HalfLine::NonvisibleBelow => *lambda < tk,
            HalfLine::NonvisibleAbove => *lambda > tk,
        };
        if hidden {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Where the visible part of `𝒫_I` lives as `t^(n)` ranges over the line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AsymptoticClass {
    /// Visible exactly up to the smallest enclosing critical value.
    Below,
    /// Visible exactly from the largest enclosing critical value on.
    Above,
    /// Visible at most between the smallest and largest enclosing critical values.
    Bounded,
}

fn even_runs(set: &IndexSet) -> bool {
    let mut run = 0usize;
    let mut prev = 0usize;
    for e in set.elements() {
        if run > 0 && e == prev + 1 {
            run += 1;
        } else {
            if run % 2 == 1 {
                return false;
            }
            run = 1;
        }
        prev = e;
    }
    run.is_multiple_of(2)
}

/// Classifies an `n`-subset `I` of `[M+1]` with `1 < n < M+1` by its interval structure.
pub fn asymptotic_class(i: &IndexSet) -> AsymptoticClass {
    let n = i.len();
    let top = i.universe();
    let below = if n % 2 == 1 { i.contains(1) && even_runs(&i.without(1)) } else { even_runs(i) };
    if below {
        return AsymptoticClass::Below;
    }
    if i.contains(top) {
        let mut rest = i.without(top);
        let ok = if n.is_multiple_of(2) {
            rest.contains(1) && {
                rest = rest.without(1);
                even_runs(&rest)
            }
        } else {
            even_runs(&rest)
        };
        if ok {
            return AsymptoticClass::Above;
        }
    }
    AsymptoticClass::Bounded
}

/// A point of the `xy`-plane.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Point2 {
    pub x: Q,
    pub y: Q,
}

/// A visible meeting point of three or more phases.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GraphVertex {
    pub at: Point2,
    /// Phases dominating at this point.
    pub phases: IndexSet,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum SegmentEnd {
    Vertex(usize),
    /// Unbounded in the given direction.
    Ray(Point2),
}

/// Visible piece of the line where the two phases of `label` coincide.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Segment {
    pub label: IndexSet,
    pub start: usize,
    pub end: SegmentEnd,
}

/// The visible part of the soliton in one `xy`-slice.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SolitonGraph {
    pub m: usize,
    /// Sorted by `(x, y)`.
    pub vertices: Vec<GraphVertex>,
    /// Sorted by label, then start vertex.
    pub segments: Vec<Segment>,
}

impl SolitonGraph {
    /// Every vertex is a meeting of exactly three phases.
    pub fn is_generic(&self) -> bool {
        self.vertices.iter().all(|v| v.phases.len() == 3)
    }
}

/// `t^(3), ..., t^(M)` for a slice; for `M = 2` there is no time coordinate.
fn slice_context(params: &SolitonParams, t: &Q, higher: &[Q]) -> Result<Vec<Q>> {
    let m = params.m();
    let expected = m.saturating_sub(3);
    if higher.len() != expected {
        return Err(Error::InvalidParameters(format!(
            "expected {expected} higher times t^(4)..t^({m}), got {}",
            higher.len()
        )));
    }
    if m == 2 {
        return Ok(Vec::new());
    }
    let mut ctx = vec![t.clone()];
    ctx.extend(higher.iter().cloned());
    Ok(ctx)
}

fn full_point(ctx: &[Q], at: &Point2) -> TropPoint {
    let mut coords = vec![at.x.clone(), at.y.clone()];
    coords.extend(ctx.iter().cloned());
    TropPoint::new(coords)
}

/// The dominant phases at a point.
pub fn dominant_phases(params: &SolitonParams, point: &TropPoint) -> IndexSet {
    let values: Vec<Q> = (1..=params.m() + 1).map(|j| phase(params, j, point)).collect();
    let max = values.iter().max().expect("phases").clone();
    let picked: Vec<usize> = (1..=values.len()).filter(|&j| values[j - 1] == max).collect();
    IndexSet::new(values.len(), &picked).expect("valid phases")
}

/// Extracts the visible soliton graph at time `t` with `t^(4), ..., t^(M)` fixed.
pub fn soliton_graph(params: &SolitonParams, t: &Q, higher: &[Q]) -> Result<SolitonGraph> {
    let ctx = slice_context(params, t, higher)?;
    let m = params.m();
    let mut points: BTreeMap<Point2, IndexSet> = BTreeMap::new();
    for triple in subsets(m + 1, 3)? {
        let pt = coincidence_point(params, &triple, &ctx)?;
        if point_visible(params, &triple, &pt)? {
            let at = Point2 { x: pt.t(1).clone(), y: pt.t(2).clone() };
            points.entry(at).or_insert_with(|| dominant_phases(params, &pt));
        }
    }
    let vertices: Vec<GraphVertex> =
        points.into_iter().map(|(at, phases)| GraphVertex { at, phases }).collect();
    let mut segments = Vec::new();
    for pair in subsets(m + 1, 2)? {
        let (i, j) = (pair.nth(0).expect("pair"), pair.nth(1).expect("pair"));
        let slope = -(params.p(i) + params.p(j));
        let mut on_line: Vec<usize> = (0..vertices.len())
            .filter(|&v| vertices[v].phases.contains(i) && vertices[v].phases.contains(j))
            .collect();
        if on_line.is_empty() {
            continue;
        }
        on_line.sort_by(|&a, &b| vertices[a].at.y.cmp(&vertices[b].at.y));
        let along = |from: &Point2, dy: Q| Point2 { x: &from.x + &slope * &dy, y: &from.y + dy };
        let visible_at = |pt: &Point2| point_visible(params, &pair, &full_point(&ctx, pt));
        let lowest = &vertices[on_line[0]].at;
        if visible_at(&along(lowest, -Q::one()))? {
            segments.push(Segment {
                label: pair,
                start: on_line[0],
                end: SegmentEnd::Ray(Point2 { x: -slope.clone(), y: -Q::one() }),
            });
        }
        for w in on_line.windows(2) {
            let (a, b) = (&vertices[w[0]].at, &vertices[w[1]].at);
            let mid = Point2 { x: (&a.x + &b.x) / q(2), y: (&a.y + &b.y) / q(2) };
            if visible_at(&mid)? {
                segments.push(Segment { label: pair, start: w[0], end: SegmentEnd::Vertex(w[1]) });
            }
        }
        let highest = &vertices[*on_line.last().expect("nonempty")].at;
        if visible_at(&along(highest, Q::one()))? {
            segments.push(Segment {
                label: pair,
                start: *on_line.last().expect("nonempty"),
                end: SegmentEnd::Ray(Point2 { x: slope.clone(), y: Q::one() }),
            });
        }
    }
    segments.sort_by_key(|a| (a.label, a.start));
    Ok(SolitonGraph { m, vertices, segments })
}

/// Reads the rooted binary tree of a generic graph, rooted at the upward `{1, M+1}` ray.
pub fn graph_tree(graph: &SolitonGraph) -> Result<BinaryTree> {
    if let Some(v) = graph.vertices.iter().find(|v| v.phases.len() != 3) {
        return Err(Error::NonGenericSlice(format!("phases {} meet at ({}, {})", v.phases, v.at.x, v.at.y)));
    }
    let top = graph.m + 1;
    let root_label = IndexSet::new(top, &[1, top])?;
    let root = graph
        .segments
        .iter()
        .find(|s| s.label == root_label && matches!(&s.end, SegmentEnd::Ray(d) if d.y.is_positive()))
        .ok_or_else(|| Error::Invariant(format!("no upward ray labelled {root_label}")))?;
    descend(graph, root.start, root_label, 0)
}

fn descend(graph: &SolitonGraph, v: usize, entered: IndexSet, depth: usize) -> Result<BinaryTree> {
    if depth > graph.vertices.len() {
        return Err(Error::Invariant("soliton graph is not a tree".into()));
    }
    let phases = graph.vertices[v].phases.to_vec();
    let (a, b, c) = (phases[0], phases[1], phases[2]);
    let universe = graph.m + 1;
    if entered != IndexSet::new(universe, &[a, c])? {
        return Err(Error::Invariant(format!(
            "vertex {} entered along {entered} instead of its outer pair",
            graph.vertices[v].phases
        )));
    }
    let child = |label: IndexSet| -> Result<BinaryTree> {
        let seg = graph
            .segments
            .iter()
            .find(|s| s.label == label && (s.start == v || s.end == SegmentEnd::Vertex(v)))
            .ok_or_else(|| Error::Invariant(format!("segment {label} missing below vertex")))?;
        match &seg.end {
            SegmentEnd::Ray(d) if d.y.is_negative() => {
                let lo = label.nth(0).expect("pair");
                if label.nth(1) != Some(lo + 1) {
                    return Err(Error::Invariant(format!("downward ray {label} is not {{i,i+1}}")));
                }
                Ok(BinaryTree::Leaf(lo))
            }
            SegmentEnd::Vertex(w) => {
                let other = if seg.start == v { *w } else { seg.start };
                descend(graph, other, label, depth + 1)
            }
            SegmentEnd::Ray(_) => Err(Error::Invariant(format!("ray {label} points upward"))),
        }
    };
    Ok(BinaryTree::node(child(IndexSet::new(universe, &[a, b])?)?, child(IndexSet::new(universe, &[b, c])?)?))
}

/// Rooted tree type of the soliton at time `t`.
pub fn tree_at_time(params: &SolitonParams, t: &Q, higher: &[Q]) -> Result<BinaryTree> {
    graph_tree(&soliton_graph(params, t, higher)?)
}

/// Visible critical times `t_K^(3)` for all 4-sets `K`, ascending.
pub fn critical_times(params: &SolitonParams, higher: &[Q]) -> Result<Vec<CriticalValue>> {
    let m = params.m();
    if m < 3 {
        return Err(Error::InvalidParameters("time evolution needs M >= 3".into()));
    }
    if higher.len() != m - 3 {
        return Err(Error::InvalidParameters(format!(
            "expected {} higher times t^(4)..t^({m}), got {}",
            m - 3,
            higher.len()
        )));
    }
    let mut out = Vec::new();
    for k in subsets(m + 1, 4)? {
        let pt = coincidence_point(params, &k, higher)?;
        if point_visible(params, &k, &pt)? {
            out.push(CriticalValue { index: k, value: pt.t(3).clone(), context: higher.to_vec() });
        }
    }
    out.sort_by(|a, b| a.value.cmp(&b.value).then(a.index.cmp(&b.index)));
    let ties: Vec<String> = out
        .windows(2)
        .filter(|w| w[0].value == w[1].value)
        .map(|w| format!("{}={} at t={}", w[0].index, w[1].index, w[0].value))
        .collect();
    if !ties.is_empty() {
        return Err(Error::NonGenericParameters(ties.join(", ")));
    }
    Ok(out)
}

/// Labels of the visible critical times in increasing order.
pub fn evolution_chain(params: &SolitonParams, higher: &[Q]) -> Result<Vec<IndexSet>> {
    Ok(critical_times(params, higher)?.into_iter().map(|cv| cv.index).collect())
}

/// Tree types before the first, between consecutive, and after the last critical time.
pub fn evolution_trees(params: &SolitonParams, higher: &[Q]) -> Result<Vec<(Q, BinaryTree)>> {
    let times: Vec<Q> = critical_times(params, higher)?.into_iter().map(|cv| cv.value).collect();
    let mut samples = Vec::new();
    match (times.first(), times.last()) {
        (Some(first), Some(last)) => {
            samples.push(first - Q::one());
            for w in times.windows(2) {
                samples.push((&w[0] + &w[1]) / q(2));
            }
            samples.push(last + Q::one());
        }
        _ => samples.push(Q::zero()),
    }
    samples
        .into_iter()
        .map(|t| {
            let tree = tree_at_time(params, &t, higher)?;
            Ok((t, tree))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(p: &[i64], c: &[i64]) -> SolitonParams {
        SolitonParams::new(p.iter().map(|&x| q(x)).collect(), c.iter().map(|&x| q(x)).collect()).unwrap()
    }

    fn s(universe: usize, text: &str) -> IndexSet {
        IndexSet::parse(universe, text).unwrap()
    }

    #[test]
    fn symmetric_polynomials() {
        let v = [q(3), q(5)];
        assert_eq!(complete_symmetric(1, &v), q(8));
        assert_eq!(complete_symmetric(2, &v), q(9 + 15 + 25));
        assert_eq!(complete_symmetric(0, &v), q(1));
        assert_eq!(complete_symmetric(3, &[]), q(0));
    }

    #[test]
    fn c_coefficients() {
        let pr = params(&[0, 1, 2], &[4, 9, 0]);
        assert_eq!(c_coeff(&pr, &s(3, "12")).unwrap(), q(5));
        let zero = params(&[0, 1, 2], &[0, 0, 0]);
        assert_eq!(c_coeff(&zero, &s(3, "123")).unwrap(), q(0));
        assert_eq!(critical_value(&zero, &s(3, "123"), &[]).unwrap().value, q(0));
        assert_eq!(c_coeff(&pr, &s(3, "2")).unwrap(), q(9));
    }

    #[test]
    fn critical_value_examples() {
        let pr = params(&[0, 1, 2], &[0, 0, 0]);
        let tau = q_frac(7, 3);
        let cv = critical_value(&pr, &s(3, "12"), std::slice::from_ref(&tau)).unwrap();
        assert_eq!(cv.value, -tau);
        assert!(critical_value(&pr, &s(3, "12"), &[]).is_err());
    }

    #[test]
    fn phases_and_visibility() {
        let pr = params(&[0, 1, 2], &[0, 0, 0]);
        let origin = TropPoint::new(vec![q(0), q(0)]);
        assert!((1..=3).all(|j| phase(&pr, j, &origin) == q(0)));
        let pt = TropPoint::new(vec![q(1), q(0)]);
        let th: Vec<Q> = (1..=3).map(|j| phase(&pr, j, &pt)).collect();
        assert_eq!(th, vec![q(0), q(1), q(2)]);
        let i = s(3, "13");
        assert!(point_visible(&pr, &i, &TropPoint::new(vec![q(-2), q(1)])).unwrap());
        assert!(!point_visible(&pr, &i, &TropPoint::new(vec![q(2), q(-1)])).unwrap());
        assert!(point_visible(&pr, &s(3, "123"), &origin).unwrap());
        assert!(matches!(
            point_visible(&pr, &i, &TropPoint::new(vec![q(1), q(1)])),
            Err(Error::NotCoincidencePoint(_))
        ));
    }

    #[test]
    fn halfline_examples() {
        assert_eq!(halfline_visibility(&s(3, "123"), 2).unwrap(), HalfLine::NonvisibleBelow);
        assert_eq!(halfline_visibility(&s(4, "1234"), 4).unwrap(), HalfLine::NonvisibleAbove);
        assert_eq!(halfline_visibility(&s(2, "12"), 1).unwrap(), HalfLine::NonvisibleBelow);
    }

    #[test]
    fn asymptotic_lists_for_six_phases() {
        let below: Vec<String> = subsets(6, 4)
            .unwrap()
            .into_iter()
            .filter(|i| asymptotic_class(i) == AsymptoticClass::Below)
            .map(|i| i.label())
            .collect();
        assert_eq!(below, vec!["1234", "1245", "1256", "2345", "2356", "3456"]);
        let above: Vec<String> = subsets(6, 4)
            .unwrap()
            .into_iter()
            .filter(|i| asymptotic_class(i) == AsymptoticClass::Above)
            .map(|i| i.label())
            .collect();
        assert_eq!(above, vec!["1236", "1346", "1456"]);
    }

    #[test]
    fn y_graph_for_three_phases() {
        let pr = params(&[0, 1, 2], &[0, 0, 0]);
        let g = soliton_graph(&pr, &q(5), &[]).unwrap();
        assert_eq!(g.vertices.len(), 1);
        assert_eq!(g.vertices[0].at, Point2 { x: q(0), y: q(0) });
        let labels: Vec<(String, bool)> = g
            .segments
            .iter()
            .map(|s| (s.label.label(), matches!(&s.end, SegmentEnd::Ray(d) if d.y.is_positive())))
            .collect();
        assert_eq!(labels, vec![("12".into(), false), ("13".into(), true), ("23".into(), false)]);
        assert_eq!(graph_tree(&g).unwrap(), BinaryTree::left_comb(2));
    }

    #[test]
    fn four_phases_change_tree_once() {
        let pr = params(&[-1, 0, 1, 2], &[0, 0, 0, 0]);
        let chain = evolution_chain(&pr, &[]).unwrap();
        assert_eq!(chain, vec![s(4, "1234")]);
        let t_omega = critical_value(&pr, &s(4, "1234"), &[]).unwrap().value;
        let before = soliton_graph(&pr, &(&t_omega - q(1)), &[]).unwrap();
        assert_eq!(before.vertices.len(), 2);
        assert_eq!(graph_tree(&before).unwrap(), BinaryTree::left_comb(3));
        let at = soliton_graph(&pr, &t_omega, &[]).unwrap();
        assert_eq!(at.vertices.len(), 1);
        assert_eq!(at.vertices[0].phases, s(4, "1234"));
        assert!(matches!(graph_tree(&at), Err(Error::NonGenericSlice(_))));
        let after = tree_at_time(&pr, &(&t_omega + q(1)), &[]).unwrap();
        assert_eq!(after, BinaryTree::right_comb(3));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(SolitonParams::new(vec![q(0), q(0), q(1)], vec![q(0); 3]).is_err());
        assert!(SolitonParams::new(vec![q(0), q(1)], vec![q(0); 2]).is_err());
        let pr = params(&[0, 1, 2, 3], &[0, 0, 0, 0]);
        assert!(soliton_graph(&pr, &q(0), &[q(1)]).is_err());
    }
}
