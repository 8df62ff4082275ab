//! Higher Tamari orders `T(N,n)`: visibility of elements and edges of `B(N,n)`,
//! R-posets, and the contraction of `B(N,n)` onto `T(N,n)`.

use std::collections::{BTreeSet, HashMap};

use crate::bruhat::{enumerate_bruhat, q_poset, BruhatOrder, ConsistentSet};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::setcalc::{packet, split_side, IndexSet, Side};

pub use crate::triangulation::{r_poset_to_triangulation, triangulation_to_tree};

fn check_size(x: &IndexSet, u: &ConsistentSet, size: usize) -> Result<()> {
    if x.len() != size {
        return Err(Error::RankMismatch { expected: size, found: x.len() });
    }
    if x.universe() != u.universe() {
        return Err(Error::InvalidIndexSet(format!(
            "{x:?} lives in [{}], expected [{}]",
            x.universe(),
            u.universe()
        )));
    }
    Ok(())
}

/// Whether the `n`-set `I` is non-visible at the vertex `U` of `B(N,n)`:
/// some `K = I ∪ {k}` has `K ∉ U` with `k ∈ K_<`, or `K ∈ U` with `k ∈ K_>`.
pub fn is_nonvisible(i: &IndexSet, u: &ConsistentSet) -> Result<bool> {
    check_size(i, u, u.rank())?;
    Ok(nonvisible_unchecked(i, u))
}

fn nonvisible_unchecked(i: &IndexSet, u: &ConsistentSet) -> bool {
    (1..=u.universe()).filter(|&k| !i.contains(k)).any(|k| {
        let big = i.with(k);
        let side = split_side(&big, k).expect("sets of size >= 2");
        if u.contains(&big) {
            side == Side::Greater
        } else {
            side == Side::Less
        }
    })
}

/// Whether the edge `U → U ∪ {K}` of `B(N,n)` is non-visible.
///
/// For every `L = K ∪ {l}` the packet of `L` is being traversed either
/// lexicographically (`K` closes a prefix) or reverse-lexicographically
/// (`K` opens a suffix). The edge is non-visible if some `L` is traversed
/// lexicographically with `l ∈ L_<`, or reverse-lexicographically with `l ∈ L_>`.
pub fn edge_nonvisible(u: &ConsistentSet, k: &IndexSet) -> Result<bool> {
    check_size(k, u, u.rank() + 1)?;
    if u.contains(k) {
        return Err(Error::NotConsistent(format!("{k:?} already belongs to {u}")));
    }
    let grown = u.with(*k)?;
    Ok(edge_nonvisible_unchecked(&grown, k))
}

/// Same as [`edge_nonvisible`], given the upper endpoint `U' = U ∪ {K}`.
pub(crate) fn edge_nonvisible_unchecked(grown: &ConsistentSet, k: &IndexSet) -> bool {
    (1..=grown.universe()).filter(|&l| !k.contains(l)).any(|l| {
        let big = k.with(l);
        let members = packet(&big).expect("nonempty");
        let at = members.iter().position(|x| x == k).expect("K lies in the packet of L");
        let present: Vec<bool> = members.iter().map(|x| grown.contains(x)).collect();
        let prefix = present.iter().enumerate().all(|(i, &p)| p == (i <= at));
        let suffix = present.iter().enumerate().all(|(i, &p)| p == (i >= at));
        let side = split_side(&big, l).expect("sets of size >= 2");
        (prefix && side == Side::Less) || (suffix && side == Side::Greater)
    })
}

/// `Q(U)` with its non-visible elements removed.
pub fn r_poset(u: &ConsistentSet) -> Result<Poset> {
    let q = q_poset(u)?;
    Ok(q.restrict(|i| !nonvisible_unchecked(i, u)))
}

/// The higher Tamari order: distinct R-posets joined by the images of visible
/// Bruhat edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TamariOrder {
    universe: usize,
    n: usize,
    vertices: Vec<Poset>,
    edges: Vec<(usize, usize, IndexSet)>,
    out: Vec<Vec<usize>>,
    topo: Vec<usize>,
    source: usize,
    sink: usize,
}

impl TamariOrder {
    /// Assembles and validates an order from vertices and labeled edges.
    pub fn from_parts(
        universe: usize,
        n: usize,
        vertices: Vec<Poset>,
        edges: Vec<(usize, usize, IndexSet)>,
    ) -> Result<Self> {
        let count = vertices.len();
        if count == 0 {
            return Err(Error::Invariant("an order needs at least one vertex".into()));
        }
        if let Some(&(a, b, _)) = edges.iter().find(|&&(a, b, _)| a >= count || b >= count) {
            return Err(Error::Invariant(format!("edge {a}->{b} leaves the vertex range")));
        }
        let mut edges: Vec<_> = edges.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        edges.sort();
        let mut out = vec![Vec::new(); count];
        let mut indegree = vec![0usize; count];
        for (e, &(a, b, _)) in edges.iter().enumerate() {
            out[a].push(e);
            indegree[b] += 1;
        }
        let sources: Vec<usize> = (0..count).filter(|&v| indegree[v] == 0).collect();
        let sinks: Vec<usize> = (0..count).filter(|&v| out[v].is_empty()).collect();
        let mut topo = Vec::with_capacity(count);
        let mut stack = sources.clone();
        let mut remaining = indegree.clone();
        while let Some(v) = stack.pop() {
            topo.push(v);
            for &e in out[v].iter().rev() {
                let to = edges[e].1;
                remaining[to] -= 1;
                if remaining[to] == 0 {
                    stack.push(to);
                }
            }
        }
        if topo.len() != count {
            let stuck = (0..count).find(|&v| remaining[v] > 0).unwrap_or(0);
            return Err(Error::Cyclic(format!("tamari vertex {stuck}")));
        }
        if sources.len() != 1 || sinks.len() != 1 {
            return Err(Error::Invariant(format!(
                "expected one source and one sink, found {} and {}",
                sources.len(),
                sinks.len()
            )));
        }
        Ok(Self { universe, n, vertices, edges, out, topo, source: sources[0], sink: sinks[0] })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Poset] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize, IndexSet)] {
        &self.edges
    }

    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    /// Vertices in a topological order starting at the source.
    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    pub fn index_of(&self, p: &Poset) -> Option<usize> {
        self.vertices.iter().position(|v| v == p)
    }

    /// Length of the longest path from the source to each vertex.
    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0usize; self.vertices.len()];
        for &v in &self.topo {
            for &e in &self.out[v] {
                let to = self.edges[e].1;
                depth[to] = depth[to].max(depth[v] + 1);
            }
        }
        depth
    }

    /// All source-to-sink paths as label sequences.
    pub fn maximal_chains(&self) -> Vec<Vec<IndexSet>> {
        let mut out = Vec::new();
        let mut labels = Vec::new();
        self.collect(self.source, &mut labels, &mut out);
        out
    }

    fn collect(&self, v: usize, labels: &mut Vec<IndexSet>, out: &mut Vec<Vec<IndexSet>>) {
        if v == self.sink {
            out.push(labels.clone());
            return;
        }
        for &e in &self.out[v] {
            let (_, to, label) = self.edges[e];
            labels.push(label);
            self.collect(to, labels, out);
            labels.pop();
        }
    }

    pub fn count_maximal_chains(&self) -> u128 {
        let mut paths = vec![0u128; self.vertices.len()];
        paths[self.sink] = 1;
        for &v in self.topo.iter().rev() {
            for &e in &self.out[v] {
                paths[v] += paths[self.edges[e].1];
            }
        }
        paths[self.source]
    }

    /// Whether `a <= b` in the order generated by the edges.
    pub fn reachable(&self, a: usize, b: usize) -> bool {
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![a];
        while let Some(v) = stack.pop() {
            if v == b {
                return true;
            }
            if std::mem::replace(&mut seen[v], true) {
                continue;
            }
            stack.extend(self.out[v].iter().map(|&e| self.edges[e].1));
        }
        false
    }
}

/// `T(N,n)` together with the map sending each Bruhat vertex to its Tamari vertex.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub tamari: TamariOrder,
    /// `image[v]` is the Tamari vertex of Bruhat vertex `v`.
    pub image: Vec<usize>,
    /// Per Bruhat edge, whether it is visible.
    pub visible: Vec<bool>,
    /// Non-visible Bruhat edges whose endpoints carry R-posets with the same
    /// elements but different order relations.
    pub discrepancies: Vec<usize>,
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

/// Contracts the non-visible edges of a Bruhat order. Bruhat vertices with
/// equal R-posets are identified as well; each Tamari vertex is labelled by
/// the R-poset of its first Bruhat vertex.
pub fn reduce(bruhat: &BruhatOrder) -> Result<Reduction> {
    let count = bruhat.vertices().len();
    let posets: Vec<Poset> = bruhat.vertices().iter().map(r_poset).collect::<Result<_>>()?;
    let mut parent: Vec<usize> = (0..count).collect();
    let mut first: HashMap<&Poset, usize> = HashMap::new();
    for (v, r) in posets.iter().enumerate() {
        let rep = *first.entry(r).or_insert(v);
        let (a, b) = (find(&mut parent, rep), find(&mut parent, v));
        parent[a.max(b)] = a.min(b);
    }
    let mut visible = Vec::with_capacity(bruhat.edges().len());
    let mut discrepancies = Vec::new();
    for (e, &(from, to, label)) in bruhat.edges().iter().enumerate() {
        let hidden = edge_nonvisible_unchecked(&bruhat.vertices()[to], &label);
        visible.push(!hidden);
        if !hidden {
            continue;
        }
        if posets[from] != posets[to] {
            if posets[from].vertices() != posets[to].vertices() {
                return Err(Error::Invariant(format!(
                    "non-visible edge {} -> {} labelled {label} changes the visible elements",
                    bruhat.vertices()[from],
                    bruhat.vertices()[to]
                )));
            }
            discrepancies.push(e);
        }
        let (a, b) = (find(&mut parent, from), find(&mut parent, to));
        parent[a.max(b)] = a.min(b);
    }
    let mut vertices: Vec<Poset> = Vec::new();
    let mut class_id: HashMap<usize, usize> = HashMap::new();
    let mut image = Vec::with_capacity(count);
    for (v, r) in posets.iter().enumerate() {
        let root = find(&mut parent, v);
        let id = *class_id.entry(root).or_insert_with(|| {
            vertices.push(r.clone());
            vertices.len() - 1
        });
        image.push(id);
    }
    let mut edges = BTreeSet::new();
    for (e, &(from, to, label)) in bruhat.edges().iter().enumerate() {
        if !visible[e] {
            continue;
        }
        if image[from] == image[to] {
            return Err(Error::Invariant(format!(
                "visible edge {} -> {} labelled {label} joins equal R-posets",
                bruhat.vertices()[from],
                bruhat.vertices()[to]
            )));
        }
        edges.insert((image[from], image[to], label));
    }
    let tamari =
        TamariOrder::from_parts(bruhat.universe(), bruhat.rank(), vertices, edges.into_iter().collect())?;
    Ok(Reduction { tamari, image, visible, discrepancies })
}

pub fn build_tamari(universe: usize, n: usize) -> Result<TamariOrder> {
    Ok(reduce(&enumerate_bruhat(universe, n)?)?.tamari)
}
