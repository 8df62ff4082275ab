//! DOT, JSON and SVG renderings of orders, posets, soliton graphs and trees.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context, Result};
use num::{BigRational, ToPrimitive};
use serde::{Deserialize, Serialize};
use tamari_forge::bruhat::BruhatOrder;
use tamari_forge::tropic::{SegmentEnd, SolitonGraph};
use tamari_forge::{BinaryTree, ConsistentSet, IndexSet, Poset, TamariOrder};

pub const SCHEMA: &str = "tamari-forge/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Dot,
    Json,
    Svg,
}

/// A rendered artifact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExportDocument {
    pub format: Format,
    pub payload: String,
}

/// Anything the exporter knows how to render.
pub enum Exportable<'a> {
    Bruhat(&'a BruhatOrder),
    Tamari(&'a TamariOrder),
    Poset(&'a Poset),
    Graph(&'a SolitonGraph),
    Tree(&'a BinaryTree),
}

pub fn export(object: Exportable<'_>, format: Format) -> Result<ExportDocument> {
    let payload = match (object, format) {
        (Exportable::Bruhat(b), Format::Dot) => bruhat_dot(b),
        (Exportable::Bruhat(b), Format::Json) => to_json(&bruhat_doc(b))?,
        (Exportable::Tamari(t), Format::Dot) => tamari_dot(t),
        (Exportable::Tamari(t), Format::Json) => to_json(&tamari_doc(t))?,
        (Exportable::Poset(p), Format::Dot) => poset_dot(p),
        (Exportable::Poset(p), Format::Json) => to_json(&poset_doc(p))?,
        (Exportable::Graph(g), Format::Json) => to_json(&graph_doc(g))?,
        (Exportable::Graph(g), Format::Svg) => graph_svg(g),
        (Exportable::Tree(t), Format::Json) => {
            to_json(&TreeDoc { schema: SCHEMA.into(), kind: "tree".into(), tree: t.to_string() })?
        }
        (Exportable::Tree(t), Format::Svg) => tree_svg(t),
        (_, f) => bail!(UnsupportedFormat(f)),
    };
    Ok(ExportDocument { format, payload })
}

#[derive(Debug)]
pub struct UnsupportedFormat(pub Format);

impl std::fmt::Display for UnsupportedFormat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?} output is not available for this object", self.0)
    }
}

impl std::error::Error for UnsupportedFormat {}

fn to_json<T: Serialize>(doc: &T) -> Result<String> {
    Ok(serde_json::to_string(doc)?)
}

/// Exact rational as `"a/b"`.
pub fn rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct PosetDoc {
    pub vertices: Vec<String>,
    pub covers: Vec<[String; 2]>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct VertexDoc {
    pub id: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poset: Option<PosetDoc>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct EdgeDoc {
    pub from: usize,
    pub to: usize,
    pub label: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct OrderDoc {
    pub schema: String,
    pub kind: String,
    #[serde(rename = "N")]
    pub universe: usize,
    pub n: usize,
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<EdgeDoc>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct PointDoc {
    pub x: String,
    pub y: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct GraphVertexDoc {
    pub x: String,
    pub y: String,
    pub labels: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct SegmentDoc {
    pub label: String,
    pub p0: PointDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p1: Option<PointDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ray: Option<PointDoc>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct GraphDoc {
    pub schema: String,
    pub kind: String,
    #[serde(rename = "M")]
    pub m: usize,
    pub vertices: Vec<GraphVertexDoc>,
    pub segments: Vec<SegmentDoc>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct TreeDoc {
    pub schema: String,
    pub kind: String,
    pub tree: String,
}

fn members(u: &ConsistentSet) -> Vec<String> {
    u.members().iter().map(IndexSet::label).collect()
}

fn edge_docs(edges: &[(usize, usize, IndexSet)]) -> Vec<EdgeDoc> {
    edges.iter().map(|&(from, to, k)| EdgeDoc { from, to, label: k.label() }).collect()
}

pub fn poset_doc(p: &Poset) -> PosetDoc {
    PosetDoc {
        vertices: p.vertices().iter().map(IndexSet::label).collect(),
        covers: p.covers().iter().map(|(a, b)| [a.label(), b.label()]).collect(),
    }
}

pub fn bruhat_doc(b: &BruhatOrder) -> OrderDoc {
    OrderDoc {
        schema: SCHEMA.into(),
        kind: "bruhat".into(),
        universe: b.universe(),
        n: b.rank(),
        vertices: b
            .vertices()
            .iter()
            .enumerate()
            .map(|(id, u)| VertexDoc { id, elements: Some(members(u)), poset: None })
            .collect(),
        edges: edge_docs(b.edges()),
    }
}

pub fn tamari_doc(t: &TamariOrder) -> OrderDoc {
    OrderDoc {
        schema: SCHEMA.into(),
        kind: "tamari".into(),
        universe: t.universe(),
        n: t.rank(),
        vertices: t
            .vertices()
            .iter()
            .enumerate()
            .map(|(id, p)| VertexDoc { id, elements: None, poset: Some(poset_doc(p)) })
            .collect(),
        edges: edge_docs(t.edges()),
    }
}

fn point(x: &BigRational, y: &BigRational) -> PointDoc {
    PointDoc { x: rational(x), y: rational(y) }
}

pub fn graph_doc(g: &SolitonGraph) -> GraphDoc {
    GraphDoc {
        schema: SCHEMA.into(),
        kind: "soliton-graph".into(),
        m: g.m,
        vertices: g
            .vertices
            .iter()
            .map(|v| GraphVertexDoc { x: rational(&v.at.x), y: rational(&v.at.y), labels: v.phases.label() })
            .collect(),
        segments: g
            .segments
            .iter()
            .map(|s| {
                let start = &g.vertices[s.start].at;
                let (p1, ray) = match &s.end {
                    SegmentEnd::Vertex(w) => (Some(point(&g.vertices[*w].at.x, &g.vertices[*w].at.y)), None),
                    SegmentEnd::Ray(d) => (None, Some(point(&d.x, &d.y))),
                };
                SegmentDoc { label: s.label.label(), p0: point(&start.x, &start.y), p1, ray }
            })
            .collect(),
    }
}

fn check_schema(schema: &str, kind: &str, expected: &str) -> Result<()> {
    if schema != SCHEMA {
        bail!("unsupported schema {schema:?}, expected {SCHEMA:?}");
    }
    if kind != expected {
        bail!("document describes a {kind} object, expected {expected}");
    }
    Ok(())
}

fn parse_set(universe: usize, label: &str) -> Result<IndexSet> {
    IndexSet::parse(universe, label).with_context(|| format!("bad index set {label:?}"))
}

pub fn poset_from_doc(doc: &PosetDoc, universe: usize) -> Result<Poset> {
    let vertices = doc.vertices.iter().map(|l| parse_set(universe, l)).collect::<Result<Vec<_>>>()?;
    let covers = doc
        .covers
        .iter()
        .map(|[a, b]| Ok((parse_set(universe, a)?, parse_set(universe, b)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poset::from_parts(vertices, &covers)?)
}

pub fn import_poset(text: &str, universe: usize) -> Result<Poset> {
    poset_from_doc(&serde_json::from_str(text)?, universe)
}

fn order_edges(doc: &OrderDoc) -> Result<Vec<(usize, usize, IndexSet)>> {
    doc.edges.iter().map(|e| Ok((e.from, e.to, parse_set(doc.universe, &e.label)?))).collect()
}

fn check_ids(doc: &OrderDoc) -> Result<()> {
    if let Some((i, v)) = doc.vertices.iter().enumerate().find(|(i, v)| v.id != *i) {
        bail!("vertex at position {i} has id {}", v.id);
    }
    Ok(())
}

pub fn import_bruhat(text: &str) -> Result<BruhatOrder> {
    let doc: OrderDoc = serde_json::from_str(text)?;
    check_schema(&doc.schema, &doc.kind, "bruhat")?;
    check_ids(&doc)?;
    let vertices = doc
        .vertices
        .iter()
        .map(|v| {
            let labels = v.elements.as_ref().ok_or_else(|| anyhow!("vertex {} lacks elements", v.id))?;
            let sets = labels.iter().map(|l| parse_set(doc.universe, l)).collect::<Result<Vec<_>>>()?;
            Ok(ConsistentSet::new(doc.universe, doc.n, &sets)?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BruhatOrder::from_parts(doc.universe, doc.n, vertices, order_edges(&doc)?)?)
}

pub fn import_tamari(text: &str) -> Result<TamariOrder> {
    let doc: OrderDoc = serde_json::from_str(text)?;
    check_schema(&doc.schema, &doc.kind, "tamari")?;
    check_ids(&doc)?;
    let vertices = doc
        .vertices
        .iter()
        .map(|v| {
            let p = v.poset.as_ref().ok_or_else(|| anyhow!("vertex {} lacks a poset", v.id))?;
            poset_from_doc(p, doc.universe)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TamariOrder::from_parts(doc.universe, doc.n, vertices, order_edges(&doc)?)?)
}

fn escape(label: &str) -> String {
    label.replace('"', "\\\"")
}

/// Shared DOT layout: one `rank=same` group per level so that sources sit on top.
fn dot(name: &str, nodes: &[String], levels: &[usize], edges: &[(usize, usize, Option<String>)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {name} {{");
    let _ = writeln!(out, "  rankdir=TB;");
    let _ = writeln!(out, "  node [shape=box, fontname=\"monospace\"];");
    for (i, label) in nodes.iter().enumerate() {
        let _ = writeln!(out, "  v{i} [label=\"{}\", rank={}];", escape(label), levels[i]);
    }
    let mut by_level: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, &l) in levels.iter().enumerate() {
        by_level.entry(l).or_default().push(i);
    }
    for ids in by_level.values() {
        let names: Vec<String> = ids.iter().map(|i| format!("v{i};")).collect();
        let _ = writeln!(out, "  {{ rank=same; {} }}", names.join(" "));
    }
    for (a, b, label) in edges {
        match label {
            Some(l) => {
                let _ = writeln!(out, "  v{a} -> v{b} [label=\"{}\"];", escape(l));
            }
            None => {
                let _ = writeln!(out, "  v{a} -> v{b};");
            }
        }
    }
    out.push_str("}\n");
    out
}

fn show_set(items: &[String]) -> String {
    format!("{{{}}}", items.join(","))
}

fn show_poset(p: &Poset) -> String {
    let covers: Vec<String> =
        p.covers().iter().map(|(a, b)| format!("{}<{}", a.label(), b.label())).collect();
    let vertices: Vec<String> = p.vertices().iter().map(IndexSet::label).collect();
    if covers.is_empty() {
        show_set(&vertices)
    } else {
        format!("{} | {}", show_set(&vertices), covers.join(" "))
    }
}

fn labelled(edges: &[(usize, usize, IndexSet)]) -> Vec<(usize, usize, Option<String>)> {
    edges.iter().map(|&(a, b, k)| (a, b, Some(k.label()))).collect()
}

pub fn bruhat_dot(b: &BruhatOrder) -> String {
    let nodes: Vec<String> = b.vertices().iter().map(|u| show_set(&members(u))).collect();
    let levels: Vec<usize> = b.vertices().iter().map(ConsistentSet::len).collect();
    dot("bruhat", &nodes, &levels, &labelled(b.edges()))
}

pub fn tamari_dot(t: &TamariOrder) -> String {
    let nodes: Vec<String> = t.vertices().iter().map(show_poset).collect();
    dot("tamari", &nodes, &t.depths(), &labelled(t.edges()))
}

pub fn poset_dot(p: &Poset) -> String {
    let count = p.len();
    let mut levels = vec![0usize; count];
    // covers are sorted by source index, which need not be topological
    let covers = p.cover_indices();
    for _ in 0..count {
        for &(a, b) in covers {
            levels[b] = levels[b].max(levels[a] + 1);
        }
    }
    let nodes: Vec<String> = p.vertices().iter().map(IndexSet::label).collect();
    let edges: Vec<_> = covers.iter().map(|&(a, b)| (a, b, None)).collect();
    dot("poset", &nodes, &levels, &edges)
}

fn f(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(0.0)
}

fn svg_header(out: &mut String, min: (f64, f64), size: (f64, f64)) {
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.3} {:.3} {:.3} {:.3}\" width=\"600\" height=\"600\">",
        min.0, min.1, size.0, size.1
    );
}

/// Static drawing of a soliton graph; rays are cut off outside the bounding box.
pub fn graph_svg(g: &SolitonGraph) -> String {
    let xs: Vec<f64> = g.vertices.iter().map(|v| f(&v.at.x)).collect();
    let ys: Vec<f64> = g.vertices.iter().map(|v| 0.0 - f(&v.at.y)).collect();
    let lo = |v: &[f64]| v.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = |v: &[f64]| v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let (x0, x1, y0, y1) =
        if g.vertices.is_empty() { (-1.0, 1.0, -1.0, 1.0) } else { (lo(&xs), hi(&xs), lo(&ys), hi(&ys)) };
    let span = (x1 - x0).max(y1 - y0).max(1.0);
    let reach = span;
    let pad = span * 1.2;
    let stroke = span / 150.0;
    let mut out = String::new();
    svg_header(&mut out, (x0 - pad, y0 - pad), (x1 - x0 + 2.0 * pad, y1 - y0 + 2.0 * pad));
    for s in &g.segments {
        let (ax, ay) = (xs[s.start], ys[s.start]);
        let (bx, by) = match &s.end {
            SegmentEnd::Vertex(w) => (xs[*w], ys[*w]),
            SegmentEnd::Ray(d) => {
                let (dx, dy) = (f(&d.x), 0.0 - f(&d.y));
                let norm = (dx * dx + dy * dy).sqrt().max(f64::EPSILON);
                (ax + dx / norm * reach, ay + dy / norm * reach)
            }
        };
        let _ = writeln!(
            out,
            "  <polyline points=\"{ax:.3},{ay:.3} {bx:.3},{by:.3}\" fill=\"none\" stroke=\"black\" stroke-width=\"{stroke:.4}\"><title>{}</title></polyline>",
            s.label.label()
        );
    }
    for (i, v) in g.vertices.iter().enumerate() {
        let _ = writeln!(
            out,
            "  <circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"{:.4}\"><title>{}</title></circle>",
            xs[i],
            ys[i],
            stroke * 2.0,
            v.phases.label()
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Rooted drawing of a binary tree, root at the top and leaves in order at the bottom.
pub fn tree_svg(t: &BinaryTree) -> String {
    fn place(
        t: &BinaryTree,
        depth: usize,
        next: &mut f64,
        nodes: &mut Vec<(f64, f64, String)>,
        lines: &mut Vec<(f64, f64, f64, f64)>,
    ) -> (f64, f64) {
        match t {
            BinaryTree::Leaf(i) => {
                let x = *next;
                *next += 1.0;
                nodes.push((x, depth as f64, i.to_string()));
                (x, depth as f64)
            }
            BinaryTree::Node(l, r) => {
                let a = place(l, depth + 1, next, nodes, lines);
                let b = place(r, depth + 1, next, nodes, lines);
                let here = ((a.0 + b.0) / 2.0, depth as f64);
                lines.push((here.0, here.1, a.0, a.1));
                lines.push((here.0, here.1, b.0, b.1));
                here
            }
        }
    }
    let mut nodes = Vec::new();
    let mut lines = Vec::new();
    place(t, 0, &mut 0.0, &mut nodes, &mut lines);
    let width = t.leaves() as f64;
    let height = nodes.iter().map(|n| n.1).fold(0.0, f64::max) + 1.0;
    let mut out = String::new();
    svg_header(&mut out, (-1.0, -1.0), (width + 1.0, height + 1.0));
    for (x0, y0, x1, y1) in lines {
        let _ = writeln!(
            out,
            "  <line x1=\"{x0:.3}\" y1=\"{y0:.3}\" x2=\"{x1:.3}\" y2=\"{y1:.3}\" stroke=\"black\" stroke-width=\"0.05\"/>"
        );
    }
    for (x, y, label) in nodes {
        let _ = writeln!(
            out,
            "  <text x=\"{x:.3}\" y=\"{:.3}\" font-size=\"0.4\" text-anchor=\"middle\">{label}</text>",
            y + 0.5
        );
    }
    out.push_str("</svg>\n");
    out
}
