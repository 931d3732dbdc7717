//! Builders for the named graph families. Every builder is deterministic:
//! `A` vertices come first in ascending order, then `B`, then `Y`, then `X`.

mod appendix;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::support::{assemble, complete_to_support, padding_plan, SupportStructure};

pub use appendix::{appendix_graph, normalize_vertex_name, APPENDIX_IDS};

/// A graph with named vertices and named vertex classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    /// Clique order the graph is built against.
    pub s: usize,
    names: Vec<String>,
    labels: BTreeMap<String, VertexSet>,
}

/// Serializable view of a [`LabeledGraph`]'s names and classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelManifest {
    pub n: usize,
    pub s: usize,
    pub vertex_names: Vec<String>,
    pub labels: BTreeMap<String, Vec<usize>>,
}

impl LabeledGraph {
    /// Vertices are named by their index until renamed.
    pub fn new(graph: Graph, s: usize) -> Self {
        let names = (0..graph.order()).map(|v| v.to_string()).collect();
        LabeledGraph {
            graph,
            s,
            names,
            labels: BTreeMap::new(),
        }
    }

    pub fn set_label(&mut self, name: &str, set: VertexSet) {
        self.labels.insert(name.to_string(), set);
    }

    pub fn set_name(&mut self, v: usize, name: String) {
        self.names[v] = name;
    }

    pub fn label(&self, name: &str) -> Option<&VertexSet> {
        self.labels.get(name)
    }

    pub fn labels(&self) -> &BTreeMap<String, VertexSet> {
        &self.labels
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn manifest(&self) -> LabelManifest {
        LabelManifest {
            n: self.graph.order(),
            s: self.s,
            vertex_names: self.names.clone(),
            labels: self
                .labels
                .iter()
                .map(|(k, v)| (k.clone(), v.to_vec()))
                .collect(),
        }
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

fn range(start: usize, len: usize) -> VertexSet {
    (start..start + len).collect()
}

/// `K_{s-2}` joined with an independent set of `n - s + 2` vertices.
pub fn ehm(s: usize, n: usize) -> Result<LabeledGraph> {
    if s < 3 {
        return Err(invalid(format!("requires s >= 3, got s = {s}")));
    }
    if n < s {
        return Err(invalid(format!("requires n >= s, got n = {n}, s = {s}")));
    }
    let k = s - 2;
    let g = if k == 0 {
        Graph::empty(n)?
    } else {
        Graph::complete(k)?.join(&Graph::empty(n - k)?)?
    };
    let mut lg = LabeledGraph::new(g, s);
    lg.set_label("clique", range(0, k));
    lg.set_label("independent", range(k, n - k));
    for v in 0..k {
        lg.set_name(v, format!("c{}", v + 1));
    }
    for v in k..n {
        lg.set_name(v, format!("i{}", v - k + 1));
    }
    Ok(lg)
}

/// `(K_{s-1} - e)` joined with an independent set of `n - s + 1` vertices.
/// The removed edge is between vertices 0 and 1.
pub fn near_clique_join(s: usize, n: usize) -> Result<LabeledGraph> {
    if s < 3 {
        return Err(invalid(format!("requires s >= 3, got s = {s}")));
    }
    if n < s {
        return Err(invalid(format!("requires n >= s, got n = {n}, s = {s}")));
    }
    let k = s - 1;
    let core = Graph::complete(k)?.without_edge(0, 1)?;
    let g = core.join(&Graph::empty(n - k)?)?;
    let mut lg = LabeledGraph::new(g, s);
    lg.set_label("clique", range(0, k));
    lg.set_label("independent", range(k, n - k));
    Ok(lg)
}

/// Blow-up of the wheel on a 5-cycle `a1..a5`: the hub becomes `K_{s-3}`,
/// `a1`, `a3`, `a4` become independent sets of sizes `m1`, `m3`, `m4`.
/// Order: hub, a1, a2, a3, a4, a5.
pub fn w_graph(s: usize, m1: usize, m3: usize, m4: usize) -> Result<LabeledGraph> {
    if s < 3 {
        return Err(invalid(format!("requires s >= 3, got s = {s}")));
    }
    if m1 == 0 || m3 == 0 || m4 == 0 {
        return Err(invalid("blow-up sizes m1, m3, m4 must be at least 1"));
    }
    let hub = s - 3;
    let sizes = [m1, 1, m3, m4, 1];
    let n = hub + sizes.iter().sum::<usize>();
    let mut parts = Vec::with_capacity(5);
    let mut start = hub;
    for &len in &sizes {
        parts.push(range(start, len));
        start += len;
    }
    let mut edges = Vec::new();
    for u in 0..hub {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    for i in 0..5 {
        let j = (i + 1) % 5;
        for u in parts[i].iter() {
            for v in parts[j].iter() {
                edges.push((u, v));
            }
        }
    }
    let mut lg = LabeledGraph::new(Graph::from_edges(n, &edges)?, s);
    lg.set_label("hub", range(0, hub));
    for (i, p) in parts.iter().enumerate() {
        lg.set_label(&format!("a{}", i + 1), *p);
        for (k, v) in p.iter().enumerate() {
            let name = if p.len() == 1 {
                format!("a{}", i + 1)
            } else {
                format!("a{}_{}", i + 1, k + 1)
            };
            lg.set_name(v, name);
        }
    }
    for v in 0..hub {
        lg.set_name(v, format!("h{}", v + 1));
    }
    Ok(lg)
}

fn side_sets(na: usize, nb: usize) -> (VertexSet, VertexSet) {
    (range(0, na), range(na, nb))
}

fn pad(core: SupportStructure, t: usize, n: usize, names: &[String]) -> Result<LabeledGraph> {
    let done = complete_to_support(&core)?;
    let plan = padding_plan(&done, t, n)?;
    let mut lg = assemble(&done, &plan)?;
    for (v, name) in names.iter().enumerate() {
        lg.set_name(v, name.clone());
    }
    Ok(lg)
}

/// The 8-vertex pre-support structure behind `H_t(n)`.
pub fn h_core() -> (SupportStructure, Vec<String>) {
    const TRIPLES: [[usize; 3]; 4] = [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]];
    let mut edges = vec![(0, 1), (2, 3)];
    // b123-b234-b124-b134-b123
    edges.extend([(4, 7), (7, 5), (5, 6), (6, 4)]);
    for (k, triple) in TRIPLES.iter().enumerate() {
        for &r in triple {
            edges.push((r - 1, 4 + k));
        }
    }
    let g = Graph::from_edges(8, &edges).expect("static edge list");
    let (a, b) = side_sets(4, 4);
    let mut names: Vec<String> = (1..=4).map(|i| format!("a{i}")).collect();
    names.extend(TRIPLES.iter().map(|t| format!("b{}{}{}", t[0], t[1], t[2])));
    (SupportStructure::new(g, a, b, 4).expect("static sides"), names)
}

pub fn h_graph(t: usize, n: usize) -> Result<LabeledGraph> {
    if t < 4 {
        return Err(invalid(format!("requires t >= 4, got t = {t}")));
    }
    if n <= 2 * t {
        return Err(invalid(format!("requires n > 2t, got n = {n}, t = {t}")));
    }
    let (core, names) = h_core();
    pad(core, t, n, &names)
}

/// The pre-support structure behind `F_{s,t}(n)`: two complete
/// `(s-2)`-partite graphs with parts of size 2, `a_i` joined to
/// `b_i, ..., b_{i+s-3}` (indices mod `2(s-2)`).
pub fn f_core(s: usize) -> Result<(SupportStructure, Vec<String>)> {
    if s < 4 {
        return Err(invalid(format!("requires s > 3, got s = {s}")));
    }
    let p = 2 * (s - 2);
    let mut edges = Vec::new();
    for i in 0..p {
        for j in i + 1..p {
            if (j + p - i) % p != s - 2 {
                edges.push((i, j));
                edges.push((p + i, p + j));
            }
        }
        for k in 0..s - 2 {
            edges.push((i, p + (i + k) % p));
        }
    }
    let g = Graph::from_edges(2 * p, &edges)?;
    let (a, b) = side_sets(p, p);
    let mut names: Vec<String> = (1..=p).map(|i| format!("a{i}")).collect();
    names.extend((1..=p).map(|i| format!("b{i}")));
    Ok((SupportStructure::new(g, a, b, s)?, names))
}

pub fn f_graph(s: usize, t: usize, n: usize) -> Result<LabeledGraph> {
    if s < 4 {
        return Err(invalid(format!("requires s > 3, got s = {s}")));
    }
    let p = 2 * (s - 2);
    if t < p + 1 {
        return Err(invalid(format!("requires t >= 2(s-2)+1 = {}, got t = {t}", p + 1)));
    }
    if n < p + 2 * t {
        return Err(invalid(format!(
            "requires n >= 2(s-2)+2t = {}, got n = {n}",
            p + 2 * t
        )));
    }
    let (core, names) = f_core(s)?;
    pad(core, t, n, &names)
}

/// Three parallel classes of lines of the affine plane of order 3 on
/// points 1..9 (the row class is not used).
pub const R_LINE_CLASSES: [[[usize; 3]; 3]; 3] = [
    [[1, 4, 7], [2, 5, 8], [3, 6, 9]],
    [[1, 5, 9], [2, 6, 7], [3, 4, 8]],
    [[1, 6, 8], [2, 4, 9], [3, 5, 7]],
];

/// The 36-vertex pre-support structure behind `R_t(n)`, with `s = 5`.
/// `A` is 0..9 (class by class), `B_m` is `9 + 3(m-1) ..`.
pub fn r_core() -> (SupportStructure, Vec<String>) {
    let b = |m: usize, k: usize| 9 + 3 * (m - 1) + (k - 1);
    let mut edges = Vec::new();
    let mut names = Vec::new();
    for (class, lines) in R_LINE_CLASSES.iter().enumerate() {
        let base = 3 * class;
        edges.extend([(base, base + 1), (base, base + 2), (base + 1, base + 2)]);
        for (li, line) in lines.iter().enumerate() {
            let a = base + li;
            names.push(format!("a{}{}{}", line[0], line[1], line[2]));
            for &m in line {
                for k in 1..=3 {
                    edges.push((a, b(m, k)));
                }
            }
            for m in 1..=9 {
                edges.push((a, b(m, class + 1)));
            }
        }
    }
    for m in 1..=9 {
        edges.extend([(b(m, 1), b(m, 2)), (b(m, 1), b(m, 3)), (b(m, 2), b(m, 3))]);
        for k in 1..=3 {
            names.push(format!("b{m}_{k}"));
        }
    }
    let g = Graph::from_edges(36, &edges).expect("static edge list");
    let (a, bs) = side_sets(9, 27);
    (SupportStructure::new(g, a, bs, 5).expect("static sides"), names)
}

pub fn r_graph(t: usize, n: usize) -> Result<LabeledGraph> {
    if t < 10 {
        return Err(invalid(format!("requires t > 9, got t = {t}")));
    }
    if n <= 2 * t + 12 {
        return Err(invalid(format!("requires n > 2t+12 = {}, got n = {n}", 2 * t + 12)));
    }
    // The 36-vertex core plus |Y| = t - 9 padding vertices must leave room for X.
    if n < t + 28 {
        return Err(invalid(format!("requires n >= t+28 = {}, got n = {n}", t + 28)));
    }
    let (core, names) = r_core();
    let mut lg = pad(core, t, n, &names)?;
    for c in 0..3 {
        lg.set_label(&format!("A_{}", c + 1), range(3 * c, 3));
    }
    for m in 0..9 {
        lg.set_label(&format!("B_{}", m + 1), range(9 + 3 * m, 3));
    }
    Ok(lg)
}
