//! Partition of the non-neighbors of a vertex `x` by their trace on `N(x)`.
//!
//! Neighbors of `x` are labeled `x_1, x_2, ...` by ascending vertex index.
//! Index sets `S ⊆ {1..d}` are stored as bitmasks (bit `i - 1` for `i`).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest neighborhood handled by the general partition.
pub const MAX_PARTITION_DEGREE: usize = 12;

pub type IndexSet = u16;

/// Renders an index set as `"123"`; above 9 indices the entries are
/// comma-separated.
pub fn subset_key(set: IndexSet, d: usize) -> String {
    let idx: Vec<String> = (1..=d)
        .filter(|i| set & (1 << (i - 1)) != 0)
        .map(|i| i.to_string())
        .collect();
    if d > 9 {
        idx.join(",")
    } else {
        idx.concat()
    }
}

/// Parses `"134"` or `"1,3,4"` into an index set over `1..=d`.
pub fn parse_subset(key: &str, d: usize) -> Result<IndexSet> {
    let parts: Vec<&str> = if key.contains(',') {
        key.split(',').collect()
    } else {
        key.split("").filter(|p| !p.is_empty()).collect()
    };
    let mut set = 0;
    for p in parts {
        let i: usize = p
            .trim()
            .parse()
            .map_err(|_| Error::InvalidQuery(format!("bad index set `{key}`")))?;
        if i == 0 || i > d {
            return Err(Error::InvalidQuery(format!("index {i} outside 1..={d}")));
        }
        set |= 1 << (i - 1);
    }
    Ok(set)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodPartition {
    pub x: usize,
    /// `neighbors[i - 1]` is `x_i`.
    pub neighbors: Vec<usize>,
    /// Edges `x_i x_j` with `i < j`, as 1-based index pairs.
    pub nx_edges: Vec<(usize, usize)>,
    /// Nonempty cells `V_S`.
    pub cells: BTreeMap<IndexSet, VertexSet>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PartitionReport {
    pub x: usize,
    pub neighbors: Vec<usize>,
    pub nx_edges: Vec<String>,
    pub cells: BTreeMap<String, Vec<usize>>,
    /// Nonempty cells whose index set is independent in `N(x)`.
    pub independent_nonempty: Vec<String>,
}

/// Partition for a vertex of degree exactly 4.
pub fn partition_neighborhood(g: &Graph, x: usize) -> Result<NeighborhoodPartition> {
    check_vertex(g, x)?;
    if g.degree(x) != 4 {
        return Err(Error::DegreeMismatch {
            vertex: x,
            degree: g.degree(x),
            expected: 4,
        });
    }
    partition_neighborhood_general(g, x)
}

/// Partition for a vertex of any degree in `1..=12`.
pub fn partition_neighborhood_general(g: &Graph, x: usize) -> Result<NeighborhoodPartition> {
    check_vertex(g, x)?;
    let neighbors = g.neighbors(x).to_vec();
    let d = neighbors.len();
    if d == 0 || d > MAX_PARTITION_DEGREE {
        return Err(Error::Precondition(format!(
            "vertex {x} has degree {d}; partition needs 1..={MAX_PARTITION_DEGREE}"
        )));
    }
    let mut nx_edges = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            if g.has_edge(neighbors[i], neighbors[j]) {
                nx_edges.push((i + 1, j + 1));
            }
        }
    }
    let mut closed = *g.neighbors(x);
    closed.insert(x);
    let mut cells: BTreeMap<IndexSet, VertexSet> = BTreeMap::new();
    for y in g.vertices().difference(&closed).iter() {
        let trace = neighbors
            .iter()
            .enumerate()
            .filter(|(_, &xi)| g.has_edge(y, xi))
            .fold(0, |acc, (i, _)| acc | (1 << i));
        cells.entry(trace).or_default().insert(y);
    }
    Ok(NeighborhoodPartition {
        x,
        neighbors,
        nx_edges,
        cells,
    })
}

fn check_vertex(g: &Graph, x: usize) -> Result<()> {
    if x >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: x,
            n: g.order(),
        });
    }
    Ok(())
}

impl NeighborhoodPartition {
    pub fn degree(&self) -> usize {
        self.neighbors.len()
    }

    pub fn cell(&self, set: IndexSet) -> VertexSet {
        self.cells.get(&set).copied().unwrap_or_default()
    }

    /// All non-neighbors of `x` other than `x`.
    pub fn y(&self) -> VertexSet {
        self.cells.values().fold(VertexSet::new(), |acc, c| acc.union(c))
    }

    /// Whether `{x_i : i ∈ set}` spans at least one edge of `N(x)`.
    pub fn is_edge_supported(&self, set: IndexSet) -> bool {
        self.nx_edges
            .iter()
            .any(|&(i, j)| set & (1 << (i - 1)) != 0 && set & (1 << (j - 1)) != 0)
    }

    pub fn key(&self, set: IndexSet) -> String {
        subset_key(set, self.degree())
    }

    pub fn report(&self) -> PartitionReport {
        let d = self.degree();
        PartitionReport {
            x: self.x,
            neighbors: self.neighbors.clone(),
            nx_edges: self
                .nx_edges
                .iter()
                .map(|&(i, j)| subset_key((1 << (i - 1)) | (1 << (j - 1)), d))
                .collect(),
            cells: self
                .cells
                .iter()
                .map(|(&s, v)| (subset_key(s, d), v.to_vec()))
                .collect(),
            independent_nonempty: self
                .cells
                .keys()
                .filter(|&&s| !self.is_edge_supported(s))
                .map(|&s| subset_key(s, d))
                .collect(),
        }
    }
}

/// `𝒯_{S,i}`: every `T ⊆ {1..d}` with `i ∈ T` that contains at most one
/// endpoint of each `N(x)` edge lying inside `S`.
pub fn rule_targets(
    set: IndexSet,
    i: usize,
    nx_edges: &[(usize, usize)],
    d: usize,
) -> Result<Vec<IndexSet>> {
    if i == 0 || i > d {
        return Err(Error::InvalidQuery(format!("index {i} outside 1..={d}")));
    }
    let bit = |k: usize| 1u16 << (k - 1);
    if set & bit(i) != 0 {
        return Err(Error::InvalidQuery(format!("index {i} belongs to S")));
    }
    let inside: Vec<IndexSet> = nx_edges
        .iter()
        .filter(|&&(j, k)| set & bit(j) != 0 && set & bit(k) != 0)
        .map(|&(j, k)| bit(j) | bit(k))
        .collect();
    Ok((0..1u32 << d)
        .map(|t| t as IndexSet)
        .filter(|t| t & bit(i) != 0)
        .filter(|t| inside.iter().all(|&e| t & e != e))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleViolation {
    pub y: usize,
    pub cell: String,
    pub i: usize,
}

/// Every `y ∈ V_S` and `i ∉ S` must have a neighbor in `⋃_{T ∈ 𝒯_{S,i}} V_T`.
pub fn check_rules_lemma(g: &Graph, p: &NeighborhoodPartition) -> Vec<RuleViolation> {
    let d = p.degree();
    let mut out = Vec::new();
    for (&set, cell) in &p.cells {
        for i in (1..=d).filter(|i| set & (1 << (i - 1)) == 0) {
            let targets = rule_targets(set, i, &p.nx_edges, d).expect("i is outside S");
            let union = targets
                .iter()
                .fold(VertexSet::new(), |acc, &t| acc.union(&p.cell(t)));
            for y in cell.iter() {
                if g.neighbors(y).is_disjoint(&union) {
                    out.push(RuleViolation {
                        y,
                        cell: p.key(set),
                        i,
                    });
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CellRelation {
    Complete,
    Empty,
    Mixed,
}

/// Bipartite adjacency between `V_S` and `V_T`; vacuously complete when
/// either cell is empty.
pub fn cell_relation(
    g: &Graph,
    p: &NeighborhoodPartition,
    s: IndexSet,
    t: IndexSet,
) -> Result<CellRelation> {
    if s == t {
        return Err(Error::InvalidQuery("cell relation needs S != T".into()));
    }
    let (vs, vt) = (p.cell(s), p.cell(t));
    if vs.is_empty() || vt.is_empty() {
        return Ok(CellRelation::Complete);
    }
    let total = vs.len() * vt.len();
    let present: usize = vs.iter().map(|u| g.neighbors(u).intersection_len(&vt)).sum();
    Ok(match present {
        0 => CellRelation::Empty,
        p if p == total => CellRelation::Complete,
        _ => CellRelation::Mixed,
    })
}

/// For a degree-4 vertex whose neighborhood is a 4-cycle: the graph induced
/// by the four cells `V_e` (one per cycle edge `e`) is `K_4`-free and every
/// missing edge between different cells closes a `K_4` inside those cells.
pub fn check_rule5(g: &Graph, p: &NeighborhoodPartition) -> Result<bool> {
    let mut deg = [0usize; 4];
    for &(i, j) in &p.nx_edges {
        deg[i - 1] += 1;
        deg[j - 1] += 1;
    }
    if p.degree() != 4 || p.nx_edges.len() != 4 || deg != [2; 4] {
        return Err(Error::NeighborhoodPattern(format!(
            "rule 5 needs N(x) to be a 4-cycle, found edges {:?}",
            p.nx_edges
        )));
    }
    let parts: Vec<VertexSet> = p
        .nx_edges
        .iter()
        .map(|&(i, j)| p.cell((1 << (i - 1)) | (1 << (j - 1))))
        .collect();
    let union = parts.iter().fold(VertexSet::new(), |acc, c| acc.union(c));
    if g.has_clique_within(&union, 4) {
        return Ok(false);
    }
    for (a, pa) in parts.iter().enumerate() {
        for pb in &parts[a + 1..] {
            for u in pa.iter() {
                for v in pb.difference(g.neighbors(u)).iter() {
                    let common = g.neighbors(u).intersection(g.neighbors(v)).intersection(&union);
                    if !g.has_clique_within(&common, 2) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
