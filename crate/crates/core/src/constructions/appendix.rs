//! The twelve small gadgets `G1..G12` built around a degree-4 vertex `x`.
//!
//! Vertex 0 is `x`, vertices 1..=4 are `x1..x4`, and the cell vertices
//! follow in the listed order. Edge rules:
//! * `x` is adjacent to `x1..x4`; the edges inside `N(x)` depend on the case;
//! * a cell vertex with index set `S` is adjacent to `x_i` iff `i ∈ S`;
//! * two cell vertices with index sets `S != T`, not both of size 2, are
//!   adjacent iff `S ∩ T` contains no edge of `N(x)`;
//! * two cell vertices of size 2 with `S != T` are adjacent;
//! * cell vertices with the same index set are not adjacent.

use super::LabeledGraph;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const APPENDIX_IDS: [&str; 12] = [
    "G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "G9", "G10", "G11", "G12",
];

const TWO_EDGES: &[(usize, usize)] = &[(1, 2), (3, 4)];
const PATH: &[(usize, usize)] = &[(1, 2), (2, 3), (3, 4)];
const CYCLE: &[(usize, usize)] = &[(1, 2), (2, 3), (3, 4), (1, 4)];

fn gadget_layout(id: &str) -> Option<(&'static [(usize, usize)], &'static [&'static str])> {
    Some(match id {
        "G1" => (TWO_EDGES, &["y123", "y124", "y134", "y234"]),
        "G2" => (PATH, &["y23", "z124", "z134"]),
        "G3" => (PATH, &["y23", "z124", "z124'", "z234"]),
        "G4" => (PATH, &["y123", "y124", "y134", "y234"]),
        "G5" => (PATH, &["y123", "y134"]),
        "G6" => (PATH, &["y124", "y134"]),
        "G7" => (CYCLE, &["y123", "y134"]),
        "G8" => (CYCLE, &["y123", "y124", "y234", "y134"]),
        "G9" => (CYCLE, &["y12", "y134", "y234"]),
        "G10" => (CYCLE, &["y12", "y23", "y134"]),
        "G11" => (CYCLE, &["y12", "y34", "y134", "y234", "y123", "y124"]),
        "G12" => (CYCLE, &["y12", "y23", "y34", "y124"]),
        _ => return None,
    })
}

/// Index set encoded in a cell-vertex name such as `y134` or `z124'`.
fn index_set(name: &str) -> Vec<usize> {
    let mut v: Vec<usize> = name
        .chars()
        .filter_map(|c| c.to_digit(10).map(|d| d as usize))
        .collect();
    v.sort_unstable();
    v
}

/// Canonical spelling of a gadget vertex name: subscript digits sorted, so
/// `y412` and `y124` denote the same vertex.
pub fn normalize_vertex_name(name: &str) -> String {
    let name = name.trim();
    let mut chars = name.chars();
    let Some(head) = chars.next() else {
        return String::new();
    };
    if head == 'x' {
        return name.to_string();
    }
    let primes: String = name.chars().filter(|&c| c == '\'').collect();
    let digits: String = index_set(name).iter().map(|d| d.to_string()).collect();
    format!("{head}{digits}{primes}")
}

pub fn appendix_graph(id: &str) -> Result<LabeledGraph> {
    let (nx_edges, cells) = gadget_layout(id).ok_or_else(|| Error::UnknownGadget(id.to_string()))?;
    let n = 5 + cells.len();
    let sets: Vec<Vec<usize>> = cells.iter().map(|c| index_set(c)).collect();
    let has_nx_edge = |common: &[usize]| {
        nx_edges
            .iter()
            .any(|(i, j)| common.contains(i) && common.contains(j))
    };

    let mut edges: Vec<(usize, usize)> = (1..=4).map(|i| (0, i)).collect();
    edges.extend_from_slice(nx_edges);
    for (k, set) in sets.iter().enumerate() {
        for &i in set {
            edges.push((5 + k, i));
        }
    }
    for k in 0..sets.len() {
        for l in k + 1..sets.len() {
            let (s, t) = (&sets[k], &sets[l]);
            if s == t {
                continue;
            }
            let adjacent = if s.len() == 2 && t.len() == 2 {
                true
            } else {
                let common: Vec<usize> = s.iter().copied().filter(|i| t.contains(i)).collect();
                !has_nx_edge(&common)
            };
            if adjacent {
                edges.push((5 + k, 5 + l));
            }
        }
    }

    let mut lg = LabeledGraph::new(Graph::from_edges(n, &edges)?, 4);
    lg.set_name(0, "x".into());
    for i in 1..=4 {
        lg.set_name(i, format!("x{i}"));
    }
    lg.set_label("x", VertexSet::singleton(0));
    lg.set_label("N(x)", (1..=4).collect());
    for (k, cell) in cells.iter().enumerate() {
        lg.set_name(5 + k, cell.to_string());
        let key: String = sets[k].iter().map(|d| d.to_string()).collect();
        let label = format!("V_{key}");
        let mut members = lg.label(&label).copied().unwrap_or_default();
        members.insert(5 + k);
        lg.set_label(&label, members);
    }
    Ok(lg)
}
