//! Support structures: the two-sided gadgets that the constructions pad out
//! into saturated graphs of prescribed order and minimum degree.
//!
//! A *pre-support structure* for `K_s` is a graph on disjoint sides `A`, `B`
//! where both sides are `K_{s-1}`-free, every vertex sees a `K_{s-2}` on the
//! opposite side, and the whole graph is `K_s`-free. Greedy completion adds
//! every missing pair that keeps those properties; the result is a *support
//! structure*, in which every remaining missing pair is blocked. Assembly
//! then adds independent sets `X` (joined to `A ∪ Y`) and `Y` (joined to
//! `B ∪ X`).

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::constructions::LabeledGraph;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportStructure {
    graph: Graph,
    a: VertexSet,
    b: VertexSet,
    s: usize,
}

/// The four pre-support conditions, evaluated independently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PreSupportReport {
    /// `A` and `B` each induce a `K_{s-1}`-free graph.
    pub sides_clique_free: bool,
    /// Every `a ∈ A` has a `K_{s-2}` in `N(a) ∩ B`.
    pub a_supported: bool,
    /// Every `b ∈ B` has a `K_{s-2}` in `N(b) ∩ A`.
    pub b_supported: bool,
    /// The whole graph is `K_s`-free.
    pub clique_free: bool,
    pub unsupported_a: Vec<usize>,
    pub unsupported_b: Vec<usize>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupportReport {
    pub pre: PreSupportReport,
    /// Every missing pair inside `A` would create a `K_{s-1}` inside `A` or a `K_s`.
    pub a_side_maximal: bool,
    /// Same for `B`.
    pub b_side_maximal: bool,
    /// Every missing `A`–`B` pair would create a `K_s`.
    pub cross_saturated: bool,
    /// `A` alone is `K_{s-1}`-saturated as an induced graph (stricter, informational).
    pub a_induced_saturated: bool,
    pub b_induced_saturated: bool,
    /// Up to 16 missing pairs that are not blocked.
    pub open_pairs: Vec<(usize, usize)>,
    pub ok: bool,
}

impl SupportStructure {
    /// `a` and `b` must be disjoint and cover every vertex of `graph`.
    pub fn new(graph: Graph, a: VertexSet, b: VertexSet, s: usize) -> Result<Self> {
        if s < 3 {
            return Err(Error::InvalidParameters(format!("clique order s = {s} < 3")));
        }
        if !a.is_disjoint(&b) {
            return Err(Error::InvalidParameters("sides A and B overlap".into()));
        }
        if a.union(&b) != graph.vertices() {
            return Err(Error::InvalidParameters(
                "sides A and B must cover every vertex".into(),
            ));
        }
        Ok(SupportStructure { graph, a, b, s })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn a(&self) -> &VertexSet {
        &self.a
    }

    pub fn b(&self) -> &VertexSet {
        &self.b
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// Minimum degree (in the structure) over the vertices of `side`.
    pub fn side_min_degree(&self, side: &VertexSet) -> usize {
        side.iter().map(|v| self.graph.degree(v)).min().unwrap_or(0)
    }

    fn side_of(&self, v: usize) -> &VertexSet {
        if self.a.contains(v) {
            &self.a
        } else {
            &self.b
        }
    }

    /// Whether adding the missing pair `uv` would create a `K_{s-1}` on a
    /// side (for same-side pairs) or a `K_s` anywhere.
    pub fn is_blocked(&self, u: usize, v: usize) -> bool {
        let common = self.graph.neighbors(u).intersection(self.graph.neighbors(v));
        if self.graph.has_clique_within(&common, self.s - 2) {
            return true;
        }
        let side = self.side_of(u);
        side.contains(v) && self.graph.has_clique_within(&common.intersection(side), self.s - 3)
    }
}

pub fn check_pre_support(ss: &SupportStructure) -> PreSupportReport {
    let g = &ss.graph;
    let s = ss.s;
    let sides_clique_free =
        !g.has_clique_within(&ss.a, s - 1) && !g.has_clique_within(&ss.b, s - 1);
    let unsupported = |side: &VertexSet, other: &VertexSet| -> Vec<usize> {
        side.iter()
            .filter(|&v| !g.has_clique_within(&g.neighbors(v).intersection(other), s - 2))
            .collect()
    };
    let unsupported_a = unsupported(&ss.a, &ss.b);
    let unsupported_b = unsupported(&ss.b, &ss.a);
    let clique_free = g.is_clique_free(s);
    let a_supported = unsupported_a.is_empty();
    let b_supported = unsupported_b.is_empty();
    PreSupportReport {
        sides_clique_free,
        a_supported,
        b_supported,
        clique_free,
        unsupported_a,
        unsupported_b,
        ok: sides_clique_free && a_supported && b_supported && clique_free,
    }
}

pub fn check_support(ss: &SupportStructure) -> SupportReport {
    let pre = check_pre_support(ss);
    let g = &ss.graph;
    let (mut a_max, mut b_max, mut cross) = (true, true, true);
    let mut open_pairs = Vec::new();
    for (u, v) in missing_pairs(g) {
        if ss.is_blocked(u, v) {
            continue;
        }
        match (ss.a.contains(u), ss.a.contains(v)) {
            (true, true) => a_max = false,
            (false, false) => b_max = false,
            _ => cross = false,
        }
        if open_pairs.len() < 16 {
            open_pairs.push((u, v));
        }
    }
    let induced_saturated = |side: &VertexSet| -> bool {
        g.induced(side)
            .map(|(h, _)| h.is_saturated(ss.s - 1))
            .unwrap_or(true)
    };
    SupportReport {
        ok: pre.ok && a_max && b_max && cross,
        pre,
        a_side_maximal: a_max,
        b_side_maximal: b_max,
        cross_saturated: cross,
        a_induced_saturated: induced_saturated(&ss.a),
        b_induced_saturated: induced_saturated(&ss.b),
        open_pairs,
    }
}

fn missing_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in g.vertices().difference(g.neighbors(u)).above(u).iter() {
            out.push((u, v));
        }
    }
    out
}

/// Greedy completion: sweeps the missing pairs in lexicographic order,
/// adding each one that is not blocked, until a sweep adds nothing.
pub fn complete_to_support(ss: &SupportStructure) -> Result<SupportStructure> {
    complete_with_trace(ss).map(|(c, _)| c)
}

/// As [`complete_to_support`], also returning the added edges in order.
pub fn complete_with_trace(ss: &SupportStructure) -> Result<(SupportStructure, Vec<(usize, usize)>)> {
    let pre = check_pre_support(ss);
    if !pre.ok {
        return Err(Error::NotPreSupport(describe_pre(&pre)));
    }
    let mut out = ss.clone();
    let mut added = Vec::new();
    loop {
        let before = added.len();
        for (u, v) in missing_pairs(&out.graph) {
            if !out.graph.has_edge(u, v) && !out.is_blocked(u, v) {
                out.graph.add_edge(u, v);
                added.push((u, v));
            }
        }
        if added.len() == before {
            break;
        }
    }
    Ok((out, added))
}

fn describe_pre(r: &PreSupportReport) -> String {
    let mut parts = Vec::new();
    if !r.sides_clique_free {
        parts.push("a side contains K_{s-1}".to_string());
    }
    if !r.a_supported {
        parts.push(format!("A vertices without K_(s-2) in B: {:?}", r.unsupported_a));
    }
    if !r.b_supported {
        parts.push(format!("B vertices without K_(s-2) in A: {:?}", r.unsupported_b));
    }
    if !r.clique_free {
        parts.push("structure contains K_s".to_string());
    }
    parts.join("; ")
}

/// Which side of the padded graph realises the minimum degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BindingSide {
    /// Vertices of `X ∪ B` have the minimum degree.
    XB,
    /// Vertices of `Y ∪ A` have the minimum degree.
    YA,
    Both,
}

/// Sizes of the padding sets `X` and `Y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PaddingPlan {
    /// `N = t - min(|B|, δ(A))`.
    pub n_slack: i64,
    /// `M = t - min(|A|, δ(B))`.
    pub m_slack: i64,
    pub x_count: usize,
    pub y_count: usize,
    pub order: usize,
    pub min_degree: usize,
    pub binding: BindingSide,
    /// Whether `t > min(|A|, |B|, δ(A), δ(B))` holds literally.
    pub strict_degree_hypothesis: bool,
}

/// Computes `N`, `M` and the padding sizes for target minimum degree `t`
/// and order `n`, reading side degrees from `ss` (normally the completed
/// structure).
pub fn padding_plan(ss: &SupportStructure, t: usize, n: usize) -> Result<PaddingPlan> {
    let (na, nb) = (ss.a.len() as i64, ss.b.len() as i64);
    let (da, db) = (
        ss.side_min_degree(&ss.a) as i64,
        ss.side_min_degree(&ss.b) as i64,
    );
    let (ti, ni) = (t as i64, n as i64);
    let n_slack = ti - nb.min(da);
    let m_slack = ti - na.min(db);
    let y_count = m_slack.max(0);
    let x_count = ni - na - nb - y_count;
    if x_count < 1 {
        return Err(Error::InvalidPlan(format!(
            "n = {n} leaves {x_count} vertices for X (need at least 1)"
        )));
    }
    if ni <= na + nb + n_slack + m_slack {
        return Err(Error::InvalidPlan(format!(
            "need n > |A| + |B| + N + M = {}",
            na + nb + n_slack + m_slack
        )));
    }
    if x_count < n_slack {
        return Err(Error::InvalidPlan(format!(
            "|X| = {x_count} < N = {n_slack}: A/Y side would fall below degree {t}"
        )));
    }
    let ya = x_count + if y_count > 0 { nb.min(da) } else { da };
    let xb = y_count + na.min(db);
    let achieved = ya.min(xb);
    if achieved != ti {
        return Err(Error::InvalidPlan(format!(
            "padding yields minimum degree {achieved}, not {t}"
        )));
    }
    let binding = match (ya == ti, xb == ti) {
        (true, true) => BindingSide::Both,
        (true, false) => BindingSide::YA,
        _ => BindingSide::XB,
    };
    Ok(PaddingPlan {
        n_slack,
        m_slack,
        x_count: x_count as usize,
        y_count: y_count as usize,
        order: n,
        min_degree: t,
        binding,
        strict_degree_hypothesis: ti > na.min(nb).min(da).min(db),
    })
}

/// Pads a support structure into a `K_s`-saturated graph. Vertices keep
/// their indices from `ss`; `Y` follows, then `X`.
pub fn assemble(ss: &SupportStructure, plan: &PaddingPlan) -> Result<LabeledGraph> {
    let report = check_support(ss);
    if !report.ok {
        return Err(Error::AssemblyFailed(format!(
            "input is not a support structure (open pairs {:?})",
            report.open_pairs
        )));
    }
    let m = ss.graph.order();
    let n = m + plan.y_count + plan.x_count;
    if n != plan.order {
        return Err(Error::InvalidPlan(format!(
            "plan sizes sum to {n}, not {}",
            plan.order
        )));
    }
    let mut g = Graph::empty(n)?;
    for (u, v) in ss.graph.edges() {
        g.add_edge(u, v);
    }
    let ys: Vec<usize> = (m..m + plan.y_count).collect();
    let xs: Vec<usize> = (m + plan.y_count..n).collect();
    for &x in &xs {
        for a in ss.a.iter() {
            g.add_edge(x, a);
        }
        for &y in &ys {
            g.add_edge(x, y);
        }
    }
    for &y in &ys {
        for b in ss.b.iter() {
            g.add_edge(y, b);
        }
    }

    if !g.is_saturated(ss.s) {
        return Err(Error::AssemblyFailed(format!(
            "padded graph is not K_{}-saturated",
            ss.s
        )));
    }
    if g.min_degree() != plan.min_degree {
        return Err(Error::AssemblyFailed(format!(
            "padded graph has minimum degree {}, expected {}",
            g.min_degree(),
            plan.min_degree
        )));
    }

    let mut lg = LabeledGraph::new(g, ss.s);
    lg.set_label("A", ss.a);
    lg.set_label("B", ss.b);
    lg.set_label("Y", ys.iter().copied().collect());
    lg.set_label("X", xs.iter().copied().collect());
    for (i, &y) in ys.iter().enumerate() {
        lg.set_name(y, format!("y{}", i + 1));
    }
    for (i, &x) in xs.iter().enumerate() {
        lg.set_name(x, format!("x{}", i + 1));
    }
    Ok(lg)
}

/// Number of `K_r` copies that use at least one vertex of `set`.
pub fn cliques_through(g: &Graph, set: &VertexSet, r: usize) -> u64 {
    let rest = g.vertices().difference(set);
    g.count_cliques(r) - g.count_cliques_within(&rest, r)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 8-vertex core: a1..a4 = 0..3, b123, b124, b134, b234 = 4..7.
    fn h_core() -> SupportStructure {
        let mut edges = vec![(0, 1), (2, 3), (4, 7), (7, 5), (5, 6), (6, 4)];
        let triples = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
        for (bi, t) in triples.iter().enumerate() {
            for &a in t {
                edges.push((a, 4 + bi));
            }
        }
        let g = Graph::from_edges(8, &edges).unwrap();
        SupportStructure::new(g, VertexSet::prefix(4), VertexSet::prefix(8).difference(&VertexSet::prefix(4)), 4)
            .unwrap()
    }

    #[test]
    fn rejects_bad_sides() {
        let g = Graph::complete(3).unwrap();
        let a = VertexSet::prefix(2);
        assert!(SupportStructure::new(g.clone(), a, VertexSet::singleton(1), 4).is_err());
        assert!(SupportStructure::new(g.clone(), a, VertexSet::new(), 4).is_err());
        assert!(SupportStructure::new(g, a, VertexSet::singleton(2), 2).is_err());
    }

    #[test]
    fn h_core_is_pre_support_and_complete() {
        let ss = h_core();
        assert!(check_pre_support(&ss).ok);
        let rep = check_support(&ss);
        assert!(rep.ok, "{rep:?}");
        assert!(!rep.a_induced_saturated);
        let (done, added) = complete_with_trace(&ss).unwrap();
        assert!(added.is_empty());
        assert_eq!(done, ss);
    }

    #[test]
    fn deleting_a1a2_breaks_b123() {
        let ss = h_core();
        let g = ss.graph().without_edge(0, 1).unwrap();
        let broken = SupportStructure::new(g, *ss.a(), *ss.b(), 4).unwrap();
        let rep = check_pre_support(&broken);
        assert!(!rep.b_supported);
        assert!(rep.unsupported_b.contains(&4));
        assert!(rep.sides_clique_free && rep.a_supported && rep.clique_free);
        assert!(matches!(complete_to_support(&broken), Err(Error::NotPreSupport(_))));
    }

    #[test]
    fn plans_for_h_core() {
        let ss = h_core();
        let p = padding_plan(&ss, 4, 14).unwrap();
        assert_eq!((p.m_slack, p.y_count, p.x_count), (0, 0, 6));
        assert!(!p.strict_degree_hypothesis);
        let p = padding_plan(&ss, 7, 20).unwrap();
        assert_eq!((p.m_slack, p.y_count, p.x_count), (3, 3, 9));
        assert!(matches!(padding_plan(&ss, 4, 8), Err(Error::InvalidPlan(_))));
    }

    #[test]
    fn assemble_h4_14() {
        let ss = h_core();
        let plan = padding_plan(&ss, 4, 14).unwrap();
        let lg = assemble(&ss, &plan).unwrap();
        assert_eq!(lg.graph.count_cliques(3), 24);
        assert_eq!(lg.graph.min_degree(), 4);
        let x = lg.label("X").unwrap();
        assert_eq!(cliques_through(&lg.graph, x, 3), 6 * 2);
    }
}
