//! Isomorph-free enumeration by canonical augmentation and exhaustive
//! small-order saturation values.
//!
//! A graph on `k + 1` vertices is accepted as a child of the graph on its
//! first `k` vertices only when the new vertex lies in the automorphism
//! orbit of the canonically last vertex. Accepted children of one parent are
//! deduplicated by canonical form, so every isomorphism class appears once.

use std::collections::{BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::canon::{self, CanonOptions};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

/// Largest order searched exhaustively without an explicit opt-in.
pub const EXHAUSTIVE_CAP: usize = 10;
/// Hard limit from exact canonical labeling.
pub const HARD_CAP: usize = canon::EXACT_CAP;
/// Depth of the augmentation tree at which work is split into shards.
pub const SPLIT_DEPTH: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "t", rename_all = "kebab-case")]
pub enum DegreeFilter {
    Any,
    Exactly(usize),
    AtLeast(usize),
}

impl DegreeFilter {
    pub fn accepts(&self, min_degree: usize) -> bool {
        match *self {
            DegreeFilter::Any => true,
            DegreeFilter::Exactly(t) => min_degree == t,
            DegreeFilter::AtLeast(t) => min_degree >= t,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shard {
    pub index: usize,
    pub count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchQuery {
    pub n: usize,
    /// Order of the counted clique.
    pub r: usize,
    /// Order of the forbidden clique.
    pub s: usize,
    pub degree: DegreeFilter,
    /// Maximum number of augmentation-tree nodes to visit.
    pub budget: Option<u64>,
    /// Permit `n` above [`EXHAUSTIVE_CAP`] (up to [`HARD_CAP`]).
    pub allow_large: bool,
    pub shard: Option<Shard>,
}

impl SearchQuery {
    /// Query with exact minimum degree `t` when given.
    pub fn new(n: usize, r: usize, s: usize, t: Option<usize>) -> Self {
        SearchQuery {
            n,
            r,
            s,
            degree: t.map_or(DegreeFilter::Any, DegreeFilter::Exactly),
            budget: None,
            allow_large: false,
            shard: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidQuery(m));
        if self.r < 2 || self.r >= self.s {
            return bad(format!("requires 2 <= r < s, got r = {}, s = {}", self.r, self.s));
        }
        if self.n < self.s {
            return bad(format!("requires n >= s, got n = {}", self.n));
        }
        if let DegreeFilter::Exactly(t) | DegreeFilter::AtLeast(t) = self.degree {
            if t + 2 < self.s {
                return bad(format!("requires t >= s-2, got t = {t}"));
            }
        }
        if self.n > HARD_CAP {
            return bad(format!("n = {} exceeds the hard cap {HARD_CAP}", self.n));
        }
        if self.n > EXHAUSTIVE_CAP && !self.allow_large {
            return bad(format!(
                "n = {} exceeds the exhaustive cap {EXHAUSTIVE_CAP}; opt in explicitly",
                self.n
            ));
        }
        if let Some(sh) = self.shard {
            if sh.count == 0 || sh.index >= sh.count {
                return bad(format!("shard {}/{} is invalid", sh.index, sh.count));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Minimum {
    Value(u64),
    Infeasible,
}

impl Serialize for Minimum {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Minimum::Value(v) => ser.serialize_u64(*v),
            Minimum::Infeasible => ser.serialize_str("infeasible"),
        }
    }
}

impl<'de> Deserialize<'de> for Minimum {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Value(u64),
            Word(String),
        }
        match Raw::deserialize(de)? {
            Raw::Value(v) => Ok(Minimum::Value(v)),
            Raw::Word(w) if w == "infeasible" => Ok(Minimum::Infeasible),
            Raw::Word(w) => Err(serde::de::Error::custom(format!("unexpected minimum `{w}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Explored {
    /// Augmentation-tree nodes (graphs on fewer than `n` vertices count once
    /// across shards).
    pub nodes: u64,
    /// Non-isomorphic `K_s`-free graphs on `n` vertices.
    pub leaves: u64,
    pub saturated: u64,
    /// Saturated leaves passing the degree filter.
    pub matching: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub query: SearchQuery,
    pub minimum: Minimum,
    /// graph6 of the canonical relabeling of each extremal graph, sorted.
    pub extremal: Vec<String>,
    pub explored: Explored,
    pub exhaustive: bool,
}

struct Walker<'a, F: FnMut(&Graph) -> bool> {
    n: usize,
    prune_s: Option<usize>,
    shard: Option<Shard>,
    budget: Option<u64>,
    visited: u64,
    split_seen: usize,
    stats: Explored,
    out_of_budget: bool,
    visit: &'a mut F,
}

impl<F: FnMut(&Graph) -> bool> Walker<'_, F> {
    fn counts_shared_nodes(&self) -> bool {
        self.shard.is_none_or(|s| s.index == 0)
    }

    /// Returns false to stop the whole walk.
    fn node(&mut self, g: &Graph) -> Result<bool> {
        let k = g.order();
        self.visited += 1;
        if self.budget.is_some_and(|b| self.visited > b) {
            self.out_of_budget = true;
            return Ok(false);
        }
        let split = SPLIT_DEPTH.min(self.n);
        if k == split {
            let idx = self.split_seen;
            self.split_seen += 1;
            if let Some(sh) = self.shard {
                if idx % sh.count != sh.index {
                    return Ok(true);
                }
            }
        }
        if k < split {
            if self.counts_shared_nodes() {
                self.stats.nodes += 1;
            }
        } else {
            self.stats.nodes += 1;
        }
        if k == self.n {
            self.stats.leaves += 1;
            return Ok((self.visit)(g));
        }
        for child in children(g, self.prune_s)? {
            if !self.node(&child)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Canonical-augmentation children of `g`, in a deterministic order.
fn children(g: &Graph, prune_s: Option<usize>) -> Result<Vec<Graph>> {
    let k = g.order();
    let opts = CanonOptions { allow_large: true };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << k {
        let nbrs: VertexSet = (0..k).filter(|i| mask >> i & 1 == 1).collect();
        if let Some(s) = prune_s {
            if g.has_clique_within(&nbrs, s - 1) {
                continue;
            }
        }
        let child = g.extended(&nbrs)?;
        let c = canon::canonize(&child, opts)?;
        if !new_vertex_is_canonical(&child, &c, opts)? {
            continue;
        }
        if seen.insert(c.form) {
            out.push(child);
        }
    }
    Ok(out)
}

fn new_vertex_is_canonical(g: &Graph, c: &canon::Canonical, opts: CanonOptions) -> Result<bool> {
    let v = g.order() - 1;
    let w = c.last_vertex();
    if v == w {
        return Ok(true);
    }
    if c.automorphisms.iter().any(|a| a[v] == w || a[w] == v) {
        return Ok(true);
    }
    let cells = canon::equitable_partition(g, &[g.vertices()]);
    if !cells.iter().any(|cell| cell.contains(v) && cell.contains(w)) {
        return Ok(false);
    }
    canon::same_orbit(g, v, w, opts)
}

/// Calls `visit` once per isomorphism class of graphs on `n` vertices
/// (optionally only `K_s`-free ones). `visit` returns false to stop early.
pub fn enumerate_graphs(
    n: usize,
    clique_free: Option<usize>,
    mut visit: impl FnMut(&Graph) -> bool,
) -> Result<Explored> {
    if n == 0 || n > HARD_CAP {
        return Err(Error::InvalidQuery(format!("enumeration needs 1 <= n <= {HARD_CAP}")));
    }
    let mut w = Walker {
        n,
        prune_s: clique_free,
        shard: None,
        budget: None,
        visited: 0,
        split_seen: 0,
        stats: Explored::default(),
        out_of_budget: false,
        visit: &mut visit,
    };
    w.node(&Graph::empty(1)?)?;
    Ok(w.stats)
}

/// Every `K_s`-saturated graph on `n` vertices passing `filter`, one per
/// isomorphism class, in generation order.
pub fn enumerate_saturated(n: usize, s: usize, filter: DegreeFilter) -> Result<Vec<Graph>> {
    if n > EXHAUSTIVE_CAP {
        return Err(Error::InvalidQuery(format!(
            "n = {n} exceeds the exhaustive cap {EXHAUSTIVE_CAP}"
        )));
    }
    let mut out = Vec::new();
    enumerate_graphs(n, Some(s), |g| {
        if g.is_saturated(s) && filter.accepts(g.min_degree()) {
            out.push(g.clone());
        }
        true
    })?;
    Ok(out)
}

/// Minimum `k_r` over `K_s`-saturated `n`-vertex graphs meeting the degree
/// filter, with all extremal graphs up to isomorphism.
pub fn sat_value(q: &SearchQuery) -> Result<SearchReport> {
    q.validate()?;
    let mut best = Minimum::Infeasible;
    let mut extremal: BTreeSet<String> = BTreeSet::new();
    let mut saturated = 0;
    let mut matching = 0;
    let mut visit = |g: &Graph| {
        if !g.is_saturated(q.s) {
            return true;
        }
        saturated += 1;
        if !q.degree.accepts(g.min_degree()) {
            return true;
        }
        matching += 1;
        let k = Minimum::Value(g.count_cliques(q.r));
        if k < best {
            best = k;
            extremal.clear();
        }
        if k == best {
            let c = canon::canonize(g, CanonOptions { allow_large: true }).expect("order is capped");
            extremal.insert(graph6::encode(&c.relabeled(g)));
        }
        true
    };
    let mut w = Walker {
        n: q.n,
        prune_s: Some(q.s),
        shard: q.shard,
        budget: q.budget,
        visited: 0,
        split_seen: 0,
        stats: Explored::default(),
        out_of_budget: false,
        visit: &mut visit,
    };
    w.node(&Graph::empty(1)?)?;
    let mut explored = w.stats;
    let exhaustive = !w.out_of_budget;
    explored.saturated = saturated;
    explored.matching = matching;
    Ok(SearchReport {
        query: *q,
        minimum: best,
        extremal: extremal.into_iter().collect(),
        explored,
        exhaustive,
    })
}

/// One sub-query per shard; shard `i` owns the split-depth prefixes whose
/// generation index is `i` modulo `shards`.
pub fn split_work(q: &SearchQuery, shards: usize) -> Result<Vec<SearchQuery>> {
    if shards == 0 {
        return Err(Error::InvalidQuery("shards must be at least 1".into()));
    }
    if shards == 1 {
        return Ok(vec![*q]);
    }
    Ok((0..shards)
        .map(|index| SearchQuery {
            shard: Some(Shard { index, count: shards }),
            ..*q
        })
        .collect())
}

/// Folds shard reports: minimum of minima, union of the extremal sets that
/// attain it, summed counters. The merged query has no shard.
pub fn merge_reports(reports: &[SearchReport]) -> Result<SearchReport> {
    let first = reports
        .first()
        .ok_or_else(|| Error::InvalidQuery("nothing to merge".into()))?;
    let base = SearchQuery { shard: None, ..first.query };
    if reports.iter().any(|r| SearchQuery { shard: None, ..r.query } != base) {
        return Err(Error::InvalidQuery("reports come from different queries".into()));
    }
    let minimum = reports.iter().map(|r| r.minimum).min().unwrap();
    let mut extremal = BTreeSet::new();
    let mut explored = Explored::default();
    for r in reports {
        if r.minimum == minimum {
            extremal.extend(r.extremal.iter().cloned());
        }
        explored.nodes += r.explored.nodes;
        explored.leaves += r.explored.leaves;
        explored.saturated += r.explored.saturated;
        explored.matching += r.explored.matching;
    }
    if minimum == Minimum::Infeasible {
        extremal.clear();
    }
    Ok(SearchReport {
        query: base,
        minimum,
        extremal: extremal.into_iter().collect(),
        explored,
        exhaustive: reports.iter().all(|r| r.exhaustive),
    })
}

/// Runs the shards of `q` on up to `threads` worker threads and merges them.
pub fn sat_value_sharded(q: &SearchQuery, shards: usize, threads: usize) -> Result<SearchReport> {
    let parts = split_work(q, shards)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::InvalidQuery(format!("thread pool: {e}")))?;
    let reports: Result<Vec<SearchReport>> =
        pool.install(|| parts.par_iter().map(sat_value).collect());
    merge_reports(&reports?)
}

/// Random greedy `K_s`-saturation: visits all pairs in random order and adds
/// each one that does not complete a `K_s`. One pass suffices because a
/// blocked pair stays blocked as edges are added.
pub fn greedy_saturate<R: Rng + ?Sized>(n: usize, s: usize, rng: &mut R) -> Result<Graph> {
    if s < 3 {
        return Err(Error::InvalidParameters(format!("requires s >= 3, got s = {s}")));
    }
    let mut g = Graph::empty(n)?;
    let mut pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    for (u, v) in pairs {
        let common = g.neighbors(u).intersection(g.neighbors(v));
        if !g.has_clique_within(&common, s - 2) {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}
