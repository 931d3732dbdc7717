//! Structural recognition of `K_s`-saturated graphs with minimum degree
//! `s - 2` or `s - 1`.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum Classification {
    /// `K_{s-2}` joined with an independent set.
    Ehm,
    /// `(K_{s-1} - e)` joined with an independent set.
    NearCliqueJoin,
    /// `W_s(m1, 1, m3, m4, 1)`, reported with the lexicographically least
    /// `(m1, m3, m4)` among the equivalent readings.
    W { m1: usize, m3: usize, m4: usize },
    /// Minimum degree `s - 1` but neither known shape.
    Unrecognized { min_degree: usize },
    AboveThreshold { min_degree: usize },
}

pub fn classify_low_degree(g: &Graph, s: usize) -> Result<Classification> {
    if s < 3 {
        return Err(Error::Precondition(format!("requires s >= 3, got s = {s}")));
    }
    if !g.is_saturated(s) {
        return Err(Error::NotSaturated { s });
    }
    let delta = g.min_degree();
    if delta < s - 2 {
        return Err(Error::Precondition(format!(
            "minimum degree {delta} < s-2 (graph has fewer than s-1 vertices)"
        )));
    }
    if delta == s - 2 {
        return Ok(if is_clique_join_independent(g, s - 2) {
            Classification::Ehm
        } else {
            Classification::Unrecognized { min_degree: delta }
        });
    }
    if delta > s - 1 {
        return Ok(Classification::AboveThreshold { min_degree: delta });
    }
    let Some(rest) = strip_universal(g, s - 3) else {
        return Ok(Classification::Unrecognized { min_degree: delta });
    };
    if is_k2m(g, &rest) {
        return Ok(Classification::NearCliqueJoin);
    }
    Ok(match blown_up_c5(g, &rest) {
        Some((m1, m3, m4)) => Classification::W { m1, m3, m4 },
        None => Classification::Unrecognized { min_degree: delta },
    })
}

fn universal(g: &Graph) -> VertexSet {
    let n = g.order();
    g.vertices().iter().filter(|&v| g.degree(v) + 1 == n).collect()
}

/// Removes `k` universal vertices (any `k` of them are interchangeable).
fn strip_universal(g: &Graph, k: usize) -> Option<VertexSet> {
    let u = universal(g).to_vec();
    if u.len() < k {
        return None;
    }
    let mut rest = g.vertices();
    for &v in &u[..k] {
        rest.remove(v);
    }
    Some(rest)
}

fn is_clique_join_independent(g: &Graph, k: usize) -> bool {
    match strip_universal(g, k) {
        Some(rest) => rest.iter().all(|v| g.neighbors(v).is_disjoint(&rest)),
        None => false,
    }
}

/// `rest` induces `K_{2,m}` with the 2-side non-adjacent.
fn is_k2m(g: &Graph, rest: &VertexSet) -> bool {
    let vs = rest.to_vec();
    if vs.len() < 3 {
        return false;
    }
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            if g.has_edge(u, v) {
                continue;
            }
            let mut others = *rest;
            others.remove(u);
            others.remove(v);
            let ok = others.is_subset(g.neighbors(u))
                && others.is_subset(g.neighbors(v))
                && others.iter().all(|w| g.neighbors(w).is_disjoint(&others));
            if ok {
                return true;
            }
        }
    }
    false
}

/// `rest` induces a blow-up of `C_5` by independent sets whose sizes read
/// `(m1, 1, m3, m4, 1)` around the cycle.
fn blown_up_c5(g: &Graph, rest: &VertexSet) -> Option<(usize, usize, usize)> {
    let mut classes: Vec<(VertexSet, VertexSet)> = Vec::new();
    for v in rest.iter() {
        let nb = g.neighbors(v).intersection(rest);
        match classes.iter_mut().find(|(n, _)| *n == nb) {
            Some((_, members)) => members.insert(v),
            None => classes.push((nb, VertexSet::singleton(v))),
        }
    }
    if classes.len() != 5 {
        return None;
    }
    // Quotient must be a 5-cycle with complete joins between adjacent classes.
    let adj = |i: usize, j: usize| classes[j].1.is_subset(&classes[i].0);
    let mut order = vec![0usize];
    while order.len() < 5 {
        let last = *order.last().unwrap();
        let next = (0..5).find(|&j| !order.contains(&j) && adj(last, j))?;
        order.push(next);
    }
    for i in 0..5 {
        let (a, b) = (order[i], order[(i + 1) % 5]);
        if !adj(a, b) {
            return None;
        }
        let expected = classes[order[(i + 4) % 5]].1.union(&classes[b].1);
        if classes[a].0 != expected {
            return None;
        }
    }
    let sizes: Vec<usize> = order.iter().map(|&c| classes[c].1.len()).collect();
    let mut best: Option<(usize, usize, usize)> = None;
    for start in 0..5 {
        for dir in [1usize, 4] {
            let at = |k: usize| sizes[(start + dir * k) % 5];
            if at(1) == 1 && at(4) == 1 {
                let cand = (at(0), at(2), at(3));
                best = Some(best.map_or(cand, |b| b.min(cand)));
            }
        }
    }
    best
}
