//! Simple undirected graphs on bitset adjacency rows.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency rows are symmetric and loop-free. The public API is read-only;
/// use [`Graph::with_edge`] / [`Graph::without_edge`] to derive modified copies.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// Number of `r`-vertex cliques in a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCount {
    pub r: usize,
    pub count: u64,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                cap: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::new(); n],
        })
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::prefix(n);
        for v in 0..n {
            let mut row = all;
            row.remove(v);
            g.adj[v] = row;
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameters(format!("cycle needs n >= 3, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to a single edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn from_rows(adj: Vec<VertexSet>) -> Graph {
        Graph { n: adj.len(), adj }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    /// Copy of this graph with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        let mut g = self.clone();
        g.add_edge(u, v);
        Ok(g)
    }

    /// Copy of this graph with the edge `uv` removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut g = self.clone();
        g.remove_edge(u, v);
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::prefix(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].above(u).iter() {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Minimum vertex degree.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// `N(u) ∩ N(v)` for distinct `u`, `v`.
    pub fn common_neighborhood(&self, u: usize, v: usize) -> Result<VertexSet> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(self.adj[u].intersection(&self.adj[v]))
    }

    /// Number of `r`-cliques (`k_r`).
    pub fn count_cliques(&self, r: usize) -> u64 {
        self.count_cliques_within(&self.vertices(), r)
    }

    pub fn clique_count(&self, r: usize) -> CliqueCount {
        CliqueCount {
            r,
            count: self.count_cliques(r),
        }
    }

    /// Number of `r`-cliques whose vertices all lie in `within`.
    pub fn count_cliques_within(&self, within: &VertexSet, r: usize) -> u64 {
        if r == 0 {
            return 1;
        }
        self.extend_count(*within, r)
    }

    // Cliques are counted once each by only extending with higher-indexed
    // vertices from the running candidate set.
    fn extend_count(&self, cand: VertexSet, depth: usize) -> u64 {
        match depth {
            1 => cand.len() as u64,
            2 => cand
                .iter()
                .map(|v| self.adj[v].above(v).intersection_len(&cand) as u64)
                .sum(),
            _ => {
                let mut total = 0;
                for v in cand.iter() {
                    let next = cand.intersection(&self.adj[v]).above(v);
                    if next.len() + 1 >= depth {
                        total += self.extend_count(next, depth - 1);
                    }
                }
                total
            }
        }
    }

    /// Whether the vertices of `within` contain a `k`-clique.
    pub fn has_clique_within(&self, within: &VertexSet, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        self.find_clique(*within, k)
    }

    fn find_clique(&self, cand: VertexSet, depth: usize) -> bool {
        if cand.len() < depth {
            return false;
        }
        match depth {
            1 => true,
            2 => cand
                .iter()
                .any(|v| !self.adj[v].above(v).is_disjoint(&cand)),
            _ => cand.iter().any(|v| {
                let next = cand.intersection(&self.adj[v]).above(v);
                self.find_clique(next, depth - 1)
            }),
        }
    }

    /// A `k`-clique inside `within`, if one exists.
    pub fn clique_in(&self, within: &VertexSet, k: usize) -> Option<Vec<usize>> {
        let mut acc = Vec::with_capacity(k);
        if self.collect_clique(*within, k, &mut acc) {
            Some(acc)
        } else {
            None
        }
    }

    fn collect_clique(&self, cand: VertexSet, depth: usize, acc: &mut Vec<usize>) -> bool {
        if depth == 0 {
            return true;
        }
        if cand.len() < depth {
            return false;
        }
        for v in cand.iter() {
            acc.push(v);
            if self.collect_clique(cand.intersection(&self.adj[v]).above(v), depth - 1, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }

    /// True iff the graph contains no `K_s`.
    pub fn is_clique_free(&self, s: usize) -> bool {
        !self.has_clique_within(&self.vertices(), s)
    }

    /// True iff the graph is `K_s`-free and every non-adjacent pair has a
    /// `K_{s-2}` in its common neighborhood.
    pub fn is_saturated(&self, s: usize) -> bool {
        self.is_clique_free(s) && self.unsaturated_pairs(s, 1).is_empty()
    }

    /// Up to `limit` non-adjacent pairs whose insertion would not create a `K_s`.
    pub fn unsaturated_pairs(&self, s: usize, limit: usize) -> Vec<(usize, usize)> {
        let need = s.saturating_sub(2);
        let mut out = Vec::new();
        for u in 0..self.n {
            let non_nbrs = self.vertices().difference(&self.adj[u]).above(u);
            for v in non_nbrs.iter() {
                let common = self.adj[u].intersection(&self.adj[v]);
                if !self.has_clique_within(&common, need) {
                    out.push((u, v));
                    if out.len() >= limit {
                        return out;
                    }
                }
            }
        }
        out
    }

    /// `t(e)` for every edge: the number of triangles containing it.
    pub fn triangles_per_edge(&self) -> BTreeMap<(usize, usize), u64> {
        self.edges()
            .into_iter()
            .map(|(u, v)| ((u, v), self.adj[u].intersection_len(&self.adj[v]) as u64))
            .collect()
    }

    /// Join: disjoint union plus every edge between the two vertex sets.
    /// Vertices of `other` are shifted by `self.order()`.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        self.combine(other, true)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        self.combine(other, false)
    }

    fn combine(&self, other: &Graph, connect: bool) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        if connect {
            for u in 0..self.n {
                for v in 0..other.n {
                    g.add_edge(u, v + self.n);
                }
            }
        }
        Ok(g)
    }

    /// Subgraph induced by `set`; vertex `i` of the result is the `i`-th
    /// smallest member of `set`. Returns the graph and that index map.
    pub fn induced(&self, set: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        let map: Vec<usize> = set.iter().filter(|&v| v < self.n).collect();
        let mut g = Graph::empty(map.len())?;
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok((g, map))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameters(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = VertexSet::new();
        for &p in perm {
            if p >= self.n || seen.contains(p) {
                return Err(Error::InvalidParameters("not a permutation".into()));
            }
            seen.insert(p);
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Graph with one extra vertex (index `n`) adjacent to `nbrs`.
    pub fn extended(&self, nbrs: &VertexSet) -> Result<Graph> {
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n: self.n + 1,
                cap: MAX_VERTICES,
            });
        }
        let mut adj = self.adj.clone();
        let v = self.n;
        let mut row = VertexSet::new();
        for u in nbrs.iter().filter(|&u| u < self.n) {
            adj[u].insert(v);
            row.insert(u);
        }
        adj.push(row);
        Ok(Graph::from_rows(adj))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    fn k2_plus_empty(m: usize) -> Graph {
        Graph::complete(2).unwrap().join(&Graph::empty(m).unwrap()).unwrap()
    }

    #[test]
    fn from_edges_cases() {
        let tri = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(tri, Graph::complete(3).unwrap());
        let e = Graph::from_edges(2, &[]).unwrap();
        assert_eq!(e.edge_count(), 0);
        let dup = Graph::from_edges(4, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(dup.edge_count(), 1);
    }

    #[test]
    fn from_edges_errors() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::LoopEdge(1)));
        assert_eq!(Graph::empty(0), Err(Error::NoVertices));
        assert!(matches!(
            Graph::empty(MAX_VERTICES + 1),
            Err(Error::TooManyVertices { .. })
        ));
    }

    #[test]
    fn clique_counts() {
        assert_eq!(Graph::complete(5).unwrap().count_cliques(3), 10);
        assert_eq!(k2_plus_empty(8).count_cliques(3), 8);
        assert_eq!(petersen().count_cliques(3), 0);
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.count_cliques(1), 5);
        assert_eq!(k5.count_cliques(2), 10);
        assert_eq!(k5.count_cliques(6), 0);
        assert_eq!(k5.clique_count(4), CliqueCount { r: 4, count: 5 });
    }

    #[test]
    fn clique_freeness() {
        assert!(Graph::cycle(5).unwrap().is_clique_free(3));
        assert!(!Graph::complete(4).unwrap().is_clique_free(4));
        let found = Graph::complete(6).unwrap().clique_in(&VertexSet::prefix(6), 4);
        assert_eq!(found, Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn saturation() {
        let k3 = Graph::complete(3).unwrap();
        let ehm = k3.join(&Graph::empty(6).unwrap()).unwrap();
        assert!(ehm.is_saturated(5));
        assert!(Graph::cycle(5).unwrap().is_saturated(3));
        assert!(!Graph::path(4).unwrap().is_saturated(3));
        assert_eq!(Graph::path(4).unwrap().unsaturated_pairs(3, 10), vec![(0, 3)]);
    }

    #[test]
    fn min_degrees() {
        assert_eq!(k2_plus_empty(8).min_degree(), 2);
        assert_eq!(Graph::empty(3).unwrap().min_degree(), 0);
    }

    #[test]
    fn common_neighborhoods() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.common_neighborhood(0, 2).unwrap().to_vec(), vec![1, 3]);
        let c5 = Graph::cycle(5).unwrap();
        assert!(c5.common_neighborhood(0, 1).unwrap().is_empty());
        let g = k2_plus_empty(8);
        assert_eq!(g.common_neighborhood(2, 3).unwrap().to_vec(), vec![0, 1]);
        assert_eq!(g.common_neighborhood(2, 2), Err(Error::SameVertex(2)));
    }

    #[test]
    fn triangles_on_edges() {
        let k4 = Graph::complete(4).unwrap();
        assert!(k4.triangles_per_edge().values().all(|&t| t == 2));
        let c5 = Graph::cycle(5).unwrap();
        assert!(c5.triangles_per_edge().values().all(|&t| t == 0));
        let g = k2_plus_empty(8);
        let t = g.triangles_per_edge();
        assert_eq!(t[&(0, 1)], 8);
        assert!(t.iter().filter(|(e, _)| **e != (0, 1)).all(|(_, &c)| c == 1));
    }

    #[test]
    fn joins() {
        let g = Graph::complete(2).unwrap().join(&Graph::empty(3).unwrap()).unwrap();
        assert_eq!((g.order(), g.edge_count(), g.count_cliques(3)), (5, 7, 3));
        let e1 = Graph::empty(1).unwrap();
        assert_eq!(e1.join(&e1).unwrap(), Graph::complete(2).unwrap());
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(k2.join(&k2).unwrap(), Graph::complete(4).unwrap());
        let big = Graph::empty(300).unwrap();
        assert!(matches!(big.join(&big), Err(Error::TooManyVertices { .. })));
    }

    #[test]
    fn induced_and_permuted() {
        let c5 = Graph::cycle(5).unwrap();
        let (p, map) = c5.induced(&[0, 1, 2].into_iter().collect()).unwrap();
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(p, Graph::path(3).unwrap());
        let q = c5.permuted(&[2, 0, 4, 1, 3]).unwrap();
        assert_eq!(q.edge_count(), 5);
        assert!(q.degrees().iter().all(|&d| d == 2));
        assert!(c5.permuted(&[0, 0, 1, 2, 3]).is_err());
    }
}
