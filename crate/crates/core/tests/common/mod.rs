//! Brute-force reference implementations used by the integration tests.
#![allow(dead_code)]

use satforge::{graph6, Graph};

/// Counts r-cliques by checking every r-subset.
pub fn naive_cliques(g: &Graph, r: usize) -> u64 {
    fn go(g: &Graph, chosen: &mut Vec<usize>, next: usize, r: usize) -> u64 {
        if chosen.len() == r {
            return 1;
        }
        let mut total = 0;
        for v in next..g.order() {
            if chosen.iter().all(|&u| g.has_edge(u, v)) {
                chosen.push(v);
                total += go(g, chosen, v + 1, r);
                chosen.pop();
            }
        }
        total
    }
    if r == 0 {
        return 1;
    }
    go(g, &mut Vec::new(), 0, r)
}

/// K_s-free and every added non-edge creates a K_s.
pub fn naive_saturated(g: &Graph, s: usize) -> bool {
    if naive_cliques(g, s) != 0 {
        return false;
    }
    let n = g.order();
    (0..n).all(|u| {
        (u + 1..n).all(|v| g.has_edge(u, v) || naive_cliques(&g.with_edge(u, v).unwrap(), s) > 0)
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(&mut p, n, &mut out);
    out
}

fn heap(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k {
        heap(p, k - 1, out);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        p.swap(j, k - 1);
    }
}

/// Adjacency bits of `g` under one permutation, packed into a u64 (n <= 11).
fn relabeled_bits(edges: &[(usize, usize)], perm: &[usize]) -> u64 {
    let mut bits = 0u64;
    for &(u, v) in edges {
        let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
        bits |= 1 << (b * (b - 1) / 2 + a);
    }
    bits
}

/// Isomorphism invariant from every relabeling: the largest packed adjacency.
pub struct PermOracle {
    perms: Vec<Vec<usize>>,
}

impl PermOracle {
    pub fn new(n: usize) -> Self {
        assert!(n <= 8, "all-permutations oracle limited to n <= 8");
        PermOracle { perms: permutations(n) }
    }

    pub fn form(&self, g: &Graph) -> u64 {
        let edges = g.edges();
        self.perms.iter().map(|p| relabeled_bits(&edges, p)).max().unwrap()
    }
}

/// Graph on `n` vertices from a bitmask over pairs in column order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn g6(g: &Graph) -> String {
    graph6::encode(g)
}
