//! Canonical labeling by individualization-refinement.
//!
//! The search tree individualizes one vertex of the first smallest
//! non-singleton cell at each node and refines to an equitable partition.
//! Every discrete leaf yields a relabeled adjacency certificate; the canonical
//! form is the lexicographically least certificate. Children that are images
//! of an already explored sibling under a discovered automorphism fixing the
//! current path are skipped, which leaves the set of certificates unchanged.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

/// Largest order handled without an explicit opt-in.
pub const EXACT_CAP: usize = 12;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CanonOptions {
    /// Allow graphs above [`EXACT_CAP`]. The result is still exact, but the
    /// search tree can grow quickly on highly regular graphs.
    pub allow_large: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonical {
    /// graph6 encoding of the canonically relabeled graph (prefixed by the
    /// initial cell sizes when a coloring was supplied).
    pub form: Vec<u8>,
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Vec<usize>,
    /// Automorphisms discovered during the search (vertex maps).
    pub automorphisms: Vec<Vec<usize>>,
}

impl Canonical {
    /// Vertex placed last by the canonical labeling.
    pub fn last_vertex(&self) -> usize {
        let n = self.labeling.len();
        self.labeling
            .iter()
            .position(|&p| p + 1 == n)
            .expect("labeling is a permutation")
    }

    pub fn relabeled(&self, g: &Graph) -> Graph {
        g.permuted(&self.labeling).expect("labeling is a permutation")
    }
}

/// Canonical byte string: equal for two graphs iff they are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    canonical_form_with(g, CanonOptions::default())
}

pub fn canonical_form_with(g: &Graph, opts: CanonOptions) -> Result<Vec<u8>> {
    canonize(g, opts).map(|c| c.form)
}

pub fn canonize(g: &Graph, opts: CanonOptions) -> Result<Canonical> {
    canonize_colored(g, &[g.vertices()], opts)
}

/// Canonical labeling of a vertex-colored graph. `cells` is an ordered
/// partition of the vertices; isomorphisms must map the `i`-th cell onto the
/// `i`-th cell.
pub fn canonize_colored(g: &Graph, cells: &[VertexSet], opts: CanonOptions) -> Result<Canonical> {
    let n = g.order();
    if n > EXACT_CAP && !opts.allow_large {
        return Err(Error::CanonCapExceeded { n, cap: EXACT_CAP });
    }
    let mut covered = VertexSet::new();
    let mut total = 0;
    for c in cells {
        if c.is_empty() {
            return Err(Error::InvalidParameters("empty color class".into()));
        }
        covered = covered.union(c);
        total += c.len();
    }
    if total != n || covered != g.vertices() {
        return Err(Error::InvalidParameters(
            "color classes must partition the vertex set".into(),
        ));
    }

    let mut prefix = Vec::new();
    if cells.len() > 1 {
        for c in cells {
            prefix.extend_from_slice(c.len().to_string().as_bytes());
            prefix.push(b',');
        }
        prefix.push(b';');
    }

    let mut search = Search {
        g,
        prefix,
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    let mut path = Vec::new();
    search.visit(cells.to_vec(), &mut path);
    let best = search.best.expect("search visits at least one leaf");
    Ok(Canonical {
        form: best.cert,
        labeling: best.perm,
        automorphisms: search.automorphisms,
    })
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Whether some automorphism of `g` maps `u` to `v`.
pub fn same_orbit(g: &Graph, u: usize, v: usize, opts: CanonOptions) -> Result<bool> {
    if u == v {
        return Ok(true);
    }
    if g.degree(u) != g.degree(v) {
        return Ok(false);
    }
    let all = g.vertices();
    let color = |w: usize| {
        let mut rest = all;
        rest.remove(w);
        if rest.is_empty() {
            vec![VertexSet::singleton(w)]
        } else {
            vec![VertexSet::singleton(w), rest]
        }
    };
    Ok(canonize_colored(g, &color(u), opts)?.form == canonize_colored(g, &color(v), opts)?.form)
}

/// Coarsest equitable refinement of `cells` (cell order is isomorphism-invariant).
pub fn equitable_partition(g: &Graph, cells: &[VertexSet]) -> Vec<VertexSet> {
    let mut cells = cells.to_vec();
    refine(g, &mut cells);
    cells
}

fn refine(g: &Graph, cells: &mut Vec<VertexSet>) {
    let mut buckets: Vec<(usize, VertexSet)> = Vec::new();
    'again: loop {
        for w in 0..cells.len() {
            let splitter = cells[w];
            for c in 0..cells.len() {
                let cell = cells[c];
                if cell.len() < 2 {
                    continue;
                }
                buckets.clear();
                for v in cell.iter() {
                    let k = g.neighbors(v).intersection_len(&splitter);
                    match buckets.binary_search_by_key(&k, |b| b.0) {
                        Ok(i) => buckets[i].1.insert(v),
                        Err(i) => buckets.insert(i, (k, VertexSet::singleton(v))),
                    }
                }
                if buckets.len() > 1 {
                    cells.splice(c..=c, buckets.iter().map(|b| b.1));
                    continue 'again;
                }
            }
        }
        break;
    }
}

struct Leaf {
    perm: Vec<usize>,
    cert: Vec<u8>,
}

struct Search<'a> {
    g: &'a Graph,
    prefix: Vec<u8>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn visit(&mut self, mut cells: Vec<VertexSet>, path: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        let n = self.g.order();
        if cells.len() == n {
            self.leaf(&cells);
            return;
        }
        let (ti, target) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, c)| (i, *c))
            .expect("non-discrete partition has a non-singleton cell");

        let mut explored: Vec<usize> = Vec::new();
        for v in target.iter() {
            if !explored.is_empty() && self.equivalent_to_any(v, &explored, path) {
                continue;
            }
            explored.push(v);
            let mut rest = target;
            rest.remove(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(VertexSet::singleton(v));
            child.push(rest);
            child.extend_from_slice(&cells[ti + 1..]);
            path.push(v);
            self.visit(child, path);
            path.pop();
        }
    }

    fn equivalent_to_any(&self, v: usize, explored: &[usize], path: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if path.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            any = true;
            for (x, &y) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn leaf(&mut self, cells: &[VertexSet]) {
        let n = self.g.order();
        let mut perm = vec![0; n];
        for (pos, c) in cells.iter().enumerate() {
            perm[c.first().expect("discrete cell")] = pos;
        }
        let mut cert = self.prefix.clone();
        let body = graph6::encode(&self.g.permuted(&perm).expect("valid permutation"));
        cert.extend_from_slice(body.as_bytes());

        let leaf = Leaf { perm, cert };
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.cert == leaf.cert {
                let mut inv_ref = vec![0; n];
                for (v, &p) in reference.perm.iter().enumerate() {
                    inv_ref[p] = v;
                }
                let gamma: Vec<usize> = leaf.perm.iter().map(|&p| inv_ref[p]).collect();
                if gamma.iter().enumerate().any(|(i, &j)| i != j) && !self.automorphisms.contains(&gamma) {
                    self.automorphisms.push(gamma);
                }
                break;
            }
        }
        match &self.best {
            Some(b) if b.cert <= leaf.cert => {}
            _ => {
                self.best = Some(Leaf {
                    perm: leaf.perm.clone(),
                    cert: leaf.cert.clone(),
                })
            }
        }
        if self.first.is_none() {
            self.first = Some(leaf);
        }
    }
}
