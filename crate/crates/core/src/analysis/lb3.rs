//! Certificate for the triangle lower bound `k_3(G) >= C(s-2, 2)(n - 2)` on
//! `K_s`-saturated graphs with large minimum degree.

use serde::Serialize;

use crate::binomial;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "kebab-case")]
pub enum Lb3Case {
    /// Every edge lies in a triangle, so `k_3 >= e/3 >= tn/6`.
    EveryEdgeInTriangle {
        edges: usize,
        /// An edge with the fewest triangles, and that count.
        min_edge: (usize, usize),
        min_edge_triangles: u64,
    },
    /// `xy` lies in no triangle; `A = N(x) - y`, `B = N(y) - x`, `C` the rest.
    SplitEdge {
        x: usize,
        y: usize,
        a: Vec<usize>,
        b: Vec<usize>,
        c: Vec<usize>,
        /// One `K_{s-2}` per vertex of `A` (inside `B`), of `B` (inside `A`),
        /// and two per vertex of `C` (inside `A`, then inside `B`).
        witnesses: Vec<(usize, Vec<Vec<usize>>)>,
        counted: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lb3Certificate {
    pub s: usize,
    pub t: usize,
    pub n: usize,
    /// `C(s-2, 2)(n - 2)`.
    pub bound: u64,
    pub triangles: u64,
    /// graph6 of the certified graph.
    pub graph6: String,
    #[serde(flatten)]
    pub case: Lb3Case,
}

pub fn verify_lb3(g: &Graph, s: usize, t: usize) -> Result<Lb3Certificate> {
    let n = g.order();
    if s < 4 {
        return Err(Error::Precondition(format!("requires s > 3, got s = {s}")));
    }
    let b = binomial(s as u64 - 2, 2);
    if (t as u64) < 6 * b {
        return Err(Error::Precondition(format!(
            "requires t >= 6*C(s-2,2) = {}, got t = {t}",
            6 * b
        )));
    }
    if n < 2 * s - 2 {
        return Err(Error::Precondition(format!(
            "requires n >= 2s-2 = {}, got n = {n}",
            2 * s - 2
        )));
    }
    if g.min_degree() != t {
        return Err(Error::Precondition(format!(
            "minimum degree is {}, expected {t}",
            g.min_degree()
        )));
    }
    if !g.is_saturated(s) {
        return Err(Error::NotSaturated { s });
    }

    let per_edge = g.triangles_per_edge();
    let (&min_edge, &min_count) = per_edge
        .iter()
        .min_by_key(|(e, c)| (**c, **e))
        .ok_or_else(|| Error::Precondition("graph has no edges".into()))?;
    let case = if min_count > 0 {
        Lb3Case::EveryEdgeInTriangle {
            edges: g.edge_count(),
            min_edge,
            min_edge_triangles: min_count,
        }
    } else {
        split_case(g, s, min_edge)?
    };
    let cert = Lb3Certificate {
        s,
        t,
        n,
        bound: b * (n as u64 - 2),
        triangles: g.count_cliques(3),
        graph6: graph6::encode(g),
        case,
    };
    cert.revalidate(g)?;
    Ok(cert)
}

fn split_case(g: &Graph, s: usize, (x, y): (usize, usize)) -> Result<Lb3Case> {
    let (a, b, c) = split_sets(g, x, y);
    let k = s - 2;
    let find = |v: usize, within: &VertexSet| {
        g.clique_in(&g.neighbors(v).intersection(within), k)
            .ok_or_else(|| Error::Precondition(format!("vertex {v} lacks a K_{k} witness")))
    };
    let mut witnesses = Vec::new();
    for v in a.iter() {
        witnesses.push((v, vec![find(v, &b)?]));
    }
    for v in b.iter() {
        witnesses.push((v, vec![find(v, &a)?]));
    }
    for v in c.iter() {
        witnesses.push((v, vec![find(v, &a)?, find(v, &b)?]));
    }
    let per = binomial(k as u64, 2);
    Ok(Lb3Case::SplitEdge {
        x,
        y,
        counted: per * (a.len() + b.len() + 2 * c.len()) as u64,
        a: a.to_vec(),
        b: b.to_vec(),
        c: c.to_vec(),
        witnesses,
    })
}

fn split_sets(g: &Graph, x: usize, y: usize) -> (VertexSet, VertexSet, VertexSet) {
    let mut a = *g.neighbors(x);
    a.remove(y);
    let mut b = *g.neighbors(y);
    b.remove(x);
    let mut rest = g.vertices().difference(&a.union(&b));
    rest.remove(x);
    rest.remove(y);
    (a, b, rest)
}

impl Lb3Certificate {
    /// Re-checks every claim of the certificate against `g`.
    pub fn revalidate(&self, g: &Graph) -> Result<()> {
        let fail = |m: String| Err(Error::CertificateInvalid(m));
        if graph6::encode(g) != self.graph6 || g.order() != self.n {
            return fail("certificate was issued for a different graph".into());
        }
        let k3 = g.count_cliques(3);
        if k3 != self.triangles {
            return fail(format!("triangle count {k3} != recorded {}", self.triangles));
        }
        match &self.case {
            Lb3Case::EveryEdgeInTriangle {
                edges,
                min_edge,
                min_edge_triangles,
            } => {
                let per_edge = g.triangles_per_edge();
                let (&e, &c) = per_edge.iter().min_by_key(|(e, c)| (**c, **e)).unwrap();
                if e != *min_edge || c != *min_edge_triangles || c == 0 {
                    return fail("minimum-triangle edge does not match".into());
                }
                if g.edge_count() != *edges || g.min_degree() != self.t {
                    return fail("edge count or minimum degree changed".into());
                }
                // 6 k3 >= 2e >= tn and tn >= 6 C(s-2,2) n.
                if 3 * k3 < *edges as u64 || (2 * *edges) < self.t * self.n {
                    return fail("e/3 >= tn/6 chain fails".into());
                }
            }
            Lb3Case::SplitEdge {
                x,
                y,
                a,
                b,
                c,
                witnesses,
                counted,
            } => {
                if !g.has_edge(*x, *y)
                    || !g.neighbors(*x).is_disjoint(g.neighbors(*y))
                {
                    return fail("xy is not a triangle-free edge".into());
                }
                let (sa, sb, sc) = split_sets(g, *x, *y);
                if sa.to_vec() != *a || sb.to_vec() != *b || sc.to_vec() != *c {
                    return fail("A/B/C split does not match".into());
                }
                let k = self.s - 2;
                let is_witness = |v: usize, q: &[usize], side: &VertexSet| {
                    q.len() == k
                        && q.iter().all(|&u| side.contains(u) && g.has_edge(u, v))
                        && q.iter()
                            .enumerate()
                            .all(|(i, &u)| q[i + 1..].iter().all(|&w| g.has_edge(u, w)))
                };
                let mut seen = VertexSet::new();
                for (v, qs) in witnesses {
                    seen.insert(*v);
                    let ok = if sa.contains(*v) {
                        qs.len() == 1 && is_witness(*v, &qs[0], &sb)
                    } else if sb.contains(*v) {
                        qs.len() == 1 && is_witness(*v, &qs[0], &sa)
                    } else {
                        qs.len() == 2 && is_witness(*v, &qs[0], &sa) && is_witness(*v, &qs[1], &sb)
                    };
                    if !ok {
                        return fail(format!("witness for vertex {v} is invalid"));
                    }
                }
                if seen != sa.union(&sb).union(&sc) {
                    return fail("witnesses do not cover A, B and C".into());
                }
                let per = binomial(k as u64, 2);
                let expect = per * (sa.len() + sb.len() + 2 * sc.len()) as u64;
                if *counted != expect || expect < self.bound {
                    return fail(format!("counted {counted} vs {expect}, bound {}", self.bound));
                }
            }
        }
        if k3 < self.bound {
            return fail(format!("k3 = {k3} is below the bound {}", self.bound));
        }
        Ok(())
    }
}
