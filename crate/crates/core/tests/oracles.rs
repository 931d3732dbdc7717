mod common;

use std::collections::BTreeSet;

use common::{graph_from_mask, naive_cliques, naive_saturated, PermOracle};
use satforge::canon;
use satforge::constructions;
use satforge::search::{self, DegreeFilter, Minimum, SearchQuery};
use satforge::graph6;

#[test]
fn census_matches_all_permutations_oracle() {
    for n in 1..=6 {
        let oracle = PermOracle::new(n);
        let pairs = n * (n - 1) / 2;
        let classes: BTreeSet<u64> = (0..1u64 << pairs).map(|m| oracle.form(&graph_from_mask(n, m))).collect();
        let mut found = BTreeSet::new();
        let mut visits = 0;
        search::enumerate_graphs(n, None, |g| {
            visits += 1;
            found.insert(oracle.form(g));
            true
        })
        .unwrap();
        assert_eq!(visits, classes.len(), "n = {n}");
        assert_eq!(found, classes, "n = {n}");
    }
}

#[test]
fn saturated_classes_match_labeled_enumeration() {
    for n in 3..=6 {
        let oracle = PermOracle::new(n);
        let pairs = n * (n - 1) / 2;
        for s in 3..=4 {
            let labeled: BTreeSet<u64> = (0..1u64 << pairs)
                .map(|m| graph_from_mask(n, m))
                .filter(|g| naive_saturated(g, s))
                .map(|g| oracle.form(&g))
                .collect();
            let found: BTreeSet<u64> = search::enumerate_saturated(n, s, DegreeFilter::Any)
                .unwrap()
                .iter()
                .map(|g| oracle.form(g))
                .collect();
            assert_eq!(found, labeled, "n = {n}, s = {s}");
        }
    }
}

#[test]
fn canonical_form_agrees_with_oracle_on_all_small_graphs() {
    let n = 6;
    let oracle = PermOracle::new(n);
    let mut by_form = std::collections::BTreeMap::new();
    for m in 0..1u64 << 15 {
        let g = graph_from_mask(n, m);
        let ours = canon::canonical_form(&g).unwrap();
        let theirs = oracle.form(&g);
        let prev = by_form.entry(theirs).or_insert_with(|| ours.clone());
        assert_eq!(*prev, ours, "mask {m}");
    }
    let distinct: BTreeSet<_> = by_form.values().collect();
    assert_eq!(distinct.len(), by_form.len());
    assert_eq!(by_form.len(), 156);
}

/// Minimum k3 over labeled K4-saturated 7-vertex graphs with minimum degree 4.
#[test]
fn delta4_minimum_at_n7_by_labeled_brute_force() {
    let n = 7;
    let oracle = PermOracle::new(n);
    let mut best = u64::MAX;
    let mut extremal = BTreeSet::new();
    for m in 0..1u64 << 21 {
        let mut deg = [0usize; 7];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if m >> k & 1 == 1 {
                    deg[i] += 1;
                    deg[j] += 1;
                }
                k += 1;
            }
        }
        if deg.iter().min() != Some(&4) {
            continue;
        }
        let g = graph_from_mask(n, m);
        if !naive_saturated(&g, 4) {
            continue;
        }
        let k3 = naive_cliques(&g, 3);
        if k3 < best {
            best = k3;
            extremal.clear();
        }
        if k3 == best {
            extremal.insert(oracle.form(&g));
        }
    }
    assert_eq!(best, 7);
    let rep = search::sat_value(&SearchQuery::new(7, 3, 4, Some(4))).unwrap();
    assert_eq!(rep.minimum, Minimum::Value(best));
    let found: BTreeSet<u64> =
        rep.extremal.iter().map(|s| oracle.form(&graph6::decode(s).unwrap())).collect();
    assert_eq!(found, extremal);
}

#[test]
fn golden_clique_counts() {
    let f = constructions::f_graph(4, 5, 20).unwrap().graph;
    assert_eq!(naive_cliques(&f, 3), 56);
    assert_eq!(f.count_cliques(3), 56);
    let r = constructions::r_graph(10, 40).unwrap().graph;
    assert_eq!(naive_cliques(&r, 3), 1764);
    assert_eq!(r.count_cliques(3), 1764);
    let h = constructions::h_graph(4, 14).unwrap().graph;
    assert_eq!(naive_cliques(&h, 3), 24);
    assert!(naive_saturated(&h, 4));
}

#[test]
fn saturation_oracle_on_constructions() {
    for lg in [
        constructions::ehm(4, 9).unwrap(),
        constructions::near_clique_join(4, 8).unwrap(),
        constructions::w_graph(4, 2, 1, 2).unwrap(),
        constructions::h_graph(5, 12).unwrap(),
        constructions::f_graph(4, 5, 14).unwrap(),
    ] {
        assert!(naive_saturated(&lg.graph, lg.s));
        assert!(lg.graph.is_saturated(lg.s));
    }
}
