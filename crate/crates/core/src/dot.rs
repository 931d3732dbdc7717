//! Graphviz DOT export.

use std::fmt::Write;

use crate::graph::Graph;

/// Renders `g` as an undirected DOT graph. `labels[v]`, when present, is
/// used as the display label of vertex `v`.
pub fn to_dot(g: &Graph, name: &str, labels: Option<&[String]>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", sanitize(name));
    for v in 0..g.order() {
        match labels.and_then(|l| l.get(v)) {
            Some(label) => {
                let _ = writeln!(out, "  {v} [label=\"{}\"];", label.replace('"', "\\\""));
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

fn sanitize(name: &str) -> String {
    let s: String = name
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    if s.is_empty() || s.starts_with(|c: char| c.is_ascii_digit()) {
        format!("G{s}")
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_dot() {
        let g = Graph::complete(3).unwrap();
        let dot = to_dot(&g, "k3", None);
        assert_eq!(dot, "graph k3 {\n  0;\n  1;\n  2;\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n");
    }

    #[test]
    fn labelled_dot() {
        let g = Graph::path(2).unwrap();
        let labels = vec!["x".to_string(), "y\"1".to_string()];
        let dot = to_dot(&g, "H_4(14)", Some(&labels));
        assert!(dot.starts_with("graph H_4_14_ {"));
        assert!(dot.contains("0 [label=\"x\"];"));
        assert!(dot.contains("1 [label=\"y\\\"1\"];"));
    }
}
