//! Hasse diagrams of finite subspace posets, exported as Graphviz DOT.

use std::fmt::Write;

use qlogic_core::subspace::canonical_cmp;
use qlogic_core::Subspace;

/// Nodes in canonical order (dimension, then canonical basis text) and the
/// covering pairs `(lower, upper)` between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseDiagram {
    pub nodes: Vec<(String, Subspace)>,
    pub edges: Vec<(usize, usize)>,
}

impl HasseDiagram {
    /// Duplicate subspaces are merged, keeping the first label.
    pub fn new(elements: impl IntoIterator<Item = (String, Subspace)>) -> Self {
        let mut nodes: Vec<(String, Subspace)> = Vec::new();
        for (label, s) in elements {
            if !nodes.iter().any(|(_, t)| *t == s) {
                nodes.push((label, s));
            }
        }
        nodes.sort_by(|a, b| canonical_cmp(&a.1, &b.1));
        let k = nodes.len();
        let below: Vec<Vec<bool>> = (0..k)
            .map(|a| {
                (0..k)
                    .map(|b| a != b && nodes[a].1.leq(&nodes[b].1).expect("shared ambient space"))
                    .collect()
            })
            .collect();
        let mut edges = Vec::new();
        for a in 0..k {
            for b in 0..k {
                if below[a][b] && !(0..k).any(|c| below[a][c] && below[c][b]) {
                    edges.push((a, b));
                }
            }
        }
        Self { nodes, edges }
    }

    pub fn to_dot(&self, title: &str) -> String {
        let mut out = String::new();
        writeln!(out, "digraph {} {{", quote(title)).unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        writeln!(out, "  node [shape=box];").unwrap();
        for (i, (label, _)) in self.nodes.iter().enumerate() {
            writeln!(out, "  n{i} [label={}];", quote(label)).unwrap();
        }
        for (a, b) in &self.edges {
            writeln!(out, "  n{a} -> n{b};").unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn index_of(&self, s: &Subspace) -> Option<usize> {
        self.nodes
            .binary_search_by(|(_, t)| canonical_cmp(t, s))
            .ok()
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(v: &[i64]) -> Subspace {
        Subspace::from_int_span(v.len(), &[v]).unwrap()
    }

    #[test]
    fn diamond() {
        let d = HasseDiagram::new([
            ("top".to_string(), Subspace::full(2)),
            ("up".to_string(), line(&[1, 0])),
            ("bottom".to_string(), Subspace::zero(2)),
            ("down".to_string(), line(&[0, 1])),
        ]);
        let labels: Vec<&str> = d.nodes.iter().map(|(l, _)| l.as_str()).collect();
        assert_eq!(labels, ["bottom", "down", "up", "top"]);
        assert_eq!(d.edges, [(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(d.index_of(&line(&[1, 0])), Some(2));
    }

    #[test]
    fn dot_text() {
        let d = HasseDiagram::new([
            ("\"0\"".to_string(), Subspace::zero(2)),
            ("all".to_string(), Subspace::full(2)),
        ]);
        assert_eq!(
            d.to_dot("chain"),
            "digraph \"chain\" {\n  rankdir=BT;\n  node [shape=box];\n  n0 [label=\"\\\"0\\\"\"];\n  n1 [label=\"all\"];\n  n0 -> n1;\n}\n"
        );
    }

    #[test]
    fn duplicates_merge() {
        let d = HasseDiagram::new([
            ("a".to_string(), line(&[1, 1])),
            ("b".to_string(), line(&[2, 2])),
        ]);
        assert_eq!(d.nodes.len(), 1);
        assert_eq!(d.nodes[0].0, "a");
    }
}
