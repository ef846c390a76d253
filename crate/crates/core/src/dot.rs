//! Deterministic Graphviz output for Hasse diagrams and decompositions.

use std::fmt::Write;

use crate::decomposition::{PathDecomposition, TreeDecomposition};
use crate::poset::Poset;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram, bottom to top, with elements of equal height on one rank.
pub fn poset_dot(p: &Poset) -> String {
    let n = p.len();
    let mut level = vec![0usize; n];
    for x in p.linear_extension() {
        for y in p.up_set(x).ones() {
            level[y] = level[y].max(level[x] + 1);
        }
    }
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n");
    for x in 0..n {
        writeln!(out, "  {x} [label={}];", quote(&p.label(x))).unwrap();
    }
    let top = level.iter().copied().max().unwrap_or(0);
    for r in 0..=top {
        let members: Vec<String> = (0..n).filter(|&x| level[x] == r).map(|x| x.to_string()).collect();
        if !members.is_empty() {
            writeln!(out, "  {{ rank=same; {}; }}", members.join("; ")).unwrap();
        }
    }
    for (x, y) in p.cover_pairs() {
        writeln!(out, "  {x} -> {y};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn bag_label(bag: &[usize], labels: Option<&Poset>) -> String {
    let names: Vec<String> = bag
        .iter()
        .map(|&v| labels.filter(|p| v < p.len()).map_or_else(|| v.to_string(), |p| p.label(v)))
        .collect();
    format!("{{{}}}", names.join(" | "))
}

/// Bags as record nodes joined along the host tree. Vertex names come from
/// `labels` when given.
pub fn tree_decomposition_dot(d: &TreeDecomposition, labels: Option<&Poset>) -> String {
    let mut out = String::from("graph decomposition {\n  node [shape=record];\n");
    for (node, bag) in &d.bags {
        writeln!(out, "  b{node} [label={}];", quote(&bag_label(bag, labels))).unwrap();
    }
    let mut edges = d.host_edges.clone();
    edges.sort_unstable();
    for (u, v) in edges {
        writeln!(out, "  b{u} -- b{v};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn path_decomposition_dot(d: &PathDecomposition, labels: Option<&Poset>) -> String {
    tree_decomposition_dot(&d.to_tree(), labels)
}
