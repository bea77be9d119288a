use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use crate::io::to_json;

use super::types::{Atlas, Node, RelationEdge};

pub fn emit_json(atlas: &Atlas) -> String {
    to_json(atlas)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DotOptions {
    /// Keep only machine-verified strict edges and claimed separations.
    pub strict_only: bool,
    /// Restrict the drawing to these shapes.
    pub nodes: Option<Vec<Node>>,
}

/// The shapes drawn in the classical picture of the atlas for `n <= 5`.
pub fn landmark_nodes() -> Vec<Node> {
    [
        (3, 2), (4, 2), (4, 3), (9, 3), (5, 4), (9, 4), (10, 4), (16, 4),
        (6, 5), (7, 5), (10, 5), (11, 5), (17, 5), (25, 5),
    ]
    .into_iter()
    .map(|(m, n)| Node::new(m, n))
    .collect()
}

fn quoted(node: Node) -> String {
    format!("\"{node}\"")
}

/// Graphviz text. Shapes with a settled family size share a rank per
/// `id_k` band; strict edges are bold, claimed ones dashed, equivalences
/// drawn in both directions.
pub fn emit_dot(atlas: &Atlas, options: &DotOptions) -> String {
    let keep: Option<BTreeSet<Node>> = options.nodes.as_ref().map(|v| v.iter().copied().collect());
    let shown = |n: Node| keep.as_ref().is_none_or(|k| k.contains(&n));
    let mut out = String::from("digraph atlas {\n");
    let entries: Vec<_> = atlas.entries.iter().filter(|e| shown(e.node())).collect();
    if !entries.is_empty() {
        out.push_str("  rankdir=TB;\n  node [shape=box];\n");
    }
    let mut bands: BTreeMap<usize, Vec<Node>> = BTreeMap::new();
    for e in &entries {
        let label = if e.is_settled() {
            bands.entry(e.max_k).or_default().push(e.node());
            format!("{}\\nid_{}", e.node(), e.max_k)
        } else {
            format!("{}\\n{}..{}", e.node(), e.max_k, e.upper_bound)
        };
        let _ = writeln!(out, "  {} [label=\"{label}\"];", quoted(e.node()));
    }
    for (k, nodes) in bands.iter().rev() {
        let names: Vec<String> = nodes.iter().map(|&n| quoted(n)).collect();
        let _ = writeln!(out, "  subgraph id_{k} {{ rank=same; {}; }}", names.join("; "));
    }
    for e in atlas.edges.iter().filter(|e| shown(e.from) && shown(e.to)) {
        if options.strict_only && e.strict != Some(true) && !e.claimed {
            continue;
        }
        let _ = writeln!(out, "  {} -> {} [{}];", quoted(e.from), quoted(e.to), edge_attrs(e));
    }
    out.push_str("}\n");
    out
}

fn edge_attrs(e: &RelationEdge) -> String {
    let mut attrs = vec![format!("label=\"{}\"", e.kind.as_str())];
    if e.claimed {
        attrs.push("style=dashed".into());
    } else if e.strict == Some(true) {
        attrs.push("style=bold".into());
    }
    attrs.join(", ")
}
