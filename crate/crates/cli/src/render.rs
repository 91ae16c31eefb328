//! Text, JSON and DOT renderings of a resolution DAG.

use std::collections::HashSet;
use std::fmt::Write;

use serde::Serialize;
use toric_nash::{Gens, NodeId, Tree, Vector};

fn pairs(g: &Gens) -> Vec<[i64; 2]> {
    g.iter().map(xy).collect()
}

fn xy(v: &Vector) -> [i64; 2] {
    [v.x, v.y]
}

/// Pair indices are shown 1-based, matching `γ₁, …, γₙ`.
fn one_based(pair: (usize, usize)) -> [usize; 2] {
    [pair.0 + 1, pair.1 + 1]
}

#[derive(Serialize)]
pub struct JsonTree {
    pub status: &'static str,
    pub max_depth: usize,
    pub dedupe: bool,
    pub node_count: usize,
    pub depth_to_smooth: Option<usize>,
    pub root: JsonNode,
}

#[derive(Serialize)]
pub struct JsonNode {
    pub id: NodeId,
    /// Minimal generators, in the coordinates where the chart first appeared.
    pub generators: Vec<[i64; 2]>,
    /// The same set in GL(2,Z)-canonical form; equal nodes share it.
    pub minimal: Vec<[i64; 2]>,
    pub class: &'static str,
    pub level: usize,
    pub depth_to_smooth: Option<usize>,
    pub children: Vec<JsonChild>,
}

#[derive(Serialize)]
pub struct JsonChild {
    pub vertex: [i64; 2],
    pub pair: [usize; 2],
    pub node: JsonNode,
}

fn json_node(tree: &Tree, id: NodeId) -> JsonNode {
    let n = tree.node(id);
    JsonNode {
        id,
        generators: pairs(&n.generators),
        minimal: pairs(&n.canonical),
        class: n.class.name(),
        level: n.level,
        depth_to_smooth: n.depth_to_smooth,
        children: n
            .children
            .iter()
            .map(|c| JsonChild {
                vertex: xy(&c.vertex),
                pair: one_based(c.pair),
                node: json_node(tree, c.node),
            })
            .collect(),
    }
}

/// Shared nodes are written out in full under every parent.
pub fn json(tree: &Tree, dedupe: bool) -> String {
    let doc = JsonTree {
        status: tree.status.name(),
        max_depth: tree.max_depth,
        dedupe,
        node_count: tree.len(),
        depth_to_smooth: tree.root().depth_to_smooth,
        root: json_node(tree, tree.root),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    s.push('\n');
    s
}

fn depth(d: Option<usize>) -> String {
    d.map_or_else(|| "?".into(), |d| d.to_string())
}

/// Indented outline. A node already printed is referenced by id only.
pub fn text(tree: &Tree) -> String {
    let mut out = String::new();
    let root = tree.root();
    writeln!(out, "status: {}", tree.status.name()).unwrap();
    writeln!(out, "depth to smooth: {}", depth(root.depth_to_smooth)).unwrap();
    writeln!(out, "nodes: {}", tree.len()).unwrap();
    let mut seen = HashSet::new();
    text_node(tree, tree.root, 0, &mut seen, &mut out);
    out
}

fn text_node(tree: &Tree, id: NodeId, indent: usize, seen: &mut HashSet<NodeId>, out: &mut String) {
    let n = tree.node(id);
    let first = seen.insert(id);
    writeln!(
        out,
        "#{id} {} ({} gens, depth {}) {}{}",
        n.class,
        n.generators.len(),
        depth(n.depth_to_smooth),
        n.generators,
        if first || n.children.is_empty() {
            ""
        } else {
            " [see above]"
        }
    )
    .unwrap();
    if !first {
        return;
    }
    for c in &n.children {
        let [i, j] = one_based(c.pair);
        write!(
            out,
            "{:width$}γ{i}+γ{j} = {} -> ",
            "",
            c.vertex,
            width = indent + 2
        )
        .unwrap();
        text_node(tree, c.node, indent + 2, seen, out);
    }
}

/// Graphviz digraph with one vertex per distinct chart; smooth charts get
/// a double border.
pub fn dot(tree: &Tree) -> String {
    let mut out =
        String::from("digraph resolution {\n  node [shape=box, fontname=\"monospace\"];\n");
    for (id, n) in tree.nodes.iter().enumerate() {
        write!(
            out,
            "  n{id} [label=\"{}\\n{} depth {}\"",
            n.generators,
            n.class,
            depth(n.depth_to_smooth)
        )
        .unwrap();
        if n.depth_to_smooth == Some(0) {
            out.push_str(", peripheries=2");
        }
        out.push_str("];\n");
    }
    for (id, n) in tree.nodes.iter().enumerate() {
        for c in &n.children {
            let [i, j] = one_based(c.pair);
            writeln!(out, "  n{id} -> n{} [label=\"{i},{j}\"];", c.node).unwrap();
        }
    }
    out.push_str("}\n");
    out
}
