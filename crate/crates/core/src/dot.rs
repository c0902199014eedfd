//! Graphviz DOT rendering for trees.
//!
//! Node ids are preorder indices, labels are keys, and nodes carrying a
//! generation tag are filled with a color picked by generation, so the
//! growth layers of an incrementally built tree are visible at a glance.

use std::fmt::Display;
use std::fmt::Write as _;

use crate::avl::{AvlNode, AvlTree};

/// Fill colors indexed by `generation % len` (ColorBrewer Paired).
const GENERATION_COLORS: [&str; 10] = [
    "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c", "#fdbf6f", "#ff7f00",
    "#cab2d6", "#6a3d9a",
];

/// Renders the tree as a single `digraph`.
pub fn tree_to_dot<K: Display>(tree: &AvlTree<K>, graph_name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {graph_name} {{");
    let _ = writeln!(out, "  node [shape=circle, fontname=\"Helvetica\"];");
    let mut next_id = 0usize;
    if let Some(root) = tree.root() {
        emit(root, &mut next_id, &mut out);
    }
    out.push_str("}\n");
    out
}

fn emit<K: Display>(node: &AvlNode<K>, next_id: &mut usize, out: &mut String) -> usize {
    let id = *next_id;
    *next_id += 1;
    match node.generation() {
        Some(generation) => {
            let color = GENERATION_COLORS[generation as usize % GENERATION_COLORS.len()];
            let _ = writeln!(
                out,
                "  n{id} [label=\"{}\", style=filled, fillcolor=\"{color}\"];",
                node.key()
            );
        }
        None => {
            let _ = writeln!(out, "  n{id} [label=\"{}\"];", node.key());
        }
    }
    if let Some(left) = node.left() {
        let child = emit(left, next_id, out);
        let _ = writeln!(out, "  n{id} -> n{child};");
    }
    if let Some(right) = node.right() {
        let child = emit(right, next_id, out);
        let _ = writeln!(out, "  n{id} -> n{child};");
    }
    id
}
