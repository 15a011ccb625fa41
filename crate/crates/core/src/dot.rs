//! Graphviz export of game trees.
//!
//! Node ids are preorder indices (`n0` is the root). Internal nodes show
//! their game state and owner (`I`/`Y`); leaves show the atomic state and,
//! when a payoff is given, its value. Covering pairs of `≪` are drawn as
//! dashed edges from the less preferred leaf to the more preferred one.

use std::fmt::Write;

use crate::game::{GameTree, Payoff};
use crate::Degree;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn to_dot<D: Degree>(tree: &GameTree, payoff: Option<&Payoff<D>>) -> String {
    let mut out = String::from("digraph game {\n  node [fontname=\"monospace\"];\n");
    for (id, node) in tree.nodes().iter().enumerate() {
        match node.owner() {
            Some(owner) => writeln!(
                out,
                "  n{id} [shape=box, label=\"{}\\n[{owner}]\"];",
                escape(&node.caption)
            ),
            None => match payoff {
                Some(p) => writeln!(
                    out,
                    "  n{id} [shape=ellipse, label=\"{}\\n{}\"];",
                    escape(&node.caption),
                    p.get(id)
                ),
                None => writeln!(
                    out,
                    "  n{id} [shape=ellipse, label=\"{}\"];",
                    escape(&node.caption)
                ),
            },
        }
        .unwrap();
    }
    for (id, node) in tree.nodes().iter().enumerate() {
        for c in node.children() {
            writeln!(out, "  n{id} -> n{c};").unwrap();
        }
    }
    for (worse, better) in tree.covering_preferences() {
        writeln!(
            out,
            "  n{worse} -> n{better} [style=dashed, constraint=false, label=\"{} << {}\"];",
            escape(&tree.node(worse).caption),
            escape(&tree.node(better).caption)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
