//! Graphviz DOT output for prosets and decomposition certificates.

use std::fmt::Write;

use crate::proset::Proset;
use crate::zed::{shoelace_window, DecomposedShoelaceRep};

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Smallest index isomorphic to each element.
fn representatives(p: &Proset) -> Vec<usize> {
    (0..p.len()).map(|i| (0..=i).find(|&j| p.is_iso(i, j)).unwrap_or(i)).collect()
}

fn hasse_edges(p: &Proset, out: &mut String) {
    let rep = representatives(p);
    for (i, j) in p.covering_pairs() {
        if rep[i] == i && rep[j] == j {
            writeln!(out, "  n{i} -> n{j};").unwrap();
        }
    }
    for i in 0..p.len() {
        if rep[i] != i {
            writeln!(out, "  n{} -> n{i} [dir=both, style=dashed];", rep[i]).unwrap();
        }
    }
}

/// Hasse-style digraph: covering relations between isomorphism classes,
/// drawn upwards, with dashed two-way edges tying isomorphic elements.
pub fn proset_dot(p: &Proset) -> String {
    let mut out = String::from("digraph proset {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for i in 0..p.len() {
        writeln!(out, "  n{i} [label=\"{}\"];", escape(&p.label(i))).unwrap();
    }
    hasse_edges(p, &mut out);
    out.push_str("}\n");
    out
}

/// The windowed shoelace with each element annotated by the summands whose
/// support contains it. Plain and primed copies are drawn as two rows.
pub fn decomposed_dot(l: &DecomposedShoelaceRep) -> String {
    let sh = shoelace_window(&l.window(), l.epsilon());
    let carrier = sh.carrier();
    let supports: Vec<Vec<bool>> = (0..l.summands().len()).map(|k| l.support(k)).collect();
    let mut out = String::from("digraph decomposition {\n  rankdir=LR;\n  node [shape=box];\n");
    for (k, s) in l.summands().iter().enumerate() {
        writeln!(out, "  // summand {k}: {s}").unwrap();
    }
    let n = sh.base_len();
    for (row, range) in [("plain", 0..n), ("primed", n..2 * n)] {
        writeln!(out, "  subgraph {row} {{\n    rank=same;").unwrap();
        for x in range {
            let members: Vec<String> = (0..supports.len()).filter(|&k| supports[k][x]).map(|k| k.to_string()).collect();
            let style = if members.is_empty() { "" } else { ", style=filled, fillcolor=lightgrey" };
            writeln!(
                out,
                "    n{x} [label=\"{}\\n{{{}}}\"{style}];",
                escape(&carrier.label(x)),
                members.join(",")
            )
            .unwrap();
        }
        out.push_str("  }\n");
    }
    hasse_edges(carrier, &mut out);
    out.push_str("}\n");
    out
}
