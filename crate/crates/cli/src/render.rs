use std::fmt::Write;

use tamari_core::IntervalPoset;

/// Column is the vertex, row is the depth in the final forest, so a
/// decreasing relation points up and an increasing one points right.
fn positions(p: &IntervalPoset) -> Vec<(usize, isize)> {
    let f = p.decreasing_forest();
    let mut depth = vec![0; p.size() + 1];
    for v in 1..=p.size() {
        depth[v] = f.parent(v).map_or(0, |a| depth[a] + 1);
    }
    (1..=p.size()).map(|v| (v - 1, -(depth[v] as isize))).collect()
}

pub fn dot(p: &IntervalPoset) -> String {
    let mut out = String::from("digraph interval {\n  node [shape=plaintext];\n");
    for (v, (x, y)) in positions(p).into_iter().enumerate() {
        writeln!(out, "  {} [pos=\"{x},{y}!\"];", v + 1).unwrap();
    }
    for (a, b) in p.increasing_forest().edges() {
        writeln!(out, "  {a} -> {b} [color=blue];").unwrap();
    }
    for (b, a) in p.decreasing_forest().edges() {
        writeln!(out, "  {b} -> {a} [color=red, style=dashed];").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn tikz(p: &IntervalPoset) -> String {
    let mut out = String::from("\\begin{tikzpicture}\n");
    for (v, (x, y)) in positions(p).into_iter().enumerate() {
        writeln!(out, "\\node(T{0}) at ({x},{y}) {{{0}}};", v + 1).unwrap();
    }
    for (a, b) in p.increasing_forest().edges() {
        writeln!(out, "\\draw[line width = 0.5, color=blue] (T{a}) -- (T{b});").unwrap();
    }
    for (b, a) in p.decreasing_forest().edges() {
        writeln!(out, "\\draw[line width = 0.5, color=red] (T{b}) -- (T{a});").unwrap();
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}
