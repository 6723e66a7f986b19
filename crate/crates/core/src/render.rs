//! DOT and TikZ emitters for diagrams and the derived graphs.
//!
//! Weight-1 edges are drawn bold, matching the convention used for weighted
//! interlacement graphs in the literature this tool reproduces.

use crate::codec::ChordDiagram;
use crate::criteria::ModifiedGraph;
use crate::interlace::{InterlacementGraph, WeightedInterlacementGraph};
use std::fmt::Write;

fn vertex_label(i: usize) -> String {
    (i + 1).to_string()
}

pub fn dot_interlacement(g: &InterlacementGraph) -> String {
    let mut out = String::from("graph interlacement {\n  layout=circo;\n  node [shape=circle];\n");
    for i in 0..g.vertex_count() {
        writeln!(out, "  \"{}\";", vertex_label(i)).unwrap();
    }
    for (i, j) in g.edges() {
        writeln!(out, "  \"{}\" -- \"{}\";", vertex_label(i), vertex_label(j)).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn dot_weighted(w: &WeightedInterlacementGraph) -> String {
    let g = w.base();
    let mut out = String::from("graph weighted {\n  layout=circo;\n  node [shape=circle];\n");
    for i in 0..g.vertex_count() {
        writeln!(out, "  \"{}\";", vertex_label(i)).unwrap();
    }
    for (i, j) in g.edges() {
        let attrs = if w.weight(i, j).unwrap() {
            " [style=bold, penwidth=2]"
        } else {
            ""
        };
        writeln!(
            out,
            "  \"{}\" -- \"{}\"{attrs};",
            vertex_label(i),
            vertex_label(j)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn dot_modified(m: &ModifiedGraph) -> String {
    let mut out = String::from("graph modified {\n  layout=circo;\n");
    for v in 0..m.vertex_count() {
        if v < m.original_count() {
            writeln!(out, "  \"{}\" [shape=circle];", m.label(v)).unwrap();
        } else {
            writeln!(out, "  \"{}\" [shape=box, fontsize=9];", m.label(v)).unwrap();
        }
    }
    for v in 0..m.vertex_count() {
        for &u in m.neighbors(v) {
            if u > v {
                writeln!(out, "  \"{}\" -- \"{}\";", m.label(v), m.label(u)).unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

/// The chord diagram as a graph: the circle is the dotted cycle over
/// positions, chords are solid edges between them.
pub fn dot_diagram(d: &ChordDiagram) -> String {
    let len = d.positions();
    let code = d.to_code();
    let mut out = String::from("graph diagram {\n  layout=circo;\n  node [shape=circle];\n");
    for p in 0..len {
        writeln!(
            out,
            "  p{p} [label=\"{}\"];",
            code.symbols()[p] + 1
        )
        .unwrap();
    }
    for p in 0..len {
        writeln!(out, "  p{p} -- p{} [style=dotted];", (p + 1) % len).unwrap();
    }
    for &(p, q) in d.endpoints() {
        writeln!(out, "  p{p} -- p{q};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn circle_angle(i: usize, count: usize) -> f64 {
    90.0 + 360.0 * i as f64 / count as f64
}

pub fn tikz_diagram(d: &ChordDiagram) -> String {
    let len = d.positions();
    let code = d.to_code();
    let mut out = String::from("\\begin{tikzpicture}[scale=0.6]\n  \\draw (0,0) circle (3);\n");
    for p in 0..len {
        let a = circle_angle(p, len.max(1));
        writeln!(out, "  \\fill ({a:.3}:3) circle (2.5pt);").unwrap();
        writeln!(
            out,
            "  \\node at ({a:.3}:3.45) {{{}}};",
            code.symbols()[p] + 1
        )
        .unwrap();
    }
    for &(p, q) in d.endpoints() {
        let (a, b) = (circle_angle(p as usize, len), circle_angle(q as usize, len));
        writeln!(out, "  \\draw ({a:.3}:3) -- ({b:.3}:3);").unwrap();
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

fn tikz_graph_vertices(out: &mut String, labels: &[String], n: usize) {
    for (i, label) in labels.iter().enumerate() {
        let a = circle_angle(i, n.max(1));
        writeln!(out, "  \\fill ({a:.3}:2.5) circle (2.5pt);").unwrap();
        writeln!(out, "  \\node at ({a:.3}:2.95) {{{label}}};").unwrap();
    }
}

pub fn tikz_interlacement(g: &InterlacementGraph) -> String {
    let n = g.vertex_count();
    let mut out = String::from("\\begin{tikzpicture}[scale=0.6]\n");
    let labels: Vec<String> = (0..n).map(vertex_label).collect();
    tikz_graph_vertices(&mut out, &labels, n);
    for (i, j) in g.edges() {
        let (a, b) = (circle_angle(i, n), circle_angle(j, n));
        writeln!(out, "  \\draw ({a:.3}:2.5) -- ({b:.3}:2.5);").unwrap();
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

pub fn tikz_weighted(w: &WeightedInterlacementGraph) -> String {
    let g = w.base();
    let n = g.vertex_count();
    let mut out = String::from("\\begin{tikzpicture}[scale=0.6]\n");
    let labels: Vec<String> = (0..n).map(vertex_label).collect();
    tikz_graph_vertices(&mut out, &labels, n);
    for (i, j) in g.edges() {
        let style = if w.weight(i, j).unwrap() {
            "[line width=2]"
        } else {
            ""
        };
        let (a, b) = (circle_angle(i, n), circle_angle(j, n));
        writeln!(out, "  \\draw{style} ({a:.3}:2.5) -- ({b:.3}:2.5);").unwrap();
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

pub fn tikz_modified(m: &ModifiedGraph) -> String {
    let total = m.vertex_count();
    let mut out = String::from("\\begin{tikzpicture}[scale=0.6]\n");
    // originals on the circle, split vertices at chord midpoints
    let coord = |v: usize| -> (f64, f64) {
        if v < m.original_count() {
            let a = circle_angle(v, m.original_count().max(1)).to_radians();
            (2.5 * a.cos(), 2.5 * a.sin())
        } else {
            let (i, j) = m.splits()[v - m.original_count()];
            let ai = circle_angle(i, m.original_count()).to_radians();
            let aj = circle_angle(j, m.original_count()).to_radians();
            (
                2.5 * (ai.cos() + aj.cos()) / 2.0,
                2.5 * (ai.sin() + aj.sin()) / 2.0,
            )
        }
    };
    for v in 0..total {
        let (x, y) = coord(v);
        let size = if v < m.original_count() { "2.5pt" } else { "1.8pt" };
        writeln!(out, "  \\fill ({x:.3},{y:.3}) circle ({size});").unwrap();
        writeln!(out, "  \\node[above] at ({x:.3},{y:.3}) {{\\tiny {}}};", m.label(v)).unwrap();
    }
    for v in 0..total {
        for &u in m.neighbors(v) {
            if u > v {
                let (x1, y1) = coord(v);
                let (x2, y2) = coord(u);
                writeln!(out, "  \\draw ({x1:.3},{y1:.3}) -- ({x2:.3},{y2:.3});").unwrap();
            }
        }
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::GaussCode;
    use crate::criteria::build_modified_graph;

    #[test]
    fn dot_interlacement_lists_all_vertices_and_edges() {
        let g = InterlacementGraph::from_code(&GaussCode::parse("12334124").unwrap());
        let dot = dot_interlacement(&g);
        for v in ["\"1\";", "\"2\";", "\"3\";", "\"4\";"] {
            assert!(dot.contains(v), "missing {v} in {dot}");
        }
        assert!(dot.contains("\"1\" -- \"2\";"));
        assert!(dot.contains("\"1\" -- \"4\";"));
        assert!(dot.contains("\"2\" -- \"4\";"));
        assert!(!dot.contains("\"3\" --"));
    }

    #[test]
    fn weighted_dot_bolds_the_odd_edges() {
        let g = InterlacementGraph::from_code(&GaussCode::parse("432156346215").unwrap());
        let dot = dot_weighted(&g.weighted());
        assert!(dot.contains("\"3\" -- \"4\" [style=bold, penwidth=2];"));
        assert!(dot.contains("\"3\" -- \"5\" [style=bold, penwidth=2];"));
        assert!(dot.contains("\"4\" -- \"5\" [style=bold, penwidth=2];"));
        assert!(dot.contains("\"1\" -- \"3\";"));
    }

    #[test]
    fn modified_dot_names_split_vertices() {
        let g = InterlacementGraph::from_code(&GaussCode::parse("432156346215").unwrap());
        let m = build_modified_graph(&g.weighted());
        let dot = dot_modified(&m);
        assert!(dot.contains("u3,4"));
        assert!(dot.contains("u3,5"));
        assert!(dot.contains("u4,5"));
    }

    #[test]
    fn tikz_diagram_draws_each_chord_once() {
        let d = GaussCode::parse("11").unwrap().to_diagram();
        let tikz = tikz_diagram(&d);
        assert_eq!(tikz.matches("\\draw (").count() - 1, 1); // circle + 1 chord
        assert!(tikz.contains("\\begin{tikzpicture}"));
        assert!(tikz.contains("\\end{tikzpicture}"));
    }

    #[test]
    fn renders_diagrams_well_past_the_search_sizes() {
        let n = 300u16;
        let word: Vec<u16> = (0..n).chain(0..n).collect();
        let d = GaussCode::new(word).unwrap().to_diagram();
        let dot = dot_diagram(&d);
        assert!(dot.contains(&format!("p0 -- p{};", n)));
    }
}
