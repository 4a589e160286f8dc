use std::fmt::Write;

use super::bd::{edge_name, BDComplex};
use super::map::CellularMap;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz digraph. Tile edges are bold, vertex edges dashed; with a map,
/// each edge is annotated with its image path.
pub fn export_dot(k: &BDComplex, g: Option<&CellularMap>) -> String {
    let mut out =
        String::from("digraph bd {\n  rankdir=LR;\n  node [shape=circle, fontsize=10];\n");
    for v in 0..k.cells().vertex_count() {
        writeln!(out, "  v{v} [label={}];", quote(&k.vertex_name(v))).unwrap();
    }
    for (i, e) in k.cells().edges.iter().enumerate() {
        let style = if e.label.is_vertex_edge() {
            "style=dashed"
        } else {
            "style=bold"
        };
        let mut attrs = format!("label={}, {style}", quote(&k.edge_name(i)));
        if let Some(g) = g {
            let path: Vec<String> = g.edge_images[i]
                .iter()
                .map(|s| {
                    let name = edge_name(k.alphabet(), g.codomain.edges[s.edge].label);
                    if s.forward {
                        name
                    } else {
                        format!("-{name}")
                    }
                })
                .collect();
            write!(
                attrs,
                ", xlabel={}",
                quote(&format!("↦ {}", path.join(" ")))
            )
            .unwrap();
        }
        writeln!(out, "  v{} -> v{} [{attrs}];", e.tail, e.head).unwrap();
    }
    out.push_str("}\n");
    out
}
