//! DOT rendering of graphs with optional labels and highlighted edges.

use crate::graph::Graph;

#[derive(Default)]
pub struct DotOptions<'a> {
    /// Node labels; vertex ids are used when absent.
    pub labels: Option<&'a [String]>,
    /// Edges drawn with the highlight style (dashed, bold). Pairs are
    /// matched regardless of endpoint order.
    pub highlight: &'a [(usize, usize)],
    pub graph_name: &'a str,
}

/// Deterministic DOT text: one node line per vertex in id order, one edge
/// line per edge in lexicographic order.
pub fn dot_export(g: &Graph, opts: &DotOptions) -> String {
    let name = if opts.graph_name.is_empty() {
        "G"
    } else {
        opts.graph_name
    };
    let mut out = format!("graph {name} {{\n");
    for v in 0..g.vertex_count() {
        match opts.labels {
            Some(labels) => out.push_str(&format!("  {v} [label=\"{}\"];\n", labels[v])),
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    let highlighted = |u: usize, v: usize| {
        opts.highlight
            .iter()
            .any(|&(a, b)| (a, b) == (u, v) || (b, a) == (u, v))
    };
    for (u, v) in g.edges() {
        if highlighted(u, v) {
            out.push_str(&format!("  {u} -- {v} [style=dashed, penwidth=2];\n"));
        } else {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_counts_match_graph() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let text = dot_export(&g, &DotOptions::default());
        assert_eq!(text.lines().filter(|l| l.contains("--")).count(), 2);
        let node_lines = text
            .lines()
            .filter(|l| !l.contains("--") && l.ends_with(';'))
            .count();
        assert_eq!(node_lines, 3);
    }

    #[test]
    fn highlight_style_applied() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let opts = DotOptions {
            highlight: &[(2, 1)],
            ..Default::default()
        };
        let text = dot_export(&g, &opts);
        assert!(text.contains("1 -- 2 [style=dashed"));
        assert!(text.contains("0 -- 1;"));
    }

    #[test]
    fn empty_graph_has_header_and_footer_only() {
        let text = dot_export(&Graph::new(0), &DotOptions::default());
        assert_eq!(text, "graph G {\n}\n");
    }
}
