//! Graphviz export.

use std::fmt::Write as _;

use crate::emulator::Projection;
use crate::graph::Graph;
use crate::planarity::Embedding;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT text for `g`. With a projection whose host is `g`, every fiber gets
/// its own fill colour and each node is tagged with its image. With an
/// embedding, the rotation of every vertex is kept as a comment.
pub fn export_dot(g: &Graph, emb: Option<&Embedding>, p: Option<&Projection>) -> String {
    let p = p.filter(|p| p.host() == g);
    let mut s = String::from("graph G {\n");
    if p.is_some() {
        s.push_str("  node [style=filled];\n");
    }
    for v in g.vertices() {
        let _ = write!(s, "  {}", quote(g.label(v)));
        if let Some(p) = p {
            let t = p.image(v);
            let hue = t as f64 / p.target().order() as f64;
            let _ = write!(
                s,
                " [fillcolor=\"{hue:.3} 0.45 0.95\", image_of={}]",
                quote(p.target().label(t))
            );
        }
        s.push_str(";\n");
    }
    if let Some(e) = emb.filter(|e| e.graph() == g) {
        for v in g.vertices() {
            let rot: Vec<&str> = e.rotation(v).iter().map(|&w| g.label(w)).collect();
            let _ = writeln!(s, "  // rotation {}: {}", g.label(v), rot.join(" "));
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {} -- {};", quote(g.label(u)), quote(g.label(v)));
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::complete;

    #[test]
    fn triangle() {
        let d = export_dot(&complete(3), None, None);
        assert_eq!(d.matches(" -- ").count(), 3);
        assert_eq!(d.lines().filter(|l| l.ends_with(';') && !l.contains("--")).count(), 3);
    }

    #[test]
    fn empty_graph() {
        assert_eq!(export_dot(&Graph::new(), None, None), "graph G {\n}\n");
    }

    #[test]
    fn fibers_get_colours() {
        let host = crate::graph::named::cycle(6);
        let p = Projection::new(host.clone(), complete(3), (0..6).map(|i| i % 3).collect()).unwrap();
        let d = export_dot(&host, None, Some(&p));
        let colours: std::collections::BTreeSet<&str> = d
            .lines()
            .filter_map(|l| l.split("fillcolor=").nth(1))
            .map(|r| &r[..16])
            .collect();
        assert_eq!(colours.len(), 3);
    }
}
