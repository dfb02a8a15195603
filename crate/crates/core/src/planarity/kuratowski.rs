//! Kuratowski witnesses and a subdivision recognizer.

use std::collections::HashMap;

use super::{blocks, is_planar, KuratowskiWitness};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubdivisionKind {
    K5,
    K33,
    K4,
    K23,
}

impl std::fmt::Display for SubdivisionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SubdivisionKind::K5 => "K5",
            SubdivisionKind::K33 => "K3,3",
            SubdivisionKind::K4 => "K4",
            SubdivisionKind::K23 => "K2,3",
        })
    }
}

/// Edge-minimal nonplanar subgraph of a nonplanar `g`.
///
/// An edge-minimal nonplanar graph is a Kuratowski subdivision, so deleting
/// every edge whose removal keeps the graph nonplanar is enough.
pub(crate) fn witness(g: &Graph) -> KuratowskiWitness {
    let block = blocks(g)
        .into_iter()
        .find(|b| b.len() >= 9 && !is_planar(&g.edge_subgraph(b)))
        .expect("a nonplanar graph has a nonplanar block");
    let mut keep = block;
    let mut i = 0;
    while i < keep.len() {
        let e = keep.remove(i);
        if is_planar(&g.edge_subgraph(&keep)) {
            keep.insert(i, e);
            i += 1;
        }
    }
    let kind = recognize_subdivision(g, &keep).expect("edge-minimal nonplanar subgraph is Kuratowski");
    let edges = keep.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
    KuratowskiWitness { kind, edges }
}

/// Classifies an edge set of `g` as a subdivision of K5, K3,3, K4 or K2,3.
///
/// Edges absent from `g` make the answer `None`.
pub fn recognize_subdivision(g: &Graph, edges: &[(Vertex, Vertex)]) -> Option<SubdivisionKind> {
    let mut adj: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
    for &(u, v) in edges {
        if u == v || u >= g.order() || v >= g.order() || !g.has_edge(u, v) {
            return None;
        }
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    for nb in adj.values_mut() {
        nb.sort_unstable();
        let before = nb.len();
        nb.dedup();
        if nb.len() != before {
            return None;
        }
    }
    if adj.values().any(|nb| nb.len() < 2) {
        return None;
    }
    let mut branch: Vec<Vertex> = adj.iter().filter(|(_, nb)| nb.len() >= 3).map(|(&v, _)| v).collect();
    branch.sort_unstable();
    let index: HashMap<Vertex, usize> = branch.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    // Trace each branch path; record (end-branch pair, path length).
    let mut paths: Vec<(usize, usize, usize)> = Vec::new();
    let mut used = 0usize;
    for &b in &branch {
        for &first in &adj[&b] {
            let (mut prev, mut cur, mut len) = (b, first, 1);
            while !index.contains_key(&cur) {
                let nb = &adj[&cur];
                let next = if nb[0] == prev { nb[1] } else { nb[0] };
                prev = cur;
                cur = next;
                len += 1;
                if len > edges.len() {
                    return None;
                }
            }
            if cur == b {
                return None;
            }
            used += len;
            let (x, y) = (index[&b], index[&cur]);
            if x < y {
                paths.push((x, y, len));
            }
        }
    }
    // Every edge must lie on a branch path (rules out stray cycles).
    if used != 2 * edges.len() {
        return None;
    }
    // Connectivity of the branch multigraph.
    let k = branch.len();
    let mut comp: Vec<usize> = (0..k).collect();
    fn find(c: &mut [usize], x: usize) -> usize {
        if c[x] != x {
            let r = find(c, c[x]);
            c[x] = r;
        }
        c[x]
    }
    for &(x, y, _) in &paths {
        let (a, b) = (find(&mut comp, x), find(&mut comp, y));
        comp[a] = b;
    }
    if k == 0 || (0..k).any(|x| find(&mut comp, x) != find(&mut comp, 0)) {
        return None;
    }
    let mut pairs: Vec<(usize, usize)> = paths.iter().map(|&(x, y, _)| (x, y)).collect();
    pairs.sort_unstable();
    let simple = pairs.windows(2).all(|w| w[0] != w[1]);
    let deg = |d: usize| (0..k).all(|x| adj[&branch[x]].len() == d);

    match (k, pairs.len()) {
        (5, 10) if simple && deg(4) => Some(SubdivisionKind::K5),
        (4, 6) if simple && deg(3) => Some(SubdivisionKind::K4),
        (6, 9) if simple && deg(3) => {
            let mut h = Graph::with_vertices((0..6).map(|i| i.to_string())).expect("labels");
            for &(x, y) in &pairs {
                h.add_edge(x, y).expect("simple");
            }
            crate::graph::is_bipartite(&h).then_some(SubdivisionKind::K33)
        }
        (2, 3) if deg(3) && paths.iter().all(|&(_, _, l)| l >= 2) => Some(SubdivisionKind::K23),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn recognizes_plain_graphs() {
        let g = complete(4);
        assert_eq!(recognize_subdivision(&g, &g.edges()), Some(SubdivisionKind::K4));
        let g = complete_bipartite(2, 3);
        assert_eq!(recognize_subdivision(&g, &g.edges()), Some(SubdivisionKind::K23));
        let g = complete(5);
        assert_eq!(recognize_subdivision(&g, &g.edges()), Some(SubdivisionKind::K5));
    }

    #[test]
    fn recognizes_subdivided_k4() {
        let mut g = complete(4);
        let g2 = g.clone();
        for (u, v) in g2.edges() {
            let (a, b) = (g2.label(u).to_string(), g2.label(v).to_string());
            g = g.delete_edge(&a, &b).unwrap();
            let m = g.add_vertex(&format!("{a}{b}")).unwrap();
            g.add_edge(g.vertex(&a).unwrap(), m).unwrap();
            g.add_edge(g.vertex(&b).unwrap(), m).unwrap();
        }
        assert_eq!(recognize_subdivision(&g, &g.edges()), Some(SubdivisionKind::K4));
    }

    #[test]
    fn rejects_non_subdivisions() {
        let g = cycle(5);
        assert_eq!(recognize_subdivision(&g, &g.edges()), None);
        // Theta graph with a direct edge is not a K2,3 subdivision.
        let g = Graph::from_edges(&[("a", "b"), ("a", "x"), ("x", "b"), ("a", "y"), ("y", "b")]).unwrap();
        assert_eq!(recognize_subdivision(&g, &g.edges()), None);
        let g = cube();
        assert_eq!(recognize_subdivision(&g, &g.edges()), None);
        // The prism is 3-regular on 6 vertices but not bipartite.
        let g = Graph::from_edges(&[
            ("a", "b"),
            ("b", "c"),
            ("c", "a"),
            ("x", "y"),
            ("y", "z"),
            ("z", "x"),
            ("a", "x"),
            ("b", "y"),
            ("c", "z"),
        ])
        .unwrap();
        assert_eq!(recognize_subdivision(&g, &g.edges()), None);
    }
}
