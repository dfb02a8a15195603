//! Planarity testing with embedding extraction.
//!
//! [`test_planarity`] returns either a rotation system or a Kuratowski
//! subgraph. Embeddings are validated on construction, so faces derived from
//! them always close.

mod dmp;
mod kuratowski;

use std::collections::HashMap;
use std::fmt::Write as _;

pub use kuratowski::{recognize_subdivision, SubdivisionKind};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Rotation system: for each vertex the clockwise cyclic order of its
/// neighbours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    graph: Graph,
    rotation: Vec<Vec<Vertex>>,
}

/// A face walk. `darts[i] = (u, v)` is the directed edge `u -> v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<(Vertex, Vertex)>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Tail vertices of the darts, in walk order.
    pub fn vertices(&self) -> Vec<Vertex> {
        self.darts.iter().map(|&(u, _)| u).collect()
    }
}

/// Edge set of a subdivision of K5 or K3,3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KuratowskiWitness {
    pub kind: SubdivisionKind,
    pub edges: Vec<(Vertex, Vertex)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Planarity {
    Planar(Embedding),
    NonPlanar(KuratowskiWitness),
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }

    pub fn embedding(self) -> Option<Embedding> {
        match self {
            Planarity::Planar(e) => Some(e),
            Planarity::NonPlanar(_) => None,
        }
    }
}

impl Embedding {
    /// Validates that every rotation lists exactly the incident edges once.
    pub fn new(graph: Graph, rotation: Vec<Vec<Vertex>>) -> Result<Self> {
        if rotation.len() != graph.order() {
            return Err(Error::CorruptRotation(format!(
                "{} rotations for {} vertices",
                rotation.len(),
                graph.order()
            )));
        }
        for v in graph.vertices() {
            let mut listed = rotation[v].clone();
            listed.sort_unstable();
            let before = listed.len();
            listed.dedup();
            let actual: Vec<Vertex> = graph.neighbors(v).collect();
            if before != listed.len() || listed != actual {
                return Err(Error::CorruptRotation(format!(
                    "rotation at {} does not list its incident edges exactly once",
                    graph.label(v)
                )));
            }
        }
        Ok(Embedding { graph, rotation })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self, v: Vertex) -> &[Vertex] {
        &self.rotation[v]
    }

    /// Neighbour following `u` in the rotation at `v`.
    pub fn successor(&self, v: Vertex, u: Vertex) -> Vertex {
        let rot = &self.rotation[v];
        let i = rot.iter().position(|&w| w == u).expect("u adjacent to v");
        rot[(i + 1) % rot.len()]
    }

    /// All face walks; the dart `u -> v` is followed by `v -> succ_v(u)`.
    pub fn faces(&self) -> Result<Vec<Face>> {
        let g = &self.graph;
        let pos: Vec<HashMap<Vertex, usize>> = self
            .rotation
            .iter()
            .map(|r| r.iter().enumerate().map(|(i, &w)| (w, i)).collect())
            .collect();
        let mut seen: Vec<Vec<bool>> = self.rotation.iter().map(|r| vec![false; r.len()]).collect();
        let total = 2 * g.size();
        let mut out = Vec::new();
        for u in g.vertices() {
            for i in 0..self.rotation[u].len() {
                if seen[u][i] {
                    continue;
                }
                let mut darts = Vec::new();
                let (mut a, mut ai) = (u, i);
                loop {
                    if seen[a][ai] {
                        if (a, ai) == (u, i) {
                            break;
                        }
                        return Err(Error::CorruptRotation("face walk does not close".into()));
                    }
                    seen[a][ai] = true;
                    let b = self.rotation[a][ai];
                    darts.push((a, b));
                    if darts.len() > total {
                        return Err(Error::CorruptRotation("face walk does not close".into()));
                    }
                    let rb = &self.rotation[b];
                    let j = pos[b][&a];
                    (a, ai) = (b, (j + 1) % rb.len());
                }
                out.push(Face { darts });
            }
        }
        Ok(out)
    }

    /// `|V| - |E| + |F| = 1 + #components`, counting each isolated vertex
    /// as bounding one face of its own.
    pub fn euler_check(&self) -> bool {
        let g = &self.graph;
        let Ok(faces) = self.faces() else {
            return false;
        };
        let isolated = g.vertices().filter(|&v| g.degree(v) == 0).count();
        let walks = faces.len() + isolated;
        let c = g.components().len();
        g.order() + walks == g.size() + 2 * c
    }

    /// One line per vertex: `v: n1 n2 ...` in rotation order.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for v in self.graph.vertices() {
            let _ = write!(s, "{}:", self.graph.label(v));
            for &w in &self.rotation[v] {
                let _ = write!(s, " {}", self.graph.label(w));
            }
            s.push('\n');
        }
        s
    }

    /// Parses the text format, building the graph from the listed edges.
    /// Every edge must be listed from both ends.
    pub fn from_text(text: &str) -> Result<Self> {
        let lines = parse_rotation_lines(text)?;
        let mut graph = Graph::new();
        for (line, v, _) in &lines {
            graph.add_vertex(v).map_err(|_| Error::Parse {
                line: *line,
                message: format!("vertex {v} listed twice"),
            })?;
        }
        for (line, v, nbrs) in &lines {
            for w in nbrs {
                let (a, b) = (
                    graph.vertex(v)?,
                    graph.vertex(w).map_err(|_| Error::Parse {
                        line: *line,
                        message: format!("unknown vertex {w}"),
                    })?,
                );
                if a == b {
                    return Err(Error::Parse {
                        line: *line,
                        message: format!("self-loop at {v}"),
                    });
                }
                graph.add_edge(a, b)?;
            }
        }
        Self::with_text_rotation(graph, &lines)
    }

    /// Parses the text format against a known graph.
    pub fn parse(graph: &Graph, text: &str) -> Result<Self> {
        let lines = parse_rotation_lines(text)?;
        Self::with_text_rotation(graph.clone(), &lines)
    }

    fn with_text_rotation(graph: Graph, lines: &[(usize, String, Vec<String>)]) -> Result<Self> {
        let mut rotation = vec![Vec::new(); graph.order()];
        for (line, v, nbrs) in lines {
            let err = |m: String| Error::Parse {
                line: *line,
                message: m,
            };
            let a = graph.vertex(v).map_err(|_| err(format!("unknown vertex {v}")))?;
            rotation[a] = nbrs
                .iter()
                .map(|w| graph.vertex(w).map_err(|_| err(format!("unknown vertex {w}"))))
                .collect::<Result<_>>()?;
        }
        Self::new(graph, rotation)
    }
}

/// Lines of `v: n1 n2 ...`, with `#` comments and blank lines skipped.
pub(crate) fn parse_rotation_lines(text: &str) -> Result<Vec<(usize, String, Vec<String>)>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((v, rest)) = line.split_once(':') else {
            return Err(Error::Parse {
                line: i + 1,
                message: "expected `vertex: neighbours...`".into(),
            });
        };
        let v = v.trim();
        if v.is_empty() {
            return Err(Error::Parse {
                line: i + 1,
                message: "empty vertex label".into(),
            });
        }
        out.push((
            i + 1,
            v.to_string(),
            rest.split_whitespace().map(str::to_string).collect(),
        ));
    }
    Ok(out)
}

pub fn is_planar(g: &Graph) -> bool {
    if g.order() >= 3 && g.size() > 3 * g.order() - 6 {
        return false;
    }
    blocks(g).iter().all(|b| b.len() < 3 || embed_edges(b).is_some())
}

pub fn test_planarity(g: &Graph) -> Planarity {
    if let Some(rotation) = planar_rotation(g) {
        let e = Embedding::new(g.clone(), rotation).expect("path addition yields a valid rotation");
        return Planarity::Planar(e);
    }
    Planarity::NonPlanar(kuratowski::witness(g))
}

pub fn faces(e: &Embedding) -> Result<Vec<Face>> {
    e.faces()
}

pub fn euler_check(e: &Embedding) -> bool {
    e.euler_check()
}

fn planar_rotation(g: &Graph) -> Option<Vec<Vec<Vertex>>> {
    if g.order() >= 3 && g.size() > 3 * g.order() - 6 {
        return None;
    }
    let mut rotation: Vec<Vec<Vertex>> = vec![Vec::new(); g.order()];
    for block in blocks(g) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        // Splicing whole blocks at a cut vertex keeps the embedding planar:
        // each block sits inside a single angle of the others.
        for (v, rot) in embed_edges(&block)? {
            rotation[v].extend(rot);
        }
    }
    Some(rotation)
}

/// Embeds the 2-connected subgraph spanned by `edges`, returning global
/// rotations for its vertices.
fn embed_edges(edges: &[(Vertex, Vertex)]) -> Option<Vec<(Vertex, Vec<Vertex>)>> {
    let mut local: HashMap<Vertex, usize> = HashMap::new();
    let mut global = Vec::new();
    for &(u, v) in edges {
        for x in [u, v] {
            local.entry(x).or_insert_with(|| {
                global.push(x);
                global.len() - 1
            });
        }
    }
    let mut adj = vec![Vec::new(); global.len()];
    for &(u, v) in edges {
        adj[local[&u]].push(local[&v]);
        adj[local[&v]].push(local[&u]);
    }
    let faces = dmp::embed_block(&adj)?;
    let rot = dmp::rotation_from_faces(&adj, &faces);
    Some(
        rot.into_iter()
            .enumerate()
            .map(|(i, r)| (global[i], r.into_iter().map(|x| global[x]).collect()))
            .collect(),
    )
}

/// Biconnected blocks as edge lists (Hopcroft-Tarjan, iterative).
pub(crate) fn blocks(g: &Graph) -> Vec<Vec<(Vertex, Vertex)>> {
    let n = g.order();
    let nbrs: Vec<Vec<Vertex>> = g.vertices().map(|v| g.neighbors(v).collect()).collect();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (u, parent, i) = *top;
            if i < nbrs[u].len() {
                top.2 += 1;
                let w = nbrs[u][i];
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, u, 0));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[u]);
                    if low[u] >= disc[parent] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (parent, u) {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

/// Whether `G[side]` plus an apex adjacent to the three boundary vertices is
/// planar. No separation preconditions are checked.
pub fn flat_with_boundary(g: &Graph, boundary: [Vertex; 3], side: &[Vertex]) -> bool {
    let mut keep: Vec<Vertex> = side.to_vec();
    keep.extend(boundary);
    keep.sort_unstable();
    keep.dedup();
    let (mut sub, old) = g.induced_subgraph(&keep);
    let apex_label = sub.fresh_label("apex");
    let apex = sub.add_vertex(&apex_label).expect("fresh label");
    for b in boundary {
        let i = old.iter().position(|&x| x == b).expect("boundary kept");
        sub.add_edge(apex, i).expect("distinct vertices");
    }
    is_planar(&sub)
}

/// Flatness of one side of a 3-separation: the side can be drawn with all
/// three boundary vertices on the outer face.
pub fn is_flat_separation(g: &Graph, boundary: [&str; 3], side: &[&str]) -> Result<bool> {
    let b = boundary.map(|l| g.vertex(l));
    let b = [b[0].clone()?, b[1].clone()?, b[2].clone()?];
    if b[0] == b[1] || b[1] == b[2] || b[0] == b[2] {
        return Err(Error::InvalidSeparation("boundary vertices must be distinct".into()));
    }
    let side: Vec<Vertex> = side.iter().map(|l| g.vertex(l)).collect::<Result<_>>()?;
    let mut in_side = vec![false; g.order()];
    for &v in &side {
        in_side[v] = true;
    }
    if b.iter().any(|&x| !in_side[x]) {
        return Err(Error::InvalidSeparation("boundary must lie in the side".into()));
    }
    for (u, v) in g.edges() {
        let inner = |x: Vertex| in_side[x] && !b.contains(&x);
        let outer = |x: Vertex| !in_side[x];
        if (inner(u) && outer(v)) || (inner(v) && outer(u)) {
            return Err(Error::InvalidSeparation(format!(
                "edge {}-{} crosses the separation",
                g.label(u),
                g.label(v)
            )));
        }
    }
    Ok(flat_with_boundary(g, b, &side))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn truncated_cube() -> Graph {
        let mut g = Graph::new();
        for c in 0..8 {
            for d in 0..3 {
                g.add_vertex(&format!("{c}.{d}")).unwrap();
            }
        }
        for c in 0..8usize {
            for d in 0..3usize {
                for e in d + 1..3 {
                    g.add_edge(c * 3 + d, c * 3 + e).unwrap();
                }
                let o = c ^ (1 << d);
                if c < o {
                    g.add_edge(c * 3 + d, o * 3 + d).unwrap();
                }
            }
        }
        g
    }

    fn face_lengths(g: &Graph) -> Vec<usize> {
        let e = test_planarity(g).embedding().expect("planar");
        assert!(e.euler_check());
        let mut l: Vec<usize> = e.faces().unwrap().iter().map(Face::len).collect();
        l.sort_unstable();
        l
    }

    #[test]
    fn k4_and_cube_faces() {
        assert_eq!(face_lengths(&complete(4)), vec![3; 4]);
        assert_eq!(face_lengths(&cube()), vec![4; 6]);
    }

    #[test]
    fn truncated_cube_faces() {
        let g = truncated_cube();
        assert_eq!((g.order(), g.size()), (24, 36));
        let mut want = vec![3; 8];
        want.extend([8; 6]);
        assert_eq!(face_lengths(&g), want);
    }

    #[test]
    fn kuratowski_graphs() {
        for (g, kind) in [
            (complete(5), SubdivisionKind::K5),
            (complete_bipartite(3, 3), SubdivisionKind::K33),
        ] {
            let Planarity::NonPlanar(w) = test_planarity(&g) else {
                panic!("nonplanar expected");
            };
            assert_eq!(w.kind, kind);
            assert_eq!(recognize_subdivision(&g, &w.edges), Some(kind));
        }
    }

    #[test]
    fn single_edge_and_forest() {
        let g = Graph::from_edges(&[("a", "b")]).unwrap();
        let e = test_planarity(&g).embedding().unwrap();
        assert_eq!(e.faces().unwrap().len(), 1);
        assert!(e.euler_check());
        let mut f = path(4);
        f.add_vertex("lonely").unwrap();
        assert!(test_planarity(&f).embedding().unwrap().euler_check());
    }

    #[test]
    fn blocks_joined_at_cut_vertex() {
        let g = Graph::from_edges(&[
            ("a", "b"),
            ("b", "c"),
            ("c", "a"),
            ("c", "d"),
            ("d", "e"),
            ("e", "c"),
            ("e", "f"),
        ])
        .unwrap();
        let e = test_planarity(&g).embedding().unwrap();
        assert!(e.euler_check());
        assert_eq!(e.faces().unwrap().len(), 3);
    }

    #[test]
    fn swapped_rotation_breaks_euler() {
        let g = complete(4);
        let e = test_planarity(&g).embedding().unwrap();
        let mut rot: Vec<Vec<Vertex>> = g.vertices().map(|v| e.rotation(v).to_vec()).collect();
        rot[0].swap(0, 1);
        let bad = Embedding::new(g, rot).unwrap();
        assert!(!bad.euler_check());
    }

    #[test]
    fn corrupt_rotation_rejected() {
        let g = complete(3);
        assert!(matches!(
            Embedding::new(g.clone(), vec![vec![1], vec![0, 2], vec![0, 1]]),
            Err(Error::CorruptRotation(_))
        ));
        assert!(matches!(
            Embedding::new(g, vec![vec![1, 1, 2], vec![0, 2], vec![0, 1]]),
            Err(Error::CorruptRotation(_))
        ));
    }

    #[test]
    fn text_round_trip() {
        let e = test_planarity(&cube()).embedding().unwrap();
        let back = Embedding::from_text(&e.to_text()).unwrap();
        assert_eq!(back.to_text(), e.to_text());
        assert!(Embedding::parse(&cube(), "0: 1 2\n").is_err());
        assert!(matches!(
            Embedding::from_text("0 1 2"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn flatness_examples() {
        let k3 = complete(3);
        assert!(is_flat_separation(&k3, ["0", "1", "2"], &["0", "1", "2"]).unwrap());
        let k5 = complete(5);
        assert!(!is_flat_separation(&k5, ["0", "1", "2"], &["0", "1", "2", "3", "4"]).unwrap());
        let k4 = complete(4);
        assert!(is_flat_separation(&k4, ["0", "1", "2"], &["0", "1", "2", "3"]).unwrap());
        assert!(matches!(
            is_flat_separation(&k5, ["0", "1", "2"], &["0", "1", "2", "3"]),
            Err(Error::InvalidSeparation(_))
        ));
    }
}
