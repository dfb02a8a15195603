//! Simple undirected graphs with stable string labels.
//!
//! Vertices are dense indices `0..n` internally; every vertex carries a unique
//! label which is what the text formats, reports and golden tests see. All
//! operations return new graphs and leave their input untouched.

mod bipartite;
mod iso;
mod minor;

pub use bipartite::{bipartition, is_bipartite, Bipartition};
pub use iso::{is_isomorphic, isomorphism};
pub use minor::{has_minor, MinorModel};

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Dense vertex index into a [`Graph`].
pub type Vertex = usize;

#[derive(Clone, Default, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, Vertex>,
    adj: Vec<BTreeSet<Vertex>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} vertices, {} edges)", self.order(), self.size())
    }
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on the given labels with no edges.
    pub fn with_vertices<S: AsRef<str>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let mut g = Self::new();
        for l in labels {
            g.add_vertex(l.as_ref())?;
        }
        Ok(g)
    }

    /// Builds a graph from an edge list, declaring endpoints in first-seen order.
    pub fn from_edges<S: AsRef<str>>(edges: &[(S, S)]) -> Result<Self> {
        let mut g = Self::new();
        for (u, v) in edges {
            let a = g.ensure_vertex(u.as_ref());
            let b = g.ensure_vertex(v.as_ref());
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<Vertex> {
        self.index.get(label).copied()
    }

    pub fn vertex(&self, label: &str) -> Result<Vertex> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn add_vertex(&mut self, label: &str) -> Result<Vertex> {
        if self.index.contains_key(label) {
            return Err(Error::DuplicateVertex(label.to_string()));
        }
        Ok(self.push_vertex(label.to_string()))
    }

    /// Returns the vertex with `label`, creating it if absent.
    pub fn ensure_vertex(&mut self, label: &str) -> Vertex {
        match self.index.get(label) {
            Some(&v) => v,
            None => self.push_vertex(label.to_string()),
        }
    }

    fn push_vertex(&mut self, label: String) -> Vertex {
        let v = self.labels.len();
        self.index.insert(label.clone(), v);
        self.labels.push(label);
        self.adj.push(BTreeSet::new());
        v
    }

    /// Adds the edge `{u, v}`; parallel edges are absorbed, loops rejected.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(self.labels[u].clone()));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn add_edge_by_label(&mut self, u: &str, v: &str) -> Result<()> {
        let (a, b) = (self.vertex(u)?, self.vertex(v)?);
        self.add_edge(a, b)
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        let had = self.adj[u].remove(&v);
        self.adj[v].remove(&u);
        had
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn neighbor_set(&self, v: Vertex) -> &BTreeSet<Vertex> {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic index order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.size());
        for u in self.vertices() {
            for &v in self.adj[u].range(u + 1..) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Subgraph induced by `keep`, in the given order. Returns the subgraph
    /// and, for each of its vertices, the originating vertex of `self`.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut pos = vec![usize::MAX; self.order()];
        let mut g = Graph::new();
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
            g.push_vertex(self.labels[v].clone());
        }
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                if pos[w] != usize::MAX && pos[w] > i {
                    g.adj[i].insert(pos[w]);
                    g.adj[pos[w]].insert(i);
                }
            }
        }
        (g, keep.to_vec())
    }

    /// Spanning subgraph on all vertices of `self` with only `edges`.
    pub fn edge_subgraph(&self, edges: &[(Vertex, Vertex)]) -> Graph {
        let mut g = Graph::with_vertices(self.labels.iter()).expect("labels are unique");
        for &(u, v) in edges {
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        g
    }

    /// Removes vertices, keeping the relative order of the survivors.
    pub fn without_vertices(&self, drop: &[Vertex]) -> Graph {
        let mut dead = vec![false; self.order()];
        for &v in drop {
            dead[v] = true;
        }
        let keep: Vec<Vertex> = self.vertices().filter(|&v| !dead[v]).collect();
        self.induced_subgraph(&keep).0
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.order()];
        let mut comps = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether the vertices outside `removed` induce a connected graph.
    pub fn is_connected_without(&self, removed: &[Vertex]) -> bool {
        let mut blocked = vec![false; self.order()];
        for &v in removed {
            blocked[v] = true;
        }
        let Some(start) = self.vertices().find(|&v| !blocked[v]) else {
            return true;
        };
        let mut seen = blocked;
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count + removed.iter().collect::<BTreeSet<_>>().len() == self.order()
    }

    /// Merges a set of vertices into one. The survivor keeps the smallest
    /// label of the set; loops vanish and parallels are simplified.
    pub fn merge_vertices(&self, set: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let keeper = *set
            .iter()
            .min_by(|&&a, &&b| self.labels[a].cmp(&self.labels[b]))
            .expect("non-empty merge set");
        let mut target_of = vec![usize::MAX; self.order()];
        let mut g = Graph::new();
        for v in self.vertices() {
            if set.contains(&v) && v != keeper {
                continue;
            }
            target_of[v] = g.push_vertex(self.labels[v].clone());
        }
        for &v in set {
            target_of[v] = target_of[keeper];
        }
        for (u, v) in self.edges() {
            let (a, b) = (target_of[u], target_of[v]);
            if a != b {
                g.adj[a].insert(b);
                g.adj[b].insert(a);
            }
        }
        (g, target_of)
    }

    /// Merges every class of vertices at once; `class[v]` is an arbitrary
    /// class id. Each class keeps its smallest label and the classes appear
    /// in order of their first member.
    pub fn quotient(&self, class: &[usize]) -> (Graph, Vec<Vertex>) {
        let mut keeper: HashMap<usize, Vertex> = HashMap::new();
        for v in self.vertices() {
            let k = keeper.entry(class[v]).or_insert(v);
            if self.labels[v] < self.labels[*k] {
                *k = v;
            }
        }
        let mut new_id: HashMap<usize, Vertex> = HashMap::new();
        let mut g = Graph::new();
        let mut target_of = vec![0; self.order()];
        for v in self.vertices() {
            let id = *new_id
                .entry(class[v])
                .or_insert_with(|| g.push_vertex(self.labels[keeper[&class[v]]].clone()));
            target_of[v] = id;
        }
        for (u, v) in self.edges() {
            let (a, b) = (target_of[u], target_of[v]);
            if a != b {
                g.adj[a].insert(b);
                g.adj[b].insert(a);
            }
        }
        (g, target_of)
    }

    pub fn delete_vertex(&self, label: &str) -> Result<Graph> {
        let v = self.vertex(label)?;
        Ok(self.without_vertices(&[v]))
    }

    pub fn delete_edge(&self, u: &str, v: &str) -> Result<Graph> {
        let (a, b) = self.edge(u, v)?;
        let mut g = self.clone();
        g.remove_edge(a, b);
        Ok(g)
    }

    /// Contracts `{u, v}`; the lexicographically smaller label survives.
    pub fn contract_edge(&self, u: &str, v: &str) -> Result<Graph> {
        let (a, b) = self.edge(u, v)?;
        Ok(self.merge_vertices(&[a, b]).0)
    }

    fn edge(&self, u: &str, v: &str) -> Result<(Vertex, Vertex)> {
        let unknown = || Error::UnknownEdge(u.to_string(), v.to_string());
        let a = self.index_of(u).ok_or_else(unknown)?;
        let b = self.index_of(v).ok_or_else(unknown)?;
        if !self.has_edge(a, b) {
            return Err(unknown());
        }
        Ok((a, b))
    }

    /// Replaces the degree-3 vertex `label` by a triangle on its neighbours.
    pub fn yd_transform(&self, label: &str) -> Result<Graph> {
        let v = self.vertex(label)?;
        if self.degree(v) != 3 {
            return Err(Error::DegreeMismatch {
                vertex: label.to_string(),
                expected: 3,
                found: self.degree(v),
            });
        }
        let nb: Vec<Vertex> = self.neighbors(v).collect();
        let mut g = self.clone();
        for i in 0..3 {
            for j in i + 1..3 {
                g.add_edge(nb[i], nb[j])?;
            }
        }
        Ok(g.without_vertices(&[v]))
    }

    /// Replaces the triangle `t` by a fresh vertex adjacent to its corners.
    /// The new vertex is labelled `new_label`.
    pub fn dy_transform(&self, t: [&str; 3], new_label: &str) -> Result<Graph> {
        let not_triangle = || Error::NotATriangle(t.map(str::to_string));
        let mut ids = [0; 3];
        for (slot, l) in ids.iter_mut().zip(t) {
            *slot = self.index_of(l).ok_or_else(not_triangle)?;
        }
        let distinct = ids[0] != ids[1] && ids[1] != ids[2] && ids[0] != ids[2];
        if !distinct
            || !self.has_edge(ids[0], ids[1])
            || !self.has_edge(ids[1], ids[2])
            || !self.has_edge(ids[0], ids[2])
        {
            return Err(not_triangle());
        }
        let mut g = self.clone();
        g.remove_edge(ids[0], ids[1]);
        g.remove_edge(ids[1], ids[2]);
        g.remove_edge(ids[0], ids[2]);
        let c = g.add_vertex(new_label)?;
        for &x in &ids {
            g.add_edge(c, x)?;
        }
        Ok(g)
    }

    /// Fresh label not yet used in the graph, derived from `base`.
    pub fn fresh_label(&self, base: &str) -> String {
        if !self.index.contains_key(base) {
            return base.to_string();
        }
        (1..)
            .map(|k| format!("{base}~{k}"))
            .find(|l| !self.index.contains_key(l))
            .expect("unbounded")
    }

    /// Parses the line-oriented text format:
    ///
    /// ```text
    /// # comment
    /// vertices: a b c
    /// a b
    /// b c
    /// ```
    pub fn parse(text: &str) -> Result<Graph> {
        Self::parse_lines(text.lines().enumerate().map(|(i, l)| (i + 1, l)))
    }

    pub(crate) fn parse_lines<'a>(lines: impl IntoIterator<Item = (usize, &'a str)>) -> Result<Graph> {
        let mut g: Option<Graph> = None;
        for (line_no, raw) in lines {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse { line: line_no, message };
            match g.as_mut() {
                None => {
                    let rest = line
                        .strip_prefix("vertices:")
                        .ok_or_else(|| err("expected `vertices:` header".into()))?;
                    let mut h = Graph::new();
                    for l in rest.split_whitespace() {
                        h.add_vertex(l).map_err(|e| err(e.to_string()))?;
                    }
                    g = Some(h);
                }
                Some(h) => {
                    let toks: Vec<&str> = line.split_whitespace().collect();
                    if toks.len() != 2 {
                        return Err(err(format!("expected `u v`, found `{line}`")));
                    }
                    let u = h.vertex(toks[0]).map_err(|e| err(e.to_string()))?;
                    let v = h.vertex(toks[1]).map_err(|e| err(e.to_string()))?;
                    h.add_edge(u, v).map_err(|e| err(e.to_string()))?;
                }
            }
        }
        g.ok_or(Error::Parse {
            line: 0,
            message: "missing `vertices:` header".into(),
        })
    }

    /// Serialises to the text format accepted by [`Graph::parse`].
    pub fn to_text(&self) -> String {
        let mut s = String::from("vertices:");
        for l in &self.labels {
            s.push(' ');
            s.push_str(l);
        }
        s.push('\n');
        for (u, v) in self.edges() {
            s.push_str(&self.labels[u]);
            s.push(' ');
            s.push_str(&self.labels[v]);
            s.push('\n');
        }
        s
    }
}

/// Small named graphs used throughout the crate and its tests.
pub mod named {
    use super::Graph;

    fn labels(prefix: &str, n: usize) -> Vec<String> {
        (0..n).map(|i| format!("{prefix}{i}")).collect()
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::with_vertices((0..n).map(|i| i.to_string())).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut ls = labels("a", a);
        ls.extend(labels("b", b));
        let mut g = Graph::with_vertices(ls).unwrap();
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// Complete multipartite graph; part `i` has vertices `p{i}_{j}`.
    pub fn complete_multipartite(parts: &[usize]) -> Graph {
        let mut ls = Vec::new();
        let mut part_of = Vec::new();
        for (i, &k) in parts.iter().enumerate() {
            for j in 0..k {
                ls.push(format!("p{i}_{j}"));
                part_of.push(i);
            }
        }
        let mut g = Graph::with_vertices(ls).unwrap();
        for u in 0..part_of.len() {
            for v in u + 1..part_of.len() {
                if part_of[u] != part_of[v] {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::with_vertices((0..n).map(|i| i.to_string())).unwrap();
        for i in 0..n {
            g.add_edge(i, (i + 1) % n).unwrap();
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::with_vertices((0..n).map(|i| i.to_string())).unwrap();
        for i in 1..n {
            g.add_edge(i - 1, i).unwrap();
        }
        g
    }

    /// The 3-cube with vertices `0..8`, adjacent when they differ in one bit.
    pub fn cube() -> Graph {
        let mut g = Graph::with_vertices((0..8).map(|i| i.to_string())).unwrap();
        for u in 0..8usize {
            for bit in 0..3 {
                let v = u ^ (1 << bit);
                if u < v {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
        let mut g = Graph::new();
        for l in a.labels() {
            g.add_vertex(&format!("L{l}")).unwrap();
        }
        for l in b.labels() {
            g.add_vertex(&format!("R{l}")).unwrap();
        }
        for (u, v) in a.edges() {
            g.add_edge(u, v).unwrap();
        }
        let off = a.order();
        for (u, v) in b.edges() {
            g.add_edge(u + off, v + off).unwrap();
        }
        g
    }
}
