//! Two-fold covers from signed embeddings.
//!
//! A rotation system with edge signs describes an embedding in the
//! projective plane when the signs come from a crosscap. Doubling every
//! vertex and letting negative edges cross between the layers gives a cover;
//! whether it is planar is checked, not assumed.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::Projection;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::planarity::{parse_rotation_lines, test_planarity, Embedding};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedEmbedding {
    pub embedding: Embedding,
    /// Negative edges as `(u, v)` with `u < v`; all others are positive.
    pub negative: BTreeSet<(Vertex, Vertex)>,
}

impl SignedEmbedding {
    pub fn new(embedding: Embedding, negative: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let g = embedding.graph();
        let mut set = BTreeSet::new();
        for (u, v) in negative {
            if u >= g.order() || v >= g.order() || !g.has_edge(u, v) {
                return Err(Error::InvalidInput(format!("negative edge ({u}, {v}) is not an edge")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(SignedEmbedding {
            embedding,
            negative: set,
        })
    }

    pub fn is_negative(&self, u: Vertex, v: Vertex) -> bool {
        self.negative.contains(&(u.min(v), u.max(v)))
    }

    /// Rotation format where a neighbour written `-w` marks a negative edge.
    pub fn from_text(text: &str) -> Result<Self> {
        let lines = parse_rotation_lines(text)?;
        let mut plain = String::new();
        let mut marked: Vec<(usize, String, String, bool)> = Vec::new();
        for (line, v, nbrs) in &lines {
            let _ = write!(plain, "{v}:");
            for w in nbrs {
                let (neg, name) = match w.strip_prefix('-') {
                    Some(rest) => (true, rest),
                    None => (false, w.as_str()),
                };
                let _ = write!(plain, " {name}");
                marked.push((*line, v.clone(), name.to_string(), neg));
            }
            plain.push('\n');
        }
        let embedding = Embedding::from_text(&plain)?;
        let g = embedding.graph();
        let mut negative = BTreeSet::new();
        let mut positive = BTreeSet::new();
        for (line, v, w, neg) in marked {
            let (a, b) = (g.vertex(&v)?, g.vertex(&w)?);
            let e = (a.min(b), a.max(b));
            let (mine, other) = if neg {
                (&mut negative, &positive)
            } else {
                (&mut positive, &negative)
            };
            if other.contains(&e) {
                return Err(Error::Parse {
                    line,
                    message: format!("edge {v}-{w} has conflicting signs"),
                });
            }
            mine.insert(e);
        }
        Self::new(embedding, negative)
    }

    pub fn to_text(&self) -> String {
        let g = self.embedding.graph();
        let mut s = String::new();
        for v in g.vertices() {
            let _ = write!(s, "{}:", g.label(v));
            for &w in self.embedding.rotation(v) {
                let sign = if self.is_negative(v, w) { "-" } else { "" };
                let _ = write!(s, " {sign}{}", g.label(w));
            }
            s.push('\n');
        }
        s
    }
}

#[derive(Debug, Clone)]
pub struct DoubleCover {
    pub projection: Projection,
    /// A planar embedding of the cover host, when there is one.
    pub embedding: Option<Embedding>,
}

impl DoubleCover {
    pub fn is_planar(&self) -> bool {
        self.embedding.is_some()
    }
}

/// Host on `v_0, v_1` for every target vertex `v`.
pub fn double_cover(se: &SignedEmbedding) -> DoubleCover {
    signed_double(se.embedding.graph(), |u, v| se.is_negative(u, v))
}

fn signed_double(g: &Graph, negative: impl Fn(Vertex, Vertex) -> bool) -> DoubleCover {
    let n = g.order();
    let mut host = Graph::new();
    for layer in 0..2 {
        for v in g.vertices() {
            host.add_vertex(&format!("{}_{layer}", g.label(v)))
                .expect("distinct labels");
        }
    }
    for (u, v) in g.edges() {
        let cross = usize::from(negative(u, v));
        for i in 0..2 {
            host.add_edge(i * n + u, ((i + cross) % 2) * n + v).expect("no loops");
        }
    }
    let map = (0..2 * n).map(|i| i % n).collect();
    let projection = Projection::unchecked_target(host, g.clone(), map).expect("total map");
    let embedding = test_planarity(projection.host()).embedding();
    DoubleCover { projection, embedding }
}

/// First sign assignment, in binary counting order over the edge list, whose
/// double cover is planar. Returns the negative edges and the cover.
pub fn search_planar_double_cover(g: &Graph) -> Option<(Vec<(Vertex, Vertex)>, DoubleCover)> {
    let edges = g.edges();
    if edges.len() >= 64 {
        return None;
    }
    (0u64..1 << edges.len()).find_map(|signs| {
        let negative: BTreeSet<(Vertex, Vertex)> = edges
            .iter()
            .enumerate()
            .filter(|(i, _)| signs & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        let cover = signed_double(g, |u, v| negative.contains(&(u.min(v), u.max(v))));
        cover.is_planar().then(|| (negative.into_iter().collect(), cover))
    })
}
