//! Polyhedral skeletons used as drawing templates.

use crate::error::{Error, Result};
use crate::graph::{named, Graph, Vertex};
use crate::planarity::{test_planarity, Embedding};

#[derive(Debug, Clone)]
pub struct PolyhedronTemplate {
    pub name: &'static str,
    pub graph: Graph,
    pub embedding: Embedding,
    /// Facet boundaries as vertex cycles in face-walk order.
    pub facets: Vec<Vec<Vertex>>,
}

impl PolyhedronTemplate {
    /// Embeds `graph`; the skeleton of a convex polyhedron is 3-connected,
    /// so its facets are exactly the faces of any planar embedding.
    fn from_graph(name: &'static str, graph: Graph) -> Result<Self> {
        let embedding = test_planarity(&graph)
            .embedding()
            .ok_or_else(|| Error::InvariantBroken(format!("{name} skeleton is nonplanar")))?;
        if !embedding.euler_check() {
            return Err(Error::InvariantBroken(format!("{name} fails Euler's formula")));
        }
        let facets = embedding.faces()?.iter().map(|f| f.vertices()).collect();
        Ok(PolyhedronTemplate {
            name,
            graph,
            embedding,
            facets,
        })
    }

    pub fn facets_of_len(&self, k: usize) -> Vec<&Vec<Vertex>> {
        self.facets.iter().filter(|f| f.len() == k).collect()
    }
}

pub fn cube() -> Result<PolyhedronTemplate> {
    PolyhedronTemplate::from_graph("cube", named::cube())
}

const AXES: [char; 3] = ['x', 'y', 'z'];

/// Corners `+x -x +y -y +z -z`; opposite corners are not adjacent.
pub fn octahedron() -> Result<PolyhedronTemplate> {
    let labels: Vec<String> = AXES.iter().flat_map(|a| [format!("+{a}"), format!("-{a}")]).collect();
    let mut g = Graph::with_vertices(&labels)?;
    for u in 0..6 {
        for v in u + 1..6 {
            if u / 2 != v / 2 {
                g.add_edge(u, v)?;
            }
        }
    }
    PolyhedronTemplate::from_graph("octahedron", g)
}

/// Corners are the twelve points with two coordinates `±1` and one `0`,
/// labelled by their nonzero coordinates (`+x-y`); adjacent at distance √2.
pub fn cuboctahedron() -> Result<PolyhedronTemplate> {
    let mut points: Vec<[i32; 3]> = Vec::new();
    for zero in 0..3 {
        for s in [1, -1] {
            for t in [1, -1] {
                let mut p = [0; 3];
                let others: Vec<usize> = (0..3).filter(|&i| i != zero).collect();
                p[others[0]] = s;
                p[others[1]] = t;
                points.push(p);
            }
        }
    }
    let label = |p: &[i32; 3]| -> String {
        (0..3)
            .filter(|&i| p[i] != 0)
            .map(|i| format!("{}{}", if p[i] > 0 { '+' } else { '-' }, AXES[i]))
            .collect()
    };
    let mut g = Graph::with_vertices(points.iter().map(label))?;
    for u in 0..12 {
        for v in u + 1..12 {
            let d: i32 = (0..3).map(|i| (points[u][i] - points[v][i]).pow(2)).sum();
            if d == 2 {
                g.add_edge(u, v)?;
            }
        }
    }
    PolyhedronTemplate::from_graph("cuboctahedron", g)
}

/// Each cube corner `c` (three bits) is cut into a triangle of vertices
/// `c.d`, one per direction `d`; `c.d` is joined along the cube ridge to
/// `(c ^ 2^d).d`.
pub fn truncated_cube() -> Result<PolyhedronTemplate> {
    let mut g = Graph::new();
    for c in 0..8 {
        for d in 0..3 {
            g.add_vertex(&format!("{c}.{d}"))?;
        }
    }
    for c in 0..8usize {
        for d in 0..3usize {
            for e in d + 1..3 {
                g.add_edge(3 * c + d, 3 * c + e)?;
            }
            let o = c ^ (1 << d);
            if c < o {
                g.add_edge(3 * c + d, 3 * o + d)?;
            }
        }
    }
    PolyhedronTemplate::from_graph("truncated-cube", g)
}

pub fn by_name(name: &str) -> Result<PolyhedronTemplate> {
    match name {
        "cube" => cube(),
        "octahedron" => octahedron(),
        "cuboctahedron" => cuboctahedron(),
        "truncated-cube" => truncated_cube(),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}
