//! The `K7 - C4` emulator: eight hexagonal cells on a subdivided octahedron.
//!
//! Octahedron corners are coloured `1 2 3` by axis, and every ridge is
//! subdivided by a vertex of the third colour, so each facet is bounded by a
//! hexagon reading `1 3 2 1 3 2`. A cell fills that hexagon with vertices of
//! one pair (`A B` or `C D`). The three subdivision vertices of the hexagon
//! get both letters of the pair, the three corners only one.

use std::collections::BTreeSet;

use super::polyhedra::octahedron;
use super::{certify, Construction};
use crate::catalog::graphs;
use crate::emulator::Projection;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::planarity::is_planar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellKind {
    AB,
    CD,
}

impl CellKind {
    pub fn letters(self) -> [&'static str; 2] {
        match self {
            CellKind::AB => ["A", "B"],
            CellKind::CD => ["C", "D"],
        }
    }
}

/// Labels around the boundary hexagon.
pub const HEXAGON: [&str; 6] = ["1", "3", "2", "1", "3", "2"];

/// A cell: the hexagon `h0..h5` followed by interior vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub kind: CellKind,
    pub graph: Graph,
    /// Target label of every vertex.
    pub labels: Vec<String>,
}

impl Cell {
    pub fn interior(&self) -> std::ops::Range<Vertex> {
        6..self.graph.order()
    }

    /// Letters of the pair adjacent to boundary position `i`.
    pub fn letters_at(&self, i: usize) -> BTreeSet<&str> {
        self.graph
            .neighbors(i)
            .filter(|&w| w >= 6)
            .map(|w| self.labels[w].as_str())
            .collect()
    }
}

/// Interior shape shared by both kinds: `first` vertices of the first
/// letter, then the rest; each with a mask of hexagon neighbours.
#[derive(Debug, Clone)]
struct Shape {
    first: usize,
    hex: Vec<u8>,
    edges: Vec<(usize, usize)>,
}

/// Hexagon masks whose positions carry all three labels.
fn full_masks() -> Vec<u8> {
    (0u8..64)
        .filter(|m| {
            let seen: BTreeSet<&str> = (0..6).filter(|i| m & (1 << i) != 0).map(|i| HEXAGON[i]).collect();
            seen.len() == 3
        })
        .collect()
}

struct ShapeSearch {
    masks: Vec<u8>,
    budget: u64,
    spent: u64,
}

impl ShapeSearch {
    fn run(&mut self, k: usize, first: usize, hex: &mut Vec<u8>) -> Result<Option<Shape>> {
        if hex.len() == k {
            return self.edges(first, hex);
        }
        let i = hex.len();
        // Same-letter vertices are interchangeable: keep their masks sorted.
        let floor = if i > 0 && i != first { hex[i - 1] } else { 0 };
        for m in self.masks.clone() {
            if m < floor {
                continue;
            }
            hex.push(m);
            let r = self.run(k, first, hex)?;
            hex.pop();
            if r.is_some() {
                return Ok(r);
            }
        }
        Ok(None)
    }

    fn edges(&mut self, first: usize, hex: &[u8]) -> Result<Option<Shape>> {
        let k = hex.len();
        let union = |range: std::ops::Range<usize>| range.fold(0u8, |acc, v| acc | hex[v]);
        let (a, b) = (union(0..first), union(first..k));
        // Subdivision positions see both letters, corners exactly one.
        for i in 0..6 {
            let (sa, sb) = (a & (1 << i) != 0, b & (1 << i) != 0);
            let ok = if i % 2 == 1 { sa && sb } else { sa != sb };
            if !ok {
                return Ok(None);
            }
        }
        let pairs: Vec<(usize, usize)> = (0..first).flat_map(|u| (first..k).map(move |v| (u, v))).collect();
        for mask in 1u64..1 << pairs.len() {
            let edges: Vec<(usize, usize)> = (0..pairs.len())
                .filter(|j| mask & (1 << j) != 0)
                .map(|j| pairs[j])
                .collect();
            if !(0..k).all(|v| edges.iter().any(|&(x, y)| x == v || y == v)) {
                continue;
            }
            self.spent += 1;
            if self.spent > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            let shape = Shape {
                first,
                hex: hex.to_vec(),
                edges,
            };
            // The hexagon must bound a face: add an apex outside it.
            let mut g = realise(&shape, CellKind::AB).graph;
            let apex = g.add_vertex("apex").expect("fresh label");
            for i in 0..6 {
                g.add_edge(apex, i).expect("distinct vertices");
            }
            if is_planar(&g) {
                return Ok(Some(shape));
            }
        }
        Ok(None)
    }
}

fn realise(shape: &Shape, kind: CellKind) -> Cell {
    let letters = kind.letters();
    let mut g = Graph::new();
    let mut labels = Vec::new();
    for (i, l) in HEXAGON.iter().enumerate() {
        g.add_vertex(&format!("h{i}")).expect("fresh label");
        labels.push(l.to_string());
    }
    for i in 0..6 {
        g.add_edge(i, (i + 1) % 6).expect("distinct vertices");
    }
    for (v, &m) in shape.hex.iter().enumerate() {
        let (letter, k) = if v < shape.first {
            (letters[0], v + 1)
        } else {
            (letters[1], v - shape.first + 1)
        };
        let x = g.add_vertex(&format!("{letter}{k}")).expect("fresh label");
        labels.push(letter.to_string());
        for i in 0..6 {
            if m & (1 << i) != 0 {
                g.add_edge(x, i).expect("distinct vertices");
            }
        }
    }
    for &(u, v) in &shape.edges {
        g.add_edge(6 + u, 6 + v).expect("distinct vertices");
    }
    Cell { kind, graph: g, labels }
}

/// Smallest cell found by growing the interior from two vertices up to six
/// (at most twelve vertices in all). `budget` bounds the planarity tests.
pub fn search_k7c4_cell(kind: CellKind, budget: u64) -> Result<Cell> {
    let mut search = ShapeSearch {
        masks: full_masks(),
        budget,
        spent: 0,
    };
    for k in 2..=6 {
        for first in 1..k {
            if let Some(shape) = search.run(k, first, &mut Vec::new())? {
                return Ok(realise(&shape, kind));
            }
        }
    }
    Err(Error::SearchFailed("no cell with at most twelve vertices".into()))
}

/// Default planarity-test budget for the cell search.
pub const CELL_BUDGET: u64 = 1_000_000;

/// Hexagon symmetries fixing the corner/subdivision split: position `p` of
/// the cell goes to position `(s * p + r) mod 6`.
const DIHEDRAL: [(usize, usize); 6] = [(1, 0), (1, 2), (1, 4), (5, 0), (5, 2), (5, 4)];

/// Places 4 `AB` and 4 `CD` cells on the octahedron, alternating, so that
/// every corner collects each letter from exactly one cell.
pub fn build_k7c4_emulator() -> Result<Construction> {
    let cells = [
        search_k7c4_cell(CellKind::AB, CELL_BUDGET)?,
        search_k7c4_cell(CellKind::CD, CELL_BUDGET)?,
    ];
    let poly = octahedron()?;
    let og = &poly.graph;
    // Axis of corner `+x` etc.; colour labels "1" "2" "3".
    let axis = |v: Vertex| v / 2;
    let kind_of = |f: &[Vertex]| usize::from(f.iter().filter(|&&v| v % 2 == 1).count() % 2 == 1);

    let mut host = Graph::new();
    let mut image: Vec<String> = Vec::new();
    for v in og.vertices() {
        host.add_vertex(&format!("{}@{}", axis(v) + 1, og.label(v)))?;
        image.push((axis(v) + 1).to_string());
    }
    let mut middle = std::collections::BTreeMap::new();
    for (u, v) in og.edges() {
        let third = 3 - axis(u) - axis(v);
        let m = host.add_vertex(&format!("{}@{}{}", third + 1, og.label(u), og.label(v)))?;
        image.push((third + 1).to_string());
        host.add_edge(m, u)?;
        host.add_edge(m, v)?;
        middle.insert((u, v), m);
        middle.insert((v, u), m);
    }
    let hexagons: Vec<[Vertex; 6]> = poly
        .facets
        .iter()
        .map(|f| {
            [
                f[0],
                middle[&(f[0], f[1])],
                f[1],
                middle[&(f[1], f[2])],
                f[2],
                middle[&(f[2], f[0])],
            ]
        })
        .collect();

    // Options per facet: a hexagon symmetry and whether to swap the letters.
    // The target is symmetric in `1 2 3`, so any symmetry keeping corners on
    // corners relabels the cell boundary consistently.
    let options: Vec<(usize, bool)> = (0..6).flat_map(|d| [(d, false), (d, true)]).collect();
    let place = |hex: &[Vertex; 6], (d, _): (usize, bool), p: usize| {
        let (s, r) = DIHEDRAL[d];
        hex[(s * p + r) % 6]
    };
    // Letter (0 or 1 within the pair) each host corner gets from a facet.
    let corner_letters = |f: usize, opt: (usize, bool)| -> Vec<(Vertex, usize)> {
        let cell = &cells[kind_of(&poly.facets[f])];
        let mut out = Vec::new();
        for p in [0, 2, 4] {
            let v = place(&hexagons[f], opt, p);
            for w in cell.graph.neighbors(p).filter(|&w| w >= 6) {
                let first = cell.labels[w] == cell.kind.letters()[0];
                out.push((v, usize::from(first == opt.1)));
            }
        }
        out
    };
    let n = poly.facets.len();
    // Per facet: placement index and whether the letters are swapped.
    type Choice = Option<(usize, bool)>;
    let mut chosen: Vec<Choice> = vec![None; n];
    fn fill(f: usize, chosen: &mut [Choice], options: &[(usize, bool)], seen: &dyn Fn(&[Choice]) -> bool) -> bool {
        if f == chosen.len() {
            return true;
        }
        for &o in options {
            chosen[f] = Some(o);
            if seen(chosen) && fill(f + 1, chosen, options, seen) {
                return true;
            }
        }
        chosen[f] = None;
        false
    }
    // A corner may not get the same letter of a pair from two facets.
    let seen = |chosen: &[Choice]| -> bool {
        let mut got = BTreeSet::new();
        for (f, o) in chosen.iter().enumerate() {
            let Some(o) = *o else { continue };
            let k = kind_of(&poly.facets[f]);
            let mut mine = BTreeSet::new();
            for (v, l) in corner_letters(f, o) {
                mine.insert((v, k, l));
            }
            for key in mine {
                if !got.insert(key) {
                    return false;
                }
            }
        }
        true
    };
    if !fill(0, &mut chosen, &options, &seen) {
        return Err(Error::AssemblyFailed("no cell placement fits the octahedron".into()));
    }

    for (f, o) in chosen.iter().enumerate() {
        let o = o.expect("filled");
        let cell = &cells[kind_of(&poly.facets[f])];
        let letters = cell.kind.letters();
        let mut local: Vec<Vertex> = (0..6).map(|p| place(&hexagons[f], o, p)).collect();
        for w in cell.interior() {
            let mut l = cell.labels[w].clone();
            if o.1 {
                l = if l == letters[0] { letters[1] } else { letters[0] }.to_string();
            }
            local.push(host.add_vertex(&format!("f{f}/{}", cell.graph.label(w)))?);
            image.push(l);
        }
        for (u, v) in cell.graph.edges() {
            if u >= 6 || v >= 6 {
                host.add_edge(local[u], local[v])?;
            }
        }
    }
    let pairs: Vec<(String, String)> = host.labels().iter().cloned().zip(image).collect();
    let p = Projection::from_labels(host, graphs::k7_minus_c4(), &pairs)?;
    certify(p, "K7-C4 emulator").map_err(|e| Error::AssemblyFailed(e.to_string()))
}
