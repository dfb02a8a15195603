//! The `C4` emulator: a rolling-cube gadget in every triangle of a
//! cuboctahedron.
//!
//! The gadget is the imprint left on the plane when a cube with labelled
//! corners rolls seven times east, seven times south and seven times west,
//! returning to the square it started on. Imprinted squares become 4-cycles
//! of the gadget, lattice points become its vertices, and the first and last
//! squares are glued by their labels.

use std::collections::{BTreeMap, BTreeSet};

use super::polyhedra::cuboctahedron;
use super::{certify, Construction};
use crate::catalog::graphs;
use crate::emulator::Projection;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Roll {
    East,
    West,
    South,
    North,
}

impl Roll {
    fn step(self) -> (i32, i32) {
        match self {
            Roll::East => (1, 0),
            Roll::West => (-1, 0),
            Roll::South => (0, -1),
            Roll::North => (0, 1),
        }
    }
}

/// Position of every labelled cube corner as `(x, y, z)` in `{0,1}^3`, with
/// `z = 0` the facet on the ground.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CubeState {
    pos: [[u8; 3]; 8],
}

impl CubeState {
    /// Lying on `0 1 2 3` with `0` at the north-west, `1` north-east, `2`
    /// south-west and `3` south-east.
    pub fn start() -> Self {
        let mut pos = [[0; 3]; 8];
        for (l, p) in pos.iter_mut().enumerate() {
            let l = l as u8;
            *p = [l & 1, 1 - ((l >> 1) & 1), (l >> 2) & 1];
        }
        CubeState { pos }
    }

    pub fn position(&self, label: u8) -> [u8; 3] {
        self.pos[label as usize]
    }

    /// Tips the cube over the ground ridge on the side of `r`.
    pub fn roll(&self, r: Roll) -> Self {
        let mut pos = self.pos;
        for p in &mut pos {
            let [x, y, z] = *p;
            *p = match r {
                Roll::East => [z, y, 1 - x],
                Roll::West => [1 - z, y, x],
                Roll::South => [x, 1 - z, y],
                Roll::North => [x, z, 1 - y],
            };
        }
        CubeState { pos }
    }

    /// Labels on the ground with their offsets inside the square.
    pub fn bottom(&self) -> Vec<(u8, (i32, i32))> {
        (0..8u8)
            .filter(|&l| self.pos[l as usize][2] == 0)
            .map(|l| {
                let [x, y, _] = self.pos[l as usize];
                (l, (i32::from(x), i32::from(y)))
            })
            .collect()
    }

    pub fn bottom_labels(&self) -> BTreeSet<u8> {
        self.bottom().into_iter().map(|(l, _)| l).collect()
    }

    /// Cube-adjacent labels (one bit apart) sit at corners one unit apart.
    pub fn is_rotation(&self) -> bool {
        let distinct: BTreeSet<[u8; 3]> = self.pos.iter().copied().collect();
        distinct.len() == 8
            && (0..8usize).all(|a| {
                (0..3).all(|bit| {
                    let b = a ^ (1 << bit);
                    (0..3).filter(|&i| self.pos[a][i] != self.pos[b][i]).count() == 1
                })
            })
    }
}

/// The three sides of the gadget in rolling order.
pub const SIDES: [&str; 3] = ["north", "south-east", "south-west"];
/// Corners: the start, the first turn and the second turn.
pub const CORNERS: [&str; 3] = ["north-west", "north-east", "south"];
const ROLLS: [Roll; 3] = [Roll::East, Roll::South, Roll::West];

#[derive(Debug, Clone)]
pub struct Gadget {
    /// Vertices `l@x,y` for a cube label `l` imprinted at lattice point
    /// `(x, y)`, plus `x'`.
    pub graph: Graph,
    /// Cube label of every vertex; `8` stands for `x`.
    pub labels: Vec<u8>,
    pub outside: Vec<bool>,
    /// Outer boundary of each side, from its first corner to its last.
    pub rails: [Vec<Vertex>; 3],
    pub corners: [Vertex; 3],
    pub x_prime: Vertex,
    /// Ground facets seen along each side, eight squares per side.
    pub facets: [Vec<BTreeSet<u8>>; 3],
}

impl Gadget {
    fn label_set(&self, vs: impl IntoIterator<Item = Vertex>) -> BTreeSet<u8> {
        vs.into_iter().map(|v| self.labels[v]).collect()
    }

    /// Required cube neighbours of `v` (one bit away) it does not see.
    pub fn missing(&self, v: Vertex) -> BTreeSet<u8> {
        let l = self.labels[v];
        let have = self.label_set(self.graph.neighbors(v));
        (0..3).map(|b| l ^ (1 << b)).filter(|w| !have.contains(w)).collect()
    }

    /// The cube labels of `{3, 5, 6}` on the interior of a side's rail.
    pub fn side_marks(&self, side: usize) -> BTreeSet<u8> {
        let rail = &self.rails[side];
        self.label_set(rail[1..rail.len() - 1].iter().copied())
            .into_iter()
            .filter(|l| [3, 5, 6].contains(l))
            .collect()
    }

    /// Rail vertices of all sides, without repeating the corners.
    fn rail_vertices(&self) -> Vec<Vertex> {
        let mut seen = BTreeSet::new();
        self.rails
            .iter()
            .flatten()
            .copied()
            .filter(|&v| seen.insert(v))
            .collect()
    }
}

/// One of the listed properties of the gadget. `literal` is the statement
/// as written; `operational` is the weaker form the assembly relies on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bullet {
    pub statement: &'static str,
    pub literal: bool,
    pub operational: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetReport {
    pub bullets: Vec<Bullet>,
    /// Along every side each of the four facets around the roll axis is on
    /// the ground exactly twice.
    pub facets_twice: bool,
}

impl GadgetReport {
    pub fn all_literal(&self) -> bool {
        self.bullets.iter().all(|b| b.literal)
    }

    pub fn all_operational(&self) -> bool {
        self.bullets.iter().all(|b| b.operational)
    }
}

fn mismatch(msg: impl Into<String>) -> Error {
    Error::TraceMismatch(msg.into())
}

/// Rolls the cube and builds the gadget, then checks its properties.
/// Fails when any property needed by the assembly does not hold.
pub fn rolling_cube_gadget() -> Result<(Gadget, GadgetReport)> {
    // Imprint the trace.
    let mut cube = CubeState::start();
    let mut cell = (0i32, 0i32);
    let mut squares: Vec<((i32, i32), CubeState)> = vec![(cell, cube)];
    let mut label_at: BTreeMap<(i32, i32), u8> = BTreeMap::new();
    let mut outside_order: [Vec<(i32, i32)>; 3] = Default::default();
    let mut facets: [Vec<BTreeSet<u8>>; 3] = Default::default();
    let imprint = |label_at: &mut BTreeMap<(i32, i32), u8>, cell: (i32, i32), cube: &CubeState| -> Result<()> {
        for (l, (dx, dy)) in cube.bottom() {
            let p = (cell.0 + dx, cell.1 + dy);
            if let Some(&old) = label_at.get(&p) {
                if old != l {
                    return Err(mismatch(format!("point {p:?} imprinted with {old} and {l}")));
                }
            }
            label_at.insert(p, l);
        }
        Ok(())
    };
    imprint(&mut label_at, cell, &cube)?;
    let last = 3 * 7;
    for (side, &roll) in ROLLS.iter().enumerate() {
        facets[side].push(cube.bottom_labels());
        for _ in 0..7 {
            let before = cell;
            let (dx, dy) = roll.step();
            cube = cube.roll(roll);
            if !cube.is_rotation() {
                return Err(mismatch("rolling broke the cube"));
            }
            cell = (cell.0 + dx, cell.1 + dy);
            facets[side].push(cube.bottom_labels());
            squares.push((cell, cube));
            // The final square is glued to the first, not imprinted.
            if squares.len() <= last {
                imprint(&mut label_at, cell, &cube)?;
            }
            for c in [before, cell] {
                outside_order[side].extend(left_side(roll, c));
            }
        }
    }

    // Glue the final square onto the first by labels.
    let (first_cell, first) = squares[0];
    let (final_cell, fin) = squares[last];
    let mut glue: BTreeMap<(i32, i32), (i32, i32)> = BTreeMap::new();
    let first_at: BTreeMap<u8, (i32, i32)> = first
        .bottom()
        .into_iter()
        .map(|(l, (dx, dy))| (l, (first_cell.0 + dx, first_cell.1 + dy)))
        .collect();
    for (l, (dx, dy)) in fin.bottom() {
        let p = (final_cell.0 + dx, final_cell.1 + dy);
        let q = *first_at
            .get(&l)
            .ok_or_else(|| mismatch(format!("final square shows {l}, absent from the start")))?;
        if let Some(&old) = label_at.get(&p) {
            if old != l {
                return Err(mismatch(format!("glued point {p:?} carries {old}, expected {l}")));
            }
        }
        glue.insert(p, q);
    }
    let canon = |p: (i32, i32)| *glue.get(&p).unwrap_or(&p);

    // Vertices and edges of the imprinted squares.
    let mut graph = Graph::new();
    let mut labels = Vec::new();
    let mut index: BTreeMap<(i32, i32), Vertex> = BTreeMap::new();
    for (&p, &l) in &label_at {
        if canon(p) == p {
            index.insert(p, graph.add_vertex(&format!("{l}@{},{}", p.0, p.1))?);
            labels.push(l);
        }
    }
    for &(c, _) in &squares[..last] {
        let ring = [(c.0, c.1), (c.0 + 1, c.1), (c.0 + 1, c.1 + 1), (c.0, c.1 + 1)];
        for i in 0..4 {
            let (u, v) = (index[&canon(ring[i])], index[&canon(ring[(i + 1) % 4])]);
            if !graph.has_edge(u, v) {
                graph.add_edge(u, v)?;
            }
        }
    }

    // Rails in rolling order.
    let mut rails: [Vec<Vertex>; 3] = Default::default();
    for side in 0..3 {
        for &p in &outside_order[side] {
            let v = index[&canon(p)];
            if rails[side].last() != Some(&v) && !rails[side].contains(&v) {
                rails[side].push(v);
            }
        }
    }
    let corners = [rails[0][0], rails[1][0], rails[2][0]];
    for side in 0..3 {
        let end = *rails[side].last().expect("nonempty rail");
        if end != corners[(side + 1) % 3] {
            return Err(mismatch(format!("the {} side does not end at a corner", SIDES[side])));
        }
    }
    let mut outside = vec![false; graph.order()];
    for &v in rails.iter().flatten() {
        outside[v] = true;
    }
    let x_prime = graph.add_vertex("x'")?;
    labels.push(8);
    outside.push(false);
    let inside: Vec<Vertex> = (0..x_prime).filter(|&v| !outside[v]).collect();
    for &v in &inside {
        if (1..=6).contains(&labels[v]) {
            graph.add_edge(x_prime, v)?;
        }
    }

    let gadget = Gadget {
        graph,
        labels,
        outside,
        rails,
        corners,
        x_prime,
        facets,
    };
    let report = check_bullets(&gadget);
    if !report.all_operational() || !report.facets_twice {
        let bad: Vec<&str> = report
            .bullets
            .iter()
            .filter(|b| !b.operational)
            .map(|b| b.statement)
            .collect();
        return Err(mismatch(format!("gadget properties fail: {bad:?}")));
    }
    Ok((gadget, report))
}

/// Lattice points on the left of a cube rolling in direction `r` while on
/// square `c`: those face the outside of the clockwise loop.
fn left_side(r: Roll, c: (i32, i32)) -> [(i32, i32); 2] {
    let (x, y) = c;
    match r {
        Roll::East => [(x, y + 1), (x + 1, y + 1)],
        Roll::South => [(x + 1, y + 1), (x + 1, y)],
        Roll::West => [(x + 1, y), (x, y)],
        Roll::North => [(x, y), (x, y + 1)],
    }
}

fn check_bullets(g: &Gadget) -> GadgetReport {
    let rail_nodes = g.x_prime;
    let of_label = |l: u8| -> Vec<Vertex> { (0..rail_nodes).filter(|&v| g.labels[v] == l).collect() };
    let mut bullets = Vec::new();

    // 0 only outside; each 0 misses exactly one required neighbour.
    let zeros = of_label(0);
    let zeros_outside = zeros.iter().all(|&v| g.outside[v]);
    let misses: Vec<usize> = zeros.iter().map(|&v| g.missing(v).len()).collect();
    let corner_misses: Vec<BTreeSet<u8>> = g.corners.iter().map(|&c| g.missing(c)).collect();
    let corners_ok =
        corner_misses.iter().all(|m| m.len() == 1) && corner_misses.iter().collect::<BTreeSet<_>>().len() == 3;
    let mid_ok = zeros
        .iter()
        .filter(|v| !g.corners.contains(v))
        .all(|&v| g.missing(v).is_empty());
    bullets.push(Bullet {
        statement: "0 appears only outside and misses exactly one neighbour",
        literal: zeros_outside && misses.iter().all(|&m| m == 1),
        operational: zeros_outside && corners_ok && mid_ok,
        detail: format!(
            "{} zeros, misses per zero {:?}; corners miss {:?}, other zeros miss nothing: {}",
            zeros.len(),
            misses,
            corner_misses,
            mid_ok
        ),
    });

    // 1..6: degree three and all cube neighbours.
    let mids: Vec<Vertex> = (0..rail_nodes).filter(|&v| (1..=6).contains(&g.labels[v])).collect();
    let rail_degree = |v: Vertex| g.graph.neighbors(v).filter(|&w| w != g.x_prime).count();
    let heavy: Vec<String> = mids
        .iter()
        .filter(|&&v| rail_degree(v) != 3)
        .map(|&v| format!("{}(deg {})", g.graph.label(v), rail_degree(v)))
        .collect();
    let complete = mids.iter().all(|&v| g.missing(v).is_empty());
    bullets.push(Bullet {
        statement: "nodes 1-6 have degree three and every cube neighbour",
        literal: heavy.is_empty() && complete,
        operational: complete,
        detail: format!("all neighbours present: {complete}; degree other than three: {heavy:?}"),
    });

    // 7 only inside, with every neighbour.
    let sevens = of_label(7);
    let ok7 = sevens.iter().all(|&v| !g.outside[v] && g.missing(v).is_empty());
    bullets.push(Bullet {
        statement: "7 appears only inside and has every cube neighbour",
        literal: ok7,
        operational: ok7,
        detail: format!("{} sevens", sevens.len()),
    });

    // An x joined to the inside (or the outside) sees all of 1..6.
    let want: BTreeSet<u8> = (1..=6).collect();
    let inside_labels = g.label_set(g.graph.neighbors(g.x_prime));
    let outside_labels: BTreeSet<u8> = g
        .label_set(g.rail_vertices())
        .into_iter()
        .filter(|l| want.contains(l))
        .collect();
    let ok_x = inside_labels == want && outside_labels == want;
    bullets.push(Bullet {
        statement: "x joined to the inside or to the outside sees 1-6",
        literal: ok_x,
        operational: ok_x,
        detail: format!("inside {inside_labels:?}, outside {outside_labels:?}"),
    });

    // 5, 3, 6 each on one side only: north, south-east, south-west.
    let marks: Vec<BTreeSet<u8>> = (0..3).map(|s| g.side_marks(s)).collect();
    let ok_sides = marks == vec![BTreeSet::from([5]), BTreeSet::from([3]), BTreeSet::from([6])];
    bullets.push(Bullet {
        statement: "outside, 5 only on the north, 6 only south-west, 3 only south-east",
        literal: ok_sides,
        operational: ok_sides,
        detail: format!("marks per side {marks:?}"),
    });

    let facets_twice = g.facets.iter().all(|fs| {
        let mut count: BTreeMap<&BTreeSet<u8>, usize> = BTreeMap::new();
        for f in fs {
            *count.entry(f).or_default() += 1;
        }
        count.len() == 4 && count.values().all(|&c| c == 2)
    });
    GadgetReport { bullets, facets_twice }
}

/// Gadget corner `i` goes to position `perm[i]` of the triangle.
const PLACEMENTS: [[usize; 3]; 6] = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [0, 2, 1], [2, 1, 0], [1, 0, 2]];

/// Places a gadget in every triangle of the cuboctahedron so that the two
/// gadget corners at each polyhedron corner are of different kinds and each
/// square sees all three side kinds; adds one `x` per square.
pub fn build_c4_emulator() -> Result<(Construction, GadgetReport)> {
    let (gadget, report) = rolling_cube_gadget()?;
    let poly = cuboctahedron()?;
    let tri: Vec<Vec<Vertex>> = poly.facets_of_len(3).into_iter().cloned().collect();
    let sq: Vec<Vec<Vertex>> = poly.facets_of_len(4).into_iter().cloned().collect();
    let key = |a: Vertex, b: Vertex| (a.min(b), a.max(b));

    // Ridge -> (triangle, triangle side index 0..3 as (pos i, pos i+1)).
    let mut ridge_tri: BTreeMap<(Vertex, Vertex), (usize, usize)> = BTreeMap::new();
    for (t, f) in tri.iter().enumerate() {
        for i in 0..3 {
            ridge_tri.insert(key(f[i], f[(i + 1) % 3]), (t, i));
        }
    }
    // Gadget side joining gadget corners s and s+1 under a placement lies on
    // the triangle side between positions perm[s] and perm[s+1].
    let side_on = |perm: &[usize; 3], tri_side: usize| -> usize {
        let want = BTreeSet::from([tri_side, (tri_side + 1) % 3]);
        (0..3)
            .find(|&s| BTreeSet::from([perm[s], perm[(s + 1) % 3]]) == want)
            .expect("a bijection covers every side")
    };

    let mut choice = vec![0usize; tri.len()];
    let ok = assemble(0, &mut choice, &tri, &sq, &ridge_tri, &side_on);
    if !ok {
        return Err(Error::AssemblyFailed(
            "no gadget placement fits the cuboctahedron".into(),
        ));
    }

    let g = &gadget.graph;
    let mut host = Graph::new();
    let mut image: Vec<String> = Vec::new();
    for v in poly.graph.vertices() {
        host.add_vertex(&format!("0@{}", poly.graph.label(v)))?;
        image.push("0".into());
    }
    // Host vertex of gadget vertex v in triangle t.
    let mut at: Vec<Vec<Vertex>> = Vec::new();
    for (t, f) in tri.iter().enumerate() {
        let perm = PLACEMENTS[choice[t]];
        let mut local = vec![0; g.order()];
        for v in g.vertices() {
            local[v] = match gadget.corners.iter().position(|&c| c == v) {
                Some(i) => f[perm[i]],
                None => {
                    let l = gadget.labels[v];
                    image.push(if l == 8 { "x".into() } else { l.to_string() });
                    host.add_vertex(&format!("t{t}/{}", g.label(v)))?
                }
            };
        }
        for (u, v) in g.edges() {
            host.add_edge(local[u], local[v])?;
        }
        at.push(local);
    }
    for (s, f) in sq.iter().enumerate() {
        let x = host.add_vertex(&format!("x@s{s}"))?;
        image.push("x".into());
        for i in 0..4 {
            let (t, tri_side) = ridge_tri[&key(f[i], f[(i + 1) % 4])];
            let side = side_on(&PLACEMENTS[choice[t]], tri_side);
            let rail = &gadget.rails[side];
            for &v in &rail[1..rail.len() - 1] {
                if (1..=6).contains(&gadget.labels[v]) {
                    host.add_edge(x, at[t][v])?;
                }
            }
        }
    }
    let pairs: Vec<(String, String)> = host.labels().iter().cloned().zip(image).collect();
    let p = Projection::from_labels(host, graphs::c4(), &pairs)?;
    let c = certify(p, "C4 emulator").map_err(|e| Error::AssemblyFailed(e.to_string()))?;
    Ok((c, report))
}

fn assemble(
    t: usize,
    choice: &mut [usize],
    tri: &[Vec<Vertex>],
    sq: &[Vec<Vertex>],
    ridge_tri: &BTreeMap<(Vertex, Vertex), (usize, usize)>,
    side_on: &dyn Fn(&[usize; 3], usize) -> usize,
) -> bool {
    if t == tri.len() {
        return true;
    }
    for c in 0..PLACEMENTS.len() {
        choice[t] = c;
        if consistent(t, choice, tri, sq, ridge_tri, side_on) && assemble(t + 1, choice, tri, sq, ridge_tri, side_on) {
            return true;
        }
    }
    false
}

/// Checks the constraints involving only triangles `0..=t`.
fn consistent(
    t: usize,
    choice: &[usize],
    tri: &[Vec<Vertex>],
    sq: &[Vec<Vertex>],
    ridge_tri: &BTreeMap<(Vertex, Vertex), (usize, usize)>,
    side_on: &dyn Fn(&[usize; 3], usize) -> usize,
) -> bool {
    // Corner kind placed at polyhedron vertex v by triangle u.
    let kind_at = |u: usize, v: Vertex| -> Option<usize> {
        let pos = tri[u].iter().position(|&w| w == v)?;
        PLACEMENTS[choice[u]].iter().position(|&p| p == pos)
    };
    for &v in &tri[t] {
        let mine = kind_at(t, v);
        if (0..t).any(|u| kind_at(u, v).is_some() && kind_at(u, v) == mine) {
            return false;
        }
    }
    let key = |a: Vertex, b: Vertex| (a.min(b), a.max(b));
    sq.iter().all(|f| {
        let sides: Vec<Option<usize>> = (0..4)
            .map(|i| {
                let (u, s) = ridge_tri[&key(f[i], f[(i + 1) % 4])];
                (u <= t).then(|| side_on(&PLACEMENTS[choice[u]], s))
            })
            .collect();
        let placed: BTreeSet<usize> = sides.iter().flatten().copied().collect();
        let open = sides.iter().filter(|s| s.is_none()).count();
        placed.len() + open >= 3
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::emulator::verify_emulator;

    #[test]
    fn four_rolls_return_to_start() {
        for r in [Roll::East, Roll::West, Roll::South, Roll::North] {
            let mut c = CubeState::start();
            for _ in 0..4 {
                c = c.roll(r);
                assert!(c.is_rotation());
            }
            assert_eq!(c, CubeState::start());
        }
        assert_eq!(
            CubeState::start().roll(Roll::East).bottom_labels(),
            BTreeSet::from([1, 3, 5, 7])
        );
    }

    #[test]
    fn gadget_shape() {
        let (g, report) = rolling_cube_gadget().unwrap();
        assert_eq!(g.graph.order(), 43);
        assert_eq!(g.outside.iter().filter(|&&o| o).count(), 24);
        assert!(report.facets_twice);
        assert!(report.all_operational());
        let corner_labels: Vec<u8> = g.corners.iter().map(|&c| g.labels[c]).collect();
        assert_eq!(corner_labels, vec![0, 0, 0]);
    }

    #[test]
    fn c4_emulator_verifies() {
        let (c, _) = build_c4_emulator().unwrap();
        assert!(verify_emulator(&c.projection).valid);
        assert_eq!(c.projection.target().order(), 9);
        assert_eq!(c.projection.host().order(), 338);
    }
}
