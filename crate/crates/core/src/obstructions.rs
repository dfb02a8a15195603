//! Obstructions to planar emulability and the connectivity predicates that
//! go with them.
//!
//! A k-graph of `G` is a subgraph `J` that is a subdivision of K4 or K2,3,
//! whose complement `G - V(J)` is connected and adjacent to `J`, and such
//! that contracting the complement to a single vertex leaves a nonplanar
//! graph. Two vertex-disjoint k-graphs rule out a planar emulator.

use crate::emulator::{verify_emulator, Projection};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::planarity::{
    flat_with_boundary, is_planar, recognize_subdivision, test_planarity, KuratowskiWitness, Planarity, SubdivisionKind,
};

/// One side of a [`KGraphPair`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KGraph {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(Vertex, Vertex)>,
    pub kind: SubdivisionKind,
    /// `G` with everything outside `vertices` contracted to one vertex.
    pub contracted: Graph,
    /// Kuratowski subgraph of `contracted`.
    pub witness: KuratowskiWitness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KGraphPair {
    pub j1: KGraph,
    pub j2: KGraph,
}

impl KGraph {
    /// Re-checks every defining property against `g` from scratch.
    pub fn certify(&self, g: &Graph) -> bool {
        let mut inside = vec![false; g.order()];
        for &v in &self.vertices {
            if v >= g.order() {
                return false;
            }
            inside[v] = true;
        }
        let mut touched: Vec<Vertex> = self.edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        touched.sort_unstable();
        touched.dedup();
        let mut verts = self.vertices.clone();
        verts.sort_unstable();
        if touched != verts || recognize_subdivision(g, &self.edges) != Some(self.kind) {
            return false;
        }
        if !matches!(self.kind, SubdivisionKind::K4 | SubdivisionKind::K23) {
            return false;
        }
        let Some((contracted, _)) = contract_outside(g, &inside) else {
            return false;
        };
        matches!(test_planarity(&contracted), Planarity::NonPlanar(_))
    }
}

impl KGraphPair {
    pub fn certify(&self, g: &Graph) -> bool {
        let disjoint = self.j1.vertices.iter().all(|v| !self.j2.vertices.contains(v));
        disjoint && self.j1.certify(g) && self.j2.certify(g)
    }
}

/// Contracts the complement of `inside` to one vertex, provided it is
/// nonempty, connected and adjacent to `inside`.
fn contract_outside(g: &Graph, inside: &[bool]) -> Option<(Graph, Vec<Vertex>)> {
    let outside: Vec<Vertex> = g.vertices().filter(|&v| !inside[v]).collect();
    if outside.is_empty() {
        return None;
    }
    let inner: Vec<Vertex> = g.vertices().filter(|&v| inside[v]).collect();
    if !g.is_connected_without(&inner) {
        return None;
    }
    let adjacent = outside.iter().any(|&v| g.neighbors(v).any(|w| inside[w]));
    if !adjacent {
        return None;
    }
    let class: Vec<usize> = g.vertices().map(|v| if inside[v] { v } else { g.order() }).collect();
    Some(g.quotient(&class))
}

struct Budget {
    left: u64,
    total: u64,
}

impl Budget {
    fn tick(&mut self) -> Result<()> {
        if self.left == 0 {
            return Err(Error::BudgetExceeded(self.total));
        }
        self.left -= 1;
        Ok(())
    }
}

/// Searches for two disjoint k-graphs, visiting at most `budget` search
/// nodes. `Ok(None)` is returned only after exhausting the search.
pub fn find_two_disjoint_kgraphs(g: &Graph, budget: u64) -> Result<Option<KGraphPair>> {
    let n = g.order();
    if n > 40 {
        return Err(Error::InvalidInput(format!(
            "{n} vertices is beyond the supported scale"
        )));
    }
    let mut budget = Budget {
        left: budget,
        total: budget,
    };
    if n < 8 || is_planar(g) {
        return Ok(None);
    }
    // Vertex sets passing the cheap tests: complement connected, adjacent,
    // contraction nonplanar, enough edges inside for a K2,3 subdivision.
    let mut candidates: Vec<(u64, Graph)> = Vec::new();
    for mask in 0u64..(1 << n) {
        let k = mask.count_ones() as usize;
        if k < 4 || n - k < 4 {
            continue;
        }
        budget.tick()?;
        let inside: Vec<bool> = (0..n).map(|v| mask & (1 << v) != 0).collect();
        let inner: Vec<Vertex> = (0..n).filter(|&v| inside[v]).collect();
        let (sub, _) = g.induced_subgraph(&inner);
        if sub.size() < sub.order() + 1 || !sub.is_connected() {
            continue;
        }
        let Some((contracted, _)) = contract_outside(g, &inside) else {
            continue;
        };
        if !is_planar(&contracted) {
            candidates.push((mask, contracted));
        }
    }
    let mut cache: Vec<Option<Option<Spanning>>> = vec![None; candidates.len()];
    for i in 0..candidates.len() {
        for j in i + 1..candidates.len() {
            if candidates[i].0 & candidates[j].0 != 0 {
                continue;
            }
            for idx in [i, j] {
                if cache[idx].is_none() {
                    let inner: Vec<Vertex> = (0..n).filter(|&v| candidates[idx].0 & (1 << v) != 0).collect();
                    cache[idx] = Some(spanning_subdivision(g, &inner, &mut budget)?);
                }
            }
            let (Some(Some(a)), Some(Some(b))) = (&cache[i], &cache[j]) else {
                continue;
            };
            let side = |idx: usize, (kind, edges): &(SubdivisionKind, Vec<(Vertex, Vertex)>)| {
                let contracted = candidates[idx].1.clone();
                let Planarity::NonPlanar(witness) = test_planarity(&contracted) else {
                    unreachable!("candidate contraction is nonplanar")
                };
                KGraph {
                    vertices: (0..n).filter(|&v| candidates[idx].0 & (1 << v) != 0).collect(),
                    edges: edges.clone(),
                    kind: *kind,
                    contracted,
                    witness,
                }
            };
            let pair = KGraphPair {
                j1: side(i, a),
                j2: side(j, b),
            };
            if !pair.certify(g) {
                return Err(Error::InvariantBroken("k-graph pair failed re-certification".into()));
            }
            return Ok(Some(pair));
        }
    }
    Ok(None)
}

type Spanning = (SubdivisionKind, Vec<(Vertex, Vertex)>);

/// A subdivision of K4 or K2,3 in `g` using exactly the vertices `inner`.
fn spanning_subdivision(g: &Graph, inner: &[Vertex], budget: &mut Budget) -> Result<Option<Spanning>> {
    let (sub, orig) = g.induced_subgraph(inner);
    let n = sub.order();
    let cand: Vec<Vertex> = sub.vertices().filter(|&v| sub.degree(v) >= 3).collect();
    let patterns: [(SubdivisionKind, usize); 2] = [(SubdivisionKind::K4, 4), (SubdivisionKind::K23, 2)];
    for (kind, b) in patterns {
        for branch in combinations(&cand, b) {
            let links: Vec<(Vertex, Vertex)> = match kind {
                SubdivisionKind::K4 => {
                    let mut l = Vec::new();
                    for i in 0..4 {
                        for j in i + 1..4 {
                            l.push((branch[i], branch[j]));
                        }
                    }
                    l
                }
                _ => vec![(branch[0], branch[1]); 3],
            };
            let min_len = if kind == SubdivisionKind::K23 { 2 } else { 1 };
            let mut used = vec![false; n];
            for &v in &branch {
                used[v] = true;
            }
            let mut edges = Vec::new();
            if route(&sub, &links, 0, min_len, &mut used, &mut edges, budget)? {
                let edges = edges.into_iter().map(|(u, v)| (orig[u], orig[v])).collect();
                return Ok(Some((kind, edges)));
            }
        }
    }
    Ok(None)
}

fn combinations(items: &[Vertex], k: usize) -> Vec<Vec<Vertex>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, items[i]);
            out.push(rest);
        }
    }
    out
}

/// Routes internally disjoint paths for `links[i..]` so that, at the end,
/// every vertex of `g` is used.
fn route(
    g: &Graph,
    links: &[(Vertex, Vertex)],
    i: usize,
    min_len: usize,
    used: &mut Vec<bool>,
    edges: &mut Vec<(Vertex, Vertex)>,
    budget: &mut Budget,
) -> Result<bool> {
    if i == links.len() {
        return Ok(used.iter().all(|&u| u));
    }
    let (s, t) = links[i];
    let mut path = vec![s];
    extend_path(g, links, i, min_len, t, &mut path, used, edges, budget)
}

#[allow(clippy::too_many_arguments)]
fn extend_path(
    g: &Graph,
    links: &[(Vertex, Vertex)],
    i: usize,
    min_len: usize,
    t: Vertex,
    path: &mut Vec<Vertex>,
    used: &mut Vec<bool>,
    edges: &mut Vec<(Vertex, Vertex)>,
    budget: &mut Budget,
) -> Result<bool> {
    budget.tick()?;
    let cur = *path.last().expect("path starts at s");
    let nbrs: Vec<Vertex> = g.neighbors(cur).collect();
    for w in nbrs {
        if w == t && path.len() >= min_len {
            let mark = edges.len();
            path.push(t);
            for k in 0..path.len() - 1 {
                edges.push((path[k].min(path[k + 1]), path[k].max(path[k + 1])));
            }
            if route(g, links, i + 1, min_len, used, edges, budget)? {
                return Ok(true);
            }
            path.pop();
            edges.truncate(mark);
        } else if !used[w] {
            used[w] = true;
            path.push(w);
            if extend_path(g, links, i, min_len, t, path, used, edges, budget)? {
                return Ok(true);
            }
            path.pop();
            used[w] = false;
        }
    }
    Ok(false)
}

/// A vertex separation: `side_a ∪ side_b = V`, `side_a ∩ side_b = boundary`
/// and no edge joins `side_a - boundary` to `side_b - boundary`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    pub boundary: Vec<Vertex>,
    pub side_a: Vec<Vertex>,
    pub side_b: Vec<Vertex>,
}

impl Separation {
    pub fn describe(&self, g: &Graph) -> String {
        let names = |vs: &[Vertex]| vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(" ");
        format!(
            "boundary {{{}}} | side A {{{}}} | side B {{{}}}",
            names(&self.boundary),
            names(&self.side_a),
            names(&self.side_b)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct I4cVerdict {
    pub holds: bool,
    /// A separation violating the definition, when there is one to show.
    pub violation: Option<Separation>,
}

/// Every `k`-subset of `0..n`, in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<Vertex>> {
    combinations(&(0..n).collect::<Vec<_>>(), k)
}

/// Components of `g - removed` as vertex lists of `g`.
fn components_without(g: &Graph, removed: &[Vertex]) -> Vec<Vec<Vertex>> {
    let keep: Vec<Vertex> = g.vertices().filter(|v| !removed.contains(v)).collect();
    let (sub, orig) = g.induced_subgraph(&keep);
    sub.components()
        .into_iter()
        .map(|c| c.into_iter().map(|v| orig[v]).collect())
        .collect()
}

/// All ways to split the components between two nonempty sides.
fn separations(boundary: &[Vertex], comps: &[Vec<Vertex>]) -> Vec<Separation> {
    let m = comps.len();
    let mut out = Vec::new();
    if m < 2 {
        return out;
    }
    // The last component always sits on side B.
    for mask in 1u64..1 << (m - 1) {
        let mut a = boundary.to_vec();
        let mut b = boundary.to_vec();
        for (i, c) in comps.iter().enumerate() {
            if mask & (1 << i) != 0 { &mut a } else { &mut b }.extend(c);
        }
        a.sort_unstable();
        b.sort_unstable();
        out.push(Separation {
            boundary: boundary.to_vec(),
            side_a: a,
            side_b: b,
        });
    }
    out
}

/// Whether `side` is the boundary plus one vertex inducing K1,3.
fn is_claw_side(g: &Graph, sep: &Separation, side: &[Vertex]) -> bool {
    if side.len() != 4 {
        return false;
    }
    let t = &sep.boundary;
    let Some(&u) = side.iter().find(|v| !t.contains(v)) else {
        return false;
    };
    t.iter().all(|&x| g.has_edge(u, x)) && !g.has_edge(t[0], t[1]) && !g.has_edge(t[1], t[2]) && !g.has_edge(t[0], t[2])
}

/// 3-connected, and every 3-separation has a side inducing K1,3.
///
/// Graphs on at most four vertices count only when complete.
pub fn internal_4_connectivity(g: &Graph) -> I4cVerdict {
    let n = g.order();
    if n <= 4 {
        return I4cVerdict {
            holds: g.size() == n * (n.saturating_sub(1)) / 2,
            violation: None,
        };
    }
    for k in 0..3 {
        for cut in subsets(n, k) {
            let comps = components_without(g, &cut);
            if comps.len() > 1 {
                return I4cVerdict {
                    holds: false,
                    violation: separations(&cut, &comps).into_iter().next(),
                };
            }
        }
    }
    for t in subsets(n, 3) {
        let comps = components_without(g, &t);
        if comps.len() < 2 {
            continue;
        }
        for sep in separations(&t, &comps) {
            if !is_claw_side(g, &sep, &sep.side_a) && !is_claw_side(g, &sep, &sep.side_b) {
                return I4cVerdict {
                    holds: false,
                    violation: Some(sep),
                };
            }
        }
    }
    I4cVerdict {
        holds: true,
        violation: None,
    }
}

pub fn is_internally_4_connected(g: &Graph) -> bool {
    internal_4_connectivity(g).holds
}

/// A 3-separation neither of whose sides is flat.
pub fn find_nonflat_3_separation(g: &Graph) -> Option<Separation> {
    let n = g.order();
    for t in subsets(n, 3) {
        let comps = components_without(g, &t);
        if comps.len() < 2 {
            continue;
        }
        let boundary = [t[0], t[1], t[2]];
        for sep in separations(&t, &comps) {
            if !flat_with_boundary(g, boundary, &sep.side_a) && !flat_with_boundary(g, boundary, &sep.side_b) {
                return Some(sep);
            }
        }
    }
    None
}

/// Whether every fiber has at least two vertices. Only meaningful for a
/// valid planar emulator of a connected nonplanar target.
pub fn check_min_fiber(p: &Projection) -> Result<bool> {
    if !p.target().is_connected() {
        return Err(Error::PreconditionUnmet("target is disconnected".into()));
    }
    if is_planar(p.target()) {
        return Err(Error::PreconditionUnmet("target is planar".into()));
    }
    if !is_planar(p.host()) {
        return Err(Error::PreconditionUnmet("host is nonplanar".into()));
    }
    if !verify_emulator(p).valid {
        return Err(Error::PreconditionUnmet("not a valid emulator".into()));
    }
    Ok(p.min_fiber() >= 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    const BUDGET: u64 = 50_000_000;

    fn k7_minus_c4() -> Graph {
        let mut g = complete(7);
        for (a, b) in [(3, 4), (4, 5), (5, 6), (6, 3)] {
            g.remove_edge(a, b);
        }
        g
    }

    fn two_k4_and_spine() -> Graph {
        let mut g = disjoint_union(&complete(4), &complete(4));
        let s = g.add_vertex("spine").unwrap();
        for v in 0..8 {
            g.add_edge(s, v).unwrap();
        }
        g
    }

    #[test]
    fn spine_instance_has_a_pair() {
        let g = two_k4_and_spine();
        let pair = find_two_disjoint_kgraphs(&g, BUDGET).unwrap().unwrap();
        assert!(pair.certify(&g));
        assert_eq!(pair.j1.kind, SubdivisionKind::K4);
    }

    #[test]
    fn planar_and_small_graphs_have_none() {
        assert_eq!(find_two_disjoint_kgraphs(&cube(), BUDGET).unwrap(), None);
        assert_eq!(find_two_disjoint_kgraphs(&complete(5), BUDGET).unwrap(), None);
    }

    #[test]
    fn budget_is_distinct_from_none() {
        let g = two_k4_and_spine();
        assert_eq!(find_two_disjoint_kgraphs(&g, 10), Err(Error::BudgetExceeded(10)));
    }

    #[test]
    fn i4c_examples() {
        assert!(!is_internally_4_connected(&k7_minus_c4()));
        assert!(is_internally_4_connected(&complete_multipartite(&[1, 2, 2, 2])));
        assert!(is_internally_4_connected(&complete(5)));
        assert!(is_internally_4_connected(&complete(4)));
        assert!(!is_internally_4_connected(&cycle(4)));
        // Cube: removing a vertex's three neighbours isolates it, and the
        // neighbours are independent, so that side is a claw.
        assert!(is_internally_4_connected(&cube()));
        let v = internal_4_connectivity(&path(5));
        assert!(!v.holds && v.violation.is_some());
    }

    #[test]
    fn nonflat_separations() {
        let g = k7_minus_c4();
        let sep = find_nonflat_3_separation(&g).unwrap();
        assert_eq!(sep.boundary, vec![0, 1, 2]);
        assert_eq!(find_nonflat_3_separation(&cube()), None);
        assert_eq!(find_nonflat_3_separation(&complete(4)), None);
    }

    #[test]
    fn min_fiber_guards() {
        let p = Projection::identity(&complete(5)).unwrap();
        assert!(matches!(check_min_fiber(&p), Err(Error::PreconditionUnmet(_))));
        let p = Projection::identity(&complete(4)).unwrap();
        assert!(matches!(check_min_fiber(&p), Err(Error::PreconditionUnmet(_))));
    }
}
