//! Bringing every host vertex over a set of degree-3 target vertices down to
//! degree 3 while keeping the host planar.
//!
//! Around an over-degree host vertex `x` the images of its neighbours, read
//! in rotation order, form a cyclic word over the three target neighbours.
//! Either the word contains `aa` (merge the two `a` neighbours), or `aba`
//! (split `x` in two along the rotation), or it is `(abc)^k` (split `x` into
//! `k` vertices, one per arc).

use super::{verify_emulator, Projection};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::planarity::{test_planarity, Embedding, Planarity};

#[derive(Debug, Clone)]
pub struct Normalization {
    pub projection: Projection,
    pub embedding: Embedding,
    /// Maximal host degree over the processed set, one entry per round,
    /// ending at a value of at most 3.
    pub dg_trace: Vec<usize>,
}

/// `x` holds target vertices; it must be independent and of target degree 3.
pub fn normalize_fiber_degrees(p: &Projection, emb: &Embedding, x: &[Vertex]) -> Result<Normalization> {
    let g = p.target();
    for (i, &a) in x.iter().enumerate() {
        if a >= g.order() {
            return Err(Error::InvalidInput(format!("target vertex {a} does not exist")));
        }
        if g.degree(a) != 3 {
            return Err(Error::DegreeMismatch {
                vertex: g.label(a).to_string(),
                expected: 3,
                found: g.degree(a),
            });
        }
        for &b in &x[i + 1..] {
            if g.has_edge(a, b) {
                return Err(Error::NotIndependent(g.label(a).to_string(), g.label(b).to_string()));
            }
        }
    }
    if emb.graph() != p.host() {
        return Err(Error::InvalidInput("embedding is not of the host graph".into()));
    }
    if !emb.euler_check() {
        return Err(Error::PreconditionUnmet("host embedding is not planar".into()));
    }
    if !verify_emulator(p).valid {
        return Err(Error::PreconditionUnmet("input is not a valid emulator".into()));
    }

    let mut in_x = vec![false; g.order()];
    for &a in x {
        in_x[a] = true;
    }
    let mut host = p.host().clone();
    let mut map = p.map().to_vec();
    let mut emb = emb.clone();
    let mut dg_trace = Vec::new();
    loop {
        let dg = host
            .vertices()
            .filter(|&h| in_x[map[h]])
            .map(|h| host.degree(h))
            .max()
            .unwrap_or(0);
        dg_trace.push(dg);
        if dg <= 3 {
            break;
        }
        let mut todo: Vec<String> = host
            .vertices()
            .filter(|&h| in_x[map[h]] && host.degree(h) == dg)
            .map(|h| host.label(h).to_string())
            .collect();
        todo.sort();
        for label in todo {
            let v = host.vertex(&label)?;
            let word: Vec<Vertex> = emb.rotation(v).iter().map(|&w| map[w]).collect();
            (host, map) = rewrite(&host, &map, v, emb.rotation(v), &word);
            emb = match test_planarity(&host) {
                Planarity::Planar(e) => e,
                Planarity::NonPlanar(_) => {
                    return Err(Error::InvariantBroken(format!(
                        "normalising {label} made the host nonplanar"
                    )))
                }
            };
        }
    }
    let projection = Projection::unchecked_target(host, g.clone(), map)?;
    let projection = super::ensure_emulator(projection, "fiber degree normalisation")?;
    Ok(Normalization {
        projection,
        embedding: emb,
        dg_trace,
    })
}

/// One rewriting step at `v`, whose neighbours in rotation order are `rot`
/// with images `word`.
fn rewrite(host: &Graph, map: &[Vertex], v: Vertex, rot: &[Vertex], word: &[Vertex]) -> (Graph, Vec<Vertex>) {
    let d = word.len();
    let at = |i: usize| word[i % d];

    // aa: merge two consecutive neighbours with the same image.
    if let Some(i) = (0..d).find(|&i| at(i) == at(i + 1)) {
        let (merged, target_of) = host.merge_vertices(&[rot[i], rot[(i + 1) % d]]);
        let mut new_map = vec![0; merged.order()];
        for h in host.vertices() {
            new_map[target_of[h]] = map[h];
        }
        return (merged, new_map);
    }

    // aba: split along the rotation so that both halves see all three images.
    if let Some(i) = (0..d).find(|&i| at(i) == at(i + 2)) {
        let third = *word
            .iter()
            .find(|&&l| l != at(i) && l != at(i + 1))
            .expect("a valid emulator sees all three neighbours");
        let c = (i + 3..i + d).find(|&j| at(j) == third).expect("third letter present");
        let first: Vec<Vertex> = (i + 1..=c).map(|j| rot[j % d]).collect();
        let second: Vec<Vertex> = (c..=i + 1 + d).map(|j| rot[j % d]).collect();
        return split(host, map, v, &[first, second]);
    }

    // (abc)^k: one vertex per consecutive arc.
    let arcs: Vec<Vec<Vertex>> = (0..d / 3).map(|k| rot[3 * k..3 * k + 3].to_vec()).collect();
    split(host, map, v, &arcs)
}

/// Replaces `v` by one vertex per neighbour group; the first keeps the label.
fn split(host: &Graph, map: &[Vertex], v: Vertex, groups: &[Vec<Vertex>]) -> (Graph, Vec<Vertex>) {
    let mut g = host.clone();
    let mut new_map = map.to_vec();
    let nb: Vec<Vertex> = g.neighbors(v).collect();
    for w in nb {
        g.remove_edge(v, w);
    }
    for (k, group) in groups.iter().enumerate() {
        let x = if k == 0 {
            v
        } else {
            let label = g.fresh_label(host.label(v));
            new_map.push(map[v]);
            g.add_vertex(&label).expect("fresh label")
        };
        for &w in group {
            g.add_edge(x, w).expect("distinct vertices");
        }
    }
    (g, new_map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::emulator::{verify_cover, verify_emulator};
    use crate::planarity::is_planar;

    fn k13() -> Graph {
        Graph::from_edges(&[("v", "a"), ("v", "b"), ("v", "c")]).unwrap()
    }

    fn project(host: Graph, f: impl Fn(&str) -> &'static str) -> Projection {
        let pairs: Vec<(String, String)> = host.labels().iter().map(|l| (l.clone(), f(l).to_string())).collect();
        Projection::from_labels(host, k13(), &pairs).unwrap()
    }

    fn first_letter(l: &str) -> &'static str {
        match &l[..1] {
            "v" | "x" => "v",
            "a" => "a",
            "b" => "b",
            _ => "c",
        }
    }

    fn run(p: &Projection) -> Normalization {
        let emb = test_planarity(p.host()).embedding().unwrap();
        let v = p.target().vertex("v").unwrap();
        normalize_fiber_degrees(p, &emb, &[v]).unwrap()
    }

    fn rewrite_star(order: &[&str]) -> (Graph, Vec<Vertex>, Projection) {
        let edges: Vec<(&str, &str)> = order.iter().map(|&l| ("x", l)).collect();
        let p = project(Graph::from_edges(&edges).unwrap(), first_letter);
        let h = p.host();
        let x = h.vertex("x").unwrap();
        let rot: Vec<Vertex> = order.iter().map(|l| h.vertex(l).unwrap()).collect();
        let word: Vec<Vertex> = rot.iter().map(|&w| p.image(w)).collect();
        let (g, map) = rewrite(h, p.map(), x, &rot, &word);
        (g, map, p)
    }

    #[test]
    fn merge_case() {
        let (g, map, p) = rewrite_star(&["a1", "a2", "b", "c"]);
        assert_eq!(g.order(), 4);
        assert_eq!(g.degree(g.vertex("x").unwrap()), 3);
        assert!(g.index_of("a1").is_some() && g.index_of("a2").is_none());
        let q = Projection::new(g, p.target().clone(), map).unwrap();
        assert!(verify_emulator(&q).valid);
    }

    #[test]
    fn aba_case_splits_along_rotation() {
        let (g, map, p) = rewrite_star(&["a1", "b", "a2", "c"]);
        let x = g.vertex("x").unwrap();
        let x1 = g.vertex("x~1").unwrap();
        let names = |v: Vertex| {
            let mut n: Vec<&str> = g.neighbors(v).map(|w| g.label(w)).collect();
            n.sort();
            n
        };
        assert_eq!(names(x), vec!["a2", "b", "c"]);
        assert_eq!(names(x1), vec!["a1", "b", "c"]);
        let q = Projection::new(g, p.target().clone(), map).unwrap();
        assert!(verify_emulator(&q).valid);
    }

    #[test]
    fn normalisation_decreases_degree() {
        let host = Graph::from_edges(&[("x", "a1"), ("x", "a2"), ("x", "b"), ("x", "c")]).unwrap();
        let n = run(&project(host, first_letter));
        assert!(verify_emulator(&n.projection).valid);
        assert_eq!(n.dg_trace, vec![4, 3]);
    }

    #[test]
    fn already_normal_is_fixpoint() {
        let host = Graph::from_edges(&[("x", "a"), ("x", "b"), ("x", "c")]).unwrap();
        let p = project(host, first_letter);
        let n = run(&p);
        assert_eq!(n.projection, p);
        assert_eq!(n.dg_trace, vec![3]);
    }

    #[test]
    fn abc_twice_splits_into_two() {
        // x adjacent to a1 b1 c1 a2 b2 c2; planar as a star.
        let host = Graph::from_edges(&[
            ("x", "a1"),
            ("x", "b1"),
            ("x", "c1"),
            ("x", "a2"),
            ("x", "b2"),
            ("x", "c2"),
        ])
        .unwrap();
        let n = run(&project(host, first_letter));
        let p = &n.projection;
        assert!(verify_emulator(p).valid);
        assert!(is_planar(p.host()));
        let v = p.target().vertex("v").unwrap();
        let fiber = p.fiber(v);
        assert!(fiber.len() >= 2);
        assert!(fiber.iter().all(|&h| p.host().degree(h) == 3));
        // Degree 3 over three distinct images: the split host is a cover.
        assert!(verify_cover(p).valid);
    }

    #[test]
    fn rejects_bad_sets() {
        let host = Graph::from_edges(&[("x", "a"), ("x", "b"), ("x", "c")]).unwrap();
        let p = project(host, first_letter);
        let emb = test_planarity(p.host()).embedding().unwrap();
        let a = p.target().vertex("a").unwrap();
        assert!(matches!(
            normalize_fiber_degrees(&p, &emb, &[a]),
            Err(Error::DegreeMismatch { .. })
        ));
    }
}
