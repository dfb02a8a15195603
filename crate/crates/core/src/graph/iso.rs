//! Isomorphism by colour refinement followed by backtracking.
//!
//! Adequate at catalogue scale (a few dozen vertices); no canonical form is
//! computed.

use std::collections::HashMap;

use super::{Graph, Vertex};

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    isomorphism(a, b).is_some()
}

/// An edge-preserving bijection `V(a) -> V(b)`, if one exists.
pub fn isomorphism(a: &Graph, b: &Graph) -> Option<Vec<Vertex>> {
    if a.order() != b.order() || a.size() != b.size() {
        return None;
    }
    if a.degree_sequence() != b.degree_sequence() {
        return None;
    }
    let (ca, cb) = refine(a, b);
    let mut hist_a = HashMap::new();
    let mut hist_b = HashMap::new();
    for &c in &ca {
        *hist_a.entry(c).or_insert(0usize) += 1;
    }
    for &c in &cb {
        *hist_b.entry(c).or_insert(0usize) += 1;
    }
    if hist_a != hist_b {
        return None;
    }

    let order = search_order(a, &ca, &hist_a);
    let mut map = vec![usize::MAX; a.order()];
    let mut used = vec![false; b.order()];
    if extend(a, b, &ca, &cb, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// Joint 1-WL refinement so colour ids are comparable across both graphs.
fn refine(a: &Graph, b: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut ca: Vec<usize> = a.vertices().map(|v| a.degree(v)).collect();
    let mut cb: Vec<usize> = b.vertices().map(|v| b.degree(v)).collect();
    let mut classes = distinct(&ca, &cb);
    loop {
        let mut ids: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut sig = |g: &Graph, c: &[usize]| -> Vec<usize> {
            g.vertices()
                .map(|v| {
                    let mut nb: Vec<usize> = g.neighbors(v).map(|w| c[w]).collect();
                    nb.sort_unstable();
                    let next = ids.len();
                    *ids.entry((c[v], nb)).or_insert(next)
                })
                .collect()
        };
        let na = sig(a, &ca);
        let nb = sig(b, &cb);
        let k = distinct(&na, &nb);
        ca = na;
        cb = nb;
        if k == classes {
            return (ca, cb);
        }
        classes = k;
    }
}

fn distinct(a: &[usize], b: &[usize]) -> usize {
    let mut all: Vec<usize> = a.iter().chain(b).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

/// Smallest colour class first, then grow along edges so that each new
/// vertex is constrained by already-mapped neighbours.
fn search_order(a: &Graph, ca: &[usize], hist: &HashMap<usize, usize>) -> Vec<Vertex> {
    let n = a.order();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), hist[&ca[v]], v))
            .expect("vertex left");
        placed[v] = true;
        order.push(v);
        for w in a.neighbors(v) {
            links[w] += 1;
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &Graph,
    b: &Graph,
    ca: &[usize],
    cb: &[usize],
    order: &[Vertex],
    depth: usize,
    map: &mut [Vertex],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in b.vertices() {
        if used[w] || cb[w] != ca[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| a.has_edge(u, v) == b.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(a, b, ca, cb, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    map[v] = usize::MAX;
    false
}
