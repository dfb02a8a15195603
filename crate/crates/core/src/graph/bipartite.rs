use std::collections::VecDeque;

use super::{Graph, Vertex};

/// Outcome of a BFS 2-colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// Side (0 or 1) of every vertex.
    Coloring(Vec<u8>),
    /// Vertices of an odd cycle, in cyclic order.
    OddCycle(Vec<Vertex>),
}

pub fn is_bipartite(g: &Graph) -> bool {
    matches!(bipartition(g), Bipartition::Coloring(_))
}

pub fn bipartition(g: &Graph) -> Bipartition {
    let n = g.order();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for s in g.vertices() {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return Bipartition::OddCycle(odd_cycle(u, w, &parent, &depth));
                }
            }
        }
    }
    Bipartition::Coloring(color)
}

fn odd_cycle(mut a: Vertex, mut b: Vertex, parent: &[Vertex], depth: &[usize]) -> Vec<Vertex> {
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn examples() {
        assert!(is_bipartite(&complete_bipartite(3, 5)));
        assert!(is_bipartite(&cube()));
        assert!(!is_bipartite(&complete(3)));
    }

    #[test]
    fn odd_cycle_witness_is_a_cycle() {
        for g in [complete(3), cycle(7), complete(5)] {
            let Bipartition::OddCycle(c) = bipartition(&g) else {
                panic!("expected odd cycle");
            };
            assert_eq!(c.len() % 2, 1);
            for i in 0..c.len() {
                assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
            }
        }
    }
}
