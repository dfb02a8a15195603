//! Minor containment by branch-and-bound over branch-set assignments.
//!
//! Every vertex of the host is either left out or placed into the branch set
//! of one pattern vertex. A partial assignment is abandoned as soon as some
//! branch set can no longer be connected through undecided vertices, or some
//! pattern edge can no longer be realised.

use std::collections::VecDeque;

use super::{Graph, Vertex};
use crate::error::{Error, Result};
use crate::planarity;

/// Branch sets of a minor model, indexed by pattern vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorModel {
    pub branch_sets: Vec<Vec<Vertex>>,
}

impl MinorModel {
    /// Checks the model against `g` and `h` from scratch.
    pub fn certifies(&self, g: &Graph, h: &Graph) -> bool {
        if self.branch_sets.len() != h.order() {
            return false;
        }
        let mut owner = vec![usize::MAX; g.order()];
        for (b, set) in self.branch_sets.iter().enumerate() {
            if set.is_empty() {
                return false;
            }
            for &v in set {
                if v >= g.order() || owner[v] != usize::MAX {
                    return false;
                }
                owner[v] = b;
            }
            let (sub, _) = g.induced_subgraph(set);
            if !sub.is_connected() {
                return false;
            }
        }
        h.edges().into_iter().all(|(a, b)| {
            g.edges()
                .into_iter()
                .any(|(x, y)| (owner[x] == a && owner[y] == b) || (owner[x] == b && owner[y] == a))
        })
    }
}

const UNDECIDED: usize = usize::MAX;
const UNUSED: usize = usize::MAX - 1;

/// Searches for `h` as a minor of `g`, visiting at most `budget` search nodes.
///
/// `Ok(None)` means the search space was exhausted; running out of budget is
/// reported as [`Error::BudgetExceeded`].
pub fn has_minor(g: &Graph, h: &Graph, budget: u64) -> Result<Option<MinorModel>> {
    if h.order() == 0 {
        return Ok(Some(MinorModel { branch_sets: vec![] }));
    }
    if h.order() > g.order() || h.size() > g.size() {
        return Ok(None);
    }
    // Minors of planar graphs are planar.
    if !planarity::is_planar(h) && planarity::is_planar(g) {
        return Ok(None);
    }
    let mut search = Search {
        g,
        h,
        h_edges: h.edges(),
        order: bfs_order(g),
        assign: vec![UNDECIDED; g.order()],
        filled: vec![0; h.order()],
        nodes: 0,
        budget,
    };
    if search.run(0)? {
        let mut branch_sets = vec![Vec::new(); h.order()];
        for v in g.vertices() {
            if search.assign[v] < h.order() {
                branch_sets[search.assign[v]].push(v);
            }
        }
        Ok(Some(MinorModel { branch_sets }))
    } else {
        Ok(None)
    }
}

fn bfs_order(g: &Graph) -> Vec<Vertex> {
    let mut seen = vec![false; g.order()];
    let mut order = Vec::with_capacity(g.order());
    let mut starts: Vec<Vertex> = g.vertices().collect();
    starts.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            let mut nb: Vec<Vertex> = g.neighbors(u).filter(|&w| !seen[w]).collect();
            nb.sort_by_key(|&w| (std::cmp::Reverse(g.degree(w)), w));
            for w in nb {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    h_edges: Vec<(Vertex, Vertex)>,
    order: Vec<Vertex>,
    assign: Vec<usize>,
    filled: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        if !self.feasible(depth) {
            return Ok(false);
        }
        if depth == self.order.len() {
            // Feasibility with nothing undecided is exactly validity.
            return Ok(true);
        }
        let v = self.order[depth];
        for choice in self.choices(v) {
            self.assign[v] = choice;
            if choice < self.h.order() {
                self.filled[choice] += 1;
            }
            if self.run(depth + 1)? {
                return Ok(true);
            }
            if choice < self.h.order() {
                self.filled[choice] -= 1;
            }
        }
        self.assign[v] = UNDECIDED;
        Ok(false)
    }

    fn choices(&self, v: Vertex) -> Vec<usize> {
        let k = self.h.order();
        let mut touching = vec![false; k];
        for w in self.g.neighbors(v) {
            if self.assign[w] < k {
                touching[self.assign[w]] = true;
            }
        }
        let mut out: Vec<usize> = (0..k).filter(|&b| touching[b]).collect();
        out.extend((0..k).filter(|&b| self.filled[b] == 0));
        out.extend((0..k).filter(|&b| !touching[b] && self.filled[b] > 0));
        out.push(UNUSED);
        out
    }

    fn feasible(&self, depth: usize) -> bool {
        let remaining = self.order.len() - depth;
        let empty = self.filled.iter().filter(|&&c| c == 0).count();
        if empty > remaining {
            return false;
        }
        let open = |v: Vertex, b: usize| self.assign[v] == b || self.assign[v] == UNDECIDED;
        // Every branch set must still be connectable.
        for b in 0..self.h.order() {
            if self.filled[b] < 2 {
                continue;
            }
            let start = self.g.vertices().find(|&v| self.assign[v] == b).expect("filled branch");
            let mut seen = vec![false; self.g.order()];
            seen[start] = true;
            let mut stack = vec![start];
            let mut reached = 1;
            while let Some(u) = stack.pop() {
                for w in self.g.neighbors(u) {
                    if !seen[w] && open(w, b) {
                        seen[w] = true;
                        if self.assign[w] == b {
                            reached += 1;
                        }
                        stack.push(w);
                    }
                }
            }
            if reached < self.filled[b] {
                return false;
            }
        }
        // Every pattern edge must still be realisable.
        self.h_edges.iter().all(|&(a, b)| {
            self.g
                .vertices()
                .any(|x| open(x, a) && self.g.neighbors(x).any(|y| open(y, b)))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    const BUDGET: u64 = 5_000_000;

    #[test]
    fn k5_contains_k4() {
        let m = has_minor(&complete(5), &complete(4), BUDGET).unwrap().unwrap();
        assert!(m.certifies(&complete(5), &complete(4)));
    }

    #[test]
    fn planar_graph_has_no_k5_minor() {
        assert_eq!(has_minor(&cube(), &complete(5), BUDGET).unwrap(), None);
        assert_eq!(has_minor(&cube(), &complete_bipartite(3, 3), BUDGET).unwrap(), None);
    }

    #[test]
    fn petersen_like_positive_instance() {
        // K3,3 is a minor of the 3-prism plus one crossing chord (Wagner's V8).
        let mut v8 = cycle(8);
        for i in 0..4 {
            v8.add_edge(i, i + 4).unwrap();
        }
        let h = complete_bipartite(3, 3);
        let m = has_minor(&v8, &h, BUDGET).unwrap().unwrap();
        assert!(m.certifies(&v8, &h));
    }

    #[test]
    fn cycle_minors() {
        assert!(has_minor(&cycle(7), &complete(3), BUDGET).unwrap().is_some());
        assert!(has_minor(&path(7), &complete(3), BUDGET).unwrap().is_none());
    }

    #[test]
    fn budget_is_reported() {
        let r = has_minor(&cycle(9), &complete(4), 3);
        assert_eq!(r, Err(Error::BudgetExceeded(3)));
    }
}
