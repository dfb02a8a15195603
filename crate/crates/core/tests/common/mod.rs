//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library except to convert graphs; `perturb` is the exception.

#![allow(dead_code)]

pub mod perturb;

use std::collections::{HashMap, HashSet};

use emulkit::Graph;

/// Labelled graph on `0..n` as an upper-triangle edge bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Small {
    pub n: usize,
    pub mask: u64,
}

pub fn bit(n: usize, u: usize, v: usize) -> u64 {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    // Row-major upper triangle index; n <= 11 keeps this within 64 bits.
    let idx = a * n - a * (a + 1) / 2 + (b - a - 1);
    1u64 << idx
}

impl Small {
    pub fn has(&self, u: usize, v: usize) -> bool {
        u != v && self.mask & bit(self.n, u, v) != 0
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut mask = 0;
        for &(u, v) in edges {
            mask |= bit(n, u, v);
        }
        Small { n, mask }
    }

    pub fn to_graph(self) -> Graph {
        let mut g = Graph::with_vertices((0..self.n).map(|i| i.to_string())).unwrap();
        for (u, v) in self.edges() {
            g.add_edge(u, v).unwrap();
        }
        g
    }

    pub fn from_graph(g: &Graph) -> Self {
        Small::from_edges(g.order(), &g.edges())
    }

    fn permuted(&self, p: &[usize]) -> u64 {
        let mut m = 0;
        for (u, v) in self.edges() {
            m |= bit(self.n, p[u], p[v]);
        }
        m
    }

    /// Smallest mask over all relabellings.
    pub fn canonical(&self) -> u64 {
        let mut best = u64::MAX;
        for p in permutations(self.n) {
            best = best.min(self.permuted(&p));
        }
        best
    }
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices, for `n <= 7`.
pub fn all_graphs(n: usize) -> Vec<Small> {
    if n == 0 {
        return vec![Small { n: 0, mask: 0 }];
    }
    let prev = all_graphs(n - 1);
    let perms = permutations(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in prev {
        for subset in 0u32..(1 << (n - 1)) {
            let mut edges = g.edges();
            for v in 0..n - 1 {
                if subset & (1 << v) != 0 {
                    edges.push((v, n - 1));
                }
            }
            let h = Small::from_edges(n, &edges);
            let c = perms.iter().map(|p| h.permuted(p)).min().unwrap();
            if seen.insert(c) {
                out.push(h);
            }
        }
    }
    out
}

/// Deterministic pseudo-random graphs (xorshift) so test runs repeat.
pub fn sample_graphs(n: usize, count: usize, seed: u64) -> Vec<Small> {
    let mut s = seed | 1;
    let mut next = move || {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        s
    };
    (0..count)
        .map(|i| {
            let density = 20 + (i % 7) as u64 * 10; // percent
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if next() % 100 < density {
                        edges.push((u, v));
                    }
                }
            }
            Small::from_edges(n, &edges)
        })
        .collect()
}

/// Whether `h` is a subgraph of `g` on the same number of vertices or fewer,
/// by backtracking over injective maps.
fn embeds_into(h: &Small, g: &Small) -> bool {
    fn rec(h: &Small, g: &Small, k: usize, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        if k == h.n {
            return true;
        }
        for x in 0..g.n {
            if used[x] {
                continue;
            }
            if (0..k).all(|j| !h.has(j, k) || g.has(map[j], x)) {
                map.push(x);
                used[x] = true;
                if rec(h, g, k + 1, map, used) {
                    return true;
                }
                used[x] = false;
                map.pop();
            }
        }
        false
    }
    h.n <= g.n && rec(h, g, 0, &mut Vec::new(), &mut vec![false; g.n])
}

fn delete(g: &Small, x: usize) -> Small {
    let keep: Vec<usize> = (0..g.n).filter(|&v| v != x).collect();
    let mut edges = Vec::new();
    for (i, &u) in keep.iter().enumerate() {
        for (j, &v) in keep.iter().enumerate().skip(i + 1) {
            if g.has(u, v) {
                edges.push((i, j));
            }
        }
    }
    Small::from_edges(g.n - 1, &edges)
}

fn contract(g: &Small, a: usize, b: usize) -> Small {
    // b merges into a, then b is deleted.
    let mut h = *g;
    for v in 0..g.n {
        if v != a && v != b && g.has(b, v) {
            h.mask |= bit(g.n, a, v);
        }
    }
    delete(&h, b)
}

/// Minor containment by exhaustive vertex deletion and edge contraction.
pub fn minor_oracle(g: &Small, h: &Small) -> bool {
    let h_edges = h.edges().len();
    let mut memo: HashMap<(usize, u64), bool> = HashMap::new();
    fn rec(g: Small, h: &Small, h_edges: usize, memo: &mut HashMap<(usize, u64), bool>) -> bool {
        if g.n < h.n || (g.mask.count_ones() as usize) < h_edges {
            return false;
        }
        if let Some(&r) = memo.get(&(g.n, g.mask)) {
            return r;
        }
        let r = if g.n == h.n {
            embeds_into(h, &g)
        } else {
            (0..g.n).any(|x| rec(delete(&g, x), h, h_edges, memo))
                || g.edges()
                    .into_iter()
                    .any(|(a, b)| rec(contract(&g, a, b), h, h_edges, memo))
        };
        memo.insert((g.n, g.mask), r);
        r
    }
    rec(*g, h, h_edges, &mut memo)
}

pub fn k5() -> Small {
    let e: Vec<(usize, usize)> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
    Small::from_edges(5, &e)
}

pub fn k33() -> Small {
    let e: Vec<(usize, usize)> = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
    Small::from_edges(6, &e)
}

/// Planarity by Wagner: no K5 and no K3,3 minor.
pub fn planar_oracle(g: &Small) -> bool {
    !minor_oracle(g, &k5()) && !minor_oracle(g, &k33())
}

/// Small patterns used against `has_minor`.
pub fn patterns() -> Vec<(&'static str, Small)> {
    let k = |n: usize| {
        let e: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Small::from_edges(n, &e)
    };
    vec![
        ("K3", k(3)),
        ("K4", k(4)),
        ("K4-e", Small::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])),
        ("K1,3", Small::from_edges(4, &[(0, 1), (0, 2), (0, 3)])),
        ("2K2", Small::from_edges(4, &[(0, 1), (2, 3)])),
        ("C5", Small::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])),
        (
            "K2,3",
            Small::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
        ),
        ("K5", k5()),
        ("K3,3", k33()),
    ]
}
