//! Path-addition planarity test (Demoucron, Malgrange and Pertuiset).
//!
//! Works on one 2-connected block at a time. Faces of the partial embedding
//! are kept as consistently oriented vertex cycles; a fragment that fits in
//! no face proves non-planarity.

use std::collections::{HashMap, HashSet, VecDeque};

/// Local adjacency lists of a block, vertices `0..n`.
pub(crate) type LocalAdj = Vec<Vec<usize>>;

struct Faces {
    cycles: Vec<Vec<usize>>,
    members: Vec<Vec<u64>>,
    words: usize,
}

impl Faces {
    fn new(n: usize) -> Self {
        Faces {
            cycles: Vec::new(),
            members: Vec::new(),
            words: n.div_ceil(64),
        }
    }

    fn push(&mut self, cycle: Vec<usize>) {
        let mut bits = vec![0u64; self.words];
        for &v in &cycle {
            bits[v / 64] |= 1 << (v % 64);
        }
        self.cycles.push(cycle);
        self.members.push(bits);
    }

    fn replace(&mut self, i: usize, cycle: Vec<usize>) {
        let mut bits = vec![0u64; self.words];
        for &v in &cycle {
            bits[v / 64] |= 1 << (v % 64);
        }
        self.cycles[i] = cycle;
        self.members[i] = bits;
    }

    fn contains_all(&self, i: usize, vs: &[usize]) -> bool {
        vs.iter().all(|&v| self.members[i][v / 64] & (1 << (v % 64)) != 0)
    }
}

enum Fragment {
    Chord(usize, usize),
    Bridge {
        vertices: Vec<usize>,
        attachments: Vec<usize>,
    },
}

impl Fragment {
    fn attachments(&self) -> Vec<usize> {
        match self {
            Fragment::Chord(u, v) => vec![*u, *v],
            Fragment::Bridge { attachments, .. } => attachments.clone(),
        }
    }
}

fn key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Embeds a 2-connected block with at least three vertices. Returns the
/// faces as oriented vertex cycles, or `None` when the block is not planar.
pub(crate) fn embed_block(adj: &LocalAdj) -> Option<Vec<Vec<usize>>> {
    let n = adj.len();
    let m: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if n >= 3 && m > 3 * n - 6 {
        return None;
    }
    let cycle = find_cycle(adj);
    let mut placed = vec![false; n];
    let mut embedded: HashSet<(usize, usize)> = HashSet::new();
    for i in 0..cycle.len() {
        placed[cycle[i]] = true;
        embedded.insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut faces = Faces::new(n);
    let mut rev = cycle.clone();
    rev.reverse();
    faces.push(cycle);
    faces.push(rev);

    while embedded.len() < m {
        let fragments = fragments(adj, &placed, &embedded);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let att = frag.attachments();
            let fitting: Vec<usize> = (0..faces.cycles.len())
                .filter(|&f| faces.contains_all(f, &att))
                .collect();
            match fitting.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, fitting[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, fitting[0]));
                    }
                }
            }
        }
        let (fi, face) = choice.expect("at least one fragment while edges remain");
        let path = match &fragments[fi] {
            Fragment::Chord(u, v) => vec![*u, *v],
            Fragment::Bridge { vertices, attachments } => bridge_path(adj, vertices, attachments, &placed),
        };
        for w in path.windows(2) {
            embedded.insert(key(w[0], w[1]));
        }
        for &v in &path {
            placed[v] = true;
        }
        split_face(&mut faces, face, &path);
    }
    Some(faces.cycles)
}

/// Any cycle of the block, via DFS until the first back edge.
fn find_cycle(adj: &LocalAdj) -> Vec<usize> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    while let Some(&mut (u, ref mut i)) = stack.last_mut() {
        if *i == adj[u].len() {
            stack.pop();
            continue;
        }
        let w = adj[u][*i];
        *i += 1;
        if depth[w] == usize::MAX {
            depth[w] = depth[u] + 1;
            parent[w] = u;
            stack.push((w, 0));
        } else if w != parent[u] && depth[w] < depth[u] {
            let mut cyc = vec![u];
            let mut x = u;
            while x != w {
                x = parent[x];
                cyc.push(x);
            }
            cyc.reverse();
            return cyc;
        }
    }
    unreachable!("2-connected block has a cycle")
}

fn fragments(adj: &LocalAdj, placed: &[bool], embedded: &HashSet<(usize, usize)>) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        if !placed[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && placed[v] && !embedded.contains(&(u, v)) {
                out.push(Fragment::Chord(u, v));
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    for s in 0..n {
        if placed[s] || comp[s] != usize::MAX {
            continue;
        }
        comp[s] = s;
        let mut vertices = vec![s];
        let mut att = Vec::new();
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if placed[w] {
                    att.push(w);
                } else if comp[w] == usize::MAX {
                    comp[w] = s;
                    vertices.push(w);
                    queue.push_back(w);
                }
            }
        }
        att.sort_unstable();
        att.dedup();
        out.push(Fragment::Bridge {
            vertices,
            attachments: att,
        });
    }
    out
}

/// Path through a bridge between two distinct attachment vertices.
fn bridge_path(adj: &LocalAdj, vertices: &[usize], attachments: &[usize], placed: &[bool]) -> Vec<usize> {
    let a = attachments[0];
    let inside: HashSet<usize> = vertices.iter().copied().collect();
    let start = *adj[a]
        .iter()
        .find(|w| inside.contains(w))
        .expect("attachment touches its bridge");
    let mut parent: HashMap<usize, usize> = HashMap::new();
    parent.insert(start, usize::MAX);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        if let Some(&b) = adj[u].iter().find(|&&w| placed[w] && w != a) {
            let mut path = vec![b, u];
            let mut x = u;
            while parent[&x] != usize::MAX {
                x = parent[&x];
                path.push(x);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &w in &adj[u] {
            if inside.contains(&w) && !parent.contains_key(&w) {
                parent.insert(w, u);
                queue.push_back(w);
            }
        }
    }
    unreachable!("bridge of a 2-connected block has two attachments")
}

fn split_face(faces: &mut Faces, f: usize, path: &[usize]) {
    let cyc = faces.cycles[f].clone();
    let a = path[0];
    let b = *path.last().unwrap();
    let k = cyc.len();
    let i = cyc.iter().position(|&v| v == a).unwrap();
    let j = cyc.iter().position(|&v| v == b).unwrap();
    let inner = &path[1..path.len() - 1];

    let mut first = Vec::new();
    let mut x = i;
    loop {
        first.push(cyc[x]);
        if x == j {
            break;
        }
        x = (x + 1) % k;
    }
    first.extend(inner.iter().rev());

    let mut second = Vec::new();
    let mut x = j;
    loop {
        second.push(cyc[x]);
        if x == i {
            break;
        }
        x = (x + 1) % k;
    }
    second.extend(inner.iter());

    faces.replace(f, first);
    faces.push(second);
}

/// Rotation system read off consistently oriented faces: in a face walk
/// `.. u v w ..` the successor of `u` around `v` is `w`.
pub(crate) fn rotation_from_faces(adj: &LocalAdj, faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut succ: HashMap<(usize, usize), usize> = HashMap::new();
    for f in faces {
        let k = f.len();
        for i in 0..k {
            let prev = f[(i + k - 1) % k];
            let next = f[(i + 1) % k];
            succ.insert((f[i], prev), next);
        }
    }
    (0..adj.len())
        .map(|v| {
            let Some(&first) = adj[v].first() else {
                return Vec::new();
            };
            let mut rot = vec![first];
            let mut u = succ[&(v, first)];
            while u != first {
                rot.push(u);
                u = succ[&(v, u)];
            }
            rot
        })
        .collect()
}
