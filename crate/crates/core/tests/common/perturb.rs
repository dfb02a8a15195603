//! Emulator perturbations that keep the host planar.

use emulkit::emulator::Projection;
use emulkit::planarity::{test_planarity, Embedding};
use emulkit::Vertex;

/// Merges two vertices of one fiber over `x` that share a face, once per
/// pick. Fibers are never shrunk below two.
pub fn merge_on_faces(p: &Projection, emb: &Embedding, picks: &[(usize, usize)], x: &[Vertex]) -> Projection {
    let mut p = p.clone();
    let mut emb = emb.clone();
    for &(fi, pi) in picks {
        let mut candidates = Vec::new();
        for face in emb.faces().unwrap() {
            let vs = face.vertices();
            for (i, &a) in vs.iter().enumerate() {
                for &b in &vs[i + 1..] {
                    let t = p.image(a);
                    if a != b && t == p.image(b) && x.contains(&t) && p.fiber(t).len() > 2 {
                        candidates.push((a.min(b), a.max(b)));
                    }
                }
            }
        }
        candidates.sort_unstable();
        candidates.dedup();
        if candidates.is_empty() {
            break;
        }
        let (a, b) = candidates[(fi * 31 + pi) % candidates.len()];
        let (host, target_of) = p.host().merge_vertices(&[a, b]);
        let mut map = vec![0; host.order()];
        for v in p.host().vertices() {
            map[target_of[v]] = p.image(v);
        }
        p = Projection::new(host, p.target().clone(), map).unwrap();
        emb = test_planarity(p.host())
            .embedding()
            .expect("merge across a face stays planar");
    }
    p
}
