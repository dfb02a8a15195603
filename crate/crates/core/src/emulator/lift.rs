//! Lifting minor operations and YΔ-transformations of the target to the
//! emulator.

use super::{ensure_emulator, normalize_fiber_degrees, verify_emulator, Projection};
use crate::error::{Error, Result};
use crate::graph::Vertex;
use crate::planarity::Embedding;

fn require_valid(p: &Projection) -> Result<()> {
    if verify_emulator(p).valid {
        Ok(())
    } else {
        Err(Error::PreconditionUnmet("input is not a valid emulator".into()))
    }
}

fn target_vertex(p: &Projection, label: &str) -> Result<Vertex> {
    p.target()
        .index_of(label)
        .ok_or_else(|| Error::InvalidInput(format!("target has no vertex `{label}`")))
}

fn target_edge(p: &Projection, a: &str, b: &str) -> Result<(Vertex, Vertex)> {
    let (x, y) = (target_vertex(p, a)?, target_vertex(p, b)?);
    if !p.target().has_edge(x, y) {
        return Err(Error::InvalidInput(format!("target has no edge {a}-{b}")));
    }
    Ok((x, y))
}

/// Host vertices outside the fiber of `t`, with images shifted to the target
/// without `t`.
fn drop_target_vertex(p: &Projection, t: Vertex, kept: &[Vertex]) -> Vec<Vertex> {
    kept.iter()
        .map(|&h| {
            let img = p.image(h);
            if img > t {
                img - 1
            } else {
                img
            }
        })
        .collect()
}

pub fn lift_delete_vertex(p: &Projection, label: &str) -> Result<Projection> {
    let t = target_vertex(p, label)?;
    require_valid(p)?;
    let kept: Vec<Vertex> = p.host().vertices().filter(|&h| p.image(h) != t).collect();
    let (host, _) = p.host().induced_subgraph(&kept);
    let map = drop_target_vertex(p, t, &kept);
    let target = p.target().without_vertices(&[t]);
    ensure_emulator(Projection::unchecked_target(host, target, map)?, "vertex deletion")
}

pub fn lift_delete_edge(p: &Projection, a: &str, b: &str) -> Result<Projection> {
    let (x, y) = target_edge(p, a, b)?;
    require_valid(p)?;
    let mut host = p.host().clone();
    for (u, v) in p.host().edges() {
        let (s, t) = (p.image(u), p.image(v));
        if (s, t) == (x, y) || (s, t) == (y, x) {
            host.remove_edge(u, v);
        }
    }
    let mut target = p.target().clone();
    target.remove_edge(x, y);
    ensure_emulator(
        Projection::unchecked_target(host, target, p.map().to_vec())?,
        "edge deletion",
    )
}

/// Contracts every component of the host edges representing `{a, b}`.
pub fn lift_contract_edge(p: &Projection, a: &str, b: &str) -> Result<Projection> {
    let (x, y) = target_edge(p, a, b)?;
    require_valid(p)?;
    let h = p.host();
    let mut class: Vec<usize> = h.vertices().collect();
    fn find(c: &mut [usize], v: usize) -> usize {
        let mut r = v;
        while c[r] != r {
            r = c[r];
        }
        let mut v = v;
        while c[v] != r {
            let next = c[v];
            c[v] = r;
            v = next;
        }
        r
    }
    for (u, v) in h.edges() {
        let (s, t) = (p.image(u), p.image(v));
        if (s, t) == (x, y) || (s, t) == (y, x) {
            let (ru, rv) = (find(&mut class, u), find(&mut class, v));
            class[ru] = rv;
        }
    }
    let roots: Vec<usize> = h.vertices().map(|v| find(&mut class, v)).collect();
    let (host, host_of) = h.quotient(&roots);
    let (target, target_of) = p.target().merge_vertices(&[x, y]);
    let mut map = vec![0; host.order()];
    for v in h.vertices() {
        map[host_of[v]] = target_of[p.image(v)];
    }
    ensure_emulator(Projection::unchecked_target(host, target, map)?, "edge contraction")
}

/// YΔ at the degree-3 target vertex `label`: fibers are first normalised to
/// degree 3, then each representative is replaced by a triangle.
pub fn lift_yd(p: &Projection, label: &str, emb: &Embedding) -> Result<Projection> {
    let v = target_vertex(p, label)?;
    let target = p.target().yd_transform(label)?;
    let normal = normalize_fiber_degrees(p, emb, &[v])?.projection;
    let mut host = normal.host().clone();
    let fiber = normal.fiber(v);
    for &x in &fiber {
        let nb: Vec<Vertex> = host.neighbors(x).collect();
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                host.add_edge(nb[i], nb[j])?;
            }
        }
    }
    let kept: Vec<Vertex> = host.vertices().filter(|&h| normal.image(h) != v).collect();
    let (host, _) = host.induced_subgraph(&kept);
    let map = drop_target_vertex(&normal, v, &kept);
    ensure_emulator(Projection::unchecked_target(host, target, map)?, "YΔ lift")
}
