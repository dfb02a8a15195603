//! The emulator of `E2` and the graphs reached from it by YΔ at core
//! vertices.

use std::collections::BTreeMap;

use super::rich_k4::{rich_faces, search_rich_k4_emulator};
use super::{certify, Construction};
use crate::catalog::{graphs, Catalog};
use crate::emulator::{lift_yd, Projection};
use crate::error::{Error, Result};
use crate::graph::{is_isomorphic, Graph, Vertex};

/// Hands out `t.0`, `t.1`, ... for the representatives of target vertex `t`.
#[derive(Default)]
struct Namer {
    next: BTreeMap<String, usize>,
}

impl Namer {
    fn add(&mut self, host: &mut Graph, map: &mut Vec<String>, target: &str) -> Result<Vertex> {
        let k = self.next.entry(target.to_string()).or_insert(0);
        let v = host.add_vertex(&format!("{target}.{k}"))?;
        *k += 1;
        map.push(target.to_string());
        Ok(v)
    }
}

/// Subdivides every edge of the rich `K4` cover and puts one `0` vertex in
/// each rich face, joined to the subdivision vertices on its boundary.
pub fn build_e2_emulator() -> Result<Construction> {
    let h0 = search_rich_k4_emulator()?;
    let p0 = &h0.projection;
    let g0 = p0.host();
    let k4 = p0.target();
    let target = graphs::e2();

    let mut host = Graph::new();
    let mut images: Vec<String> = Vec::new();
    let mut namer = Namer::default();
    for v in g0.vertices() {
        namer.add(&mut host, &mut images, k4.label(p0.image(v)))?;
    }
    let mut middle = BTreeMap::new();
    for (u, v) in g0.edges() {
        let (a, b) = (k4.label(p0.image(u)), k4.label(p0.image(v)));
        let bi = if a < b { format!("{a}{b}") } else { format!("{b}{a}") };
        let m = namer.add(&mut host, &mut images, &bi)?;
        host.add_edge(u, m)?;
        host.add_edge(v, m)?;
        middle.insert((u, v), m);
    }
    for face in rich_faces(p0, &h0.embedding)? {
        let z = namer.add(&mut host, &mut images, "0")?;
        for &(u, v) in &face.darts {
            let m = middle[&(u.min(v), u.max(v))];
            if !host.has_edge(z, m) {
                host.add_edge(z, m)?;
            }
        }
    }
    let pairs: Vec<(String, String)> = host.labels().iter().cloned().zip(images).collect();
    let p = Projection::from_labels(host, target, &pairs)?;
    certify(p, "E2 emulator")
}

/// Applies YΔ at each core vertex in `subset`, one after another.
pub fn yd_subset(c: &Construction, subset: &[&str]) -> Result<Construction> {
    let mut current = c.clone();
    for &v in subset {
        let p = lift_yd(&current.projection, v, &current.embedding)?;
        current = certify(p, "YΔ lift")?;
    }
    Ok(current)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyMember {
    K1222,
    B7,
    C3,
    D2,
}

impl FamilyMember {
    pub const ALL: [FamilyMember; 4] = [
        FamilyMember::K1222,
        FamilyMember::B7,
        FamilyMember::C3,
        FamilyMember::D2,
    ];

    /// Catalog name of the reference graph.
    pub fn name(self) -> &'static str {
        match self {
            FamilyMember::K1222 => "K1222",
            FamilyMember::B7 => "B7",
            FamilyMember::C3 => "C3",
            FamilyMember::D2 => "D2",
        }
    }
}

const CORE: [&str; 4] = ["1", "2", "3", "4"];

/// Subsets of the core in increasing bitmask order.
fn core_subsets() -> impl Iterator<Item = Vec<&'static str>> {
    (0u32..16).map(|mask| (0..4).filter(|i| mask & (1 << i) != 0).map(|i| CORE[i]).collect())
}

/// First core subset whose YΔ transform of `E2` is isomorphic to the catalog
/// graph named after `member`.
pub fn identify_subset(member: FamilyMember, catalog: &Catalog) -> Result<Vec<&'static str>> {
    let reference = catalog
        .get(member.name())
        .map_err(|_| Error::IdentificationFailed(format!("catalog has no reference graph `{}`", member.name())))?;
    let e2 = graphs::e2();
    for subset in core_subsets() {
        let mut g = e2.clone();
        for v in &subset {
            g = g.yd_transform(v)?;
        }
        if is_isomorphic(&g, &reference.graph) {
            return Ok(subset);
        }
    }
    Err(Error::IdentificationFailed(format!(
        "no YΔ subset of the E2 core gives `{}`",
        member.name()
    )))
}

/// Emulator for a member of the `K1222` family, with the core subset used.
pub fn build_k1222_family_emulator(
    member: FamilyMember,
    catalog: &Catalog,
) -> Result<(Construction, Vec<&'static str>)> {
    let subset = identify_subset(member, catalog)?;
    let e2 = build_e2_emulator()?;
    Ok((yd_subset(&e2, &subset)?, subset))
}
