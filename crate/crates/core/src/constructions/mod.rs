//! Rebuilding known planar emulators.
//!
//! Structures that are only known from drawings are recovered by small
//! constraint searches over polyhedral templates. Every builder runs the
//! verifier and the planarity test on its output before returning it.

pub mod c4;
pub mod e2;
pub mod k7c4;
pub mod polyhedra;
pub mod rich_k4;

use crate::emulator::{verify_emulator, Projection};
use crate::error::{Error, Result};
use crate::obstructions::check_min_fiber;
use crate::planarity::{is_planar, test_planarity, Embedding};

pub use c4::{build_c4_emulator, rolling_cube_gadget, CubeState, Gadget, GadgetReport, Roll};
pub use e2::{build_e2_emulator, build_k1222_family_emulator, identify_subset, yd_subset, FamilyMember};
pub use k7c4::{build_k7c4_emulator, search_k7c4_cell, Cell, CellKind};
pub use polyhedra::PolyhedronTemplate;
pub use rich_k4::{rich_faces, search_rich_k4_emulator};

/// A certified emulator together with a planar embedding of its host.
#[derive(Debug, Clone)]
pub struct Construction {
    pub projection: Projection,
    pub embedding: Embedding,
}

/// Fails unless `p` is a valid emulator with a planar host, and, for a
/// nonplanar connected target, every fiber has at least two vertices.
pub fn certify(p: Projection, what: &str) -> Result<Construction> {
    let report = verify_emulator(&p);
    if !report.valid {
        let first = report.violations.first().map(|v| v.to_string()).unwrap_or_default();
        return Err(Error::InvariantBroken(format!("{what} is not an emulator: {first}")));
    }
    let embedding = test_planarity(p.host())
        .embedding()
        .ok_or_else(|| Error::InvariantBroken(format!("{what} host is nonplanar")))?;
    let nonplanar_target = p.target().is_connected() && !is_planar(p.target());
    if nonplanar_target && !check_min_fiber(&p)? {
        return Err(Error::InvariantBroken(format!("{what} has a fiber of size one")));
    }
    Ok(Construction {
        projection: p,
        embedding,
    })
}

/// Names accepted by [`build`].
pub const NAMES: [&str; 8] = ["rich-k4", "e2", "k1222", "b7", "c3", "d2", "c4", "k7-c4"];

/// Builds a construction by its command-line name. The `b7 c3 d2` members
/// need `catalog` to hold reference graphs of those names.
pub fn build(name: &str, catalog: &crate::catalog::Catalog) -> Result<Construction> {
    match name {
        "rich-k4" => search_rich_k4_emulator(),
        "e2" => build_e2_emulator(),
        "k1222" => build_k1222_family_emulator(FamilyMember::K1222, catalog).map(|(c, _)| c),
        "b7" => build_k1222_family_emulator(FamilyMember::B7, catalog).map(|(c, _)| c),
        "c3" => build_k1222_family_emulator(FamilyMember::C3, catalog).map(|(c, _)| c),
        "d2" => build_k1222_family_emulator(FamilyMember::D2, catalog).map(|(c, _)| c),
        "c4" => build_c4_emulator().map(|(c, _)| c),
        "k7-c4" => build_k7c4_emulator(),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}
