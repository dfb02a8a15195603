use emulkit::catalog::{graphs, Catalog};
use emulkit::constructions::*;
use emulkit::emulator::{verify_cover, verify_emulator};
use emulkit::graph::{is_bipartite, is_isomorphic};
use emulkit::planarity::is_planar;

fn family() -> Catalog {
    let mut c = Catalog::builtin();
    c.load_reference_list(include_str!("../data/k1222_family.graphs"))
        .unwrap();
    c
}

#[test]
fn every_named_construction_certifies() {
    let cat = family();
    for name in NAMES {
        let c = build(name, &cat).unwrap_or_else(|e| panic!("{name}: {e}"));
        let p = &c.projection;
        assert!(verify_emulator(p).valid, "{name}");
        assert!(is_planar(p.host()), "{name}");
        assert!(c.embedding.euler_check(), "{name}");
        if verify_cover(p).valid {
            assert!(verify_emulator(p).valid);
        }
        if is_bipartite(p.target()) {
            assert!(is_bipartite(p.host()), "{name}");
        }
        if !is_planar(p.target()) {
            assert!(p.min_fiber() >= 2, "{name}");
        }
        if name != "rich-k4" {
            let id = cat.identify(p.target());
            assert!(id.is_some(), "{name} target not in the catalog");
        }
    }
}

#[test]
fn family_members_by_vertex_count() {
    let cat = family();
    for (m, n) in [
        (FamilyMember::K1222, 7),
        (FamilyMember::B7, 8),
        (FamilyMember::C3, 9),
        (FamilyMember::D2, 10),
    ] {
        let (c, subset) = build_k1222_family_emulator(m, &cat).unwrap();
        assert_eq!(c.projection.target().order(), n);
        assert_eq!(subset.len(), 11 - n);
        assert!(is_isomorphic(c.projection.target(), &cat.get(m.name()).unwrap().graph));
        // Each YΔ removes the six representatives of one core vertex.
        assert_eq!(c.projection.host().order(), 66 - 6 * subset.len());
    }
}

#[test]
fn c4_gadget_report() {
    let (_, report) = rolling_cube_gadget().unwrap();
    assert_eq!(report.bullets.len(), 5);
    assert!(report.facets_twice);
    assert!(report.all_operational());
    let (c, _) = build_c4_emulator().unwrap();
    assert!(is_isomorphic(c.projection.target(), &graphs::c4()));
    assert_eq!(c.projection.host().order(), 338);
}

#[test]
fn outputs_are_deterministic() {
    let a = build_k7c4_emulator().unwrap();
    let b = build_k7c4_emulator().unwrap();
    assert_eq!(a.projection, b.projection);
    assert_eq!(a.projection.host().to_text(), b.projection.host().to_text());
}
