use emulkit::catalog::{graphs, Catalog};
use emulkit::graph::named::{complete, disjoint_union};
use emulkit::obstructions::*;
use emulkit::Graph;

const BUDGET: u64 = 10_000_000;

fn two_k4_and_spine() -> Graph {
    let mut g = disjoint_union(&complete(4), &complete(4));
    let s = g.add_vertex("spine").unwrap();
    for v in 0..8 {
        g.add_edge(s, v).unwrap();
    }
    g
}

fn family() -> Catalog {
    let mut c = Catalog::builtin();
    let text = include_str!("../data/k1222_family.graphs");
    c.load_reference_list(text).unwrap();
    c
}

#[test]
fn spine_instance_gives_a_certified_pair() {
    let g = two_k4_and_spine();
    let pair = find_two_disjoint_kgraphs(&g, BUDGET).unwrap().expect("pair");
    assert!(pair.certify(&g));
    let shared: Vec<_> = pair
        .j1
        .vertices
        .iter()
        .filter(|v| pair.j2.vertices.contains(v))
        .collect();
    assert!(shared.is_empty());
}

#[test]
fn emulable_targets_have_no_pair() {
    let c = family();
    for name in ["E2", "K1222", "B7", "C3", "D2", "C4", "K7-C4", "K4,5-4K2"] {
        let g = &c.get(name).unwrap().graph;
        assert_eq!(find_two_disjoint_kgraphs(g, BUDGET).unwrap(), None, "{name}");
    }
}

#[test]
fn internal_four_connectivity_of_named_graphs() {
    assert!(!is_internally_4_connected(&graphs::k7_minus_c4()));
    assert!(is_internally_4_connected(&graphs::k1222()));
    let c = family();
    for e in c.entries() {
        match e.flags.i4c {
            emulkit::catalog::Verdict::Yes => assert!(is_internally_4_connected(&e.graph), "{}", e.name),
            emulkit::catalog::Verdict::No => assert!(!is_internally_4_connected(&e.graph), "{}", e.name),
            emulkit::catalog::Verdict::Open => {}
        }
    }
}

#[test]
fn k7_minus_c4_separates_at_the_triple() {
    let g = graphs::k7_minus_c4();
    let s = find_nonflat_3_separation(&g).expect("nonflat separation");
    let mut b: Vec<&str> = s.boundary.iter().map(|&v| g.label(v)).collect();
    b.sort();
    assert_eq!(b, ["1", "2", "3"]);
}
