mod common;

use common::{all_graphs, minor_oracle, patterns};
use emulkit::graph::has_minor;

#[test]
fn has_minor_agrees_with_deletion_contraction_oracle() {
    let pats: Vec<_> = patterns()
        .into_iter()
        .map(|(name, p)| (name, p, p.to_graph()))
        .collect();
    for n in 1..=7 {
        for g in all_graphs(n) {
            let graph = g.to_graph();
            for (name, p, h) in &pats {
                let got = has_minor(&graph, h, 10_000_000).expect("within budget");
                assert_eq!(got.is_some(), minor_oracle(&g, p), "{name} in {:?}", g.edges());
                if let Some(model) = got {
                    assert!(model.certifies(&graph, h));
                }
            }
        }
    }
}
