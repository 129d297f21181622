//! Decomposition trees, the graph of groups of an amalgam node and a finite
//! presentation.
//!
//! `cargo run --example decomposition`

use std::sync::Arc;

use eafc::decompose::{
    decompose, decompose_with, emit_presentation, to_graph_of_groups, SplitRule,
};
use eafc::ArtinSystem;

fn main() {
    let sys = Arc::new(
        ArtinSystem::new(
            &["x", "a", "b", "c", "d"],
            &[
                ("x", "a", 4),
                ("x", "b", 2),
                ("a", "b", 2),
                ("b", "c", 6),
                ("d", "c", 2),
            ],
        )
        .unwrap(),
    );

    let tree = decompose(&sys).unwrap();
    println!("{}", tree.render(&sys));
    println!("{} nodes", tree.node_count());

    let other = decompose_with(&sys, SplitRule::Prefer(sys.index_of("c").unwrap())).unwrap();
    println!("\nsplitting at c first:\n{}", other.render(&sys));

    let gog = to_graph_of_groups(&tree);
    println!(
        "\ngraph of groups: {} vertex groups, {} edges, free rank {}",
        gog.vertex_labels().len(),
        gog.edges().len(),
        gog.underlying_free_rank()
    );

    println!(
        "\nJSON:\n{}",
        serde_json::to_string_pretty(&tree.to_report(&sys)).unwrap()
    );
    println!("\npresentation:\n{}", emit_presentation(&sys));
}
