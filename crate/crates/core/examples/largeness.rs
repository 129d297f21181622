//! Largeness certificates and their independent verification, plus the
//! free rank of the kernel of v ↦ 1 on trees.
//!
//! `cargo run --example largeness`

use eafc::subgroups::{kernel_phi_rank, largeness_certificate, verify_certificate, Largeness};
use eafc::ArtinSystem;

fn main() {
    let graphs = [
        (
            "edge 4",
            ArtinSystem::new(&["a", "b"], &[("a", "b", 4)]).unwrap(),
        ),
        (
            "edge 2",
            ArtinSystem::new(&["a", "b"], &[("a", "b", 2)]).unwrap(),
        ),
        (
            "path",
            ArtinSystem::new(&["a", "b", "c"], &[("a", "b", 4), ("b", "c", 6)]).unwrap(),
        ),
        (
            "triangle",
            ArtinSystem::new(
                &["a", "b", "c"],
                &[("a", "b", 6), ("b", "c", 2), ("a", "c", 2)],
            )
            .unwrap(),
        ),
    ];
    for (name, sys) in &graphs {
        let cert = largeness_certificate(sys).unwrap();
        println!(
            "== {name}\n{}",
            serde_json::to_string_pretty(&cert).unwrap()
        );
        println!("verified: {}", verify_certificate(sys, &cert).unwrap());
        if let Ok(r) = kernel_phi_rank(sys) {
            println!("kernel of v -> 1 is free of rank {r}");
        }
    }

    // Tampering is caught.
    let forged = Largeness::VirtuallyAbelian { rank: 2 };
    println!(
        "\nforged claim on edge 4 verified: {}",
        verify_certificate(&graphs[0].1, &forged).unwrap()
    );
}
