//! The kernel graph Ω of a vertex adjacent to everything, and its
//! embedding into the original group.
//!
//! `cargo run --example kernel_graph`

use std::sync::Arc;

use eafc::kernel_omega::build_omega;
use eafc::{ArtinSystem, Word, WordProblem};

fn main() {
    let sys = Arc::new(
        ArtinSystem::new(
            &["x", "u", "v", "w"],
            &[("x", "u", 6), ("x", "v", 2), ("x", "w", 2), ("v", "w", 4)],
        )
        .unwrap(),
    );
    let omega = build_omega(&sys, sys.index_of("x").unwrap()).unwrap();
    println!("Ω:\n{}", omega.system().to_json());
    for (v, img) in omega.substitution_table() {
        println!("{v:>5} -> {img}");
    }

    let w = Word::parse(omega.system(), "u__1 v__0 u__2^-1 w__0").unwrap();
    let e = omega.embed(&w).unwrap();
    println!("\n{w}  ->  {e}");

    let host = WordProblem::new(Arc::clone(&sys)).unwrap();
    let inner = WordProblem::new(Arc::clone(omega.system())).unwrap();
    let comm = Word::parse(
        omega.system(),
        "v__0 w__0 v__0 w__0 v__0^-1 w__0^-1 v__0^-1 w__0^-1",
    )
    .unwrap();
    println!(
        "\n{comm}: trivial in G_Ω {}, image trivial {}",
        inner.is_trivial(&comm).unwrap(),
        host.is_trivial(&omega.embed(&comm).unwrap()).unwrap()
    );
}
