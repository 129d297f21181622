//! The map onto ∏ C_{m(e)/2}, its kernel G_0, and Reidemeister-Schreier
//! generators of H ∩ G_0.
//!
//! `cargo run --example finite_index`

use std::sync::Arc;

use eafc::subgroups::{g0_index, reidemeister_schreier_g0, G0Map};
use eafc::{ArtinSystem, Word};

fn main() {
    let sys = Arc::new(
        ArtinSystem::new(
            &["a", "b", "c", "d"],
            &[("a", "b", 4), ("b", "c", 4), ("c", "d", 4), ("d", "a", 4)],
        )
        .unwrap(),
    );
    let lex = G0Map::new(Arc::clone(&sys));
    println!("bound ∏ m/2 = {}", g0_index(&sys));
    println!("index with the default orientation = {}", lex.index());
    let cyclic = G0Map::from_json(
        Arc::clone(&sys),
        r#"{"orientations": [{"edge": ["d", "a"], "a_role": "d"}]}"#,
    )
    .unwrap();
    println!("index with a cyclic orientation = {}", cyclic.index());

    for t in ["a", "b", "a b", "a b a b", "d c b a"] {
        let w = Word::parse(&sys, t).unwrap();
        println!(
            "{t:>10} -> {}  in G_0: {}",
            lex.image(&w).unwrap(),
            lex.in_g0(&w).unwrap()
        );
    }

    let gens: Vec<Word> = ["a", "b"]
        .iter()
        .map(|t| Word::parse(&sys, t).unwrap())
        .collect();
    let rs = reidemeister_schreier_g0(&lex, &gens).unwrap();
    println!("\nH = <a, b>: [H : H ∩ G_0] = {}", rs.index());
    for t in &rs.transversal {
        println!("  coset rep {t}");
    }
    for g in &rs.generators {
        println!("  generator {g}");
    }
}
