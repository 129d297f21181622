//! Equality of words, parabolic membership, quasi-centralizers and root
//! closure.
//!
//! `cargo run --example word_problem`

use std::sync::Arc;

use eafc::{ArtinSystem, Word, WordProblem};

fn main() {
    let sys = Arc::new(
        ArtinSystem::new(
            &["a", "b", "c", "d"],
            &[("a", "b", 4), ("b", "c", 2), ("c", "d", 6), ("a", "c", 2)],
        )
        .unwrap(),
    );
    let wp = WordProblem::new(Arc::clone(&sys)).unwrap();
    let w = |t: &str| Word::parse(&sys, t).unwrap();

    for (u, v) in [
        ("a b a b", "b a b a"),
        ("a b a", "b a b"),
        ("c d c d c d", "d c d c d c"),
        ("a c b", "c a b"),
        ("a d", "d a"),
    ] {
        let eq = wp.are_equal(&w(u), &w(v)).unwrap();
        println!("{u:>14}  {}  {v}", if eq { "==" } else { "!=" });
    }

    // A long trivial word: a conjugated relator.
    let rel = w("d^-2 c d c d c d c^-1 d^-1 c^-1 d^-1 c^-1 d^-1 d^2");
    println!("\n{rel}\ntrivial: {}", wp.is_trivial(&rel).unwrap());

    let ab = sys.subset(&["a", "b"]).unwrap();
    // c commutes with a and b, d does not.
    for t in ["c a b^2 a^-1 c^-1", "d a d^-1"] {
        let g = w(t);
        println!(
            "\n{g} in G_{{a,b}}: {}",
            wp.in_standard_parabolic(&ab, &g).unwrap()
        );
        println!(
            "{g} in d G_{{a,b}} d^-1: {}",
            wp.in_parabolic(&ab, &w("d"), &g).unwrap()
        );
    }

    let a = sys.subset(&["a"]).unwrap();
    println!(
        "\nc in QZ(G_a): {}",
        wp.in_quasi_centralizer(&a, &w("c")).unwrap()
    );
    println!(
        "b in QZ(G_a): {}",
        wp.in_quasi_centralizer(&a, &w("b")).unwrap()
    );

    let report = wp
        .check_root_closure(&a, &w("b"), &w("b a^2 b^-1"), 4)
        .unwrap();
    for row in &report.rows {
        println!(
            "n = {}: power in parabolic {}, element in parabolic {}",
            row.n, row.power_member, row.member
        );
    }

    if let Some(d) = wp.syllable_decomposition(&w("d a c^2 b")).unwrap() {
        let vertex = sys.name(d.vertex);
        let pieces: Vec<String> = d.pieces.iter().map(|(s, p)| format!("{s:?}:{p}")).collect();
        println!("\nsplit at {vertex}: {}", pieces.join(" | "));
    }
}
