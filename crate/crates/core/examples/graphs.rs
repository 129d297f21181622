//! Validating defining graphs, classifying the group and deciding coherence.
//!
//! `cargo run --example graphs`

use eafc::artin_system::{Coherence, GroupClass};
use eafc::ArtinSystem;

fn report(name: &str, sys: &ArtinSystem) {
    println!("== {name}");
    match sys.validate_eafc() {
        Ok(()) => println!("EAFC: yes"),
        Err(t) => {
            let names: Vec<&str> = t.iter().map(|&i| sys.name(i)).collect();
            println!("EAFC: no, triangle {names:?} has two labels above 2");
            return;
        }
    }
    match sys.classify_group().unwrap() {
        GroupClass::FreeAbelian(n) => println!("group: Z^{n}"),
        GroupClass::Large => println!("group: large"),
    }
    match sys.is_coherent().unwrap() {
        Coherence::Coherent => println!("coherent"),
        Coherence::Incoherent { graph, cycle } => {
            println!(
                "incoherent: chordless cycle {:?} in {graph:?}",
                cycle.names(sys)
            )
        }
    }
}

fn main() {
    let path = ArtinSystem::new(&["a", "b", "c"], &[("a", "b", 4), ("b", "c", 6)]).unwrap();
    report("path 4-6", &path);

    let z3 = ArtinSystem::new(
        &["a", "b", "c"],
        &[("a", "b", 2), ("b", "c", 2), ("a", "c", 2)],
    )
    .unwrap();
    report("triangle of 2s", &z3);

    // Γ itself is chordal but dropping the 4-labelled chord leaves a square.
    let chord = ArtinSystem::from_json(
        r#"{"vertices": ["a", "b", "c", "d"],
            "edges": [{"u": "a", "v": "b", "m": 2}, {"u": "b", "v": "c", "m": 2},
                      {"u": "c", "v": "d", "m": 2}, {"u": "d", "v": "a", "m": 2},
                      {"u": "a", "v": "c", "m": 4}]}"#,
    )
    .unwrap();
    report("square with a 4-chord", &chord);

    let bad = ArtinSystem::new(
        &["a", "b", "c"],
        &[("a", "b", 4), ("b", "c", 4), ("a", "c", 2)],
    )
    .unwrap();
    report("not FC", &bad);
}
