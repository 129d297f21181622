//! Smith normal form over the integers and abelian invariants of a
//! presentation.
//!
//! `cargo run --example smith_form`

use std::sync::Arc;

use eafc::decompose::emit_presentation;
use eafc::subgroups::snf::{from_i64, mat_mul};
use eafc::subgroups::{abelianization_invariants, smith_normal_form};
use eafc::ArtinSystem;

fn main() {
    let m = from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let s = smith_normal_form(&m);
    let diag: Vec<String> = s.diagonal().iter().map(|d| d.to_string()).collect();
    println!("diagonal: [{}], rank {}", diag.join(", "), s.rank());
    assert_eq!(mat_mul(&mat_mul(&s.u, &m), &s.v), s.d);

    for (name, sys) in [
        (
            "D_4",
            ArtinSystem::new(&["a", "b"], &[("a", "b", 4)]).unwrap(),
        ),
        (
            "Z^2",
            ArtinSystem::new(&["a", "b"], &[("a", "b", 2)]).unwrap(),
        ),
        ("free", ArtinSystem::new(&["a", "b", "c"], &[]).unwrap()),
    ] {
        let p = emit_presentation(&Arc::new(sys));
        let inv = abelianization_invariants(&p);
        let t: Vec<String> = inv.torsion.iter().map(|d| d.to_string()).collect();
        println!(
            "{name}: {p}\n  abelianization: Z^{} torsion [{}]",
            inv.free_rank,
            t.join(", ")
        );
    }
}
