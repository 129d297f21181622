//! Two solutions of the word problem in a dihedral Artin group, and the
//! index-n subgroup that maps onto a free group.
//!
//! `cargo run --example dihedral`

use eafc::dihedral::DihedralContext;

fn main() {
    let ctx = DihedralContext::new(3).unwrap();
    for text in [
        "a b a b a b a^-1 b^-1 a^-1 b^-1 a^-1 b^-1",
        "a b a b^-1",
        "a b a^-1 b^-1",
    ] {
        let w = ctx.word(text).unwrap();
        let ax = ctx.to_ax(&w);
        let central = ctx.central_coords(&ax);
        let semi = ctx.semidirect_coords(&w);
        println!("{text}");
        println!("  over a, x = ab: {ax}");
        println!(
            "  central: trivial {}, central element {}",
            central.is_identity(),
            central.is_central()
        );
        println!("  kernel coordinates: {semi}");
        println!("  image in C_3: {}", ctx.cn_quotient_image(&w));
    }

    println!("\nfree basis of the kernel of b-exponent:");
    for k in ctx.kernel_basis() {
        println!("  {k}");
    }

    println!("\ngenerators of the index-3 subgroup and their free images:");
    for g in ctx.appropriate_gens() {
        let img = ctx.free_quotient_image(&g);
        println!("  {g:<24} -> {img:?}");
    }
}
