//! Irreducible representations of a dihedral group: matrices, kernels,
//! characters, and decomposition of a reducible representation.
//!
//! Run with `cargo run --example dihedral_catalog -- 8`.

use coxspec::dihedral::{
    assemble, catalog, character_table, decompose, enumerate, irrep_curve, irrep_kernel, irrep_matrices, RepSpec,
};

fn main() -> coxspec::Result<()> {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    let elements = enumerate(n);
    println!("elements: {}", elements.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));

    for label in catalog(n) {
        let (a, b) = irrep_matrices(n, label)?;
        let kernel = irrep_kernel(n, label)?;
        println!(
            "{label}: s1 -> {a:?}, s2 -> {b:?}, |ker| = {}, curve {}",
            kernel.len(),
            irrep_curve(n, label)?
        );
    }

    println!("\ncharacter table");
    for (label, chars) in character_table(n)? {
        let row: Vec<String> = chars.iter().map(ToString::to_string).collect();
        println!("{label}: {}", row.join(" | "));
    }

    let regular = RepSpec::regular(n)?;
    let (a, b) = assemble(&regular)?;
    let back = decompose(&a, &b, n)?;
    println!("\nregular representation decomposes back: {}", back == regular);
    Ok(())
}
