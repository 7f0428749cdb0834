//! Recovering a Coxeter matrix from the pair spectra of a faithful
//! representation.
//!
//! Run with `cargo run --example reconstruct_coxeter`.

use coxspec::analysis::{analyze, reconstruct_matrix};
use coxspec::dihedral::{geometric_representation, CoxeterMatrix};

fn main() -> coxspec::Result<()> {
    let m = CoxeterMatrix::new(vec![
        vec![1, 5, 2, 2],
        vec![5, 1, 3, 2],
        vec![2, 3, 1, 6],
        vec![2, 2, 6, 1],
    ])?;
    let rep = geometric_representation(&m);
    let out = analyze(&rep, 64)?;
    for p in &out.spectra {
        println!("({}, {}): {}", p.i, p.j, p.curves);
    }
    println!("{}", out.report.to_json());
    println!("matches input: {}", out.report.matrix == m);

    // the same spectra, with generator data thrown away
    let again = reconstruct_matrix(&out.spectra, 4, true)?;
    println!("strict reconstruction agrees: {}", again.matrix == m);
    Ok(())
}
