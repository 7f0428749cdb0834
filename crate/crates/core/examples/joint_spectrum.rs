//! Pair spectra from a constituent list and from explicit matrices.
//!
//! Run with `cargo run --example joint_spectrum`.

use coxspec::dihedral::{assemble, geometric_representation, CoxeterMatrix, RepSpec};
use coxspec::spectrum::{curveset_equal_support, curvesets_to_json, spectrum_of_matrices, spectrum_of_spec, PairCurves};

fn main() -> coxspec::Result<()> {
    let regular = RepSpec::regular(3)?;
    let by_catalog = spectrum_of_spec(&regular)?;
    let (a, b) = assemble(&regular)?;
    let by_det = spectrum_of_matrices(&a, &b, 64)?;
    println!("catalog:     {by_catalog}");
    println!("determinant: {} (n = {})", by_det.curves, by_det.n);
    println!("F = {}", by_det.poly);
    println!("same support: {}", curveset_equal_support(&by_catalog, &by_det.curves));

    let geo = geometric_representation(&CoxeterMatrix::dihedral(4)?);
    let (a, b) = geo.pair(0, 1);
    let ps = spectrum_of_matrices(a, b, 64)?;
    println!("\ngeometric I2(4): {}", ps.curves);
    println!("{}", curvesets_to_json(&[PairCurves { i: 0, j: 1, curves: ps.curves }]));
    Ok(())
}
