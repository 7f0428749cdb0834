//! Determinant of a linear pencil and its factorization into lines and
//! ellipses.
//!
//! Run with `cargo run --example pencil_determinant`.

use coxspec::bipoly::det_pencil;
use coxspec::dihedral::{assemble, IrrepLabel, RepSpec};
use coxspec::spectrum::{candidate_curves, factor_over};

fn main() -> coxspec::Result<()> {
    let spec = RepSpec::new(5, [(IrrepLabel::OneDim(2), 1), (IrrepLabel::TwoDim(1), 2), (IrrepLabel::TwoDim(2), 1)])?;
    let (a, b) = assemble(&spec)?;
    println!("pencil of size {}", a.dim());
    let f = det_pencil(&a, &b)?;
    println!("F = {f}");
    let curves = factor_over(&f, &candidate_curves(5))?;
    println!("factors: {curves}");
    println!("product matches: {}", curves.product() == f);
    Ok(())
}
