//! Faithfulness of dihedral representations, by the gcd criterion and by
//! kernel enumeration.
//!
//! Run with `cargo run --example faithfulness`.

use coxspec::analysis::{is_faithful_oracle, is_faithful_theorem, kernel_of_spec};
use coxspec::dihedral::{IrrepLabel, RepSpec};
use coxspec::selftest::support_specs;

use IrrepLabel::{OneDim, TwoDim};

fn main() -> coxspec::Result<()> {
    let cases = [
        RepSpec::from_support(2, [OneDim(2), OneDim(3)])?,
        RepSpec::from_support(6, [TwoDim(2), OneDim(3), OneDim(4)])?,
        RepSpec::from_support(12, [OneDim(3), TwoDim(3)])?,
        RepSpec::from_support(12, [OneDim(3), TwoDim(3), TwoDim(4)])?,
        RepSpec::from_support(5, [OneDim(1)])?,
    ];
    for spec in &cases {
        let labels: Vec<String> = spec.labels().map(|l| l.to_string()).collect();
        let kernel: Vec<String> = kernel_of_spec(spec)?.iter().map(ToString::to_string).collect();
        println!("n = {:2}  {:<40} {}", spec.n(), labels.join(" + "), is_faithful_theorem(spec)?);
        println!("       kernel {{{}}}", kernel.join(", "));
    }

    let mut total = 0;
    let mut faithful = 0;
    for n in 2..=16 {
        for spec in support_specs(n, 3) {
            let t = is_faithful_theorem(&spec)?;
            assert_eq!(t.faithful, is_faithful_oracle(&spec)?.faithful);
            total += 1;
            faithful += usize::from(t.faithful);
        }
    }
    println!("\n{faithful} of {total} supports with n <= 16 are faithful; criterion and enumeration agree");
    Ok(())
}
