//! SVG rendering of a curve set.
//!
//! Run with `cargo run --example plot_spectrum -- out.svg`; without an
//! argument the document goes to stdout.

use coxspec::dihedral::RepSpec;
use coxspec::spectrum::{emit_svg, spectrum_of_spec};

fn main() -> coxspec::Result<()> {
    let curves = spectrum_of_spec(&RepSpec::regular(8)?)?;
    match std::env::args().nth(1) {
        Some(path) => {
            let mut f = std::fs::File::create(&path).map_err(|e| coxspec::Error::SinkFailure(e.to_string()))?;
            emit_svg(&curves, 2.5, &mut f)?;
            eprintln!("wrote {path}");
        }
        None => emit_svg(&curves, 2.5, &mut std::io::stdout().lock())?,
    }
    Ok(())
}
