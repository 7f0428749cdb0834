pub mod analysis;
pub mod bipoly;
pub mod cli;
pub mod dihedral;
pub mod error;
pub mod exactnum;
pub mod formats;
pub mod selftest;
pub mod spectrum;

pub use error::{Error, Result};
