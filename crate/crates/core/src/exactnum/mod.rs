//! Exact numbers: rationals, rational polynomials, cyclotomic field elements
//! and matrices over them.

mod cyclotomic;
pub mod intmath;
mod matrix;
mod rational;
mod unipoly;

pub use cyclotomic::{cyclotomic_polynomial, field_degree, CyclotomicNumber};
pub use matrix::CycMatrix;
pub use rational::Rational;
pub use unipoly::UniPoly;
