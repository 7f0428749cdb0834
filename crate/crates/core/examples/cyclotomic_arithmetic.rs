//! Exact arithmetic in cyclotomic fields.
//!
//! Run with `cargo run --example cyclotomic_arithmetic`.

use coxspec::exactnum::{cyclotomic_polynomial, CyclotomicNumber};

fn main() -> coxspec::Result<()> {
    for n in [1, 2, 3, 4, 6, 8, 12] {
        println!("Phi_{n}(x) = {}", cyclotomic_polynomial(n));
    }

    let z5 = CyclotomicNumber::root(5, 1);
    let c = CyclotomicNumber::two_cos(1, 5);
    println!("2cos(2pi/5) = {c} ~ {:.6}", c.approx().0);
    // golden ratio relation: c^2 + c - 1 = 0
    let lhs = &(&c * &c) + &c;
    println!("c^2 + c = {lhs}");

    let x = &z5 + &CyclotomicNumber::from_i64(2);
    let inv = x.inv()?;
    println!("1/(z5 + 2) = {inv}");
    println!("check: {}", &x * &inv);

    // mixed orders meet in the lcm field and shrink back when possible
    let i = CyclotomicNumber::root(4, 1);
    let w = CyclotomicNumber::root(3, 1);
    let p = &i * &w;
    println!("i * z3 = {p} (order {})", p.order());
    println!("(i * z3)^12 = {}", p.pow(12));
    println!("2cos(pi/4) identified as 2cos(2pi * {:?})", CyclotomicNumber::two_cos(1, 8).match_two_cos(24));
    Ok(())
}
