//! Core number algebra: construction, arithmetic, complement, and the
//! score/accuracy/certainty summaries.
//!
//! Run with `cargo run --example arithmetic`.

use bipolar_neutrosophic::{Bnn, BnnError};

fn main() -> Result<(), BnnError> {
    // "The road is good" — mostly true, slightly indeterminate, barely
    // false, with a weak counter-judgement on the negative side.
    let a = Bnn::new(0.5, 0.3, 0.1, -0.6, -0.4, -0.01)?;
    let b = Bnn::new(0.4, 0.6, 0.3, -0.3, -0.5, -0.1)?;

    println!("a                = {a}");
    println!("b                = {b}");
    println!("a + b            = {}", a.add(b));
    println!("a * b            = {}", a.multiply(b));
    println!("2a               = {}", a.scale(2.0)?);
    println!("a^2              = {}", a.power(2.0)?);
    println!("complement(a)    = {}", a.complement());

    // Doubling via addition and via scaling agree.
    let doubled = a.add(a);
    let scaled = a.scale(2.0)?;
    let drift = doubled
        .components()
        .iter()
        .zip(scaled.components())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0f64, f64::max);
    println!("max |a+a - 2a|   = {drift:.2e}");

    println!();
    println!("score(a)         = {:.6}", a.score());
    println!("accuracy(a)      = {:.6}", a.accuracy());
    println!("certainty(a)     = {:.6}", a.certainty());
    println!("a vs b           = {:?}", a.compare(&b));
    Ok(())
}
