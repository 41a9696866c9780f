//! Embedding simpler set models: bipolar fuzzy pairs and single-valued
//! neutrosophic triples both live inside the bipolar neutrosophic model.
//!
//! Run with `cargo run --example embeddings`.

use bipolar_neutrosophic::{BipolarFuzzySet, SvnSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // A bipolar fuzzy set keeps one positive and one negative membership
    // degree per element; the embedding zeroes the four other channels.
    let fuzzy = BipolarFuzzySet::new([("x1", (0.7, -0.2)), ("x2", (1.0, -1.0))])?;
    println!("bipolar fuzzy -> bipolar neutrosophic:");
    for (label, value) in fuzzy.to_bns().iter() {
        println!("  {label}: {value}");
    }

    // A single-valued neutrosophic set has truth/indeterminacy/falsity in
    // [0, 1]; the embedding zeroes the negative side.
    let svn = SvnSet::new([("x1", (0.5, 0.2, 0.3)), ("x2", (0.9, 0.1, 0.05))])?;
    println!("single-valued -> bipolar neutrosophic:");
    for (label, value) in svn.to_bns().iter() {
        println!("  {label}: {value}");
    }

    // The score of an embedded triple is an affine image of the
    // single-valued score, so both models rank identically.
    println!();
    for (label, (t, i, f)) in [("x1", (0.5, 0.2, 0.3)), ("x2", (0.9, 0.1, 0.05))] {
        let s_svn = (t + 1.0 - i + 1.0 - f) / 3.0;
        let s_bnn = svn.to_bns().value(label).unwrap().score();
        println!(
            "{label}: s_svn = {s_svn:.6}, s_bnn = {s_bnn:.6}, (3*s_svn + 1)/6 = {:.6}",
            (3.0 * s_svn + 1.0) / 6.0
        );
    }
    Ok(())
}
