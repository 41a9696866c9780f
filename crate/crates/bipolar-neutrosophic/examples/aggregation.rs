//! Weighted aggregation: combining one number per criterion into a single
//! number with the average and geometric operators.
//!
//! Run with `cargo run --example aggregation`.

use bipolar_neutrosophic::{weighted_average, weighted_geometric, Bnn, WeightVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // One alternative judged against four criteria.
    let judgements = vec![
        Bnn::new(0.5, 0.7, 0.2, -0.7, -0.3, -0.6)?,
        Bnn::new(0.4, 0.4, 0.5, -0.7, -0.8, -0.4)?,
        Bnn::new(0.7, 0.7, 0.5, -0.8, -0.7, -0.6)?,
        Bnn::new(0.1, 0.5, 0.7, -0.5, -0.2, -0.8)?,
    ];
    let weights = WeightVector::new(vec![0.5, 0.25, 0.125, 0.125])?;

    let avg = weighted_average(&judgements, &weights)?;
    let geo = weighted_geometric(&judgements, &weights)?;
    println!("average   = {avg}");
    println!("geometric = {geo}");
    println!(
        "scores    = {:.6} (avg) vs {:.6} (geo)",
        avg.score(),
        geo.score()
    );

    // Aggregating copies of one value returns that value (idempotency).
    let same = vec![judgements[0]; 4];
    let collapsed = weighted_average(&same, &weights)?;
    println!();
    println!("idempotent: {} -> {}", judgements[0], collapsed);

    // Proportional weights can be normalized instead of summing to 1.
    let proportions = WeightVector::normalized(vec![2.0, 1.0, 0.5, 0.5])?;
    println!("normalized weights: {:?}", proportions.as_slice());
    Ok(())
}
