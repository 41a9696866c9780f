//! End-to-end decision problem: read a four-car, four-criterion matrix from
//! the JSON fixture next to this file, aggregate each row, and rank.
//!
//! Run with `cargo run --example car_selection`.

use std::path::Path;

use bipolar_neutrosophic::io::{parse_problem_json, render_report, ReportStyle};
use bipolar_neutrosophic::AggregationOp;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fixture = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("examples")
        .join("car_selection.json");
    let problem = parse_problem_json(&std::fs::read(&fixture)?, false)?;

    println!(
        "{} alternatives x {} criteria, weights {:?}",
        problem.alternatives().len(),
        problem.criteria().len(),
        problem.weights().as_slice()
    );
    println!();

    for op in [AggregationOp::Average, AggregationOp::Geometric] {
        println!("--- {op} operator ---");
        print!(
            "{}",
            render_report(&problem.rank(op), ReportStyle::Table, 3)
        );
        println!();
    }
    Ok(())
}
