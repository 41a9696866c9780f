//! Set operations over a labelled universe: union, intersection,
//! complement, containment, and De Morgan duality.
//!
//! Run with `cargo run --example set_algebra`.

use bipolar_neutrosophic::{BnsSet, SetError};

fn main() -> Result<(), SetError> {
    let universe = ["x1", "x2", "x3"];
    // Two assessments of the same three sites.
    let a = BnsSet::from_components(
        universe,
        [
            ("x1", [0.5, 0.3, 0.1, -0.6, -0.4, -0.01]),
            ("x2", [0.3, 0.2, 0.7, -0.02, -0.003, -0.5]),
            ("x3", [0.8, 0.05, 0.4, -0.1, -0.5, -0.06]),
        ],
    )?;
    let b = BnsSet::from_components(
        universe,
        [
            ("x1", [0.4, 0.6, 0.3, -0.3, -0.5, -0.1]),
            ("x2", [0.5, 0.1, 0.4, -0.2, -0.3, -0.3]),
            ("x3", [0.2, 0.5, 0.6, -0.4, -0.6, -0.7]),
        ],
    )?;

    let print_set = |name: &str, set: &BnsSet| {
        println!("{name}:");
        for (label, value) in set.iter() {
            println!("  {label}: {value}");
        }
    };

    print_set("A", &a);
    print_set("B", &b);
    print_set("A ∪ B", &a.union(&b)?);
    print_set("A ∩ B", &a.intersection(&b)?);
    print_set("Aᶜ", &a.complement());

    println!();
    println!("A ⊆ B            : {}", a.is_subset(&b)?);
    println!("A ⊆ A            : {}", a.is_subset(&a)?);
    println!(
        "(Aᶜ)ᶜ = A        : {}",
        a.complement().complement().equals(&a)?
    );

    // De Morgan: the complement of the union is the intersection of the
    // complements.
    let lhs = a.union(&b)?.complement();
    let rhs = a.complement().intersection(&b.complement())?;
    println!("(A ∪ B)ᶜ = Aᶜ ∩ Bᶜ: {}", lhs.equals(&rhs)?);
    Ok(())
}
