//! Two-term complexes of projectives, homotopy Hom, cones and left silting
//! mutation.

use taumutate::complex::hom_htpy;
use taumutate::io::{load_algebra, ComplexJson};
use taumutate::options::Options;
use taumutate::silting::{
    is_two_term_silting, left_silting_mutation, SiltingMutation, TwoTermComplex,
};

fn show(label: &str, q: &TwoTermComplex) {
    println!(
        "  {label}: g = {:?}, H0 dims {:?}",
        q.g_vector(),
        q.h0().dims()
    );
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let alg = load_algebra("examples/data/a2.json")?;
    let opts = Options::default();

    // Λ = P(1) ⊕ P(2) as stalk complexes.
    let lambda = vec![
        TwoTermComplex::stalk(&alg, 0),
        TwoTermComplex::stalk(&alg, 1),
    ];
    println!("Λ silting: {}", is_two_term_silting(&lambda));
    let (a, b) = (lambda[0].as_complex(), lambda[1].as_complex());
    println!(
        "dim Hom(P(1), P(2)) = {}, dim Hom(P(2), P(1)) = {}",
        hom_htpy(&a, &b, 0).dim(),
        hom_htpy(&b, &a, 0).dim()
    );

    for k in 0..2 {
        println!("mutating Λ at summand {k}:");
        match left_silting_mutation(&lambda, k, &opts)? {
            SiltingMutation::Mutated {
                summands,
                new_summand,
                ..
            } => {
                show("new summand", &new_summand);
                println!("  result silting: {}", is_two_term_silting(&summands));
                println!(
                    "  literal: {}",
                    serde_json::to_string(&ComplexJson::of(&new_summand))?
                );
            }
            SiltingMutation::NotTwoTerm { .. } => println!("  leaves the two-term window"),
        }
    }

    let shifted: Vec<TwoTermComplex> = (0..2)
        .map(|v| TwoTermComplex::shifted_stalk(&alg, v))
        .collect();
    match left_silting_mutation(&shifted, 0, &opts)? {
        SiltingMutation::NotTwoTerm { .. } => println!("Λ[1] at 0: leaves the two-term window"),
        SiltingMutation::Mutated { .. } => println!("Λ[1] at 0: mutated"),
    }
    Ok(())
}
