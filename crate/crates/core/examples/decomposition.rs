//! Endomorphism algebras, locality, Krull-Schmidt decomposition and
//! isomorphism testing.

use taumutate::decomp::{
    are_isomorphic, decompose, end_algebra, is_indecomposable, is_local, radical,
};
use taumutate::io::{dims_label, load_algebra};
use taumutate::options::Options;
use taumutate::rep::{direct_sum, projective, simple};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let alg = load_algebra("examples/data/a3.json")?;
    let mut rng = Options::default().rng();
    let parts = vec![
        projective(&alg, 0)?,
        simple(&alg, 1)?,
        simple(&alg, 1)?,
        projective(&alg, 1)?,
    ];
    let m = direct_sum(&alg, &parts)?.sum;

    let e = end_algebra(&m)?;
    println!(
        "End(M): dim {}, radical dim {}, local {}",
        e.dim(),
        radical(&e)?.cols(),
        is_local(&e)?
    );
    println!("M indecomposable: {}", is_indecomposable(&m)?);
    for (summand, mult) in decompose(&m, &mut rng)? {
        println!("  {} x {}", dims_label(summand.dims()), mult);
    }

    let p = projective(&alg, 0)?;
    println!("P(1) indecomposable: {}", is_indecomposable(&p)?);
    println!("P(1) ~ P(1): {}", are_isomorphic(&p, &p, &mut rng)?);
    println!(
        "P(1) ~ P(2): {}",
        are_isomorphic(&p, &projective(&alg, 1)?, &mut rng)?
    );
    Ok(())
}
