//! Support τ-tilting pairs and two-term silting complexes, in both
//! directions, plus module-level mutation by a minimal approximation.

use taumutate::error::Error;
use taumutate::io::{dims_label, load_algebra, pair_label};
use taumutate::options::Options;
use taumutate::tautilt::{
    complex_to_pair, module_mutation_sequence, mutate_pair, pair_to_complex, PairMutation,
    SupportTauTiltingPair,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let alg = load_algebra("examples/data/a3.json")?;
    let opts = Options::default().verifying();
    let top = SupportTauTiltingPair::top(&alg);
    println!("(Λ, 0): {} key {}", pair_label(&top), top.key());

    let complexes = pair_to_complex(&top);
    let back = complex_to_pair(&complexes, &opts)?;
    println!("round trip keeps the key: {}", back.key() == top.key());

    let mut pair = top;
    'walk: for step in 0..4 {
        for k in 0..pair.module_summands().len() {
            let report = match module_mutation_sequence(&pair, k, &opts) {
                Err(Error::XInFacU { .. }) => continue,
                r => r?,
            };
            println!(
                "step {step}, summand {k}: Y = {}, indecomposable {}, agrees with silting side {}",
                dims_label(report.y.dims()),
                report.y_indecomposable,
                report.cross_check_ok
            );
            if let PairMutation::Mutated(next) = mutate_pair(&pair, k, &opts)? {
                println!("  -> {} key {}", pair_label(&next), next.key());
                pair = next;
                continue 'walk;
            }
        }
        break;
    }
    Ok(())
}
