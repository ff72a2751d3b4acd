//! Build bound quiver algebras and look at bases, projectives and the
//! opposite algebra.

use taumutate::algebra::{build_algebra, FieldSpec, Quiver, RelationSpec};
use taumutate::io::{dims_label, load_algebra};
use taumutate::rep::projective;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // A3 with the composite of its two arrows killed.
    let q = Quiver::new(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")])?;
    let alg = build_algebra(
        FieldSpec::default(),
        q,
        &[RelationSpec::monomial(&["a", "b"])],
    )?;
    println!(
        "kA3/rad^2: dim {}, basis {:?}",
        alg.dim(),
        alg.basis_labels()
    );
    for v in 0..alg.n() {
        println!(
            "  P({}) = {}",
            alg.vertex_label(v),
            dims_label(projective(&alg, v)?.dims())
        );
    }

    let op = alg.opposite();
    println!(
        "opposite: dim {}, arrows {:?}",
        op.dim(),
        op.quiver()
            .arrows()
            .iter()
            .map(|a| &a.name)
            .collect::<Vec<_>>()
    );

    // A commutativity relation on the commutative square.
    let sq = Quiver::new(
        &["1", "2", "3", "4"],
        &[
            ("a", "1", "2"),
            ("b", "2", "4"),
            ("c", "1", "3"),
            ("d", "3", "4"),
        ],
    )?;
    let comm = RelationSpec::new(vec![
        (1, vec!["a".into(), "b".into()]),
        (-1, vec!["c".into(), "d".into()]),
    ]);
    let square = build_algebra(FieldSpec::default(), sq, &[comm])?;
    println!("commutative square: dim {}", square.dim());

    let dual = load_algebra("examples/data/dual_numbers.json")?;
    println!("k[x]/(x^2) from file: dim {}, p {}", dual.dim(), dual.p());
    Ok(())
}
