mod common;

use common::{load, random_cone, rng};
use taumutate::complex::{cone, hom_htpy, minimize, ChainMap, ProjComplex};
use taumutate::error::Error;
use taumutate::options::Options;
use taumutate::proj::PMap;
use taumutate::silting::{
    has_local_htpy_end, hom_htpy_two_term, is_two_term_silting, left_silting_mutation,
    ApproximationProblem, SiltingMutation, TwoTermComplex,
};

fn stalks(alg: &taumutate::algebra::Algebra) -> Vec<TwoTermComplex> {
    (0..alg.n())
        .map(|v| TwoTermComplex::stalk(alg, v))
        .collect()
}

/// `P(2) -> P(1)` on A2, resolving S(1).
fn s1_complex(alg: &taumutate::algebra::Algebra) -> TwoTermComplex {
    let mut d = PMap::zero(alg, &[1], &[0]);
    let a = alg.basis_between(0, 1)[0];
    d.entry_mut(0, 0)[a] = 1;
    TwoTermComplex::new(d)
}

#[test]
fn homotopy_hom_dimensions() {
    let alg = load("a2");
    let lambda = TwoTermComplex::direct_sum(&stalks(&alg));
    assert_eq!(hom_htpy_two_term(&lambda, &lambda, 0).unwrap().dim(), 3);
    assert_eq!(hom_htpy_two_term(&lambda, &lambda, 1).unwrap().dim(), 0);
    let s1 = s1_complex(&alg);
    let p2 = TwoTermComplex::stalk(&alg, 1);
    assert_eq!(hom_htpy_two_term(&s1, &s1, 0).unwrap().dim(), 1);
    // Ext^1(S(1), P(2)) = k
    assert_eq!(hom_htpy_two_term(&s1, &p2, 1).unwrap().dim(), 1);
    assert_eq!(hom_htpy_two_term(&p2, &s1, 1).unwrap().dim(), 0);
    assert_eq!(hom_htpy_two_term(&p2, &s1, 0).unwrap().dim(), 0);
}

#[test]
fn null_homotopies_have_witnesses() {
    let alg = load("a2");
    let s1 = s1_complex(&alg).as_complex();
    // the map S1 -> S1 given by (0 on P(2), 0 on P(1)) plus a homotopy
    let hom = hom_htpy(&s1, &s1, 0);
    assert_eq!(hom.boundaries().cols(), 0);
    let id = ChainMap::identity(&s1);
    assert!(id.is_chain_map());
    assert!(!hom.is_null_homotopic(&id));
    // identity of a contractible complex is null-homotopic
    let c = ProjComplex::new(
        &alg,
        -1,
        vec![vec![0], vec![0]],
        vec![PMap::identity(&alg, &[0])],
    );
    let hc = hom_htpy(&c, &c, 0);
    assert_eq!(hc.dim(), 0);
    let w = hc.witness(&ChainMap::identity(&c)).expect("contractible");
    assert_eq!(w.maps.len(), 2);
}

#[test]
fn silting_checks() {
    let alg = load("a2");
    assert!(is_two_term_silting(&stalks(&alg)));
    let shifted: Vec<_> = (0..2)
        .map(|v| TwoTermComplex::shifted_stalk(&alg, v))
        .collect();
    assert!(is_two_term_silting(&shifted));
    assert!(!is_two_term_silting(&stalks(&alg)[..1]));
    assert!(!is_two_term_silting(&[
        s1_complex(&alg),
        TwoTermComplex::stalk(&alg, 1)
    ]));
    assert!(is_two_term_silting(&[
        s1_complex(&alg),
        TwoTermComplex::stalk(&alg, 0)
    ]));
}

#[test]
fn mutation_examples() {
    let alg = load("a2");
    let opts = Options::default();
    match left_silting_mutation(&stalks(&alg), 0, &opts).unwrap() {
        SiltingMutation::Mutated {
            summands,
            new_summand,
            ..
        } => {
            assert_eq!(new_summand, TwoTermComplex::shifted_stalk(&alg, 0));
            assert_eq!(summands[1], TwoTermComplex::stalk(&alg, 1));
        }
        other => panic!("{other:?}"),
    }
    match left_silting_mutation(&stalks(&alg), 1, &opts.verifying()).unwrap() {
        SiltingMutation::Mutated { new_summand, .. } => {
            assert_eq!(new_summand.g_vector(), vec![1, -1]);
            assert_eq!(new_summand.h0().dims(), &[1, 0]);
        }
        other => panic!("{other:?}"),
    }
    let shifted: Vec<_> = (0..2)
        .map(|v| TwoTermComplex::shifted_stalk(&alg, v))
        .collect();
    for k in 0..2 {
        assert!(matches!(
            left_silting_mutation(&shifted, k, &opts).unwrap(),
            SiltingMutation::NotTwoTerm { .. }
        ));
    }
    assert!(matches!(
        left_silting_mutation(&stalks(&alg), 2, &opts),
        Err(Error::IndexOutOfRange { index: 2, len: 2 })
    ));
    assert!(matches!(
        left_silting_mutation(
            &[s1_complex(&alg), TwoTermComplex::stalk(&alg, 1)],
            0,
            &opts
        ),
        Err(Error::NotSilting(_))
    ));
}

#[test]
fn mutation_results_are_silting_with_minimal_approximations() {
    let opts = Options::default().verifying();
    for name in common::SUITE {
        let alg = load(name);
        let start = stalks(&alg);
        for k in 0..alg.n() {
            let family: Vec<ProjComplex> = start.iter().map(TwoTermComplex::as_complex).collect();
            let others: Vec<usize> = (0..alg.n()).filter(|&j| j != k).collect();
            let problem = ApproximationProblem::new(&family[k], &family, &others);
            let (summands, approx) = match left_silting_mutation(&start, k, &opts).unwrap() {
                SiltingMutation::Mutated {
                    summands,
                    approximation,
                    ..
                } => (Some(summands), approximation),
                SiltingMutation::NotTwoTerm { approximation, .. } => (None, approximation),
            };
            assert!(problem.is_approximation(&approx.components));
            assert!(problem.is_minimal(&approx.components));
            assert!(approx.map.is_chain_map());
            if let Some(s) = summands {
                assert!(is_two_term_silting(&s), "{name} {k}");
                for q in &s {
                    assert!(has_local_htpy_end(&q.as_complex()).unwrap());
                }
            }
        }
    }
}

#[test]
fn cones_and_minimization() {
    let alg = load("a3");
    let x = TwoTermComplex::stalk(&alg, 0).as_complex();
    let c = cone(&ChainMap::identity(&x));
    assert!(c.is_complex());
    assert!(minimize(&c).is_zero());

    let mut r = rng(21);
    for name in common::SUITE {
        let alg = load(name);
        for _ in 0..10 {
            let c = random_cone(&alg, &mut r);
            assert!(c.is_complex(), "{name}");
            let m = minimize(&c);
            assert!(m.is_complex());
            for d in m.diffs() {
                assert!(d.invertible_entry().is_none());
            }
            let total = |c: &ProjComplex| c.terms().iter().map(Vec::len).sum::<usize>();
            assert_eq!((total(&c) - total(&m)) % 2, 0);
        }
    }
}

#[test]
fn g_vectors_and_h0() {
    let alg = load("a2");
    assert_eq!(TwoTermComplex::stalk(&alg, 0).g_vector(), vec![1, 0]);
    assert_eq!(
        TwoTermComplex::shifted_stalk(&alg, 1).g_vector(),
        vec![0, -1]
    );
    assert_eq!(s1_complex(&alg).g_vector(), vec![1, -1]);
    assert!(TwoTermComplex::shifted_stalk(&alg, 1).h0().is_zero());
    assert_eq!(
        TwoTermComplex::shifted_stalk(&alg, 1).shifted_stalk_vertex(),
        Some(1)
    );
    assert_eq!(s1_complex(&alg).shifted_stalk_vertex(), None);
}
