mod common;

use common::{load, random_module, rng};
use rand::Rng;
use taumutate::decomp::are_isomorphic;
use taumutate::options::Options;
use taumutate::proj::{ar_translate, in_fac, is_tau_rigid_pair, minimal_presentation, proj_sum};
use taumutate::rep::{
    cokernel, direct_sum, hom_basis, image, kernel, projective, simple, top_and_radical, ModuleMap,
    Representation,
};

fn random_hom<R: Rng>(m: &Representation, n: &Representation, r: &mut R) -> ModuleMap {
    let basis = hom_basis(m, n).unwrap();
    let coeffs: Vec<u64> = basis
        .iter()
        .map(|_| r.gen_range(0..m.algebra().p()))
        .collect();
    if basis.is_empty() {
        ModuleMap::zero(m, n)
    } else {
        ModuleMap::combination(&basis, &coeffs)
    }
}

#[test]
fn hom_from_projective_is_evaluation() {
    let mut r = rng(1);
    for name in common::SUITE {
        let alg = load(name);
        for _ in 0..20 {
            let m = random_module(&alg, &mut r, 3);
            for i in 0..alg.n() {
                let p = projective(&alg, i).unwrap();
                assert_eq!(hom_basis(&p, &m).unwrap().len(), m.dim_at(i), "{name}");
            }
        }
    }
}

#[test]
fn kernel_image_cokernel_are_exact() {
    let mut r = rng(2);
    for name in common::SUITE {
        let alg = load(name);
        for _ in 0..15 {
            let m = random_module(&alg, &mut r, 3);
            let n = random_module(&alg, &mut r, 3);
            let f = random_hom(&m, &n, &mut r);
            assert!(f.commutes());
            let (k, inc) = kernel(&f);
            let (im, _) = image(&f);
            let (c, proj) = cokernel(&f);
            for v in 0..alg.n() {
                assert_eq!(k.dim_at(v) + f.rank_at(v), m.dim_at(v));
                assert_eq!(im.dim_at(v), f.rank_at(v));
                assert_eq!(c.dim_at(v) + f.rank_at(v), n.dim_at(v));
            }
            assert!(inc.then(&f).is_zero());
            assert!(f.then(&proj).is_zero());
            assert!(k.satisfies_relations() && c.satisfies_relations());
        }
    }
}

#[test]
fn direct_sums_add_dimensions() {
    let alg = load("a2");
    let p1 = projective(&alg, 0).unwrap();
    let p2 = projective(&alg, 1).unwrap();
    let s = direct_sum(&alg, &[p1.clone(), p2.clone()]).unwrap();
    assert_eq!(s.sum.dims(), &[1, 2]);
    for (inj, pr) in s.injections.iter().zip(&s.projections) {
        assert!(inj.then(pr).is_isomorphism());
    }
    assert!(s.injections[0].then(&s.projections[1]).is_zero());
}

#[test]
fn tops_and_presentations() {
    let alg = load("a3");
    let p1 = projective(&alg, 0).unwrap();
    let (top, rad, _) = top_and_radical(&p1);
    assert_eq!(top, vec![1, 0, 0]);
    assert_eq!(rad.dims(), &[0, 1, 1]);

    let mut r = rng(3);
    for name in common::SUITE {
        let alg = load(name);
        for _ in 0..10 {
            let m = random_module(&alg, &mut r, 3);
            let pres = minimal_presentation(&m);
            let (c, _) = cokernel(&pres.d.to_module_map());
            assert!(
                are_isomorphic(&c, &m, &mut Options::default().rng()).unwrap(),
                "{name}"
            );
            // minimality: P0 is the projective cover of the top
            let (top, _, _) = top_and_radical(&m);
            for v in 0..alg.n() {
                assert_eq!(pres.p0.iter().filter(|&&x| x == v).count(), top[v]);
            }
            assert!(pres.d.invertible_entry().is_none());
            assert_eq!(proj_sum(&alg, &pres.p0).dims(), pres.cover.source().dims());
        }
    }
}

#[test]
fn translate_examples() {
    let mut rr = Options::default().rng();
    let alg = load("a2");
    let s1 = simple(&alg, 0).unwrap();
    let s2 = simple(&alg, 1).unwrap();
    assert!(are_isomorphic(&ar_translate(&s1), &s2, &mut rr).unwrap());
    assert!(ar_translate(&s2).is_zero());
    for name in common::SUITE {
        let alg = load(name);
        for v in 0..alg.n() {
            assert!(ar_translate(&projective(&alg, v).unwrap()).is_zero());
        }
    }
    let dual = load("dual_numbers");
    let s = simple(&dual, 0).unwrap();
    assert!(are_isomorphic(&ar_translate(&s), &s, &mut rr).unwrap());
    let a3 = load("a3");
    // τ S(2) = S(3) and τ of the interval [1,2] is [2,3]
    assert_eq!(ar_translate(&simple(&a3, 1).unwrap()).dims(), &[0, 0, 1]);
    assert!(ar_translate(&Representation::zero(&a3)).is_zero());
}

#[test]
fn fac_and_rigidity() {
    let alg = load("a2");
    let p1 = projective(&alg, 0).unwrap();
    let p2 = projective(&alg, 1).unwrap();
    let s1 = simple(&alg, 0).unwrap();
    let s2 = simple(&alg, 1).unwrap();
    assert!(in_fac(&s1, &p1).unwrap());
    assert!(!in_fac(&p1, &s1).unwrap());
    assert!(!in_fac(&s2, &s1).unwrap());
    assert!(in_fac(&Representation::zero(&alg), &s1).unwrap());

    let sum = |ms: &[Representation]| direct_sum(&alg, ms).unwrap().sum;
    assert!(is_tau_rigid_pair(&sum(&[p1.clone(), p2]), &[]).unwrap());
    assert!(is_tau_rigid_pair(&sum(&[p1, s1.clone()]), &[]).unwrap());
    // τ S(1) = S(2), so Hom(S(2), τ S(1)) ≠ 0
    assert!(!is_tau_rigid_pair(&sum(&[s1.clone(), s2.clone()]), &[]).unwrap());
    assert!(is_tau_rigid_pair(&s2, &[0]).unwrap());
    assert!(!is_tau_rigid_pair(&s1, &[0]).unwrap());
}
