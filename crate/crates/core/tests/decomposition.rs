mod common;

use common::{load, load_with_prime, random_module, rng};
use rand::Rng;
use taumutate::decomp::{
    are_isomorphic, decompose, end_algebra, is_indecomposable, is_local, radical,
};
use taumutate::error::Error;
use taumutate::linalg::Matrix;
use taumutate::options::Options;
use taumutate::rep::{direct_sum, projective, simple, Representation};

fn random_invertible<R: Rng>(n: usize, p: u64, r: &mut R) -> Matrix {
    let f = taumutate::linalg::Fp::new(p);
    loop {
        let data = (0..n * n).map(|_| r.gen_range(0..p)).collect();
        let m = Matrix::from_vec(n, n, data);
        if m.is_invertible(f) {
            return m;
        }
    }
}

fn scramble<R: Rng>(m: &Representation, r: &mut R) -> Representation {
    let change: Vec<Matrix> = m
        .dims()
        .iter()
        .map(|&d| random_invertible(d, m.algebra().p(), r))
        .collect();
    m.transport(&change)
}

#[test]
fn endomorphism_algebras() {
    let alg = load("a2");
    let lambda = direct_sum(
        &alg,
        &[projective(&alg, 0).unwrap(), projective(&alg, 1).unwrap()],
    )
    .unwrap()
    .sum;
    let e = end_algebra(&lambda).unwrap();
    assert_eq!(e.dim(), 3);
    assert_eq!(radical(&e).unwrap().cols(), 1);
    assert!(!is_local(&e).unwrap());
    let dual = load("dual_numbers");
    let e = end_algebra(&projective(&dual, 0).unwrap()).unwrap();
    assert_eq!(e.dim(), 2);
    assert!(is_local(&e).unwrap());
    assert!(matches!(
        end_algebra(&Representation::zero(&alg)),
        Err(Error::ZeroModule)
    ));
}

#[test]
fn indecomposables() {
    for name in common::SUITE {
        let alg = load(name);
        for v in 0..alg.n() {
            assert!(is_indecomposable(&projective(&alg, v).unwrap()).unwrap());
            assert!(is_indecomposable(&simple(&alg, v).unwrap()).unwrap());
        }
        assert!(!is_indecomposable(&Representation::zero(&alg)).unwrap());
    }
}

#[test]
fn decomposition_recovers_summands() {
    let mut r = rng(11);
    let mut o = Options::default().rng();
    for name in ["a2", "a3", "a3_rad2", "dual_numbers"] {
        let alg = load(name);
        let mut parts = Vec::new();
        for _ in 0..3 {
            let v = r.gen_range(0..alg.n());
            parts.push(if r.gen_bool(0.5) {
                projective(&alg, v).unwrap()
            } else {
                simple(&alg, v).unwrap()
            });
        }
        let m = scramble(&direct_sum(&alg, &parts).unwrap().sum, &mut r);
        let dec = decompose(&m, &mut o).unwrap();
        let total: usize = dec.iter().map(|(s, k)| s.total_dim() * k).sum();
        assert_eq!(total, m.total_dim());
        let count: usize = dec.iter().map(|(_, k)| k).sum();
        assert_eq!(count, 3, "{name}");
        for (s, _) in &dec {
            assert!(is_indecomposable(s).unwrap());
            assert!(parts.iter().any(|p| are_isomorphic(p, s, &mut o).unwrap()));
        }
        for (i, (a, _)) in dec.iter().enumerate() {
            for (b, _) in &dec[i + 1..] {
                assert!(!are_isomorphic(a, b, &mut o).unwrap());
            }
        }
    }
}

#[test]
fn random_modules_decompose_consistently() {
    let mut r = rng(12);
    let mut o = Options::default().rng();
    for name in common::SUITE {
        let alg = load(name);
        for _ in 0..8 {
            let m = random_module(&alg, &mut r, 3);
            let dec = decompose(&m, &mut o).unwrap();
            let mut dims = vec![0; alg.n()];
            for (s, k) in &dec {
                for v in 0..alg.n() {
                    dims[v] += s.dim_at(v) * k;
                }
            }
            assert_eq!(dims, m.dims());
            assert_eq!(
                dec.len() == 1 && dec[0].1 == 1,
                m.total_dim() > 0 && is_indecomposable(&m).unwrap()
            );
        }
    }
}

#[test]
fn isomorphism_under_base_change() {
    let mut r = rng(13);
    let mut o = Options::default().rng();
    for name in common::SUITE {
        let alg = load(name);
        for _ in 0..8 {
            let m = random_module(&alg, &mut r, 3);
            assert!(are_isomorphic(&m, &scramble(&m, &mut r), &mut o).unwrap());
        }
    }
    let alg = load("a2");
    assert!(!are_isomorphic(&simple(&alg, 0).unwrap(), &simple(&alg, 1).unwrap(), &mut o).unwrap());
    let kron = load("kronecker");
    // same dimension vector (1,1), different arrow maps
    let m1 = taumutate::io::parse_module(
        &kron,
        r#"{"dims":{"1":1,"2":1},"maps":{"a":[[1]],"b":[[0]]}}"#,
    )
    .unwrap();
    let m2 = taumutate::io::parse_module(
        &kron,
        r#"{"dims":{"1":1,"2":1},"maps":{"a":[[0]],"b":[[1]]}}"#,
    )
    .unwrap();
    let m3 = taumutate::io::parse_module(
        &kron,
        r#"{"dims":{"1":1,"2":1},"maps":{"a":[[2]],"b":[[0]]}}"#,
    )
    .unwrap();
    assert!(!are_isomorphic(&m1, &m2, &mut o).unwrap());
    assert!(are_isomorphic(&m1, &m3, &mut o).unwrap());
}

#[test]
fn small_characteristic_is_refused() {
    let alg = load_with_prime("a2", 2);
    let lambda = direct_sum(
        &alg,
        &[projective(&alg, 0).unwrap(), projective(&alg, 1).unwrap()],
    )
    .unwrap()
    .sum;
    assert!(matches!(
        decompose(&lambda, &mut Options::default().rng()),
        Err(Error::CharTooSmall { p: 2, .. })
    ));
    assert!(Error::CharTooSmall { p: 2, size: 3 }.is_infrastructure());
}
