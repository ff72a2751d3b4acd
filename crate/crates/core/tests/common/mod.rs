#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use taumutate::algebra::Algebra;
use taumutate::complex::{cone, hom_htpy, ProjComplex};
use taumutate::decomp::{are_isomorphic, is_indecomposable};
use taumutate::io::AlgebraJson;
use taumutate::linalg::Matrix;
use taumutate::proj::{ar_translate, PMap};
use taumutate::rep::{cokernel, hom_basis, Representation};
use taumutate::silting::TwoTermComplex;

pub const SUITE: [&str; 5] = ["a1", "a2", "a3", "dual_numbers", "a3_rad2"];

pub fn data_path(name: &str) -> String {
    format!("{}/examples/data/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

pub fn algebra_json(name: &str) -> AlgebraJson {
    let text = std::fs::read_to_string(data_path(name)).unwrap();
    serde_json::from_str(&text).unwrap()
}

pub fn load(name: &str) -> Algebra {
    algebra_json(name).build().unwrap()
}

pub fn load_with_prime(name: &str, p: u64) -> Algebra {
    let mut j = algebra_json(name);
    j.field.p = p;
    j.build().unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_vertices<R: Rng>(alg: &Algebra, rng: &mut R, max: usize) -> Vec<usize> {
    let len = rng.gen_range(0..=max);
    let mut v: Vec<usize> = (0..len).map(|_| rng.gen_range(0..alg.n())).collect();
    v.sort_unstable();
    v
}

/// A map between the given projective sums with uniformly random entries.
pub fn random_pmap<R: Rng>(alg: &Algebra, rng: &mut R, source: &[usize], target: &[usize]) -> PMap {
    let p = alg.p();
    let mut m = PMap::zero(alg, source, target);
    for (l, &j) in target.iter().enumerate() {
        for (k, &i) in source.iter().enumerate() {
            for &b in alg.basis_between(j, i) {
                m.entry_mut(l, k)[b] = rng.gen_range(0..p);
            }
        }
    }
    m
}

/// The cokernel of a random map of projectives; relations hold by
/// construction.
pub fn random_module<R: Rng>(alg: &Algebra, rng: &mut R, max_terms: usize) -> Representation {
    let p0 = random_vertices(alg, rng, max_terms);
    let p1 = random_vertices(alg, rng, max_terms);
    let d = random_pmap(alg, rng, &p1, &p0);
    cokernel(&d.to_module_map()).0
}

pub fn random_two_term<R: Rng>(alg: &Algebra, rng: &mut R, max_terms: usize) -> TwoTermComplex {
    let p0 = random_vertices(alg, rng, max_terms);
    let p1 = random_vertices(alg, rng, max_terms);
    TwoTermComplex::new(random_pmap(alg, rng, &p1, &p0))
}

/// Cone of a random chain map between random two-term complexes; about a
/// third of the time the target contains a copy of the source and the map
/// includes the identity onto it, so the cone has contractible summands.
pub fn random_cone<R: Rng>(alg: &Algebra, rng: &mut R) -> ProjComplex {
    let f = alg.fp();
    let x = random_two_term(alg, rng, 2).as_complex();
    let z = random_two_term(alg, rng, 2).as_complex();
    let y = if rng.gen_range(0..3) == 0 {
        ProjComplex::direct_sum(&[x.clone(), z.clone()])
    } else {
        z
    };
    let hom = hom_htpy(&x, &y, 0);
    let cyc = hom.cycles();
    let mut v = vec![0u64; hom.ambient_dim()];
    for c in 0..cyc.cols() {
        let s = rng.gen_range(0..alg.p());
        for (r, x) in cyc.column(c).into_iter().enumerate() {
            v[r] = f.add(v[r], f.mul(s, x));
        }
    }
    cone(&hom.chain_map(&v))
}

fn mat_mul(p: u64, a: &[u64], b: &[u64], n: usize, m: usize, k: usize) -> Vec<u64> {
    // a: n x m, b: m x k
    let mut out = vec![0; n * k];
    for i in 0..n {
        for j in 0..m {
            let x = a[i * m + j];
            if x == 0 {
                continue;
            }
            for l in 0..k {
                out[i * k + l] = (out[i * k + l] + x * b[j * k + l]) % p;
            }
        }
    }
    out
}

fn satisfies(alg: &Algebra, dims: &[usize], maps: &[Vec<u64>]) -> bool {
    let p = alg.p();
    let arrows = alg.quiver().arrows();
    for (s, t, terms) in alg.relations() {
        let mut acc = vec![0u64; dims[t] * dims[s]];
        for (c, path) in terms {
            // identity at s, then each arrow applied on the left
            let mut cur: Vec<u64> = (0..dims[s] * dims[s])
                .map(|i| u64::from(i / dims[s] == i % dims[s]))
                .collect();
            let mut rows = dims[s];
            for &a in path {
                let tgt = dims[arrows[a].target];
                cur = mat_mul(p, &maps[a], &cur, tgt, rows, dims[s]);
                rows = tgt;
            }
            for (x, y) in acc.iter_mut().zip(cur) {
                *x = (*x + c * y) % p;
            }
        }
        if acc.iter().any(|&x| x != 0) {
            return false;
        }
    }
    true
}

fn dim_vectors(n: usize, total: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in dim_vectors(n - 1, total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All indecomposables up to isomorphism, found by trying every
/// representation of every dimension vector of increasing total dimension
/// until a whole layer contains none. Only practical for tiny `p`.
pub fn indecomposables_exhaustive(alg: &Algebra, max_total: usize) -> Vec<Representation> {
    let p = alg.p();
    let arrows = alg.quiver().arrows().to_vec();
    let mut rng = rng(7);
    let mut found: Vec<Representation> = Vec::new();
    for total in 1..=max_total {
        let before = found.len();
        for dims in dim_vectors(alg.n(), total) {
            let sizes: Vec<usize> = arrows
                .iter()
                .map(|a| dims[a.target] * dims[a.source])
                .collect();
            let entries: usize = sizes.iter().sum();
            let count = p.pow(entries as u32);
            for code in 0..count {
                let mut c = code;
                let maps: Vec<Vec<u64>> = sizes
                    .iter()
                    .map(|&sz| {
                        (0..sz)
                            .map(|_| {
                                let d = c % p;
                                c /= p;
                                d
                            })
                            .collect()
                    })
                    .collect();
                if !satisfies(alg, &dims, &maps) {
                    continue;
                }
                let mats = arrows
                    .iter()
                    .zip(&maps)
                    .map(|(a, m)| Matrix::from_vec(dims[a.target], dims[a.source], m.clone()))
                    .collect();
                let m = Representation::new(alg, dims.clone(), mats).unwrap();
                if !is_indecomposable(&m).unwrap() {
                    continue;
                }
                let known = found
                    .iter()
                    .any(|k| k.dims() == m.dims() && are_isomorphic(k, &m, &mut rng).unwrap());
                if !known {
                    found.push(m);
                }
            }
        }
        if found.len() == before {
            return found;
        }
    }
    panic!("indecomposables of total dimension {max_total} still appearing");
}

/// Support τ-tilting pairs as sets of summand labels: `Ok(i)` is the i-th
/// indecomposable, `Err(v)` the projective vertex `v`.
pub type PairSet = Vec<Result<usize, usize>>;

/// Maximal τ-rigid pairs among the given indecomposables, and the number of
/// unordered pairs of them differing in exactly one summand.
pub fn support_tau_tilting_oracle(alg: &Algebra, inds: &[Representation]) -> (Vec<PairSet>, usize) {
    let taus: Vec<Representation> = inds.iter().map(ar_translate).collect();
    let hom0 = |a: &Representation, b: &Representation| hom_basis(a, b).unwrap().is_empty();
    let mut items: Vec<Result<usize, usize>> = (0..inds.len())
        .filter(|&i| hom0(&inds[i], &taus[i]))
        .map(Ok)
        .collect();
    items.extend((0..alg.n()).map(Err));
    let compatible = |a: &Result<usize, usize>, b: &Result<usize, usize>| match (a, b) {
        (Ok(i), Ok(j)) => hom0(&inds[*i], &taus[*j]) && hom0(&inds[*j], &taus[*i]),
        (Ok(i), Err(v)) | (Err(v), Ok(i)) => inds[*i].dim_at(*v) == 0,
        (Err(_), Err(_)) => true,
    };
    let m = items.len();
    let compat: Vec<Vec<bool>> = (0..m)
        .map(|a| {
            (0..m)
                .map(|b| a != b && compatible(&items[a], &items[b]))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn extend(
        start: usize,
        n: usize,
        compat: &[Vec<bool>],
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if stack.len() == n {
            out.push(stack.clone());
            return;
        }
        for c in start..compat.len() {
            if stack.iter().all(|&s| compat[s][c]) {
                stack.push(c);
                extend(c + 1, n, compat, stack, out);
                stack.pop();
            }
        }
    }
    extend(0, alg.n(), &compat, &mut stack, &mut out);
    let sets: Vec<PairSet> = out
        .iter()
        .map(|s| s.iter().map(|&i| items[i]).collect())
        .collect();
    let mut edges = 0;
    for a in 0..sets.len() {
        for b in a + 1..sets.len() {
            let shared = sets[a].iter().filter(|x| sets[b].contains(x)).count();
            if shared + 1 == alg.n() {
                edges += 1;
            }
        }
    }
    (sets, edges)
}
