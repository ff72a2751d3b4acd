//! Maps between finite direct sums of indecomposable projectives, minimal
//! projective presentations and the Auslander-Reiten translate.
//!
//! A sum of projectives is a list of vertices, one entry per copy of `P(v)`.
//! A map `⊕ P(i_k) -> ⊕ P(j_l)` is stored as the images of the generators:
//! entry `(l, k)` is an element of `e_{i_k} Λ e_{j_l}`, spanned by the basis
//! paths from `j_l` to `i_k`.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rep::{
    direct_sum, hom_basis, kernel, projective, radical_spans, ModuleMap, Representation,
};

#[derive(Clone, Debug)]
pub struct PMap {
    alg: Algebra,
    source: Vec<usize>,
    target: Vec<usize>,
    /// Row-major over `(l, k)`, dense algebra elements.
    entries: Vec<Vec<u64>>,
}

impl PartialEq for PMap {
    fn eq(&self, other: &Self) -> bool {
        std::sync::Arc::ptr_eq(&self.alg, &other.alg)
            && self.source == other.source
            && self.target == other.target
            && self.entries == other.entries
    }
}

impl PMap {
    pub fn zero(alg: &Algebra, source: &[usize], target: &[usize]) -> Self {
        PMap {
            alg: alg.clone(),
            source: source.to_vec(),
            target: target.to_vec(),
            entries: vec![vec![0; alg.dim()]; source.len() * target.len()],
        }
    }

    pub fn identity(alg: &Algebra, terms: &[usize]) -> Self {
        let mut m = PMap::zero(alg, terms, terms);
        for (k, &v) in terms.iter().enumerate() {
            m.entry_mut(k, k)[alg.idempotent(v)] = 1;
        }
        m
    }

    /// Checks that each entry lives in the right corner of the algebra.
    pub fn from_entries(
        alg: &Algebra,
        source: &[usize],
        target: &[usize],
        entries: Vec<Vec<u64>>,
    ) -> Result<Self> {
        if entries.len() != source.len() * target.len()
            || entries.iter().any(|e| e.len() != alg.dim())
        {
            return Err(Error::BadInput("map entries have the wrong shape".into()));
        }
        let m = PMap {
            alg: alg.clone(),
            source: source.to_vec(),
            target: target.to_vec(),
            entries,
        };
        for l in 0..target.len() {
            for k in 0..source.len() {
                for (b, &c) in m.entry(l, k).iter().enumerate() {
                    if c != 0
                        && (alg.basis_source(b) != target[l] || alg.basis_target(b) != source[k])
                    {
                        return Err(Error::BadInput(format!(
                            "entry ({l}, {k}) uses a path outside e_{} Λ e_{}",
                            source[k], target[l]
                        )));
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn source(&self) -> &[usize] {
        &self.source
    }

    pub fn target(&self) -> &[usize] {
        &self.target
    }

    pub fn entry(&self, l: usize, k: usize) -> &[u64] {
        &self.entries[l * self.source.len() + k]
    }

    pub fn entry_mut(&mut self, l: usize, k: usize) -> &mut Vec<u64> {
        let n = self.source.len();
        &mut self.entries[l * n + k]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.iter().all(|&c| c == 0))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &PMap) -> PMap {
        assert_eq!(
            self.target, other.source,
            "composing maps with mismatched terms"
        );
        let f = self.alg.fp();
        let mut out = PMap::zero(&self.alg, &self.source, &other.target);
        for m in 0..other.target.len() {
            for k in 0..self.source.len() {
                let mut acc = vec![0u64; self.alg.dim()];
                for l in 0..self.target.len() {
                    let a = self.entry(l, k);
                    let b = other.entry(m, l);
                    if a.iter().all(|&c| c == 0) || b.iter().all(|&c| c == 0) {
                        continue;
                    }
                    for (x, y) in acc.iter_mut().zip(self.alg.mul(a, b)) {
                        *x = f.add(*x, y);
                    }
                }
                *out.entry_mut(m, k) = acc;
            }
        }
        out
    }

    pub fn add(&self, other: &PMap) -> PMap {
        self.add_scaled(other, 1)
    }

    pub fn sub(&self, other: &PMap) -> PMap {
        self.add_scaled(other, self.alg.fp().neg(1))
    }

    /// `self + s * other`.
    pub fn add_scaled(&self, other: &PMap, s: u64) -> PMap {
        assert_eq!(self.source, other.source);
        assert_eq!(self.target, other.target);
        let f = self.alg.fp();
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            for (x, &y) in a.iter_mut().zip(b) {
                *x = f.add(*x, f.mul(s, y));
            }
        }
        out
    }

    pub fn scale(&self, s: u64) -> PMap {
        let f = self.alg.fp();
        let mut out = self.clone();
        for e in &mut out.entries {
            for x in e.iter_mut() {
                *x = f.mul(*x, s);
            }
        }
        out
    }

    /// Flattened coordinates, for linear algebra on spaces of maps.
    pub fn flatten(&self) -> Vec<u64> {
        self.entries.iter().flatten().copied().collect()
    }

    pub fn from_flat(alg: &Algebra, source: &[usize], target: &[usize], v: &[u64]) -> PMap {
        let d = alg.dim();
        PMap {
            alg: alg.clone(),
            source: source.to_vec(),
            target: target.to_vec(),
            entries: v.chunks(d).map(<[u64]>::to_vec).collect(),
        }
    }

    /// Sub-map on selected target rows and source columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> PMap {
        let source: Vec<usize> = cols.iter().map(|&k| self.source[k]).collect();
        let target: Vec<usize> = rows.iter().map(|&l| self.target[l]).collect();
        let mut out = PMap::zero(&self.alg, &source, &target);
        for (nl, &l) in rows.iter().enumerate() {
            for (nk, &k) in cols.iter().enumerate() {
                *out.entry_mut(nl, nk) = self.entry(l, k).to_vec();
            }
        }
        out
    }

    /// Block matrix `[[a, b], [c, d]]`; any block may be `None` for zero.
    pub fn blocks(
        alg: &Algebra,
        src: (&[usize], &[usize]),
        tgt: (&[usize], &[usize]),
        parts: [[Option<&PMap>; 2]; 2],
    ) -> PMap {
        let source: Vec<usize> = src.0.iter().chain(src.1).copied().collect();
        let target: Vec<usize> = tgt.0.iter().chain(tgt.1).copied().collect();
        let mut out = PMap::zero(alg, &source, &target);
        let roff = [0, tgt.0.len()];
        let coff = [0, src.0.len()];
        for (bi, row) in parts.iter().enumerate() {
            for (bj, part) in row.iter().enumerate() {
                if let Some(p) = part {
                    for l in 0..p.target.len() {
                        for k in 0..p.source.len() {
                            *out.entry_mut(roff[bi] + l, coff[bj] + k) = p.entry(l, k).to_vec();
                        }
                    }
                }
            }
        }
        out
    }

    /// The same map viewed between representations.
    pub fn to_module_map(&self) -> ModuleMap {
        let alg = &self.alg;
        let f = alg.fp();
        let src = proj_sum(alg, &self.source);
        let tgt = proj_sum(alg, &self.target);
        let blocks = (0..alg.n())
            .map(|v| {
                let mut m = Matrix::zeros(tgt.dim_at(v), src.dim_at(v));
                let mut col = 0;
                for (k, &i) in self.source.iter().enumerate() {
                    for &w in alg.basis_between(i, v) {
                        let we = alg.basis_element(w);
                        let mut row0 = 0;
                        for (l, &j) in self.target.iter().enumerate() {
                            let ps = alg.basis_between(j, v);
                            let lam = self.entry(l, k);
                            if lam.iter().any(|&c| c != 0) {
                                let y = alg.mul(&we, lam);
                                for (r, &b) in ps.iter().enumerate() {
                                    m.set(row0 + r, col, f.add(m.get(row0 + r, col), y[b]));
                                }
                            }
                            row0 += ps.len();
                        }
                        col += 1;
                    }
                }
                m
            })
            .collect();
        ModuleMap::new_unchecked(&src, &tgt, blocks)
    }

    /// Reads a module map between projective sums back as generator images.
    pub fn from_module_map(
        alg: &Algebra,
        source: &[usize],
        target: &[usize],
        map: &ModuleMap,
    ) -> PMap {
        let mut out = PMap::zero(alg, source, target);
        for (k, &i) in source.iter().enumerate() {
            let col = sum_position(alg, source, k, i, alg.idempotent(i));
            let img = map.block(i).column(col);
            let mut row0 = 0;
            for (l, &j) in target.iter().enumerate() {
                let ps = alg.basis_between(j, i);
                let e = out.entry_mut(l, k);
                for (r, &b) in ps.iter().enumerate() {
                    e[b] = img[row0 + r];
                }
                row0 += ps.len();
            }
        }
        out
    }

    /// Basis of `Hom(⊕ P(source), ⊕ P(target))`: one basis path per entry.
    pub fn hom_basis(alg: &Algebra, source: &[usize], target: &[usize]) -> Vec<PMap> {
        let mut out = Vec::new();
        for l in 0..target.len() {
            for k in 0..source.len() {
                for &b in alg.basis_between(target[l], source[k]) {
                    let mut m = PMap::zero(alg, source, target);
                    m.entry_mut(l, k)[b] = 1;
                    out.push(m);
                }
            }
        }
        out
    }

    /// Whether some entry is a unit `P(v) -> P(v)`; returns its position.
    pub fn invertible_entry(&self) -> Option<(usize, usize)> {
        for l in 0..self.target.len() {
            for k in 0..self.source.len() {
                let v = self.source[k];
                if self.target[l] == v && self.alg.is_unit_at(self.entry(l, k), v) {
                    return Some((l, k));
                }
            }
        }
        None
    }
}

/// Column of the generator-path `w` of summand `k` inside the vertex block
/// at `v` of the projective sum.
fn sum_position(alg: &Algebra, terms: &[usize], k: usize, v: usize, w: usize) -> usize {
    let mut pos = 0;
    for &i in &terms[..k] {
        pos += alg.basis_between(i, v).len();
    }
    pos + alg
        .basis_between(terms[k], v)
        .iter()
        .position(|&b| b == w)
        .expect("path lies in the projective")
}

/// `⊕ P(v)` over the listed vertices.
pub fn proj_sum(alg: &Algebra, terms: &[usize]) -> Representation {
    let parts: Vec<Representation> = terms
        .iter()
        .map(|&v| projective(alg, v).expect("vertex in range"))
        .collect();
    direct_sum(alg, &parts).expect("same algebra").sum
}

/// The map `⊕ P(i_k) -> M` sending generator `k` to the vector `gens[k]` of
/// `M` at vertex `i_k`.
pub fn map_from_generators(m: &Representation, terms: &[usize], gens: &[Vec<u64>]) -> ModuleMap {
    let alg = m.algebra();
    let src = proj_sum(alg, terms);
    let blocks = (0..alg.n())
        .map(|v| {
            let mut cols = Vec::new();
            for (k, &i) in terms.iter().enumerate() {
                for &w in alg.basis_between(i, v) {
                    cols.push(m.path_matrix(&alg.basis()[w]).mul_vec(&gens[k], m.fp()));
                }
            }
            Matrix::from_columns(&cols, m.dim_at(v))
        })
        .collect();
    ModuleMap::new_unchecked(&src, m, blocks)
}

/// A projective presentation `P1 --d--> P0 --cover--> M -> 0`.
#[derive(Clone, Debug)]
pub struct ProjPresentation {
    pub p1: Vec<usize>,
    pub p0: Vec<usize>,
    pub d: PMap,
    pub cover: ModuleMap,
}

/// Generators of `M` complementary to its radical, vertices ascending.
fn top_generators(m: &Representation) -> (Vec<usize>, Vec<Vec<u64>>) {
    let f = m.fp();
    let rad = radical_spans(m);
    let mut terms = Vec::new();
    let mut gens = Vec::new();
    for (v, r) in rad.iter().enumerate() {
        let c = r.complement_basis(f);
        for j in 0..c.cols() {
            terms.push(v);
            gens.push(c.column(j));
        }
    }
    (terms, gens)
}

/// A projective cover of `M`.
pub fn projective_cover(m: &Representation) -> (Vec<usize>, ModuleMap) {
    let (terms, gens) = top_generators(m);
    let cover = map_from_generators(m, &terms, &gens);
    (terms, cover)
}

pub fn minimal_presentation(m: &Representation) -> ProjPresentation {
    let alg = m.algebra();
    let (p0, cover) = projective_cover(m);
    let (k, incl) = kernel(&cover);
    let (p1, gens) = top_generators(&k);
    let mut d = PMap::zero(alg, &p1, &p0);
    for (c, (&i, g)) in p1.iter().zip(&gens).enumerate() {
        let img = incl.block(i).mul_vec(g, m.fp());
        let mut row0 = 0;
        for (l, &j) in p0.iter().enumerate() {
            let ps = alg.basis_between(j, i);
            let e = d.entry_mut(l, c);
            for (r, &b) in ps.iter().enumerate() {
                e[b] = img[row0 + r];
            }
            row0 += ps.len();
        }
    }
    ProjPresentation { p1, p0, d, cover }
}

/// `τ M = D Tr M`.
pub fn ar_translate(m: &Representation) -> Representation {
    let alg = m.algebra();
    let pres = minimal_presentation(m);
    let op = alg.opposite();
    let mut dual = PMap::zero(&op, &pres.p0, &pres.p1);
    for l in 0..pres.p0.len() {
        for k in 0..pres.p1.len() {
            *dual.entry_mut(k, l) = alg.to_opposite(pres.d.entry(l, k));
        }
    }
    let (tr, _) = crate::rep::cokernel(&dual.to_module_map());
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, _)| tr.map(ai).transpose())
        .collect();
    Representation::new_unchecked(alg, tr.dims().to_vec(), maps)
}

/// Whether `x` is a quotient of a direct sum of copies of `u`.
pub fn in_fac(x: &Representation, u: &Representation) -> Result<bool> {
    if x.is_zero() {
        return Ok(true);
    }
    let f = x.fp();
    let homs = hom_basis(u, x)?;
    Ok((0..x.dims().len()).all(|v| {
        let mut span = Matrix::zeros(x.dim_at(v), 0);
        for h in &homs {
            span = span.hstack(h.block(v));
        }
        span.rank(f) == x.dim_at(v)
    }))
}

/// `Hom(M, τM) = 0` and `Hom(P, M) = 0`, with `P` given by its vertices.
pub fn is_tau_rigid_pair(m: &Representation, p: &[usize]) -> Result<bool> {
    if p.iter().any(|&v| m.dim_at(v) != 0) {
        return Ok(false);
    }
    let tau = ar_translate(m);
    Ok(hom_basis(m, &tau)?.is_empty())
}
