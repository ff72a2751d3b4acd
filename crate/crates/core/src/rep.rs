//! Finite-dimensional representations and the maps between them.
//!
//! A representation stores one vector space per vertex and one matrix per
//! arrow. For an arrow `a: i -> j` the matrix has shape `dims[j] x dims[i]`
//! and acts on column vectors, so the path `[a, b]` acts by `B * A`.

use std::sync::Arc;

use crate::algebra::{Algebra, Path};
use crate::error::{Error, Result};
use crate::linalg::{Fp, Matrix};

#[derive(Clone, Debug)]
pub struct Representation {
    alg: Algebra,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.alg, &other.alg) && self.dims == other.dims && self.maps == other.maps
    }
}

impl Representation {
    /// Checks matrix shapes and every relation of the algebra.
    pub fn new(alg: &Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        let q = alg.quiver();
        if dims.len() != alg.n() {
            return Err(Error::BadInput(format!(
                "expected {} vertex dimensions, got {}",
                alg.n(),
                dims.len()
            )));
        }
        if maps.len() != q.arrows().len() {
            return Err(Error::BadInput(format!(
                "expected {} arrow maps, got {}",
                q.arrows().len(),
                maps.len()
            )));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::BadInput(format!(
                    "map for arrow `{}` has shape {}x{}, expected {}x{}",
                    a.name,
                    m.rows(),
                    m.cols(),
                    dims[a.target],
                    dims[a.source]
                )));
            }
        }
        let rep = Representation {
            alg: alg.clone(),
            dims,
            maps,
        };
        if !rep.satisfies_relations() {
            return Err(Error::BadInput(
                "arrow maps violate a relation of the algebra".into(),
            ));
        }
        Ok(rep)
    }

    pub(crate) fn new_unchecked(alg: &Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        let rep = Representation {
            alg: alg.clone(),
            dims,
            maps,
        };
        debug_assert!(rep.satisfies_relations());
        rep
    }

    pub fn zero(alg: &Algebra) -> Self {
        let dims = vec![0; alg.n()];
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .map(|_| Matrix::zeros(0, 0))
            .collect();
        Representation {
            alg: alg.clone(),
            dims,
            maps,
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn fp(&self) -> Fp {
        self.alg.fp()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn same_algebra(&self, other: &Representation) -> bool {
        Arc::ptr_eq(&self.alg, &other.alg)
    }

    /// Offsets of the vertex blocks in the total space.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.dims.len());
        let mut acc = 0;
        for &d in &self.dims {
            off.push(acc);
            acc += d;
        }
        off
    }

    /// Matrix by which a path word acts, from its source space to its
    /// target space.
    pub fn path_matrix(&self, w: &Path) -> Matrix {
        let f = self.fp();
        let mut m = Matrix::identity(self.dims[w.source]);
        for &a in &w.arrows {
            m = self.maps[a].mul(&m, f);
        }
        m
    }

    /// Action of the basis element `i` of the algebra.
    pub fn basis_action(&self, i: usize) -> Matrix {
        self.path_matrix(&self.alg.basis()[i])
    }

    pub fn satisfies_relations(&self) -> bool {
        let f = self.fp();
        let q = self.alg.quiver();
        self.alg.relations().all(|(s, t, terms)| {
            let mut acc = Matrix::zeros(self.dims[t], self.dims[s]);
            for (c, word) in terms {
                let m = self.path_matrix(&Path {
                    source: s,
                    arrows: word.clone(),
                });
                acc.add_scaled(&m, *c, f);
            }
            let _ = q;
            acc.is_zero()
        })
    }

    /// The same module with every vertex space given a new basis;
    /// `change[v]` maps old coordinates to new ones.
    pub fn transport(&self, change: &[Matrix]) -> Representation {
        let f = self.fp();
        let maps = self
            .alg
            .quiver()
            .arrows()
            .iter()
            .zip(&self.maps)
            .map(|(a, m)| {
                let inv = change[a.source]
                    .inverse(f)
                    .expect("basis change must be invertible");
                change[a.target].mul(m, f).mul(&inv, f)
            })
            .collect();
        Representation::new_unchecked(&self.alg, self.dims.clone(), maps)
    }
}

/// A homomorphism of representations, one block per vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleMap {
    source: Representation,
    target: Representation,
    blocks: Vec<Matrix>,
}

impl ModuleMap {
    /// Checks block shapes and that every arrow square commutes.
    pub fn new(
        source: &Representation,
        target: &Representation,
        blocks: Vec<Matrix>,
    ) -> Result<Self> {
        if !source.same_algebra(target) {
            return Err(Error::AlgebraMismatch);
        }
        if blocks.len() != source.dims.len() {
            return Err(Error::BadInput("wrong number of map blocks".into()));
        }
        for (v, b) in blocks.iter().enumerate() {
            if b.rows() != target.dims[v] || b.cols() != source.dims[v] {
                return Err(Error::BadInput(format!(
                    "map block at vertex {v} has the wrong shape"
                )));
            }
        }
        let m = ModuleMap {
            source: source.clone(),
            target: target.clone(),
            blocks,
        };
        if !m.commutes() {
            return Err(Error::BadInput(
                "map does not commute with the arrow maps".into(),
            ));
        }
        Ok(m)
    }

    pub(crate) fn new_unchecked(
        source: &Representation,
        target: &Representation,
        blocks: Vec<Matrix>,
    ) -> Self {
        let m = ModuleMap {
            source: source.clone(),
            target: target.clone(),
            blocks,
        };
        debug_assert!(m.commutes());
        m
    }

    pub fn zero(source: &Representation, target: &Representation) -> Self {
        let blocks = source
            .dims
            .iter()
            .zip(&target.dims)
            .map(|(&s, &t)| Matrix::zeros(t, s))
            .collect();
        ModuleMap {
            source: source.clone(),
            target: target.clone(),
            blocks,
        }
    }

    pub fn identity(m: &Representation) -> Self {
        let blocks = m.dims.iter().map(|&d| Matrix::identity(d)).collect();
        ModuleMap {
            source: m.clone(),
            target: m.clone(),
            blocks,
        }
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn block(&self, v: usize) -> &Matrix {
        &self.blocks[v]
    }

    pub fn commutes(&self) -> bool {
        let f = self.source.fp();
        self.source
            .alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .all(|(ai, a)| {
                let lhs = self.target.maps[ai].mul(&self.blocks[a.source], f);
                let rhs = self.blocks[a.target].mul(&self.source.maps[ai], f);
                lhs == rhs
            })
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    /// Invertible at every vertex.
    pub fn is_isomorphism(&self) -> bool {
        let f = self.source.fp();
        self.blocks.iter().all(|b| b.is_invertible(f))
    }

    pub fn rank_at(&self, v: usize) -> usize {
        self.blocks[v].rank(self.source.fp())
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ModuleMap) -> ModuleMap {
        let f = self.source.fp();
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| b.mul(a, f))
            .collect();
        ModuleMap {
            source: self.source.clone(),
            target: other.target.clone(),
            blocks,
        }
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        let f = self.source.fp();
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.add(b, f))
            .collect();
        ModuleMap {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks,
        }
    }

    pub fn scale(&self, s: u64) -> ModuleMap {
        let f = self.source.fp();
        ModuleMap {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self.blocks.iter().map(|b| b.scale(s, f)).collect(),
        }
    }

    /// `Σ coeffs[i] * maps[i]`; all maps share source and target.
    pub fn combination(maps: &[ModuleMap], coeffs: &[u64]) -> ModuleMap {
        let first = &maps[0];
        let f = first.source.fp();
        let mut blocks: Vec<Matrix> = first
            .blocks
            .iter()
            .map(|b| Matrix::zeros(b.rows(), b.cols()))
            .collect();
        for (m, &c) in maps.iter().zip(coeffs) {
            for (acc, b) in blocks.iter_mut().zip(&m.blocks) {
                acc.add_scaled(b, c, f);
            }
        }
        ModuleMap {
            source: first.source.clone(),
            target: first.target.clone(),
            blocks,
        }
    }

    /// Block-diagonal matrix on the total spaces.
    pub fn total_matrix(&self) -> Matrix {
        let refs: Vec<&Matrix> = self.blocks.iter().collect();
        Matrix::block_diag(&refs)
    }

    /// Entries of all blocks, concatenated.
    pub fn flatten(&self) -> Vec<u64> {
        self.blocks
            .iter()
            .flat_map(|b| b.data().iter().copied())
            .collect()
    }
}

/// Basis of `Hom(M, N)`: the solutions of the commuting-square system.
pub fn hom_basis(m: &Representation, n: &Representation) -> Result<Vec<ModuleMap>> {
    if !m.same_algebra(n) {
        return Err(Error::AlgebraMismatch);
    }
    let f = m.fp();
    let alg = m.algebra();
    let nv = alg.n();
    let mut off = Vec::with_capacity(nv);
    let mut unknowns = 0;
    for v in 0..nv {
        off.push(unknowns);
        unknowns += n.dims[v] * m.dims[v];
    }
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    let arrows = alg.quiver().arrows();
    let eqs: usize = arrows
        .iter()
        .map(|a| n.dims[a.target] * m.dims[a.source])
        .sum();
    let mut sys = Matrix::zeros(eqs, unknowns);
    let mut row0 = 0;
    for (ai, a) in arrows.iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (ms, mt, ns, nt) = (m.dims[s], m.dims[t], n.dims[s], n.dims[t]);
        let na = &n.maps[ai];
        let ma = &m.maps[ai];
        // (N_a φ_s - φ_t M_a)[r][c] = 0
        for r in 0..nt {
            for c in 0..ms {
                let row = row0 + r * ms + c;
                for q in 0..ns {
                    let v = na.get(r, q);
                    if v != 0 {
                        let col = off[s] + q * ms + c;
                        sys.set(row, col, f.add(sys.get(row, col), v));
                    }
                }
                for q in 0..mt {
                    let v = ma.get(q, c);
                    if v != 0 {
                        let col = off[t] + r * mt + q;
                        sys.set(row, col, f.sub(sys.get(row, col), v));
                    }
                }
            }
        }
        row0 += nt * ms;
    }
    let null = sys.nullspace(f);
    let maps = (0..null.cols())
        .map(|j| {
            let x = null.column(j);
            let blocks = (0..nv)
                .map(|v| {
                    Matrix::from_vec(
                        n.dims[v],
                        m.dims[v],
                        x[off[v]..off[v] + n.dims[v] * m.dims[v]].to_vec(),
                    )
                })
                .collect();
            ModuleMap::new_unchecked(m, n, blocks)
        })
        .collect();
    Ok(maps)
}

/// The subrepresentation spanned at each vertex by the columns of
/// `spans[v]`, with its inclusion. The spans must be independent and stable
/// under the arrow maps.
pub fn subrepresentation(m: &Representation, spans: &[Matrix]) -> (Representation, ModuleMap) {
    let f = m.fp();
    let dims: Vec<usize> = spans.iter().map(Matrix::cols).collect();
    let maps = m
        .alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let image = m.maps[ai].mul(&spans[a.source], f);
            spans[a.target]
                .solve(&image, f)
                .expect("subspace must be stable under arrow maps")
        })
        .collect();
    let sub = Representation::new_unchecked(&m.alg, dims, maps);
    let incl = ModuleMap::new_unchecked(&sub, m, spans.to_vec());
    (sub, incl)
}

/// Quotient of `m` by the subrepresentation spanned by `spans`, with the
/// projection.
pub fn quotient_representation(
    m: &Representation,
    spans: &[Matrix],
) -> (Representation, ModuleMap) {
    let f = m.fp();
    let nv = m.dims.len();
    // π_v: rows spanning the annihilator of the subspace; its kernel is the subspace.
    let proj: Vec<Matrix> = (0..nv)
        .map(|v| {
            if spans[v].cols() == 0 {
                Matrix::identity(m.dims[v])
            } else {
                spans[v].left_nullspace(f)
            }
        })
        .collect();
    let dims: Vec<usize> = proj.iter().map(Matrix::rows).collect();
    // Sections σ_v with π_v σ_v = 1.
    let sections: Vec<Matrix> = proj
        .iter()
        .map(|p| section(p, f).expect("projection has full row rank"))
        .collect();
    let maps = m
        .alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            proj[a.target]
                .mul(&m.maps[ai], f)
                .mul(&sections[a.source], f)
        })
        .collect();
    let q = Representation::new_unchecked(&m.alg, dims, maps);
    let pi = ModuleMap::new_unchecked(m, &q, proj);
    (q, pi)
}

/// A right inverse of a full-row-rank matrix.
fn section(p: &Matrix, f: Fp) -> Option<Matrix> {
    p.solve(&Matrix::identity(p.rows()), f)
}

pub fn kernel(map: &ModuleMap) -> (Representation, ModuleMap) {
    let f = map.source.fp();
    let spans: Vec<Matrix> = map.blocks.iter().map(|b| b.nullspace(f)).collect();
    subrepresentation(&map.source, &spans)
}

pub fn image(map: &ModuleMap) -> (Representation, ModuleMap) {
    let f = map.source.fp();
    let spans: Vec<Matrix> = map.blocks.iter().map(|b| b.column_space(f)).collect();
    subrepresentation(&map.target, &spans)
}

pub fn cokernel(map: &ModuleMap) -> (Representation, ModuleMap) {
    let f = map.source.fp();
    let spans: Vec<Matrix> = map.blocks.iter().map(|b| b.column_space(f)).collect();
    quotient_representation(&map.target, &spans)
}

/// A direct sum with its structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub sum: Representation,
    pub injections: Vec<ModuleMap>,
    pub projections: Vec<ModuleMap>,
}

pub fn direct_sum(alg: &Algebra, parts: &[Representation]) -> Result<DirectSum> {
    if parts.iter().any(|p| !Arc::ptr_eq(p.algebra(), alg)) {
        return Err(Error::AlgebraMismatch);
    }
    let nv = alg.n();
    let dims: Vec<usize> = (0..nv)
        .map(|v| parts.iter().map(|p| p.dims[v]).sum())
        .collect();
    let maps = (0..alg.quiver().arrows().len())
        .map(|ai| {
            let blocks: Vec<&Matrix> = parts.iter().map(|p| &p.maps[ai]).collect();
            Matrix::block_diag(&blocks)
        })
        .collect();
    let sum = Representation::new_unchecked(alg, dims.clone(), maps);
    let mut injections = Vec::with_capacity(parts.len());
    let mut projections = Vec::with_capacity(parts.len());
    let mut off = vec![0usize; nv];
    for p in parts {
        let mut inj = Vec::with_capacity(nv);
        let mut proj = Vec::with_capacity(nv);
        for v in 0..nv {
            let mut i = Matrix::zeros(dims[v], p.dims[v]);
            let mut q = Matrix::zeros(p.dims[v], dims[v]);
            for k in 0..p.dims[v] {
                i.set(off[v] + k, k, 1);
                q.set(k, off[v] + k, 1);
            }
            inj.push(i);
            proj.push(q);
            off[v] += p.dims[v];
        }
        injections.push(ModuleMap::new_unchecked(p, &sum, inj));
        projections.push(ModuleMap::new_unchecked(&sum, p, proj));
    }
    Ok(DirectSum {
        sum,
        injections,
        projections,
    })
}

/// Per-vertex top multiplicities and the radical with its inclusion.
pub fn top_and_radical(m: &Representation) -> (Vec<usize>, Representation, ModuleMap) {
    let spans = radical_spans(m);
    let top = m
        .dims
        .iter()
        .zip(&spans)
        .map(|(&d, s)| d - s.cols())
        .collect();
    let (rad, incl) = subrepresentation(m, &spans);
    (top, rad, incl)
}

/// Column bases of `rad M` at each vertex: the span of all arrow images.
pub(crate) fn radical_spans(m: &Representation) -> Vec<Matrix> {
    let f = m.fp();
    let nv = m.dims.len();
    let mut gens: Vec<Matrix> = m.dims.iter().map(|&d| Matrix::zeros(d, 0)).collect();
    for (ai, a) in m.alg.quiver().arrows().iter().enumerate() {
        gens[a.target] = gens[a.target].hstack(&m.maps[ai]);
    }
    (0..nv).map(|v| gens[v].column_space(f)).collect()
}

/// `P(i) = Λ e_i`: at vertex `j`, the basis paths from `i` to `j`.
pub fn projective(alg: &Algebra, i: usize) -> Result<Representation> {
    if i >= alg.n() {
        return Err(Error::UnknownVertex(i.to_string()));
    }
    let f = alg.fp();
    let nv = alg.n();
    let dims: Vec<usize> = (0..nv).map(|j| alg.basis_between(i, j).len()).collect();
    let q = alg.quiver();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let src = alg.basis_between(i, a.source);
            let tgt = alg.basis_between(i, a.target);
            let mut m = Matrix::zeros(tgt.len(), src.len());
            for (c, &b) in src.iter().enumerate() {
                let w = alg.basis()[b]
                    .then(
                        &Path {
                            source: a.source,
                            arrows: vec![ai],
                        },
                        q,
                    )
                    .expect("arrow starts where the path ends");
                for (k, coeff) in alg.normal_form(&w) {
                    let r = tgt
                        .iter()
                        .position(|&x| x == k)
                        .expect("normal form stays in its stratum");
                    m.set(r, c, f.add(m.get(r, c), coeff));
                }
            }
            m
        })
        .collect();
    Ok(Representation::new_unchecked(alg, dims, maps))
}

pub fn simple(alg: &Algebra, i: usize) -> Result<Representation> {
    if i >= alg.n() {
        return Err(Error::UnknownVertex(i.to_string()));
    }
    let mut dims = vec![0; alg.n()];
    dims[i] = 1;
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .map(|a| Matrix::zeros(dims[a.target], dims[a.source]))
        .collect();
    Ok(Representation::new_unchecked(alg, dims, maps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, FieldSpec, Quiver};

    fn a2() -> Algebra {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        build_algebra(FieldSpec::default(), q, &[]).unwrap()
    }

    #[test]
    fn projective_dimension_vectors() {
        let a = a2();
        assert_eq!(projective(&a, 0).unwrap().dims(), &[1, 1]);
        assert_eq!(projective(&a, 1).unwrap().dims(), &[0, 1]);
        assert_eq!(simple(&a, 0).unwrap().dims(), &[1, 0]);
        assert!(projective(&a, 2).is_err());
    }

    #[test]
    fn hom_dimensions_between_projectives() {
        let a = a2();
        let p1 = projective(&a, 0).unwrap();
        let p2 = projective(&a, 1).unwrap();
        assert_eq!(hom_basis(&p2, &p1).unwrap().len(), 1);
        assert_eq!(hom_basis(&p1, &p2).unwrap().len(), 0);
        assert_eq!(hom_basis(&p1, &p1).unwrap().len(), 1);
    }

    #[test]
    fn kernel_of_cover_is_simple_at_sink() {
        let a = a2();
        let p1 = projective(&a, 0).unwrap();
        let s1 = simple(&a, 0).unwrap();
        let cover = hom_basis(&p1, &s1).unwrap().remove(0);
        let (k, incl) = kernel(&cover);
        assert_eq!(k.dims(), &[0, 1]);
        assert!(incl.then(&cover).is_zero());
    }

    #[test]
    fn cokernel_of_arrow_map() {
        let a = a2();
        let p1 = projective(&a, 0).unwrap();
        let p2 = projective(&a, 1).unwrap();
        let f = hom_basis(&p2, &p1).unwrap().remove(0);
        let (c, pi) = cokernel(&f);
        assert_eq!(c.dims(), &[1, 0]);
        assert!(f.then(&pi).is_zero());
        let (z, _) = cokernel(&ModuleMap::identity(&p1));
        assert!(z.is_zero());
    }

    #[test]
    fn top_of_projective() {
        let a = a2();
        let (top, rad, _) = top_and_radical(&projective(&a, 0).unwrap());
        assert_eq!(top, vec![1, 0]);
        assert_eq!(rad.dims(), &[0, 1]);
    }

    #[test]
    fn relation_violation_is_rejected() {
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let alg = build_algebra(
            FieldSpec::default(),
            q,
            &[crate::algebra::RelationSpec::monomial(&["x", "x"])],
        )
        .unwrap();
        let bad = Matrix::identity(1);
        assert!(Representation::new(&alg, vec![1], vec![bad]).is_err());
        let ok = Matrix::from_rows(&[vec![0, 0], vec![1, 0]], 2);
        assert!(Representation::new(&alg, vec![2], vec![ok]).is_ok());
    }
}
