//! Endomorphism algebras, their radicals, locality, and Krull-Schmidt
//! decompositions of representations.

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{CoordinateSolver, Fp, Matrix};
use crate::poly::{charpoly, proper_coprime_factor};
use crate::rep::{hom_basis, subrepresentation, top_and_radical, ModuleMap, Representation};

/// Random combinations tried after the basis elements in every search.
pub const SEARCH_BUDGET: usize = 512;

/// A subalgebra of square matrices given by a linear basis containing the
/// identity in its span.
#[derive(Clone, Debug)]
pub struct MatrixAlgebra {
    basis: Vec<Matrix>,
    size: usize,
    solver: CoordinateSolver,
    f: Fp,
}

impl MatrixAlgebra {
    pub fn new(basis: Vec<Matrix>, f: Fp) -> Self {
        let size = basis.first().map_or(0, Matrix::rows);
        let cols: Vec<Vec<u64>> = basis.iter().map(|b| b.data().to_vec()).collect();
        let solver = CoordinateSolver::new(Matrix::from_columns(&cols, size * size), f);
        MatrixAlgebra {
            basis,
            size,
            solver,
            f,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Side length of the matrices.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn fp(&self) -> Fp {
        self.f
    }

    pub fn element(&self, coords: &[u64]) -> Matrix {
        let mut m = Matrix::zeros(self.size, self.size);
        for (b, &c) in self.basis.iter().zip(coords) {
            if c != 0 {
                m.add_scaled(b, c, self.f);
            }
        }
        m
    }

    /// Coordinates of a matrix in the algebra, `None` if it lies outside.
    pub fn coords(&self, m: &Matrix) -> Option<Vec<u64>> {
        self.solver.coords(m.data(), self.f)
    }

    pub fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let m = self.element(x).mul(&self.element(y), self.f);
        self.coords(&m).expect("algebra is closed under products")
    }

    /// Coordinates of `basis[i] * basis[j]`.
    pub fn structure_constants(&self, i: usize, j: usize) -> Vec<u64> {
        let m = self.basis[i].mul(&self.basis[j], self.f);
        self.coords(&m).expect("algebra is closed under products")
    }

    /// Coordinates of the identity matrix.
    pub fn unit(&self) -> Option<Vec<u64>> {
        self.coords(&Matrix::identity(self.size))
    }

    fn guard(&self) -> Result<()> {
        if self.f.p() as usize <= self.size {
            return Err(Error::CharTooSmall {
                p: self.f.p(),
                size: self.size,
            });
        }
        Ok(())
    }
}

/// `End(M)` as block-diagonal matrices on the total space.
pub fn end_algebra(m: &Representation) -> Result<MatrixAlgebra> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let basis = hom_basis(m, m)?
        .iter()
        .map(ModuleMap::total_matrix)
        .collect();
    Ok(MatrixAlgebra::new(basis, m.fp()))
}

/// Coordinates (as columns) of a basis of the radical: the kernel of the
/// trace form. Sound only when `p` exceeds the matrix size.
pub fn radical(e: &MatrixAlgebra) -> Result<Matrix> {
    e.guard()?;
    let f = e.f;
    let d = e.dim();
    let mut gram = Matrix::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            let t = e.basis[i].mul(&e.basis[j], f).trace(f);
            gram.set(i, j, t);
            gram.set(j, i, t);
        }
    }
    Ok(gram.nullspace(f))
}

/// Local iff `E / rad E` is a field: commutative with a one-dimensional
/// Frobenius fixed space.
pub fn is_local(e: &MatrixAlgebra) -> Result<bool> {
    let f = e.f;
    let rad = radical(e)?;
    let comp = rad.complement_basis(f);
    let s = comp.cols();
    if s == 0 {
        return Ok(false);
    }
    // Coordinates in the basis [comp | rad]; the first s entries are the
    // image in the semisimple quotient.
    let full = comp.hstack(&rad);
    let to_quotient = |coords: &[u64]| -> Vec<u64> {
        let x = full
            .solve(&Matrix::from_columns(&[coords.to_vec()], e.dim()), f)
            .expect("full basis");
        x.column(0)[..s].to_vec()
    };
    let cs: Vec<Vec<u64>> = (0..s).map(|j| comp.column(j)).collect();
    for i in 0..s {
        for j in i + 1..s {
            let a = e.mul(&cs[i], &cs[j]);
            let b = e.mul(&cs[j], &cs[i]);
            let diff: Vec<u64> = a.iter().zip(&b).map(|(&x, &y)| f.sub(x, y)).collect();
            if to_quotient(&diff).iter().any(|&c| c != 0) {
                return Ok(false);
            }
        }
    }
    let mut frob = Matrix::zeros(s, s);
    for (j, c) in cs.iter().enumerate() {
        let xp = e.element(c).pow(f.p(), f);
        let coords = e.coords(&xp).expect("powers stay in the algebra");
        for (i, v) in to_quotient(&coords).into_iter().enumerate() {
            frob.set(i, j, v);
        }
    }
    let fixed = frob.sub(&Matrix::identity(s), f).nullspace(f).cols();
    Ok(fixed == 1)
}

/// Nonzero with local endomorphism ring; the zero module is not
/// indecomposable.
pub fn is_indecomposable(m: &Representation) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    is_local(&end_algebra(m)?)
}

/// Indecomposable summands grouped up to isomorphism, with multiplicities.
pub fn decompose<R: Rng>(m: &Representation, rng: &mut R) -> Result<Vec<(Representation, usize)>> {
    let mut pieces = Vec::new();
    split_fully(m, rng, &mut pieces)?;
    let mut groups: Vec<(Representation, usize)> = Vec::new();
    'outer: for piece in pieces {
        for g in groups.iter_mut() {
            if are_isomorphic(&g.0, &piece, rng)? {
                g.1 += 1;
                continue 'outer;
            }
        }
        groups.push((piece, 1));
    }
    Ok(groups)
}

fn split_fully<R: Rng>(
    m: &Representation,
    rng: &mut R,
    out: &mut Vec<Representation>,
) -> Result<()> {
    if m.is_zero() {
        return Ok(());
    }
    let e = end_algebra(m)?;
    if is_local(&e)? {
        out.push(m.clone());
        return Ok(());
    }
    let phi = splitting_endomorphism(&e, rng)?;
    let f = m.fp();
    let n = m.total_dim() as u64;
    let off = m.offsets();
    let power = phi.pow(n, f);
    let blocks: Vec<Matrix> = (0..m.dims().len())
        .map(|v| power.block(off[v], off[v], m.dim_at(v), m.dim_at(v)))
        .collect();
    let ker: Vec<Matrix> = blocks.iter().map(|b| b.nullspace(f)).collect();
    let img: Vec<Matrix> = blocks.iter().map(|b| b.column_space(f)).collect();
    split_fully(&subrepresentation(m, &ker).0, rng, out)?;
    split_fully(&subrepresentation(m, &img).0, rng, out)
}

/// An element of `E` that is neither nilpotent nor invertible, built as
/// `h(x)` for a proper coprime factor `h` of the characteristic polynomial
/// of some `x`.
fn splitting_endomorphism<R: Rng>(e: &MatrixAlgebra, rng: &mut R) -> Result<Matrix> {
    let f = e.f;
    let n = e.size;
    let try_one = |x: &Matrix, rng: &mut R| -> Option<Matrix> {
        let chi = charpoly(x, f);
        let h = proper_coprime_factor(&chi, f, rng)?;
        let phi = h.eval_matrix(x, f);
        let nilpotent = phi.pow(n as u64, f).is_zero();
        let invertible = phi.is_invertible(f);
        (!nilpotent && !invertible).then_some(phi)
    };
    for b in &e.basis {
        if let Some(phi) = try_one(b, rng) {
            return Ok(phi);
        }
    }
    for _ in 0..SEARCH_BUDGET {
        let coords: Vec<u64> = (0..e.dim()).map(|_| rng.gen_range(0..f.p())).collect();
        if let Some(phi) = try_one(&e.element(&coords), rng) {
            return Ok(phi);
        }
    }
    Err(Error::SplitSearchFailed)
}

/// Searches `Hom(M, N)` for a map invertible at every vertex.
pub fn are_isomorphic<R: Rng>(m: &Representation, n: &Representation, rng: &mut R) -> Result<bool> {
    if !m.same_algebra(n) {
        return Err(Error::AlgebraMismatch);
    }
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    if top_and_radical(m).0 != top_and_radical(n).0 {
        return Ok(false);
    }
    let homs = hom_basis(m, n)?;
    if homs.is_empty() {
        return Ok(false);
    }
    if find_isomorphism(&homs, m.fp(), rng).is_some() {
        return Ok(true);
    }
    let back = hom_basis(n, m)?.len();
    let end = hom_basis(m, m)?.len();
    if back != homs.len() || end != homs.len() {
        return Ok(false);
    }
    Err(Error::IsoSearchInconclusive)
}

/// An isomorphism from a basis of `Hom(M, N)`, if the search finds one.
pub fn find_isomorphism<R: Rng>(homs: &[ModuleMap], f: Fp, rng: &mut R) -> Option<ModuleMap> {
    if let Some(h) = homs.iter().find(|h| h.is_isomorphism()) {
        return Some(h.clone());
    }
    for _ in 0..SEARCH_BUDGET {
        let coeffs: Vec<u64> = (0..homs.len()).map(|_| rng.gen_range(0..f.p())).collect();
        let h = ModuleMap::combination(homs, &coeffs);
        if h.is_isomorphism() {
            return Some(h);
        }
    }
    None
}
