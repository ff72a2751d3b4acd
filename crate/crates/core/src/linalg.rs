//! Dense matrices over a prime field.
//!
//! Entries are stored row by row as canonical residues in `0..p`. Matrices act
//! on column vectors: a `rows x cols` matrix maps `F_p^cols` to `F_p^rows`.
//! The modulus is carried by [`Fp`] and passed to every arithmetic operation,
//! so a [`Matrix`] is plain data.

use std::fmt;

/// Arithmetic in the prime field `F_p` with `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u64,
}

impl Fp {
    pub const fn new(p: u64) -> Self {
        Fp { p }
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    /// Reduce a signed integer to its canonical residue.
    pub fn from_i64(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    /// Symmetric representative in `(-p/2, p/2]`, used for display.
    pub fn to_i64(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

/// Trial-division primality test; moduli here are at most `2^31`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix({}x{})[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

/// Result of reducing a matrix to reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<u64>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        Matrix { rows, cols, data }
    }

    /// Build from rows; `cols` is needed when there are no rows.
    pub fn from_rows(rows: &[Vec<u64>], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            m.data[r * cols..(r + 1) * cols].copy_from_slice(row);
        }
        m
    }

    /// Build a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<u64>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged matrix columns");
            for (r, &v) in col.iter().enumerate() {
                m.data[r * m.cols + c] = v;
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn data(&self) -> &[u64] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u64>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix, f: Fp) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = vec![0u64; self.rows * other.cols];
        let p = f.p();
        for r in 0..self.rows {
            let acc = &mut out[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k];
                if a == 0 {
                    continue;
                }
                let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (x, &b) in acc.iter_mut().zip(orow) {
                    *x = (*x + a * b) % p;
                }
            }
        }
        Matrix::from_vec(self.rows, other.cols, out)
    }

    pub fn mul_vec(&self, v: &[u64], f: Fp) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| (acc + a * b) % f.p())
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix, f: Fp) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Matrix::from_vec(self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Matrix, f: Fp) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Matrix::from_vec(self.rows, self.cols, data)
    }

    pub fn scale(&self, s: u64, f: Fp) -> Matrix {
        let data = self.data.iter().map(|&a| f.mul(a, s)).collect();
        Matrix::from_vec(self.rows, self.cols, data)
    }

    /// In-place `self += s * other`.
    pub fn add_scaled(&mut self, other: &Matrix, s: u64, f: Fp) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s == 0 {
            return;
        }
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = (*a + b * s) % f.p();
        }
    }

    pub fn trace(&self, f: Fp) -> u64 {
        assert!(self.is_square());
        (0..self.rows).fold(0, |acc, i| f.add(acc, self.get(i, i)))
    }

    pub fn pow(&self, mut e: u64, f: Fp) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, f);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, f);
            }
        }
        acc
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m.data[i * cols.len() + j] = self.get(r, c);
            }
        }
        m
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let rows: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&rows, cols)
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let cols = self.cols + other.cols;
        let mut m = Matrix::zeros(self.rows, cols);
        for r in 0..self.rows {
            m.data[r * cols..r * cols + self.cols].copy_from_slice(self.row(r));
            m.data[r * cols + self.cols..(r + 1) * cols].copy_from_slice(other.row(r));
        }
        m
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix::from_vec(self.rows + other.rows, self.cols, data)
    }

    pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            m.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    /// Copy `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.data[(r0 + r) * self.cols + c0 + c] = block.get(r, c);
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.data[r * cols + c] = self.get(r0 + r, c0 + c);
            }
        }
        m
    }

    /// Reduced row echelon form with pivots chosen left to right.
    pub fn rref(&self, f: Fp) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(piv) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            m.swap_rows(piv, row);
            let inv = f.inv(m.get(row, col));
            for c in col..m.cols {
                let v = m.get(row, c);
                m.set(row, c, f.mul(v, inv));
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col);
                if factor == 0 {
                    continue;
                }
                let s = f.neg(factor);
                let (src, dst) = if r < row {
                    let (a, b) = m.data.split_at_mut(row * m.cols);
                    (&b[..m.cols], &mut a[r * m.cols..(r + 1) * m.cols])
                } else {
                    let (a, b) = m.data.split_at_mut(r * m.cols);
                    (&a[row * m.cols..(row + 1) * m.cols], &mut b[..m.cols])
                };
                for c in col..src.len() {
                    dst[c] = (dst[c] + src[c] * s) % f.p();
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { matrix: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self, f: Fp) -> usize {
        self.rref(f).pivots.len()
    }

    /// Basis of the right kernel `{x : self * x = 0}`, as the columns of the
    /// returned `cols x k` matrix.
    pub fn nullspace(&self, f: Fp) -> Matrix {
        let e = self.rref(f);
        let mut is_pivot = vec![false; self.cols];
        for &p in &e.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut basis = Matrix::zeros(self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            basis.set(fc, j, 1);
            for (i, &pc) in e.pivots.iter().enumerate() {
                basis.set(pc, j, f.neg(e.matrix.get(i, fc)));
            }
        }
        basis
    }

    /// Indices of a maximal linearly independent subset of the columns,
    /// scanning left to right.
    pub fn independent_columns(&self, f: Fp) -> Vec<usize> {
        self.rref(f).pivots
    }

    /// Basis of the column space, taken from the original columns.
    pub fn column_space(&self, f: Fp) -> Matrix {
        let piv = self.independent_columns(f);
        self.select_columns(&piv)
    }

    /// Rows spanning the left kernel `{y : y * self = 0}`.
    pub fn left_nullspace(&self, f: Fp) -> Matrix {
        self.transpose().nullspace(f).transpose()
    }

    /// Solve `self * X = rhs`, returning one solution if it exists.
    pub fn solve(&self, rhs: &Matrix, f: Fp) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "solve shape mismatch");
        let aug = self.hstack(rhs);
        let e = aug.rref(f);
        let n = self.cols;
        if e.pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut x = Matrix::zeros(n, rhs.cols);
        for (i, &pc) in e.pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x.set(pc, c, e.matrix.get(i, n + c));
            }
        }
        Some(x)
    }

    pub fn inverse(&self, f: Fp) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        if self.rows == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let x = self.solve(&Matrix::identity(self.rows), f)?;
        if self.rank(f) == self.rows {
            Some(x)
        } else {
            None
        }
    }

    pub fn is_invertible(&self, f: Fp) -> bool {
        self.is_square() && self.rank(f) == self.rows
    }

    /// Extend the columns of `self` (assumed independent) to a basis of the
    /// ambient space with standard basis vectors; returns the added columns.
    pub fn complement_basis(&self, f: Fp) -> Matrix {
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n));
        let piv = aug.independent_columns(f);
        let extra: Vec<usize> = piv.into_iter().filter(|&c| c >= self.cols).collect();
        aug.select_columns(&extra)
    }
}

/// Solves `basis * x = v` for many right-hand sides in a fixed column span.
///
/// The columns of `basis` must be linearly independent. Coordinates are read
/// off a square invertible minor, so each query costs one small product.
#[derive(Clone, Debug)]
pub struct CoordinateSolver {
    basis: Matrix,
    rows: Vec<usize>,
    minor_inv: Matrix,
}

impl CoordinateSolver {
    pub fn new(basis: Matrix, f: Fp) -> Self {
        let k = basis.cols();
        let rows = basis.transpose().independent_columns(f);
        assert_eq!(rows.len(), k, "coordinate basis is not independent");
        let cols: Vec<usize> = (0..k).collect();
        let minor_inv = basis
            .submatrix(&rows, &cols)
            .inverse(f)
            .expect("independent rows give an invertible minor");
        CoordinateSolver {
            basis,
            rows,
            minor_inv,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// Coordinates of `v`, or `None` if `v` is outside the span.
    pub fn coords(&self, v: &[u64], f: Fp) -> Option<Vec<u64>> {
        let sub: Vec<u64> = self.rows.iter().map(|&r| v[r]).collect();
        let x = self.minor_inv.mul_vec(&sub, f);
        if self.basis.mul_vec(&x, f) == v {
            Some(x)
        } else {
            None
        }
    }

    /// Coordinates without the membership check.
    pub fn coords_unchecked(&self, v: &[u64], f: Fp) -> Vec<u64> {
        let sub: Vec<u64> = self.rows.iter().map(|&r| v[r]).collect();
        self.minor_inv.mul_vec(&sub, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F: Fp = Fp::new(7);

    #[test]
    fn inverse_and_field_ops() {
        assert_eq!(F.mul(3, F.inv(3)), 1);
        assert_eq!(F.from_i64(-1), 6);
        assert_eq!(F.to_i64(6), -1);
        assert!(is_prime(32003));
        assert!(!is_prime(32001));
        assert!(!is_prime(1));
    }

    #[test]
    fn nullspace_is_annihilated() {
        let a = Matrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6]], 3);
        let n = a.nullspace(F);
        assert_eq!(n.cols(), 2);
        assert!(a.mul(&n, F).is_zero());
        assert_eq!(a.rank(F), 1);
    }

    #[test]
    fn solve_and_inverse() {
        let a = Matrix::from_rows(&[vec![1, 1], vec![0, 1]], 2);
        let inv = a.inverse(F).unwrap();
        assert_eq!(a.mul(&inv, F), Matrix::identity(2));
        let sing = Matrix::from_rows(&[vec![1, 1], vec![1, 1]], 2);
        assert!(sing.inverse(F).is_none());
        let rhs = Matrix::from_rows(&[vec![2], vec![3]], 1);
        assert!(sing.solve(&rhs, F).is_none());
    }

    #[test]
    fn coordinate_solver_roundtrip() {
        let b = Matrix::from_columns(&[vec![1, 0, 2], vec![0, 1, 1]], 3);
        let s = CoordinateSolver::new(b, F);
        assert_eq!(s.coords(&[3, 4, F.add(6, 4)], F), Some(vec![3, 4]));
        assert_eq!(s.coords(&[1, 0, 0], F), None);
    }

    #[test]
    fn empty_shapes() {
        let a = Matrix::zeros(0, 3);
        assert_eq!(a.nullspace(F).cols(), 3);
        let b = Matrix::zeros(2, 0);
        assert_eq!(b.nullspace(F).cols(), 0);
        assert_eq!(b.left_nullspace(F).rows(), 2);
    }
}
