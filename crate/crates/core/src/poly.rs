//! Univariate polynomials over `F_p`, just enough to split a linear map along
//! coprime factors of its characteristic polynomial.

use rand::Rng;

use crate::linalg::{Fp, Matrix};

/// Coefficients from the constant term upward; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(pub Vec<u64>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![1])
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Poly(vec![0, 1])
    }

    pub fn from_coeffs(mut c: Vec<u64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with the zero polynomial at `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lead(&self) -> u64 {
        *self.0.last().unwrap_or(&0)
    }

    pub fn add(&self, o: &Poly, f: Fp) -> Poly {
        let n = self.0.len().max(o.0.len());
        let c = (0..n)
            .map(|i| f.add(*self.0.get(i).unwrap_or(&0), *o.0.get(i).unwrap_or(&0)))
            .collect();
        Poly::from_coeffs(c)
    }

    pub fn sub(&self, o: &Poly, f: Fp) -> Poly {
        let n = self.0.len().max(o.0.len());
        let c = (0..n)
            .map(|i| f.sub(*self.0.get(i).unwrap_or(&0), *o.0.get(i).unwrap_or(&0)))
            .collect();
        Poly::from_coeffs(c)
    }

    pub fn mul(&self, o: &Poly, f: Fp) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![0u64; self.0.len() + o.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in o.0.iter().enumerate() {
                c[i + j] = f.add(c[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(c)
    }

    pub fn monic(&self, f: Fp) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = f.inv(self.lead());
        Poly(self.0.iter().map(|&a| f.mul(a, inv)).collect())
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn divrem(&self, d: &Poly, f: Fp) -> (Poly, Poly) {
        let dd = d.degree().expect("polynomial division by zero");
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let inv = f.inv(d.lead());
        let mut q = vec![0u64; r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = f.mul(r[i], inv);
            if c == 0 {
                continue;
            }
            q[i - dd] = c;
            for (j, &b) in d.0.iter().enumerate() {
                let k = i - dd + j;
                r[k] = f.sub(r[k], f.mul(c, b));
            }
        }
        (Poly::from_coeffs(q), Poly::from_coeffs(r))
    }

    pub fn rem(&self, d: &Poly, f: Fp) -> Poly {
        self.divrem(d, f).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Poly, f: Fp) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b, f);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn derivative(&self, f: Fp) -> Poly {
        let c = self
            .0
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| f.mul(a, i as u64 % f.p()))
            .collect();
        Poly::from_coeffs(c)
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u64, m: &Poly, f: Fp) -> Poly {
        let mut base = self.rem(m, f);
        let mut acc = Poly::one().rem(m, f);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, f).rem(m, f);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, f).rem(m, f);
            }
        }
        acc
    }

    /// Evaluate at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, x: &Matrix, f: Fp) -> Matrix {
        let n = x.rows();
        let mut acc = Matrix::zeros(n, n);
        for &c in self.0.iter().rev() {
            acc = acc.mul(x, f);
            acc.add_scaled(&Matrix::identity(n), c, f);
        }
        acc
    }
}

/// Characteristic polynomial `det(t I - x)` by the Faddeev-LeVerrier
/// recursion. Requires `p > n`, which callers guarantee through the radical
/// guard.
pub fn charpoly(x: &Matrix, f: Fp) -> Poly {
    let n = x.rows();
    assert!(x.is_square());
    assert!((n as u64) < f.p(), "Faddeev-LeVerrier needs p > n");
    let mut coeffs = vec![0u64; n + 1];
    coeffs[n] = 1;
    let mut m = Matrix::zeros(n, n);
    for k in 1..=n {
        let mut next = x.mul(&m, f);
        next.add_scaled(&Matrix::identity(n), coeffs[n - k + 1], f);
        m = next;
        let tr = x.mul(&m, f).trace(f);
        coeffs[n - k] = f.neg(f.mul(tr, f.inv(k as u64)));
    }
    Poly::from_coeffs(coeffs)
}

/// A proper monic factor `h` of the squarefree part of `chi` that is coprime
/// to its cofactor, or `None` when that squarefree part is irreducible.
///
/// Distinct-degree factorization isolates factors of different degrees; a
/// product of several irreducibles of one degree is split by the randomized
/// equal-degree step. Odd `p` only.
pub fn proper_coprime_factor<R: Rng>(chi: &Poly, f: Fp, rng: &mut R) -> Option<Poly> {
    let chi = chi.monic(f);
    let deg = chi.degree()?;
    if deg == 0 {
        return None;
    }
    let d = chi.derivative(f);
    let sq = if d.is_zero() {
        chi.clone()
    } else {
        chi.divrem(&chi.gcd(&d, f), f).0.monic(f)
    };
    let sdeg = sq.degree().unwrap_or(0);
    if sdeg <= 1 {
        return None;
    }
    let t = Poly::t();
    let mut frob = t.clone();
    let mut k = 0;
    loop {
        k += 1;
        if 2 * k > sdeg {
            // No factor of degree below k, so `sq` is irreducible.
            break;
        }
        frob = frob.powmod(f.p(), &sq, f);
        let g = sq.gcd(&frob.sub(&t, f), f);
        let gdeg = g.degree().unwrap_or(0);
        if gdeg == 0 {
            continue;
        }
        if gdeg < sdeg {
            return Some(g);
        }
        // Every irreducible factor has degree k and there are at least two.
        return equal_degree_split(&g, k, f, rng);
    }
    None
}

fn equal_degree_split<R: Rng>(g: &Poly, k: usize, f: Fp, rng: &mut R) -> Option<Poly> {
    let n = g.degree()?;
    if f.p() == 2 {
        return None;
    }
    let half = (f.p() - 1) / 2;
    for _ in 0..256 {
        let a = Poly::from_coeffs((0..n).map(|_| rng.gen_range(0..f.p())).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let direct = g.gcd(&a, f);
        if let Some(d) = direct.degree() {
            if d > 0 && d < n {
                return Some(direct);
            }
        }
        // a^((p^k - 1) / 2) = (a * a^p * ... * a^(p^(k-1)))^((p - 1) / 2)
        let mut x = a.rem(g, f);
        let mut norm = x.clone();
        for _ in 1..k {
            x = x.powmod(f.p(), g, f);
            norm = norm.mul(&x, f).rem(g, f);
        }
        let b = norm.powmod(half, g, f).sub(&Poly::one(), f);
        let h = g.gcd(&b, f);
        if let Some(d) = h.degree() {
            if d > 0 && d < n {
                return Some(h);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const F: Fp = Fp::new(101);

    #[test]
    fn charpoly_of_companion() {
        // Companion matrix of t^2 - 3t + 2 = (t - 1)(t - 2).
        let x = Matrix::from_rows(&[vec![0, F.neg(2)], vec![1, 3]], 2);
        assert_eq!(charpoly(&x, F), Poly(vec![2, F.neg(3), 1]));
    }

    #[test]
    fn splits_distinct_roots() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let chi = Poly(vec![2, F.neg(3), 1]);
        let h = proper_coprime_factor(&chi, F, &mut rng).unwrap();
        assert_eq!(h.degree(), Some(1));
        assert!(chi.rem(&h, F).is_zero());
    }

    #[test]
    fn irreducible_and_powers_do_not_split() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        // 2 is a quadratic non-residue mod 101.
        let irr = Poly(vec![F.neg(2), 0, 1]);
        assert!(proper_coprime_factor(&irr, F, &mut rng).is_none());
        let sq = Poly(vec![1, F.neg(2), 1]); // (t - 1)^2
        assert!(proper_coprime_factor(&sq, F, &mut rng).is_none());
    }

    #[test]
    fn equal_degree_products_split() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = Poly(vec![F.neg(2), 0, 1]);
        let b = Poly(vec![F.neg(3), 0, 1]); // 3 is a non-residue mod 101
        let chi = a.mul(&b, F);
        let h = proper_coprime_factor(&chi, F, &mut rng).unwrap();
        assert_eq!(h.degree(), Some(2));
        assert!(chi.rem(&h, F).is_zero());
    }
}
