//! Bounded complexes of projectives, chain maps and Hom in the homotopy
//! category.

use crate::algebra::Algebra;
use crate::decomp::MatrixAlgebra;
use crate::linalg::{Fp, Matrix};
use crate::proj::PMap;

/// Coordinates on `Hom(⊕ P(source), ⊕ P(target))`: one per basis path of
/// each entry.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: Vec<usize>,
    target: Vec<usize>,
    index: Vec<(usize, usize, usize)>,
    /// Offset of entry `(l, k)`, row-major.
    starts: Vec<usize>,
}

impl HomSpace {
    pub fn new(alg: &Algebra, source: &[usize], target: &[usize]) -> Self {
        let mut index = Vec::new();
        let mut starts = Vec::with_capacity(source.len() * target.len());
        for (l, &j) in target.iter().enumerate() {
            for (k, &i) in source.iter().enumerate() {
                starts.push(index.len());
                for &b in alg.basis_between(j, i) {
                    index.push((l, k, b));
                }
            }
        }
        HomSpace {
            source: source.to_vec(),
            target: target.to_vec(),
            index,
            starts,
        }
    }

    fn start(&self, l: usize, k: usize) -> usize {
        self.starts[l * self.source.len() + k]
    }

    pub fn dim(&self) -> usize {
        self.index.len()
    }

    pub fn coords(&self, m: &PMap) -> Vec<u64> {
        self.index
            .iter()
            .map(|&(l, k, b)| m.entry(l, k)[b])
            .collect()
    }

    pub fn element(&self, alg: &Algebra, coords: &[u64]) -> PMap {
        let mut m = PMap::zero(alg, &self.source, &self.target);
        for (&(l, k, b), &c) in self.index.iter().zip(coords) {
            m.entry_mut(l, k)[b] = c;
        }
        m
    }

    pub fn basis_element(&self, alg: &Algebra, i: usize) -> PMap {
        let (l, k, b) = self.index[i];
        let mut m = PMap::zero(alg, &self.source, &self.target);
        m.entry_mut(l, k)[b] = 1;
        m
    }
}

/// A complex of projectives in degrees `lo, lo + 1, ...`; `diffs[i]` maps
/// the term in degree `lo + i` to the next one.
#[derive(Clone, Debug)]
pub struct ProjComplex {
    alg: Algebra,
    lo: i32,
    terms: Vec<Vec<usize>>,
    diffs: Vec<PMap>,
}

impl PartialEq for ProjComplex {
    fn eq(&self, other: &Self) -> bool {
        std::sync::Arc::ptr_eq(&self.alg, &other.alg)
            && self.lo == other.lo
            && self.terms == other.terms
            && self.diffs == other.diffs
    }
}

/// The unminimized cone of a map of two-term complexes lives in degrees
/// -2, -1, 0.
pub type ThreeTermComplex = ProjComplex;

impl ProjComplex {
    pub fn new(alg: &Algebra, lo: i32, terms: Vec<Vec<usize>>, diffs: Vec<PMap>) -> Self {
        assert_eq!(diffs.len() + 1, terms.len().max(1));
        for (i, d) in diffs.iter().enumerate() {
            assert_eq!(d.source(), terms[i].as_slice());
            assert_eq!(d.target(), terms[i + 1].as_slice());
        }
        ProjComplex {
            alg: alg.clone(),
            lo,
            terms,
            diffs,
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.terms.len() as i32 - 1
    }

    /// Term in degree `deg`, empty outside the stored range.
    pub fn term(&self, deg: i32) -> &[usize] {
        let i = deg - self.lo;
        if i < 0 || i as usize >= self.terms.len() {
            &[]
        } else {
            &self.terms[i as usize]
        }
    }

    /// Differential out of degree `deg`.
    pub fn diff(&self, deg: i32) -> PMap {
        let i = deg - self.lo;
        if i >= 0 && (i as usize) < self.diffs.len() {
            self.diffs[i as usize].clone()
        } else {
            PMap::zero(&self.alg, self.term(deg), self.term(deg + 1))
        }
    }

    pub fn terms(&self) -> &[Vec<usize>] {
        &self.terms
    }

    pub fn diffs(&self) -> &[PMap] {
        &self.diffs
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(Vec::is_empty)
    }

    pub fn is_complex(&self) -> bool {
        self.diffs.windows(2).all(|w| w[0].then(&w[1]).is_zero())
    }

    /// Degrees carrying a nonzero term.
    pub fn support(&self) -> Vec<i32> {
        (self.lo..=self.hi())
            .filter(|&d| !self.term(d).is_empty())
            .collect()
    }

    /// The same complex stored over the degree range `lo..=hi`, which must
    /// contain every nonzero term.
    pub fn with_range(&self, lo: i32, hi: i32) -> ProjComplex {
        assert!(self.support().iter().all(|&d| lo <= d && d <= hi));
        let terms: Vec<Vec<usize>> = (lo..=hi).map(|d| self.term(d).to_vec()).collect();
        let diffs = (lo..hi).map(|d| self.diff(d)).collect();
        ProjComplex::new(&self.alg, lo, terms, diffs)
    }

    pub fn direct_sum(parts: &[ProjComplex]) -> ProjComplex {
        let alg = parts[0].alg.clone();
        let lo = parts.iter().map(|p| p.lo).min().unwrap();
        let hi = parts.iter().map(ProjComplex::hi).max().unwrap();
        let terms: Vec<Vec<usize>> = (lo..=hi)
            .map(|d| {
                parts
                    .iter()
                    .flat_map(|p| p.term(d).iter().copied())
                    .collect()
            })
            .collect();
        let diffs = (lo..hi)
            .map(|d| {
                let src = &terms[(d - lo) as usize];
                let tgt = &terms[(d - lo + 1) as usize];
                let mut m = PMap::zero(&alg, src, tgt);
                let (mut r0, mut c0) = (0, 0);
                for p in parts {
                    let pd = p.diff(d);
                    for l in 0..pd.target().len() {
                        for k in 0..pd.source().len() {
                            *m.entry_mut(r0 + l, c0 + k) = pd.entry(l, k).to_vec();
                        }
                    }
                    r0 += pd.target().len();
                    c0 += pd.source().len();
                }
                m
            })
            .collect();
        ProjComplex::new(&alg, lo, terms, diffs)
    }

    /// Reorders every term by vertex, stably.
    pub fn sorted(&self) -> ProjComplex {
        let perms: Vec<Vec<usize>> = self
            .terms
            .iter()
            .map(|t| {
                let mut idx: Vec<usize> = (0..t.len()).collect();
                idx.sort_by_key(|&i| t[i]);
                idx
            })
            .collect();
        let terms = self
            .terms
            .iter()
            .zip(&perms)
            .map(|(t, p)| p.iter().map(|&i| t[i]).collect())
            .collect();
        let diffs = self
            .diffs
            .iter()
            .enumerate()
            .map(|(i, d)| d.select(&perms[i + 1], &perms[i]))
            .collect();
        ProjComplex::new(&self.alg, self.lo, terms, diffs)
    }

    /// The shift `[1]`: degrees move down by one and differentials change
    /// sign.
    pub fn shift(&self) -> ProjComplex {
        let minus = self.alg.fp().neg(1);
        ProjComplex::new(
            &self.alg,
            self.lo - 1,
            self.terms.clone(),
            self.diffs.iter().map(|d| d.scale(minus)).collect(),
        )
    }
}

/// A map `c^i: P^i -> Q^{i + shift}` for every degree of `P`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainMap {
    pub source: ProjComplex,
    pub target: ProjComplex,
    pub shift: i32,
    /// Indexed by the degree of `source`, from `source.lo()`.
    pub maps: Vec<PMap>,
}

impl ChainMap {
    pub fn component(&self, deg: i32) -> PMap {
        let i = deg - self.source.lo();
        if i >= 0 && (i as usize) < self.maps.len() {
            self.maps[i as usize].clone()
        } else {
            PMap::zero(
                self.source.algebra(),
                self.source.term(deg),
                self.target.term(deg + self.shift),
            )
        }
    }

    pub fn zero(source: &ProjComplex, target: &ProjComplex, shift: i32) -> ChainMap {
        let maps = (source.lo()..=source.hi())
            .map(|d| PMap::zero(source.algebra(), source.term(d), target.term(d + shift)))
            .collect();
        ChainMap {
            source: source.clone(),
            target: target.clone(),
            shift,
            maps,
        }
    }

    pub fn identity(p: &ProjComplex) -> ChainMap {
        let maps = (p.lo()..=p.hi())
            .map(|d| PMap::identity(p.algebra(), p.term(d)))
            .collect();
        ChainMap {
            source: p.clone(),
            target: p.clone(),
            shift: 0,
            maps,
        }
    }

    /// The square condition `d_Q c = (-1)^shift c d_P` in every degree.
    pub fn is_chain_map(&self) -> bool {
        let f = self.source.algebra().fp();
        let sign = if self.shift % 2 == 0 { 1 } else { f.neg(1) };
        (self.source.lo() - 1..=self.source.hi()).all(|d| {
            let lhs = self
                .component(d)
                .then(&self.target.diff(d + self.shift))
                .scale(sign);
            let rhs = self.source.diff(d).then(&self.component(d + 1));
            lhs == rhs
        })
    }

    /// `other ∘ self`; both of shift zero.
    pub fn then(&self, other: &ChainMap) -> ChainMap {
        assert_eq!(self.shift, 0);
        assert_eq!(other.shift, 0);
        let maps = (self.source.lo()..=self.source.hi())
            .map(|d| self.component(d).then(&other.component(d)))
            .collect();
        ChainMap {
            source: self.source.clone(),
            target: other.target.clone(),
            shift: 0,
            maps,
        }
    }

    pub fn add_scaled(&self, other: &ChainMap, s: u64) -> ChainMap {
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| a.add_scaled(b, s))
            .collect();
        ChainMap {
            source: self.source.clone(),
            target: self.target.clone(),
            shift: self.shift,
            maps,
        }
    }
}

/// A null-homotopy `h^i: P^i -> Q^{i + shift - 1}` of a chain map.
#[derive(Clone, Debug, PartialEq)]
pub struct HomotopyWitness {
    pub shift: i32,
    /// Indexed by the degree of the source, from its `lo()`.
    pub maps: Vec<PMap>,
}

/// `Hom(P, Q[shift])` in the homotopy category: cycles `Z`, boundaries `B`
/// and representatives of a basis of `Z / B`, all in the coordinates of
/// [`HomSpace`]s stacked over the degrees of `P`.
#[derive(Clone, Debug)]
pub struct HtpyHom {
    source: ProjComplex,
    target: ProjComplex,
    shift: i32,
    spaces: Vec<HomSpace>,
    offsets: Vec<usize>,
    homotopy_spaces: Vec<HomSpace>,
    cycles: Matrix,
    boundaries: Matrix,
    boundary_map: Matrix,
    classes: Matrix,
}

impl HtpyHom {
    pub fn dim(&self) -> usize {
        self.classes.cols()
    }

    pub fn source(&self) -> &ProjComplex {
        &self.source
    }

    pub fn target(&self) -> &ProjComplex {
        &self.target
    }

    /// Total dimension of the space of degree-wise maps.
    pub fn ambient_dim(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn cycle_dim(&self) -> usize {
        self.cycles.cols()
    }

    /// Column basis of the null-homotopic chain maps.
    pub fn boundaries(&self) -> &Matrix {
        &self.boundaries
    }

    pub fn cycles(&self) -> &Matrix {
        &self.cycles
    }

    /// Representatives of a basis of the homotopy classes.
    pub fn class_vectors(&self) -> &Matrix {
        &self.classes
    }

    pub fn coords(&self, c: &ChainMap) -> Vec<u64> {
        let mut v = Vec::with_capacity(self.ambient_dim());
        for (i, d) in (self.source.lo()..=self.source.hi()).enumerate() {
            v.extend(self.spaces[i].coords(&c.component(d)));
        }
        v
    }

    pub fn chain_map(&self, v: &[u64]) -> ChainMap {
        let alg = self.source.algebra();
        let maps = self
            .spaces
            .iter()
            .enumerate()
            .map(|(i, s)| s.element(alg, &v[self.offsets[i]..self.offsets[i + 1]]))
            .collect();
        ChainMap {
            source: self.source.clone(),
            target: self.target.clone(),
            shift: self.shift,
            maps,
        }
    }

    /// Chain maps representing a basis of the homotopy classes.
    pub fn basis(&self) -> Vec<ChainMap> {
        (0..self.classes.cols())
            .map(|j| self.chain_map(&self.classes.column(j)))
            .collect()
    }

    pub fn is_null_homotopic(&self, c: &ChainMap) -> bool {
        let f = self.source.algebra().fp();
        let v = Matrix::from_columns(&[self.coords(c)], self.ambient_dim());
        self.boundaries.solve(&v, f).is_some()
    }

    /// Coordinates of the class of a cycle in the basis [`Self::basis`].
    pub fn class_coords(&self, c: &ChainMap) -> Vec<u64> {
        let f = self.source.algebra().fp();
        let full = self.classes.hstack(&self.boundaries);
        let v = Matrix::from_columns(&[self.coords(c)], self.ambient_dim());
        let x = full.solve(&v, f).expect("argument is a chain map");
        x.column(0)[..self.dim()].to_vec()
    }

    /// A null-homotopy of `c`, if it is null-homotopic.
    pub fn witness(&self, c: &ChainMap) -> Option<HomotopyWitness> {
        let f = self.source.algebra().fp();
        let alg = self.source.algebra();
        let v = Matrix::from_columns(&[self.coords(c)], self.ambient_dim());
        let h = self.boundary_map.solve(&v, f)?.column(0);
        let mut maps = Vec::new();
        let mut off = 0;
        for s in &self.homotopy_spaces {
            maps.push(s.element(alg, &h[off..off + s.dim()]));
            off += s.dim();
        }
        Some(HomotopyWitness {
            shift: self.shift,
            maps,
        })
    }
}

/// Chain maps `P -> Q[shift]` modulo null-homotopy.
pub fn hom_htpy(p: &ProjComplex, q: &ProjComplex, shift: i32) -> HtpyHom {
    let alg = p.algebra();
    let f = alg.fp();
    let sign = if shift.rem_euclid(2) == 0 {
        1
    } else {
        f.neg(1)
    };
    let degrees: Vec<i32> = (p.lo()..=p.hi()).collect();

    let spaces: Vec<HomSpace> = degrees
        .iter()
        .map(|&d| HomSpace::new(alg, p.term(d), q.term(d + shift)))
        .collect();
    let mut offsets = vec![0];
    for s in &spaces {
        offsets.push(offsets.last().unwrap() + s.dim());
    }
    let total = *offsets.last().unwrap();

    // Cycle conditions: sign * d_Q c^d - c^{d+1} d_P, as maps P^d -> Q^{d+shift+1}.
    let eq_spaces: Vec<HomSpace> = degrees
        .iter()
        .map(|&d| HomSpace::new(alg, p.term(d), q.term(d + shift + 1)))
        .collect();
    let eq_total: usize = eq_spaces.iter().map(HomSpace::dim).sum();
    let eq_offsets = prefix_sums(&eq_spaces);
    let ranks = path_ranks(alg);
    let mut sys = Matrix::zeros(eq_total, total);
    for (i, &d) in degrees.iter().enumerate() {
        let dq = q.diff(d + shift);
        let dp = p.diff(d - 1);
        for b in 0..spaces[i].dim() {
            let col = offsets[i] + b;
            let at = spaces[i].index[b];
            // contributes sign * d_Q c to equation d
            let out = Block {
                space: &eq_spaces[i],
                off: eq_offsets[i],
                ranks: &ranks,
            };
            post_compose(&mut sys, col, out, at, &dq, sign);
            // contributes -c d_P to equation d - 1
            if i > 0 {
                let out = Block {
                    space: &eq_spaces[i - 1],
                    off: eq_offsets[i - 1],
                    ranks: &ranks,
                };
                pre_compose(&mut sys, col, out, at, &dp, f.neg(1));
            }
        }
    }
    let cycles = sys.nullspace(f);

    // Boundaries: c^d = sign * d_Q h^d + h^{d+1} d_P.
    let homotopy_spaces: Vec<HomSpace> = degrees
        .iter()
        .map(|&d| HomSpace::new(alg, p.term(d), q.term(d + shift - 1)))
        .collect();
    let h_total: usize = homotopy_spaces.iter().map(HomSpace::dim).sum();
    let mut bmap = Matrix::zeros(total, h_total);
    let mut hcol = 0;
    for (i, &d) in degrees.iter().enumerate() {
        let dq = q.diff(d + shift - 1);
        let dp = p.diff(d - 1);
        for b in 0..homotopy_spaces[i].dim() {
            let at = homotopy_spaces[i].index[b];
            let out = Block {
                space: &spaces[i],
                off: offsets[i],
                ranks: &ranks,
            };
            post_compose(&mut bmap, hcol, out, at, &dq, sign);
            if i > 0 {
                let out = Block {
                    space: &spaces[i - 1],
                    off: offsets[i - 1],
                    ranks: &ranks,
                };
                pre_compose(&mut bmap, hcol, out, at, &dp, 1);
            }
            hcol += 1;
        }
    }
    let boundaries = bmap.column_space(f);
    let joined = boundaries.hstack(&cycles);
    let extra: Vec<usize> = joined
        .independent_columns(f)
        .into_iter()
        .filter(|&c| c >= boundaries.cols())
        .collect();
    let classes = joined.select_columns(&extra);

    HtpyHom {
        source: p.clone(),
        target: q.clone(),
        shift,
        spaces,
        offsets,
        homotopy_spaces,
        cycles,
        boundaries,
        boundary_map: bmap,
        classes,
    }
}

fn prefix_sums(spaces: &[HomSpace]) -> Vec<usize> {
    let mut out = vec![0];
    for s in spaces {
        out.push(out.last().unwrap() + s.dim());
    }
    out
}

/// Position of each basis path within the basis paths sharing its endpoints.
fn path_ranks(alg: &Algebra) -> Vec<usize> {
    let mut ranks = vec![0; alg.dim()];
    for from in 0..alg.n() {
        for to in 0..alg.n() {
            for (r, &b) in alg.basis_between(from, to).iter().enumerate() {
                ranks[b] = r;
            }
        }
    }
    ranks
}

/// Rows of one hom space inside a larger system.
struct Block<'a> {
    space: &'a HomSpace,
    off: usize,
    ranks: &'a [usize],
}

impl Block<'_> {
    fn add(&self, sys: &mut Matrix, f: Fp, l: usize, k: usize, path: usize, col: usize, v: u64) {
        let row = self.off + self.space.start(l, k) + self.ranks[path];
        let cur = sys.get(row, col);
        sys.set(row, col, f.add(cur, v));
    }
}

/// Writes `s * (d ∘ c)` into column `col`, where `c` is the basis map with
/// the single path `b` in entry `(l, k)`.
fn post_compose(
    sys: &mut Matrix,
    col: usize,
    out: Block,
    (l, k, b): (usize, usize, usize),
    d: &PMap,
    s: u64,
) {
    let alg = d.algebra();
    let f = alg.fp();
    for m in 0..d.target().len() {
        for (j, &y) in d.entry(m, l).iter().enumerate() {
            if y == 0 {
                continue;
            }
            let y = f.mul(s, y);
            for &(t, c) in alg.mult_table(b, j) {
                out.add(sys, f, m, k, t, col, f.mul(y, c));
            }
        }
    }
}

/// Writes `s * (c ∘ d)` into column `col`, `c` as in `post_compose`.
fn pre_compose(
    sys: &mut Matrix,
    col: usize,
    out: Block,
    (l, k, b): (usize, usize, usize),
    d: &PMap,
    s: u64,
) {
    let alg = d.algebra();
    let f = alg.fp();
    for j in 0..d.source().len() {
        for (i, &x) in d.entry(k, j).iter().enumerate() {
            if x == 0 {
                continue;
            }
            let x = f.mul(s, x);
            for &(t, c) in alg.mult_table(i, b) {
                out.add(sys, f, l, j, t, col, f.mul(x, c));
            }
        }
    }
}

/// The homotopy endomorphism algebra of `p` in its left regular
/// representation.
pub fn htpy_end_algebra(p: &ProjComplex) -> MatrixAlgebra {
    let f = p.algebra().fp();
    let hom = hom_htpy(p, p, 0);
    let basis = hom.basis();
    let n = basis.len();
    let regular = basis
        .iter()
        .map(|x| {
            let cols: Vec<Vec<u64>> = basis.iter().map(|y| hom.class_coords(&y.then(x))).collect();
            Matrix::from_columns(&cols, n)
        })
        .collect();
    MatrixAlgebra::new(regular, f)
}

/// Cone of a degree-zero chain map `c: X -> Y`: `X[1] ⊕ Y` with
/// differential `[[-d_X, 0], [c, d_Y]]`.
pub fn cone(c: &ChainMap) -> ProjComplex {
    assert_eq!(c.shift, 0);
    let x = &c.source;
    let y = &c.target;
    let alg = x.algebra();
    let minus = alg.fp().neg(1);
    let lo = (x.lo() - 1).min(y.lo());
    let hi = (x.hi() - 1).max(y.hi());
    let terms: Vec<Vec<usize>> = (lo..=hi)
        .map(|d| x.term(d + 1).iter().chain(y.term(d)).copied().collect())
        .collect();
    let diffs = (lo..hi)
        .map(|d| {
            let dx = x.diff(d + 1).scale(minus);
            let cd = c.component(d + 1);
            let dy = y.diff(d);
            PMap::blocks(
                alg,
                (x.term(d + 1), y.term(d)),
                (x.term(d + 2), y.term(d + 1)),
                [[Some(&dx), None], [Some(&cd), Some(&dy)]],
            )
        })
        .collect();
    ProjComplex::new(alg, lo, terms, diffs)
}

/// Removes contractible summands `P(v) --unit--> P(v)` by Gaussian
/// elimination until no differential has an invertible entry, then sorts
/// the terms.
pub fn minimize(c: &ProjComplex) -> ProjComplex {
    let alg = c.algebra().clone();
    let mut terms = c.terms().to_vec();
    let mut diffs = c.diffs().to_vec();
    'search: loop {
        for i in 0..diffs.len() {
            let Some((l, k)) = diffs[i].invertible_entry() else {
                continue;
            };
            let v = terms[i][k];
            let d = &diffs[i];
            let rows: Vec<usize> = (0..terms[i + 1].len()).filter(|&r| r != l).collect();
            let cols: Vec<usize> = (0..terms[i].len()).filter(|&r| r != k).collect();
            let alpha = d.select(&rows, &cols);
            let beta = d.select(&rows, &[k]);
            let gamma = d.select(&[l], &cols);
            let phi_inv = {
                let mut m = PMap::zero(&alg, &[v], &[v]);
                *m.entry_mut(0, 0) = alg.local_inverse(d.entry(l, k), v);
                m
            };
            let correction = gamma.then(&phi_inv).then(&beta);
            let new_d = alpha.sub(&correction);
            if i > 0 {
                let prev_rows: Vec<usize> = cols.clone();
                let prev_cols: Vec<usize> = (0..terms[i - 1].len()).collect();
                diffs[i - 1] = diffs[i - 1].select(&prev_rows, &prev_cols);
            }
            if i + 1 < diffs.len() {
                let next_rows: Vec<usize> = (0..terms[i + 2].len()).collect();
                diffs[i + 1] = diffs[i + 1].select(&next_rows, &rows);
            }
            diffs[i] = new_d;
            terms[i].remove(k);
            terms[i + 1].remove(l);
            continue 'search;
        }
        break;
    }
    ProjComplex::new(&alg, c.lo(), terms, diffs).sorted()
}

/// Whether every homotopy class of `Hom(X, Y)` is a combination of the
/// given chain maps `X -> Y` up to null-homotopy.
pub fn spans_classes(hom_xy: &HtpyHom, maps: &[ChainMap]) -> bool {
    let f = hom_xy.source().algebra().fp();
    let mut span = hom_xy.boundaries().clone();
    for c in maps {
        span = span.hstack(&Matrix::from_columns(
            &[hom_xy.coords(c)],
            hom_xy.ambient_dim(),
        ));
    }
    let r = span.rank(f);
    span.hstack(hom_xy.class_vectors()).rank(f) == r
}
