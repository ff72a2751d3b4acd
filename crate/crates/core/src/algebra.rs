//! Bound quiver algebras `kQ/I` over a prime field.
//!
//! Path words are written in traversal order: `[a, b]` means "follow `a`,
//! then `b`". Products compose right to left, so for basis paths `x` and `y`
//! the product `x * y` is the word of `y` followed by the word of `x`. With
//! this convention `P(i) = Λ e_i` is spanned by the basis paths starting at
//! `i`, and an arrow `a: i -> j` acts on a left module as a map from the
//! vertex-`i` space to the vertex-`j` space.
//!
//! The basis is found by closing over path words of increasing length and
//! reducing against the span of the relation ideal, one `(source, target)`
//! stratum at a time. Within a stratum the earliest-constructed word survives
//! as the normal form.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::linalg::{is_prime, Fp, Matrix};

pub const DEFAULT_PRIME: u64 = 32003;
pub const DEFAULT_LENGTH_BOUND: usize = 64;

/// Upper limit on the number of path words examined while closing the basis.
const WORD_CAP: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub p: u64,
}

impl FieldSpec {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::BadInput(format!("field modulus {p} is not prime")));
        }
        if p >= 1 << 31 {
            return Err(Error::BadInput(format!("field modulus {p} exceeds 2^31")));
        }
        Ok(FieldSpec { p })
    }

    pub fn fp(&self) -> Fp {
        Fp::new(self.p)
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec { p: DEFAULT_PRIME }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Arrows are given as `(name, from, to)` with vertex labels.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::BadInput(format!("duplicate vertex label `{v}`")));
            }
        }
        let lookup = |label: &str| {
            vertices
                .iter()
                .position(|v| v == label)
                .ok_or_else(|| Error::BadInput(format!("arrow endpoint `{label}` is not a vertex")))
        };
        let mut out = Vec::with_capacity(arrows.len());
        for (name, from, to) in arrows {
            let name = name.as_ref().to_string();
            if out.iter().any(|a: &Arrow| a.name == name) {
                return Err(Error::BadInput(format!("duplicate arrow name `{name}`")));
            }
            out.push(Arrow {
                name,
                source: lookup(from.as_ref())?,
                target: lookup(to.as_ref())?,
            });
        }
        Ok(Quiver {
            vertices,
            arrows: out,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Same vertices and arrow names, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }
}

/// A linear combination of parallel paths, each of length at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSpec {
    pub terms: Vec<(i64, Vec<String>)>,
}

impl RelationSpec {
    pub fn new(terms: Vec<(i64, Vec<String>)>) -> Self {
        RelationSpec { terms }
    }

    /// A single path set to zero.
    pub fn monomial<S: AsRef<str>>(path: &[S]) -> Self {
        RelationSpec {
            terms: vec![(1, path.iter().map(|s| s.as_ref().to_string()).collect())],
        }
    }
}

/// A path word: a start vertex and a sequence of arrow indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn target(&self, q: &Quiver) -> usize {
        self.arrows
            .last()
            .map_or(self.source, |&a| q.arrows[a].target)
    }

    /// `self` followed by `next`; `None` when the endpoints do not meet.
    pub fn then(&self, next: &Path, q: &Quiver) -> Option<Path> {
        if self.target(q) != next.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&next.arrows);
        Some(Path {
            source: self.source,
            arrows,
        })
    }

    pub fn reversed(&self, q: &Quiver) -> Path {
        Path {
            source: self.target(q),
            arrows: self.arrows.iter().rev().copied().collect(),
        }
    }

    pub fn label(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", q.vertices[self.source])
        } else {
            self.arrows
                .iter()
                .map(|&a| q.arrows[a].name.as_str())
                .collect::<Vec<_>>()
                .join("")
        }
    }
}

#[derive(Clone, Debug)]
struct Relation {
    source: usize,
    target: usize,
    terms: Vec<(u64, Vec<usize>)>,
}

/// Sparse element: `(basis index, coefficient)` pairs.
pub type Sparse = Vec<(usize, u64)>;

#[derive(Debug)]
pub struct BoundQuiverAlgebra {
    field: FieldSpec,
    quiver: Quiver,
    relations: Vec<Relation>,
    relation_specs: Vec<RelationSpec>,
    basis: Vec<Path>,
    basis_target: Vec<usize>,
    /// `between[from * n + to]`: basis paths from `from` to `to`.
    between: Vec<Vec<usize>>,
    /// Normal forms of every word shorter than `truncation`.
    normal: HashMap<Path, Sparse>,
    truncation: usize,
    /// `mult[i][j]` is the product `basis[i] * basis[j]`.
    mult: Vec<Vec<Sparse>>,
    opposite: OnceLock<Arc<BoundQuiverAlgebra>>,
}

pub type Algebra = Arc<BoundQuiverAlgebra>;

/// Build `kQ/I` with the default closure bound.
pub fn build_algebra(
    field: FieldSpec,
    quiver: Quiver,
    relations: &[RelationSpec],
) -> Result<Algebra> {
    build_algebra_with_bound(field, quiver, relations, DEFAULT_LENGTH_BOUND)
}

pub fn build_algebra_with_bound(
    field: FieldSpec,
    quiver: Quiver,
    relations: &[RelationSpec],
    bound: usize,
) -> Result<Algebra> {
    let f = field.fp();
    let rels = relations
        .iter()
        .map(|r| resolve_relation(r, &quiver, f))
        .collect::<Result<Vec<_>>>()?;

    for t in 2..=bound + 1 {
        let Some(closure) = close(&quiver, &rels, t, f)? else {
            continue;
        };
        return Ok(Arc::new(assemble(
            field,
            quiver,
            rels,
            relations.to_vec(),
            closure,
            t,
        )));
    }
    Err(Error::NonAdmissible(format!(
        "path closure did not stabilize within length {bound}"
    )))
}

fn resolve_relation(r: &RelationSpec, q: &Quiver, f: Fp) -> Result<Relation> {
    if r.terms.is_empty() {
        return Err(Error::BadInput("relation with no terms".into()));
    }
    let mut ends = None;
    let mut terms = Vec::new();
    for (coeff, names) in &r.terms {
        if names.len() < 2 {
            return Err(Error::NonAdmissible(format!(
                "relation term of length {} (admissible relations need length >= 2)",
                names.len()
            )));
        }
        let mut arrows = Vec::with_capacity(names.len());
        for name in names {
            let a = q
                .arrow_index(name)
                .ok_or_else(|| Error::BadInput(format!("unknown arrow `{name}` in relation")))?;
            if let Some(&prev) = arrows.last() {
                let prev: usize = prev;
                if q.arrows[prev].target != q.arrows[a].source {
                    return Err(Error::BadInput(format!(
                        "path {:?} is not composable at `{name}`",
                        names
                    )));
                }
            }
            arrows.push(a);
        }
        let s = q.arrows[arrows[0]].source;
        let t = q.arrows[*arrows.last().unwrap()].target;
        match ends {
            None => ends = Some((s, t)),
            Some(e) if e != (s, t) => {
                return Err(Error::BadInput(
                    "relation terms do not share source and target".into(),
                ))
            }
            _ => {}
        }
        terms.push((f.from_i64(*coeff), arrows));
    }
    let (source, target) = ends.unwrap();
    Ok(Relation {
        source,
        target,
        terms,
    })
}

struct Closure {
    /// All words shorter than the truncation length, in construction order.
    words: Vec<Path>,
    /// For each word, its normal form as `(word index, coeff)`.
    reduced: Vec<Vec<(usize, u64)>>,
    is_basis: Vec<bool>,
}

/// Compute `kQ / (I + R^t)`. Returns `None` unless every word of length
/// `t - 1` vanishes there, which means the closure has stabilized.
fn close(q: &Quiver, rels: &[Relation], t: usize, f: Fp) -> Result<Option<Closure>> {
    let n = q.vertices.len();
    let mut words: Vec<Path> = (0..n).map(Path::trivial).collect();
    let mut layer_start = 0;
    for _len in 1..t {
        let layer_end = words.len();
        for w in layer_start..layer_end {
            let end = words[w].target(q);
            for (ai, a) in q.arrows.iter().enumerate() {
                if a.source == end {
                    let mut arrows = words[w].arrows.clone();
                    arrows.push(ai);
                    words.push(Path {
                        source: words[w].source,
                        arrows,
                    });
                    if words.len() > WORD_CAP {
                        return Err(Error::NonAdmissible(format!(
                            "more than {WORD_CAP} path words below length {t}"
                        )));
                    }
                }
            }
        }
        layer_start = layer_end;
    }
    let index: HashMap<&Path, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();

    // Strata of parallel words.
    let mut strata: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (i, w) in words.iter().enumerate() {
        strata.entry((w.source, w.target(q))).or_default().push(i);
    }

    let mut ideal: HashMap<(usize, usize), Vec<Vec<(usize, u64)>>> = HashMap::new();
    for r in rels {
        let min_len = r.terms.iter().map(|(_, w)| w.len()).min().unwrap_or(0);
        if min_len >= t {
            continue;
        }
        let prefixes: Vec<&Path> = words.iter().filter(|w| w.target(q) == r.source).collect();
        let suffixes: Vec<&Path> = words.iter().filter(|w| w.source == r.target).collect();
        for u in &prefixes {
            for v in &suffixes {
                if u.len() + v.len() + min_len >= t {
                    continue;
                }
                let mut elem: Vec<(usize, u64)> = Vec::new();
                for (c, mid) in &r.terms {
                    if u.len() + mid.len() + v.len() >= t || *c == 0 {
                        continue;
                    }
                    let mut arrows = u.arrows.clone();
                    arrows.extend_from_slice(mid);
                    arrows.extend_from_slice(&v.arrows);
                    let w = Path {
                        source: u.source,
                        arrows,
                    };
                    elem.push((index[&w], *c));
                }
                if !elem.is_empty() {
                    ideal.entry((u.source, v.target(q))).or_default().push(elem);
                }
            }
        }
    }

    let mut reduced: Vec<Vec<(usize, u64)>> = (0..words.len()).map(|i| vec![(i, 1)]).collect();
    let mut is_basis = vec![true; words.len()];
    for (key, members) in &strata {
        let Some(rows) = ideal.get(key) else { continue };
        // Columns in descending construction order, so pivots land on the
        // latest words and the earliest ones remain as normal forms.
        let cols: Vec<usize> = members.iter().rev().copied().collect();
        let col_of: HashMap<usize, usize> = cols.iter().enumerate().map(|(c, &w)| (w, c)).collect();
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (r, elem) in rows.iter().enumerate() {
            for &(w, c) in elem {
                let cc = col_of[&w];
                m.set(r, cc, f.add(m.get(r, cc), c));
            }
        }
        let e = m.rref(f);
        for (ri, &pc) in e.pivots.iter().enumerate() {
            let w = cols[pc];
            is_basis[w] = false;
            let mut nf = Vec::new();
            for (cc, &other) in cols.iter().enumerate() {
                if cc != pc && !e.pivots.contains(&cc) {
                    let v = e.matrix.get(ri, cc);
                    if v != 0 {
                        nf.push((other, f.neg(v)));
                    }
                }
            }
            reduced[w] = nf;
        }
    }

    let stabilized = words
        .iter()
        .enumerate()
        .filter(|(_, w)| w.len() == t - 1)
        .all(|(i, _)| reduced[i].is_empty());
    if !stabilized {
        return Ok(None);
    }
    Ok(Some(Closure {
        words,
        reduced,
        is_basis,
    }))
}

fn assemble(
    field: FieldSpec,
    quiver: Quiver,
    relations: Vec<Relation>,
    relation_specs: Vec<RelationSpec>,
    closure: Closure,
    truncation: usize,
) -> BoundQuiverAlgebra {
    let n = quiver.vertices.len();
    let mut basis_of_word = vec![usize::MAX; closure.words.len()];
    let mut basis = Vec::new();
    for (i, w) in closure.words.iter().enumerate() {
        if closure.is_basis[i] {
            basis_of_word[i] = basis.len();
            basis.push(w.clone());
        }
    }
    let normal: HashMap<Path, Sparse> = closure
        .words
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let nf = closure.reduced[i]
                .iter()
                .map(|&(wi, c)| (basis_of_word[wi], c))
                .collect();
            (w.clone(), nf)
        })
        .collect();
    let basis_target: Vec<usize> = basis.iter().map(|b| b.target(&quiver)).collect();
    let mut between = vec![Vec::new(); n * n];
    for (i, b) in basis.iter().enumerate() {
        between[b.source * n + basis_target[i]].push(i);
    }

    let mut alg = BoundQuiverAlgebra {
        field,
        quiver,
        relations,
        relation_specs,
        basis,
        basis_target,
        between,
        normal,
        truncation,
        mult: Vec::new(),
        opposite: OnceLock::new(),
    };
    let d = alg.basis.len();
    let mut mult = vec![vec![Vec::new(); d]; d];
    for (i, row) in mult.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            // basis[i] * basis[j]: follow basis[j], then basis[i].
            if let Some(w) = alg.basis[j].then(&alg.basis[i], &alg.quiver) {
                *slot = alg.normal_form(&w);
            }
        }
    }
    alg.mult = mult;
    alg
}

impl BoundQuiverAlgebra {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn fp(&self) -> Fp {
        self.field.fp()
    }

    pub fn p(&self) -> u64 {
        self.field.p
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relation_specs(&self) -> &[RelationSpec] {
        &self.relation_specs
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.quiver.vertices.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_labels(&self) -> Vec<String> {
        self.basis.iter().map(|b| b.label(&self.quiver)).collect()
    }

    pub fn basis_source(&self, i: usize) -> usize {
        self.basis[i].source
    }

    pub fn basis_target(&self, i: usize) -> usize {
        self.basis_target[i]
    }

    /// Basis paths starting at `from` and ending at `to`.
    pub fn basis_between(&self, from: usize, to: usize) -> &[usize] {
        &self.between[from * self.n() + to]
    }

    /// Index of the vertex idempotent `e_v` (always `v`).
    pub fn idempotent(&self, v: usize) -> usize {
        debug_assert!(self.basis[v].is_empty() && self.basis[v].source == v);
        v
    }

    /// Longest nonzero path length plus one.
    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Normal form of an arbitrary path word.
    pub fn normal_form(&self, w: &Path) -> Sparse {
        if w.len() >= self.truncation {
            return Vec::new();
        }
        self.normal
            .get(w)
            .cloned()
            .expect("every short composable word has a normal form")
    }

    pub fn dense_of_path(&self, w: &Path) -> Vec<u64> {
        let mut v = vec![0; self.dim()];
        for (i, c) in self.normal_form(w) {
            v[i] = c;
        }
        v
    }

    pub fn basis_element(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    /// `basis[i] * basis[j]` as a sparse element.
    pub fn mult_table(&self, i: usize, j: usize) -> &Sparse {
        &self.mult[i][j]
    }

    /// Product of dense elements.
    pub fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let f = self.fp();
        let mut out = vec![0u64; self.dim()];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let ab = f.mul(a, b);
                for &(k, c) in &self.mult[i][j] {
                    out[k] = f.add(out[k], f.mul(ab, c));
                }
            }
        }
        out
    }

    /// Whether `x`, an element of `e_v Λ e_v`, is a unit there: its
    /// coefficient on `e_v` is nonzero.
    pub fn is_unit_at(&self, x: &[u64], v: usize) -> bool {
        x[self.idempotent(v)] != 0
    }

    /// Inverse of a unit of the local ring `e_v Λ e_v`.
    pub fn local_inverse(&self, x: &[u64], v: usize) -> Vec<u64> {
        let f = self.fp();
        let c = x[self.idempotent(v)];
        assert!(c != 0, "element is not a unit of e_v Λ e_v");
        let cinv = f.inv(c);
        // x = c (e_v - r) with r nilpotent; x^{-1} = c^{-1} (e_v + r + r^2 + ...).
        let mut r: Vec<u64> = x.iter().map(|&a| f.neg(f.mul(a, cinv))).collect();
        r[v] = 0;
        let mut term = self.basis_element(v);
        let mut acc = term.clone();
        for _ in 0..self.truncation {
            term = self.mul(&term, &r);
            if term.iter().all(|&a| a == 0) {
                break;
            }
            for (a, b) in acc.iter_mut().zip(&term) {
                *a = f.add(*a, *b);
            }
        }
        acc.iter().map(|&a| f.mul(a, cinv)).collect()
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        self.quiver.vertex_index(label)
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.quiver.vertices[v]
    }

    /// Relations as `(source, target, terms)` with resolved arrow indices.
    pub fn relations(&self) -> impl Iterator<Item = (usize, usize, &[(u64, Vec<usize>)])> {
        self.relations
            .iter()
            .map(|r| (r.source, r.target, r.terms.as_slice()))
    }

    /// The opposite algebra, built once and cached.
    pub fn opposite(&self) -> Algebra {
        self.opposite
            .get_or_init(|| {
                opposite_algebra_uncached(self)
                    .expect("the opposite of an admissible algebra is admissible")
            })
            .clone()
    }

    /// Image of an element under the anti-isomorphism `Λ -> Λ^op` that
    /// reverses path words.
    pub fn to_opposite(&self, x: &[u64]) -> Vec<u64> {
        let op = self.opposite();
        let f = self.fp();
        let mut out = vec![0u64; op.dim()];
        for (i, &c) in x.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let w = self.basis[i].reversed(&self.quiver);
            for (j, d) in op.normal_form(&w) {
                out[j] = f.add(out[j], f.mul(c, d));
            }
        }
        out
    }
}

/// `Λ^op`: every arrow reversed and every relation word read backwards.
pub fn opposite_algebra(a: &BoundQuiverAlgebra) -> Algebra {
    a.opposite()
}

fn opposite_algebra_uncached(a: &BoundQuiverAlgebra) -> Result<Algebra> {
    let q = a.quiver.opposite();
    let rels: Vec<RelationSpec> = a
        .relation_specs
        .iter()
        .map(|r| RelationSpec {
            terms: r
                .terms
                .iter()
                .map(|(c, w)| (*c, w.iter().rev().cloned().collect()))
                .collect(),
        })
        .collect();
    build_algebra_with_bound(a.field, q, &rels, DEFAULT_LENGTH_BOUND)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Algebra {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        build_algebra(FieldSpec::default(), q, &[]).unwrap()
    }

    fn dual_numbers() -> Algebra {
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        build_algebra(
            FieldSpec::default(),
            q,
            &[RelationSpec::monomial(&["x", "x"])],
        )
        .unwrap()
    }

    #[test]
    fn a2_basis() {
        let a = a2();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.basis_labels(), vec!["e1", "e2", "a"]);
        assert_eq!(a.basis_between(0, 1), &[2]);
    }

    #[test]
    fn dual_numbers_basis() {
        let a = dual_numbers();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.basis_labels(), vec!["e1", "x"]);
    }

    #[test]
    fn free_loop_is_not_admissible() {
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let err = build_algebra(FieldSpec::default(), q, &[]).unwrap_err();
        assert!(matches!(err, Error::NonAdmissible(_)));
    }

    #[test]
    fn short_relation_is_rejected() {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let err =
            build_algebra(FieldSpec::default(), q, &[RelationSpec::monomial(&["a"])]).unwrap_err();
        assert!(matches!(err, Error::NonAdmissible(_)));
    }

    #[test]
    fn unknown_arrow_is_bad_input() {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let err = build_algebra(
            FieldSpec::default(),
            q,
            &[RelationSpec::monomial(&["a", "b"])],
        )
        .unwrap_err();
        assert!(matches!(err, Error::BadInput(_)));
    }

    #[test]
    fn malformed_quivers() {
        assert!(Quiver::new(&["1", "1"], &[]).is_err());
        assert!(Quiver::new(&["1"], &[("a", "1", "3")]).is_err());
        assert!(Quiver::new(&["1", "2"], &[("a", "1", "2"), ("a", "2", "1")]).is_err());
        assert!(FieldSpec::new(32001).is_err());
    }

    #[test]
    fn commutativity_relation() {
        // Commutative square: a b - c d = 0.
        let q = Quiver::new(
            &["1", "2", "3", "4"],
            &[
                ("a", "1", "2"),
                ("b", "2", "4"),
                ("c", "1", "3"),
                ("d", "3", "4"),
            ],
        )
        .unwrap();
        let rel = RelationSpec::new(vec![
            (1, vec!["a".into(), "b".into()]),
            (-1, vec!["c".into(), "d".into()]),
        ]);
        let a = build_algebra(FieldSpec::default(), q, &[rel]).unwrap();
        // 4 idempotents, 4 arrows, one surviving length-2 path.
        assert_eq!(a.dim(), 9);
        let ab = a.dense_of_path(&Path {
            source: 0,
            arrows: vec![0, 1],
        });
        let cd = a.dense_of_path(&Path {
            source: 0,
            arrows: vec![2, 3],
        });
        assert_eq!(ab, cd);
    }

    #[test]
    fn opposite_reverses_arrows() {
        let a = a2();
        let op = a.opposite();
        assert_eq!(op.dim(), 3);
        assert_eq!(op.quiver().arrows()[0].source, 1);
        let d = dual_numbers();
        assert_eq!(d.opposite().dim(), 2);
    }

    #[test]
    fn local_inverse_in_dual_numbers() {
        let a = dual_numbers();
        let f = a.fp();
        let x = vec![3, 5];
        let inv = a.local_inverse(&x, 0);
        assert_eq!(a.mul(&x, &inv), vec![1, 0]);
        assert_eq!(inv[0], f.inv(3));
    }
}
