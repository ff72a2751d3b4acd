//! Two-term complexes of projectives and their left mutation.

use std::collections::HashMap;

use crate::algebra::Algebra;
use crate::complex::{
    cone, hom_htpy, htpy_end_algebra, minimize, spans_classes, ChainMap, HtpyHom, ProjComplex,
};
use crate::decomp::is_local;
use crate::error::{Error, Result};
use crate::options::Options;
use crate::proj::{PMap, ProjPresentation};
use crate::rep::{cokernel, ModuleMap, Representation};

/// `P^{-1} --d--> P^0` with both terms given as vertex lists.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoTermComplex {
    d: PMap,
}

impl TwoTermComplex {
    pub fn new(d: PMap) -> Self {
        TwoTermComplex { d }
    }

    /// `0 -> P(v)`.
    pub fn stalk(alg: &Algebra, v: usize) -> Self {
        TwoTermComplex::new(PMap::zero(alg, &[], &[v]))
    }

    /// `P(v) -> 0`.
    pub fn shifted_stalk(alg: &Algebra, v: usize) -> Self {
        TwoTermComplex::new(PMap::zero(alg, &[v], &[]))
    }

    pub fn from_presentation(pres: &ProjPresentation) -> Self {
        TwoTermComplex::new(pres.d.clone())
    }

    /// The degree -1 and 0 part of a complex supported there.
    pub fn from_complex(c: &ProjComplex) -> Option<Self> {
        if c.support().iter().any(|&d| d != -1 && d != 0) {
            return None;
        }
        Some(TwoTermComplex::new(c.diff(-1)))
    }

    pub fn algebra(&self) -> &Algebra {
        self.d.algebra()
    }

    pub fn pm1(&self) -> &[usize] {
        self.d.source()
    }

    pub fn p0(&self) -> &[usize] {
        self.d.target()
    }

    pub fn d(&self) -> &PMap {
        &self.d
    }

    pub fn d_module_map(&self) -> ModuleMap {
        self.d.to_module_map()
    }

    pub fn pm1_multiplicities(&self) -> Vec<(usize, usize)> {
        multiplicities(self.pm1())
    }

    pub fn p0_multiplicities(&self) -> Vec<(usize, usize)> {
        multiplicities(self.p0())
    }

    pub fn as_complex(&self) -> ProjComplex {
        ProjComplex::new(
            self.algebra(),
            -1,
            vec![self.pm1().to_vec(), self.p0().to_vec()],
            vec![self.d.clone()],
        )
    }

    pub fn is_zero(&self) -> bool {
        self.pm1().is_empty() && self.p0().is_empty()
    }

    /// `Some(v)` for the shifted stalk `P(v) -> 0`.
    pub fn shifted_stalk_vertex(&self) -> Option<usize> {
        match (self.pm1(), self.p0()) {
            ([v], []) => Some(*v),
            _ => None,
        }
    }

    pub fn g_vector(&self) -> Vec<i64> {
        g_vector(self)
    }

    pub fn h0(&self) -> Representation {
        h0_of_complex(self)
    }

    pub fn direct_sum(parts: &[TwoTermComplex]) -> TwoTermComplex {
        let alg = parts[0].algebra();
        let pm1: Vec<usize> = parts.iter().flat_map(|p| p.pm1().iter().copied()).collect();
        let p0: Vec<usize> = parts.iter().flat_map(|p| p.p0().iter().copied()).collect();
        let mut d = PMap::zero(alg, &pm1, &p0);
        let (mut r0, mut c0) = (0, 0);
        for p in parts {
            for l in 0..p.p0().len() {
                for k in 0..p.pm1().len() {
                    *d.entry_mut(r0 + l, c0 + k) = p.d.entry(l, k).to_vec();
                }
            }
            r0 += p.p0().len();
            c0 += p.pm1().len();
        }
        TwoTermComplex::new(d)
    }
}

fn multiplicities(terms: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    let mut sorted = terms.to_vec();
    sorted.sort_unstable();
    for v in sorted {
        match out.last_mut() {
            Some((w, m)) if *w == v => *m += 1,
            _ => out.push((v, 1)),
        }
    }
    out
}

/// `[P^0] - [P^{-1}]` in the basis of indecomposable projectives.
pub fn g_vector(q: &TwoTermComplex) -> Vec<i64> {
    let mut g = vec![0i64; q.algebra().n()];
    for &v in q.p0() {
        g[v] += 1;
    }
    for &v in q.pm1() {
        g[v] -= 1;
    }
    g
}

pub fn h0_of_complex(q: &TwoTermComplex) -> Representation {
    cokernel(&q.d_module_map()).0
}

/// Chain maps `P -> Q[shift]` up to homotopy.
pub fn hom_htpy_two_term(p: &TwoTermComplex, q: &TwoTermComplex, shift: i32) -> Result<HtpyHom> {
    if !std::sync::Arc::ptr_eq(p.algebra(), q.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    Ok(hom_htpy(&p.as_complex(), &q.as_complex(), shift))
}

/// Presilting with exactly `n` summands.
pub fn is_two_term_silting(summands: &[TwoTermComplex]) -> bool {
    let Some(first) = summands.first() else {
        return false;
    };
    if summands.len() != first.algebra().n() {
        return false;
    }
    let cs: Vec<ProjComplex> = summands.iter().map(TwoTermComplex::as_complex).collect();
    cs.iter()
        .all(|a| cs.iter().all(|b| hom_htpy(a, b, 1).dim() == 0))
}

/// Whether the homotopy endomorphism algebra of `q` is local.
pub fn has_local_htpy_end(q: &ProjComplex) -> Result<bool> {
    if q.is_zero() {
        return Ok(false);
    }
    is_local(&htpy_end_algebra(q))
}

/// A left approximation of `X` by the other summands: one component map
/// `X -> Q_j` per copy of `Q_j` in the target.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub source: ProjComplex,
    /// `(summand index, component map)`.
    pub components: Vec<(usize, ChainMap)>,
    pub target: ProjComplex,
    pub map: ChainMap,
}

impl Approximation {
    pub fn target_indices(&self) -> Vec<usize> {
        self.components.iter().map(|(j, _)| *j).collect()
    }
}

/// Precomputed homotopy Hom spaces among a fixed family of complexes.
pub struct ApproximationProblem<'a> {
    x: &'a ProjComplex,
    family: &'a [ProjComplex],
    targets: Vec<usize>,
    from_x: HashMap<usize, HtpyHom>,
    between: HashMap<(usize, usize), Vec<ChainMap>>,
}

impl<'a> ApproximationProblem<'a> {
    /// Approximating `x` by `add` of the members of `family` listed in
    /// `targets`.
    pub fn new(x: &'a ProjComplex, family: &'a [ProjComplex], targets: &[usize]) -> Self {
        let from_x = targets
            .iter()
            .map(|&j| (j, hom_htpy(x, &family[j], 0)))
            .collect();
        let mut between = HashMap::new();
        for &i in targets {
            for &j in targets {
                between.insert((i, j), hom_htpy(&family[i], &family[j], 0).basis());
            }
        }
        ApproximationProblem {
            x,
            family,
            targets: targets.to_vec(),
            from_x,
            between,
        }
    }

    /// All classes `X -> Q_j`, one component per basis class.
    pub fn initial_components(&self) -> Vec<(usize, ChainMap)> {
        self.targets
            .iter()
            .flat_map(|&j| self.from_x[&j].basis().into_iter().map(move |c| (j, c)))
            .collect()
    }

    /// Every map `X -> Q_j` factors through the components up to homotopy.
    pub fn is_approximation(&self, components: &[(usize, ChainMap)]) -> bool {
        self.targets.iter().all(|&j| {
            let hom = &self.from_x[&j];
            if hom.dim() == 0 {
                return true;
            }
            let composites: Vec<ChainMap> = components
                .iter()
                .flat_map(|(jc, a)| self.between[&(*jc, j)].iter().map(move |g| a.then(g)))
                .collect();
            spans_classes(hom, &composites)
        })
    }

    /// Greedy single deletions from the full family of components.
    pub fn minimal(&self) -> Approximation {
        let mut comps = self.initial_components();
        let mut i = 0;
        while i < comps.len() {
            let mut trial = comps.clone();
            trial.remove(i);
            if self.is_approximation(&trial) {
                comps = trial;
            } else {
                i += 1;
            }
        }
        self.assemble(comps)
    }

    /// Each component can be dropped only at the cost of the approximation
    /// property.
    pub fn is_minimal(&self, components: &[(usize, ChainMap)]) -> bool {
        (0..components.len()).all(|i| {
            let mut trial = components.to_vec();
            trial.remove(i);
            !self.is_approximation(&trial)
        })
    }

    pub fn assemble(&self, components: Vec<(usize, ChainMap)>) -> Approximation {
        let alg = self.x.algebra();
        let parts: Vec<ProjComplex> = components
            .iter()
            .map(|(j, _)| self.family[*j].clone())
            .collect();
        let target = if parts.is_empty() {
            ProjComplex::new(
                alg,
                -1,
                vec![vec![], vec![]],
                vec![PMap::zero(alg, &[], &[])],
            )
        } else {
            ProjComplex::direct_sum(&parts).with_range(-1, 0)
        };
        let maps = (self.x.lo()..=self.x.hi())
            .map(|d| {
                let mut m = PMap::zero(alg, self.x.term(d), target.term(d));
                let mut r0 = 0;
                for (j, c) in &components {
                    let comp = c.component(d);
                    for l in 0..comp.target().len() {
                        for k in 0..comp.source().len() {
                            *m.entry_mut(r0 + l, k) = comp.entry(l, k).to_vec();
                        }
                    }
                    r0 += self.family[*j].term(d).len();
                }
                m
            })
            .collect();
        let map = ChainMap {
            source: self.x.clone(),
            target: target.clone(),
            shift: 0,
            maps,
        };
        Approximation {
            source: self.x.clone(),
            components,
            target,
            map,
        }
    }
}

/// Outcome of a left mutation at one summand.
#[derive(Clone, Debug)]
pub enum SiltingMutation {
    Mutated {
        summands: Vec<TwoTermComplex>,
        /// The complex replacing the mutated summand.
        new_summand: TwoTermComplex,
        approximation: Approximation,
    },
    /// The minimized cone has a nonzero term in degree -2.
    NotTwoTerm {
        approximation: Approximation,
        cone: ProjComplex,
    },
}

/// Replaces summand `k` by the minimized cone of its minimal left
/// approximation by the other summands.
pub fn left_silting_mutation(
    summands: &[TwoTermComplex],
    k: usize,
    opts: &Options,
) -> Result<SiltingMutation> {
    if k >= summands.len() {
        return Err(Error::IndexOutOfRange {
            index: k,
            len: summands.len(),
        });
    }
    if !is_two_term_silting(summands) {
        return Err(Error::NotSilting(format!(
            "{} summands with nonvanishing positive self-extensions or the wrong count",
            summands.len()
        )));
    }
    let family: Vec<ProjComplex> = summands.iter().map(TwoTermComplex::as_complex).collect();
    let others: Vec<usize> = (0..summands.len()).filter(|&j| j != k).collect();
    let problem = ApproximationProblem::new(&family[k], &family, &others);
    let approximation = problem.minimal();
    let reduced = minimize(&cone(&approximation.map)).with_range(-2, 0);
    if !reduced.term(-2).is_empty() {
        return Ok(SiltingMutation::NotTwoTerm {
            approximation,
            cone: reduced,
        });
    }
    if opts.verify && !has_local_htpy_end(&reduced)? {
        return Err(Error::ValidationFailed(format!(
            "the cone replacing summand {k} is decomposable"
        )));
    }
    let new_summand = TwoTermComplex::from_complex(&reduced).expect("support checked");
    let mut out = summands.to_vec();
    out[k] = new_summand.clone();
    Ok(SiltingMutation::Mutated {
        summands: out,
        new_summand,
        approximation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, FieldSpec, Quiver, RelationSpec};
    use crate::proj::minimal_presentation;
    use crate::rep::simple;

    fn a2() -> Algebra {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        build_algebra(FieldSpec::default(), q, &[]).unwrap()
    }

    fn arrow_complex(alg: &Algebra) -> TwoTermComplex {
        TwoTermComplex::new(PMap::hom_basis(alg, &[1], &[0]).remove(0))
    }

    #[test]
    fn presentations_become_complexes() {
        let alg = a2();
        let c = TwoTermComplex::from_presentation(&minimal_presentation(&simple(&alg, 0).unwrap()));
        assert_eq!(c.pm1(), &[1]);
        assert_eq!(c.p0(), &[0]);
        assert_eq!(c.g_vector(), vec![1, -1]);
        assert_eq!(c.h0().dims(), &[1, 0]);
    }

    #[test]
    fn homotopy_hom_dimensions() {
        let alg = a2();
        let lam = TwoTermComplex::direct_sum(&[
            TwoTermComplex::stalk(&alg, 0),
            TwoTermComplex::stalk(&alg, 1),
        ]);
        assert_eq!(hom_htpy_two_term(&lam, &lam, 1).unwrap().dim(), 0);
        assert_eq!(hom_htpy_two_term(&lam, &lam, 0).unwrap().dim(), 3);
        // Ext^1(S(1), S(2)) is one-dimensional.
        let s1 = arrow_complex(&alg);
        let p2 = TwoTermComplex::stalk(&alg, 1);
        assert_eq!(hom_htpy_two_term(&s1, &p2, 1).unwrap().dim(), 1);
        assert_eq!(hom_htpy_two_term(&s1, &s1, 0).unwrap().dim(), 1);
    }

    #[test]
    fn silting_checks() {
        let alg = a2();
        let stalks = [
            TwoTermComplex::stalk(&alg, 0),
            TwoTermComplex::stalk(&alg, 1),
        ];
        assert!(is_two_term_silting(&stalks));
        let shifted = [
            TwoTermComplex::shifted_stalk(&alg, 0),
            TwoTermComplex::shifted_stalk(&alg, 1),
        ];
        assert!(is_two_term_silting(&shifted));
        assert!(is_two_term_silting(&[
            TwoTermComplex::stalk(&alg, 0),
            arrow_complex(&alg)
        ]));
        assert!(!is_two_term_silting(&[
            TwoTermComplex::stalk(&alg, 1),
            arrow_complex(&alg)
        ]));
    }

    #[test]
    fn mutations_on_a2() {
        let alg = a2();
        let opts = Options::default().verifying();
        let stalks = vec![
            TwoTermComplex::stalk(&alg, 0),
            TwoTermComplex::stalk(&alg, 1),
        ];
        match left_silting_mutation(&stalks, 1, &opts).unwrap() {
            SiltingMutation::Mutated { new_summand, .. } => {
                assert_eq!(new_summand, arrow_complex(&alg))
            }
            other => panic!("unexpected {other:?}"),
        }
        match left_silting_mutation(&stalks, 0, &opts).unwrap() {
            SiltingMutation::Mutated { new_summand, .. } => {
                assert_eq!(new_summand, TwoTermComplex::shifted_stalk(&alg, 0))
            }
            other => panic!("unexpected {other:?}"),
        }
        let shifted = vec![
            TwoTermComplex::shifted_stalk(&alg, 0),
            TwoTermComplex::shifted_stalk(&alg, 1),
        ];
        for k in 0..2 {
            assert!(matches!(
                left_silting_mutation(&shifted, k, &opts).unwrap(),
                SiltingMutation::NotTwoTerm { .. }
            ));
        }
        assert!(matches!(
            left_silting_mutation(&stalks, 2, &opts),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn dual_numbers_mutation() {
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let alg = build_algebra(
            FieldSpec::default(),
            q,
            &[RelationSpec::monomial(&["x", "x"])],
        )
        .unwrap();
        let opts = Options::default().verifying();
        match left_silting_mutation(&[TwoTermComplex::stalk(&alg, 0)], 0, &opts).unwrap() {
            SiltingMutation::Mutated { new_summand, .. } => {
                assert_eq!(new_summand.shifted_stalk_vertex(), Some(0))
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
