//! Support τ-tilting pairs, their correspondence with two-term silting
//! complexes, and mutation on both sides.

use std::collections::HashMap;

use rand::Rng;

use crate::algebra::Algebra;
use crate::complex::ProjComplex;
use crate::decomp::{are_isomorphic, decompose, is_indecomposable};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::options::Options;
use crate::proj::{in_fac, is_tau_rigid_pair, minimal_presentation};
use crate::rep::{cokernel, direct_sum, hom_basis, projective, ModuleMap, Representation};
use crate::silting::{
    h0_of_complex, is_two_term_silting, left_silting_mutation, ApproximationProblem,
    SiltingMutation, TwoTermComplex,
};

/// A pair `(M, P)`: indecomposable module summands and the vertices of the
/// projective part, both in canonical order.
#[derive(Clone, Debug)]
pub struct SupportTauTiltingPair {
    alg: Algebra,
    module_summands: Vec<Representation>,
    module_g_vectors: Vec<Vec<i64>>,
    proj_vertices: Vec<usize>,
}

/// g-vector of the minimal presentation of `m`.
pub fn module_g_vector(m: &Representation) -> Vec<i64> {
    TwoTermComplex::from_presentation(&minimal_presentation(m)).g_vector()
}

impl SupportTauTiltingPair {
    /// Sorts the summands canonically: modules by (dimension vector,
    /// g-vector), then projective vertices.
    pub fn new(
        alg: &Algebra,
        module_summands: Vec<Representation>,
        mut proj_vertices: Vec<usize>,
    ) -> Self {
        let mut tagged: Vec<(Representation, Vec<i64>)> = module_summands
            .into_iter()
            .map(|m| {
                let g = module_g_vector(&m);
                (m, g)
            })
            .collect();
        tagged.sort_by(|a, b| (a.0.dims(), &a.1).cmp(&(b.0.dims(), &b.1)));
        proj_vertices.sort_unstable();
        let (module_summands, module_g_vectors) = tagged.into_iter().unzip();
        SupportTauTiltingPair {
            alg: alg.clone(),
            module_summands,
            module_g_vectors,
            proj_vertices,
        }
    }

    /// `(Λ, 0)`.
    pub fn top(alg: &Algebra) -> Self {
        let ps = (0..alg.n())
            .map(|v| projective(alg, v).expect("vertex in range"))
            .collect();
        SupportTauTiltingPair::new(alg, ps, Vec::new())
    }

    /// `(0, Λ)`.
    pub fn bottom(alg: &Algebra) -> Self {
        SupportTauTiltingPair::new(alg, Vec::new(), (0..alg.n()).collect())
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn module_summands(&self) -> &[Representation] {
        &self.module_summands
    }

    pub fn proj_vertices(&self) -> &[usize] {
        &self.proj_vertices
    }

    pub fn len(&self) -> usize {
        self.module_summands.len() + self.proj_vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Vertices where the module part is nonzero.
    pub fn support(&self) -> Vec<usize> {
        (0..self.alg.n())
            .filter(|&v| self.module_summands.iter().any(|m| m.dim_at(v) > 0))
            .collect()
    }

    /// The module part `M` as one representation.
    pub fn module(&self) -> Representation {
        direct_sum(&self.alg, &self.module_summands)
            .expect("same algebra")
            .sum
    }

    /// g-vectors in canonical summand order; `-e_i` for projective vertices.
    pub fn g_vectors(&self) -> Vec<Vec<i64>> {
        let n = self.alg.n();
        let mut rows = self.module_g_vectors.clone();
        for &v in &self.proj_vertices {
            let mut g = vec![0; n];
            g[v] = -1;
            rows.push(g);
        }
        rows
    }

    /// Rows of the g-matrix sorted lexicographically, as nested integer
    /// arrays without whitespace.
    pub fn key(&self) -> String {
        let mut rows = self.g_vectors();
        rows.sort();
        g_matrix_key(&rows)
    }

    /// Checks basicness, the summand count and τ-rigidity.
    pub fn validate<R: Rng>(&self, rng: &mut R) -> Result<()> {
        let n = self.alg.n();
        if self.len() != n {
            return Err(Error::InvalidPair(format!(
                "{} summands for {} vertices",
                self.len(),
                n
            )));
        }
        if self.proj_vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPair("repeated projective vertex".into()));
        }
        for (i, m) in self.module_summands.iter().enumerate() {
            if !std::sync::Arc::ptr_eq(m.algebra(), &self.alg) {
                return Err(Error::AlgebraMismatch);
            }
            if !is_indecomposable(m)? {
                return Err(Error::InvalidPair(format!(
                    "module summand {i} is not indecomposable"
                )));
            }
            for (j, other) in self.module_summands[..i].iter().enumerate() {
                if are_isomorphic(m, other, rng)? {
                    return Err(Error::InvalidPair(format!(
                        "module summands {j} and {i} are isomorphic"
                    )));
                }
            }
        }
        if !is_tau_rigid_pair(&self.module(), &self.proj_vertices)? {
            return Err(Error::InvalidPair("not a τ-rigid pair".into()));
        }
        Ok(())
    }
}

pub fn g_matrix_key(rows: &[Vec<i64>]) -> String {
    let inner: Vec<String> = rows
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(i64::to_string).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", inner.join(","))
}

/// Minimal presentations of the module summands, then `P(v) -> 0` for each
/// projective vertex, in the pair's canonical order.
pub fn pair_to_complex(pair: &SupportTauTiltingPair) -> Vec<TwoTermComplex> {
    let alg = pair.algebra();
    pair.module_summands
        .iter()
        .map(|m| TwoTermComplex::from_presentation(&minimal_presentation(m)))
        .chain(
            pair.proj_vertices
                .iter()
                .map(|&v| TwoTermComplex::shifted_stalk(alg, v)),
        )
        .collect()
}

/// `H^0` of each summand, with shifted stalks becoming projective vertices.
pub fn complex_to_pair(
    summands: &[TwoTermComplex],
    opts: &Options,
) -> Result<SupportTauTiltingPair> {
    let Some(first) = summands.first() else {
        return Err(Error::NotSilting("no summands".into()));
    };
    let alg = first.algebra().clone();
    if opts.verify && !is_two_term_silting(summands) {
        return Err(Error::NotSilting(
            "summands are not two-term silting".into(),
        ));
    }
    let mut modules = Vec::new();
    let mut proj = Vec::new();
    for (i, s) in summands.iter().enumerate() {
        if let Some(v) = s.shifted_stalk_vertex() {
            proj.push(v);
            continue;
        }
        let h = h0_of_complex(s);
        if h.is_zero() {
            return Err(Error::ValidationFailed(format!(
                "summand {i} has zero cohomology but is not a shifted stalk"
            )));
        }
        modules.push(h);
    }
    let pair = SupportTauTiltingPair::new(&alg, modules, proj);
    if opts.verify {
        pair.validate(&mut opts.rng()).map_err(|e| match e {
            Error::InvalidPair(msg) => Error::ValidationFailed(msg),
            other => other,
        })?;
    }
    Ok(pair)
}

/// A left `add U`-approximation of a module summand `X`.
#[derive(Clone, Debug)]
pub struct ModuleApproximation {
    /// `(summand index, component map X -> U_j)`.
    pub components: Vec<(usize, ModuleMap)>,
    pub target: Representation,
    pub map: ModuleMap,
}

/// Hom spaces from `X` into a family of modules and among the family.
pub struct ModuleApproximationProblem<'a> {
    x: &'a Representation,
    family: &'a [Representation],
    targets: Vec<usize>,
    from_x: HashMap<usize, Vec<ModuleMap>>,
    between: HashMap<(usize, usize), Vec<ModuleMap>>,
}

impl<'a> ModuleApproximationProblem<'a> {
    pub fn new(
        x: &'a Representation,
        family: &'a [Representation],
        targets: &[usize],
    ) -> Result<Self> {
        let mut from_x = HashMap::new();
        let mut between = HashMap::new();
        for &j in targets {
            from_x.insert(j, hom_basis(x, &family[j])?);
            for &i in targets {
                between.insert((i, j), hom_basis(&family[i], &family[j])?);
            }
        }
        Ok(ModuleApproximationProblem {
            x,
            family,
            targets: targets.to_vec(),
            from_x,
            between,
        })
    }

    pub fn initial_components(&self) -> Vec<(usize, ModuleMap)> {
        self.targets
            .iter()
            .flat_map(|&j| self.from_x[&j].iter().map(move |h| (j, h.clone())))
            .collect()
    }

    /// Every map `X -> U_j` is a combination of composites through the
    /// components.
    pub fn is_approximation(&self, components: &[(usize, ModuleMap)]) -> bool {
        let f = self.x.fp();
        self.targets.iter().all(|&j| {
            let homs = &self.from_x[&j];
            if homs.is_empty() {
                return true;
            }
            let composites: Vec<Vec<u64>> = components
                .iter()
                .flat_map(|(jc, a)| {
                    self.between[&(*jc, j)]
                        .iter()
                        .map(move |g| a.then(g).flatten())
                })
                .collect();
            let len = homs[0].flatten().len();
            let span = Matrix::from_columns(&composites, len);
            let wanted = Matrix::from_columns(
                &homs.iter().map(ModuleMap::flatten).collect::<Vec<_>>(),
                len,
            );
            span.rank(f) == span.hstack(&wanted).rank(f)
        })
    }

    pub fn is_minimal(&self, components: &[(usize, ModuleMap)]) -> bool {
        (0..components.len()).all(|i| {
            let mut trial = components.to_vec();
            trial.remove(i);
            !self.is_approximation(&trial)
        })
    }

    pub fn minimal(&self) -> ModuleApproximation {
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

    pub fn assemble(&self, components: Vec<(usize, ModuleMap)>) -> ModuleApproximation {
        let alg = self.x.algebra();
        let parts: Vec<Representation> = components
            .iter()
            .map(|(j, _)| self.family[*j].clone())
            .collect();
        let target = direct_sum(alg, &parts).expect("same algebra").sum;
        let blocks = (0..alg.n())
            .map(|v| {
                let mut m = Matrix::zeros(target.dim_at(v), self.x.dim_at(v));
                let mut r0 = 0;
                for (_, c) in &components {
                    m.set_block(r0, 0, c.block(v));
                    r0 += c.block(v).rows();
                }
                m
            })
            .collect();
        let map = ModuleMap::new(self.x, &target, blocks).expect("components commute");
        ModuleApproximation {
            components,
            target,
            map,
        }
    }
}

/// Everything computed while mutating a module summand `X` with
/// `X ∉ Fac U`.
#[derive(Clone, Debug)]
pub struct MutationReport {
    pub x_index: usize,
    pub approximation: ModuleApproximation,
    /// The target `U'` of the approximation.
    pub u_prime: Representation,
    /// `Y = coker f`.
    pub y: Representation,
    pub y_decomposition: Vec<(Representation, usize)>,
    pub y_indecomposable: bool,
    /// `H^0` of the complex replacing `X` on the silting side.
    pub silting_h0: Option<Representation>,
    /// `Y ≅ silting_h0`, or for `Y = 0` the replacement is a shifted stalk.
    pub cross_check_ok: bool,
    /// `H^0` of the silting approximation target is isomorphic to `U'`.
    pub u_prime_matches: bool,
    pub module_approximation_minimal: bool,
    pub silting_approximation_minimal: bool,
    pub new_pair: Option<SupportTauTiltingPair>,
}

/// Mutation at the module summand `k` through the cokernel of its minimal
/// left approximation, compared with the silting side.
pub fn module_mutation_sequence(
    pair: &SupportTauTiltingPair,
    k: usize,
    opts: &Options,
) -> Result<MutationReport> {
    let mods = pair.module_summands();
    if k >= mods.len() {
        return Err(Error::IndexOutOfRange {
            index: k,
            len: mods.len(),
        });
    }
    let mut rng = opts.rng();
    let alg = pair.algebra();
    let x = &mods[k];
    let others: Vec<usize> = (0..mods.len()).filter(|&j| j != k).collect();
    let u = direct_sum(
        alg,
        &others.iter().map(|&j| mods[j].clone()).collect::<Vec<_>>(),
    )?
    .sum;
    if in_fac(x, &u)? {
        return Err(Error::XInFacU { index: k });
    }
    let problem = ModuleApproximationProblem::new(x, mods, &others)?;
    let approximation = problem.minimal();
    let module_approximation_minimal = problem.is_approximation(&approximation.components)
        && problem.is_minimal(&approximation.components);
    let (y, _) = cokernel(&approximation.map);
    let y_decomposition = decompose(&y, &mut rng)?;
    let y_indecomposable = is_indecomposable(&y)?;

    let complexes = pair_to_complex(pair);
    let outcome = left_silting_mutation(&complexes, k, opts)?;
    let family: Vec<ProjComplex> = complexes.iter().map(TwoTermComplex::as_complex).collect();
    let all_others: Vec<usize> = (0..complexes.len()).filter(|&j| j != k).collect();
    let silting_problem = ApproximationProblem::new(&family[k], &family, &all_others);

    let (silting_h0, cross_check_ok, u_prime_matches, silting_approximation_minimal, new_pair) =
        match &outcome {
            SiltingMutation::Mutated {
                summands,
                new_summand,
                approximation: sa,
            } => {
                let h0 = new_summand.h0();
                let cross = if y.is_zero() {
                    new_summand.shifted_stalk_vertex().is_some()
                } else {
                    are_isomorphic(&y, &h0, &mut rng)?
                };
                let p_prime = TwoTermComplex::from_complex(&sa.target).expect("two-term target");
                let u_p = h0_of_complex(&p_prime);
                let u_match = are_isomorphic(&u_p, &approximation.target, &mut rng)?;
                let minimal = silting_problem.is_approximation(&sa.components)
                    && silting_problem.is_minimal(&sa.components);
                let np = complex_to_pair(summands, opts)?;
                (Some(h0), cross, u_match, minimal, Some(np))
            }
            SiltingMutation::NotTwoTerm {
                approximation: sa, ..
            } => {
                let minimal = silting_problem.is_approximation(&sa.components)
                    && silting_problem.is_minimal(&sa.components);
                (None, false, false, minimal, None)
            }
        };
    Ok(MutationReport {
        x_index: k,
        u_prime: approximation.target.clone(),
        approximation,
        y,
        y_decomposition,
        y_indecomposable,
        silting_h0,
        cross_check_ok,
        u_prime_matches,
        module_approximation_minimal,
        silting_approximation_minimal,
        new_pair,
    })
}

#[derive(Clone, Debug)]
pub enum PairMutation {
    Mutated(SupportTauTiltingPair),
    NotLeftMutable,
}

/// Left mutation at summand `k` of the canonical order, computed on the
/// silting side.
pub fn mutate_pair(pair: &SupportTauTiltingPair, k: usize, opts: &Options) -> Result<PairMutation> {
    if k >= pair.len() {
        return Err(Error::IndexOutOfRange {
            index: k,
            len: pair.len(),
        });
    }
    if pair.len() != pair.algebra().n() {
        return Err(Error::InvalidPair(format!(
            "{} summands for {} vertices",
            pair.len(),
            pair.algebra().n()
        )));
    }
    let complexes = pair_to_complex(pair);
    match left_silting_mutation(&complexes, k, opts) {
        Ok(SiltingMutation::Mutated { summands, .. }) => {
            Ok(PairMutation::Mutated(complex_to_pair(&summands, opts)?))
        }
        Ok(SiltingMutation::NotTwoTerm { .. }) => Ok(PairMutation::NotLeftMutable),
        Err(Error::NotSilting(msg)) => Err(Error::InvalidPair(msg)),
        Err(e) => Err(e),
    }
}

/// Summand-wise isomorphism with equal projective parts.
pub fn pairs_isomorphic<R: Rng>(
    a: &SupportTauTiltingPair,
    b: &SupportTauTiltingPair,
    rng: &mut R,
) -> Result<bool> {
    if a.proj_vertices != b.proj_vertices || a.module_summands.len() != b.module_summands.len() {
        return Ok(false);
    }
    for (x, y) in a.module_summands.iter().zip(&b.module_summands) {
        if !are_isomorphic(x, y, rng)? {
            return Ok(false);
        }
    }
    Ok(true)
}
