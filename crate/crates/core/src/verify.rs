//! Checks, edge by edge, that nonzero mutation cokernels are indecomposable
//! and that module-side and silting-side mutation agree.

use std::fmt;

use crate::algebra::Algebra;
use crate::error::Error;
use crate::graph::{exchange_graph, Edge, ExchangeGraph};
use crate::options::Options;
use crate::proj::in_fac;
use crate::rep::direct_sum;
use crate::tautilt::{module_mutation_sequence, MutationReport};

/// Verdicts for one edge whose mutated summand is a module `X ∉ Fac U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleVerdict {
    pub y_zero: bool,
    pub y_dims: Vec<usize>,
    /// `Y = 0` or `Y` has a local endomorphism ring.
    pub indecomposable: bool,
    /// At most one isomorphism class among the summands of `Y`.
    pub copies_shape: bool,
    pub cross_check: bool,
    pub u_prime_matches: bool,
    pub approximations_minimal: bool,
    /// The module-side new pair has the edge's target key.
    pub target_matches: bool,
}

impl ModuleVerdict {
    pub fn passed(&self) -> bool {
        self.indecomposable
            && self.copies_shape
            && self.cross_check
            && self.u_prime_matches
            && self.approximations_minimal
            && self.target_matches
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    Module(ModuleVerdict),
    /// The mutated summand lies in `Fac U`.
    InFac,
    /// The mutated summand is a projective stalk.
    Projective,
}

#[derive(Clone, Debug)]
pub struct EdgeReport {
    pub edge: Edge,
    pub kind: EdgeKind,
    /// Present for module edges.
    pub mutation: Option<MutationReport>,
}

impl EdgeReport {
    pub fn passed(&self) -> bool {
        match &self.kind {
            EdgeKind::Module(v) => v.passed(),
            _ => true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub p: u64,
    pub nodes: usize,
    pub truncated: bool,
    pub edges: Vec<EdgeReport>,
    pub graph: ExchangeGraph,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.edges.iter().all(EdgeReport::passed)
    }

    pub fn module_edges(&self) -> usize {
        self.edges
            .iter()
            .filter(|e| matches!(e.kind, EdgeKind::Module(_)))
            .count()
    }
}

/// An error raised while verifying, with the edge being processed.
#[derive(Clone, Debug)]
pub struct VerifyFailure {
    pub edge: Option<Edge>,
    pub error: Error,
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.edge {
            Some(e) => write!(
                f,
                "{} (edge {} --{}--> {})",
                self.error, e.from, e.summand, e.to
            ),
            None => write!(f, "{}", self.error),
        }
    }
}

impl std::error::Error for VerifyFailure {}

pub fn verify_theorem(
    alg: &Algebra,
    max_nodes: usize,
    opts: &Options,
) -> Result<VerifyReport, VerifyFailure> {
    let opts = opts.verifying();
    let graph = exchange_graph(alg, max_nodes, &opts)
        .map_err(|error| VerifyFailure { edge: None, error })?;
    let mut edges = Vec::new();
    for edge in &graph.edges {
        let fail = |error| VerifyFailure {
            edge: Some(edge.clone()),
            error,
        };
        let pair = graph.node(&edge.from).expect("edge endpoints are nodes");
        let mods = pair.module_summands();
        let k = edge.summand;
        if k >= mods.len() {
            edges.push(EdgeReport {
                edge: edge.clone(),
                kind: EdgeKind::Projective,
                mutation: None,
            });
            continue;
        }
        let others: Vec<_> = (0..mods.len())
            .filter(|&j| j != k)
            .map(|j| mods[j].clone())
            .collect();
        let u = direct_sum(alg, &others).map_err(fail)?.sum;
        if in_fac(&mods[k], &u).map_err(fail)? {
            edges.push(EdgeReport {
                edge: edge.clone(),
                kind: EdgeKind::InFac,
                mutation: None,
            });
            continue;
        }
        let r = module_mutation_sequence(pair, k, &opts).map_err(fail)?;
        let verdict = ModuleVerdict {
            y_zero: r.y.is_zero(),
            y_dims: r.y.dims().to_vec(),
            indecomposable: r.y.is_zero() || r.y_indecomposable,
            copies_shape: r.y_decomposition.len() <= 1,
            cross_check: r.cross_check_ok,
            u_prime_matches: r.u_prime_matches,
            approximations_minimal: r.module_approximation_minimal
                && r.silting_approximation_minimal,
            target_matches: r.new_pair.as_ref().map(|p| p.key()) == Some(edge.to.clone()),
        };
        edges.push(EdgeReport {
            edge: edge.clone(),
            kind: EdgeKind::Module(verdict),
            mutation: Some(r),
        });
    }
    Ok(VerifyReport {
        p: alg.p(),
        nodes: graph.len(),
        truncated: graph.truncated,
        edges,
        graph,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, FieldSpec, Quiver};

    #[test]
    fn a2_passes() {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let alg = build_algebra(FieldSpec::default(), q, &[]).unwrap();
        let r = verify_theorem(&alg, 100, &Options::default()).unwrap();
        assert!(r.passed());
        assert_eq!(r.edges.len(), 5);
        assert_eq!(r.nodes, 5);
    }
}
