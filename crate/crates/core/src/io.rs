//! JSON formats for algebras, modules, complexes, pairs and graphs, plus DOT
//! export.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path as FsPath;

use serde::{Deserialize, Serialize};

use crate::algebra::{build_algebra, Algebra, FieldSpec, Quiver, RelationSpec, DEFAULT_PRIME};
use crate::error::{Error, Result};
use crate::graph::{Edge, ExchangeGraph};
use crate::linalg::Matrix;
use crate::proj::{proj_sum, PMap};
use crate::rep::{ModuleMap, Representation};
use crate::silting::TwoTermComplex;
use crate::tautilt::SupportTauTiltingPair;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub p: u64,
}

impl Default for FieldJson {
    fn default() -> Self {
        FieldJson { p: DEFAULT_PRIME }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowJson {
    pub name: String,
    pub from: String,
    pub to: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: i64,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationJson {
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    #[serde(default)]
    pub field: FieldJson,
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowJson>,
    #[serde(default)]
    pub relations: Vec<RelationJson>,
}

impl AlgebraJson {
    pub fn build(&self) -> Result<Algebra> {
        let field = FieldSpec::new(self.field.p)?;
        let arrows: Vec<(&str, &str, &str)> = self
            .arrows
            .iter()
            .map(|a| (a.name.as_str(), a.from.as_str(), a.to.as_str()))
            .collect();
        let vertices: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        let quiver = Quiver::new(&vertices, &arrows)?;
        let relations: Vec<RelationSpec> = self
            .relations
            .iter()
            .map(|r| RelationSpec::new(r.terms.iter().map(|t| (t.coeff, t.path.clone())).collect()))
            .collect();
        build_algebra(field, quiver, &relations)
    }

    pub fn of(alg: &Algebra) -> Self {
        let q = alg.quiver();
        AlgebraJson {
            field: FieldJson { p: alg.p() },
            vertices: q.vertices().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| ArrowJson {
                    name: a.name.clone(),
                    from: q.vertices()[a.source].clone(),
                    to: q.vertices()[a.target].clone(),
                })
                .collect(),
            relations: alg
                .relation_specs()
                .iter()
                .map(|r| RelationJson {
                    terms: r
                        .terms
                        .iter()
                        .map(|(c, path)| TermJson {
                            coeff: *c,
                            path: path.clone(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

fn bad_json(e: serde_json::Error) -> Error {
    Error::BadInput(format!("malformed JSON: {e}"))
}

pub fn parse_algebra(text: &str) -> Result<Algebra> {
    serde_json::from_str::<AlgebraJson>(text)
        .map_err(bad_json)?
        .build()
}

pub fn load_algebra(path: impl AsRef<FsPath>) -> Result<Algebra> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::BadInput(format!("{}: {e}", path.display())))?;
    parse_algebra(&text)
}

pub fn algebra_to_json(alg: &Algebra) -> String {
    serde_json::to_string_pretty(&AlgebraJson::of(alg)).expect("serializable")
}

/// Row-major matrices of integers; entries are reduced mod p on input.
pub type MatrixJson = Vec<Vec<i64>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub dims: BTreeMap<String, usize>,
    #[serde(default)]
    pub maps: BTreeMap<String, MatrixJson>,
}

fn matrix_json(m: &Matrix) -> MatrixJson {
    m.to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(|x| x as i64).collect())
        .collect()
}

fn matrix_from_json(
    alg: &Algebra,
    rows: &MatrixJson,
    shape: (usize, usize),
    what: &str,
) -> Result<Matrix> {
    let (r, c) = shape;
    // An empty list stands for any matrix with no entries.
    if rows.is_empty() && r * c == 0 {
        return Ok(Matrix::zeros(r, c));
    }
    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
        return Err(Error::BadInput(format!(
            "{what}: expected a {r}x{c} matrix"
        )));
    }
    let f = alg.fp();
    let data: Vec<Vec<u64>> = rows
        .iter()
        .map(|row| row.iter().map(|&x| f.from_i64(x)).collect())
        .collect();
    Ok(Matrix::from_rows(&data, c))
}

impl ModuleJson {
    pub fn of(m: &Representation) -> Self {
        let alg = m.algebra();
        let q = alg.quiver();
        ModuleJson {
            dims: (0..alg.n())
                .map(|v| (q.vertices()[v].clone(), m.dim_at(v)))
                .collect(),
            maps: q
                .arrows()
                .iter()
                .enumerate()
                .map(|(ai, a)| (a.name.clone(), matrix_json(m.map(ai))))
                .collect(),
        }
    }

    /// Missing vertices have dimension 0 and missing arrows act by zero.
    pub fn build(&self, alg: &Algebra) -> Result<Representation> {
        let q = alg.quiver();
        let mut dims = vec![0; alg.n()];
        for (label, &d) in &self.dims {
            dims[alg.vertex_index(label)?] = d;
        }
        for name in self.maps.keys() {
            if q.arrow_index(name).is_none() {
                return Err(Error::BadInput(format!("unknown arrow `{name}`")));
            }
        }
        let maps = q
            .arrows()
            .iter()
            .map(|a| {
                let shape = (dims[a.target], dims[a.source]);
                match self.maps.get(&a.name) {
                    Some(rows) => {
                        matrix_from_json(alg, rows, shape, &format!("arrow `{}`", a.name))
                    }
                    None => Ok(Matrix::zeros(shape.0, shape.1)),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Representation::new(alg, dims, maps)
    }
}

pub fn parse_module(alg: &Algebra, text: &str) -> Result<Representation> {
    serde_json::from_str::<ModuleJson>(text)
        .map_err(bad_json)?
        .build(alg)
}

pub fn module_to_json(m: &Representation) -> String {
    serde_json::to_string(&ModuleJson::of(m)).expect("serializable")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleMapJson {
    pub blocks: BTreeMap<String, MatrixJson>,
}

impl ModuleMapJson {
    pub fn of(f: &ModuleMap) -> Self {
        let alg = f.source().algebra();
        ModuleMapJson {
            blocks: (0..alg.n())
                .map(|v| (alg.vertex_label(v).to_string(), matrix_json(f.block(v))))
                .collect(),
        }
    }

    pub fn build(&self, source: &Representation, target: &Representation) -> Result<ModuleMap> {
        let alg = source.algebra();
        for label in self.blocks.keys() {
            alg.vertex_index(label)?;
        }
        let blocks = (0..alg.n())
            .map(|v| {
                let shape = (target.dim_at(v), source.dim_at(v));
                match self.blocks.get(alg.vertex_label(v)) {
                    Some(rows) => matrix_from_json(
                        alg,
                        rows,
                        shape,
                        &format!("block at `{}`", alg.vertex_label(v)),
                    ),
                    None => Ok(Matrix::zeros(shape.0, shape.1)),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        ModuleMap::new(source, target, blocks)
    }
}

/// Two-term complex: multiplicities in vertex order and the differential as
/// a module map between the realized projective sums.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    #[serde(rename = "Pm1")]
    pub pm1: Vec<(String, usize)>,
    #[serde(rename = "P0")]
    pub p0: Vec<(String, usize)>,
    pub d: ModuleMapJson,
}

fn sorted_order(terms: &[usize]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..terms.len()).collect();
    idx.sort_by_key(|&i| terms[i]);
    idx
}

fn expand(alg: &Algebra, mults: &[(String, usize)]) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (label, m) in mults {
        out.extend(std::iter::repeat_n(alg.vertex_index(label)?, *m));
    }
    out.sort_unstable();
    Ok(out)
}

impl ComplexJson {
    pub fn of(q: &TwoTermComplex) -> Self {
        let alg = q.algebra();
        let d = q.d().select(&sorted_order(q.p0()), &sorted_order(q.pm1()));
        let label = |(v, m): (usize, usize)| (alg.vertex_label(v).to_string(), m);
        ComplexJson {
            pm1: q.pm1_multiplicities().into_iter().map(label).collect(),
            p0: q.p0_multiplicities().into_iter().map(label).collect(),
            d: ModuleMapJson::of(&d.to_module_map()),
        }
    }

    pub fn build(&self, alg: &Algebra) -> Result<TwoTermComplex> {
        let pm1 = expand(alg, &self.pm1)?;
        let p0 = expand(alg, &self.p0)?;
        let map = self.d.build(&proj_sum(alg, &pm1), &proj_sum(alg, &p0))?;
        Ok(TwoTermComplex::new(PMap::from_module_map(
            alg, &pm1, &p0, &map,
        )))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub key: String,
    pub module_summands: Vec<ModuleJson>,
    pub proj_vertices: Vec<String>,
    #[serde(default)]
    pub g_vectors: Vec<Vec<i64>>,
}

impl PairJson {
    pub fn of(pair: &SupportTauTiltingPair) -> Self {
        let alg = pair.algebra();
        PairJson {
            key: pair.key(),
            module_summands: pair.module_summands().iter().map(ModuleJson::of).collect(),
            proj_vertices: pair
                .proj_vertices()
                .iter()
                .map(|&v| alg.vertex_label(v).to_string())
                .collect(),
            g_vectors: pair.g_vectors(),
        }
    }

    /// Rebuilds the pair; the stored key must match the recomputed one.
    pub fn build(&self, alg: &Algebra) -> Result<SupportTauTiltingPair> {
        let mods = self
            .module_summands
            .iter()
            .map(|m| m.build(alg))
            .collect::<Result<Vec<_>>>()?;
        let proj = self
            .proj_vertices
            .iter()
            .map(|l| alg.vertex_index(l))
            .collect::<Result<Vec<_>>>()?;
        let pair = SupportTauTiltingPair::new(alg, mods, proj);
        if pair.key() != self.key {
            return Err(Error::BadInput(format!(
                "stored key {} does not match recomputed key {}",
                self.key,
                pair.key()
            )));
        }
        Ok(pair)
    }
}

pub fn pair_to_json(pair: &SupportTauTiltingPair) -> String {
    serde_json::to_string_pretty(&PairJson::of(pair)).expect("serializable")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub from: String,
    pub summand: usize,
    pub to: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    #[serde(default = "default_p")]
    pub p: u64,
    pub nodes: Vec<PairJson>,
    pub edges: Vec<EdgeJson>,
    pub truncated: bool,
}

fn default_p() -> u64 {
    DEFAULT_PRIME
}

impl GraphJson {
    pub fn of(g: &ExchangeGraph) -> Self {
        GraphJson {
            p: g.algebra().p(),
            nodes: g.nodes().map(|(_, pair)| PairJson::of(pair)).collect(),
            edges: g
                .edges
                .iter()
                .map(|e| EdgeJson {
                    from: e.from.clone(),
                    summand: e.summand,
                    to: e.to.clone(),
                })
                .collect(),
            truncated: g.truncated,
        }
    }

    pub fn build(&self, alg: &Algebra) -> Result<ExchangeGraph> {
        let nodes = self
            .nodes
            .iter()
            .map(|n| n.build(alg))
            .collect::<Result<Vec<_>>>()?;
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                from: e.from.clone(),
                summand: e.summand,
                to: e.to.clone(),
            })
            .collect();
        ExchangeGraph::from_parts(alg, nodes, edges, self.truncated)
    }
}

pub fn graph_to_json(g: &ExchangeGraph) -> String {
    serde_json::to_string_pretty(&GraphJson::of(g)).expect("serializable")
}

pub fn parse_graph(alg: &Algebra, text: &str) -> Result<ExchangeGraph> {
    serde_json::from_str::<GraphJson>(text)
        .map_err(bad_json)?
        .build(alg)
}

pub fn dims_label(dims: &[usize]) -> String {
    let parts: Vec<String> = dims.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

/// Short human label: module summand dimension vectors, then `P(i)[1]` for
/// each projective vertex.
pub fn pair_label(pair: &SupportTauTiltingPair) -> String {
    let alg = pair.algebra();
    let mut parts: Vec<String> = pair
        .module_summands()
        .iter()
        .map(|m| dims_label(m.dims()))
        .collect();
    parts.extend(
        pair.proj_vertices()
            .iter()
            .map(|&v| format!("P({})[1]", alg.vertex_label(v))),
    );
    parts.join(" ")
}

pub fn graph_to_dot(g: &ExchangeGraph) -> String {
    let mut out = String::from("digraph exchange {\n");
    for (key, pair) in g.nodes() {
        writeln!(out, "  \"{key}\" [label=\"{}\"];", pair_label(pair)).unwrap();
    }
    for e in &g.edges {
        writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{}\"];",
            e.from, e.to, e.summand
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
