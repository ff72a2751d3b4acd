//! Breadth-first exploration of left mutations from `(Λ, 0)`.

use std::collections::{HashMap, VecDeque};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::options::Options;
use crate::tautilt::{mutate_pair, PairMutation, SupportTauTiltingPair};

pub const DEFAULT_MAX_NODES: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub from: String,
    pub summand: usize,
    pub to: String,
}

/// Nodes keyed by their g-matrix, in discovery order.
#[derive(Clone, Debug)]
pub struct ExchangeGraph {
    alg: Algebra,
    order: Vec<String>,
    nodes: HashMap<String, SupportTauTiltingPair>,
    pub edges: Vec<Edge>,
    pub truncated: bool,
}

impl ExchangeGraph {
    /// A graph holding only `(Λ, 0)`.
    pub fn seeded(alg: &Algebra) -> Self {
        let top = SupportTauTiltingPair::top(alg);
        let key = top.key();
        ExchangeGraph {
            alg: alg.clone(),
            order: vec![key.clone()],
            nodes: HashMap::from([(key, top)]),
            edges: Vec::new(),
            truncated: false,
        }
    }

    /// Reassembles a graph; the first node is the root.
    pub fn from_parts(
        alg: &Algebra,
        nodes: Vec<SupportTauTiltingPair>,
        edges: Vec<Edge>,
        truncated: bool,
    ) -> Result<Self> {
        let mut it = nodes.into_iter();
        let root = it
            .next()
            .ok_or_else(|| Error::BadInput("graph has no nodes".into()))?;
        let key = root.key();
        let mut g = ExchangeGraph {
            alg: alg.clone(),
            order: vec![key.clone()],
            nodes: HashMap::from([(key, root)]),
            edges: Vec::new(),
            truncated,
        };
        for pair in it {
            if !g.insert(pair) {
                return Err(Error::BadInput("duplicate node key".into()));
            }
        }
        for e in edges {
            for k in [&e.from, &e.to] {
                if !g.nodes.contains_key(k) {
                    return Err(Error::UnknownNodeKey(k.clone()));
                }
            }
            g.add_edge(e);
        }
        Ok(g)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Keys in discovery order.
    pub fn keys(&self) -> &[String] {
        &self.order
    }

    pub fn node(&self, key: &str) -> Option<&SupportTauTiltingPair> {
        self.nodes.get(key)
    }

    pub fn nodes(&self) -> impl Iterator<Item = (&String, &SupportTauTiltingPair)> {
        self.order.iter().map(move |k| (k, &self.nodes[k]))
    }

    pub fn root_key(&self) -> &str {
        &self.order[0]
    }

    /// Inserts a node unless present; returns whether it was new.
    pub fn insert(&mut self, pair: SupportTauTiltingPair) -> bool {
        let key = pair.key();
        if self.nodes.contains_key(&key) {
            return false;
        }
        self.order.push(key.clone());
        self.nodes.insert(key, pair);
        true
    }

    /// Records an edge once.
    pub fn add_edge(&mut self, edge: Edge) {
        if !self.edges.contains(&edge) {
            self.edges.push(edge);
        }
    }

    pub fn out_edges<'a>(&'a self, key: &'a str) -> impl Iterator<Item = &'a Edge> {
        self.edges.iter().filter(move |e| e.from == key)
    }
}

/// Left mutation of an explored node, adding the target node and edge.
pub fn step(
    graph: &mut ExchangeGraph,
    key: &str,
    k: usize,
    opts: &Options,
) -> Result<Option<String>> {
    let pair = graph
        .node(key)
        .ok_or_else(|| Error::UnknownNodeKey(key.to_string()))?
        .clone();
    match mutate_pair(&pair, k, opts)? {
        PairMutation::NotLeftMutable => Ok(None),
        PairMutation::Mutated(next) => {
            let to = next.key();
            graph.insert(next);
            graph.add_edge(Edge {
                from: key.to_string(),
                summand: k,
                to: to.clone(),
            });
            Ok(Some(to))
        }
    }
}

/// Breadth-first search over left mutations. Stops adding nodes at
/// `max_nodes`; edges to nodes left out are dropped and the graph is
/// marked truncated.
pub fn exchange_graph(alg: &Algebra, max_nodes: usize, opts: &Options) -> Result<ExchangeGraph> {
    let max_nodes = max_nodes.max(1);
    let mut graph = ExchangeGraph::seeded(alg);
    let mut queue = VecDeque::from([graph.root_key().to_string()]);
    while let Some(key) = queue.pop_front() {
        let pair = graph.nodes[&key].clone();
        for k in 0..pair.len() {
            let PairMutation::Mutated(next) = mutate_pair(&pair, k, opts)? else {
                continue;
            };
            let to = next.key();
            if !graph.nodes.contains_key(&to) {
                if graph.len() >= max_nodes {
                    graph.truncated = true;
                    continue;
                }
                graph.insert(next);
                queue.push_back(to.clone());
            }
            graph.add_edge(Edge {
                from: key.clone(),
                summand: k,
                to,
            });
        }
    }
    Ok(graph)
}
