//! Session-scoped HTTP JSON API over a growing explored subgraph.

use std::net::SocketAddr;
use std::sync::{Arc, RwLock};

use axum::extract::rejection::JsonRejection;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::error::Error;
use crate::graph::{Edge, ExchangeGraph};
use crate::io::{dims_label, pair_label, AlgebraJson, GraphJson, PairJson};
use crate::options::Options;
use crate::rep::projective;
use crate::tautilt::{mutate_pair, PairMutation, SupportTauTiltingPair};

pub struct Session {
    alg: Algebra,
    opts: Options,
    graph: RwLock<ExchangeGraph>,
}

impl Session {
    pub fn new(alg: &Algebra, opts: Options) -> Self {
        Session {
            alg: alg.clone(),
            opts,
            graph: RwLock::new(ExchangeGraph::seeded(alg)),
        }
    }

    pub fn graph(&self) -> ExchangeGraph {
        self.graph.read().unwrap().clone()
    }

    fn pair(&self, key: &str) -> Result<SupportTauTiltingPair, Error> {
        self.graph
            .read()
            .unwrap()
            .node(key)
            .cloned()
            .ok_or_else(|| Error::UnknownNodeKey(key.to_string()))
    }

    /// Mutation at an explored node; the result joins the explored graph.
    pub fn mutate(
        &self,
        key: &str,
        summand: usize,
    ) -> Result<Option<SupportTauTiltingPair>, Error> {
        let pair = self.pair(key)?;
        match mutate_pair(&pair, summand, &self.opts)? {
            PairMutation::NotLeftMutable => Ok(None),
            PairMutation::Mutated(next) => {
                let mut g = self.graph.write().unwrap();
                let to = next.key();
                g.insert(next.clone());
                g.add_edge(Edge {
                    from: key.to_string(),
                    summand,
                    to,
                });
                Ok(Some(next))
            }
        }
    }

    pub fn reset(&self) {
        *self.graph.write().unwrap() = ExchangeGraph::seeded(&self.alg);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandJson {
    pub index: usize,
    /// `"module"` or `"projective"`.
    pub kind: String,
    pub label: String,
    pub g_vector: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeJson {
    #[serde(flatten)]
    pub pair: PairJson,
    pub label: String,
    pub summands: Vec<SummandJson>,
}

impl NodeJson {
    pub fn of(pair: &SupportTauTiltingPair) -> Self {
        let alg = pair.algebra();
        let g = pair.g_vectors();
        let mut summands: Vec<SummandJson> = pair
            .module_summands()
            .iter()
            .enumerate()
            .map(|(i, m)| SummandJson {
                index: i,
                kind: "module".into(),
                label: dims_label(m.dims()),
                g_vector: g[i].clone(),
                dims: Some(m.dims().to_vec()),
                vertex: None,
            })
            .collect();
        let off = summands.len();
        for (j, &v) in pair.proj_vertices().iter().enumerate() {
            summands.push(SummandJson {
                index: off + j,
                kind: "projective".into(),
                label: format!("P({})[1]", alg.vertex_label(v)),
                g_vector: g[off + j].clone(),
                dims: None,
                vertex: Some(alg.vertex_label(v).to_string()),
            });
        }
        NodeJson {
            pair: PairJson::of(pair),
            label: pair_label(pair),
            summands,
        }
    }
}

pub struct ApiError(pub Error);

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        ApiError(e)
    }
}

impl From<JsonRejection> for ApiError {
    fn from(r: JsonRejection) -> Self {
        ApiError(Error::BadInput(r.body_text()))
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let status = match self.0 {
            Error::UnknownNodeKey(_) => StatusCode::NOT_FOUND,
            _ => StatusCode::BAD_REQUEST,
        };
        let body = json!({"error": self.0.code(), "message": self.0.to_string()});
        (status, Json(body)).into_response()
    }
}

type Shared = Arc<Session>;

async fn get_algebra(State(s): State<Shared>) -> Json<Value> {
    let alg = &s.alg;
    let projectives: serde_json::Map<String, Value> = (0..alg.n())
        .map(|v| {
            let p = projective(alg, v).expect("vertex in range");
            (alg.vertex_label(v).to_string(), json!(p.dims()))
        })
        .collect();
    Json(json!({
        "n": alg.n(),
        "dim": alg.dim(),
        "p": alg.p(),
        "seed": s.opts.seed,
        "algebra": AlgebraJson::of(alg),
        "basis": alg.basis_labels(),
        "projectives": projectives,
    }))
}

async fn get_graph(State(s): State<Shared>) -> Json<GraphJson> {
    Json(GraphJson::of(&s.graph.read().unwrap()))
}

async fn get_node(
    State(s): State<Shared>,
    Path(key): Path<String>,
) -> Result<Json<NodeJson>, ApiError> {
    Ok(Json(NodeJson::of(&s.pair(&key)?)))
}

#[derive(Clone, Debug, Deserialize)]
pub struct MutateRequest {
    pub node: String,
    pub summand: usize,
}

async fn post_mutate(
    State(s): State<Shared>,
    body: Result<Json<MutateRequest>, JsonRejection>,
) -> Result<Json<Value>, ApiError> {
    let Json(req) = body?;
    let s2 = s.clone();
    let out = tokio::task::spawn_blocking(move || s2.mutate(&req.node, req.summand))
        .await
        .expect("mutation task panicked")?;
    Ok(Json(match out {
        Some(pair) => json!({"result": "ok", "node": NodeJson::of(&pair)}),
        None => json!({"result": "not_left_mutable"}),
    }))
}

async fn post_reset(State(s): State<Shared>) -> Json<Value> {
    s.reset();
    let root = SupportTauTiltingPair::top(&s.alg);
    Json(json!({"result": "ok", "node": NodeJson::of(&root)}))
}

pub fn router(session: Arc<Session>) -> Router {
    Router::new()
        .route("/algebra", get(get_algebra))
        .route("/graph", get(get_graph))
        .route("/node/{key}", get(get_node))
        .route("/mutate", post(post_mutate))
        .route("/reset", post(post_reset))
        .with_state(session)
}

/// Binds `127.0.0.1:port` and serves until the process ends.
pub async fn serve(alg: &Algebra, opts: Options, port: u16) -> Result<(), Error> {
    let addr = SocketAddr::from(([127, 0, 0, 1], port));
    let listener = tokio::net::TcpListener::bind(addr)
        .await
        .map_err(|_| Error::PortInUse(port))?;
    eprintln!("listening on http://{addr}");
    axum::serve(listener, router(Arc::new(Session::new(alg, opts))))
        .await
        .map_err(|e| Error::BadInput(e.to_string()))
}
