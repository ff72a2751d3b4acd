//! Drive the JSON API in-process. `taumutate serve <file>` exposes the same
//! router over HTTP.

use std::sync::Arc;

use axum::body::{to_bytes, Body};
use axum::http::{Method, Request};
use serde_json::{json, Value};
use taumutate::io::load_algebra;
use taumutate::options::Options;
use taumutate::service::{router, Session};
use tower::ServiceExt;

async fn call(app: &axum::Router, method: Method, uri: &str, body: Option<Value>) -> Value {
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(body.map_or_else(Body::empty, |b| Body::from(b.to_string())))
        .unwrap();
    let resp = app.clone().oneshot(req).await.unwrap();
    serde_json::from_slice(&to_bytes(resp.into_body(), usize::MAX).await.unwrap()).unwrap()
}

#[tokio::main]
async fn main() -> Result<(), Box<dyn std::error::Error>> {
    let alg = load_algebra("examples/data/a2.json")?;
    let app = router(Arc::new(Session::new(&alg, Options::default())));

    println!("{}", call(&app, Method::GET, "/algebra", None).await);
    let root = call(&app, Method::GET, "/node/%5B%5B0,1%5D,%5B1,0%5D%5D", None).await;
    println!("root: {}", root["label"]);
    let r = call(
        &app,
        Method::POST,
        "/mutate",
        Some(json!({"node": root["key"], "summand": 0})),
    )
    .await;
    println!("mutate: {} -> {}", r["result"], r["node"]["key"]);
    let g = call(&app, Method::GET, "/graph", None).await;
    println!(
        "explored: {} nodes",
        g["nodes"].as_array().map_or(0, Vec::len)
    );
    Ok(())
}
