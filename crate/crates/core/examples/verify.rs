//! Run the edge-by-edge checker over an algebra file.
//!
//! cargo run --example verify -- examples/data/a3_rad2.json

use taumutate::io::load_algebra;
use taumutate::options::Options;
use taumutate::verify::{verify_theorem, EdgeKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "examples/data/a3_rad2.json".into());
    let alg = load_algebra(&path)?;
    let report = verify_theorem(&alg, 1000, &Options::default())?;
    for e in &report.edges {
        if let EdgeKind::Module(v) = &e.kind {
            println!(
                "{} --{}--> {}: Y {:?} {}",
                e.edge.from,
                e.edge.summand,
                e.edge.to,
                v.y_dims,
                if v.passed() { "ok" } else { "FAILED" }
            );
        }
    }
    println!(
        "{}: {} nodes, {} edges",
        if report.passed() { "PASS" } else { "FAIL" },
        report.nodes,
        report.edges.len()
    );
    Ok(())
}
