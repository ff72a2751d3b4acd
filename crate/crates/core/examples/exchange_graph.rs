//! Enumerate the exchange graph of an algebra file and print it as DOT.
//!
//! cargo run --example exchange_graph -- examples/data/a3.json [max_nodes]

use taumutate::graph::exchange_graph;
use taumutate::io::{graph_to_dot, load_algebra};
use taumutate::options::Options;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .unwrap_or_else(|| "examples/data/a3.json".into());
    let max_nodes = args.next().map(|s| s.parse()).transpose()?.unwrap_or(100);
    let alg = load_algebra(&path)?;
    let g = exchange_graph(&alg, max_nodes, &Options::default())?;
    print!("{}", graph_to_dot(&g));
    eprintln!(
        "{} nodes, {} edges, truncated {}",
        g.len(),
        g.edges.len(),
        g.truncated
    );
    Ok(())
}
