//! Command-line front end. Exit codes: 0 success, 1 input or algebra error,
//! 2 verification-infrastructure error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::Algebra;
use crate::error::Error;
use crate::graph::{exchange_graph, DEFAULT_MAX_NODES};
use crate::io::{dims_label, graph_to_dot, graph_to_json, load_algebra, PairJson};
use crate::options::Options;
use crate::rep::projective;
use crate::tautilt::{mutate_pair, PairMutation};
use crate::verify::{verify_theorem, EdgeKind};

pub const DEFAULT_PORT: u16 = 7420;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "taumutate",
    version,
    about = "Mutation of support tau-tilting pairs over bound quiver algebras"
)]
pub struct Cli {
    /// Seed for randomized searches, in hex.
    #[arg(long, global = true, value_parser = parse_seed, default_value = "0xA1")]
    pub seed: u64,
    /// Re-check cone indecomposability and pair validity at every step.
    #[arg(long, global = true)]
    pub verify: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the algebra and print its projectives.
    Check { file: PathBuf },
    /// Breadth-first enumeration of left mutations from (Λ, 0).
    Enumerate {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_NODES as u64, value_parser = clap::value_parser!(u64).range(1..))]
        max_nodes: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Mutate an explored node at one summand.
    Mutate {
        file: PathBuf,
        #[arg(long)]
        node: String,
        #[arg(long)]
        summand: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_NODES as u64, value_parser = clap::value_parser!(u64).range(1..))]
        max_nodes: u64,
    },
    /// Check every explored mutation edge.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_NODES as u64, value_parser = clap::value_parser!(u64).range(1..))]
        max_nodes: u64,
    },
    /// Serve the JSON API on 127.0.0.1.
    Serve {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_PORT, value_parser = clap::value_parser!(u16).range(1024..))]
        port: u16,
    },
}

pub fn parse_seed(s: &str) -> Result<u64, String> {
    let t = s.trim();
    let digits = t
        .strip_prefix("0x")
        .or_else(|| t.strip_prefix("0X"))
        .unwrap_or(t);
    u64::from_str_radix(digits, 16).map_err(|e| format!("invalid hex seed `{s}`: {e}"))
}

fn exit_code(e: &Error) -> i32 {
    if e.is_infrastructure() {
        2
    } else {
        1
    }
}

fn report(err: &mut dyn Write, e: &Error) -> i32 {
    writeln!(err, "error[{}]: {e}", e.code()).ok();
    exit_code(e)
}

pub fn cmd_check(alg: &Algebra, out: &mut dyn Write) -> Result<(), Error> {
    let projs: Vec<String> = (0..alg.n())
        .map(|v| {
            Ok(format!(
                "P({})={}",
                alg.vertex_label(v),
                dims_label(projective(alg, v)?.dims())
            ))
        })
        .collect::<Result<_, Error>>()?;
    writeln!(out, "dim {}, projectives: {}", alg.dim(), projs.join(" ")).ok();
    writeln!(
        out,
        "p {}, basis: {}",
        alg.p(),
        alg.basis_labels().join(" ")
    )
    .ok();
    Ok(())
}

pub fn cmd_enumerate(
    alg: &Algebra,
    max_nodes: usize,
    format: Format,
    opts: &Options,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Error> {
    let g = exchange_graph(alg, max_nodes, opts)?;
    match format {
        Format::Json => writeln!(out, "{}", graph_to_json(&g)).ok(),
        Format::Dot => write!(out, "{}", graph_to_dot(&g)).ok(),
    };
    writeln!(
        err,
        "{} nodes, {} edges, truncated {}, p {}",
        g.len(),
        g.edges.len(),
        g.truncated,
        alg.p()
    )
    .ok();
    Ok(())
}

/// Replays the enumeration to find `node`, then mutates it.
pub fn cmd_mutate(
    alg: &Algebra,
    node: &str,
    summand: usize,
    max_nodes: usize,
    opts: &Options,
    out: &mut dyn Write,
) -> Result<(), Error> {
    let g = exchange_graph(alg, max_nodes, opts)?;
    let pair = g
        .node(node)
        .ok_or_else(|| Error::UnknownNodeKey(node.to_string()))?;
    let body = match mutate_pair(pair, summand, opts)? {
        PairMutation::Mutated(next) => json!({
            "result": "ok",
            "key": next.key(),
            "not_left_mutable": false,
            "p": alg.p(),
            "pair": PairJson::of(&next),
        }),
        PairMutation::NotLeftMutable => json!({
            "result": "not_left_mutable",
            "from": node,
            "summand": summand,
            "not_left_mutable": true,
            "p": alg.p(),
        }),
    };
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&body).expect("serializable")
    )
    .ok();
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Returns whether every edge passed.
pub fn cmd_verify(
    alg: &Algebra,
    max_nodes: usize,
    opts: &Options,
    out: &mut dyn Write,
) -> Result<bool, Error> {
    let report = verify_theorem(alg, max_nodes, opts).map_err(|f| {
        if let Some(e) = &f.edge {
            writeln!(out, "failed at edge {} --{}--> {}", e.from, e.summand, e.to).ok();
        }
        f.error
    })?;
    writeln!(
        out,
        "{:<28} {:>3} {:<28} {:<8} {:<7} {:<7} {:<7} {:<7}",
        "from", "k", "to", "Y dims", "Y=0", "indec", "copies", "cross"
    )
    .ok();
    for e in &report.edges {
        let ed = &e.edge;
        match &e.kind {
            EdgeKind::Module(v) => writeln!(
                out,
                "{:<28} {:>3} {:<28} {:<8} {:<7} {:<7} {:<7} {:<7}",
                ed.from,
                ed.summand,
                ed.to,
                dims_label(&v.y_dims),
                yes_no(v.y_zero),
                yes_no(v.indecomposable),
                yes_no(v.copies_shape),
                yes_no(v.cross_check && v.u_prime_matches && v.target_matches),
            ),
            EdgeKind::InFac => writeln!(
                out,
                "{:<28} {:>3} {:<28} (summand in Fac U)",
                ed.from, ed.summand, ed.to
            ),
            EdgeKind::Projective => writeln!(
                out,
                "{:<28} {:>3} {:<28} (projective summand)",
                ed.from, ed.summand, ed.to
            ),
        }
        .ok();
    }
    let verdict = if report.passed() { "PASS" } else { "FAIL" };
    writeln!(
        out,
        "{verdict}: {} edges ({} checked), {} nodes, truncated {}, p {}",
        report.edges.len(),
        report.module_edges(),
        report.nodes,
        report.truncated,
        report.p
    )
    .ok();
    Ok(report.passed())
}

pub fn cmd_serve(alg: &Algebra, port: u16, opts: &Options) -> Result<(), Error> {
    let rt = tokio::runtime::Builder::new_multi_thread()
        .enable_all()
        .build()
        .map_err(|e| Error::BadInput(e.to_string()))?;
    rt.block_on(crate::service::serve(alg, *opts, port))
}

/// Parses `args` and runs the command, writing to the given streams.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            if e.use_stderr() {
                write!(err, "{e}").ok();
            } else {
                write!(out, "{e}").ok();
            }
            return code;
        }
    };
    let opts = Options {
        seed: cli.seed,
        verify: cli.verify,
    };
    let file = match &cli.command {
        Command::Check { file }
        | Command::Enumerate { file, .. }
        | Command::Mutate { file, .. }
        | Command::Verify { file, .. }
        | Command::Serve { file, .. } => file,
    };
    let alg = match load_algebra(file) {
        Ok(a) => a,
        Err(e) => return report(err, &e),
    };
    let result = match cli.command {
        Command::Check { .. } => cmd_check(&alg, out).map(|_| 0),
        Command::Enumerate {
            max_nodes, format, ..
        } => cmd_enumerate(&alg, max_nodes as usize, format, &opts, out, err).map(|_| 0),
        Command::Mutate {
            node,
            summand,
            max_nodes,
            ..
        } => cmd_mutate(&alg, &node, summand, max_nodes as usize, &opts, out).map(|_| 0),
        Command::Verify { max_nodes, .. } => {
            cmd_verify(&alg, max_nodes as usize, &opts, out).map(|ok| if ok { 0 } else { 1 })
        }
        Command::Serve { port, .. } => cmd_serve(&alg, port, &opts).map(|_| 0),
    };
    result.unwrap_or_else(|e| report(err, &e))
}
