use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use zagreb_core::constructions::{
    build_family, complete_bipartite, family_m1, family_m2, predict, FamilyParams, Mode,
};
use zagreb_core::graph::{m1, m2, Graph, Index};
use zagreb_core::io::{decode_auto, encode_edge_list, encode_graph6};
use zagreb_core::verify::{all_match, VerifyGrid};
use zagreb_core::{
    edge_connectivity, search_max, search_max_at_least, vertex_connectivity, SearchReport,
    SearchSpec, Strategy,
};

#[derive(Parser)]
#[command(
    name = "zex",
    version,
    about = "Zagreb indices of bipartite graphs with given connectivity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print order, size, M1, M2 and the degree sequence of a graph file.
    Index { file: PathBuf },
    /// Build a graph and write it as graph6 (default) or an edge list.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
        /// Write the graph here instead of stdout.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
        /// Write an edge list instead of graph6.
        #[arg(long, global = true)]
        edge_list: bool,
    },
    /// Vertex or edge connectivity of a graph file, with a minimum cut.
    Connectivity {
        file: PathBuf,
        #[arg(long, default_value = "vertex")]
        mode: Mode,
    },
    /// Exhaustive maximisation over one class; prints a JSON report.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mode: Mode,
        #[arg(long)]
        c: usize,
        #[arg(long)]
        index: Index,
        /// Use every graph with connectivity at least c.
        #[arg(long)]
        at_least: bool,
    },
    /// Compare exhaustive maxima with the predicted extremal graphs over a grid.
    Verify {
        #[arg(long, default_value_t = 6)]
        n_min: usize,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, value_delimiter = ',', default_value = "vertex,edge")]
        modes: Vec<Mode>,
        #[arg(long, value_delimiter = ',', default_value = "M1,M2")]
        indices: Vec<Index>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// O_k v1 (K_1 u K_{n-r-1, r-k}).
    Family {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
    },
    CompleteBipartite {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// The predicted maximiser for order n and connectivity c.
    Predicted {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: usize,
        #[arg(long, default_value = "vertex")]
        mode: Mode,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

enum Failure {
    Usage(String),
    Io(String),
    Mismatch,
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("ZEX_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .map_err(|_| format!("ZEX_THREADS must be a number, got `{raw}`"))?;
    #[cfg(feature = "parallel")]
    if threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
    Ok(())
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Index { file } => cmd_index(&file),
        Command::Construct {
            kind,
            out,
            edge_list,
        } => cmd_construct(kind, out.as_deref(), edge_list),
        Command::Connectivity { file, mode } => cmd_connectivity(&file, mode),
        Command::Search {
            n,
            mode,
            c,
            index,
            at_least,
        } => cmd_search(n, mode, c, index, at_least),
        Command::Verify {
            n_min,
            n_max,
            modes,
            indices,
            out,
            format,
        } => cmd_verify(n_min, n_max, modes, indices, &out, format),
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let bytes = fs::read(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    decode_auto(&bytes).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn cmd_index(path: &Path) -> Result<(), Failure> {
    let g = read_graph(path)?;
    let degrees: Vec<String> = g.degrees().iter().map(|d| d.to_string()).collect();
    println!("n={} m={}", g.order(), g.size());
    println!("{} {}", m1(&g), m2(&g));
    println!("degrees: {}", degrees.join(" "));
    Ok(())
}

/// Degrees as `d^count`, highest first.
fn degree_profile(g: &Graph) -> String {
    let mut degrees = g.degrees();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < degrees.len() {
        let run = degrees[i..]
            .iter()
            .take_while(|&&d| d == degrees[i])
            .count();
        parts.push(format!("{}^{run}", degrees[i]));
        i += run;
    }
    parts.join(" ")
}

fn cmd_construct(kind: ConstructKind, out: Option<&Path>, edge_list: bool) -> Result<(), Failure> {
    let usage = |e: zagreb_core::ParamError| Failure::Usage(e.to_string());
    let (g, label, closed) = match kind {
        ConstructKind::Family { n, k, r } => {
            let p = FamilyParams::new(n, k, r).map_err(usage)?;
            (build_family(p), p.to_string(), (family_m1(p), family_m2(p)))
        }
        ConstructKind::CompleteBipartite { p, q } => {
            let g = complete_bipartite(p, q).map_err(usage)?;
            let (a, b) = (p as u64, q as u64);
            (
                g,
                format!("K_{{{p},{q}}}"),
                (a * b * (a + b), (a * b).pow(2)),
            )
        }
        ConstructKind::Predicted { n, c, mode } => {
            let pred = predict(n, c, mode).map_err(usage)?;
            (
                pred.graph(),
                pred.to_string(),
                (pred.value(Index::M1), pred.value(Index::M2)),
            )
        }
    };
    let text = if edge_list {
        encode_edge_list(&g)
    } else {
        encode_graph6(&g) + "\n"
    };
    let summary = format!(
        "{label}\ndegrees: {}\nM1={} M2={}",
        degree_profile(&g),
        closed.0,
        closed.1
    );
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            println!("{summary}");
        }
        None => {
            io::stdout().write_all(text.as_bytes())?;
            eprintln!("{summary}");
        }
    }
    Ok(())
}

fn cmd_connectivity(path: &Path, mode: Mode) -> Result<(), Failure> {
    let g = read_graph(path)?;
    let (value, witness) = match mode {
        Mode::Vertex => vertex_connectivity(&g),
        Mode::Edge => edge_connectivity(&g),
    };
    if witness.complete || !witness.members.is_empty() {
        println!("{value}, {witness}");
    } else {
        println!("{value}");
    }
    Ok(())
}

fn warn_ties(r: &SearchReport) {
    if r.maximizers.len() > 1 {
        let s = r.spec;
        eprintln!(
            "warning: n={} mode={} c={} {}: {} non-isomorphic maximizers",
            s.n,
            s.mode,
            s.c,
            s.index,
            r.maximizers.len()
        );
    }
}

fn cmd_search(n: usize, mode: Mode, c: usize, index: Index, at_least: bool) -> Result<(), Failure> {
    let spec = SearchSpec::new(n, mode, c, index).map_err(|e| Failure::Usage(e.to_string()))?;
    let report = if at_least {
        search_max_at_least(spec, Strategy::Parallel)
    } else {
        search_max(spec, Strategy::Parallel)
    };
    warn_ties(&report);
    let json = serde_json::to_string_pretty(&report).expect("report serialises");
    println!("{json}");
    Ok(())
}

fn opt(v: Option<u64>) -> String {
    v.map_or_else(|| "empty".to_string(), |x| x.to_string())
}

fn write_csv(path: &Path, reports: &[SearchReport]) -> Result<(), Failure> {
    let io_err = |e: csv::Error| Failure::Io(format!("{}: {e}", path.display()));
    let mut w = csv::Writer::from_path(path).map_err(io_err)?;
    w.write_record([
        "n",
        "mode",
        "c",
        "index",
        "max",
        "predicted",
        "match",
        "num_maximizers",
    ])
    .map_err(io_err)?;
    for r in reports {
        let s = r.spec;
        let matched = if r.is_empty_class() {
            "empty".to_string()
        } else {
            r.matches.to_string()
        };
        w.write_record([
            s.n.to_string(),
            s.mode.to_string(),
            s.c.to_string(),
            s.index.to_string(),
            opt(r.max_value),
            opt(r.predicted_value),
            matched,
            r.maximizers.len().to_string(),
        ])
        .map_err(io_err)?;
    }
    w.flush()?;
    Ok(())
}

fn cmd_verify(
    n_min: usize,
    n_max: usize,
    modes: Vec<Mode>,
    indices: Vec<Index>,
    out: &Path,
    format: Format,
) -> Result<(), Failure> {
    let grid =
        VerifyGrid::new(n_min, n_max, modes, indices).map_err(|e| Failure::Usage(e.to_string()))?;
    let reports = grid.run(Strategy::Parallel);
    reports.iter().for_each(warn_ties);
    let ok = all_match(&reports);
    match format {
        Format::Json => {
            let doc = serde_json::json!({ "cells": reports, "all_match": ok });
            let text = serde_json::to_string_pretty(&doc).expect("report serialises");
            fs::write(out, text + "\n")
                .map_err(|e| Failure::Io(format!("{}: {e}", out.display())))?;
        }
        Format::Csv => write_csv(out, &reports)?,
    }
    let mismatched = reports
        .iter()
        .filter(|r| !r.is_empty_class() && !r.matches)
        .count();
    let empty = reports.iter().filter(|r| r.is_empty_class()).count();
    println!(
        "{} cells, {mismatched} mismatched, {empty} empty",
        reports.len()
    );
    if ok {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}
