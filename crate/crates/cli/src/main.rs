use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use chibind::enumerate::{self, decode_graph6};
use chibind::harness::{self, VerifyParams};
use chibind::patterns;
use chibind::{Error, Graph};
use clap::{Args, Parser, Subcommand};

/// Exhaustive verification of chromatic bounds for (P5, H)-free graphs.
#[derive(Parser)]
#[command(name = "chibind", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a statement on every graph of its universe.
    Verify(VerifyArgs),
    /// Color one graph with a pipeline and print the certificate.
    Color {
        #[arg(long)]
        pipeline: String,
        #[command(flatten)]
        input: GraphInput,
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Print the structural profile of one graph.
    Analyze {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
    },
    /// Print graph6 lines for all graphs on n vertices.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
        /// Comma-separated forbidden induced subgraphs, e.g. P5,K2,3.
        #[arg(long, default_value = "")]
        free: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List verification targets and pipelines.
    Targets,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    target: String,
    /// Largest order checked.
    #[arg(long)]
    n: usize,
    /// Smallest order checked.
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    /// Keep only connected graphs.
    #[arg(long)]
    connected: bool,
    /// Read the universe from a graph6 file.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Write the JSON report here (`-` for stdout).
    #[arg(long)]
    json: Option<PathBuf>,
    /// Write one CSV row per graph here.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    threads: Option<usize>,
    /// Record wall time in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct GraphInput {
    /// Graph in graph6.
    #[arg(long, group = "graph")]
    g6: Option<String>,
    /// Edge list such as "0-1,1-2".
    #[arg(long, group = "graph")]
    edges: Option<String>,
    /// Vertex count for --edges when isolated vertices trail the list.
    #[arg(long, requires = "edges")]
    vertices: Option<usize>,
    /// graph6 file; every line is processed.
    #[arg(long = "in", group = "graph")]
    input: Option<PathBuf>,
}

impl GraphInput {
    fn graphs(&self) -> Result<Vec<Graph>, Error> {
        if let Some(s) = &self.g6 {
            Ok(vec![decode_graph6(s)?])
        } else if let Some(e) = &self.edges {
            Ok(vec![harness::parse_edges(e, self.vertices)?])
        } else if let Some(p) = &self.input {
            enumerate::read_graph6_file(p)
        } else {
            Err(Error::Precondition("give --g6, --edges or --in".into()))
        }
    }
}

fn exit_for(e: &Error) -> ExitCode {
    match e {
        Error::NotFree { pattern, embedding } => {
            eprintln!("rejected: the input induces {pattern} on vertices {embedding:?}");
        }
        other if other.is_precondition() => eprintln!("rejected: {other}"),
        other => eprintln!("internal failure: {other}"),
    }
    ExitCode::from(if e.is_precondition() { 2 } else { 1 })
}

fn write_out(path: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::write(p, text).map_err(Error::from),
        _ => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn verify(a: &VerifyArgs) -> Result<ExitCode, Error> {
    let params = VerifyParams {
        target: a.target.clone(),
        n_min: a.n_min,
        n_max: a.n,
        connected: a.connected,
        input: a.input.clone(),
        threads: a.threads,
        timing: a.timing,
    };
    let (report, rows) = harness::verify_with_rows(&params)?;
    let json = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    if let Some(p) = &a.json {
        write_out(&Some(p.clone()), &json)?;
    }
    if let Some(p) = &a.csv {
        let mut w = csv::Writer::from_path(p).map_err(|e| Error::Io(e.to_string()))?;
        for r in &rows {
            w.serialize(r).map_err(|e| Error::Io(e.to_string()))?;
        }
        w.flush()?;
    }
    let to_stdout = a.json.as_ref().is_some_and(|p| p.as_os_str() == "-");
    let mut msg = format!(
        "{}: {} graphs, {} applicable, {} violations\n{}\n",
        report.target, report.counts.graphs_checked, report.counts.applicable, report.counts.violations, report.summary
    );
    if let Some(w) = &report.extremes.colors_used.worst {
        msg.push_str(&format!("worst pipeline ratio {}/{} at ω = {} ({})\n", w.value, w.bound, w.omega, w.g6));
    }
    for v in report.violations.iter().take(20) {
        msg.push_str(&format!("  {} {}\n", v.g6, v.detail));
    }
    if to_stdout {
        eprint!("{msg}");
    } else {
        print!("{msg}");
    }
    Ok(if report.violations.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::Verify(a) => verify(&a),
        Cmd::Color { pipeline, input, json } => {
            for g in input.graphs()? {
                let r = harness::color_one(&g, &pipeline)?;
                if json {
                    println!("{}", serde_json::to_string(&r).expect("result serializes"));
                } else {
                    print!("{}", harness::render_coloring(&r));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Analyze { input, json } => {
            for g in input.graphs()? {
                let p = harness::analyze_one(&g)?;
                if json {
                    println!("{}", serde_json::to_string(&p).expect("profile serializes"));
                } else {
                    print!("{}", harness::render_profile(&p));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Gen { n, connected, free, out } => {
            let pats = patterns::parse_pattern_list(&free)?;
            write_out(&out, &harness::gen_lines(n, connected, &pats)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Targets => {
            for t in harness::TARGETS.iter() {
                println!("{:<28} {:<16} {}", t.id, t.alias, t.statement);
            }
            println!();
            for p in chibind::Pipeline::ALL {
                println!("pipeline {}", p.id());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => exit_for(&e),
    }
}
