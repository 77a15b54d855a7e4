use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use subcubic::generator::{enumerate_connected_with, GenOptions};
use subcubic::graph6::{from_edge_list, parse_corpus, parse_line, to_graph6};
use subcubic::harness::{self, ReportFormat, SolverChoice, VerifyOptions};
use subcubic::named::named;
use subcubic::reductions::{contract_c4, find_separated_c4};
use subcubic::solver::{gamma_brute_force_with, gamma_exact_with, SolveOptions};
use subcubic::structure::analyze_vertex;
use subcubic::SubcubicGraph;

/// Exact 2-limited broadcast domination on subcubic graphs.
#[derive(Parser)]
#[command(name = "subcubic", version)]
struct Cli {
    /// Worker threads for generation and verification.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate connected subcubic graphs up to isomorphism as graph6 lines.
    Gen(GenArgs),
    /// Solve each input graph exactly.
    Solve(SolveArgs),
    /// Report the neighborhood parameters of one or every vertex.
    Analyze(AnalyzeArgs),
    /// List separated 4-cycles, or contract one of them.
    Reduce(ReduceArgs),
    /// Check the broadcast bounds over a corpus.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Io {
    /// Input: a file, `-` for stdin, a literal graph6/sparse6 string or a
    /// graph name such as `petersen` or `c7`.
    /// Files hold one graph6/sparse6 graph per line, or an edge list whose
    /// first line is `n m`.
    #[arg(long, short, default_value = "-")]
    input: String,
    /// Output file; stdout when absent.
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Limits {
    /// Largest order the solver accepts.
    #[arg(long, default_value_t = 64)]
    cap: usize,
    /// Per-graph time limit in milliseconds; 0 disables it.
    #[arg(long, default_value_t = 30_000)]
    timeout_ms: u64,
}

impl Limits {
    fn timeout(&self) -> Option<Duration> {
        (self.timeout_ms > 0).then(|| Duration::from_millis(self.timeout_ms))
    }

    fn solve_options(&self) -> SolveOptions {
        SolveOptions {
            cap: self.cap,
            deadline: self.timeout().map(|t| Instant::now() + t),
            ..SolveOptions::default()
        }
    }
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    /// Only cubic graphs.
    #[arg(long)]
    cubic: bool,
    /// Only triangle-free graphs.
    #[arg(long)]
    triangle_free: bool,
    /// Print the number of graphs instead of the graphs.
    #[arg(long)]
    count_only: bool,
    /// Largest order accepted; defaults to 14 for cubic and 10 otherwise.
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Bb,
    Brute,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    io: Io,
    #[command(flatten)]
    limits: Limits,
    #[arg(long, value_enum, default_value = "bb")]
    method: MethodArg,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    io: Io,
    /// Vertex to analyze; every vertex when absent.
    #[arg(long)]
    vertex: Option<usize>,
}

#[derive(Args)]
struct ReduceArgs {
    #[command(flatten)]
    io: Io,
    /// Contract the k-th separated 4-cycle (0-based) and print the result in graph6.
    #[arg(long)]
    apply: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Jsonl,
    Csv,
    Summary,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    io: Io,
    #[command(flatten)]
    limits: Limits,
    #[arg(long, value_enum, default_value = "jsonl")]
    format: FormatArg,
    #[arg(long, value_enum, default_value = "bb")]
    method: MethodArg,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .context("configuring the thread pool")?;
    }
    match cli.command {
        Command::Gen(a) => gen(a),
        Command::Solve(a) => solve(a),
        Command::Analyze(a) => analyze(a),
        Command::Reduce(a) => reduce(a),
        Command::Verify(a) => verify(a),
    }
}

fn open_out(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn read_graphs(input: &str) -> Result<Vec<SubcubicGraph>> {
    let text = if input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        s
    } else if Path::new(input).exists() {
        std::fs::read_to_string(input).with_context(|| format!("reading {input}"))?
    } else {
        let g = parse_line(input)
            .or_else(|_| named(input))
            .map_err(|_| anyhow!("`{input}` is not a file, a graph6/sparse6 string or a graph name"))?;
        return Ok(vec![g]);
    };
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    let is_edge_list = first.split_whitespace().count() == 2
        && first.split_whitespace().all(|t| t.parse::<usize>().is_ok());
    if is_edge_list {
        Ok(vec![from_edge_list(&text)?])
    } else {
        Ok(parse_corpus(&text)?)
    }
}

fn gen(a: GenArgs) -> Result<i32> {
    let mut opts = GenOptions { cubic_only: a.cubic, triangle_free: a.triangle_free, ..GenOptions::default() };
    if let Some(cap) = a.cap {
        opts.max_cubic = cap;
        opts.max_general = cap;
    }
    let stream = enumerate_connected_with(a.n, &opts)?;
    let mut out = open_out(&a.out)?;
    if a.count_only {
        writeln!(out, "{}", stream.len())?;
    } else {
        for g in &stream.graphs {
            writeln!(out, "{}", to_graph6(g))?;
        }
    }
    out.flush()?;
    Ok(harness::EXIT_OK)
}

fn solve(a: SolveArgs) -> Result<i32> {
    let graphs = read_graphs(&a.io.input)?;
    let mut out = open_out(&a.io.out)?;
    let mut code = harness::EXIT_OK;
    for g in &graphs {
        let start = Instant::now();
        let opts = a.limits.solve_options();
        let res = match a.method {
            MethodArg::Bb => gamma_exact_with(g, &opts),
            MethodArg::Brute => gamma_brute_force_with(g, &opts),
        };
        let line = match res {
            Ok(r) => json!({
                "graph6": to_graph6(g),
                "n": g.vertex_count(),
                "gamma": r.gamma,
                "certificate": r.certificate.to_string(),
                "nodes": r.nodes_explored,
                "millis": start.elapsed().as_millis() as u64,
            }),
            Err(e) => {
                code = harness::EXIT_PARTIAL;
                json!({ "graph6": to_graph6(g), "n": g.vertex_count(), "error": e.to_string() })
            }
        };
        writeln!(out, "{line}")?;
    }
    out.flush()?;
    Ok(code)
}

fn analyze(a: AnalyzeArgs) -> Result<i32> {
    let graphs = read_graphs(&a.io.input)?;
    let mut out = open_out(&a.io.out)?;
    for g in &graphs {
        let vertices: Vec<usize> = match a.vertex {
            Some(v) => vec![v],
            None => (0..g.vertex_count()).collect(),
        };
        for v in vertices {
            let analysis = analyze_vertex(g, v)?;
            writeln!(out, "{}", json!({ "graph6": to_graph6(g), "analysis": analysis }))?;
        }
    }
    out.flush()?;
    Ok(harness::EXIT_OK)
}

fn reduce(a: ReduceArgs) -> Result<i32> {
    let graphs = read_graphs(&a.io.input)?;
    let mut out = open_out(&a.io.out)?;
    for g in &graphs {
        let found = find_separated_c4(g);
        match a.apply {
            None => writeln!(out, "{}", json!({ "graph6": to_graph6(g), "separated_c4": found }))?,
            Some(k) => {
                let Some(s) = found.get(k) else {
                    bail!("{} has {} separated 4-cycles; --apply {k} is out of range", to_graph6(g), found.len());
                };
                let cr = contract_c4(g, s)?;
                writeln!(out, "{}", to_graph6(&cr.contracted_graph))?;
            }
        }
    }
    out.flush()?;
    Ok(harness::EXIT_OK)
}

fn verify(a: VerifyArgs) -> Result<i32> {
    let graphs = read_graphs(&a.io.input)?;
    let opts = VerifyOptions {
        solve: SolveOptions { cap: a.limits.cap, ..SolveOptions::default() },
        solver: match a.method {
            MethodArg::Bb => SolverChoice::BranchAndBound,
            MethodArg::Brute => SolverChoice::BruteForce,
        },
        timeout: a.limits.timeout(),
        ..VerifyOptions::default()
    };
    let rep = harness::verify_stream(&graphs, &opts);
    let format = match a.format {
        FormatArg::Jsonl => ReportFormat::Jsonl,
        FormatArg::Csv => ReportFormat::Csv,
        FormatArg::Summary => ReportFormat::Summary,
    };
    harness::report(&rep, format, open_out(&a.io.out)?)?;
    let s = &rep.summary;
    eprintln!(
        "{} graphs, {} verified, {} partial, {} violations, min slack {}",
        s.graphs,
        s.verified,
        s.partial,
        s.violations,
        s.min_slack.map_or("-".to_string(), |m| m.to_string())
    );
    Ok(s.exit_code())
}
