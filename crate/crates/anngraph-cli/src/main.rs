use std::fmt::Display;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use anngraph::coloring::{
    color_classes_are_chains, greedy_chain_coloring, symmetric_chain_coloring, verify_coloring,
};
use anngraph::export::{coloring_json, dot, graph_document, parse_coloring, to_json};
use anngraph::iso::{
    extend_isomorphism, find_isomorphism, restrict_isomorphism, CopyPairing, GraphIso, IsoSearch,
};
use anngraph::predict::{compare, predicted_report, ParamReport};
use anngraph::suite::{run_suite, SuiteOptions};
use anngraph::{
    BlowUpGraph, ColoringError, DenseGraph, Graph, GraphKind, ReducedGraph, SpaceModel,
};

/// Exit status 0: everything checked out. 1: a verification failed.
/// 2: bad usage, bad input file, or a size outside the caps.
/// 3: an algorithm gave up (coloring starved, search inconclusive).
const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_ALGORITHM: u8 = 3;

#[derive(Parser)]
#[command(
    name = "anngraph",
    version,
    about = "Zero-divisor, annihilator, and weakly zero-divisor graphs of function rings over finitely many isolated points"
)]
struct Cli {
    /// Optional JSON config: {"default_m": 3, "domination_cap": 4}
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Predicted parameters next to computed values for one size
    Report(ReportArgs),
    /// Chain coloring of the reduced graph, optionally written to a file
    Color(ColorArgs),
    /// Run every closed-form claim against direct computation
    Verify(VerifyArgs),
    /// Write a reduced graph as JSON or GraphViz DOT
    Export(ExportArgs),
    /// Exercise copy shuffles, search, and restriction on a blow-up
    Iso(IsoArgs),
}

#[derive(Args)]
struct ReportArgs {
    /// Number of isolated points
    #[arg(
        long,
        required_unless_present = "infinite",
        conflicts_with = "infinite"
    )]
    n: Option<u32>,
    /// Report the countable model instead (predictions only)
    #[arg(long)]
    infinite: bool,
    /// Copies per class for blow-up checks
    #[arg(long)]
    m: Option<usize>,
    /// Emit the report as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ColorArgs {
    /// Number of isolated points
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value_t = Algorithm::TwoPhase)]
    algorithm: Algorithm,
    /// Write the coloring as JSON to this path
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Check properness, palette size, and the chain property
    #[arg(long)]
    verify: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    /// Two-phase greedy: base level first, then outward passes
    TwoPhase,
    /// Bracket-matching chain decomposition
    Scd,
}

#[derive(Args)]
struct VerifyArgs {
    /// Size or inclusive range of sizes: "4" or "2..8"
    #[arg(long, value_name = "N|A..B")]
    n: String,
    /// Copies per class for blow-up checks
    #[arg(long)]
    m: Option<usize>,
    /// Upper bound for the dominating-set search
    #[arg(long)]
    domination_cap: Option<usize>,
    /// Emit the full check list as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ExportArgs {
    /// Number of isolated points
    #[arg(long)]
    n: u32,
    /// Which adjacency rule: gamma, ag, or wgamma
    #[arg(long, default_value = "ag")]
    kind: GraphKind,
    #[arg(long, value_enum)]
    format: Format,
    /// Coloring JSON used for DOT fill colors
    #[arg(long, value_name = "FILE")]
    coloring: Option<PathBuf>,
    /// Output path; stdout when absent
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Args)]
struct IsoArgs {
    /// Number of isolated points
    #[arg(long)]
    n: u32,
    /// Which adjacency rule: gamma, ag, or wgamma
    #[arg(long, default_value = "ag")]
    kind: GraphKind,
    /// Copies per class
    #[arg(long)]
    m: Option<usize>,
    /// Seed for the copy shuffle
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Node budget for the isomorphism search
    #[arg(long, default_value_t = 1 << 22)]
    budget: u64,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    default_m: Option<usize>,
    domination_cap: Option<usize>,
}

struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn usage(e: impl Display) -> Self {
        CliError {
            message: e.to_string(),
            code: EXIT_USAGE,
        }
    }

    fn algorithm(e: impl Display) -> Self {
        CliError {
            message: e.to_string(),
            code: EXIT_ALGORITHM,
        }
    }
}

impl From<anngraph::ModelError> for CliError {
    fn from(e: anngraph::ModelError) -> Self {
        CliError::usage(e)
    }
}

impl From<anngraph::ExportError> for CliError {
    fn from(e: anngraph::ExportError) -> Self {
        CliError::usage(e)
    }
}

impl From<anngraph::IsoError> for CliError {
    fn from(e: anngraph::IsoError) -> Self {
        CliError::algorithm(e)
    }
}

impl From<ColoringError> for CliError {
    fn from(e: ColoringError) -> Self {
        match e {
            ColoringError::Starved { .. } => CliError::algorithm(e),
            _ => CliError::usage(e),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match load_config(cli.config.as_deref()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {}", e.message);
            return ExitCode::from(e.code);
        }
    };
    let result = match cli.command {
        Command::Report(args) => cmd_report(args, &config),
        Command::Color(args) => cmd_color(args),
        Command::Verify(args) => cmd_verify(args, &config),
        Command::Export(args) => cmd_export(args),
        Command::Iso(args) => cmd_iso(args, &config),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn load_config(path: Option<&std::path::Path>) -> Result<FileConfig, CliError> {
    match path {
        None => Ok(FileConfig::default()),
        Some(p) => {
            let text = fs::read_to_string(p)
                .map_err(|e| CliError::usage(format!("cannot read {}: {e}", p.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| CliError::usage(format!("bad config {}: {e}", p.display())))
        }
    }
}

fn effective_m(flag: Option<usize>, config: &FileConfig) -> usize {
    flag.or(config.default_m).unwrap_or(3)
}

fn cmd_report(args: ReportArgs, config: &FileConfig) -> Result<u8, CliError> {
    let report = if args.infinite {
        predicted_report(SpaceModel::InfiniteIsolated)
    } else {
        let n = args.n.expect("clap enforces --n unless --infinite");
        compare(SpaceModel::finite(n)?, effective_m(args.m, config))?
    };
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serialization cannot fail")
        );
    } else {
        print_report(&report);
    }
    Ok(if report.all_agree() {
        0
    } else {
        EXIT_CHECK_FAILED
    })
}

fn print_report(report: &ParamReport) {
    println!("{}", report.space);
    println!(
        "{:<34} {:>11} {:>11}  {:<8} claim",
        "parameter", "predicted", "computed", "status"
    );
    for e in &report.entries {
        let predicted = e.predicted.map_or("-".to_string(), |v| v.to_string());
        let computed = e.computed.map_or("-".to_string(), |v| v.to_string());
        let status = match e.agrees {
            Some(true) => "ok",
            Some(false) => "MISMATCH",
            None => "-",
        };
        println!(
            "{:<34} {predicted:>11} {computed:>11}  {status:<8} {}",
            e.name, e.claim
        );
        if let Some(w) = &e.witness {
            println!("{:<34} {w}", "");
        }
    }
}

fn cmd_color(args: ColorArgs) -> Result<u8, CliError> {
    let coloring = match args.algorithm {
        Algorithm::TwoPhase => greedy_chain_coloring(args.n)?,
        Algorithm::Scd => symmetric_chain_coloring(args.n)?,
    };
    println!(
        "colored {} vertices with {} colors",
        coloring.assignment().len(),
        coloring.palette_size()
    );
    let mut ok = true;
    if args.verify {
        let g = ReducedGraph::build(args.n, GraphKind::Annihilator)?;
        let report = verify_coloring(&g, &coloring)?;
        let chains = color_classes_are_chains(&coloring);
        println!(
            "proper: {}, palette: {}, chain classes: {}",
            report.proper, report.palette, chains
        );
        if let Some((a, b)) = report.violation {
            println!("violated edge: ({a}, {b})");
        }
        ok = report.proper && chains;
    }
    if let Some(path) = args.out {
        fs::write(&path, coloring_json(&coloring))
            .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?;
        println!("wrote {}", path.display());
    }
    Ok(if ok { 0 } else { EXIT_CHECK_FAILED })
}

/// Parses "4" or an inclusive range "2..8".
fn parse_sizes(spec: &str) -> Result<Vec<u32>, CliError> {
    let parse_one = |s: &str| {
        s.trim()
            .parse::<u32>()
            .map_err(|_| CliError::usage(format!("bad size {s:?}, expected an integer")))
    };
    match spec.split_once("..") {
        None => Ok(vec![parse_one(spec)?]),
        Some((a, b)) => {
            let (lo, hi) = (parse_one(a)?, parse_one(b)?);
            if lo > hi {
                return Err(CliError::usage(format!("empty range {spec:?}")));
            }
            Ok((lo..=hi).collect())
        }
    }
}

fn cmd_verify(args: VerifyArgs, config: &FileConfig) -> Result<u8, CliError> {
    let ns = parse_sizes(&args.n)?;
    let opts = SuiteOptions {
        m: effective_m(args.m, config),
        domination_cap: args
            .domination_cap
            .or(config.domination_cap)
            .unwrap_or_else(|| SuiteOptions::default().domination_cap),
    };
    let result = run_suite(&ns, opts)?;
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&result).expect("suite serialization cannot fail")
        );
    } else {
        for c in &result.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            let kind = c.kind.map_or(String::new(), |k| format!(" kind={k}"));
            let m = c.m.map_or(String::new(), |m| format!(" m={m}"));
            let witness = c
                .witness
                .as_deref()
                .map_or(String::new(), |w| format!(" — {w}"));
            println!(
                "{status} {} n={}{kind}{m} ({} ms){witness}",
                c.name, c.n, c.millis
            );
        }
        let passed = result.checks.iter().filter(|c| c.pass).count();
        println!("{passed}/{} checks passed", result.checks.len());
    }
    Ok(if result.all_pass() {
        0
    } else {
        EXIT_CHECK_FAILED
    })
}

fn cmd_export(args: ExportArgs) -> Result<u8, CliError> {
    let g = ReducedGraph::build(args.n, args.kind)?;
    let output = match args.format {
        Format::Json => {
            if args.coloring.is_some() {
                return Err(CliError::usage("--coloring only applies to the dot format"));
            }
            to_json(&graph_document(&g)?)
        }
        Format::Dot => {
            let coloring = match &args.coloring {
                None => None,
                Some(path) => {
                    let text = fs::read_to_string(path).map_err(|e| {
                        CliError::usage(format!("cannot read {}: {e}", path.display()))
                    })?;
                    Some(parse_coloring(&text)?)
                }
            };
            dot(&g, coloring.as_ref())?
        }
    };
    match args.out {
        None => print!("{output}"),
        Some(path) => {
            fs::write(&path, output)
                .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?;
            println!("wrote {}", path.display());
        }
    }
    Ok(0)
}

fn cmd_iso(args: IsoArgs, config: &FileConfig) -> Result<u8, CliError> {
    let m = effective_m(args.m, config);
    let reduced = ReducedGraph::build(args.n, args.kind)?;
    let blowup = BlowUpGraph::build(args.n, args.kind, m)?;
    println!(
        "blow-up {} with n = {}, m = {m}: {} vertices",
        args.kind,
        args.n,
        blowup.vertex_count()
    );

    let identity = GraphIso::new(&reduced, &reduced, (0..reduced.vertex_count()).collect())?;
    let shuffled = extend_isomorphism(&identity, &blowup, &blowup, CopyPairing::Seeded(args.seed))?;
    println!(
        "seeded copy shuffle (seed {}): valid automorphism",
        args.seed
    );

    let restricted = restrict_isomorphism(&shuffled, &blowup, &blowup)?;
    let roundtrip = restricted.forward() == identity.forward();
    println!(
        "restriction recovers the class map: {}",
        if roundtrip { "yes" } else { "NO" }
    );

    let relabeled = DenseGraph::permuted(&blowup, shuffled.forward());
    match find_isomorphism(&blowup, &relabeled, args.budget) {
        IsoSearch::Found(_) => println!("search on the relabeled graph: isomorphism found"),
        IsoSearch::NotIsomorphic => {
            println!("search on the relabeled graph: NOT isomorphic");
            return Ok(EXIT_CHECK_FAILED);
        }
        IsoSearch::Inconclusive => {
            return Err(CliError::algorithm(format!(
                "isomorphism search exhausted its budget of {} nodes",
                args.budget
            )));
        }
    }
    Ok(if roundtrip { 0 } else { EXIT_CHECK_FAILED })
}
