//! `sddlab`: compute indices, build line graphs, verify the bound registry and
//! search small connected graphs by SDD value.
//!
//! Every command except `generate` prints one JSON report on stdout. Failures
//! print a JSON object on stderr and exit with 2 (unparseable input or
//! arguments), 3 (input outside a precondition) or 4 (a bound failed outside
//! the printed-form entries).

mod input;

use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sddlab_core::bounds::{sweep, Theorem};
use sddlab_core::enumerate::{enumerate_connected, enumerate_connected_range, StreamFilter};
use sddlab_core::indices::{self, IndexId};
use sddlab_core::line_graph::line_graph;
use sddlab_core::report::VerificationReport;
use sddlab_core::search::{
    classify_by_sdd, extremal_search, identify, inverse_solve, Extreme, Interval, SddTarget,
};
use sddlab_core::{graph6, Error, ExactRational, Scalar};

use crate::input::{load_file, load_one_source};

#[derive(Parser)]
#[command(name = "sddlab", version, about = "Degree-based indices and SDD bounds on small graphs")]
struct Cli {
    /// Add wall-clock time to the report. Reports are otherwise byte-reproducible.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate indices on one or more graphs.
    Compute(ComputeArgs),
    /// Build the line graph and check its edge count against M1/2 - m.
    Linegraph(LinegraphArgs),
    /// Check registry entries over the built-in enumeration or a graph6 file.
    Verify(VerifyArgs),
    /// Classify, invert or extremize SDD over connected graphs.
    Search(SearchArgs),
    /// Print the built-in enumeration as graph6, one graph per line.
    Generate(GenerateArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["graph", "input"])))]
struct Source {
    /// Named graph: P5, C4, S4, K3, C3_star, P4_star, K2,3, ...
    #[arg(long)]
    graph: Option<String>,
    /// graph6 file (one graph per line) or edge list (`n m` header).
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    source: Source,
    /// Comma-separated: sdd, m1, m2, m1a, m2a, chi, ga, id, f.
    #[arg(long, value_delimiter = ',', default_value = "sdd")]
    indices: Vec<String>,
    /// Exponent for m1a, m2a and chi; accepts decimals or p/q.
    #[arg(long, value_parser = parse_real)]
    alpha: Option<f64>,
}

#[derive(Args)]
struct LinegraphArgs {
    #[command(flatten)]
    source: Source,
    /// Also write the line graphs as graph6 to this file.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct VerifyArgs {
    /// Entry ids, id prefixes (T3_1) or `all`, comma-separated.
    #[arg(long, default_value = "all")]
    theorems: String,
    /// Largest order taken from the built-in enumeration.
    #[arg(long, default_value_t = 7)]
    n_max: usize,
    /// Exponents for entries that take one, comma-separated.
    #[arg(long, value_delimiter = ',', value_parser = parse_real, default_value = "1")]
    alpha: Vec<f64>,
    /// Read graphs from a graph6 file instead of the built-in enumeration.
    #[arg(long)]
    input: Option<PathBuf>,
    /// With --input, drop graphs isomorphic to an earlier one.
    #[arg(long)]
    dedup: bool,
    /// Write the full report, every check included, to this file.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Format of the report file, or of stdout when there is no report file.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Inverse,
    Extremal,
    Classify,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, value_enum)]
    mode: Mode,
    /// G for the graph itself, L for its line graph.
    #[arg(long, default_value = "G")]
    target: String,
    /// Intervals such as "(2,4] (4,6]" (classify).
    #[arg(long)]
    intervals: Vec<String>,
    /// Exact SDD value, e.g. 29/3 (inverse).
    #[arg(long)]
    value: Option<String>,
    /// Order (extremal).
    #[arg(long)]
    n: Option<usize>,
    /// Size (extremal); all sizes when absent.
    #[arg(long)]
    m: Option<usize>,
    /// min or max (extremal).
    #[arg(long, default_value = "min")]
    direction: String,
    /// Largest order searched (classify, inverse).
    #[arg(long, default_value_t = 8)]
    n_max: usize,
}

#[derive(Args)]
struct GenerateArgs {
    /// Largest order; orders 1 through this are printed.
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    /// Print only this order.
    #[arg(long)]
    n: Option<usize>,
    /// Write to a file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn parse_real(s: &str) -> Result<f64, String> {
    s.parse::<ExactRational>()
        .map(|r| r.to_f64())
        .or_else(|_| s.trim().parse::<f64>())
        .map_err(|_| format!("`{s}` is not a number"))
}

/// A failed run: exit code plus the JSON written to stderr.
#[derive(Debug)]
struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn parse(message: impl Display) -> Self {
        Failure {
            code: 2,
            kind: "parse",
            message: message.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::MalformedGraph6(_) => (2, "malformed_graph6"),
            Error::MalformedEdgeList(_) => (2, "malformed_edge_list"),
            Error::BadParameter(_) => (2, "bad_parameter"),
            Error::LoopEdge(_) | Error::DuplicateEdge(..) | Error::VertexOutOfRange { .. } => {
                (2, "invalid_graph")
            }
            Error::NoEdges => (3, "no_edges"),
            Error::EmptyGraph | Error::TooSmall(_) => (3, "too_small"),
            Error::Disconnected => (3, "disconnected"),
            Error::IsolatedVertex(_) | Error::ZeroDegreeNegativeExponent(_) => (3, "domain"),
            Error::HypothesisNotMet(_) => (3, "hypothesis_not_met"),
            Error::NotMinimalEdge(..) => (3, "not_minimal_edge"),
            Error::TooLarge { .. } => (3, "too_large"),
            Error::Infeasible(_) => (3, "infeasible"),
            Error::Io(_) => (3, "io"),
        };
        Failure {
            code,
            kind,
            message: e.to_string(),
        }
    }
}

#[derive(Serialize)]
struct RunReport<R: Serialize, S: Serialize> {
    command: Vec<String>,
    input_digest: String,
    results: R,
    summary: S,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_ms: Option<f64>,
}

struct Run {
    argv: Vec<String>,
    started: Instant,
    timing: bool,
}

impl Run {
    fn emit<R: Serialize, S: Serialize>(&self, digest: String, results: R, summary: S) {
        let report = RunReport {
            command: self.argv.clone(),
            input_digest: digest,
            results,
            summary,
            wall_time_ms: self
                .timing
                .then(|| self.started.elapsed().as_secs_f64() * 1e3),
        };
        stdout(&(to_json(&report) + "\n"));
    }
}

/// Writes to stdout; a closed pipe downstream is not an error.
fn stdout(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes")
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())).into())
}

#[derive(Serialize)]
struct ValueRow {
    index: IndexId,
    alpha: Option<f64>,
    value: Scalar,
    mode: &'static str,
}

#[derive(Serialize)]
struct ComputeRow {
    graph6: String,
    names: Vec<String>,
    n: usize,
    m: usize,
    values: Vec<ValueRow>,
}

#[derive(Serialize)]
struct CountSummary {
    graphs: usize,
}

fn mode_of(value: &Scalar) -> &'static str {
    if value.is_exact() {
        "exact"
    } else {
        "approximate"
    }
}

fn cmd_compute(run: &Run, args: ComputeArgs) -> Result<(), Failure> {
    let ids: Vec<IndexId> = args
        .indices
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    let loaded = load_one_source(args.source.graph.as_deref(), args.source.input.as_deref())?;
    let mut rows = Vec::new();
    for g in &loaded.graphs {
        let mut values = Vec::new();
        for &id in &ids {
            let v = indices::compute(g, id, if id.takes_alpha() { args.alpha } else { None })?;
            values.push(ValueRow {
                index: v.index,
                alpha: v.alpha,
                mode: mode_of(&v.value),
                value: v.value,
            });
        }
        rows.push(ComputeRow {
            graph6: graph6::encode(g)?,
            names: identify(g),
            n: g.n(),
            m: g.m(),
            values,
        });
    }
    let summary = CountSummary { graphs: rows.len() };
    run.emit(loaded.digest, rows, summary);
    Ok(())
}

#[derive(Serialize)]
struct LinegraphRow {
    graph6: String,
    line_graph6: String,
    n_l: usize,
    m_l: usize,
    /// `M1/2 - m`, which should equal `m_l`.
    half_m1_minus_m: ExactRational,
    edge_count_matches: bool,
    /// The edge of `G` behind each line-graph vertex.
    edge_index: Vec<(usize, usize)>,
}

fn cmd_linegraph(run: &Run, args: LinegraphArgs) -> Result<(), Failure> {
    let loaded = load_one_source(args.source.graph.as_deref(), args.source.input.as_deref())?;
    let mut rows = Vec::new();
    for g in &loaded.graphs {
        let res = line_graph(g)?;
        let predicted =
            indices::zagreb_m1(g) / ExactRational::from(2usize) - ExactRational::from(g.m());
        rows.push(LinegraphRow {
            graph6: graph6::encode(g)?,
            line_graph6: graph6::encode(&res.lg)?,
            n_l: res.lg.n(),
            m_l: res.lg.m(),
            edge_count_matches: predicted == ExactRational::from(res.lg.m()),
            half_m1_minus_m: predicted,
            edge_index: res.edge_index,
        });
    }
    if let Some(path) = &args.output {
        let text: String = rows.iter().map(|r| format!("{}\n", r.line_graph6)).collect();
        write_file(path, &text)?;
    }
    let summary = CountSummary { graphs: rows.len() };
    run.emit(loaded.digest, rows, summary);
    Ok(())
}

#[derive(Serialize)]
struct VerifySummary {
    graphs: usize,
    theorems: Vec<&'static str>,
    alphas: Vec<f64>,
    checked: usize,
    discrepancies: usize,
    expected_falsifications: usize,
    unexpected: usize,
}

fn cmd_verify(run: &Run, args: VerifyArgs) -> Result<(), Failure> {
    let theorems = Theorem::select(&args.theorems)?;
    let (graphs, digest) = match &args.input {
        Some(path) => {
            let loaded = load_file(
                path,
                StreamFilter {
                    connected_only: false,
                    dedup: args.dedup,
                    ..StreamFilter::default()
                },
            )?;
            (loaded.graphs, loaded.digest)
        }
        None => {
            if args.n_max < 2 {
                return Err(Failure::parse("--n-max must be at least 2"));
            }
            let graphs = enumerate_connected_range(2..=args.n_max)?;
            let digest = format!("builtin:connected:2..={}", args.n_max);
            (graphs, digest)
        }
    };
    let outcome = sweep(&theorems, &graphs, &args.alpha)?;
    let full = VerificationReport::new(outcome, true);
    if let Some(path) = &args.report {
        let text = match args.format {
            Format::Json => full.to_json() + "\n",
            Format::Csv => full.summary_csv(),
        };
        write_file(path, &text)?;
    }
    let summary = VerifySummary {
        graphs: graphs.len(),
        theorems: theorems.iter().map(|t| t.as_str()).collect(),
        alphas: args.alpha.clone(),
        checked: full.summary.iter().map(|r| r.checked).sum(),
        discrepancies: full.discrepancies.len(),
        expected_falsifications: full.expected_falsifications,
        unexpected: full.unexpected,
    };
    let unexpected = full.unexpected;
    match (args.format, &args.report) {
        (Format::Csv, None) => stdout(&full.summary_csv()),
        _ => {
            let results = VerificationReport {
                checks: None,
                ..full
            };
            run.emit(digest, results, summary);
        }
    }
    gate(unexpected)
}

/// Exit status of a verification run with `unexpected` discrepancies.
fn gate(unexpected: usize) -> Result<(), Failure> {
    if unexpected == 0 {
        return Ok(());
    }
    Err(Failure {
        code: 4,
        kind: "unexpected_violation",
        message: format!("{unexpected} discrepancies outside the printed-form entries"),
    })
}

/// Bracketed intervals found anywhere in the given strings.
fn parse_intervals(raw: &[String]) -> Result<Vec<Interval>, Failure> {
    let mut out = Vec::new();
    for text in raw {
        let mut start = None;
        for (i, c) in text.char_indices() {
            match c {
                '(' | '[' => start = Some(i),
                ')' | ']' => {
                    let s = start
                        .take()
                        .ok_or_else(|| Failure::parse(format!("unbalanced interval in `{text}`")))?;
                    out.push(text[s..=i].parse::<Interval>()?);
                }
                _ => {}
            }
        }
        if start.is_some() {
            return Err(Failure::parse(format!("unbalanced interval in `{text}`")));
        }
    }
    if out.is_empty() {
        return Err(Failure::parse("classify needs --intervals"));
    }
    Ok(out)
}

fn cmd_search(run: &Run, args: SearchArgs) -> Result<(), Failure> {
    let target: SddTarget = args.target.parse()?;
    match args.mode {
        Mode::Classify => {
            let intervals = parse_intervals(&args.intervals)?;
            let results = classify_by_sdd(args.n_max, &intervals, target)?;
            let summary: Vec<usize> = results.iter().map(|r| r.members.len()).collect();
            let digest = format!("builtin:connected:2..={}", args.n_max);
            run.emit(digest, results, serde_json::json!({ "members": summary }));
        }
        Mode::Inverse => {
            let raw = args
                .value
                .as_deref()
                .ok_or_else(|| Failure::parse("inverse needs --value"))?;
            let value: ExactRational = raw.parse()?;
            let members = inverse_solve(&value, args.n_max, target)?;
            let summary = serde_json::json!({ "value": value.to_string(), "members": members.len() });
            run.emit(format!("builtin:connected:2..={}", args.n_max), members, summary);
        }
        Mode::Extremal => {
            let n = args.n.ok_or_else(|| Failure::parse("extremal needs --n"))?;
            let extreme: Extreme = args.direction.parse()?;
            let result = extremal_search(n, args.m, extreme)?;
            let summary = serde_json::json!({
                "value": result.value.to_string(),
                "witnesses": result.witnesses.len(),
            });
            run.emit(format!("builtin:connected:{n}"), result, summary);
        }
    }
    Ok(())
}

fn cmd_generate(args: GenerateArgs) -> Result<(), Failure> {
    let graphs = match args.n {
        Some(n) => enumerate_connected(n)?.to_vec(),
        None => enumerate_connected_range(1..=args.n_max)?,
    };
    let mut text = String::new();
    for g in &graphs {
        text.push_str(&graph6::encode(g)?);
        text.push('\n');
    }
    match &args.output {
        Some(path) => write_file(path, &text)?,
        None => stdout(&text),
    }
    Ok(())
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("SDDLAB_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| Failure::parse(format!("SDDLAB_THREADS must be a positive integer, got `{raw}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::parse(e.to_string()))
}

fn run(cli: Cli, argv: Vec<String>) -> Result<(), Failure> {
    configure_threads()?;
    let run = Run {
        argv,
        started: Instant::now(),
        timing: cli.timing,
    };
    match cli.command {
        Command::Compute(a) => cmd_compute(&run, a),
        Command::Linegraph(a) => cmd_linegraph(&run, a),
        Command::Verify(a) => cmd_verify(&run, a),
        Command::Search(a) => cmd_search(&run, a),
        Command::Generate(a) => cmd_generate(a),
    }
}

fn fail(f: Failure) -> ExitCode {
    let body = serde_json::json!({
        "error": { "code": f.code, "kind": f.kind, "message": f.message }
    });
    eprintln!("{body}");
    ExitCode::from(f.code)
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::iter::once("sddlab".to_string())
        .chain(std::env::args().skip(1))
        .collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(
                e.kind(),
                ErrorKind::DisplayHelp
                    | ErrorKind::DisplayVersion
                    | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
            ) {
                e.exit();
            }
            return fail(Failure::parse(e.to_string().trim_end()));
        }
    };
    match run(cli, argv) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => fail(f),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reals_accept_fractions() {
        assert_eq!(parse_real("1/2").unwrap(), 0.5);
        assert_eq!(parse_real("2").unwrap(), 2.0);
        assert_eq!(parse_real("1e-1").unwrap(), 0.1);
        assert!(parse_real("x").is_err());
    }

    #[test]
    fn unexpected_discrepancies_exit_4() {
        assert!(gate(0).is_ok());
        let f = gate(3).unwrap_err();
        assert_eq!((f.code, f.kind), (4, "unexpected_violation"));
    }

    #[test]
    fn error_codes() {
        let code = |e: Error| Failure::from(e).code;
        assert_eq!(code(Error::MalformedGraph6("x".into())), 2);
        assert_eq!(code(Error::DuplicateEdge(0, 1)), 2);
        assert_eq!(code(Error::NoEdges), 3);
        assert_eq!(code(Error::Infeasible("x".into())), 3);
        assert_eq!(code(Error::TooLarge { n: 9, limit: 8 }), 3);
    }

    #[test]
    fn interval_lists() {
        let v = parse_intervals(&["(2,4] (4,6]".into(), "[1/2, 3)".into()]).unwrap();
        assert_eq!(v.len(), 3);
        assert_eq!(v[2].to_string(), "[1/2,3)");
        assert!(parse_intervals(&["(2,4".into()]).is_err());
        assert!(parse_intervals(&[]).is_err());
    }
}
