//! Command-line front end for the split-graph spectral toolkit.
//!
//! Subcommands construct the named extremal families, compute adjacency
//! spectral radii, print quotient characteristic polynomials, stream the
//! labeled split-graph enumeration as graph6 lines, and run the
//! verification drivers. Verification verdicts map onto the exit status:
//! 0 for pass, 1 for fail or indistinguishable, 2 for usage errors.
//!
//! Output is deterministic: the same arguments and configuration produce
//! byte-identical bytes on stdout. Wall-clock timing is only ever printed
//! to stderr, behind `--timings`.

use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use splitspectra::equitable::{char_poly, quotient};
use splitspectra::families::{build_family, family_partition, FamilySpec};
use splitspectra::graph::{decode_graph6, encode_graph6, Graph};
use splitspectra::spectral::spectral_radius;
use splitspectra::verify::{
    enumerate_split_graphs, property_suite, verify_lemma, verify_theorem_threaded, EnumFilter,
    LemmaId, TheoremId, Verdict, VerificationReport,
};
use splitspectra::{format_sig12, Error as CoreError, Sig12, Tolerance};

#[derive(Parser)]
#[command(
    name = "splitspectra",
    version,
    about = "Spectral extremality toolkit for split graphs"
)]
struct Cli {
    /// Configuration file with `key = value` lines; flags override it.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Power-iteration residual tolerance.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Decision margin for radius comparisons (at least 10 * tol).
    #[arg(long, global = true)]
    margin: Option<f64>,
    /// Power-iteration step budget.
    #[arg(long, global = true)]
    max_iter: Option<u64>,
    /// Output format for results and reports.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads for the enumeration-backed theorem checks.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Print elapsed wall-clock time to stderr.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Construct a named family instance and print it.
    Family(FamilyArgs),
    /// Compute the adjacency spectral radius of a graph.
    ///
    /// Reads graph6 lines from stdin when neither a graph6 argument nor
    /// `--family` is given.
    Rho(RhoArgs),
    /// Print the characteristic polynomial of a family's equitable
    /// quotient, as integer coefficients in falling degree order.
    Charpoly(CharpolyArgs),
    /// Run a verification driver; the verdict decides the exit status.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Stream labeled split graphs as graph6 lines.
    Enumerate(EnumerateArgs),
}

#[derive(Args)]
struct FamilyArgs {
    /// Family name: G, Gamma, GammaP, GammaPP, GammaStar, GammaStarStar,
    /// S, or CompleteSplit.
    name: String,
    /// Family parameters, e.g. `8 4` for Gamma(8,4).
    #[arg(required = true, num_args = 1..=4)]
    params: Vec<usize>,
    /// Print one graph6 line (the default).
    #[arg(long)]
    graph6: bool,
    /// Print a JSON object with order, edges, and graph6 form.
    #[arg(long, conflicts_with = "graph6")]
    json: bool,
}

#[derive(Args)]
struct RhoArgs {
    /// graph6 string of the input graph.
    graph6: Option<String>,
    /// Family name and parameters, e.g. `--family Gamma 8 4`.
    #[arg(long, num_args = 2..=5, value_name = "NAME PARAM", conflicts_with = "graph6")]
    family: Option<Vec<String>>,
}

#[derive(Args)]
struct CharpolyArgs {
    /// Family name and parameters, e.g. `--family Gamma 8 3`.
    #[arg(long, required = true, num_args = 2..=5, value_name = "NAME PARAM")]
    family: Vec<String>,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Sweep one radius-ordering claim over a range of orders.
    Lemma {
        /// Claim id: bbb, I3, I44, I5, or I4.
        id: String,
        /// Inclusive order range `a..b`; defaults to the configured sweep.
        #[arg(long, value_name = "A..B")]
        n_range: Option<String>,
        /// Independent-set size for the I4 claim (default 6).
        #[arg(long)]
        i: Option<usize>,
    },
    /// Check one enumeration claim at a single order.
    Theorem {
        /// Claim id: Th1, Th2, N1, or N2.
        id: String,
        /// Graph order.
        #[arg(long)]
        n: usize,
        /// Independent-set size.
        #[arg(long)]
        i: usize,
    },
    /// Replay the seeded randomized radius properties.
    Properties {
        /// Seed for the trial generator.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Trials per property.
        #[arg(long, default_value_t = 1000)]
        trials: u64,
    },
}

#[derive(Args)]
struct EnumerateArgs {
    /// Clique size of the labeled split form.
    #[arg(long)]
    k: usize,
    /// Number of independent vertices.
    #[arg(long)]
    i: usize,
    /// Keep only connected graphs.
    #[arg(long)]
    connected: bool,
    /// Keep only graphs with no induced star K_{1,r}.
    #[arg(long, value_name = "R")]
    k1r_free: Option<usize>,
    /// Keep only graphs without a spanning cycle.
    #[arg(long)]
    non_hamiltonian: bool,
    /// Keep only graphs whose labeled clique is a maximum clique.
    #[arg(long)]
    typed: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

/// Failures outside clap's own parsing: usage-class errors exit with 2,
/// runtime failures with 1.
enum Failure {
    Usage(String),
    Runtime(String),
}

fn lift(e: CoreError) -> Failure {
    let usage = matches!(
        &e,
        CoreError::UnknownId(_)
            | CoreError::FamilyParameter { .. }
            | CoreError::RangeOutsideHypothesis { .. }
            | CoreError::TooLarge { .. }
            | CoreError::TooSmall { .. }
            | CoreError::MaskBudget(_)
            | CoreError::SmallR(_)
            | CoreError::Graph6(_)
            | CoreError::MarginTooSmall { .. }
    );
    if usage {
        Failure::Usage(e.to_string())
    } else {
        Failure::Runtime(e.to_string())
    }
}

/// Per-claim sweep ranges used when `--n-range` is absent.
struct Sweeps {
    bbb: (usize, usize),
    i3: (usize, usize),
    i44: (usize, usize),
    i5: (usize, usize),
    i4: (usize, usize),
}

struct Settings {
    tolerance: Tolerance,
    format: Format,
    threads: usize,
    sweeps: Sweeps,
}

impl Default for Settings {
    fn default() -> Settings {
        Settings {
            tolerance: Tolerance::default(),
            format: Format::Json,
            threads: 1,
            sweeps: Sweeps {
                bbb: (6, 40),
                i3: (6, 40),
                i44: (8, 40),
                i5: (10, 40),
                i4: (12, 30),
            },
        }
    }
}

impl Settings {
    fn sweep_for(&self, id: LemmaId) -> (usize, usize) {
        match id {
            LemmaId::Bbb => self.sweeps.bbb,
            LemmaId::I3 => self.sweeps.i3,
            LemmaId::I44 => self.sweeps.i44,
            LemmaId::I5 => self.sweeps.i5,
            LemmaId::I4 => self.sweeps.i4,
        }
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), Failure> {
    let err = || Failure::Usage(format!("expected an inclusive range `a..b`, got `{s}`"));
    let (a, b) = s.split_once("..").ok_or_else(err)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let lo = a.trim().parse().map_err(|_| err())?;
    let hi = b.trim().parse().map_err(|_| err())?;
    Ok((lo, hi))
}

fn parse_config_value<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, Failure> {
    value
        .trim()
        .parse()
        .map_err(|_| Failure::Usage(format!("config key `{key}` has invalid value `{value}`")))
}

fn apply_config(settings: &mut Settings, path: &Path) -> Result<(), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("config {}: {e}", path.display())))?;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            Failure::Usage(format!("config line {}: expected `key = value`", idx + 1))
        })?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "tol" => settings.tolerance.tol = parse_config_value(key, value)?,
            "margin" => settings.tolerance.margin = parse_config_value(key, value)?,
            "max_iter" => settings.tolerance.max_iter = parse_config_value(key, value)?,
            "threads" => settings.threads = parse_config_value(key, value)?,
            "format" => {
                settings.format = match value {
                    "json" => Format::Json,
                    "csv" => Format::Csv,
                    "table" => Format::Table,
                    _ => {
                        return Err(Failure::Usage(format!(
                            "config key `format` must be json, csv, or table, got `{value}`"
                        )))
                    }
                }
            }
            "bbb" => settings.sweeps.bbb = parse_range(value)?,
            "I3" => settings.sweeps.i3 = parse_range(value)?,
            "I44" => settings.sweeps.i44 = parse_range(value)?,
            "I5" => settings.sweeps.i5 = parse_range(value)?,
            "I4" => settings.sweeps.i4 = parse_range(value)?,
            _ => {
                return Err(Failure::Usage(format!(
                    "config line {}: unknown key `{key}`",
                    idx + 1
                )))
            }
        }
    }
    Ok(())
}

fn resolve_settings(cli: &Cli) -> Result<Settings, Failure> {
    let mut settings = Settings::default();
    if let Some(path) = &cli.config {
        apply_config(&mut settings, path)?;
    }
    if let Some(tol) = cli.tol {
        settings.tolerance.tol = tol;
    }
    if let Some(margin) = cli.margin {
        settings.tolerance.margin = margin;
    }
    if let Some(max_iter) = cli.max_iter {
        settings.tolerance.max_iter = max_iter;
    }
    if let Some(format) = cli.format {
        settings.format = format;
    }
    if let Some(threads) = cli.threads {
        settings.threads = threads;
    }
    settings.tolerance.validate().map_err(lift)?;
    Ok(settings)
}

fn parse_family_tokens(tokens: &[String]) -> Result<FamilySpec, Failure> {
    let (name, rest) = tokens
        .split_first()
        .ok_or_else(|| Failure::Usage("missing family name".into()))?;
    let params = rest
        .iter()
        .map(|t| {
            t.parse::<usize>().map_err(|_| {
                Failure::Usage(format!(
                    "family parameter `{t}` is not a non-negative integer"
                ))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    FamilySpec::from_name(name, &params).map_err(lift)
}

fn csv_quote(field: &str) -> String {
    format!("\"{}\"", field.replace('"', "\"\""))
}

#[derive(Serialize)]
struct FamilyOut {
    family: String,
    n: usize,
    edge_count: usize,
    graph6: String,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct RhoOut {
    n: usize,
    family: String,
    rho: Sig12,
    residual: Sig12,
    iterations: u64,
    vector: Vec<Sig12>,
}

#[derive(Serialize)]
struct CharpolyOut {
    family: String,
    n: usize,
    cells: usize,
    coefficients: Vec<serde_json::Number>,
}

fn rho_row(label: String, g: &Graph, cfg: &Tolerance) -> Result<RhoOut, Failure> {
    let r = spectral_radius::<f64>(g, cfg.tol, cfg.max_iter).map_err(lift)?;
    Ok(RhoOut {
        n: g.n(),
        family: label,
        rho: Sig12(r.rho),
        residual: Sig12(r.residual),
        iterations: r.iterations,
        vector: r.vector.into_iter().map(Sig12).collect(),
    })
}

fn print_rho_rows(rows: &[RhoOut], format: Format) {
    match format {
        Format::Json => {
            for row in rows {
                println!("{}", serde_json::to_string(row).expect("serializable row"));
            }
        }
        Format::Csv => {
            println!("n,family,rho");
            for row in rows {
                println!(
                    "{},{},{}",
                    row.n,
                    csv_quote(&row.family),
                    format_sig12(row.rho.0)
                );
            }
        }
        Format::Table => {
            let header = ["n", "family", "rho", "residual", "iterations"];
            let body: Vec<[String; 5]> = rows
                .iter()
                .map(|row| {
                    [
                        row.n.to_string(),
                        row.family.clone(),
                        format_sig12(row.rho.0),
                        format_sig12(row.residual.0),
                        row.iterations.to_string(),
                    ]
                })
                .collect();
            let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
            for row in &body {
                for (w, cell) in widths.iter_mut().zip(row.iter()) {
                    *w = (*w).max(cell.len());
                }
            }
            let line = |cells: &[&str]| {
                let mut out = String::new();
                for (idx, cell) in cells.iter().enumerate() {
                    if idx > 0 {
                        out.push_str("  ");
                    }
                    out.push_str(&format!("{:<width$}", cell, width = widths[idx]));
                }
                out.trim_end().to_string()
            };
            println!("{}", line(&header));
            for row in &body {
                let cells: Vec<&str> = row.iter().map(String::as_str).collect();
                println!("{}", line(&cells));
            }
        }
    }
}

fn print_report(report: &VerificationReport, format: Format) {
    match format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string(report).expect("serializable report")
            );
        }
        Format::Csv => {
            println!("target,range,verdict");
            println!(
                "{},{},{}",
                report.target,
                csv_quote(&report.range),
                report.verdict
            );
        }
        Format::Table => {
            println!("target   {}", report.target);
            println!("range    {}", report.range);
            println!("verdict  {}", report.verdict);
            for w in &report.witnesses {
                let values: Vec<String> = w.values.iter().map(|v| format_sig12(v.0)).collect();
                if values.is_empty() {
                    println!("witness  {}  {}", w.graph6, w.note);
                } else {
                    println!("witness  {}  {}  [{}]", w.graph6, w.note, values.join(", "));
                }
            }
        }
    }
}

fn report_code(report: &VerificationReport) -> ExitCode {
    if report.verdict == Verdict::Pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_family(args: &FamilyArgs) -> Result<ExitCode, Failure> {
    let spec = FamilySpec::from_name(&args.name, &args.params).map_err(lift)?;
    let g = build_family(&spec).map_err(lift)?;
    let graph6 = encode_graph6(&g).map_err(lift)?;
    if args.json {
        let out = FamilyOut {
            family: spec.to_string(),
            n: g.n(),
            edge_count: g.edge_count(),
            graph6,
            edges: g.edges(),
        };
        println!(
            "{}",
            serde_json::to_string(&out).expect("serializable graph")
        );
    } else {
        println!("{graph6}");
    }
    Ok(ExitCode::SUCCESS)
}

fn run_rho(args: &RhoArgs, settings: &Settings) -> Result<ExitCode, Failure> {
    let cfg = &settings.tolerance;
    let mut rows = Vec::new();
    if let Some(tokens) = &args.family {
        let spec = parse_family_tokens(tokens)?;
        let g = build_family(&spec).map_err(lift)?;
        rows.push(rho_row(spec.to_string(), &g, cfg)?);
    } else if let Some(code) = &args.graph6 {
        let g = decode_graph6(code).map_err(lift)?;
        rows.push(rho_row(code.clone(), &g, cfg)?);
    } else {
        for line in io::stdin().lock().lines() {
            let line = line.map_err(|e| Failure::Runtime(format!("stdin: {e}")))?;
            let code = line.trim();
            if code.is_empty() {
                continue;
            }
            let g = decode_graph6(code).map_err(lift)?;
            rows.push(rho_row(code.to_string(), &g, cfg)?);
        }
    }
    print_rho_rows(&rows, settings.format);
    Ok(ExitCode::SUCCESS)
}

fn run_charpoly(args: &CharpolyArgs, settings: &Settings) -> Result<ExitCode, Failure> {
    let spec = parse_family_tokens(&args.family)?;
    let g = build_family(&spec).map_err(lift)?;
    let p = family_partition(&spec).map_err(lift)?;
    let q = quotient(&g, &p).map_err(lift)?;
    let coeffs = char_poly(&q).map_err(lift)?;
    let rendered: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    match settings.format {
        Format::Json => {
            let coefficients = rendered
                .iter()
                .map(|s| s.parse().expect("integer literal"))
                .collect();
            let out = CharpolyOut {
                family: spec.to_string(),
                n: g.n(),
                cells: q.s(),
                coefficients,
            };
            println!(
                "{}",
                serde_json::to_string(&out).expect("serializable polynomial")
            );
        }
        Format::Csv => {
            println!("family,coefficients");
            println!(
                "{},{}",
                csv_quote(&spec.to_string()),
                csv_quote(&format!("[{}]", rendered.join(",")))
            );
        }
        Format::Table => {
            println!("family        {spec}");
            println!("cells         {}", q.s());
            println!("coefficients  [{}]", rendered.join(", "));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(what: &VerifyCmd, settings: &Settings) -> Result<ExitCode, Failure> {
    let cfg = &settings.tolerance;
    let report = match what {
        VerifyCmd::Lemma { id, n_range, i } => {
            let id: LemmaId = id.parse().map_err(lift)?;
            let (lo, hi) = match n_range {
                Some(s) => parse_range(s)?,
                None => settings.sweep_for(id),
            };
            verify_lemma(id, lo..=hi, *i, cfg).map_err(lift)?
        }
        VerifyCmd::Theorem { id, n, i } => {
            let id: TheoremId = id.parse().map_err(lift)?;
            verify_theorem_threaded(id, *n, *i, cfg, settings.threads).map_err(lift)?
        }
        VerifyCmd::Properties { seed, trials } => {
            property_suite(*seed, *trials, cfg).map_err(lift)?
        }
    };
    print_report(&report, settings.format);
    Ok(report_code(&report))
}

fn run_enumerate(args: &EnumerateArgs) -> Result<ExitCode, Failure> {
    let filter = EnumFilter {
        connected: args.connected,
        k1r_free: args.k1r_free,
        non_hamiltonian: args.non_hamiltonian,
        max_clique_typed: args.typed,
    };
    let stdout = io::stdout().lock();
    let mut out = io::BufWriter::new(stdout);
    for g in enumerate_split_graphs(args.k, args.i, filter).map_err(lift)? {
        let code = encode_graph6(&g).map_err(lift)?;
        if let Err(e) = writeln!(out, "{code}") {
            if e.kind() == io::ErrorKind::BrokenPipe {
                return Ok(ExitCode::SUCCESS);
            }
            return Err(Failure::Runtime(format!("stdout: {e}")));
        }
    }
    out.flush()
        .map_err(|e| Failure::Runtime(format!("stdout: {e}")))?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: &Cli) -> Result<ExitCode, Failure> {
    let settings = resolve_settings(cli)?;
    match &cli.cmd {
        Cmd::Family(args) => run_family(args),
        Cmd::Rho(args) => run_rho(args, &settings),
        Cmd::Charpoly(args) => run_charpoly(args, &settings),
        Cmd::Verify { what } => run_verify(what, &settings),
        Cmd::Enumerate(args) => run_enumerate(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let outcome = run(&cli);
    if cli.timings {
        eprintln!("elapsed: {:?}", started.elapsed());
    }
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
