//! Thin command-line front door over the library.
//!
//! Subcommands: verify | scan-spectral | scan-turan | family.
//! Exit codes: 0 success, 2 parameter error, 3 capacity, 4 numeric failure,
//! 5 validated-formula mismatch in `verify`.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use alpha_index::error::{Error, Result};
use alpha_index::families::Family;
use alpha_index::forest::LinearForestSpec;
use alpha_index::graph::Graph;
use alpha_index::harness::report::{write_rows, OutputFormat};
use alpha_index::harness::scan::{scan_spectral, scan_turan, ScanOutcome};
use alpha_index::harness::verify::{run_verify, VerifyOptions};
use alpha_index::harness::family_summary;
use alpha_index::enumerate::read_graph6_stream;

#[derive(Parser)]
#[command(
    name = "alpha-index",
    version,
    about = "Spectral extremal bounds for graphs without linear forests: \
             verification grids, exhaustive scans, family inspection"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every closed form over a grid and report verdicts.
    Verify {
        /// Largest order in the grid (max 200; numeric column stops at 64).
        #[arg(long, default_value_t = 40)]
        n_max: usize,
        /// Largest clique parameter in the grid (max 6).
        #[arg(long, default_value_t = 4)]
        p_max: usize,
        /// Comma-separated alphas in [0, 1); default 0.1..0.9.
        #[arg(long)]
        alpha: Option<String>,
        /// csv | json
        #[arg(long, default_value = "csv")]
        format: String,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Maximize the alpha-index over forest-free graphs of each order.
    ScanSpectral {
        /// Comma-separated path orders, e.g. "5,3".
        #[arg(long)]
        forest: String,
        #[arg(long)]
        alpha: f64,
        /// Inclusive order range "a..b".
        #[arg(long)]
        n: String,
        /// graph6 file to scan instead of native enumeration; `-` is stdin.
        #[arg(long)]
        input: Option<String>,
        #[arg(long, default_value = "csv")]
        format: String,
        #[arg(long)]
        jobs: Option<usize>,
        /// Abort on the first malformed stream line.
        #[arg(long)]
        strict: bool,
        /// Also write extremal witnesses to this file, one graph6 per line.
        #[arg(long)]
        witnesses: Option<String>,
    },
    /// Compare exact ex(n, F) against the printed bounds.
    ScanTuran {
        #[arg(long)]
        forest: String,
        #[arg(long)]
        n: String,
        #[arg(long)]
        input: Option<String>,
        #[arg(long, default_value = "csv")]
        format: String,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        strict: bool,
        /// Also write extremal witnesses to this file, one graph6 per line.
        #[arg(long)]
        witnesses: Option<String>,
    },
    /// Inspect one family member: S | S+ | F.
    Family {
        /// Family token: S | S+ | F.
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
    },
}

fn parse_range(text: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = text.split("..").collect();
    let bad = || Error::parameter(format!("range '{text}' should look like 5..9"));
    match parts.as_slice() {
        [single] => {
            let v = single.trim().parse::<usize>().map_err(|_| bad())?;
            Ok((v, v))
        }
        [a, b] => {
            let lo = a.trim().parse::<usize>().map_err(|_| bad())?;
            let hi = b.trim().parse::<usize>().map_err(|_| bad())?;
            if lo > hi {
                return Err(bad());
            }
            Ok((lo, hi))
        }
        _ => Err(bad()),
    }
}

fn parse_alpha_list(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<f64>()
                .map_err(|_| Error::parameter(format!("bad alpha '{tok}'")))
        })
        .collect()
}

/// Loads a graph6 stream fully; lenient mode reports bad lines on stderr.
fn load_input(path: &str, strict: bool) -> Result<Vec<Graph>> {
    let stream = read_graph6_stream(path)?;
    if strict {
        stream.collect_strict()
    } else {
        let (graphs, issues) = stream.collect_lenient();
        for issue in &issues {
            eprintln!("warning: line {}: {}", issue.line, issue.error);
        }
        Ok(graphs)
    }
}

fn write_witnesses(outcome: &ScanOutcome, path: Option<&str>) -> Result<()> {
    if let Some(path) = path {
        std::fs::write(path, outcome.witness_lines())?;
    }
    Ok(())
}

fn emit_scan(outcome: &ScanOutcome, format: OutputFormat) -> Result<()> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    write_rows(&mut out, &outcome.rows, format)?;
    match format {
        OutputFormat::Csv => {
            let cell = outcome
                .empirical_threshold
                .map(|n| n.to_string())
                .unwrap_or_else(|| "none".to_string());
            writeln!(out, "# empirical_threshold,{cell}")?;
        }
        OutputFormat::Json => {
            writeln!(
                out,
                "{}",
                serde_json::json!({ "empirical_threshold": outcome.empirical_threshold })
            )?;
        }
    }
    for row in &outcome.rows {
        eprintln!("n={}: {} ms", row.n, row.runtime_ms);
    }
    Ok(())
}

fn run() -> Result<i32> {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { n_max, p_max, alpha, format, jobs } => {
            let format: OutputFormat = format.parse()?;
            let mut opts = VerifyOptions { n_max, p_max, jobs, ..VerifyOptions::default() };
            if let Some(list) = alpha {
                opts.alphas = parse_alpha_list(&list)?;
            }
            let report = run_verify(&opts)?;
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            write_rows(&mut out, &report.rows, format)?;
            match format {
                OutputFormat::Csv => {
                    for note in &report.notes {
                        writeln!(out, "# note: {note}")?;
                    }
                    writeln!(out, "# discrepancies,{}", report.discrepancies().count())?;
                    for row in report.discrepancies() {
                        writeln!(
                            out,
                            "# discrepancy,{},{},{},{},{}",
                            row.formula.name(),
                            row.n,
                            row.p,
                            row.alpha,
                            row.delta
                        )?;
                    }
                }
                OutputFormat::Json => {
                    writeln!(
                        out,
                        "{}",
                        serde_json::json!({
                            "all_validated_match": report.all_validated_match,
                            "discrepancy_count": report.discrepancies().count(),
                            "notes": report.notes,
                        })
                    )?;
                }
            }
            Ok(report.exit_code())
        }
        Command::ScanSpectral { forest, alpha, n, input, format, jobs, strict, witnesses } => {
            let format: OutputFormat = format.parse()?;
            let spec = LinearForestSpec::parse(&forest)?;
            let (lo, hi) = parse_range(&n)?;
            let graphs = input.map(|p| load_input(&p, strict)).transpose()?;
            let outcome = scan_spectral(&spec, alpha, lo, hi, graphs.as_deref(), jobs)?;
            emit_scan(&outcome, format)?;
            write_witnesses(&outcome, witnesses.as_deref())?;
            Ok(0)
        }
        Command::ScanTuran { forest, n, input, format, jobs, strict, witnesses } => {
            let format: OutputFormat = format.parse()?;
            let spec = LinearForestSpec::parse(&forest)?;
            let (lo, hi) = parse_range(&n)?;
            let graphs = input.map(|p| load_input(&p, strict)).transpose()?;
            let outcome = scan_turan(&spec, lo, hi, graphs.as_deref(), jobs)?;
            emit_scan(&outcome, format)?;
            write_witnesses(&outcome, witnesses.as_deref())?;
            Ok(0)
        }
        Command::Family { family, n, p, alpha } => {
            let family = Family::parse_token(&family)?;
            let summary = family_summary(family, n, p, alpha)?;
            println!("{summary}");
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
