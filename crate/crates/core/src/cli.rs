//! Command-line interface.
//!
//! Exit codes: `0` success, `1` verification failure, `2` usage error.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::closed_form::{table_csv, table_rows, IndexReport, DEFAULT_TABLE_NS};
use crate::error::Error;
use crate::graphs::{build_chain, export_graph, ChainFamily, ExportFormat};
use crate::spectral::{decomposed_spectra, DecomposedSpectra};
use crate::verify::{self, VerifyOptions};

/// Largest vertex count accepted by `spectrum`.
pub const SPECTRUM_BUDGET: usize = 1000;

#[derive(Debug, Parser)]
#[command(
    name = "pentachain",
    version,
    about = "Exact invariants of pentagonal cylinder and Möbius chains"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a chain and print it as an edge-list JSON or DOT document.
    Generate(GenerateArgs),
    /// Closed-form indices of one chain, optionally with oracle values.
    Indices(IndicesArgs),
    /// Check every closed form against its oracle up to --n-max.
    Verify(VerifyArgs),
    /// Gutman index, degree-Kirchhoff index and their ratio for both families.
    Table(TableArgs),
    /// Spectra of the two reflection blocks of the normalized Laplacian.
    Spectrum(SpectrumArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Cylinder,
    Mobius,
}

impl From<FamilyArg> for ChainFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Cylinder => ChainFamily::Cylinder,
            FamilyArg::Mobius => ChainFamily::Mobius,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

fn parse_n(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|_| format!("invalid chain length {s:?}"))?;
    if n < 2 {
        return Err("n must be >= 2".to_string());
    }
    Ok(n)
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let t: f64 = s.parse().map_err(|_| format!("invalid tolerance {s:?}"))?;
    if !(t > 0.0 && t.is_finite()) {
        return Err("tol must be > 0".to_string());
    }
    Ok(t)
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum, default_value = "cylinder")]
    pub family: FamilyArg,
    #[arg(long, value_parser = parse_n)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub format: GraphFormat,
    /// Write to this file instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct IndicesArgs {
    #[arg(long, value_enum, default_value = "cylinder")]
    pub family: FamilyArg,
    #[arg(long, value_parser = parse_n)]
    pub n: usize,
    /// Also compute every index from the graph and compare.
    #[arg(long)]
    pub verify_inline: bool,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_n, default_value = "8")]
    pub n_max: usize,
    /// Restrict to one family (default: both).
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    /// Write the JSON-lines log here instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long, hide = true)]
    pub inject_gutman_fault: bool,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Comma-separated chain lengths.
    #[arg(long, value_delimiter = ',', value_parser = parse_n)]
    pub n_list: Vec<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: TableFormat,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long, value_enum, default_value = "cylinder")]
    pub family: FamilyArg,
    #[arg(long, value_parser = parse_n)]
    pub n: usize,
    /// Jacobi convergence tolerance.
    #[arg(long, value_parser = parse_tol, default_value = "1e-14")]
    pub tol: f64,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

/// Result of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    VerificationFailed,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("cannot write output: {0}")]
    Io(#[from] io::Error),
}

fn emit(output: Option<&PathBuf>, text: &str) -> io::Result<()> {
    match output {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn pretty<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types serialize");
    s.push('\n');
    s
}

pub fn execute(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Generate(args) => {
            let g = build_chain(args.n, args.family.into())?;
            let format = match args.format {
                GraphFormat::Json => ExportFormat::EdgeListJson,
                GraphFormat::Dot => ExportFormat::Dot,
            };
            emit(args.output.as_ref(), &export_graph(&g, format))?;
            Ok(Outcome::Success)
        }
        Command::Indices(args) => {
            let family = args.family.into();
            let report = if args.verify_inline {
                IndexReport::with_oracles(args.n, family)?
            } else {
                IndexReport::closed_form(args.n, family)?
            };
            emit(args.output.as_ref(), &pretty(&report.to_json()))?;
            let mismatch = report.oracle.as_ref().is_some_and(|o| !o.matches);
            Ok(if mismatch {
                Outcome::VerificationFailed
            } else {
                Outcome::Success
            })
        }
        Command::Verify(args) => {
            let mut opts = VerifyOptions::new(args.n_max);
            if let Some(f) = args.family {
                opts.families = vec![f.into()];
            }
            opts.inject_gutman_fault = args.inject_gutman_fault;
            let records = verify::run(&opts);
            emit(args.output.as_ref(), &verify::to_json_lines(&records))?;
            let failed: Vec<_> = records.iter().filter(|r| !r.pass).collect();
            for r in &failed {
                eprintln!(
                    "FAIL {} n={} family={}: closed form {} vs oracle {}",
                    r.check, r.n, r.family, r.closed_form, r.oracle
                );
            }
            eprintln!("{} checks, {} failed", records.len(), failed.len());
            Ok(if failed.is_empty() {
                Outcome::Success
            } else {
                Outcome::VerificationFailed
            })
        }
        Command::Table(args) => {
            let ns = if args.n_list.is_empty() {
                DEFAULT_TABLE_NS.to_vec()
            } else {
                args.n_list
            };
            let rows = table_rows(&ns)?;
            let text = match args.format {
                TableFormat::Csv => table_csv(&rows),
                TableFormat::Json => pretty(&rows),
            };
            emit(args.output.as_ref(), &text)?;
            Ok(Outcome::Success)
        }
        Command::Spectrum(args) => {
            let order = 5 * args.n;
            if order > SPECTRUM_BUDGET {
                return Err(Error::Budget {
                    order,
                    limit: SPECTRUM_BUDGET,
                }
                .into());
            }
            let g = build_chain(args.n, args.family.into())?;
            let spectra: DecomposedSpectra = decomposed_spectra(&g, args.tol)?;
            emit(args.output.as_ref(), &pretty(&spectra))?;
            Ok(Outcome::Success)
        }
    }
}

/// Parse `std::env::args`, run, and map the outcome to an exit code.
pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match execute(cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
