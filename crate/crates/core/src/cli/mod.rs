//! Command-line front end: polynomial and map-source parsing, the analysis
//! report, the verification battery and curve export.

mod analyze;
mod curve;
mod parser;
mod source;
mod verify;

pub use analyze::{analyze, numeric_referee, AnalyzeOptions, AnalyzeReport, MetaJson, NumericCheck, Verdicts, DEFAULT_SEED};
pub use curve::emit_curve;
pub use parser::{parse_polynomial, parse_polynomial_in, MAX_EXPONENT, MAX_VARS};
pub use source::{BuiltMap, MapSource};
pub use verify::{check_ids, verify_paper, CheckOutcome};

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::error::Error;
use crate::numcheck::{DEFAULT_POINTS, ZERO_TOLERANCE};

#[derive(Debug, Parser)]
#[command(name = "biharmonic", version, about = "Exact harmonic and biharmonic analysis of polynomial sphere maps")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a map and print its tension, bitension and verdicts.
    Analyze {
        source: String,
        /// JSON output (the default).
        #[arg(long, conflicts_with = "human")]
        json: bool,
        /// Prose output.
        #[arg(long)]
        human: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_POINTS)]
        points: usize,
        #[arg(long, default_value_t = ZERO_TOLERANCE)]
        tol: f64,
    },
    /// Build a map from a source expression and verify it restricts to spheres.
    Construct {
        expr: String,
        /// Print the components.
        #[arg(long)]
        print: bool,
    },
    /// Run the battery of exact reference checks.
    VerifyPaper {
        /// Only run checks whose identifier contains this text.
        #[arg(long)]
        filter: Option<String>,
    },
    /// Sample a closed curve S^1 -> S^3 as CSV.
    EmitCurve {
        source: String,
        #[arg(long)]
        samples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Process exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::UnknownName(_) => 2,
        Error::NotASphereMap(_)
        | Error::RadiiDoNotSumToOne(_)
        | Error::NotAForm(_)
        | Error::RadiusNotRepresentable(_) => 3,
        Error::RouteDisagreement(_) => 4,
        _ => 1,
    }
}

fn build(text: &str) -> crate::Result<BuiltMap> {
    MapSource::parse(text)?.build()
}

/// Runs one command, writing normal output to `out` and diagnostics to
/// `err`; returns the exit status.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> crate::Result<i32> {
    let io = |e: std::io::Error| Error::WrongDimensions(format!("output failed: {e}"));
    match cli.command {
        Command::Analyze {
            source,
            human,
            seed,
            points,
            tol,
            ..
        } => {
            let built = build(&source)?;
            let report = analyze(&source, &built, &AnalyzeOptions { seed, points, tol })?;
            let text = if human { report.to_human() } else { report.to_json() + "\n" };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(report.exit_code())
        }
        Command::Construct { expr, print } => {
            let source = MapSource::parse(&expr)?;
            let built = source.build()?;
            writeln!(
                out,
                "{source}: {} map, {} variables, {} components, domain dimension {}",
                built.meta.kind().name(),
                built.map.nvars(),
                built.map.len(),
                built.meta.dim()
            )
            .map_err(io)?;
            if print {
                for c in built.map.components() {
                    writeln!(out, "{c}").map_err(io)?;
                }
            }
            Ok(0)
        }
        Command::VerifyPaper { filter } => {
            let outcomes = verify_paper(filter.as_deref());
            for o in &outcomes {
                writeln!(out, "{o}").map_err(io)?;
            }
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            writeln!(out, "{} checks, {} passed, {failed} failed", outcomes.len(), outcomes.len() - failed)
                .map_err(io)?;
            Ok(i32::from(failed > 0))
        }
        Command::EmitCurve { source, samples, out: path } => {
            let csv = emit_curve(&build(&source)?, samples)?;
            match path {
                Some(p) => std::fs::write(&p, csv).map_err(io)?,
                None => out.write_all(csv.as_bytes()).map_err(io)?,
            }
            Ok(0)
        }
    }
}
