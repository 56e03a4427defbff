//! Verification CLI: samples seeded parameter sets, checks the selected
//! identity on every case, and emits a machine-readable report.
//!
//! Exit codes: 0 when every case passes, 1 when any case fails, 2 on
//! configuration errors.

use bihyper::hyperseries::DEFAULT_MAX_TERMS;
use bihyper::report::{emit_report, run_verification, Identity, OutputFormat, RunConfig};
use clap::Parser;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(
    name = "verify",
    about = "Numerically verify bilateral and Saalschütz-type hypergeometric identities",
    version
)]
struct Cli {
    /// Identity to verify.
    #[arg(long, value_enum)]
    identity: Identity,

    /// Number of sampled parameter sets.
    #[arg(long, default_value_t = 200)]
    samples: usize,

    /// Seed of the counter-based sampler.
    #[arg(long, default_value_t = 42)]
    seed: u64,

    /// Pass tolerance: relative deviation for identity checks, absolute
    /// slope deviation for limit_decay (default 1e-8 / 0.15).
    #[arg(long)]
    tol: Option<f64>,

    /// Comma-separated shift list for the semifinite and limit_decay modes.
    #[arg(long = "n", value_delimiter = ',')]
    n_list: Option<Vec<u32>>,

    /// Output format.
    #[arg(long, value_enum, default_value = "human")]
    format: OutputFormat,

    /// Number of worker threads; the report is identical at any level.
    #[arg(long, default_value_t = 1)]
    parallelism: usize,

    /// Write the report to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    let max_terms = match std::env::var("VERIFY_MAX_TERMS") {
        Ok(raw) => match raw.parse::<usize>() {
            Ok(v) if v > 0 => v,
            _ => {
                eprintln!("config error: VERIFY_MAX_TERMS must be a positive integer, got {raw:?}");
                return ExitCode::from(2);
            }
        },
        Err(_) => DEFAULT_MAX_TERMS,
    };

    let config = RunConfig {
        identity: cli.identity,
        samples: cli.samples,
        seed: cli.seed,
        tol: cli.tol.unwrap_or_else(|| cli.identity.default_tolerance()),
        n_list: cli.n_list.unwrap_or_else(|| cli.identity.default_shifts()),
        format: cli.format,
        parallelism: cli.parallelism,
        max_terms,
    };

    let report = match run_verification(&config) {
        Ok(report) => report,
        Err(err) => {
            eprintln!("{err}");
            return ExitCode::from(2);
        }
    };

    let rendered = emit_report(&report, config.format);
    match &cli.out {
        Some(path) => {
            if let Err(err) = std::fs::write(path, rendered) {
                eprintln!("config error: cannot write {}: {err}", path.display());
                return ExitCode::from(2);
            }
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(rendered.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
        }
    }

    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
