//! `springer`: compute, verify and tabulate Springer representations of the
//! symmetric group.

mod cache;
mod output;
mod suite;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use springer_core::springer::{
    kostka_foulkes_table_with, springer_compute_with, SpringerOptions, SpringerReport,
    StageTiming, DEFAULT_MAX_N,
};
use springer_core::symgroup::Partition;
use springer_core::Error;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Parser)]
#[command(name = "springer", version, about = "Springer representations of S_n by equivariant localization")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the Springer representation for one Jordan type.
    Compute {
        /// Jordan type as a comma-separated partition, e.g. 2,1,1.
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Highest degree to compute; defaults to n(lambda).
        #[arg(long)]
        degree_bound: Option<usize>,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Ignore and do not update the result cache.
        #[arg(long)]
        no_cache: bool,
        /// Raise the size limit on n.
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Run every check for all partitions up to a size.
    Verify {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Print the Kostka-Foulkes table for n.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
}

/// Everything a run emits, versioned.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope<R> {
    pub schema_version: String,
    pub invocation: serde_json::Value,
    pub report: R,
    pub timings: Vec<StageTiming>,
}

enum Failure {
    Usage(String),
    Verification(String),
    Guardrail(String),
    Other(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) | Failure::Other(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Guardrail(_) => 3,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Usage(_) => "usage",
            Failure::Verification(_) => "verification",
            Failure::Guardrail(_) => "guardrail",
            Failure::Other(_) => "error",
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Verification(m) | Failure::Guardrail(m) | Failure::Other(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Guardrail { .. } => Failure::Guardrail(e.to_string()),
            Error::MalformedInput(_) => Failure::Usage(e.to_string()),
            Error::Certificate { .. } | Error::StabilityViolation { .. } | Error::Convention(_) => {
                Failure::Verification(e.to_string())
            }
            Error::ContainmentViolation(_) => Failure::Other(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

fn write_out(out: &Option<PathBuf>, body: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, body)?,
        None => std::io::stdout().lock().write_all(body.as_bytes())?,
    }
    Ok(())
}

fn warn_on_raised_limit(max_n: usize) {
    if max_n > DEFAULT_MAX_N {
        eprintln!("warning: size limit raised to n = {max_n}; runs beyond n = {DEFAULT_MAX_N} can take very long");
    }
}

fn compute(
    lambda: &str,
    format: Format,
    degree_bound: Option<usize>,
    out: &Option<PathBuf>,
    no_cache: bool,
    max_n: usize,
) -> Result<(), Failure> {
    let lambda: Partition = lambda.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
    if lambda.is_empty() {
        return Err(Failure::Usage("--lambda must name a nonempty partition".into()));
    }
    warn_on_raised_limit(max_n);
    let opts = SpringerOptions { max_n, degree_bound };
    let cacheable = !no_cache && degree_bound.is_none_or(|d| d == lambda.n_statistic());
    if lambda.n() > max_n {
        return Err(Error::Guardrail {
            what: "partition size n",
            value: lambda.n(),
            limit: max_n,
        }
        .into());
    }

    let started = Instant::now();
    let cached = if cacheable { cache::load(&lambda) } else { None };
    let (report, timings): (SpringerReport, Vec<StageTiming>) = match cached {
        Some(report) => {
            let millis = started.elapsed().as_secs_f64() * 1e3;
            (report, vec![StageTiming { stage: "cache-read".into(), millis }])
        }
        None => {
            let (report, timings) = springer_compute_with(&lambda, &opts)?;
            if cacheable {
                if let Err(e) = cache::store(&report) {
                    eprintln!("warning: could not write the cache: {e}");
                }
            }
            (report, timings)
        }
    };
    let envelope = ReportEnvelope {
        schema_version: SCHEMA_VERSION.into(),
        invocation: serde_json::json!({
            "command": "compute",
            "lambda": lambda.to_string(),
            "format": format,
            "degree_bound": report.degree_bound,
            "no_cache": no_cache,
            "max_n": max_n,
        }),
        report,
        timings,
    };
    let body = match format {
        Format::Json => output::to_json(&envelope)?,
        Format::Csv => output::report_csv(&envelope.report)?,
        Format::Text => output::report_text(&envelope.report),
    };
    write_out(out, &body)
}

fn verify(n_max: usize, format: Format, out: &Option<PathBuf>, max_n: usize) -> Result<(), Failure> {
    warn_on_raised_limit(max_n);
    if n_max > max_n {
        return Err(Error::Guardrail {
            what: "n-max",
            value: n_max,
            limit: max_n,
        }
        .into());
    }
    let started = Instant::now();
    let summary = suite::run(n_max)?;
    let millis = started.elapsed().as_secs_f64() * 1e3;
    let all_passed = summary.all_passed();
    let body = match format {
        Format::Json => output::to_json(&ReportEnvelope {
            schema_version: SCHEMA_VERSION.into(),
            invocation: serde_json::json!({ "command": "verify", "n_max": n_max, "format": format, "max_n": max_n }),
            report: &summary,
            timings: vec![StageTiming { stage: "verify".into(), millis }],
        })?,
        Format::Csv => output::summary_csv(&summary)?,
        Format::Text => output::summary_text(&summary),
    };
    write_out(out, &body)?;
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "failing checks: {}",
            summary.failures().join(", ")
        )))
    }
}

fn table(n: usize, format: Format, out: &Option<PathBuf>, max_n: usize) -> Result<(), Failure> {
    warn_on_raised_limit(max_n);
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let started = Instant::now();
    let table = kostka_foulkes_table_with(n, max_n)?;
    let millis = started.elapsed().as_secs_f64() * 1e3;
    let body = match format {
        Format::Json => output::to_json(&ReportEnvelope {
            schema_version: SCHEMA_VERSION.into(),
            invocation: serde_json::json!({ "command": "table", "n": n, "format": format, "max_n": max_n }),
            report: &table,
            timings: vec![StageTiming { stage: "table".into(), millis }],
        })?,
        Format::Csv => output::table_csv(&table)?,
        Format::Text => output::table_text(&table),
    };
    write_out(out, &body)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, format) = match &cli.command {
        Command::Compute {
            lambda,
            format,
            degree_bound,
            out,
            no_cache,
            max_n,
        } => (compute(lambda, *format, *degree_bound, out, *no_cache, *max_n), *format),
        Command::Verify {
            n_max,
            format,
            out,
            max_n,
        } => (verify(*n_max, *format, out, *max_n), *format),
        Command::Table {
            n,
            format,
            out,
            max_n,
        } => (table(*n, *format, out, *max_n), *format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if format == Format::Json {
                let diag = serde_json::json!({ "error": { "kind": f.kind(), "message": f.message() } });
                eprintln!("{diag}");
            } else {
                eprintln!("error ({}): {}", f.kind(), f.message());
            }
            ExitCode::from(f.code())
        }
    }
}
