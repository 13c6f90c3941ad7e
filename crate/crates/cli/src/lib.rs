//! Experiment runner for the `nqa` command-line tool.
//!
//! A run is described by a [`config::RunConfig`], executed by
//! [`runner::run`], and written as a CSV series plus a JSON summary that
//! echoes the configuration.

pub mod config;
pub mod output;
pub mod runner;

use std::path::PathBuf;

use clap::Parser;

use config::{Command, RawConfig, RunConfig};
use runner::RunError;

/// Exit status when some target could not be reached.
pub const EXIT_UNREACHABLE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "nqa", version, about = "Quench dynamics, correlations and defects of the dissipative Ising chain")]
struct Args {
    /// evolve, sweep-tau, correlations, defects or scaling.
    command: String,
    /// Configuration file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    threads: Option<usize>,
    /// CSV output path; the JSON summary goes next to it.
    #[arg(long)]
    out: Option<PathBuf>,
    /// `key=value`, `section.key=value` or `--key value` overrides.
    #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
    overrides: Vec<String>,
}

/// Turns `--key value` and `--key=value` tokens into `key=value`.
fn normalise_overrides(tokens: &[String]) -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    let mut it = tokens.iter();
    while let Some(tok) = it.next() {
        match tok.strip_prefix("--") {
            Some(flag) if flag.contains('=') => out.push(flag.to_string()),
            Some(flag) => {
                let value = it.next().ok_or_else(|| format!("flag --{flag} needs a value"))?;
                out.push(format!("{flag}={value}"));
            }
            None => out.push(tok.clone()),
        }
    }
    Ok(out)
}

/// Builds the configuration from the command line, applying overrides last.
fn configure(args: &Args) -> Result<(RunConfig, usize), RunError> {
    let command: Command = args.command.parse().map_err(|e: config::ConfigError| RunError::Config(e.message))?;
    let mut raw = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| RunError::Config(format!("cannot read {}: {e}", path.display())))?;
            RawConfig::parse(&text).map_err(|e| RunError::Config(format!("{}: {e}", path.display())))?
        }
        None => RawConfig::default(),
    };
    let mut threads = args.threads;
    let mut out = args.out.clone();
    for spec in normalise_overrides(&args.overrides).map_err(RunError::Config)? {
        // Flags written after the overrides land here too.
        match spec.split_once('=') {
            Some(("threads", v)) => {
                threads = Some(v.parse().map_err(|_| RunError::Config(format!("bad thread count `{v}`")))?)
            }
            Some(("out", v)) => out = Some(PathBuf::from(v)),
            Some(("config", _)) => return Err(RunError::Config("--config must come before overrides".into())),
            _ => raw.set_override(&spec, Some(command)).map_err(|e| RunError::Config(e.message))?,
        }
    }
    let mut cfg = RunConfig::from_raw(&raw, command).map_err(|e| RunError::Config(e.message))?;
    if let Some(out) = out {
        cfg.output = out;
    }
    if output::summary_path(&cfg.output) == cfg.output {
        return Err(RunError::Config("the CSV output path must not end in .json".into()));
    }
    let threads = threads.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if threads == 0 {
        return Err(RunError::Config("--threads must be at least 1".into()));
    }
    Ok((cfg, threads))
}

fn execute(args: &Args) -> Result<i32, RunError> {
    let (cfg, threads) = configure(args)?;
    let (result, seconds) = runner::run_timed(&cfg, threads)?;
    let csv = result.table.render();
    let doc = serde_json::to_string_pretty(&result.document(&cfg, seconds, threads))
        .map_err(|e| RunError::Config(format!("cannot encode summary: {e}")))?;
    let json_path = output::summary_path(&cfg.output);
    output::write_all_or_nothing(&[(&cfg.output, &csv), (&json_path, &doc)]).map_err(RunError::Io)?;
    if result.unreachable {
        eprintln!("nqa: target not reached for every configuration; see {}", json_path.display());
        return Ok(EXIT_UNREACHABLE);
    }
    Ok(0)
}

/// Entry point shared by the binary and the tests; returns the exit status.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&args) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("nqa: {e}");
            e.exit_code()
        }
    }
}
