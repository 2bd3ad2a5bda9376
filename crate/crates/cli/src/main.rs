//! `hopfgal`: run the acceptance suite, build named examples, verify JSON
//! objects.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 input error.

mod examples;
mod verify;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Parser, Subcommand};
use hopfgal::report::Status;
use hopfgal::suite::{self, SuiteOptions};
use hopfgal::Error;
use serde_json::{json, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(name = "hopfgal", version, about = "Exact Hopf algebra, Hopf-Galois and twist verifiers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the acceptance checks.
    Suite {
        /// Glob on criterion names, e.g. `taft*`.
        #[arg(long)]
        filter: Option<String>,
        /// Write the report document here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write per-criterion wall-clock times here.
        #[arg(long)]
        timings: Option<PathBuf>,
        /// Damage a built-in table (test mode).
        #[arg(long, hide = true)]
        corrupt: bool,
    },
    /// Build a named object and print it with its axiom report.
    Example(examples::ExampleArgs),
    /// Verify an object read from a JSON file.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: verify::Mode,
        #[arg(long)]
        endpoint0: Option<PathBuf>,
        #[arg(long)]
        endpoint1: Option<PathBuf>,
    },
}

/// Failure kinds that map to exit codes.
#[derive(Debug)]
pub enum Outcome {
    Input(anyhow::Error),
    Failed,
}

impl From<anyhow::Error> for Outcome {
    fn from(e: anyhow::Error) -> Self {
        Outcome::Input(e)
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        Outcome::Input(e.into())
    }
}

/// Top-level envelope shared by every command.
pub fn document(command: &str, status: Status, body: Value) -> Value {
    let mut doc = json!({ "tool": "hopfgal", "version": VERSION, "command": command, "status": status });
    if let (Value::Object(d), Value::Object(b)) = (&mut doc, body) {
        d.extend(b);
    }
    doc
}

/// Writes `text` through a sibling temporary file and a rename.
pub fn write_atomic(path: &Path, text: &str) -> anyhow::Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().context("output path has no file name")?;
    let tmp = dir.join(format!(".{}.tmp{}", name.to_string_lossy(), std::process::id()));
    std::fs::write(&tmp, text).with_context(|| format!("writing {}", tmp.display()))?;
    std::fs::rename(&tmp, path).with_context(|| format!("renaming to {}", path.display()))?;
    Ok(())
}

pub fn print_json(v: &Value) -> anyhow::Result<()> {
    let mut text = serde_json::to_string_pretty(v)?;
    text.push('\n');
    std::io::stdout().lock().write_all(text.as_bytes())?;
    Ok(())
}

fn threads_from_env() -> anyhow::Result<()> {
    let Ok(raw) = std::env::var("HOPFGAL_THREADS") else { return Ok(()) };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .with_context(|| format!("HOPFGAL_THREADS must be a positive integer, got {raw:?}"))?;
    hopfgal::par::init_threads(n);
    Ok(())
}

fn cmd_suite(
    filter: Option<&str>,
    json_out: Option<&Path>,
    timings: Option<&Path>,
    corrupt: bool,
) -> Result<(), Outcome> {
    let selected = suite::select(filter)?;
    if selected.is_empty() {
        return Err(Outcome::Input(anyhow::anyhow!("filter {:?} matches no criterion", filter.unwrap_or(""))));
    }
    let opts = SuiteOptions { corrupt };
    let start = Instant::now();
    let mut runs = Vec::new();
    for c in selected {
        let r = suite::run(c, &opts);
        let mut out = std::io::stdout().lock();
        let _ = writeln!(out, "{} {:<20} {}", if r.status == Status::Pass { "PASS" } else { "FAIL" }, r.name, r.title);
        if let Some(f) = r.report.first_failure() {
            let _ = writeln!(out, "     {}: {}", f.name, f.witness.as_deref().unwrap_or(""));
        }
        drop(out);
        eprintln!("timing {} {:.3}s", r.name, r.elapsed.as_secs_f64());
        runs.push(r);
    }
    eprintln!("timing total {:.3}s", start.elapsed().as_secs_f64());
    let status = if runs.iter().all(|r| r.status == Status::Pass) { Status::Pass } else { Status::Fail };
    if let Some(path) = json_out {
        let doc = document("suite", status, json!({ "filter": filter, "criteria": runs }));
        write_atomic(path, &(serde_json::to_string_pretty(&doc).map_err(anyhow::Error::from)? + "\n"))?;
    }
    if let Some(path) = timings {
        let t: serde_json::Map<String, Value> =
            runs.iter().map(|r| (r.name.to_string(), json!(r.elapsed.as_secs_f64()))).collect();
        write_atomic(path, &(serde_json::to_string_pretty(&t).map_err(anyhow::Error::from)? + "\n"))?;
    }
    match status {
        Status::Pass => Ok(()),
        _ => Err(Outcome::Failed),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Err(e) = threads_from_env() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    let res = match &cli.command {
        Command::Suite { filter, json, timings, corrupt } => {
            cmd_suite(filter.as_deref(), json.as_deref(), timings.as_deref(), *corrupt)
        }
        Command::Example(args) => examples::run(args),
        Command::Verify { file, mode, endpoint0, endpoint1 } => {
            verify::run(file, *mode, endpoint0.as_deref(), endpoint1.as_deref())
        }
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Outcome::Failed) => ExitCode::from(1),
        Err(Outcome::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
