//! Command-line front end. The binary is a thin wrapper around [`run`].

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use sha2::{Digest, Sha256};

use crate::basis::basis_table;
use crate::bounds::{check_coefficients, reports_to_csv, sweep, BoundReport, SweepConfig};
use crate::checks::{run_suite, CheckResult, SuiteConfig, CORRUPTIBLE};
use crate::error::Error;
use crate::fourier::{with_jobs, FourierCoefficients};
use crate::scalar::{format_rational, parse_rational, Rational};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "riesz", version, about = "Monogenic polynomial bases for the Riesz system in balls of R^3")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write the normalized basis table for degrees 0..=N.
    Basis(Common),
    /// Run the exact identity suites and the sampled growth-bound sweep.
    Check(Common),
    /// Run the growth-bound sweep on the corpus, or on one coefficient file.
    VerifyBounds {
        #[command(flatten)]
        common: Common,
        /// Fourier coefficient file (JSON) to check instead of the corpus.
        #[arg(long)]
        coefficients: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Default)]
struct Common {
    #[arg(long)]
    max_degree: Option<u32>,
    /// Ball radius: integer, fraction (5/2) or decimal.
    #[arg(long)]
    radius: Option<String>,
    /// Minimum number of sphere grid nodes.
    #[arg(long)]
    grid: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Output file; standard output if absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (default: rayon's choice).
    #[arg(long)]
    jobs: Option<usize>,
    /// Flat `key = value` file with the same keys as the flags.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, hide = true)]
    inject_fault: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

/// Fully resolved settings for one command.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: &'static str,
    pub max_degree: u32,
    pub radius: Rational,
    /// Whether the radius was given; otherwise sweeps use the corpus radii.
    pub radius_given: bool,
    pub grid: usize,
    pub seed: u64,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub jobs: Option<usize>,
    pub inject_fault: Option<String>,
    pub coefficients: Option<PathBuf>,
}

impl RunConfig {
    /// Settings that determine the output bytes (not `out`, not `jobs`).
    pub fn canonical(&self) -> String {
        let mut s = format!(
            "command={}\nmax-degree={}\nradius={}\ngrid={}\nseed={}\nformat={}\n",
            self.command,
            self.max_degree,
            if self.radius_given { format_rational(&self.radius) } else { "corpus".into() },
            self.grid,
            self.seed,
            self.format.name()
        );
        if let Some(p) = &self.coefficients {
            s.push_str(&format!("coefficients={}\n", p.display()));
        }
        if let Some(f) = &self.inject_fault {
            s.push_str(&format!("inject-fault={f}\n"));
        }
        s
    }

    pub fn hash(&self) -> String {
        Sha256::digest(self.canonical().as_bytes())
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }
}

#[derive(Debug)]
struct Usage(String);

fn read_config_file(path: &Path) -> Result<BTreeMap<String, String>, Usage> {
    let text = std::fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    let mut out = BTreeMap::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Usage(format!("{}:{}: expected key = value", path.display(), k + 1)))?;
        let key = key.trim().replace('_', "-");
        const KEYS: [&str; 7] = ["max-degree", "radius", "grid", "seed", "format", "out", "jobs"];
        if !KEYS.contains(&key.as_str()) {
            return Err(Usage(format!("{}:{}: unknown key {key}", path.display(), k + 1)));
        }
        out.insert(key, value.trim().to_string());
    }
    Ok(out)
}

fn parse_value<T: std::str::FromStr>(key: &str, v: &str) -> Result<T, Usage> {
    v.parse().map_err(|_| Usage(format!("invalid {key}: {v}")))
}

fn resolve(command: &'static str, c: Common, coefficients: Option<PathBuf>) -> Result<RunConfig, Usage> {
    let file = match &c.config {
        Some(p) => read_config_file(p)?,
        None => BTreeMap::new(),
    };
    let pick = |key: &str| file.get(key).map(String::as_str);
    let max_degree = match (c.max_degree, pick("max-degree")) {
        (Some(n), _) => n,
        (None, Some(v)) => parse_value("max-degree", v)?,
        (None, None) => {
            if command == "basis" {
                4
            } else {
                8
            }
        }
    };
    let radius_text = c.radius.clone().or_else(|| pick("radius").map(str::to_string));
    let radius = match &radius_text {
        Some(t) => parse_rational(t).ok_or_else(|| Usage(format!("invalid radius: {t}")))?,
        None => Rational::from_integer(1.into()),
    };
    if radius <= Rational::from_integer(0.into()) {
        return Err(Usage(format!("radius must be positive, got {}", format_rational(&radius))));
    }
    let grid = match (c.grid, pick("grid")) {
        (Some(g), _) => g,
        (None, Some(v)) => parse_value("grid", v)?,
        (None, None) => 10_000,
    };
    if grid < 1_000 {
        return Err(Usage(format!("grid must be at least 1000 nodes, got {grid}")));
    }
    let seed = match (c.seed, pick("seed")) {
        (Some(s), _) => s,
        (None, Some(v)) => parse_value("seed", v)?,
        (None, None) => 0x5eed,
    };
    let format = match (c.format, pick("format")) {
        (Some(f), _) => f,
        (None, Some(v)) => Format::from_str(v, true).map_err(|_| Usage(format!("invalid format: {v}")))?,
        (None, None) => Format::Json,
    };
    let out = c.out.or_else(|| pick("out").map(PathBuf::from));
    let jobs = match (c.jobs, pick("jobs")) {
        (Some(j), _) => Some(j),
        (None, Some(v)) => Some(parse_value("jobs", v)?),
        (None, None) => None,
    };
    if jobs == Some(0) {
        return Err(Usage("jobs must be at least 1".into()));
    }
    if let Some(f) = &c.inject_fault {
        if !CORRUPTIBLE.contains(&f.as_str()) {
            return Err(Usage(format!("unknown identity for fault injection: {f}")));
        }
    }
    Ok(RunConfig {
        command,
        max_degree,
        radius,
        radius_given: radius_text.is_some(),
        grid,
        seed,
        format,
        out,
        jobs,
        inject_fault: c.inject_fault,
        coefficients,
    })
}

/// What a command produced: the report bytes and the exit status.
pub struct Outcome {
    pub report: String,
    pub status: i32,
}

fn provenance(config: &RunConfig) -> serde_json::Value {
    json!({
        "tool": "riesz",
        "version": crate::VERSION,
        "config_sha256": config.hash(),
    })
}

fn csv_preamble(config: &RunConfig) -> String {
    format!("# riesz {} config-sha256={}\n", crate::VERSION, config.hash())
}

fn to_json_text(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn cmd_basis(config: &RunConfig) -> Result<Outcome, Error> {
    let table = basis_table(config.max_degree, &config.radius)?;
    let report = match config.format {
        Format::Json => {
            let mut v = serde_json::to_value(&table)?;
            v["provenance"] = provenance(config);
            to_json_text(&v)
        }
        Format::Csv => {
            let mut s = csv_preamble(config);
            s.push_str("n,family,m,norm_sq_over_pi,norm\n");
            for e in &table.elements {
                s.push_str(&format!(
                    "{},{},{},{},{:e}\n",
                    e.index.n, e.index.family, e.index.m, e.norm_sq_over_pi, e.norm
                ));
            }
            s
        }
    };
    Ok(Outcome {
        report,
        status: EXIT_PASS,
    })
}

fn sweep_config(config: &RunConfig) -> SweepConfig {
    let mut s = SweepConfig {
        seed: config.seed,
        grid_nodes: config.grid,
        ..SweepConfig::default()
    };
    if config.radius_given {
        s.radii = vec![config.radius.clone()];
    }
    s
}

fn bound_summary(reports: &[BoundReport]) -> serde_json::Value {
    let failures: Vec<&BoundReport> = reports.iter().filter(|r| !r.pass).collect();
    json!({
        "reports": reports.len(),
        "failures": failures,
        "passed": failures.is_empty(),
    })
}

pub fn cmd_check(config: &RunConfig) -> Result<Outcome, Error> {
    let suite = SuiteConfig {
        max_degree: config.max_degree,
        radius: config.radius.clone(),
        seed: config.seed,
        grid_nodes: config.grid,
        corrupt: config.inject_fault.clone(),
        ..SuiteConfig::default()
    };
    let identities: Vec<CheckResult> = run_suite(&suite);
    let bounds = sweep(&sweep_config(config))?;
    let passed = identities.iter().all(|r| r.passed) && bounds.iter().all(|r| r.pass);
    let report = match config.format {
        Format::Json => to_json_text(&json!({
            "provenance": provenance(config),
            "passed": passed,
            "identities": identities,
            "bounds": bound_summary(&bounds),
        })),
        Format::Csv => {
            let mut s = csv_preamble(config);
            s.push_str("id,pass,detail\n");
            for r in &identities {
                s.push_str(&format!("{},{},{}\n", r.id, r.passed, r.detail.replace(',', ";")));
            }
            for inequality in crate::bounds::Inequality::ALL {
                let rows: Vec<&BoundReport> = bounds.iter().filter(|r| r.inequality == inequality).collect();
                let failed = rows.iter().filter(|r| !r.pass).count();
                s.push_str(&format!(
                    "bound:{},{},{} reports; {} failed\n",
                    inequality,
                    failed == 0,
                    rows.len(),
                    failed
                ));
            }
            s
        }
    };
    Ok(Outcome {
        report,
        status: if passed { EXIT_PASS } else { EXIT_FAIL },
    })
}

pub fn cmd_verify_bounds(config: &RunConfig) -> Result<Outcome, Error> {
    let reports = match &config.coefficients {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            let value: serde_json::Value = serde_json::from_str(&text)?;
            let coefficients = FourierCoefficients::from_json(&value)?;
            let name = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            check_coefficients(&name, &coefficients, &SweepConfig::default().ratios, config.grid)?
        }
        None => sweep(&sweep_config(config))?,
    };
    let passed = reports.iter().all(|r| r.pass);
    let report = match config.format {
        Format::Json => to_json_text(&json!({
            "provenance": provenance(config),
            "passed": passed,
            "reports": reports,
        })),
        Format::Csv => csv_preamble(config) + &reports_to_csv(&reports),
    };
    Ok(Outcome {
        report,
        status: if passed { EXIT_PASS } else { EXIT_FAIL },
    })
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Json(_) | Error::Domain(_) | Error::Range(_) | Error::Io(_) => EXIT_USAGE,
        _ => EXIT_FAIL,
    }
}

/// Parses `args` (including the program name), runs the command, writes
/// the report to `--out` or `stdout`, and returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    let resolved = match cli.command {
        Command::Basis(c) => resolve("basis", c, None),
        Command::Check(c) => resolve("check", c, None),
        Command::VerifyBounds { common, coefficients } => resolve("verify-bounds", common, coefficients),
    };
    let config = match resolved {
        Ok(c) => c,
        Err(Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let work = || match config.command {
        "basis" => cmd_basis(&config),
        "check" => cmd_check(&config),
        _ => cmd_verify_bounds(&config),
    };
    let outcome = match config.jobs {
        Some(j) => with_jobs(j, work),
        None => work(),
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return exit_code(&e);
        }
    };
    let written = match &config.out {
        Some(path) => std::fs::write(path, &outcome.report),
        None => stdout.write_all(outcome.report.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_USAGE;
    }
    if outcome.status != EXIT_PASS {
        let _ = writeln!(stderr, "verification failed");
    }
    outcome.status
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("riesz").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn negative_degree_is_usage_error() {
        assert_eq!(run_args(&["basis", "--max-degree", "-1"]).0, EXIT_USAGE);
    }

    #[test]
    fn basis_counts() {
        let (code, out, _) = run_args(&["basis", "--max-degree", "2"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["count"], 15);
        let (_, out0, _) = run_args(&["basis", "--max-degree", "0", "--format", "csv"]);
        assert_eq!(out0.lines().count(), 2 + 3);
    }

    #[test]
    fn bad_ranges() {
        assert_eq!(run_args(&["basis", "--radius", "0"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["basis", "--radius", "x"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["basis", "--grid", "10"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["check", "--inject-fault", "nonsense"]).0, EXIT_USAGE);
    }

    #[test]
    fn hash_ignores_output_path_and_jobs() {
        let c = |out: &str, jobs| resolve(
            "basis",
            Common {
                out: Some(out.into()),
                jobs: Some(jobs),
                ..Common::default()
            },
            None,
        )
        .unwrap();
        assert_eq!(c("a", 1).hash(), c("b", 3).hash());
    }
}
