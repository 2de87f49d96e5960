mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use noether::Field;
use serde_json::json;

#[derive(Parser)]
#[command(name = "noether", version, about = "Noether resolutions, Hilbert series, regularity, semigroups and monomial curves")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// Coefficient field: `q` or `f<p>` for a prime p.
    #[arg(long, global = true, default_value = "q")]
    pub field: String,
    /// Comma-separated positive weights, one per variable.
    #[arg(long, global = true, value_delimiter = ',')]
    pub weights: Option<Vec<u64>>,
    /// Krull dimension d (the last d variables are the Noether normalization).
    #[arg(long, global = true)]
    pub dim: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Comma-separated curve sequence m1 < … < mn.
    #[arg(long, global = true, value_delimiter = ',')]
    pub seq: Option<Vec<u64>>,
    /// Analyze the projection from the r-th coordinate point.
    #[arg(long, global = true)]
    pub project: Option<usize>,
    /// Largest coordinate-change parameter tried when x_n is a zero divisor.
    #[arg(long = "tau-max", global = true, default_value_t = 100)]
    pub tau_max: u64,
    /// Degree truncation for Hilbert function oracles.
    #[arg(long, global = true)]
    pub bound: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Reduced Gröbner basis and initial ideal of a `.ideal` file.
    Gb { input: PathBuf },
    /// Implicit equations of a parametrization (one polynomial in t1..td per line).
    Implicitize { input: PathBuf },
    /// Toric ideal of a `.mat` file.
    Toric { input: PathBuf },
    /// Noether resolution of a `.ideal` or `.mat` input.
    Noether { input: PathBuf },
    /// Hilbert series: weighted for `.ideal`, multigraded for `.mat`.
    Hilbert { input: PathBuf },
    /// Castelnuovo–Mumford regularity.
    Reg { input: PathBuf },
    /// Simplicial semigroup invariants of a `.mat` file.
    Semigroup { op: SemigroupOp, input: PathBuf },
    /// Monomial curve given by --seq: bounds, exact regularity, Apéry set.
    Curve,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SemigroupOp {
    S0,
    S1,
    Cm,
    Index,
    Macaulayfy,
    Verify,
    Hilbert2,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Validation(String),
    Compute(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Validation(_) => 2,
            CliError::Compute(_) => 3,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Validation(_) => "validation",
            CliError::Compute(_) => "computation",
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Validation(m) | CliError::Compute(m) => m,
        }
    }
}

impl From<noether::Error> for CliError {
    fn from(e: noether::Error) -> Self {
        if e.is_validation() {
            CliError::Validation(e.to_string())
        } else {
            CliError::Compute(e.to_string())
        }
    }
}

pub fn parse_field(s: &str) -> Result<Field, CliError> {
    if s == "q" || s == "Q" {
        return Ok(Field::Rational);
    }
    let p = s
        .strip_prefix('f')
        .or_else(|| s.strip_prefix('F'))
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| CliError::Validation(format!("field must be 'q' or 'f<p>', found '{s}'")))?;
    Ok(Field::prime(p)?)
}

/// The command with its operation, e.g. `semigroup macaulayfy`.
fn command_name(cmd: &Cmd) -> String {
    match cmd {
        Cmd::Gb { .. } => "gb".into(),
        Cmd::Implicitize { .. } => "implicitize".into(),
        Cmd::Toric { .. } => "toric".into(),
        Cmd::Noether { .. } => "noether".into(),
        Cmd::Hilbert { .. } => "hilbert".into(),
        Cmd::Reg { .. } => "reg".into(),
        Cmd::Semigroup { op, .. } => format!("semigroup {}", op.to_possible_value().expect("no skipped variants").get_name()),
        Cmd::Curve => "curve".into(),
    }
}

fn check_flags(cmd: &Cmd, o: &Opts) -> Result<(), CliError> {
    let is_curve = matches!(cmd, Cmd::Curve);
    if is_curve && o.seq.is_none() {
        return Err(CliError::Usage("curve needs --seq".into()));
    }
    if !is_curve && (o.seq.is_some() || o.project.is_some()) {
        return Err(CliError::Usage("--seq and --project only apply to curve".into()));
    }
    Ok(())
}

fn input_path(cmd: &Cmd) -> Option<&PathBuf> {
    match cmd {
        Cmd::Gb { input }
        | Cmd::Implicitize { input }
        | Cmd::Toric { input }
        | Cmd::Noether { input }
        | Cmd::Hilbert { input }
        | Cmd::Reg { input }
        | Cmd::Semigroup { input, .. } => Some(input),
        Cmd::Curve => None,
    }
}

/// Input file contents and the digest over command, options and contents.
fn load(cmd: &Cmd, o: &Opts, name: &str) -> Result<(String, String), CliError> {
    let src = match input_path(cmd) {
        Some(p) => std::fs::read_to_string(p).map_err(|e| CliError::Validation(format!("{}: {e}", p.display())))?,
        None => String::new(),
    };
    let canonical = format!(
        "field={};weights={:?};dim={:?};seq={:?};project={:?};tau_max={};bound={:?}",
        o.field, o.weights, o.dim, o.seq, o.project, o.tau_max, o.bound
    );
    let digest = report::digest(&[name.as_bytes(), canonical.as_bytes(), src.as_bytes()]);
    Ok((src, digest))
}

fn run(cmd: &Cmd, o: &Opts, src: &str) -> Result<report::Report, CliError> {
    check_flags(cmd, o)?;
    let is_mat = input_path(cmd).is_some_and(|p| p.extension().is_some_and(|e| e == "mat"));
    match cmd {
        Cmd::Gb { .. } => commands::gb(src, o),
        Cmd::Implicitize { .. } => commands::implicitize(src, o),
        Cmd::Toric { .. } => commands::toric(src, o),
        Cmd::Noether { .. } => commands::noether(src, is_mat, o),
        Cmd::Hilbert { .. } => commands::hilbert(src, is_mat, o),
        Cmd::Reg { .. } => commands::reg(src, is_mat, o),
        Cmd::Semigroup { op, .. } => commands::semigroup(*op, src),
        Cmd::Curve => commands::curve(o),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let name = command_name(&cli.cmd);
    let loaded = load(&cli.cmd, &cli.opts, &name);
    let digest = loaded.as_ref().ok().map(|(_, d)| d.clone());
    match loaded.and_then(|(src, _)| run(&cli.cmd, &cli.opts, &src)) {
        Ok(rep) => {
            let digest = digest.expect("loaded");
            let out = match cli.opts.format {
                Format::Json => rep.render_json(&name, &digest),
                Format::Text => rep.render_text(),
            };
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            if cli.opts.format == Format::Json {
                let v = json!({
                    "schema_version": report::SCHEMA_VERSION,
                    "command": name,
                    "inputs_digest": digest,
                    "error": { "kind": e.kind(), "message": e.message() },
                });
                println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
            }
            ExitCode::from(e.code())
        }
    }
}
