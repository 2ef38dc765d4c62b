//! `galois-loci`: enumerate Galois families, verify centers, build centers
//! from sections, and run the acceptance self-test.
//!
//! Exit codes: 0 success, 2 input error, 3 computational failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;

use galois_loci::form::BinaryForm;
use galois_loci::galois::{LinearSystem, ProjectionCenter};
use galois_loci::groups::GroupSpec;
use galois_loci::report::{cmd_center, cmd_families, cmd_selftest, cmd_verify, Format, Render, RunConfig};
use galois_loci::Error;

const SEED_ENV: &str = "GALOIS_LOCI_SEED";

#[derive(Parser)]
#[command(name = "galois-loci", version, about = "Galois subspaces of rational normal curve projections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Seed for every random choice; GALOIS_LOCI_SEED takes precedence.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Residual below which a candidate deck transformation is accepted.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol_accept: f64,
    /// Distance below which two deck transformations are the same.
    #[arg(long, global = true, default_value_t = 1e-6)]
    tol_dedupe: f64,
    /// Samples per family (conjugators for `families`, centers for `selftest`).
    #[arg(long, global = true, default_value_t = 50)]
    samples: usize,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// List the Galois families of a linear system.
    Families {
        #[arg(long)]
        degree: Option<usize>,
        /// Linear system JSON file: {"degree": d, "basis": [forms]}.
        #[arg(long)]
        system: Option<PathBuf>,
    },
    /// Decide whether projection from a center is Galois.
    Verify {
        /// Center JSON, inline or a file path: {"d": d, "pencil": [[..], [..]]}.
        center: String,
        #[arg(long)]
        system: Option<PathBuf>,
    },
    /// Build the center attached to a group and a Galois section.
    Center {
        /// Group JSON, inline or a file path: {"kind": .., "m": .., "theta": ..}.
        #[arg(long)]
        group: String,
        /// Section JSON, inline or a file path: {"degree": k, "coeffs": [..]}.
        #[arg(long)]
        section: String,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        system: Option<PathBuf>,
    },
    /// Run the acceptance suite; exit 0 iff every criterion passes, else 3.
    Selftest,
}

enum Failure {
    Input(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Compute(e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run_config(c: &Common) -> Result<RunConfig, Failure> {
    let seed = match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("{SEED_ENV}={v:?} is not a 64-bit unsigned integer")))?,
        Err(_) => c.seed,
    };
    let cfg = RunConfig {
        seed,
        tol_accept: c.tol_accept,
        tol_dedupe: c.tol_dedupe,
        sample_count: c.samples,
        output: c.output.clone(),
    };
    cfg.validate()?;
    Ok(cfg)
}

/// Parses `arg` as JSON, or as the contents of the file it names.
fn json_arg<T: DeserializeOwned>(what: &str, arg: &str) -> Result<T, Failure> {
    let text = if arg.trim_start().starts_with(['{', '[']) {
        arg.to_string()
    } else {
        read(what, Path::new(arg))?
    };
    parse(what, &text)
}

fn read(what: &str, path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {what} {}: {e}", path.display())))
}

fn parse<T: DeserializeOwned>(what: &str, text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Input(format!("malformed {what}: {e}")))
}

/// The system from `--system`, else the complete system of `degree`.
fn system(file: Option<&Path>, degree: Option<usize>) -> Result<LinearSystem, Failure> {
    match (file, degree) {
        (Some(path), d) => {
            let v: LinearSystem = parse("system", &read("system", path)?)?;
            if let Some(d) = d.filter(|&d| d != v.degree()) {
                return Err(Failure::Input(format!(
                    "--degree {d} disagrees with the system degree {}",
                    v.degree()
                )));
            }
            Ok(v)
        }
        (None, Some(d)) => Ok(LinearSystem::complete(d)?),
        (None, None) => Err(Failure::Input("give --degree or --system".into())),
    }
}

fn emit(report: &impl Render, cfg: &RunConfig, format: Format) -> Result<(), Failure> {
    let text = report.render(format);
    match &cfg.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let cfg = run_config(&cli.common)?;
    let format = match cli.common.format {
        FormatArg::Json => Format::Json,
        FormatArg::Table => Format::Table,
    };
    match cli.command {
        Command::Families { degree, system: file } => {
            if degree == Some(0) {
                return Err(Failure::Input("--degree must be at least 1".into()));
            }
            let v = system(file.as_deref(), degree)?;
            emit(&cmd_families(&v, &cfg), &cfg, format)?;
        }
        Command::Verify { center, system: file } => {
            let c: ProjectionCenter = json_arg("center", &center)?;
            let v = system(file.as_deref(), Some(c.degree()))?;
            emit(&cmd_verify(&c, &v, &cfg)?, &cfg, format)?;
        }
        Command::Center {
            group,
            section,
            degree,
            system: file,
        } => {
            let g: GroupSpec = json_arg("group", &group)?;
            let s: BinaryForm = json_arg("section", &section)?;
            let degree = degree.or(file.is_none().then(|| s.degree() + g.order()));
            let v = system(file.as_deref(), degree)?;
            emit(&cmd_center(&g, s, &v)?, &cfg, format)?;
        }
        Command::Selftest => {
            let report = cmd_selftest(&cfg);
            if format == Format::Json {
                for c in &report.criteria {
                    eprintln!("{}", c.line());
                }
            }
            for w in report.warnings() {
                eprintln!("warning: {w}");
            }
            emit(&report, &cfg, format)?;
            if !report.passed {
                return Ok(ExitCode::from(3));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
