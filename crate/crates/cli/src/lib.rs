//! Command-line front end for the superalgebra engine.
//!
//! `run` returns the artifact text instead of writing it, so the binary and
//! the tests share one code path.

pub mod report;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use superder_core::catalog::{construct, CatalogError, Construction, FamilySpec};
use superder_core::deltader::{analyze_space, critical_deltas_with, derivation_space_with, Convention};
use superder_core::exactnum::Rational;
use superder_core::roots::{diagonal_cartan, root_decompose, verify_root_axioms};
use superder_core::superalgebra::{check_superidentities, JsonError, SuperAlgebra};

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Error)]
pub enum CliError {
    /// Well-formed input violating a mathematical precondition.
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Parse(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Io(_) | CliError::Parse(_) => 2,
        }
    }
}

impl From<CatalogError> for CliError {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::Parse(_) => CliError::Parse(e.to_string()),
            other => CliError::Domain(other.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// How odd maps are treated; see the `deltader` module.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    #[default]
    Graded,
    Plain,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Graded => Convention::Graded,
            ConventionArg::Plain => Convention::Plain,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "superder", version, about = "Exact computations on classical Lie superalgebras and their δ-derivations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a catalog algebra, e.g. `A:1,0`, `D21:2/3`.
    Construct { spec: String },
    /// Check super-anticommutativity and the super Jacobi identity.
    Jacobi { input: String },
    /// Root decomposition and the basic-classical root axioms.
    Roots {
        input: String,
        /// Comma-separated Cartan basis indices; detected when omitted.
        #[arg(long, value_delimiter = ',')]
        cartan: Option<Vec<usize>>,
    },
    /// δ-derivations for one rational δ.
    Derive {
        input: String,
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
        #[arg(long, value_enum, default_value_t = ConventionArg::Graded)]
        convention: ConventionArg,
    },
    /// Critical values of δ for one algebra.
    Scan {
        input: String,
        #[arg(long, value_enum, default_value_t = ConventionArg::Graded)]
        convention: ConventionArg,
    },
    /// Nullity table over the catalog and a fixed set of δ values.
    Report {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, env = "SUPERDER_MAX_DIM")]
        max_dim: Option<usize>,
    },
}

/// Text written to `--out` (or standard output), plus named sidecar files.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub main: String,
    pub sidecars: Vec<(String, String)>,
}

impl Output {
    fn text(main: String) -> Self {
        Output { main, sidecars: Vec::new() }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

/// Resolves an algebra argument: an existing file in the JSON algebra
/// format, or else a family spec string.
fn load(input: &str) -> Result<(SuperAlgebra, Option<Construction>), CliError> {
    let path = Path::new(input);
    if path.exists() {
        let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{input}: {e}")))?;
        let algebra = SuperAlgebra::from_json(&text).map_err(|e| match e {
            JsonError::Syntax(_) => CliError::Parse(format!("{input}: {e}")),
            JsonError::Invalid(_) => CliError::Domain(format!("{input}: {e}")),
        })?;
        return Ok((algebra, None));
    }
    let spec: FamilySpec = input.parse().map_err(|e: CatalogError| match e {
        CatalogError::Parse(_) => CliError::Parse(format!("{input} is neither a readable file nor a family spec: {e}")),
        other => other.into(),
    })?;
    let c = construct(&spec)?;
    Ok((c.algebra.clone(), Some(c)))
}

fn require_json(format: Format, command: &str) -> Result<(), CliError> {
    match format {
        Format::Json => Ok(()),
        Format::Csv => Err(CliError::Parse(format!("{command} emits JSON only; csv is available for report"))),
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Construct { spec } => {
            require_json(cli.format, "construct")?;
            let spec: FamilySpec = spec.parse()?;
            let c = construct(&spec)?;
            Ok(Output { main: c.algebra.to_json() + "\n", sidecars: vec![("labels".into(), c.labels_json() + "\n")] })
        }
        Command::Jacobi { input } => {
            require_json(cli.format, "jacobi")?;
            let (a, _) = load(input)?;
            let report = check_superidentities(&a);
            if report.is_ok() {
                Ok(Output::text("ok\n".into()))
            } else {
                Err(CliError::Domain(format!(
                    "not a Lie superalgebra: {}",
                    serde_json::to_string(&report.violations).expect("serializable")
                )))
            }
        }
        Command::Roots { input, cartan } => {
            require_json(cli.format, "roots")?;
            let (a, c) = load(input)?;
            let cartan = cartan
                .clone()
                .or_else(|| c.map(|c| c.cartan))
                .unwrap_or_else(|| diagonal_cartan(&a));
            let rd = root_decompose(&a, &cartan).map_err(|e| CliError::Domain(e.to_string()))?;
            let report = verify_root_axioms(&a, &rd);
            let roots: Vec<Value> = rd
                .roots
                .iter()
                .map(|r| json!({ "functional": r.functional, "parity": r.parity.bit(), "dim": r.space.dim() }))
                .collect();
            let root_axioms = if report.is_ok() { json!("ok") } else { json!(report.violations) };
            Ok(Output::text(to_json(&json!({ "cartan_dim": cartan.len(), "roots": roots, "root_axioms": root_axioms }))))
        }
        Command::Derive { input, delta, convention } => {
            require_json(cli.format, "derive")?;
            let delta: Rational = delta.parse().map_err(|e| CliError::Parse(format!("--delta: {e}")))?;
            let (a, _) = load(input)?;
            let space = derivation_space_with(&a, &delta, (*convention).into());
            let an = analyze_space(&a, &space);
            Ok(Output::text(to_json(&json!({
                "delta": space.delta,
                "nullity": space.nullity(),
                "basis": space.basis,
                "analysis": {
                    "grading_preserving": an.grading_preserving,
                    "scalar_line": an.scalar_line,
                    "inner_dim": an.inner_dim,
                },
            }))))
        }
        Command::Scan { input, convention } => {
            require_json(cli.format, "scan")?;
            let (a, _) = load(input)?;
            Ok(Output::text(to_json(&critical_deltas_with(&a, (*convention).into()))))
        }
        Command::Report { seed, jobs, max_dim } => {
            if *jobs == 0 {
                return Err(CliError::Parse("--jobs must be positive".into()));
            }
            let rows = report::run_report(*seed, *jobs, *max_dim)?;
            Ok(Output::text(match cli.format {
                Format::Csv => report::to_csv(&rows),
                Format::Json => to_json(&rows),
            }))
        }
    }
}

/// Path of a sidecar next to `out`: `a10.json` → `a10.json.labels.json`.
pub fn sidecar_path(out: &Path, name: &str) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(format!(".{name}.json"));
    PathBuf::from(s)
}
