//! `ybacc` — command-line verifier for charge-conserving Yang-Baxter
//! operators in dimension three.
//!
//! Thin shell over [`ybacc_core`]: this crate owns argument parsing,
//! report serialization and exit-code policy. Six subcommands:
//!
//! | command       | does                                                        |
//! |---------------|-------------------------------------------------------------|
//! | `list`        | the solution catalog, with the no-solution branches         |
//! | `verify`      | one instance end to end (anomaly, constraints, spectrum)    |
//! | `sweep`       | many seeded instances of one family, in parallel            |
//! | `orbit`       | the symmetry orbit of an instance or a generic operator     |
//! | `hecke`       | Hecke certification plus the tower multiplicity table       |
//! | `constraints` | all 109 cubic constraints on a parameter or matrix file     |
//!
//! Exit codes: `0` ran and passed, `1` ran and a verification failed (the
//! report says where), `2` the input was unusable (a structured
//! `{"error": {...}}` document says why). The process never panics on
//! input; reports are deterministic given the same arguments, except for
//! the `wall_time_ms` field ([`report::strip_wall_time`]).

pub mod commands;
pub mod report;

use std::ffi::OsString;

use clap::{Parser, Subcommand};

/// What a finished run prints and how it exits.
#[derive(Debug, Clone)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

/// An unusable-input error: exit code 2, structured document on stdout.
#[derive(Debug, Clone)]
pub struct CliError {
    /// Coarse machine-readable class: `usage`, `catalog`, `io`, `file`,
    /// `json`, `shape` or `internal`.
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { kind: "usage", message: message.into() }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        CliError { kind: "internal", message: message.into() }
    }

    /// The `{"error": {...}}` document printed on exit code 2.
    pub fn document(&self) -> String {
        serde_json::to_string_pretty(&serde_json::json!({
            "error": { "kind": self.kind, "message": self.message }
        }))
        .unwrap_or_else(|_| {
            r#"{"error":{"kind":"internal","message":"unserializable error"}}"#.to_string()
        })
    }
}

impl From<ybacc_core::catalog::CatalogError> for CliError {
    fn from(e: ybacc_core::catalog::CatalogError) -> Self {
        CliError { kind: "catalog", message: e.to_string() }
    }
}

impl From<ybacc_core::io::IoError> for CliError {
    fn from(e: ybacc_core::io::IoError) -> Self {
        CliError { kind: "io", message: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError { kind: "file", message: e.to_string() }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError { kind: "json", message: e.to_string() }
    }
}

/// Output format of a subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// Full report as pretty-printed JSON (the primary format).
    Json,
    /// Flattened per-row CSV (headline numbers only).
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "ybacc",
    version,
    about = "Verify charge-conserving Yang-Baxter operators in dimension three",
    color = clap::ColorChoice::Never
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the catalog: families, parameters, spectra, empty branches.
    List(ListArgs),
    /// Verify one instance end to end (anomaly, constraints, spectrum).
    Verify(VerifyArgs),
    /// Verify many seeded instances of one family, in parallel.
    Sweep(SweepArgs),
    /// Enumerate the symmetry orbit of an operator, modulo scaling.
    Orbit(OrbitArgs),
    /// Certify the Hecke relation and the tower multiplicity table.
    Hecke(HeckeArgs),
    /// Evaluate all 109 cubic constraints on a parameter or matrix file.
    Constraints(ConstraintsArgs),
}

#[derive(Debug, clap::Args)]
pub struct ListArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    /// Family name (see `ybacc list`).
    #[arg(long)]
    pub family: String,
    /// Parameter assignment `name=value`; repeat per parameter. Complex
    /// values use the literal syntax `1.5`, `-2`, `1+2i`, `0.5-0.25i`,
    /// `i`; discrete values are verbatim (`branch=plus`, `epsilon=-1`).
    #[arg(long = "param", value_name = "NAME=VALUE")]
    pub params: Vec<String>,
    /// Draw every parameter not given explicitly from this seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Relative tolerance for every residual and certificate.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, clap::Args)]
pub struct SweepArgs {
    /// Family name (see `ybacc list`).
    #[arg(long)]
    pub family: String,
    /// Number of seeded instances.
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    /// Base seed; instance `i` draws from seed `base + i`.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Relative tolerance for every residual and certificate.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, clap::Args)]
pub struct OrbitArgs {
    /// Catalog family; omit to orbit a generic (non-solution) operator
    /// drawn from --seed.
    #[arg(long)]
    pub family: Option<String>,
    /// Parameter assignment `name=value` (with --family only).
    #[arg(long = "param", value_name = "NAME=VALUE", requires = "family")]
    pub params: Vec<String>,
    /// Instance seed (with --family) or generic-draw seed (without).
    #[arg(long)]
    pub seed: Option<u64>,
    /// Relative tolerance for deduplication and the per-element checks.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, clap::Args)]
pub struct HeckeArgs {
    /// Family name (see `ybacc list`).
    #[arg(long)]
    pub family: String,
    /// Parameter assignment `name=value`; repeat per parameter.
    #[arg(long = "param", value_name = "NAME=VALUE")]
    pub params: Vec<String>,
    /// Seed for every parameter not given explicitly. The certified
    /// tables are integers and locally constant, so any generic draw
    /// produces the family's table.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest tower level to certify.
    #[arg(long = "n-max", default_value_t = 5, value_parser = clap::value_parser!(u8).range(2..=6))]
    pub n_max: u8,
    /// Relative tolerance for every residual and certificate.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, clap::Args)]
pub struct ConstraintsArgs {
    /// Parameter file (fields `a1`..`x4` as `[re, im]` pairs) or matrix
    /// file (fields `ordering`, `side`, `entries`); detected by shape.
    pub file: std::path::PathBuf,
    /// Override the basis-ordering tag of a matrix input (lex, rlex,
    /// grlex).
    #[arg(long)]
    pub ordering: Option<String>,
    /// Relative tolerance for the pass verdict.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

/// Parse arguments and run the selected command. Never panics on input;
/// every failure maps to an [`Output`] with the appropriate exit code.
pub fn run_from<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                Output { stdout: rendered.trim_end().to_string(), code: 0 }
            } else {
                Output {
                    stdout: CliError::usage(rendered.trim_end().to_string()).document(),
                    code: 2,
                }
            };
        }
    };
    let result = match &cli.command {
        Command::List(args) => commands::cmd_list(args),
        Command::Verify(args) => commands::cmd_verify(args),
        Command::Sweep(args) => commands::cmd_sweep(args),
        Command::Orbit(args) => commands::cmd_orbit(args),
        Command::Hecke(args) => commands::cmd_hecke(args),
        Command::Constraints(args) => commands::cmd_constraints(args),
    };
    match result {
        Ok(out) => out,
        Err(e) => Output { stdout: e.document(), code: 2 },
    }
}
