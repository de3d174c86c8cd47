//! Serializable report bodies for every subcommand.
//!
//! Reports are plain data with a deterministic layout: struct fields
//! serialize in declaration order, all maps are `BTreeMap`s, complex
//! values are rendered in the literal syntax accepted by
//! [`ybacc_core::io::parse_complex`], and floating-point payloads go
//! through `serde_json`'s shortest round-trip printer. Two runs with the
//! same inputs therefore produce byte-identical bodies — except for the
//! optional `wall_time_ms` field, which [`strip_wall_time`] removes
//! before comparisons.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use ybacc_core::io::format_complex;
use ybacc_core::C64;

/// Render a complex value for a report field.
pub fn complex_literal(z: C64) -> String {
    format_complex(z)
}

/// Instance parameters as complex/discrete literals, split the same way
/// the catalog splits them, plus solved quantities (`derived`).
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct ParameterBlock {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub continuous: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub discrete: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub derived: BTreeMap<String, String>,
}

/// The three headline residuals, all relative to the shared cubic scale
/// `max_abs(parameters)^3`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Residuals {
    pub anomaly_max: f64,
    pub ybe_max: f64,
    pub constraint_max: f64,
}

/// One certified eigenvalue. `certificate_residual` is the relative
/// residual of the joint annihilating product over the whole spectrum
/// (Cayley-Hamilton form); it is the certificate for every row, so all
/// rows of one report carry the same value.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub value: String,
    pub multiplicity: usize,
    pub certificate_residual: f64,
}

/// Certified Hecke data of a two-eigenvalue operator.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HeckeBlock {
    pub q: String,
    pub lambda2: String,
    pub alpha: String,
    pub multiplicity: usize,
    pub minimal_poly_residual: f64,
    /// Relative norm of the three-site Temperley-Lieb obstruction; zero
    /// exactly for the families on the Temperley-Lieb quotient.
    pub tl_residual: f64,
    /// Loop parameter `delta = v u` of the rank-one factorization; only
    /// present when `rcheck - 1` has rank one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub loop_parameter: Option<String>,
}

/// One partition row of a level table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PartitionRow {
    pub partition: Vec<usize>,
    pub multiplicity: u64,
}

/// One level of the tower multiplicity table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LevelRow {
    pub level: usize,
    pub multiplicities: Vec<PartitionRow>,
    /// `3^level`; equals the multiplicity-weighted dimension sum exactly.
    pub dimension: u64,
    pub t1_residual: f64,
}

/// Tower multiplicities plus the one-row sequence they all shift from.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultiplicityBlock {
    pub lambda2: String,
    pub q: String,
    /// Trivial-representation multiplicities by level: `1, 3, 8, 21, 55,
    /// ...` for the generic family — the bisected Fibonacci numbers
    /// (OEIS A001906).
    pub sequence: Vec<u64>,
    /// Whether `sequence` satisfies `s[j] = 3 s[j-1] - s[j-2]`.
    pub recurrence_ok: bool,
    pub levels: Vec<LevelRow>,
}

/// Full verification report for one instance (`verify` and `hecke`).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub family: String,
    pub parameters: ParameterBlock,
    pub residuals: Residuals,
    pub spectrum: Vec<SpectrumRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hecke: Option<HeckeBlock>,
    /// Why the Hecke block is absent, when extraction was attempted and
    /// failed (e.g. three distinct eigenvalues).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hecke_error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplicities: Option<MultiplicityBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplicity_error: Option<String>,
    /// Rank of the assembled operator (9 = invertible).
    pub rank: usize,
    /// Whether every off-pattern entry is numerically zero.
    pub shape_ok: bool,
    /// Labels of constraints exceeding the tolerance (empty on pass).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub violated: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum_error: Option<String>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

/// One instance of a sweep.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepRow {
    pub index: usize,
    pub seed: u64,
    pub pass: bool,
    pub anomaly_max: f64,
    pub ybe_max: f64,
    pub constraint_max: f64,
    pub certificate_residual: f64,
    /// Drawn parameter values (continuous as complex literals, discrete
    /// verbatim), for reproducing individual instances.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub parameters: BTreeMap<String, String>,
}

/// Seeded-sweep report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepReport {
    pub family: String,
    pub count: usize,
    pub base_seed: u64,
    pub tolerance: f64,
    pub passes: usize,
    /// Indices of failing instances (empty on pass).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<usize>,
    pub instances: Vec<SweepRow>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

/// One distinct orbit element.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrbitElementRow {
    /// First word reaching this element, as a compact string over
    /// `T`/`L`/`Z` (empty string = the input itself).
    pub word: String,
    pub anomaly_max: f64,
    pub constraint_max: f64,
}

/// Symmetry-orbit report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrbitReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub parameters: ParameterBlock,
    pub tolerance: f64,
    /// Number of words applied (always 8: the subsets of `{T, L, Z}`).
    pub words_applied: usize,
    /// Distinct images modulo scaling.
    pub distinct: usize,
    pub elements: Vec<OrbitElementRow>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

/// One discrete parameter in a catalog listing.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiscreteRow {
    pub name: String,
    pub values: Vec<String>,
}

/// One catalog family in a listing.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyRow {
    pub name: String,
    /// `continuous/discrete` free-parameter counts, e.g. `3/1`. The
    /// case-1 quadratic-branch choice is a root selection, not a free
    /// parameter, so it is not counted here.
    pub free_parameters: String,
    pub continuous: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub discrete: Vec<DiscreteRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub xpattern: Vec<String>,
    pub spectrum: String,
    pub form: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
    pub fixture: bool,
}

/// A classification branch with no invertible solutions.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EmptyBranchRow {
    pub name: String,
    pub condition: String,
    pub reason: String,
}

/// Catalog listing.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ListReport {
    pub families: Vec<FamilyRow>,
    pub empty_branches: Vec<EmptyBranchRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

/// One evaluated constraint.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConstraintRow {
    pub label: String,
    /// `|E(p)|`.
    pub residual: f64,
    /// `|E(p)| / max_abs(p)^3`.
    pub relative: f64,
}

/// Constraint-table evaluation report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConstraintsReport {
    /// `"params"` or `"matrix"`, depending on the input file.
    pub source: String,
    /// Basis ordering used to read a matrix input.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ordering: Option<String>,
    /// The cubic scale `max_abs(p)^3`.
    pub scale: f64,
    pub tolerance: f64,
    pub max_relative: f64,
    /// Number of constraints above tolerance.
    pub violated: usize,
    /// All 109 rows, sorted by descending residual (table order on ties).
    pub residuals: Vec<ConstraintRow>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

/// Remove every `wall_time_ms` field, recursively. Stripped bodies of
/// repeated runs with identical inputs compare byte-for-byte equal.
pub fn strip_wall_time(value: &mut serde_json::Value) {
    match value {
        serde_json::Value::Object(map) => {
            map.remove("wall_time_ms");
            for v in map.values_mut() {
                strip_wall_time(v);
            }
        }
        serde_json::Value::Array(items) => {
            for v in items {
                strip_wall_time(v);
            }
        }
        _ => {}
    }
}

/// Parse a JSON report and return its canonical body: `wall_time_ms`
/// stripped, then re-serialized pretty. Intended for byte-identity
/// comparisons in tests and pipelines.
pub fn canonical_body(text: &str) -> Result<String, serde_json::Error> {
    let mut value: serde_json::Value = serde_json::from_str(text)?;
    strip_wall_time(&mut value);
    serde_json::to_string_pretty(&value)
}
