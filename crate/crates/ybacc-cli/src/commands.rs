//! Implementations of the six subcommands.
//!
//! Every command returns `Ok(Output)` when it ran to completion — `pass`
//! in the report decides between exit codes 0 and 1 — and `Err(CliError)`
//! (exit code 2) only when the *input* was unusable: unknown family or
//! parameter, malformed value, unreadable file. Mathematical failures are
//! never errors; they are reported, quantified, with exit code 1.

use std::collections::BTreeMap;
use std::time::Instant;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use ybacc_core::acc::{
    assemble_check_r, braid_anomaly, extract_params, BasisOrdering, PARAM_NAMES,
};
use ybacc_core::catalog::{
    case1_params_with_b, empty_branches, expected_spectrum, instantiate, random_instance,
    random_params, verify_assembled, verify_instance, CatalogError, FamilyId, FamilyInstance,
    ALL_FAMILIES,
};
use ybacc_core::constraints::{constraint_residuals, constraint_scale, max_residual, EQUATIONS};
use ybacc_core::hecke::{
    hecke_extract, loop_parameter, multiplicity_table, tl_projector_residual,
};
use ybacc_core::io::{parse_complex, MatrixFile, ParamFile};
use ybacc_core::symmetry::{orbit, Orbit, SymmetryWord};
use ybacc_core::C64;

use crate::report::{
    complex_literal, ConstraintRow, ConstraintsReport, DiscreteRow, EmptyBranchRow, FamilyRow,
    HeckeBlock, LevelRow, ListReport, MultiplicityBlock, OrbitElementRow, OrbitReport,
    ParameterBlock, PartitionRow, Residuals, SpectrumRow, SweepReport, SweepRow,
    VerificationReport,
};
use crate::{
    CliError, ConstraintsArgs, Format, HeckeArgs, ListArgs, OrbitArgs, Output, SweepArgs,
    VerifyArgs,
};

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn json_out<T: serde::Serialize>(report: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(report).map_err(|e| CliError::internal(e.to_string()))
}

/// Shortest round-trip rendering for CSV cells, matching the JSON bodies.
fn num(x: f64) -> String {
    serde_json::to_string(&x).unwrap_or_else(|_| x.to_string())
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn parse_family(name: &str) -> Result<FamilyId, CliError> {
    FamilyId::parse(name)
        .ok_or_else(|| CatalogError::UnknownFamily { name: name.to_string() }.into())
}

fn split_param(raw: &str) -> Result<(&str, &str), CliError> {
    raw.split_once('=')
        .ok_or_else(|| CliError::usage(format!("--param needs NAME=VALUE, got `{raw}`")))
}

fn parse_value(name: &str, value: &str) -> Result<C64, CliError> {
    parse_complex(value).map_err(|_| {
        CliError::usage(format!(
            "--param {name}: cannot parse `{value}` as a complex number \
             (examples: 1.5, -2, 1+2i, 0.5-0.25i, i)"
        ))
    })
}

/// Build an instance from `--family`, repeated `--param` assignments and
/// an optional seed for everything not given explicitly. Returns the
/// instance plus the case-1 `b` override, the one "parameter" that is
/// normally solved rather than chosen.
fn build_instance(
    family: &str,
    params: &[String],
    seed: Option<u64>,
) -> Result<(FamilyInstance, Option<C64>), CliError> {
    let id = parse_family(family)?;
    let info = id.info();
    let mut inst = match seed {
        Some(s) => random_instance(id, s),
        None => FamilyInstance { id, continuous: BTreeMap::new(), discrete: BTreeMap::new() },
    };
    let mut b_override = None;
    for raw in params {
        let (name, value) = split_param(raw)?;
        if info.continuous.contains(&name) {
            inst.continuous.insert(name.to_string(), parse_value(name, value)?);
        } else if info.discrete.iter().any(|d| d.name == name) {
            inst.discrete.insert(name.to_string(), value.to_string());
        } else if id == FamilyId::Case1 && name == "b" {
            b_override = Some(parse_value(name, value)?);
        } else {
            return Err(CatalogError::UnknownParameter {
                family: info.name,
                name: name.to_string(),
            }
            .into());
        }
    }
    Ok((inst, b_override))
}

fn parameter_block(inst: &FamilyInstance, derived: &BTreeMap<String, C64>) -> ParameterBlock {
    ParameterBlock {
        continuous: inst
            .continuous
            .iter()
            .map(|(k, &v)| (k.clone(), complex_literal(v)))
            .collect(),
        discrete: inst.discrete.clone(),
        derived: derived.iter().map(|(k, &v)| (k.clone(), complex_literal(v))).collect(),
    }
}

/// Run the full verification battery and assemble the report body.
///
/// With a case-1 `b` override the operator is assembled from the given
/// `b` instead of the quadratic root, while the spectrum template and the
/// solved values still describe the exact solution — so an off-root `b`
/// fails with the anomaly and certificate quantifying how far off it is.
/// `n_max` additionally requests the tower multiplicity table.
fn verify_report(
    inst: &FamilyInstance,
    b_override: Option<C64>,
    seed: Option<u64>,
    tol: f64,
    n_max: Option<usize>,
) -> Result<VerificationReport, CliError> {
    let instantiated = instantiate(inst)?;
    let template = expected_spectrum(inst)?;
    let (params, derived) = match b_override {
        None => (instantiated.params, instantiated.derived),
        Some(b) => {
            let need = |name: &str| {
                inst.continuous
                    .get(name)
                    .copied()
                    .ok_or_else(|| CliError::internal(format!("case1 instance lost `{name}`")))
            };
            let params = case1_params_with_b(need("a")?, need("x1")?, need("x3")?, b)?;
            let mut derived = instantiated.derived;
            if let Some(&solved) = derived.get("b") {
                if solved != b {
                    derived.insert("b_solved".to_string(), solved);
                }
            }
            derived.insert("b".to_string(), b);
            (params, derived)
        }
    };
    let outcome = verify_assembled(inst.id, &params, &template, derived, tol);
    let rcheck = assemble_check_r(&params, BasisOrdering::Rlex);

    let (hecke, hecke_error) = match hecke_extract(&rcheck, tol) {
        Ok(h) => {
            let tl = tl_projector_residual(&rcheck, 3)
                .map_err(|e| CliError::internal(e.to_string()))?;
            let block = HeckeBlock {
                q: complex_literal(h.q),
                lambda2: complex_literal(h.lambda2),
                alpha: complex_literal(h.alpha),
                multiplicity: h.multiplicity,
                minimal_poly_residual: h.minimal_poly_residual,
                tl_residual: tl,
                loop_parameter: loop_parameter(&rcheck, tol).ok().map(complex_literal),
            };
            (Some(block), None)
        }
        Err(e) => (None, Some(e.to_string())),
    };

    let (multiplicities, multiplicity_error) = match n_max {
        None => (None, None),
        Some(n) => match multiplicity_table(&rcheck, n, tol) {
            Ok(table) => {
                let seq = table.sym_sequence.clone();
                let recurrence_ok = seq.len() >= 3
                    && (2..seq.len())
                        .all(|j| seq[j] as i128 == 3 * seq[j - 1] as i128 - seq[j - 2] as i128);
                let levels = table
                    .levels
                    .iter()
                    .map(|lvl| LevelRow {
                        level: lvl.level,
                        multiplicities: lvl
                            .multiplicities
                            .iter()
                            .map(|(p, m)| PartitionRow { partition: p.clone(), multiplicity: *m })
                            .collect(),
                        dimension: 3u64.pow(lvl.level as u32),
                        t1_residual: lvl.t1_residual,
                    })
                    .collect();
                let block = MultiplicityBlock {
                    lambda2: complex_literal(table.lambda2),
                    q: complex_literal(table.q),
                    sequence: seq,
                    recurrence_ok,
                    levels,
                };
                (Some(block), None)
            }
            Err(e) => (None, Some(e.to_string())),
        },
    };

    Ok(VerificationReport {
        family: inst.id.as_str().to_string(),
        parameters: parameter_block(inst, &outcome.derived),
        residuals: Residuals {
            anomaly_max: outcome.anomaly_rel,
            ybe_max: outcome.ybe_rel,
            constraint_max: outcome.constraint_rel,
        },
        spectrum: outcome
            .spectrum
            .iter()
            .map(|&(v, m)| SpectrumRow {
                value: complex_literal(v),
                multiplicity: m,
                certificate_residual: outcome.certificate_rel,
            })
            .collect(),
        hecke,
        hecke_error,
        multiplicities,
        multiplicity_error,
        rank: outcome.rank,
        shape_ok: outcome.shape_ok,
        violated: outcome.violated.iter().map(|s| s.to_string()).collect(),
        spectrum_error: outcome.spectrum_error,
        pass: outcome.pass,
        seed,
        tolerance: tol,
        wall_time_ms: None,
    })
}

fn verify_csv(r: &VerificationReport) -> String {
    let cert = r.spectrum.first().map_or(0.0, |s| s.certificate_residual);
    let header = "family,pass,anomaly_max,ybe_max,constraint_max,certificate_residual,rank,tolerance,seed";
    let row = format!(
        "{},{},{},{},{},{},{},{},{}",
        r.family,
        r.pass,
        num(r.residuals.anomaly_max),
        num(r.residuals.ybe_max),
        num(r.residuals.constraint_max),
        num(cert),
        r.rank,
        num(r.tolerance),
        r.seed.map_or_else(String::new, |s| s.to_string()),
    );
    format!("{header}\n{row}")
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Output, CliError> {
    let start = Instant::now();
    let (inst, b_override) = build_instance(&args.family, &args.params, args.seed)?;
    let mut report = verify_report(&inst, b_override, args.seed, args.tol, None)?;
    report.wall_time_ms = Some(ms(start));
    let stdout = match args.format {
        Format::Json => json_out(&report)?,
        Format::Csv => verify_csv(&report),
    };
    Ok(Output { stdout, code: i32::from(!report.pass) })
}

fn hecke_csv(r: &VerificationReport) -> String {
    let mut lines = vec!["level,partition,multiplicity".to_string()];
    if let Some(block) = &r.multiplicities {
        for lvl in &block.levels {
            for row in &lvl.multiplicities {
                let partition = row
                    .partition
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join("+");
                lines.push(format!("{},{},{}", lvl.level, partition, row.multiplicity));
            }
        }
    }
    lines.join("\n")
}

pub fn cmd_hecke(args: &HeckeArgs) -> Result<Output, CliError> {
    let start = Instant::now();
    let (inst, b_override) = build_instance(&args.family, &args.params, Some(args.seed))?;
    if b_override.is_some() {
        return Err(CliError::usage("`b` overrides apply to `verify`, not `hecke`"));
    }
    let mut report = verify_report(
        &inst,
        None,
        Some(args.seed),
        args.tol,
        Some(usize::from(args.n_max)),
    )?;
    // For this command the verdict includes the Hecke machinery itself.
    report.pass = report.pass
        && report.hecke.is_some()
        && report.multiplicities.as_ref().is_some_and(|m| m.recurrence_ok);
    report.wall_time_ms = Some(ms(start));
    let stdout = match args.format {
        Format::Json => json_out(&report)?,
        Format::Csv => hecke_csv(&report),
    };
    Ok(Output { stdout, code: i32::from(!report.pass) })
}

fn sweep_one(id: FamilyId, base_seed: u64, index: usize, tol: f64) -> Result<SweepRow, CliError> {
    let seed = base_seed.wrapping_add(index as u64);
    let inst = random_instance(id, seed);
    let outcome = verify_instance(&inst, tol)?;
    let mut parameters: BTreeMap<String, String> = inst
        .continuous
        .iter()
        .map(|(k, &v)| (k.clone(), complex_literal(v)))
        .collect();
    for (k, v) in &inst.discrete {
        parameters.insert(k.clone(), v.clone());
    }
    Ok(SweepRow {
        index,
        seed,
        pass: outcome.pass,
        anomaly_max: outcome.anomaly_rel,
        ybe_max: outcome.ybe_rel,
        constraint_max: outcome.constraint_rel,
        certificate_residual: outcome.certificate_rel,
        parameters,
    })
}

/// Instance rows, in index order regardless of scheduling.
fn sweep_rows(
    id: FamilyId,
    base_seed: u64,
    count: usize,
    tol: f64,
) -> Result<Vec<SweepRow>, CliError> {
    #[cfg(feature = "parallel")]
    {
        (0..count)
            .into_par_iter()
            .map(|i| sweep_one(id, base_seed, i, tol))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..count).map(|i| sweep_one(id, base_seed, i, tol)).collect()
    }
}

fn sweep_csv(r: &SweepReport) -> String {
    let mut lines =
        vec!["index,seed,pass,anomaly_max,ybe_max,constraint_max,certificate_residual".to_string()];
    for row in &r.instances {
        lines.push(format!(
            "{},{},{},{},{},{},{}",
            row.index,
            row.seed,
            row.pass,
            num(row.anomaly_max),
            num(row.ybe_max),
            num(row.constraint_max),
            num(row.certificate_residual),
        ));
    }
    lines.join("\n")
}

pub fn cmd_sweep(args: &SweepArgs) -> Result<Output, CliError> {
    let start = Instant::now();
    let id = parse_family(&args.family)?;
    let instances = sweep_rows(id, args.seed, args.count, args.tol)?;
    let passes = instances.iter().filter(|r| r.pass).count();
    let failures: Vec<usize> = instances.iter().filter(|r| !r.pass).map(|r| r.index).collect();
    let pass = failures.is_empty();
    let mut report = SweepReport {
        family: id.as_str().to_string(),
        count: args.count,
        base_seed: args.seed,
        tolerance: args.tol,
        passes,
        failures,
        instances,
        pass,
        wall_time_ms: None,
    };
    report.wall_time_ms = Some(ms(start));
    let stdout = match args.format {
        Format::Json => json_out(&report)?,
        Format::Csv => sweep_csv(&report),
    };
    Ok(Output { stdout, code: i32::from(!report.pass) })
}

fn orbit_rows(orb: &Orbit) -> Result<Vec<OrbitElementRow>, CliError> {
    orb.elements
        .iter()
        .map(|el| {
            let anomaly =
                braid_anomaly(&el.matrix).map_err(|e| CliError::internal(e.to_string()))?;
            let p = extract_params(&el.matrix, BasisOrdering::Rlex)
                .map_err(|e| CliError::internal(e.to_string()))?;
            let scale = constraint_scale(&p).max(f64::MIN_POSITIVE);
            Ok(OrbitElementRow {
                word: SymmetryWord::new(el.word.clone()).to_compact(),
                anomaly_max: anomaly.max_abs() / scale,
                constraint_max: max_residual(&p) / scale,
            })
        })
        .collect()
}

fn orbit_csv(r: &OrbitReport) -> String {
    let mut lines = vec!["word,anomaly_max,constraint_max".to_string()];
    for el in &r.elements {
        lines.push(format!("{},{},{}", el.word, num(el.anomaly_max), num(el.constraint_max)));
    }
    lines.join("\n")
}

pub fn cmd_orbit(args: &OrbitArgs) -> Result<Output, CliError> {
    let start = Instant::now();
    let mut report = match &args.family {
        Some(family) => {
            let (inst, b_override) = build_instance(family, &args.params, args.seed)?;
            if b_override.is_some() {
                return Err(CliError::usage("`b` overrides apply to `verify`, not `orbit`"));
            }
            let instantiated = instantiate(&inst)?;
            let m = assemble_check_r(&instantiated.params, BasisOrdering::Rlex);
            let orb = orbit(&m, args.tol);
            let elements = orbit_rows(&orb)?;
            let pass = elements
                .iter()
                .all(|e| e.anomaly_max <= args.tol && e.constraint_max <= args.tol);
            OrbitReport {
                family: Some(inst.id.as_str().to_string()),
                parameters: parameter_block(&inst, &instantiated.derived),
                tolerance: args.tol,
                words_applied: orb.words_applied,
                distinct: orb.size(),
                elements,
                pass,
                seed: args.seed,
                wall_time_ms: None,
            }
        }
        None => {
            if !args.params.is_empty() {
                return Err(CliError::usage(
                    "--param requires --family; generic orbits take only --seed",
                ));
            }
            let seed = args.seed.unwrap_or(0);
            let params = random_params(seed);
            let m = assemble_check_r(&params, BasisOrdering::Rlex);
            let orb = orbit(&m, args.tol);
            let elements = orbit_rows(&orb)?;
            let continuous = PARAM_NAMES
                .iter()
                .zip(params.as_array())
                .map(|(&n, v)| (n.to_string(), complex_literal(v)))
                .collect();
            OrbitReport {
                family: None,
                parameters: ParameterBlock { continuous, ..Default::default() },
                tolerance: args.tol,
                words_applied: orb.words_applied,
                distinct: orb.size(),
                elements,
                // Nothing to verify for a generic operator: enumerating
                // the orbit is the whole job.
                pass: true,
                seed: Some(seed),
                wall_time_ms: None,
            }
        }
    };
    report.wall_time_ms = Some(ms(start));
    let stdout = match args.format {
        Format::Json => json_out(&report)?,
        Format::Csv => orbit_csv(&report),
    };
    Ok(Output { stdout, code: i32::from(!report.pass) })
}

fn list_csv(r: &ListReport) -> String {
    let mut lines =
        vec!["kind,name,free_parameters,continuous,discrete,xpattern,detail".to_string()];
    for f in &r.families {
        let kind = if f.fixture { "fixture" } else { "family" };
        let discrete = f
            .discrete
            .iter()
            .map(|d| format!("{}={}", d.name, d.values.join("|")))
            .collect::<Vec<_>>()
            .join(";");
        lines.push(format!(
            "{},{},{},{},{},{},{}",
            kind,
            f.name,
            f.free_parameters,
            f.continuous.join(";"),
            csv_field(&discrete),
            f.xpattern.join(";"),
            csv_field(&f.spectrum),
        ));
    }
    for b in &r.empty_branches {
        let detail = format!("{} -> {}", b.condition, b.reason);
        lines.push(format!("empty,{},,,,,{}", b.name, csv_field(&detail)));
    }
    lines.join("\n")
}

pub fn cmd_list(args: &ListArgs) -> Result<Output, CliError> {
    let start = Instant::now();
    let families = ALL_FAMILIES
        .iter()
        .map(|id| {
            let info = id.info();
            let discrete_count = info.discrete.iter().filter(|d| d.name != "branch").count();
            FamilyRow {
                name: info.name.to_string(),
                free_parameters: format!("{}/{}", info.continuous.len(), discrete_count),
                continuous: info.continuous.iter().map(|s| s.to_string()).collect(),
                discrete: info
                    .discrete
                    .iter()
                    .map(|d| DiscreteRow {
                        name: d.name.to_string(),
                        values: d.values.iter().map(|v| v.to_string()).collect(),
                    })
                    .collect(),
                xpattern: info.xpattern.iter().map(|s| s.to_string()).collect(),
                spectrum: info.spectrum.to_string(),
                form: info.form.to_string(),
                note: info.note.to_string(),
                fixture: id.is_fixture(),
            }
        })
        .collect();
    let empty = empty_branches()
        .iter()
        .map(|b| EmptyBranchRow {
            name: b.name.to_string(),
            condition: b.condition.to_string(),
            reason: b.reason.to_string(),
        })
        .collect();
    let mut report =
        ListReport { families, empty_branches: empty, wall_time_ms: None };
    report.wall_time_ms = Some(ms(start));
    let stdout = match args.format {
        Format::Json => json_out(&report)?,
        Format::Csv => list_csv(&report),
    };
    Ok(Output { stdout, code: 0 })
}

fn constraints_csv(r: &ConstraintsReport) -> String {
    let mut lines = vec!["label,residual,relative".to_string()];
    for row in &r.residuals {
        lines.push(format!("{},{},{}", row.label, num(row.residual), num(row.relative)));
    }
    lines.join("\n")
}

pub fn cmd_constraints(args: &ConstraintsArgs) -> Result<Output, CliError> {
    let start = Instant::now();
    let text = std::fs::read_to_string(&args.file)?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    let obj = value
        .as_object()
        .ok_or_else(|| CliError::usage("input must be a JSON object (parameter or matrix file)"))?;

    let (params, source, ordering) = if obj.contains_key("entries") {
        let mf: MatrixFile = serde_json::from_str(&text)?;
        let m = mf.to_matrix()?;
        let ord = match &args.ordering {
            Some(s) => BasisOrdering::parse(s).ok_or_else(|| {
                CliError::usage(format!("unknown ordering `{s}` (expected lex, rlex or grlex)"))
            })?,
            None => mf.ordering,
        };
        let p = extract_params(&m, ord)
            .map_err(|e| CliError { kind: "shape", message: e.to_string() })?;
        (p, "matrix", Some(ord.as_str().to_string()))
    } else if obj.contains_key("a1") {
        if args.ordering.is_some() {
            return Err(CliError::usage(
                "--ordering applies to matrix input only; parameter files are basis-free",
            ));
        }
        let pf: ParamFile = serde_json::from_str(&text)?;
        (pf.to_params()?, "params", None)
    } else {
        return Err(CliError::usage(
            "input must be a parameter file (fields a1..x4) or a matrix file \
             (fields ordering/side/entries)",
        ));
    };

    let scale = constraint_scale(&params);
    let values = constraint_residuals(&params);
    let mut residuals: Vec<ConstraintRow> = EQUATIONS
        .iter()
        .zip(&values)
        .map(|(eq, v)| {
            let abs = v.norm();
            ConstraintRow {
                label: eq.label.to_string(),
                residual: abs,
                relative: if scale > 0.0 { abs / scale } else { abs },
            }
        })
        .collect();
    residuals
        .sort_by(|a, b| b.residual.partial_cmp(&a.residual).unwrap_or(std::cmp::Ordering::Equal));
    let max_relative = residuals.iter().map(|r| r.relative).fold(0.0, f64::max);
    let violated = residuals.iter().filter(|r| r.relative > args.tol).count();
    let mut report = ConstraintsReport {
        source: source.to_string(),
        ordering,
        scale,
        tolerance: args.tol,
        max_relative,
        violated,
        residuals,
        pass: max_relative <= args.tol,
        wall_time_ms: None,
    };
    report.wall_time_ms = Some(ms(start));
    let stdout = match args.format {
        Format::Json => json_out(&report)?,
        Format::Csv => constraints_csv(&report),
    };
    Ok(Output { stdout, code: i32::from(!report.pass) })
}
