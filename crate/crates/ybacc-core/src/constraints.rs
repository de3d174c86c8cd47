//! The polynomial constraint system equivalent to the braid relation.
//!
//! For a charge-conserving braid-form operator, the 27x27 braid anomaly
//! has 129 nonzero entries which, up to sign, repeat exactly 109 distinct
//! homogeneous cubic polynomials in the 19 parameters. Those 109 equations
//! are stored once as a data table ([`EQUATIONS`]) of signed monomials and
//! evaluated by interpretation — no symbolic engine at runtime.
//!
//! The headline property, audited by [`anomaly_equivalence_check`] and by
//! the acceptance suite over large seeded samples, is that for ACC-shaped
//! input the system and the anomaly vanish together:
//!
//! ```text
//! max_i |E_i(p)| <= tol * scale(p)   <=>   max_abs(braid_anomaly(Rcheck(p))) <= tol * scale(p)
//! ```
//!
//! with the shared cubic scale `scale(p) = max_abs(p)^3` (matrix max-entry
//! and parameter max-magnitude coincide for assembled operators).

use serde_json::json;

use crate::acc::{assemble_check_r, braid_anomaly, AccParams, BasisOrdering, PARAM_NAMES};
use crate::C64;

mod table {
    include!("constraint_table.rs");
}

pub use table::{Equation, Term, EQUATIONS};

/// Number of equations in the system.
pub const EQUATION_COUNT: usize = 109;

/// Evaluate one equation at a parameter point.
pub fn eval_equation(eq: &Equation, params: &[C64; 19]) -> C64 {
    let mut acc = C64::new(0.0, 0.0);
    for term in eq.terms {
        let mut prod = C64::new(term.coeff, 0.0);
        for &(idx, pow) in term.factors {
            for _ in 0..pow {
                prod *= params[idx];
            }
        }
        acc += prod;
    }
    acc
}

/// Total degree of an equation (max over its monomials; the table is
/// homogeneous, so this is also every monomial's degree).
pub fn equation_degree(eq: &Equation) -> u32 {
    eq.terms
        .iter()
        .map(|t| t.factors.iter().map(|&(_, p)| p).sum())
        .max()
        .unwrap_or(0)
}

/// Residuals of all 109 equations at a parameter point, in table order.
pub fn constraint_residuals(params: &AccParams) -> Vec<C64> {
    let arr = params.as_array();
    EQUATIONS.iter().map(|eq| eval_equation(eq, &arr)).collect()
}

/// Largest residual magnitude over the whole system.
pub fn max_residual(params: &AccParams) -> f64 {
    let arr = params.as_array();
    EQUATIONS
        .iter()
        .map(|eq| eval_equation(eq, &arr).norm())
        .fold(0.0, f64::max)
}

/// Cubic tolerance scale shared by the constraint system and the anomaly:
/// `max_abs(params)^3`.
pub fn constraint_scale(params: &AccParams) -> f64 {
    params.max_abs().powi(3)
}

/// Labels of equations whose residual magnitude exceeds `tol * scale`.
/// Empty exactly when the parameter point solves the whole system.
pub fn violated_equations(params: &AccParams, tol: f64) -> Vec<&'static str> {
    let arr = params.as_array();
    let bound = tol * constraint_scale(params);
    EQUATIONS
        .iter()
        .filter(|eq| eval_equation(eq, &arr).norm() > bound)
        .map(|eq| eq.label)
        .collect()
}

/// Outcome of one constraints-vs-anomaly comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquivalenceReport {
    /// Largest constraint residual over `scale`.
    pub max_constraint_rel: f64,
    /// Largest anomaly entry over `scale` (same cubic scale).
    pub max_anomaly_rel: f64,
    /// `max_constraint_rel <= tol`.
    pub constraints_vanish: bool,
    /// `max_anomaly_rel <= tol`.
    pub anomaly_vanishes: bool,
    /// The two verdicts agree (the invariant the system is audited for).
    pub agree: bool,
}

/// Evaluate both sides of the equivalence at one parameter point: the
/// interpreted constraint system and the assembled operator's braid
/// anomaly, each compared against `tol * max_abs(params)^3`.
pub fn anomaly_equivalence_check(params: &AccParams, tol: f64) -> EquivalenceReport {
    let scale = constraint_scale(params);
    let rcheck = assemble_check_r(params, BasisOrdering::Rlex);
    let anomaly = braid_anomaly(&rcheck).expect("9x9 assembly");
    let (c_rel, a_rel) = if scale == 0.0 {
        (0.0, 0.0)
    } else {
        (max_residual(params) / scale, anomaly.max_abs() / scale)
    };
    let constraints_vanish = c_rel <= tol;
    let anomaly_vanishes = a_rel <= tol;
    EquivalenceReport {
        max_constraint_rel: c_rel,
        max_anomaly_rel: a_rel,
        constraints_vanish,
        anomaly_vanishes,
        agree: constraints_vanish == anomaly_vanishes,
    }
}

/// Machine-readable export of the whole table: for each label, a list of
/// `[coefficient, [[param_name, power], ...]]` monomials. Stable order
/// (table order; monomials in stored order).
pub fn table_export() -> serde_json::Value {
    let eqs: Vec<serde_json::Value> = EQUATIONS
        .iter()
        .map(|eq| {
            let terms: Vec<serde_json::Value> = eq
                .terms
                .iter()
                .map(|t| {
                    let factors: Vec<serde_json::Value> = t
                        .factors
                        .iter()
                        .map(|&(idx, pow)| json!([PARAM_NAMES[idx], pow]))
                        .collect();
                    json!([t.coeff, factors])
                })
                .collect();
            json!({ "label": eq.label, "degree": equation_degree(eq), "terms": terms })
        })
        .collect();
    json!({ "parameters": PARAM_NAMES, "equations": eqs })
}
