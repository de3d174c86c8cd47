//! The solution catalog: every known invertible charge-conserving braid
//! operator family in dimension three, with exact entries, domains,
//! expected spectra and seeded random instantiation.
//!
//! # Classification scheme
//!
//! Families are named by their branch in the classification tree, which
//! splits on the vanishing pattern of the off-diagonal charge-2 entries
//! `x1..x4` and then on the shape of the charge-1/charge-3 blocks:
//!
//! * `case1` — all of `x1 x2 x3 x4` nonzero (the generic family),
//! * `case3_*` — `x1 = x2 = 0`, `x3 x4 != 0`,
//! * `case5_*` — `x1 = x4 = 0`, `x2 x3 != 0`,
//! * `case6_*` — `x1 = x2 = x3 = 0`, `x4 != 0`.
//!
//! Branches of the tree that admit no invertible solution are recorded in
//! [`empty_branches`] so the catalog documents the full tree, and
//! subsumed branches (solutions that reappear inside another family, or
//! as symmetry images of one) carry a note in their family entry.
//!
//! Two fixtures round out the catalog for testing: the swap operator
//! (`fixture_p`) and the identity (`fixture_identity`).
//!
//! # Orientation
//!
//! All block data below describes the *braid form* `Rcheck` in the grlex
//! block structure `[1] [2x2] [3x3] [2x2] [1]` (charges 0..4); assembly
//! into any presentation goes through [`crate::acc::assemble_check_r`].

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::acc::{
    assemble_check_r, braid_anomaly, is_acc_shaped, to_r, ybe_residual, AccParams, BasisOrdering,
};
use crate::constraints::{constraint_scale, max_residual, violated_equations};
use crate::numerics::{annihilation_residual, multiplicities_from_traces, rank};
use crate::C64;

/// Absolute-ish tolerance for domain-boundary checks in [`instantiate`]
/// (relative to `max(1, |value|)`). Random sampling keeps a much larger
/// guard distance ([`EXCLUSION_RADIUS`]).
pub const DOMAIN_TOL: f64 = 1e-12;

/// Sampled parameters keep at least this modulus distance from every
/// excluded point of their family.
pub const EXCLUSION_RADIUS: f64 = 0.05;

/// Sampled instances are redrawn until all expected eigenvalues are
/// pairwise at least this far apart, so spectral certificates stay
/// well-posed.
pub const SPECTRUM_SEPARATION: f64 = 0.05;

/// Annulus for sampled continuous parameters: `0.2 <= |z| <= 5`.
pub const SAMPLE_MODULUS: (f64, f64) = (0.2, 5.0);

/// Principal primitive cube root of unity, `exp(2 pi i / 3)`.
pub fn omega_principal() -> C64 {
    C64::new(-0.5, 3f64.sqrt() / 2.0)
}

/// Identifier of a catalog family. String forms (used by the CLI and all
/// serialized artifacts) are lowercase: `case1`, `case3_1_1`, ...,
/// `fixture_identity`.
#[allow(non_camel_case_types)] // names mirror the classification labels
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyId {
    #[serde(rename = "case1")]
    Case1,
    #[serde(rename = "case3_1_1")]
    Case3_1_1,
    #[serde(rename = "case3_1_2")]
    Case3_1_2,
    #[serde(rename = "case5_2_1")]
    Case5_2_1,
    #[serde(rename = "case5_2_2")]
    Case5_2_2,
    #[serde(rename = "case5_4_a")]
    Case5_4_a,
    #[serde(rename = "case5_4_b")]
    Case5_4_b,
    #[serde(rename = "case5_5_1_1")]
    Case5_5_1_1,
    #[serde(rename = "case5_5_1_2")]
    Case5_5_1_2,
    #[serde(rename = "case5_7")]
    Case5_7,
    #[serde(rename = "case6_2_1")]
    Case6_2_1,
    #[serde(rename = "case6_2_1p")]
    Case6_2_1p,
    #[serde(rename = "case6_2_2")]
    Case6_2_2,
    #[serde(rename = "fixture_p")]
    FixtureP,
    #[serde(rename = "fixture_identity")]
    FixtureIdentity,
}

/// All catalog entries, solution families first, fixtures last.
pub const ALL_FAMILIES: [FamilyId; 15] = [
    FamilyId::Case1,
    FamilyId::Case3_1_1,
    FamilyId::Case3_1_2,
    FamilyId::Case5_2_1,
    FamilyId::Case5_2_2,
    FamilyId::Case5_4_a,
    FamilyId::Case5_4_b,
    FamilyId::Case5_5_1_1,
    FamilyId::Case5_5_1_2,
    FamilyId::Case5_7,
    FamilyId::Case6_2_1,
    FamilyId::Case6_2_1p,
    FamilyId::Case6_2_2,
    FamilyId::FixtureP,
    FamilyId::FixtureIdentity,
];

/// The 13 genuine solution families (no fixtures).
pub const SOLUTION_FAMILIES: [FamilyId; 13] = [
    FamilyId::Case1,
    FamilyId::Case3_1_1,
    FamilyId::Case3_1_2,
    FamilyId::Case5_2_1,
    FamilyId::Case5_2_2,
    FamilyId::Case5_4_a,
    FamilyId::Case5_4_b,
    FamilyId::Case5_5_1_1,
    FamilyId::Case5_5_1_2,
    FamilyId::Case5_7,
    FamilyId::Case6_2_1,
    FamilyId::Case6_2_1p,
    FamilyId::Case6_2_2,
];

impl FamilyId {
    pub fn as_str(&self) -> &'static str {
        self.info().name
    }

    pub fn parse(s: &str) -> Option<FamilyId> {
        ALL_FAMILIES.iter().copied().find(|f| f.info().name == s)
    }

    pub fn is_fixture(&self) -> bool {
        matches!(self, FamilyId::FixtureP | FamilyId::FixtureIdentity)
    }

    /// Static metadata for this family.
    pub fn info(&self) -> &'static FamilyInfo {
        &FAMILY_INFOS[ALL_FAMILIES.iter().position(|f| f == self).unwrap()]
    }
}

/// A discrete parameter: its name and allowed (canonical) values.
#[derive(Debug, Clone, Copy)]
pub struct DiscreteInfo {
    pub name: &'static str,
    pub values: &'static [&'static str],
}

/// Static description of one catalog entry.
#[derive(Debug, Clone, Copy)]
pub struct FamilyInfo {
    pub id: FamilyId,
    /// Canonical lowercase name, e.g. `case5_4_b`.
    pub name: &'static str,
    /// Continuous parameter names, in draw order.
    pub continuous: &'static [&'static str],
    /// Discrete parameters with their allowed values.
    pub discrete: &'static [DiscreteInfo],
    /// Excluded parameter values (beyond "nonzero"), per parameter.
    pub excluded: &'static [(&'static str, &'static [f64])],
    /// Structurally nonzero entries among `x1..x4`.
    pub xpattern: &'static [&'static str],
    /// Human-readable spectrum summary.
    pub spectrum: &'static str,
    /// Compact block-form sketch `[1][2x2][3x3][2x2][1]`.
    pub form: &'static str,
    /// Relations to other catalog entries, if any.
    pub note: &'static str,
}

const NO_EXCLUDED: &[(&str, &[f64])] = &[];

static FAMILY_INFOS: [FamilyInfo; 15] = [
    FamilyInfo {
        id: FamilyId::Case1,
        name: "case1",
        continuous: &["a", "x1", "x3"],
        discrete: &[DiscreteInfo { name: "branch", values: &["plus", "minus"] }],
        excluded: &[("a", &[0.0, 1.0])],
        xpattern: &["x1", "x2", "x3", "x4"],
        spectrum: "{1^8, lambda2^1}, lambda2 = -(x1 x3 / b)^2",
        form: "[1][I][full 3x3][I][1], b solved from a quadratic",
        note: "generic family; rank(Rcheck - I) = 1",
    },
    FamilyInfo {
        id: FamilyId::Case3_1_1,
        name: "case3_1_1",
        continuous: &["a", "c", "x4"],
        discrete: &[],
        excluded: &[("a", &[0.0, 1.0, -1.0])],
        xpattern: &["x3", "x4"],
        spectrum: "{1^5, (-a^2)^3, (a^3)^1}",
        form: "[1][[0,a^2/c],[c,1-a^2]][3x3][same 2x2][1]",
        note: "",
    },
    FamilyInfo {
        id: FamilyId::Case3_1_2,
        name: "case3_1_2",
        continuous: &["a", "c", "x4"],
        discrete: &[DiscreteInfo { name: "omega", values: &["omega", "omega2"] }],
        excluded: &[("a", &[0.0, 1.0])],
        xpattern: &["x3", "x4"],
        spectrum: "{1^3, (-omega a)^3, (omega a^2)^3}",
        form: "[1][[0,omega a/c],[c,1-omega a]][3x3][[0,a^2/c],[omega^2 a c,omega a(a-1)]][omega a^2]",
        note: "",
    },
    FamilyInfo {
        id: FamilyId::Case5_2_1,
        name: "case5_2_1",
        continuous: &["b", "c", "x3"],
        discrete: &[],
        excluded: NO_EXCLUDED,
        xpattern: &["x2", "x3"],
        spectrum: "{1^7, (-b c)^2}",
        form: "[1][I][3x3][[1-bc,b],[c,0]][1]",
        note: "absorbs the (alpha,delta') branch with b = c = 1",
    },
    FamilyInfo {
        id: FamilyId::Case5_2_2,
        name: "case5_2_2",
        continuous: &["b", "c", "x3"],
        discrete: &[],
        excluded: NO_EXCLUDED,
        xpattern: &["x2", "x3"],
        spectrum: "{1^6, (-b c)^3}",
        form: "[1][I][3x3][[1-bc,b],[c,0]][-bc]",
        note: "absorbs the (alpha,delta') branch with b = c = -1",
    },
    FamilyInfo {
        id: FamilyId::Case5_4_a,
        name: "case5_4_a",
        continuous: &["b", "c", "x3"],
        discrete: &[],
        excluded: NO_EXCLUDED,
        xpattern: &["x2", "x3"],
        spectrum: "{1^6, (-b c)^3}",
        form: "[1][[1-bc,b],[c,0]][3x3][same 2x2][1]",
        note: "",
    },
    FamilyInfo {
        id: FamilyId::Case5_4_b,
        name: "case5_4_b",
        continuous: &["b", "c", "x3"],
        discrete: &[],
        excluded: NO_EXCLUDED,
        xpattern: &["x2", "x3"],
        spectrum: "{1^5, (-b c)^4}",
        form: "[1][[1-bc,b],[c,0]][3x3, a2 = -bc][same 2x2][1]",
        note: "",
    },
    FamilyInfo {
        id: FamilyId::Case5_5_1_1,
        name: "case5_5_1_1",
        continuous: &["c", "x2"],
        discrete: &[DiscreteInfo { name: "omega", values: &["omega", "omega2"] }],
        excluded: NO_EXCLUDED,
        xpattern: &["x2", "x3"],
        spectrum: "{1^6, (-omega)^3}",
        form: "[1][[1-omega,omega/c],[c,0]][3x3][[0,omega^2/c],[omega^2 c,1-omega]][1]",
        note: "the a13 <-> d13 mirror branch is its 02-symmetry image",
    },
    FamilyInfo {
        id: FamilyId::Case5_5_1_2,
        name: "case5_5_1_2",
        continuous: &["c", "x2"],
        discrete: &[DiscreteInfo { name: "varsigma", values: &["i", "-i"] }],
        excluded: NO_EXCLUDED,
        xpattern: &["x2", "x3"],
        spectrum: "{1^5, varsigma^4}",
        form: "[1][[varsigma+1,-varsigma/c],[c,0]][3x3][[0,-1/c],[varsigma c,varsigma+1]][varsigma]",
        note: "",
    },
    FamilyInfo {
        id: FamilyId::Case5_7,
        name: "case5_7",
        continuous: &["b", "x2", "x3"],
        discrete: &[DiscreteInfo { name: "epsilon", values: &["+1", "-1"] }],
        excluded: NO_EXCLUDED,
        xpattern: &["x2", "x3"],
        spectrum: "{1^6, (-1)^3} for epsilon = +1; {1^5, (-1)^4} for epsilon = -1",
        form: "[1][[0,b],[1/b,0]][3x3][same 2x2][1]",
        note: "case6_2_1 is its transpose image at x2 = 0 (after renaming)",
    },
    FamilyInfo {
        id: FamilyId::Case6_2_1,
        name: "case6_2_1",
        continuous: &["c", "x4"],
        discrete: &[DiscreteInfo { name: "epsilon", values: &["+1", "-1"] }],
        excluded: NO_EXCLUDED,
        xpattern: &["x4"],
        spectrum: "{1^6, (-1)^3} for epsilon = +1; {1^5, (-1)^4} for epsilon = -1",
        form: "[1][[0,1/c],[c,0]][3x3][same 2x2][1]",
        note: "transpose image of case5_7 at x2 = 0 (after renaming)",
    },
    FamilyInfo {
        id: FamilyId::Case6_2_1p,
        name: "case6_2_1p",
        continuous: &["c", "x4"],
        discrete: &[DiscreteInfo { name: "omega", values: &["omega", "omega2"] }],
        excluded: NO_EXCLUDED,
        xpattern: &["x4"],
        spectrum: "{1^3, omega^3, (-1)^3}",
        form: "[1][[0,1/c],[c,0]][3x3, a2 = omega][[0,omega^2/c],[omega^2 c,omega-1]][omega]",
        note: "",
    },
    FamilyInfo {
        id: FamilyId::Case6_2_2,
        name: "case6_2_2",
        continuous: &["c", "x4"],
        discrete: &[DiscreteInfo { name: "omega", values: &["omega", "omega2"] }],
        excluded: NO_EXCLUDED,
        xpattern: &["x4"],
        spectrum: "{1^3, (omega^2)^3, (-omega^2)^3}",
        form: "[1][[0,1/(c omega)],[c,omega+2]][3x3][[0,1/c],[omega c,0]][omega^2]",
        note: "",
    },
    FamilyInfo {
        id: FamilyId::FixtureP,
        name: "fixture_p",
        continuous: &[],
        discrete: &[],
        excluded: NO_EXCLUDED,
        xpattern: &[],
        spectrum: "{1^6, (-1)^3}",
        form: "the swap operator P",
        note: "test fixture: satisfies the braid relation but is not Hecke-generic",
    },
    FamilyInfo {
        id: FamilyId::FixtureIdentity,
        name: "fixture_identity",
        continuous: &[],
        discrete: &[],
        excluded: NO_EXCLUDED,
        xpattern: &[],
        spectrum: "{1^9}",
        form: "the identity",
        note: "test fixture: degenerate spectrum",
    },
];

/// A classification branch with no invertible solutions, kept so the
/// catalog documents the complete tree.
#[derive(Debug, Clone, Copy)]
pub struct EmptyBranch {
    pub name: &'static str,
    pub condition: &'static str,
    pub reason: &'static str,
}

/// Branches of the classification tree that admit no invertible solution.
pub fn empty_branches() -> &'static [EmptyBranch] {
    &[
        EmptyBranch {
            name: "case2",
            condition: "x1 x3 != 0, x2 = 0, x4 free",
            reason: "forces a13 = 1 and d13 = 1 - a2 with a2 = 1 required, a contradiction",
        },
        EmptyBranch {
            name: "case4",
            condition: "x1 x3 != 0, x4 = 0, x2 != 0",
            reason: "forces d13 = 1 and a13 = 1 - a2 with a2 = 1 required, a contradiction",
        },
        EmptyBranch {
            name: "case3_2",
            condition: "x1 = x2 = 0, x3 x4 != 0, a12 d12 != 0, b12 = c12 = 0",
            reason: "forces a2 = 1, d13 = 0, then one cubic cannot vanish",
        },
        EmptyBranch {
            name: "case5_1",
            condition: "x2 x3 != 0, x1 = x4 = 0, both 2x2 blocks diagonal",
            reason: "the charge-2 block is forced singular",
        },
        EmptyBranch {
            name: "case5_3",
            condition: "x2 x3 != 0, x1 = x4 = 0, (alpha, delta') block pair",
            reason: "solutions exist but are the b = c = +-1 slices of case5_2_1 / case5_2_2",
        },
        EmptyBranch {
            name: "case5_6",
            condition: "x2 x3 != 0, x1 = x4 = 0, (beta, delta') block pair",
            reason: "forces a13 = d13 = 0, which contradicts a12 != 0",
        },
        EmptyBranch {
            name: "case5_5_2",
            condition: "x2 x3 != 0, x1 = x4 = 0, (beta, gamma') mirror branch",
            reason: "02-symmetry image of case5_5_1_*; no new solutions",
        },
        EmptyBranch {
            name: "case6_1",
            condition: "x4 != 0, x1 = x2 = x3 = 0, b12 = 0",
            reason: "forces a13 = a2 = d13 = 1, then one cubic cannot vanish",
        },
    ]
}

/// A point of a family: values for its continuous and discrete parameters.
/// The maps are ordered so serialization and iteration are deterministic.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyInstance {
    pub id: FamilyId,
    pub continuous: BTreeMap<String, C64>,
    pub discrete: BTreeMap<String, String>,
}

/// Errors from catalog operations (these map to CLI exit code 2: the
/// *input* is unusable, as opposed to a verification failure).
#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown family `{name}`")]
    UnknownFamily { name: String },
    #[error("family `{family}` does not take a parameter `{name}`")]
    UnknownParameter { family: &'static str, name: String },
    #[error("family `{family}` needs a value for `{name}`")]
    MissingParameter { family: &'static str, name: &'static str },
    #[error("family `{family}`: `{name}` = `{value}` is not one of {allowed:?}")]
    BadDiscreteValue {
        family: &'static str,
        name: &'static str,
        value: String,
        allowed: &'static [&'static str],
    },
    #[error("family `{family}`: parameter `{name}` = {value} violates the domain ({constraint})")]
    DomainViolation { family: &'static str, name: &'static str, value: C64, constraint: String },
    #[error("case1 is degenerate at a = {a} (a must avoid 0 and 1)")]
    DegenerateDomain { a: C64 },
}

/// Which root of the case-1 quadratic to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::Plus => "plus",
            Branch::Minus => "minus",
        }
    }

    pub fn parse(s: &str) -> Option<Branch> {
        match s {
            "plus" | "+" => Some(Branch::Plus),
            "minus" | "-" => Some(Branch::Minus),
            _ => None,
        }
    }
}

/// Solved data for a case-1 point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Case1Solution {
    /// The solved entry `b = x1 x3 beta`.
    pub b: C64,
    /// Root of `beta^2 a(a-1) + beta(a-1) + a = 0` picked by the branch.
    pub beta: C64,
    /// `gamma = 1/beta = x1 x3 / b`.
    pub gamma: C64,
    /// The non-unit eigenvalue `lambda2 = -gamma^2`.
    pub lambda2: C64,
    /// Discriminant of the quadratic (in the gamma normalization).
    pub discriminant: C64,
    /// Set when the two branches coincide (discriminant numerically zero);
    /// the returned root is still valid.
    pub double_root: bool,
}

/// Solve the case-1 quadratic for `b` given `(a, x1, x3)` and a branch.
///
/// `gamma = x1 x3 / b` satisfies `a gamma^2 + (a-1) gamma + a = 0`; the
/// branch picks the sign in front of the square root of
/// `disc = (a-1)^2 - 4 a^2 (a-1)`. Fails with
/// [`CatalogError::DegenerateDomain`] when `a` is (numerically) 0 or 1,
/// and with [`CatalogError::DomainViolation`] when `x1 x3 = 0` (then
/// `b = 0` and the operator entries blow up). A vanishing discriminant is
/// legal and only sets [`Case1Solution::double_root`].
pub fn case1_solve_b(a: C64, x1: C64, x3: C64, branch: Branch) -> Result<Case1Solution, CatalogError> {
    let one = C64::new(1.0, 0.0);
    let near = |z: C64, w: f64| (z - C64::new(w, 0.0)).norm() <= DOMAIN_TOL * z.norm().max(1.0);
    if near(a, 0.0) || near(a, 1.0) {
        return Err(CatalogError::DegenerateDomain { a });
    }
    for (name, v) in [("x1", x1), ("x3", x3)] {
        if v.norm() <= DOMAIN_TOL {
            return Err(CatalogError::DomainViolation {
                family: "case1",
                name,
                value: v,
                constraint: "must be nonzero".into(),
            });
        }
    }
    let disc = (a - one) * (a - one) - C64::new(4.0, 0.0) * a * a * (a - one);
    let disc_scale = a.norm().max(1.0).powi(3);
    let double_root = disc.norm() <= DOMAIN_TOL * disc_scale;
    let s = disc.sqrt();
    let gamma = match branch {
        Branch::Plus => (-(a - one) + s) / (C64::new(2.0, 0.0) * a),
        Branch::Minus => (-(a - one) - s) / (C64::new(2.0, 0.0) * a),
    };
    // gamma = 0 would need a = 0, which is excluded above.
    let beta = one / gamma;
    let b = x1 * x3 * beta;
    let lambda2 = -gamma * gamma;
    Ok(Case1Solution { b, beta, gamma, lambda2, discriminant: disc, double_root })
}

/// Assemble the case-1 parameter set from an *explicit* `b`, bypassing the
/// quadratic. With `b` from [`case1_solve_b`] this is the case-1 solution;
/// any other `b` fills the same closed form but breaks the braid relation,
/// which makes this the natural falsification knob (the anomaly detects a
/// 1% perturbation of `b`).
pub fn case1_params_with_b(a: C64, x1: C64, x3: C64, b: C64) -> Result<AccParams, CatalogError> {
    let one = C64::new(1.0, 0.0);
    let id2 = [[one, C64::new(0.0, 0.0)], [C64::new(0.0, 0.0), one]];
    for (name, v) in [("a", a), ("x1", x1), ("x3", x3), ("b", b)] {
        if v.norm() <= DOMAIN_TOL {
            return Err(CatalogError::DomainViolation {
                family: "case1",
                name,
                value: v,
                constraint: "must be nonzero".into(),
            });
        }
    }
    let mid = [
        [a, x1, b],
        [x3 * (a - one) / b, (x1 * x3 + b) / b, x3],
        [
            x1 * x1 * x3 * x3 / (b * b * b),
            -x1 * (a * b + x1 * x3) / (a * b * b),
            -x1 * x3 / (a * b),
        ],
    ];
    Ok(from_blocks(one, id2, mid, id2, one))
}

fn from_blocks(
    a1: C64,
    b12: [[C64; 2]; 2],
    mid: [[C64; 3]; 3],
    b23: [[C64; 2]; 2],
    a3: C64,
) -> AccParams {
    AccParams {
        a1,
        a3,
        a12: b12[0][0],
        b12: b12[0][1],
        c12: b12[1][0],
        d12: b12[1][1],
        a13: mid[0][0],
        x1: mid[0][1],
        b13: mid[0][2],
        x2: mid[1][0],
        a2: mid[1][1],
        x3: mid[1][2],
        c13: mid[2][0],
        x4: mid[2][1],
        d13: mid[2][2],
        a23: b23[0][0],
        b23: b23[0][1],
        c23: b23[1][0],
        d23: b23[1][1],
    }
}

/// A fully instantiated catalog point: the assembled parameters plus any
/// solved/derived quantities (named, e.g. `b`, `beta`, `lambda2` for
/// case 1).
#[derive(Debug, Clone, PartialEq)]
pub struct Instantiated {
    pub params: AccParams,
    pub derived: BTreeMap<String, C64>,
}

struct Resolved<'a> {
    info: &'static FamilyInfo,
    inst: &'a FamilyInstance,
}

impl<'a> Resolved<'a> {
    fn new(inst: &'a FamilyInstance) -> Result<Self, CatalogError> {
        let info = inst.id.info();
        for name in inst.continuous.keys() {
            if !info.continuous.contains(&name.as_str()) {
                return Err(CatalogError::UnknownParameter { family: info.name, name: name.clone() });
            }
        }
        for name in inst.discrete.keys() {
            if !info.discrete.iter().any(|d| d.name == name) {
                return Err(CatalogError::UnknownParameter { family: info.name, name: name.clone() });
            }
        }
        Ok(Resolved { info, inst })
    }

    fn cont(&self, name: &'static str) -> Result<C64, CatalogError> {
        self.inst
            .continuous
            .get(name)
            .copied()
            .ok_or(CatalogError::MissingParameter { family: self.info.name, name })
    }

    /// Continuous parameter that must be nonzero (it appears in a
    /// denominator or the determinant).
    fn cont_nonzero(&self, name: &'static str) -> Result<C64, CatalogError> {
        let v = self.cont(name)?;
        if v.norm() <= DOMAIN_TOL {
            return Err(CatalogError::DomainViolation {
                family: self.info.name,
                name,
                value: v,
                constraint: "must be nonzero".into(),
            });
        }
        Ok(v)
    }

    /// Continuous parameter with excluded points from the family table.
    fn cont_excluding(&self, name: &'static str) -> Result<C64, CatalogError> {
        let v = self.cont(name)?;
        if let Some((_, excluded)) = self.info.excluded.iter().find(|(n, _)| *n == name) {
            for &e in *excluded {
                if (v - C64::new(e, 0.0)).norm() <= DOMAIN_TOL * v.norm().max(1.0) {
                    return Err(CatalogError::DomainViolation {
                        family: self.info.name,
                        name,
                        value: v,
                        constraint: format!("must avoid {e}"),
                    });
                }
            }
        }
        Ok(v)
    }

    fn discrete_raw(&self, name: &'static str) -> Result<&str, CatalogError> {
        self.inst
            .discrete
            .get(name)
            .map(String::as_str)
            .ok_or(CatalogError::MissingParameter { family: self.info.name, name })
    }

    fn bad_discrete(&self, name: &'static str, value: &str) -> CatalogError {
        let allowed = self
            .info
            .discrete
            .iter()
            .find(|d| d.name == name)
            .map(|d| d.values)
            .unwrap_or(&[]);
        CatalogError::BadDiscreteValue {
            family: self.info.name,
            name,
            value: value.to_string(),
            allowed,
        }
    }

    fn branch(&self) -> Result<Branch, CatalogError> {
        let raw = self.discrete_raw("branch")?;
        Branch::parse(raw).ok_or_else(|| self.bad_discrete("branch", raw))
    }

    fn omega(&self) -> Result<C64, CatalogError> {
        let raw = self.discrete_raw("omega")?;
        match raw {
            "omega" => Ok(omega_principal()),
            "omega2" => Ok(omega_principal().conj()),
            _ => Err(self.bad_discrete("omega", raw)),
        }
    }

    fn epsilon(&self) -> Result<C64, CatalogError> {
        let raw = self.discrete_raw("epsilon")?;
        match raw {
            "+1" | "1" | "plus" => Ok(C64::new(1.0, 0.0)),
            "-1" | "minus" => Ok(C64::new(-1.0, 0.0)),
            _ => Err(self.bad_discrete("epsilon", raw)),
        }
    }

    fn varsigma(&self) -> Result<C64, CatalogError> {
        let raw = self.discrete_raw("varsigma")?;
        match raw {
            "i" | "+i" => Ok(C64::new(0.0, 1.0)),
            "-i" => Ok(C64::new(0.0, -1.0)),
            _ => Err(self.bad_discrete("varsigma", raw)),
        }
    }
}

/// Build the exact parameter set of a catalog point. Every matrix entry is
/// produced by the family's printed closed form; nothing is solved
/// numerically except case 1's quadratic (via [`case1_solve_b`]).
pub fn instantiate(inst: &FamilyInstance) -> Result<Instantiated, CatalogError> {
    let r = Resolved::new(inst)?;
    let one = C64::new(1.0, 0.0);
    let zero = C64::new(0.0, 0.0);
    let id2 = [[one, zero], [zero, one]];
    let mut derived = BTreeMap::new();

    let params = match inst.id {
        FamilyId::Case1 => {
            let a = r.cont_excluding("a")?;
            let x1 = r.cont_nonzero("x1")?;
            let x3 = r.cont_nonzero("x3")?;
            let sol = case1_solve_b(a, x1, x3, r.branch()?)?;
            derived.insert("b".into(), sol.b);
            derived.insert("beta".into(), sol.beta);
            derived.insert("gamma".into(), sol.gamma);
            derived.insert("lambda2".into(), sol.lambda2);
            case1_params_with_b(a, x1, x3, sol.b)?
        }
        FamilyId::Case3_1_1 => {
            let a = r.cont_excluding("a")?;
            let c = r.cont_nonzero("c")?;
            let x4 = r.cont_nonzero("x4")?;
            let two = [[zero, a * a / c], [c, one - a * a]];
            let mid = [
                [zero, zero, a * a * a * a / (c * c)],
                [zero, a, a * (a * a - one) * (a * a - one) / x4],
                [c * c, x4, (a + one) * (a - one) * (a - one)],
            ];
            from_blocks(one, two, mid, two, one)
        }
        FamilyId::Case3_1_2 => {
            let a = r.cont_excluding("a")?;
            let c = r.cont_nonzero("c")?;
            let x4 = r.cont_nonzero("x4")?;
            let w = r.omega()?;
            let w2 = w * w;
            let mid = [
                [zero, zero, w2 * a * a / (c * c)],
                [zero, a, (w2 - a) * (a - one) * a / x4],
                [c * c, x4, (one - w * a) * (one - a)],
            ];
            from_blocks(
                one,
                [[zero, w * a / c], [c, one - w * a]],
                mid,
                [[zero, a * a / c], [w2 * a * c, w * a * (a - one)]],
                w * a * a,
            )
        }
        FamilyId::Case5_2_1 => {
            let b = r.cont_nonzero("b")?;
            let c = r.cont_nonzero("c")?;
            let x3 = r.cont("x3")?;
            let mid = [[one - b * c, zero, b / c], [-x3 * c * c, one, x3], [c * c, zero, zero]];
            from_blocks(one, id2, mid, [[one - b * c, b], [c, zero]], one)
        }
        FamilyId::Case5_2_2 => {
            let b = r.cont_nonzero("b")?;
            let c = r.cont_nonzero("c")?;
            let x3 = r.cont("x3")?;
            let mid = [[one - b * c, zero, -b * b], [x3 * c / b, one, x3], [-c / b, zero, zero]];
            from_blocks(one, id2, mid, [[one - b * c, b], [c, zero]], -b * c)
        }
        FamilyId::Case5_4_a => {
            let b = r.cont_nonzero("b")?;
            let c = r.cont_nonzero("c")?;
            let x3 = r.cont("x3")?;
            let two = [[one - b * c, b], [c, zero]];
            let mid = [[one - b * c, zero, b / c], [-x3 * c * c, one, x3], [c * c, zero, zero]];
            from_blocks(one, two, mid, two, one)
        }
        FamilyId::Case5_4_b => {
            let b = r.cont_nonzero("b")?;
            let c = r.cont_nonzero("c")?;
            let x3 = r.cont("x3")?;
            let two = [[one - b * c, b], [c, zero]];
            let mid = [[one - b * c, zero, b / c], [x3 * c / b, -b * c, x3], [c * c, zero, zero]];
            from_blocks(one, two, mid, two, one)
        }
        FamilyId::Case5_5_1_1 => {
            let c = r.cont_nonzero("c")?;
            let x2 = r.cont("x2")?;
            let w = r.omega()?;
            let w2 = w * w;
            let mid = [
                [zero, zero, w / (c * c)],
                [x2, one, -x2 * w / (c * c)],
                [c * c, zero, one - w],
            ];
            from_blocks(
                one,
                [[one - w, w / c], [c, zero]],
                mid,
                [[zero, w2 / c], [c * w2, one - w]],
                one,
            )
        }
        FamilyId::Case5_5_1_2 => {
            let c = r.cont_nonzero("c")?;
            let x2 = r.cont("x2")?;
            let s = r.varsigma()?;
            let mid = [
                [zero, zero, -s / (c * c)],
                [x2, one, x2 * s / (c * c)],
                [c * c, zero, s + one],
            ];
            from_blocks(
                one,
                [[s + one, -s / c], [c, zero]],
                mid,
                [[zero, -one / c], [s * c, s + one]],
                s,
            )
        }
        FamilyId::Case5_7 => {
            let b = r.cont_nonzero("b")?;
            let x2 = r.cont("x2")?;
            let x3 = r.cont("x3")?;
            let e = r.epsilon()?;
            let two = [[zero, b], [one / b, zero]];
            let mid = [[zero, zero, b * b], [x2, e, x3], [one / (b * b), zero, zero]];
            from_blocks(one, two, mid, two, one)
        }
        FamilyId::Case6_2_1 => {
            let c = r.cont_nonzero("c")?;
            let x4 = r.cont("x4")?;
            let e = r.epsilon()?;
            let two = [[zero, one / c], [c, zero]];
            let mid = [[zero, zero, one / (c * c)], [zero, e, zero], [c * c, x4, zero]];
            from_blocks(one, two, mid, two, one)
        }
        FamilyId::Case6_2_1p => {
            let c = r.cont_nonzero("c")?;
            let x4 = r.cont("x4")?;
            let w = r.omega()?;
            let w2 = w * w;
            let mid = [[zero, zero, one / (c * c)], [zero, w, zero], [c * c, x4, zero]];
            from_blocks(
                one,
                [[zero, one / c], [c, zero]],
                mid,
                [[zero, w2 / c], [w2 * c, w - one]],
                w,
            )
        }
        FamilyId::Case6_2_2 => {
            let c = r.cont_nonzero("c")?;
            let x4 = r.cont("x4")?;
            let w = r.omega()?;
            let w2 = w * w;
            let mid = [[zero, zero, one / (c * c * w2)], [zero, one, zero], [c * c, x4, zero]];
            from_blocks(
                one,
                [[zero, one / (c * w)], [c, w + C64::new(2.0, 0.0)]],
                mid,
                [[zero, one / c], [w * c, zero]],
                w2,
            )
        }
        FamilyId::FixtureP => {
            let mut p = AccParams::default();
            for name in ["a1", "a2", "a3", "b12", "c12", "b13", "c13", "b23", "c23"] {
                p.set(name, one);
            }
            p
        }
        FamilyId::FixtureIdentity => {
            let mut p = AccParams::default();
            for name in ["a1", "a2", "a3", "a12", "d12", "a13", "d13", "a23", "d23"] {
                p.set(name, one);
            }
            p
        }
    };
    Ok(Instantiated { params, derived })
}

/// Candidate spectrum with integer multiplicities, before any coincidence
/// merging. Multiplicities always sum to 9.
pub fn expected_spectrum(inst: &FamilyInstance) -> Result<Vec<(C64, usize)>, CatalogError> {
    let r = Resolved::new(inst)?;
    let one = C64::new(1.0, 0.0);
    let spec = match inst.id {
        FamilyId::Case1 => {
            let a = r.cont_excluding("a")?;
            let x1 = r.cont_nonzero("x1")?;
            let x3 = r.cont_nonzero("x3")?;
            let sol = case1_solve_b(a, x1, x3, r.branch()?)?;
            vec![(one, 8), (sol.lambda2, 1)]
        }
        FamilyId::Case3_1_1 => {
            let a = r.cont_excluding("a")?;
            vec![(one, 5), (-a * a, 3), (a * a * a, 1)]
        }
        FamilyId::Case3_1_2 => {
            let a = r.cont_excluding("a")?;
            let w = r.omega()?;
            vec![(one, 3), (-w * a, 3), (w * a * a, 3)]
        }
        FamilyId::Case5_2_1 => {
            let b = r.cont_nonzero("b")?;
            let c = r.cont_nonzero("c")?;
            vec![(one, 7), (-b * c, 2)]
        }
        FamilyId::Case5_2_2 | FamilyId::Case5_4_a => {
            let b = r.cont_nonzero("b")?;
            let c = r.cont_nonzero("c")?;
            vec![(one, 6), (-b * c, 3)]
        }
        FamilyId::Case5_4_b => {
            let b = r.cont_nonzero("b")?;
            let c = r.cont_nonzero("c")?;
            vec![(one, 5), (-b * c, 4)]
        }
        FamilyId::Case5_5_1_1 => {
            let w = r.omega()?;
            vec![(one, 6), (-w, 3)]
        }
        FamilyId::Case5_5_1_2 => {
            let s = r.varsigma()?;
            vec![(one, 5), (s, 4)]
        }
        FamilyId::Case5_7 | FamilyId::Case6_2_1 => {
            let e = r.epsilon()?;
            if e.re < 0.0 {
                vec![(one, 5), (-one, 4)]
            } else {
                vec![(one, 6), (-one, 3)]
            }
        }
        FamilyId::Case6_2_1p => {
            let w = r.omega()?;
            vec![(one, 3), (w, 3), (-one, 3)]
        }
        FamilyId::Case6_2_2 => {
            let w = r.omega()?;
            let w2 = w * w;
            vec![(one, 3), (w2, 3), (-w2, 3)]
        }
        FamilyId::FixtureP => vec![(one, 6), (-one, 3)],
        FamilyId::FixtureIdentity => vec![(one, 9)],
    };
    debug_assert_eq!(spec.iter().map(|&(_, m)| m).sum::<usize>(), 9);
    Ok(spec)
}

/// Merge near-coincident candidates (closer than `radius`) by summing
/// multiplicities. Returns the merged list and whether any merge happened
/// (the `CoincidentSpectrum` diagnostic: certification then runs against
/// the merged candidate set).
pub fn merge_spectrum(spectrum: &[(C64, usize)], radius: f64) -> (Vec<(C64, usize)>, bool) {
    let mut merged: Vec<(C64, usize)> = Vec::new();
    let mut coincident = false;
    for &(value, mult) in spectrum {
        if let Some(slot) = merged.iter_mut().find(|(v, _)| (*v - value).norm() <= radius) {
            slot.1 += mult;
            coincident = true;
        } else {
            merged.push((value, mult));
        }
    }
    (merged, coincident)
}

fn draw_complex(rng: &mut ChaCha8Rng, excluded: &[f64]) -> C64 {
    loop {
        let (lo, hi) = SAMPLE_MODULUS;
        let modulus = lo + (hi - lo) * rng.gen::<f64>();
        let angle = std::f64::consts::TAU * rng.gen::<f64>();
        let z = C64::from_polar(modulus, angle);
        if excluded.iter().all(|&e| (z - C64::new(e, 0.0)).norm() >= EXCLUSION_RADIUS) {
            return z;
        }
    }
}

/// Draw a reproducible random point of a family.
///
/// Continuous parameters get modulus in `[0.2, 5]` and uniform angle,
/// staying [`EXCLUSION_RADIUS`] away from each excluded point; discrete
/// choices are uniform. The whole draw is redrawn while the candidate
/// spectrum has two eigenvalues closer than [`SPECTRUM_SEPARATION`], so
/// spectral certificates on sampled instances are always well-posed.
/// Same `(id, seed)` always yields the same instance, independent of
/// platform or thread count.
pub fn random_instance(id: FamilyId, seed: u64) -> FamilyInstance {
    let info = id.info();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut inst = FamilyInstance {
            id,
            continuous: BTreeMap::new(),
            discrete: BTreeMap::new(),
        };
        for &name in info.continuous {
            let excluded = info
                .excluded
                .iter()
                .find(|(n, _)| *n == name)
                .map(|(_, e)| *e)
                .unwrap_or(&[]);
            inst.continuous.insert(name.to_string(), draw_complex(&mut rng, excluded));
        }
        for d in info.discrete {
            let pick = d.values[rng.gen_range(0..d.values.len())];
            inst.discrete.insert(d.name.to_string(), pick.to_string());
        }
        match expected_spectrum(&inst) {
            Ok(spec) => {
                let separated = spec.iter().enumerate().all(|(i, &(vi, _))| {
                    spec[i + 1..].iter().all(|&(vj, _)| (vi - vj).norm() >= SPECTRUM_SEPARATION)
                });
                if separated {
                    return inst;
                }
            }
            // Exceedingly unlikely after exclusion-aware draws; redraw.
            Err(_) => {}
        }
    }
}

/// Draw all nineteen ansatz parameters independently from the sampling
/// annulus, with no family structure and no exclusions.
///
/// Such a generic point almost surely satisfies *none* of the cubic
/// constraints, which makes it the natural input for falsification
/// checks and for exercising machinery (orbits, constraint tables) that
/// does not assume a solution. Deterministic in `seed`.
pub fn random_params(seed: u64) -> AccParams {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entries = [C64::new(0.0, 0.0); 19];
    for slot in entries.iter_mut() {
        *slot = draw_complex(&mut rng, &[]);
    }
    AccParams::from_array(entries)
}

/// Everything one verification of one instance produces.
#[derive(Debug, Clone)]
pub struct VerifyOutcome {
    pub family: FamilyId,
    /// Largest braid-anomaly entry over the cubic scale.
    pub anomaly_rel: f64,
    /// Largest constraint residual over the same scale.
    pub constraint_rel: f64,
    /// Labels of constraints exceeding the tolerance (empty on pass).
    pub violated: Vec<&'static str>,
    /// Plain-form Yang-Baxter residual over the cubic scale.
    pub ybe_rel: f64,
    /// Off-pattern shape check of the assembled matrix.
    pub shape_ok: bool,
    /// Certified spectrum (after any coincidence merging).
    pub spectrum: Vec<(C64, usize)>,
    /// Set when expected eigenvalues had to be merged before certification.
    pub coincident_spectrum: bool,
    /// Whether the Vandermonde + annihilation certificate succeeded and
    /// reproduced the expected multiplicities.
    pub spectrum_certified: bool,
    /// Relative residual of the annihilating product for the certified
    /// spectrum (Cayley-Hamilton form, multiplicities as exponents).
    pub certificate_rel: f64,
    /// Failure detail when `spectrum_certified` is false.
    pub spectrum_error: Option<String>,
    /// Rank of the assembled operator (9 = invertible).
    pub rank: usize,
    /// Solved/derived named quantities (e.g. case 1's `b`, `lambda2`).
    pub derived: BTreeMap<String, C64>,
    /// Conjunction of all checks at the given tolerance.
    pub pass: bool,
}

/// Assemble an instance and run the full verification battery at relative
/// tolerance `tol`: braid anomaly, all 109 constraints, plain-form YBE,
/// shape, invertibility, and the certified spectrum against the family
/// template. Input errors (unknown/missing/out-of-domain parameters)
/// return `Err`; *verification* failures return `Ok` with `pass = false`.
pub fn verify_instance(inst: &FamilyInstance, tol: f64) -> Result<VerifyOutcome, CatalogError> {
    let instantiated = instantiate(inst)?;
    let template = expected_spectrum(inst)?;
    Ok(verify_assembled(inst.id, &instantiated.params, &template, instantiated.derived, tol))
}

/// Run the verification battery on an explicit parameter set against an
/// explicit spectrum template. This is [`verify_instance`] minus the
/// instantiation step; it lets callers check perturbed or hand-built
/// parameter sets (which generally *fail*, with the failure quantified in
/// the outcome).
pub fn verify_assembled(
    family: FamilyId,
    params: &AccParams,
    template: &[(C64, usize)],
    derived: BTreeMap<String, C64>,
    tol: f64,
) -> VerifyOutcome {
    let rcheck = assemble_check_r(params, BasisOrdering::Rlex);
    let scale = constraint_scale(&params).max(f64::MIN_POSITIVE);

    let anomaly = braid_anomaly(&rcheck).expect("assembled matrix is 9x9");
    let anomaly_rel = anomaly.max_abs() / scale;
    let constraint_rel = max_residual(&params) / scale;
    let violated = violated_equations(&params, tol);
    let r_plain = to_r(&rcheck).expect("assembled matrix is 9x9");
    let ybe_rel = ybe_residual(&r_plain).expect("9x9") / scale;
    let shape_ok = is_acc_shaped(&rcheck, BasisOrdering::Rlex, tol);
    let rank9 = rank(&rcheck, tol);

    let lam_scale = template.iter().map(|&(v, _)| v.norm()).fold(1.0, f64::max);
    let (merged, coincident_spectrum) = merge_spectrum(template, 100.0 * tol * lam_scale);
    let candidates: Vec<C64> = merged.iter().map(|&(v, _)| v).collect();
    let (spectrum, spectrum_certified, spectrum_error) =
        match multiplicities_from_traces(&rcheck, &candidates, tol) {
            Ok(certified) => {
                let ok = certified
                    .iter()
                    .zip(&merged)
                    .all(|(&(_, got), &(_, want))| got == want);
                let err = if ok {
                    None
                } else {
                    Some(format!(
                        "certified multiplicities {:?} differ from template {:?}",
                        certified.iter().map(|&(_, m)| m).collect::<Vec<_>>(),
                        merged.iter().map(|&(_, m)| m).collect::<Vec<_>>()
                    ))
                };
                (certified, ok, err)
            }
            Err(e) => (merged.clone(), false, Some(e.to_string())),
        };
    let (cert_resid, cert_scale) = annihilation_residual(&rcheck, &spectrum);
    let certificate_rel = cert_resid / cert_scale;

    let pass = anomaly_rel <= tol
        && constraint_rel <= tol
        && ybe_rel <= tol
        && shape_ok
        && rank9 == 9
        && spectrum_certified;

    VerifyOutcome {
        family,
        anomaly_rel,
        constraint_rel,
        violated,
        ybe_rel,
        shape_ok,
        spectrum,
        coincident_spectrum,
        spectrum_certified,
        certificate_rel,
        spectrum_error,
        rank: rank9,
        derived,
        pass,
    }
}
