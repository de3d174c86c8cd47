//! Charge-conserving operators: parameters, basis orderings, assembly,
//! braid embeddings and the braid-relation anomaly.
//!
//! # The shape
//!
//! On `C^3 (x) C^3` with basis `|i j>` (digits 0..2), an operator conserves
//! additive charge when `<k l| R |i j> = 0` unless `i + j = k + l`. Fixing
//! the invertible-and-generic normalization used throughout the catalog,
//! such an operator in braid form `Rcheck` carries 19 free entries, named
//!
//! ```text
//! a1 | a12 b12 c12 d12 | a13 b13 c13 d13, a2, x1 x2 x3 x4 | a23 b23 c23 d23 | a3
//! ```
//!
//! grouped by total charge 0,1,2,3,4. [`AccParams`] stores them; the slot
//! each parameter occupies depends on the basis ordering.
//!
//! # Basis orderings
//!
//! Three orderings of the nine kets are supported ([`BasisOrdering`]):
//!
//! * `lex`: `|00> |01> |02> |10> |11> |12> |20> |21> |22>` — index `3i + j`.
//! * `rlex`: `|00> |10> |20> |01> |11> |21> |02> |12> |22>` — index `3j + i`.
//! * `grlex`: `|00> |10> |01> |20> |11> |02> |21> |12> |22>` — sorted by
//!   total charge first; this makes the operator block diagonal with blocks
//!   of sizes 1, 2, 3, 2, 1 and is the canonical storage layout.
//!
//! Conversions between presentations are exact entry relocations
//! ([`convert_ordering`]): `M_grlex = P_G M_rlex P_G` and
//! `M_lex = P M_rlex P`, where `P_G` ([`grlex_permutation`]) swaps kets
//! 2<->3 and 5<->6 of the rlex list and `P` ([`swap_operator`]) is the swap
//! `|ij> -> |ji>` (whose matrix is the same in lex and rlex).
//!
//! # Tensor conventions
//!
//! Every tensor-product routine here ([`braid_anomaly`], [`braid_embed`],
//! [`ybe_residual`], and the Hecke tower built on them) consumes the **rlex
//! presentation** and builds multi-site operators with the plain Kronecker
//! product of [`crate::numerics::kron`] (first factor = most significant
//! digit). Row/column labels of the 27-dimensional anomaly are the base-3
//! digit strings of the indices under this convention. Feeding a grlex
//! (block-diagonal) presentation to these routines is a category error —
//! the result is not the anomaly of anything; convert first.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numerics::{kron, mat_mul, SquareMatrix};
use crate::C64;

/// Parameter names in canonical order (the order used by parameter arrays,
/// serialized parameter files and the constraint table).
pub const PARAM_NAMES: [&str; 19] = [
    "a1", "a2", "a3", "a12", "b12", "c12", "d12", "a13", "b13", "c13", "d13", "a23", "b23", "c23",
    "d23", "x1", "x2", "x3", "x4",
];

/// The 19 free entries of a charge-conserving braid-form operator.
///
/// Field order matches [`PARAM_NAMES`]; `as_array`/`from_array` use that
/// order. `a1`, `a2`, `a3` sit on the charge-0/2/4 diagonal kets `|00>`,
/// `|11>`, `|22>`; the `*12`/`*13`/`*23` quadruples couple the charge-1,
/// 2 and 3 sectors; `x1..x4` are the off-diagonal charge-2 entries.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct AccParams {
    pub a1: C64,
    pub a2: C64,
    pub a3: C64,
    pub a12: C64,
    pub b12: C64,
    pub c12: C64,
    pub d12: C64,
    pub a13: C64,
    pub b13: C64,
    pub c13: C64,
    pub d13: C64,
    pub a23: C64,
    pub b23: C64,
    pub c23: C64,
    pub d23: C64,
    pub x1: C64,
    pub x2: C64,
    pub x3: C64,
    pub x4: C64,
}

impl AccParams {
    /// Parameters in [`PARAM_NAMES`] order.
    pub fn as_array(&self) -> [C64; 19] {
        [
            self.a1, self.a2, self.a3, self.a12, self.b12, self.c12, self.d12, self.a13, self.b13,
            self.c13, self.d13, self.a23, self.b23, self.c23, self.d23, self.x1, self.x2, self.x3,
            self.x4,
        ]
    }

    pub fn from_array(v: [C64; 19]) -> Self {
        AccParams {
            a1: v[0],
            a2: v[1],
            a3: v[2],
            a12: v[3],
            b12: v[4],
            c12: v[5],
            d12: v[6],
            a13: v[7],
            b13: v[8],
            c13: v[9],
            d13: v[10],
            a23: v[11],
            b23: v[12],
            c23: v[13],
            d23: v[14],
            x1: v[15],
            x2: v[16],
            x3: v[17],
            x4: v[18],
        }
    }

    pub fn get(&self, name: &str) -> Option<C64> {
        let idx = PARAM_NAMES.iter().position(|&n| n == name)?;
        Some(self.as_array()[idx])
    }

    pub fn set(&mut self, name: &str, value: C64) -> bool {
        let Some(idx) = PARAM_NAMES.iter().position(|&n| n == name) else {
            return false;
        };
        let mut a = self.as_array();
        a[idx] = value;
        *self = Self::from_array(a);
        true
    }

    /// Largest parameter magnitude.
    pub fn max_abs(&self) -> f64 {
        self.as_array().iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// Basis ordering of the nine two-site kets. See the module docs for the
/// three ket sequences and the exact conversion identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisOrdering {
    Lex,
    Rlex,
    Grlex,
}

impl BasisOrdering {
    pub fn as_str(&self) -> &'static str {
        match self {
            BasisOrdering::Lex => "lex",
            BasisOrdering::Rlex => "rlex",
            BasisOrdering::Grlex => "grlex",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "lex" => Some(BasisOrdering::Lex),
            "rlex" => Some(BasisOrdering::Rlex),
            "grlex" => Some(BasisOrdering::Grlex),
            _ => None,
        }
    }

    /// Position map into the rlex ket list: ket at position `i` of this
    /// ordering sits at position `map[i]` of the rlex ordering. All three
    /// maps are involutions.
    pub fn to_rlex_position(&self) -> [usize; 9] {
        match self {
            // |ij| at lex 3i+j sits at rlex 3j+i.
            BasisOrdering::Lex => SWAP_PERM,
            BasisOrdering::Rlex => [0, 1, 2, 3, 4, 5, 6, 7, 8],
            BasisOrdering::Grlex => GRLEX_PERM,
        }
    }
}

/// `|ij> -> |ji>` as an index map on either digit-ordered basis
/// (`3i+j -> 3j+i`); also the lex<->rlex relabeling.
pub const SWAP_PERM: [usize; 9] = [0, 3, 6, 1, 4, 7, 2, 5, 8];

/// rlex<->grlex relabeling: swaps positions 2<->3 and 5<->6.
pub const GRLEX_PERM: [usize; 9] = [0, 1, 3, 2, 4, 6, 5, 7, 8];

/// Parameter slots `(row, col)` in each presentation, in [`PARAM_NAMES`]
/// order.
const RLEX_SLOTS: [(usize, usize); 19] = [
    (0, 0), // a1
    (4, 4), // a2
    (8, 8), // a3
    (1, 1), // a12
    (1, 3), // b12
    (3, 1), // c12
    (3, 3), // d12
    (2, 2), // a13
    (2, 6), // b13
    (6, 2), // c13
    (6, 6), // d13
    (5, 5), // a23
    (5, 7), // b23
    (7, 5), // c23
    (7, 7), // d23
    (2, 4), // x1
    (4, 2), // x2
    (4, 6), // x3
    (6, 4), // x4
];

const GRLEX_SLOTS: [(usize, usize); 19] = [
    (0, 0), // a1
    (4, 4), // a2
    (8, 8), // a3
    (1, 1), // a12
    (1, 2), // b12
    (2, 1), // c12
    (2, 2), // d12
    (3, 3), // a13
    (3, 5), // b13
    (5, 3), // c13
    (5, 5), // d13
    (6, 6), // a23
    (6, 7), // b23
    (7, 6), // c23
    (7, 7), // d23
    (3, 4), // x1
    (4, 3), // x2
    (4, 5), // x3
    (5, 4), // x4
];

const LEX_SLOTS: [(usize, usize); 19] = [
    (0, 0), // a1
    (4, 4), // a2
    (8, 8), // a3
    (3, 3), // a12
    (3, 1), // b12
    (1, 3), // c12
    (1, 1), // d12
    (6, 6), // a13
    (6, 2), // b13
    (2, 6), // c13
    (2, 2), // d13
    (7, 7), // a23
    (7, 5), // b23
    (5, 7), // c23
    (5, 5), // d23
    (6, 4), // x1
    (4, 6), // x2
    (4, 2), // x3
    (2, 4), // x4
];

/// Slot table for an ordering, in [`PARAM_NAMES`] order.
pub fn slots(ordering: BasisOrdering) -> &'static [(usize, usize); 19] {
    match ordering {
        BasisOrdering::Lex => &LEX_SLOTS,
        BasisOrdering::Rlex => &RLEX_SLOTS,
        BasisOrdering::Grlex => &GRLEX_SLOTS,
    }
}

/// Errors from shape-sensitive operations.
#[derive(Debug, Error)]
pub enum AccError {
    /// A matrix handed to [`extract_params`] has a nonzero entry off the
    /// charge-conserving pattern. Extraction demands *exact* zeros; use
    /// [`is_acc_shaped`] for a tolerance-based test.
    #[error("entry ({row},{col}) = {value} lies off the charge-conserving pattern for ordering {ordering:?}")]
    OffPatternEntry { ordering: BasisOrdering, row: usize, col: usize, value: C64 },
    /// Wrong matrix side for the requested operation.
    #[error("expected a {expected}x{expected} matrix, got side {got}")]
    WrongSide { expected: usize, got: usize },
    /// Tower size out of the supported range.
    #[error("site count n = {n} outside supported range 2..={max}")]
    SitesOutOfRange { n: usize, max: usize },
    /// Braid generator index out of range for the site count.
    #[error("generator index i = {i} outside 1..={max} for n = {n} sites")]
    GeneratorOutOfRange { i: usize, n: usize, max: usize },
}

/// Largest supported site count for [`braid_embed`] (3^6 = 729 dimensions).
pub const MAX_SITES: usize = 6;

/// Assemble the 9x9 braid-form operator from its parameters, in the
/// requested presentation. Off-pattern entries are exactly zero.
pub fn assemble_check_r(params: &AccParams, ordering: BasisOrdering) -> SquareMatrix {
    let mut m = SquareMatrix::zeros(9);
    let table = slots(ordering);
    for (value, &(r, c)) in params.as_array().iter().zip(table) {
        m.set(r, c, *value);
    }
    m
}

/// Recover parameters from a matrix known to be exactly charge conserving.
///
/// Every off-pattern entry must be exactly `0.0` (this keeps
/// assemble/extract round trips bit-exact); otherwise
/// [`AccError::OffPatternEntry`] reports the first offender in row-major
/// order.
pub fn extract_params(m: &SquareMatrix, ordering: BasisOrdering) -> Result<AccParams, AccError> {
    if m.side() != 9 {
        return Err(AccError::WrongSide { expected: 9, got: m.side() });
    }
    let table = slots(ordering);
    let mut mask = [[false; 9]; 9];
    for &(r, c) in table {
        mask[r][c] = true;
    }
    for r in 0..9 {
        for c in 0..9 {
            let v = m.get(r, c);
            if !mask[r][c] && v != C64::new(0.0, 0.0) {
                return Err(AccError::OffPatternEntry { ordering, row: r, col: c, value: v });
            }
        }
    }
    let mut arr = [C64::new(0.0, 0.0); 19];
    for (dst, &(r, c)) in arr.iter_mut().zip(table) {
        *dst = m.get(r, c);
    }
    Ok(AccParams::from_array(arr))
}

/// Tolerance-based shape test: every off-pattern entry magnitude must stay
/// at or below `tol * max_abs(m)`.
pub fn is_acc_shaped(m: &SquareMatrix, ordering: BasisOrdering, tol: f64) -> bool {
    if m.side() != 9 {
        return false;
    }
    let table = slots(ordering);
    let mut mask = [[false; 9]; 9];
    for &(r, c) in table {
        mask[r][c] = true;
    }
    let thresh = tol * m.max_abs();
    for r in 0..9 {
        for c in 0..9 {
            if !mask[r][c] && m.get(r, c).norm() > thresh {
                return false;
            }
        }
    }
    true
}

/// The swap `P |ij> = |ji>` on the two-site space. Its matrix is identical
/// in the lex and rlex presentations (conjugating by the lex<->rlex
/// relabeling fixes it); in grlex it would look different, which is one
/// more reason tensor-facing code standardizes on rlex.
pub fn swap_operator() -> SquareMatrix {
    SquareMatrix::permutation(&SWAP_PERM)
}

/// The rlex -> grlex relabeling as a permutation matrix `P_G`
/// (`M_grlex = P_G M_rlex P_G`; `P_G` is its own inverse).
pub fn grlex_permutation() -> SquareMatrix {
    SquareMatrix::permutation(&GRLEX_PERM)
}

/// Re-express a 9x9 matrix in another basis ordering. Pure entry
/// relocation: exact, and an inverse pair with the reverse conversion.
pub fn convert_ordering(
    m: &SquareMatrix,
    from: BasisOrdering,
    to: BasisOrdering,
) -> Result<SquareMatrix, AccError> {
    if m.side() != 9 {
        return Err(AccError::WrongSide { expected: 9, got: m.side() });
    }
    if from == to {
        return Ok(m.clone());
    }
    let pf = from.to_rlex_position();
    let pt = to.to_rlex_position();
    // Position i of `from` holds the ket at rlex position pf[i]; that ket
    // sits at position pt^{-1}(pf[i]) of `to`. The maps are involutions,
    // so pt^{-1} = pt.
    let mut perm = [0usize; 9];
    for i in 0..9 {
        perm[i] = pt[pf[i]];
    }
    Ok(m.conjugate_by_perm(&perm))
}

/// Plain-form from braid-form: `R = P * Rcheck` (rlex presentation).
/// Exact row relocation.
pub fn to_r(rcheck: &SquareMatrix) -> Result<SquareMatrix, AccError> {
    if rcheck.side() != 9 {
        return Err(AccError::WrongSide { expected: 9, got: rcheck.side() });
    }
    Ok(rcheck.permute_rows(&SWAP_PERM))
}

/// Braid-form from plain-form: `Rcheck = P * R` (rlex presentation).
/// Exact row relocation; inverse of [`to_r`] because `P^2 = 1`.
pub fn to_check(r: &SquareMatrix) -> Result<SquareMatrix, AccError> {
    to_r(r)
}

/// Embed a 9x9 two-site operator at sites `(i, i+1)` of an `n`-site chain:
/// `I_3^{(i-1)} (x) m (x) I_3^{(n-1-i)}`, a `3^n x 3^n` matrix. The input
/// must be in rlex presentation; `2 <= n <= MAX_SITES`, `1 <= i <= n-1`.
pub fn braid_embed(m: &SquareMatrix, n: usize, i: usize) -> Result<SquareMatrix, AccError> {
    if m.side() != 9 {
        return Err(AccError::WrongSide { expected: 9, got: m.side() });
    }
    if !(2..=MAX_SITES).contains(&n) {
        return Err(AccError::SitesOutOfRange { n, max: MAX_SITES });
    }
    if i < 1 || i > n - 1 {
        return Err(AccError::GeneratorOutOfRange { i, n, max: n - 1 });
    }
    let left = SquareMatrix::identity(3usize.pow((i - 1) as u32));
    let right = SquareMatrix::identity(3usize.pow((n - 1 - i) as u32));
    Ok(kron(&kron(&left, m), &right))
}

/// Braid-relation anomaly on three sites:
/// `A = R1 R2 R1 - R2 R1 R2` with `R1 = m (x) I_3`, `R2 = I_3 (x) m`
/// (27x27; every entry is a cubic polynomial in the entries of `m`).
/// `m` must be the rlex presentation of a braid-form operator; the anomaly
/// vanishes identically exactly when `m` satisfies the braid relation.
pub fn braid_anomaly(m: &SquareMatrix) -> Result<SquareMatrix, AccError> {
    if m.side() != 9 {
        return Err(AccError::WrongSide { expected: 9, got: m.side() });
    }
    let i3 = SquareMatrix::identity(3);
    let r1 = kron(m, &i3);
    let r2 = kron(&i3, m);
    let r1r2 = mat_mul(&r1, &r2);
    let r2r1 = mat_mul(&r2, &r1);
    let lhs = mat_mul(&r1r2, &r1);
    let rhs = mat_mul(&r2r1, &r2);
    Ok(lhs.sub(&rhs))
}

/// Cubic scale for anomaly tolerances: `max_abs(m)^3`. An anomaly is
/// "vanishing at tolerance tol" when `max_abs(anomaly) <= tol * scale`.
pub fn anomaly_scale(m: &SquareMatrix) -> f64 {
    m.max_abs().powi(3)
}

/// Scale-relative anomaly magnitude: `max_abs(braid_anomaly(m)) / scale`.
pub fn braid_anomaly_rel(m: &SquareMatrix) -> Result<f64, AccError> {
    let a = braid_anomaly(m)?;
    let scale = anomaly_scale(m);
    if scale == 0.0 {
        return Ok(0.0);
    }
    Ok(a.max_abs() / scale)
}

/// Residual of the plain-form Yang-Baxter equation
/// `R12 R13 R23 - R23 R13 R12` for `R` (not `Rcheck`), as a max-abs
/// magnitude. `R13` is obtained from `R23 = I (x) R` by conjugating with
/// the exact permutation that swaps the first two base-3 digits.
pub fn ybe_residual(r: &SquareMatrix) -> Result<f64, AccError> {
    if r.side() != 9 {
        return Err(AccError::WrongSide { expected: 9, got: r.side() });
    }
    let i3 = SquareMatrix::identity(3);
    let r12 = kron(r, &i3);
    let r23 = kron(&i3, r);
    // Digit swap |abc> -> |bac> on 27 indices.
    let mut perm = [0usize; 27];
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                perm[9 * a + 3 * b + c] = 9 * b + 3 * a + c;
            }
        }
    }
    let r13 = r23.conjugate_by_perm(&perm);
    let lhs = mat_mul(&mat_mul(&r12, &r13), &r23);
    let rhs = mat_mul(&mat_mul(&r23, &r13), &r12);
    Ok(lhs.max_diff(&rhs))
}
