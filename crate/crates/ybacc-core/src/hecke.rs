//! Hecke-relation certification, Temperley-Lieb checks, and tower
//! multiplicity tables.
//!
//! A braid-form solution `Rcheck` with two distinct eigenvalues `{1,
//! lambda2}` satisfies the quadratic (Hecke) relation
//! `(Rcheck - 1)(Rcheck + q) = 0` with `q = -lambda2`.
//! [`hecke_extract`] certifies this directly from the trace, without any
//! general eigensolver. On top of it the module builds:
//!
//! * the Temperley-Lieb element residual [`tl_projector_residual`] —
//!   the obstruction `1 - t1 - t2 + t1 t2 + t2 t1 - t1 t2 t1` evaluated
//!   on embedded generator pairs,
//! * rank-one data for the generic family ([`rank_one_factor`],
//!   [`loop_parameter`]),
//! * the q-symmetrizer tower ([`q_symmetrizer`], [`trivial_scalar`]) and
//!   the certified multiplicity tables ([`multiplicity_table`]) whose
//!   integer content is pinned by three independent cross-checks
//!   (integer rounding, exact dimension counting, and a character sum),
//! * standard-tableau counting ([`syt_count`], [`syt_char_coeffs`]).
//!
//! All matrix inputs are braid-form operators in the rlex presentation.

use thiserror::Error;

use crate::acc::{braid_embed, AccError, MAX_SITES};
use crate::numerics::{mat_mul, SquareMatrix};
use crate::C64;

/// Errors from Hecke/Temperley-Lieb certification.
#[derive(Debug, Error)]
pub enum HeckeError {
    /// The operator is (numerically) the identity, or every admissible
    /// second eigenvalue collapses onto 1 — no Hecke structure to extract.
    #[error("spectrum is degenerate: no second eigenvalue distinct from 1")]
    DegenerateSpectrum,
    /// No multiplicity split of the trace yields a certified quadratic
    /// relation.
    #[error("no Hecke relation found: best residual {best_residual:.3e} exceeds {bound:.3e}")]
    NotHecke { best_residual: f64, bound: f64 },
    /// `Rcheck - 1` does not have the expected rank.
    #[error("rank of (Rcheck - 1) is {got}, expected {expected}")]
    RankMismatch { expected: usize, got: usize },
    /// The rank-one factorization certificate failed.
    #[error("rank-one factorization residual {residual:.3e} exceeds {bound:.3e}")]
    FactorizationResidual { residual: f64, bound: f64 },
    /// The Temperley-Lieb residual is not numerically zero, so tower
    /// multiplicities would not be meaningful.
    #[error("Temperley-Lieb check failed at relative residual {residual:.3e} (bound {bound:.3e})")]
    TlCheckFailed { residual: f64, bound: f64 },
    /// A symmetrizer trace did not round to an integer multiplicity.
    #[error("symmetrizer trace at level {level} gives non-integer multiplicity {value}")]
    NonIntegerTrace { level: usize, value: C64 },
    /// The exact dimension count over two-row partitions failed.
    #[error("dimension identity failed at level {level}: got {lhs}, expected {rhs}")]
    DimensionIdentityFailure { level: usize, lhs: u64, rhs: u64 },
    /// The character cross-check of the generator trace failed.
    #[error("character cross-check failed at level {level}: residual {residual:.3e} (bound {bound:.3e})")]
    CharacterCrosscheckFailure { level: usize, residual: f64, bound: f64 },
    /// The symmetrizer weights `q^{-k}` are not representable.
    #[error("q is numerically zero; symmetrizer weights q^-k are undefined")]
    QNearZero,
    /// Embedding/site-range errors from the underlying tensor machinery.
    #[error(transparent)]
    Acc(#[from] AccError),
}

/// Below this magnitude the weights `q^{-(n-1)}` overflow `f64` range for
/// every admissible `n`; treat `q` as zero.
const Q_ZERO_THRESHOLD: f64 = 1e-60;

/// Certified Hecke data for a two-eigenvalue operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeckeData {
    /// The non-unit eigenvalue.
    pub lambda2: C64,
    /// Hecke parameter `q = -lambda2`.
    pub q: C64,
    /// Principal square root of `q`; `-alpha` works equally
    /// ([`HeckeData::alpha_pair`]).
    pub alpha: C64,
    /// Multiplicity of `lambda2` in the 9-dimensional spectrum.
    pub multiplicity: usize,
    /// Residual of the certified quadratic `(m - 1)(m - lambda2)`.
    pub minimal_poly_residual: f64,
}

impl HeckeData {
    /// Both admissible normalization roots `(alpha, -alpha)`.
    pub fn alpha_pair(&self) -> (C64, C64) {
        (self.alpha, -self.alpha)
    }
}

/// Extract and certify the Hecke relation of a 9x9 braid-form operator.
///
/// The trace pins the candidate second eigenvalue for each possible
/// multiplicity `k`: if the spectrum is `{1^(9-k), lambda2^k}` then
/// `lambda2 = (trace - (9 - k)) / k`. Every `k = 1..8` is tried; a
/// candidate counts only if the quadratic residual
/// `max_abs((m - 1)(m - lambda2))` stays below `tol` times the product of
/// the factors' `max(1, max_abs)` scales. The best certified candidate
/// wins; no candidate at all yields [`HeckeError::NotHecke`], and an
/// operator indistinguishable from the identity (or whose only candidates
/// collapse onto 1) yields [`HeckeError::DegenerateSpectrum`].
pub fn hecke_extract(m: &SquareMatrix, tol: f64) -> Result<HeckeData, HeckeError> {
    let side = m.side();
    let one = C64::new(1.0, 0.0);
    let d = m.sub_scalar_diag(one);
    let d_norm = d.max_abs();
    if d_norm <= tol * m.max_abs().max(1.0) {
        return Err(HeckeError::DegenerateSpectrum);
    }
    let trace = m.trace();
    let mut best: Option<(usize, C64, f64, f64)> = None;
    let mut any_candidate = false;
    for k in 1..side {
        let lambda2 = (trace - C64::new((side - k) as f64, 0.0)) / C64::new(k as f64, 0.0);
        // A second eigenvalue indistinguishable from 1 is the degenerate
        // case, not a Hecke relation.
        if (lambda2 - one).norm() <= tol * lambda2.norm().max(1.0) {
            continue;
        }
        any_candidate = true;
        let f2 = m.sub_scalar_diag(lambda2);
        let residual = mat_mul(&d, &f2).max_abs();
        let bound = tol * d_norm.max(1.0) * f2.max_abs().max(1.0);
        let rel = residual / d_norm.max(1.0) / f2.max_abs().max(1.0);
        match best {
            Some((_, _, best_rel, _)) if best_rel <= rel => {}
            _ => best = Some((k, lambda2, rel, bound)),
        }
        if residual <= bound {
            return Ok(HeckeData {
                lambda2,
                q: -lambda2,
                alpha: (-lambda2).sqrt(),
                multiplicity: k,
                minimal_poly_residual: residual,
            });
        }
    }
    if !any_candidate {
        return Err(HeckeError::DegenerateSpectrum);
    }
    let (_, _, best_rel, bound) = best.unwrap();
    Err(HeckeError::NotHecke { best_residual: best_rel, bound })
}

/// Temperley-Lieb obstruction, largest over consecutive generator pairs.
///
/// For each `i = 1..n-2` this evaluates
/// `E_i = 1 - R_i - R_{i+1} + R_i R_{i+1} + R_{i+1} R_i - R_i R_{i+1} R_i`
/// on the `n`-site embeddings and returns the max entry magnitude over the
/// cubic scale `max(1, max_abs(m))^3`. For operators factoring through the
/// Temperley-Lieb quotient (the generic family does) this vanishes at
/// every `n`; for merely-Hecke operators it is O(1). Needs `3 <= n <= 6`.
pub fn tl_projector_residual(m: &SquareMatrix, n: usize) -> Result<f64, HeckeError> {
    if n < 3 {
        return Err(HeckeError::Acc(AccError::SitesOutOfRange { n, max: MAX_SITES }));
    }
    let dim = 3usize.pow(n as u32);
    let id = SquareMatrix::identity(dim);
    let mut worst = 0.0f64;
    for i in 1..n - 1 {
        let r1 = braid_embed(m, n, i)?;
        let r2 = braid_embed(m, n, i + 1)?;
        let r1r2 = mat_mul(&r1, &r2);
        let r2r1 = mat_mul(&r2, &r1);
        let r1r2r1 = mat_mul(&r1r2, &r1);
        let e = id
            .sub(&r1)
            .sub(&r2)
            .add(&r1r2)
            .add(&r2r1)
            .sub(&r1r2r1);
        worst = worst.max(e.max_abs());
    }
    Ok(worst / m.max_abs().max(1.0).powi(3))
}

/// Normalized Temperley-Lieb generator `U_i = (R_i - 1) / alpha` embedded
/// on `n` sites (test/inspection helper; `alpha` is either root from
/// [`HeckeData::alpha_pair`]).
pub fn tl_generator(m: &SquareMatrix, n: usize, i: usize, alpha: C64) -> Result<SquareMatrix, HeckeError> {
    let r = braid_embed(m, n, i)?;
    let dim = r.side();
    Ok(r.sub(&SquareMatrix::identity(dim)).scale(C64::new(1.0, 0.0) / alpha))
}

/// Rank-one data of `D = Rcheck - 1`: `D = u v^T`.
#[derive(Debug, Clone, PartialEq)]
pub struct RankOneFactor {
    /// Column factor, normalized so its first nonzero entry in grlex scan
    /// order equals 1.
    pub u: Vec<C64>,
    /// Row factor (unnormalized: `v = D[i0, :]` at the pivot row `i0`).
    pub v: Vec<C64>,
    /// Certificate `max_abs(D - u v^T)`.
    pub residual: f64,
}

/// Vector scan order used for normalizations: grlex positions mapped back
/// to rlex indices.
const GRLEX_SCAN: [usize; 9] = [0, 1, 3, 2, 4, 6, 5, 7, 8];

/// Factor `D = Rcheck - 1` as an outer product `u v^T`.
///
/// Demands `rank(D) = 1` at the given tolerance
/// ([`HeckeError::RankMismatch`] otherwise — only the generic family has
/// this property), then reads `u` off the column of the largest entry,
/// normalizes its first grlex-ordered nonzero to 1, takes `v` as the
/// matching row, and certifies `max_abs(D - u v^T) <= tol * max(1,
/// max_abs(D))` ([`HeckeError::FactorizationResidual`] otherwise).
pub fn rank_one_factor(m: &SquareMatrix, tol: f64) -> Result<RankOneFactor, HeckeError> {
    let side = m.side();
    let d = m.sub_scalar_diag(C64::new(1.0, 0.0));
    let got = crate::numerics::rank(&d, tol);
    if got != 1 {
        return Err(HeckeError::RankMismatch { expected: 1, got });
    }
    // Column of the largest entry carries u up to scale.
    let (mut r0, mut c0, mut mag) = (0usize, 0usize, 0.0f64);
    for r in 0..side {
        for c in 0..side {
            let v = d.get(r, c).norm();
            if v > mag {
                (r0, c0, mag) = (r, c, v);
            }
        }
    }
    let _ = r0;
    let u_raw: Vec<C64> = (0..side).map(|r| d.get(r, c0)).collect();
    let thresh = tol * d.max_abs();
    let i0 = GRLEX_SCAN
        .iter()
        .copied()
        .find(|&i| u_raw[i].norm() > thresh)
        .ok_or(HeckeError::RankMismatch { expected: 1, got: 0 })?;
    let pivot = u_raw[i0];
    let u: Vec<C64> = u_raw.iter().map(|&z| z / pivot).collect();
    // With u[i0] = 1, row i0 of D is exactly v.
    let v: Vec<C64> = (0..side).map(|c| d.get(i0, c)).collect();
    let mut residual = 0.0f64;
    for r in 0..side {
        for c in 0..side {
            residual = residual.max((d.get(r, c) - u[r] * v[c]).norm());
        }
    }
    let bound = tol * d.max_abs().max(1.0);
    if residual > bound {
        return Err(HeckeError::FactorizationResidual { residual, bound });
    }
    Ok(RankOneFactor { u, v, residual })
}

/// The loop parameter `delta = v . u` (plain bilinear pairing of the
/// rank-one factors). For the generic family `delta = lambda2 - 1`,
/// independent of the free off-diagonal parameters.
pub fn loop_parameter(m: &SquareMatrix, tol: f64) -> Result<C64, HeckeError> {
    let f = rank_one_factor(m, tol)?;
    Ok(f.u.iter().zip(&f.v).map(|(a, b)| a * b).sum())
}

/// Scalar by which the trivial (one-dimensional) representation scales the
/// `n`-site q-symmetrizer: `prod_{lvl=2..n} (sum_{k=0..lvl-1} q^-k)`.
pub fn trivial_scalar(n: usize, q: C64) -> C64 {
    let qi = C64::new(1.0, 0.0) / q;
    let mut s = C64::new(1.0, 0.0);
    for lvl in 2..=n {
        let mut level_sum = C64::new(0.0, 0.0);
        let mut p = C64::new(1.0, 0.0);
        for _ in 0..lvl {
            level_sum += p;
            p *= qi;
        }
        s *= level_sum;
    }
    s
}

/// Shared builder: the transposed level factor
/// `term^T = 1 + sum_{k=lvl-1..1} (R_{lvl-1} ... R_k)^T / q^{lvl-k}`.
/// Working transposed keeps the sparse embedded generator on the left of
/// every product, which the zero-skipping kernel exploits.
fn level_term_transposed(rt: &[SquareMatrix], lvl: usize, qi: C64, dim: usize) -> SquareMatrix {
    let mut term_t = SquareMatrix::identity(dim);
    let mut acc_t = SquareMatrix::identity(dim);
    for k in (1..lvl).rev() {
        acc_t = mat_mul(&rt[k - 1], &acc_t).scale(qi);
        term_t = term_t.add(&acc_t);
    }
    term_t
}

fn embedded_transposed(m: &SquareMatrix, n: usize) -> Result<Vec<SquareMatrix>, HeckeError> {
    (1..n)
        .map(|i| Ok(braid_embed(m, n, i)?.transpose()))
        .collect()
}

/// The `n`-site q-symmetrizer by the coset recursion
/// `e_n = e_{n-1} (1 + R_{n-1}/q + R_{n-1}R_{n-2}/q^2 + ... +
/// R_{n-1}...R_1/q^{n-1})`, materialized as a dense `3^n x 3^n` matrix.
/// On a Hecke solution it projects onto the q-analogue of the symmetric
/// power; its trace against [`trivial_scalar`] yields the trivial-rep
/// multiplicity. Needs `2 <= n <= 6`.
pub fn q_symmetrizer(m: &SquareMatrix, n: usize, q: C64) -> Result<SquareMatrix, HeckeError> {
    if !(2..=MAX_SITES).contains(&n) {
        return Err(HeckeError::Acc(AccError::SitesOutOfRange { n, max: MAX_SITES }));
    }
    if q.norm() < Q_ZERO_THRESHOLD {
        return Err(HeckeError::QNearZero);
    }
    let dim = 3usize.pow(n as u32);
    let qi = C64::new(1.0, 0.0) / q;
    let rt = embedded_transposed(m, n)?;
    let mut e_t = SquareMatrix::identity(dim);
    for lvl in 2..=n {
        let term_t = level_term_transposed(&rt, lvl, qi, dim);
        // (e * term)^T = term^T * e^T.
        e_t = mat_mul(&term_t, &e_t);
    }
    Ok(e_t.transpose())
}

/// Trace of the `n`-site q-symmetrizer without materializing the final
/// product (the last level contributes via `trace(e * term) =
/// sum_ij e_ij term_ji`).
pub fn q_symmetrizer_trace(m: &SquareMatrix, n: usize, q: C64) -> Result<C64, HeckeError> {
    if !(2..=MAX_SITES).contains(&n) {
        return Err(HeckeError::Acc(AccError::SitesOutOfRange { n, max: MAX_SITES }));
    }
    if q.norm() < Q_ZERO_THRESHOLD {
        return Err(HeckeError::QNearZero);
    }
    let dim = 3usize.pow(n as u32);
    let qi = C64::new(1.0, 0.0) / q;
    let rt = embedded_transposed(m, n)?;
    let mut e_t = SquareMatrix::identity(dim);
    for lvl in 2..n {
        let term_t = level_term_transposed(&rt, lvl, qi, dim);
        e_t = mat_mul(&term_t, &e_t);
    }
    let last_t = level_term_transposed(&rt, n, qi, dim);
    // trace(e * term) with e = e_t^T, term = last_t^T:
    // sum_ij e[i][j] term[j][i] = sum_ij e_t[j][i] last_t[i][j].
    let mut tr = C64::new(0.0, 0.0);
    for i in 0..dim {
        let row_last = last_t.row(i);
        for j in 0..dim {
            tr += e_t.get(j, i) * row_last[j];
        }
    }
    Ok(tr)
}

/// Number of standard Young tableaux of a partition (hook length formula,
/// exact integer arithmetic). The partition must be weakly decreasing and
/// positive; the empty partition counts 1.
pub fn syt_count(partition: &[usize]) -> u64 {
    assert!(
        partition.windows(2).all(|w| w[0] >= w[1]) && partition.iter().all(|&p| p > 0),
        "partition must be weakly decreasing and positive"
    );
    let n: usize = partition.iter().sum();
    if n == 0 {
        return 1;
    }
    let mut numerator: u128 = 1;
    for k in 1..=n {
        numerator *= k as u128;
    }
    let mut hooks: u128 = 1;
    for (i, &row) in partition.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = partition[i + 1..].iter().filter(|&&r| r > j).count();
            hooks *= (arm + leg + 1) as u128;
        }
    }
    (numerator / hooks) as u64
}

/// Number of standard tableaux of `outer` with the cells of `inner`
/// removed (straight-shape recursion over removable corners; brute force,
/// exact).
pub fn skew_syt_count(outer: &[usize], inner: &[usize]) -> u64 {
    let cells: usize = outer
        .iter()
        .enumerate()
        .map(|(i, &o)| o.saturating_sub(inner.get(i).copied().unwrap_or(0)))
        .sum();
    if cells == 0 {
        return 1;
    }
    let mut total = 0u64;
    for i in 0..outer.len() {
        let inner_i = inner.get(i).copied().unwrap_or(0);
        let removable = outer[i] > inner_i && (i + 1 >= outer.len() || outer[i + 1] < outer[i]);
        if removable {
            let mut smaller = outer.to_vec();
            smaller[i] -= 1;
            while smaller.last() == Some(&0) {
                smaller.pop();
            }
            total += skew_syt_count(&smaller, inner);
        }
    }
    total
}

/// Character data of the first braid generator in an irreducible
/// two-eigenvalue representation: `chi_lambda(t_1) = a + b * lambda2`
/// where `a` counts standard tableaux of `lambda` with 2 directly right
/// of 1, and `b` those with 2 directly below 1 (so `a + b = f^lambda`).
/// Computed by standard-tableau enumeration. Needs `|lambda| >= 2`.
pub fn syt_char_coeffs(partition: &[usize]) -> (u64, u64) {
    let n: usize = partition.iter().sum();
    assert!(n >= 2, "character coefficients need at least two cells");
    let a = if partition[0] >= 2 { skew_syt_count(partition, &[2]) } else { 0 };
    let b = if partition.len() >= 2 { skew_syt_count(partition, &[1, 1]) } else { 0 };
    debug_assert_eq!(a + b, syt_count(partition));
    (a, b)
}

/// The partitions of `n` with at most two rows, longest first:
/// `(n), (n-1,1), ..., (ceil, floor)`.
pub fn two_row_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut r = 0;
    while n >= 2 * r {
        let p = n - r;
        if r == 0 {
            out.push(vec![p]);
        } else if p >= r {
            out.push(vec![p, r]);
        }
        r += 1;
    }
    out
}

/// One level of a certified multiplicity table.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelTable {
    /// Site count `n`.
    pub level: usize,
    /// `(partition, multiplicity)` pairs over the two-row partitions of
    /// `n`, longest row first. Partitions with three or more rows never
    /// appear: the dimension identity below certifies (exactly) that
    /// two-row content exhausts all `3^n` dimensions.
    pub multiplicities: Vec<(Vec<usize>, u64)>,
    /// Raw symmetrizer trace at this level.
    pub symmetrizer_trace: C64,
    /// Trivial-representation scalar at this level.
    pub trivial_scalar: C64,
    /// `|trace(rho_n(t_1)) - sum_lambda m_lambda chi_lambda(t_1)|`.
    pub t1_residual: f64,
}

/// A certified tower multiplicity table.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiplicityTable {
    pub lambda2: C64,
    pub q: C64,
    /// `S[j]` = multiplicity of the one-row partition `(j)` at level `j`
    /// (`S[0] = 1`, `S[1] = 3`, higher levels from symmetrizer traces).
    /// Every two-row multiplicity is a stability shift of this sequence:
    /// `m_(p,r) at level p+r = S[p - r]`.
    pub sym_sequence: Vec<u64>,
    /// Levels `2..=n_max` in order.
    pub levels: Vec<LevelTable>,
}

/// Integer tolerance for symmetrizer traces and the character cross-check
/// at level `n`: `1e-6 * 3^n`.
fn level_tol(n: usize) -> f64 {
    1e-6 * 3f64.powi(n as i32)
}

/// Build the certified multiplicity table of a Hecke solution for levels
/// `2..=n_max` (with `n_max <= 6`).
///
/// Preconditions enforced here: the Hecke relation certifies
/// ([`hecke_extract`]) and the Temperley-Lieb residual at three sites is
/// numerically zero ([`HeckeError::TlCheckFailed`] otherwise — without
/// the quotient the tower multiplicities would not stabilize).
///
/// Each level's trivial-rep multiplicity comes from the symmetrizer trace
/// ([`HeckeError::NonIntegerTrace`] if it does not round at `1e-6 * 3^n`),
/// lower multiplicities from the stability shift, and every level is
/// certified twice more: the two-row dimensions must sum to `3^n`
/// *exactly* in integer arithmetic, and the embedded generator trace must
/// match the character sum `sum_lambda m_lambda (a_lambda + b_lambda
/// lambda2)` at the same `1e-6 * 3^n` tolerance.
pub fn multiplicity_table(
    m: &SquareMatrix,
    n_max: usize,
    tol: f64,
) -> Result<MultiplicityTable, HeckeError> {
    if !(2..=MAX_SITES).contains(&n_max) {
        return Err(HeckeError::Acc(AccError::SitesOutOfRange { n: n_max, max: MAX_SITES }));
    }
    let hecke = hecke_extract(m, tol)?;
    let q = hecke.q;
    let tl = tl_projector_residual(m, 3)?;
    if tl > tol {
        return Err(HeckeError::TlCheckFailed { residual: tl, bound: tol });
    }

    let mut sym_sequence: Vec<u64> = vec![1, 3];
    let mut levels = Vec::new();
    for n in 2..=n_max {
        let trace = q_symmetrizer_trace(m, n, q)?;
        let scalar = trivial_scalar(n, q);
        let value = trace / scalar;
        let tol_n = level_tol(n);
        let rounded = value.re.round();
        if (value.re - rounded).abs() > tol_n || value.im.abs() > tol_n || rounded < 0.0 {
            return Err(HeckeError::NonIntegerTrace { level: n, value });
        }
        sym_sequence.push(rounded as u64);

        let mut multiplicities = Vec::new();
        for partition in two_row_partitions(n) {
            let diff = partition[0] - partition.get(1).copied().unwrap_or(0);
            multiplicities.push((partition, sym_sequence[diff]));
        }

        // Exact dimension identity over two-row partitions.
        let lhs: u64 = multiplicities
            .iter()
            .map(|(partition, mult)| mult * syt_count(partition))
            .sum();
        let rhs = 3u64.pow(n as u32);
        if lhs != rhs {
            return Err(HeckeError::DimensionIdentityFailure { level: n, lhs, rhs });
        }

        // Character cross-check of the embedded generator trace.
        let t1 = braid_embed(m, n, 1)?.trace();
        let model: C64 = multiplicities
            .iter()
            .map(|(partition, mult)| {
                let (a, b) = syt_char_coeffs(partition);
                C64::new(*mult as f64, 0.0)
                    * (C64::new(a as f64, 0.0) + C64::new(b as f64, 0.0) * hecke.lambda2)
            })
            .sum();
        let t1_residual = (t1 - model).norm();
        if t1_residual > tol_n {
            return Err(HeckeError::CharacterCrosscheckFailure {
                level: n,
                residual: t1_residual,
                bound: tol_n,
            });
        }

        levels.push(LevelTable {
            level: n,
            multiplicities,
            symmetrizer_trace: trace,
            trivial_scalar: scalar,
            t1_residual,
        });
    }
    Ok(MultiplicityTable { lambda2: hecke.lambda2, q, sym_sequence, levels })
}
