//! Dense complex matrix kernel.
//!
//! Everything in the toolkit runs on one concrete type, [`SquareMatrix`]:
//! row-major `Vec<Complex64>` storage, no views, no generic scalar. The
//! dimensions involved are 9, 27 and up to 729 (three-site through six-site
//! tensor powers), so a cache-friendly `ikj` product with a zero-skip is
//! fast enough and keeps results bit-reproducible.
//!
//! Two code paths exist for the product: [`mat_mul_seq`] (always compiled;
//! also the reference kernel for the benches) and a rayon-parallel kernel
//! used by [`mat_mul`] for large sides when the `parallel` feature is on.
//! Both split work only by output row and keep the inner summation order
//! identical, so they produce bitwise-equal results.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::C64;

/// Side length above which [`mat_mul`] switches to the parallel kernel
/// (when the `parallel` feature is enabled). The 9- and 27-dimensional
/// products that dominate verification sweeps stay on the sequential
/// kernel, where rayon dispatch overhead would dominate.
pub const PAR_THRESHOLD: usize = 64;

/// Errors from spectral certification routines.
#[derive(Debug, Error)]
pub enum NumericsError {
    /// Two candidate eigenvalues are too close for the Vandermonde system
    /// to be well-posed.
    #[error("candidate eigenvalues {a} and {b} coincide within tolerance")]
    CoincidentCandidates { a: C64, b: C64 },
    /// The product of `(m - c I)` over all candidates is not numerically
    /// zero: the candidate set does not annihilate the matrix.
    #[error("minimal-polynomial certificate failed: residual {residual:.3e} exceeds {bound:.3e}")]
    MinimalPolynomialMismatch { residual: f64, bound: f64 },
    /// A solved multiplicity is not close to a nonnegative integer.
    #[error("multiplicity {value} for candidate {candidate} is not a nonnegative integer (tolerance {tol_int:.3e})")]
    NonIntegerMultiplicity { candidate: C64, value: C64, tol_int: f64 },
    /// Multiplicities are integers but do not sum to the matrix side.
    #[error("multiplicities sum to {sum}, expected {side}")]
    MultiplicitySum { sum: usize, side: usize },
}

/// Dense square matrix over `Complex64`, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SquareMatrix {
    side: usize,
    data: Vec<C64>,
}

impl SquareMatrix {
    /// Zero matrix of the given side.
    pub fn zeros(side: usize) -> Self {
        SquareMatrix { side, data: vec![C64::new(0.0, 0.0); side * side] }
    }

    /// Identity matrix of the given side.
    pub fn identity(side: usize) -> Self {
        let mut m = Self::zeros(side);
        for i in 0..side {
            m.data[i * side + i] = C64::new(1.0, 0.0);
        }
        m
    }

    /// Build from a closure over `(row, col)`.
    pub fn from_fn(side: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(side * side);
        for i in 0..side {
            for j in 0..side {
                data.push(f(i, j));
            }
        }
        SquareMatrix { side, data }
    }

    /// Build from row-major entries. Panics unless `entries.len()` is a
    /// perfect square (callers validating untrusted input check first).
    pub fn from_row_major(entries: Vec<C64>) -> Self {
        let side = (entries.len() as f64).sqrt().round() as usize;
        assert_eq!(side * side, entries.len(), "entry count {} is not a perfect square", entries.len());
        SquareMatrix { side, data: entries }
    }

    pub fn side(&self) -> usize {
        self.side
    }

    /// Row-major entry slice.
    pub fn entries(&self) -> &[C64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.data[row * self.side + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: C64) {
        self.data[row * self.side + col] = value;
    }

    pub fn row(&self, row: usize) -> &[C64] {
        &self.data[row * self.side..(row + 1) * self.side]
    }

    pub fn trace(&self) -> C64 {
        (0..self.side).map(|i| self.data[i * self.side + i]).sum()
    }

    /// Largest entry magnitude (the scale used by every relative tolerance
    /// in the toolkit).
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn transpose(&self) -> Self {
        SquareMatrix::from_fn(self.side, |i, j| self.get(j, i))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.side, other.side);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        SquareMatrix { side: self.side, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.side, other.side);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        SquareMatrix { side: self.side, data }
    }

    pub fn scale(&self, factor: C64) -> Self {
        let data = self.data.iter().map(|a| a * factor).collect();
        SquareMatrix { side: self.side, data }
    }

    /// `max |self - other|` entrywise.
    pub fn max_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.side, other.side);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Shift the diagonal: `self - z I`.
    pub fn sub_scalar_diag(&self, z: C64) -> Self {
        let mut m = self.clone();
        for i in 0..self.side {
            m.data[i * self.side + i] -= z;
        }
        m
    }

    /// Conjugate by a permutation, exactly (entry relocation, no arithmetic):
    /// `out[perm[i]][perm[j]] = self[i][j]`. This is `Q * self * Q^T` for the
    /// permutation matrix `Q` with `Q[perm[i]][i] = 1`.
    pub fn conjugate_by_perm(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.side);
        let mut out = Self::zeros(self.side);
        for i in 0..self.side {
            for j in 0..self.side {
                out.data[perm[i] * self.side + perm[j]] = self.data[i * self.side + j];
            }
        }
        out
    }

    /// Permute rows exactly: `out[perm[i]] = self[i]` (i.e. `Q * self`).
    pub fn permute_rows(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.side);
        let mut out = Self::zeros(self.side);
        for i in 0..self.side {
            let dst = perm[i];
            out.data[dst * self.side..(dst + 1) * self.side]
                .copy_from_slice(&self.data[i * self.side..(i + 1) * self.side]);
        }
        out
    }

    /// The permutation matrix `Q` with `Q[perm[i]][i] = 1`, so that
    /// `Q * e_i = e_{perm[i]}`.
    pub fn permutation(perm: &[usize]) -> Self {
        let side = perm.len();
        let mut m = Self::zeros(side);
        for (i, &p) in perm.iter().enumerate() {
            m.data[p * side + i] = C64::new(1.0, 0.0);
        }
        m
    }
}

#[inline]
fn mul_row_into(out_row: &mut [C64], a_row: &[C64], b: &SquareMatrix) {
    let n = b.side;
    for (k, &aik) in a_row.iter().enumerate() {
        // Braid embeddings are mostly zero; skipping exact zeros is a large
        // win there and exact for finite operands.
        if aik == C64::new(0.0, 0.0) {
            continue;
        }
        let b_row = &b.data[k * n..(k + 1) * n];
        for (o, &bkj) in out_row.iter_mut().zip(b_row) {
            *o += aik * bkj;
        }
    }
}

/// Sequential matrix product (reference kernel, always available).
pub fn mat_mul_seq(a: &SquareMatrix, b: &SquareMatrix) -> SquareMatrix {
    assert_eq!(a.side, b.side, "matrix product needs equal sides");
    let n = a.side;
    let mut out = SquareMatrix::zeros(n);
    for i in 0..n {
        let (a_row, out_row) = (a.row(i), &mut out.data[i * n..(i + 1) * n]);
        mul_row_into(out_row, a_row, b);
    }
    out
}

/// Parallel matrix product (one rayon task per output row chunk).
/// Bitwise identical to [`mat_mul_seq`]: the per-row summation order is the
/// same, only the rows are distributed.
#[cfg(feature = "parallel")]
pub fn mat_mul_par(a: &SquareMatrix, b: &SquareMatrix) -> SquareMatrix {
    use rayon::prelude::*;
    assert_eq!(a.side, b.side, "matrix product needs equal sides");
    let n = a.side;
    let mut out = SquareMatrix::zeros(n);
    out.data
        .par_chunks_mut(n)
        .enumerate()
        .for_each(|(i, out_row)| mul_row_into(out_row, a.row(i), b));
    out
}

/// Matrix product. Dispatches to the parallel kernel for sides at or above
/// [`PAR_THRESHOLD`] when the `parallel` feature is enabled; otherwise (and
/// always for small sides) runs the sequential kernel.
pub fn mat_mul(a: &SquareMatrix, b: &SquareMatrix) -> SquareMatrix {
    #[cfg(feature = "parallel")]
    {
        if a.side >= PAR_THRESHOLD {
            return mat_mul_par(a, b);
        }
    }
    mat_mul_seq(a, b)
}

/// Kronecker product: `out[(i*bs + k), (j*bs + l)] = a[i,j] * b[k,l]`
/// (first factor owns the most significant digit).
pub fn kron(a: &SquareMatrix, b: &SquareMatrix) -> SquareMatrix {
    let (asz, bsz) = (a.side, b.side);
    let n = asz * bsz;
    let mut out = SquareMatrix::zeros(n);
    for i in 0..asz {
        for j in 0..asz {
            let aij = a.get(i, j);
            if aij == C64::new(0.0, 0.0) {
                continue;
            }
            for k in 0..bsz {
                let dst_row = (i * bsz + k) * n + j * bsz;
                let src_row = &b.data[k * bsz..(k + 1) * bsz];
                for (l, &bkl) in src_row.iter().enumerate() {
                    out.data[dst_row + l] = aij * bkl;
                }
            }
        }
    }
    out
}

/// Numerical rank by row reduction with partial pivoting.
///
/// A pivot candidate is accepted when its magnitude exceeds
/// `tol * max_abs(m)` (the max entry of the *original* matrix), so the
/// answer is scale-invariant. The zero matrix has rank 0 for every `tol`.
pub fn rank(m: &SquareMatrix, tol: f64) -> usize {
    let n = m.side;
    let thresh = tol * m.max_abs();
    let mut a = m.data.clone();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..n {
        if row == n {
            break;
        }
        // Partial pivoting: largest magnitude in this column at or below `row`.
        let (mut pivot_row, mut pivot_mag) = (row, a[row * n + col].norm());
        for r in row + 1..n {
            let mag = a[r * n + col].norm();
            if mag > pivot_mag {
                pivot_row = r;
                pivot_mag = mag;
            }
        }
        if pivot_mag <= thresh {
            continue;
        }
        if pivot_row != row {
            for c in 0..n {
                a.swap(row * n + c, pivot_row * n + c);
            }
        }
        let pivot = a[row * n + col];
        for r in row + 1..n {
            let factor = a[r * n + col] / pivot;
            if factor == C64::new(0.0, 0.0) {
                continue;
            }
            for c in col..n {
                let s = a[row * n + c];
                a[r * n + c] -= factor * s;
            }
        }
        row += 1;
        rank += 1;
    }
    rank
}

/// Solve a small dense complex linear system `A x = b` in place
/// (Gaussian elimination, partial pivoting). Returns `None` when a pivot
/// column is numerically zero.
fn solve_dense(mut a: Vec<C64>, mut b: Vec<C64>, n: usize) -> Option<Vec<C64>> {
    for col in 0..n {
        let (mut pr, mut pm) = (col, a[col * n + col].norm());
        for r in col + 1..n {
            let m = a[r * n + col].norm();
            if m > pm {
                pr = r;
                pm = m;
            }
        }
        if pm == 0.0 {
            return None;
        }
        if pr != col {
            for c in 0..n {
                a.swap(col * n + c, pr * n + c);
            }
            b.swap(col, pr);
        }
        let pivot = a[col * n + col];
        for r in col + 1..n {
            let factor = a[r * n + col] / pivot;
            if factor == C64::new(0.0, 0.0) {
                continue;
            }
            for c in col..n {
                let s = a[col * n + c];
                a[r * n + c] -= factor * s;
            }
            let s = b[col];
            b[r] -= factor * s;
        }
    }
    let mut x = vec![C64::new(0.0, 0.0); n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for c in row + 1..n {
            acc -= a[row * n + c] * x[c];
        }
        x[row] = acc / a[row * n + row];
    }
    Some(x)
}

/// Residual and scale of the annihilating product
/// `prod_c (m - c I)^mult(c)`: returns `(max_abs of the product,
/// prod_c max(1, max_abs(m - c I))^mult(c))`. For correct eigenvalues
/// *with algebraic multiplicities* this is the Cayley-Hamilton product, so
/// it vanishes for every matrix, Jordan blocks included.
pub fn annihilation_residual(m: &SquareMatrix, spectrum: &[(C64, usize)]) -> (f64, f64) {
    let mut product = SquareMatrix::identity(m.side);
    let mut scale = 1.0f64;
    for &(c, mult) in spectrum {
        if mult == 0 {
            continue;
        }
        let factor = m.sub_scalar_diag(c);
        let factor_scale = factor.max_abs().max(1.0);
        for _ in 0..mult {
            scale *= factor_scale;
            product = mat_mul(&product, &factor);
        }
    }
    (product.max_abs(), scale)
}

/// Certified eigenvalue multiplicities from power-sum traces.
///
/// Given a matrix and the *claimed* candidate eigenvalues, this routine
///
/// 1. rejects candidate lists with near-coincident entries,
/// 2. solves the Vandermonde system `sum_c mult(c) c^k = trace(m^k)` for
///    `k = 0 .. len-1` (power sums see eigenvalues only, so this is exact
///    regardless of Jordan structure),
/// 3. rounds each multiplicity to the nearest integer and insists the
///    deviation stays below `tol_int = 1e-6 * side`, every value is a
///    nonnegative integer, and the total equals the side,
/// 4. certifies that the candidates annihilate the matrix — this is what
///    makes the result trustworthy without any general eigensolver. Two
///    certificates are accepted: the distinct-candidate product
///    `prod_c (m - c I)` (the minimal polynomial of a semisimple operator
///    with that spectrum), or, failing that, the Cayley-Hamilton product
///    `prod_c (m - c I)^mult(c)`, which covers operators with nontrivial
///    Jordan blocks (two catalog families assemble to such operators).
///    Each residual is compared against `tol` times the product of its
///    factors' `max(1, max_abs)` scales;
///    [`NumericsError::MinimalPolynomialMismatch`] reports the sharper
///    (Cayley-Hamilton) failure when both certificates miss.
///
/// On success the returned pairs are the candidates in input order with
/// their exact integer multiplicities (zeros allowed).
pub fn multiplicities_from_traces(
    m: &SquareMatrix,
    candidates: &[C64],
    tol: f64,
) -> Result<Vec<(C64, usize)>, NumericsError> {
    let n_cand = candidates.len();
    let side = m.side;
    assert!(n_cand > 0, "need at least one candidate eigenvalue");

    let cand_scale = candidates.iter().map(|c| c.norm()).fold(1.0, f64::max);
    for i in 0..n_cand {
        for j in i + 1..n_cand {
            if (candidates[i] - candidates[j]).norm() <= tol * cand_scale {
                return Err(NumericsError::CoincidentCandidates {
                    a: candidates[i],
                    b: candidates[j],
                });
            }
        }
    }

    // Power-sum traces t_k = trace(m^k), k = 0 .. n_cand-1.
    let mut traces = vec![C64::new(side as f64, 0.0)];
    let mut power = m.clone();
    for _ in 1..n_cand {
        traces.push(power.trace());
        power = mat_mul(&power, m);
    }
    // Vandermonde system V[k][c] = candidates[c]^k.
    let mut v = vec![C64::new(0.0, 0.0); n_cand * n_cand];
    for c in 0..n_cand {
        let mut p = C64::new(1.0, 0.0);
        for k in 0..n_cand {
            v[k * n_cand + c] = p;
            p *= candidates[c];
        }
    }
    let x = solve_dense(v, traces, n_cand).ok_or(NumericsError::CoincidentCandidates {
        a: candidates[0],
        b: candidates[n_cand - 1],
    })?;

    let tol_int = 1e-6 * side as f64;
    let mut out = Vec::with_capacity(n_cand);
    let mut total = 0usize;
    for (&c, &value) in candidates.iter().zip(&x) {
        let rounded = value.re.round();
        if (value.re - rounded).abs() > tol_int || value.im.abs() > tol_int || rounded < 0.0 {
            return Err(NumericsError::NonIntegerMultiplicity { candidate: c, value, tol_int });
        }
        let mult = rounded as usize;
        total += mult;
        out.push((c, mult));
    }
    if total != side {
        return Err(NumericsError::MultiplicitySum { sum: total, side });
    }

    // Stage one: semisimple (distinct-candidate) certificate.
    let distinct: Vec<(C64, usize)> = candidates.iter().map(|&c| (c, 1)).collect();
    let (residual, scale) = annihilation_residual(m, &distinct);
    if residual <= tol * scale {
        return Ok(out);
    }
    // Stage two: Cayley-Hamilton certificate with the solved multiplicities.
    let (residual, scale) = annihilation_residual(m, &out);
    let bound = tol * scale;
    if residual > bound {
        return Err(NumericsError::MinimalPolynomialMismatch { residual, bound });
    }
    Ok(out)
}
