//! Verification toolkit for constant Yang-Baxter operators in dimension three
//! whose matrix entries conserve additive charge.
//!
//! The toolkit works with 9x9 operators `R` (and their braid-form partners
//! `Rcheck = P * R`, where `P` is the swap on C^3 (x) C^3) whose only nonzero
//! entries `R^{kl}_{ij}` satisfy `i + j = k + l`. Such operators are described
//! by 19 complex parameters ([`acc::AccParams`]). The crate provides:
//!
//! * a small dense complex-matrix kernel with a parallel and a sequential
//!   code path ([`numerics`]),
//! * assembly/extraction of charge-conserving operators in three basis
//!   orderings, braid embeddings, and the braid-relation anomaly ([`acc`]),
//! * the full cubic constraint system equivalent to the braid relation
//!   ([`constraints`]),
//! * a catalog of the known solution families with spectra, domain checks and
//!   seeded random instantiation ([`catalog`]),
//! * the order-eight symmetry group acting on solutions ([`symmetry`]),
//! * Hecke / Temperley-Lieb certification and tower multiplicity tables
//!   ([`hecke`]),
//! * serialized interchange formats for matrices, parameter sets and reports
//!   ([`io`]).
//!
//! All tensor-product computations (`braid_anomaly`, `braid_embed`,
//! `ybe_residual`, the Hecke tower) consume the **rlex presentation** of an
//! operator; see [`acc::BasisOrdering`] for the conventions and exact
//! conversions between presentations.

pub mod acc;
pub mod catalog;
pub mod constraints;
pub mod hecke;
pub mod io;
pub mod numerics;
pub mod symmetry;

pub use num_complex::Complex64;

/// Shorthand used throughout the crate.
pub type C64 = Complex64;
