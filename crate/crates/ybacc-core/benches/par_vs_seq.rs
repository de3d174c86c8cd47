//! Parallel vs sequential kernels.
//!
//! The `parallel` feature routes `mat_mul` through rayon once operands
//! reach `PAR_THRESHOLD`; this suite pits the two kernels against each
//! other directly at the sizes the tower builders actually produce
//! (3^4..3^6), and repeats the comparison on a whole certification
//! sweep, where the parallelism lives at the batch level instead of
//! inside the product.
//!
//! `cargo bench` runs with the feature on. Running
//! `cargo bench --no-default-features` drops the `par` entries and shows
//! the dispatching paths (the symmetrizer trace below) at their
//! sequential baseline.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_complex::Complex64 as C64;

use ybacc_core::acc::{assemble_check_r, BasisOrdering};
use ybacc_core::catalog::{instantiate, random_instance, verify_instance, FamilyId};
use ybacc_core::hecke::{hecke_extract, q_symmetrizer_trace};
use ybacc_core::numerics::{mat_mul_seq, SquareMatrix};

#[cfg(feature = "parallel")]
use ybacc_core::numerics::mat_mul_par;

/// Deterministic dense operands — no zero entries, so the zero-skipping
/// fast path stays out of the kernel comparison.
fn dense(side: usize, phase: f64) -> SquareMatrix {
    SquareMatrix::from_fn(side, |r, c| {
        let t = phase + (r * side + c) as f64;
        C64::new((1.3 * t).sin(), (0.7 * t).cos())
    })
}

fn bench_mat_mul(c: &mut Criterion) {
    let mut group = c.benchmark_group("mat_mul");
    group.sample_size(10);
    for side in [81usize, 243, 729] {
        let a = dense(side, 0.0);
        let b = dense(side, 0.5);
        group.bench_with_input(BenchmarkId::new("seq", side), &side, |bench, _| {
            bench.iter(|| mat_mul_seq(&a, &b))
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("par", side), &side, |bench, _| {
            bench.iter(|| mat_mul_par(&a, &b))
        });
    }
    group.finish();
}

/// One hundred seeded draws of the generic family through the full
/// verification battery. The per-instance matrices are small (9x9 and
/// 27x27, below the kernel threshold), so here the two arms compare
/// batch-level scheduling, not the product kernel.
fn bench_certification_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("certification_sweep");
    group.sample_size(10);
    group.bench_function("seq", |bench| {
        bench.iter(|| {
            let passes = (0..100u64)
                .filter(|&seed| {
                    verify_instance(&random_instance(FamilyId::Case1, seed), 1e-9)
                        .map(|o| o.pass)
                        .unwrap_or(false)
                })
                .count();
            assert_eq!(passes, 100);
        })
    });
    #[cfg(feature = "parallel")]
    group.bench_function("par", |bench| {
        use rayon::prelude::*;
        bench.iter(|| {
            let passes = (0..100u64)
                .into_par_iter()
                .filter(|&seed| {
                    verify_instance(&random_instance(FamilyId::Case1, seed), 1e-9)
                        .map(|o| o.pass)
                        .unwrap_or(false)
                })
                .count();
            assert_eq!(passes, 100);
        })
    });
    group.finish();
}

/// The five- and six-site symmetrizer traces go through the dispatching
/// `mat_mul`, so this group shows the feature flag's end-to-end effect:
/// compare the same entries between a default run and a
/// `--no-default-features` run.
fn bench_symmetrizer_trace(c: &mut Criterion) {
    let inst = random_instance(FamilyId::Case1, 7);
    let params = instantiate(&inst).expect("catalog draw instantiates").params;
    let m = assemble_check_r(&params, BasisOrdering::Rlex);
    let q = hecke_extract(&m, 1e-9).expect("generic family is Hecke").q;

    let mut group = c.benchmark_group("symmetrizer_trace");
    group.sample_size(10);
    for n in [5usize, 6] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, &n| {
            bench.iter(|| q_symmetrizer_trace(&m, n, q).expect("in-range level"))
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_mat_mul,
    bench_certification_sweep,
    bench_symmetrizer_trace
);
criterion_main!(benches);
