use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ybacc_core::numerics::{
    annihilation_residual, kron, mat_mul, mat_mul_seq, multiplicities_from_traces, rank,
    NumericsError, SquareMatrix,
};
use ybacc_core::C64;

fn seeded(side: usize, seed: u64) -> SquareMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    SquareMatrix::from_fn(side, |_, _| {
        C64::new(rng.gen::<f64>() * 2.0 - 1.0, rng.gen::<f64>() * 2.0 - 1.0)
    })
}

/// Reference kernel: textbook triple loop, fixed i-k-j association so the
/// summation order matches the production kernels term for term.
fn mat_mul_oracle(a: &SquareMatrix, b: &SquareMatrix) -> SquareMatrix {
    let n = a.side();
    let mut out = SquareMatrix::zeros(n);
    for i in 0..n {
        for k in 0..n {
            let aik = a.get(i, k);
            for j in 0..n {
                out.set(i, j, out.get(i, j) + aik * b.get(k, j));
            }
        }
    }
    out
}

#[test]
fn mat_mul_matches_oracle_exactly() {
    for &side in &[1, 2, 3, 9, 27] {
        let a = seeded(side, 100 + side as u64);
        let b = seeded(side, 200 + side as u64);
        let want = mat_mul_oracle(&a, &b);
        let got = mat_mul(&a, &b);
        for r in 0..side {
            for c in 0..side {
                assert_eq!(got.get(r, c), want.get(r, c), "entry ({r},{c}) side {side}");
            }
        }
    }
}

#[test]
fn mat_mul_skips_zero_rows_without_changing_results() {
    // Sparse left operand: the zero-skipping path must agree with the oracle.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let side = 27;
    let a = SquareMatrix::from_fn(side, |_, _| {
        if rng.gen::<f64>() < 0.8 {
            C64::new(0.0, 0.0)
        } else {
            C64::new(rng.gen::<f64>() * 2.0 - 1.0, rng.gen::<f64>() * 2.0 - 1.0)
        }
    });
    let b = seeded(side, 8);
    let want = mat_mul_oracle(&a, &b);
    let got = mat_mul(&a, &b);
    assert!(got.max_diff(&want) == 0.0);
}

#[cfg(feature = "parallel")]
#[test]
fn parallel_kernel_is_bitwise_identical_to_sequential() {
    // 128 > the dispatch threshold, so mat_mul takes the rayon path.
    let a = seeded(128, 1);
    let b = seeded(128, 2);
    let par = mat_mul(&a, &b);
    let seq = mat_mul_seq(&a, &b);
    for r in 0..128 {
        for c in 0..128 {
            let (p, s) = (par.get(r, c), seq.get(r, c));
            assert_eq!(p.re.to_bits(), s.re.to_bits());
            assert_eq!(p.im.to_bits(), s.im.to_bits());
        }
    }
}

#[test]
fn kron_puts_first_factor_in_the_most_significant_slot() {
    let a = SquareMatrix::from_fn(2, |r, c| C64::new((10 * r + c) as f64, 0.0));
    let b = SquareMatrix::identity(3);
    let k = kron(&a, &b);
    assert_eq!(k.side(), 6);
    // Block (r,c) of the product is a[r][c] * b.
    for r in 0..2 {
        for c in 0..2 {
            for i in 0..3 {
                for j in 0..3 {
                    let want = a.get(r, c) * b.get(i, j);
                    assert_eq!(k.get(3 * r + i, 3 * c + j), want);
                }
            }
        }
    }
}

#[test]
fn rank_examples() {
    assert_eq!(rank(&SquareMatrix::zeros(3), 1e-9), 0);
    assert_eq!(rank(&SquareMatrix::identity(9), 1e-9), 9);
    // Outer product has rank 1.
    let u = [1.0, -2.0, 3.0];
    let v = [0.5, 0.25, -1.0];
    let m = SquareMatrix::from_fn(3, |r, c| C64::new(u[r] * v[c], 0.0));
    assert_eq!(rank(&m, 1e-9), 1);
}

/// The swap operator on a 3-dimensional factor pair: symmetric/antisymmetric
/// split gives eigenvalues {1 x 6, -1 x 3}.
fn swap9() -> SquareMatrix {
    let mut p = SquareMatrix::zeros(9);
    for a in 0..3 {
        for b in 0..3 {
            p.set(3 * a + b, 3 * b + a, C64::new(1.0, 0.0));
        }
    }
    p
}

#[test]
fn multiplicities_identity() {
    let got = multiplicities_from_traces(&SquareMatrix::identity(9), &[C64::new(1.0, 0.0)], 1e-9)
        .unwrap();
    assert_eq!(got, vec![(C64::new(1.0, 0.0), 9)]);
}

#[test]
fn multiplicities_swap() {
    let cands = [C64::new(1.0, 0.0), C64::new(-1.0, 0.0)];
    let got = multiplicities_from_traces(&swap9(), &cands, 1e-9).unwrap();
    assert_eq!(got[0].1, 6);
    assert_eq!(got[1].1, 3);
}

#[test]
fn multiplicities_on_a_catalog_point() {
    // The degree-split family at a = 2: eigenvalues 1, -a^2, a^3 with
    // multiplicities 5, 3, 1.
    use ybacc_core::acc::{assemble_check_r, BasisOrdering};
    use ybacc_core::catalog::{instantiate, FamilyId, FamilyInstance};
    let mut inst = FamilyInstance {
        id: FamilyId::Case3_1_1,
        continuous: Default::default(),
        discrete: Default::default(),
    };
    inst.continuous.insert("a".into(), C64::new(2.0, 0.0));
    inst.continuous.insert("c".into(), C64::new(1.0, 0.0));
    inst.continuous.insert("x4".into(), C64::new(1.0, 0.0));
    let m = assemble_check_r(&instantiate(&inst).unwrap().params, BasisOrdering::Rlex);
    let cands = [C64::new(1.0, 0.0), C64::new(-4.0, 0.0), C64::new(8.0, 0.0)];
    let got = multiplicities_from_traces(&m, &cands, 1e-9).unwrap();
    let mults: Vec<usize> = got.iter().map(|&(_, k)| k).collect();
    assert_eq!(mults, vec![5, 3, 1]);
}

#[test]
fn multiplicities_reject_coincident_candidates() {
    let cands = [C64::new(1.0, 0.0), C64::new(1.0, 1e-12)];
    match multiplicities_from_traces(&SquareMatrix::identity(9), &cands, 1e-9) {
        Err(NumericsError::CoincidentCandidates { .. }) => {}
        other => panic!("expected CoincidentCandidates, got {other:?}"),
    }
}

#[test]
fn multiplicities_reject_wrong_spectrum() {
    let cands = [C64::new(2.0, 0.0)];
    match multiplicities_from_traces(&SquareMatrix::identity(9), &cands, 1e-9) {
        Err(NumericsError::MinimalPolynomialMismatch { .. }) => {}
        other => panic!("expected MinimalPolynomialMismatch, got {other:?}"),
    }
}

#[test]
fn multiplicities_certify_jordan_blocks_via_cayley_hamilton() {
    // J2(1) + diag(-1): eigenvalues {1,1,-1} but (m-1)(m+1) != 0.
    let mut m = SquareMatrix::identity(3);
    m.set(0, 1, C64::new(1.0, 0.0));
    m.set(2, 2, C64::new(-1.0, 0.0));
    let cands = [C64::new(1.0, 0.0), C64::new(-1.0, 0.0)];
    let (stage1, _) = annihilation_residual(&m, &[(cands[0], 1), (cands[1], 1)]);
    assert!(stage1 > 0.5, "distinct product must fail here, got {stage1}");
    let got = multiplicities_from_traces(&m, &cands, 1e-9).unwrap();
    assert_eq!(got, vec![(cands[0], 2), (cands[1], 1)]);
    let (stage2, scale) = annihilation_residual(&m, &got);
    assert!(stage2 <= 1e-12 * scale);
}

#[test]
fn annihilation_residual_skips_zero_multiplicities() {
    let m = SquareMatrix::identity(4);
    let spectrum = [(C64::new(1.0, 0.0), 1), (C64::new(5.0, 0.0), 0)];
    let (resid, scale) = annihilation_residual(&m, &spectrum);
    assert_eq!(resid, 0.0);
    assert_eq!(scale, 1.0);
}

#[test]
fn conjugate_by_perm_relocates_entries() {
    let m = SquareMatrix::from_fn(3, |r, c| C64::new((3 * r + c) as f64, 0.0));
    let perm = [2, 0, 1];
    let g = m.conjugate_by_perm(&perm);
    for r in 0..3 {
        for c in 0..3 {
            assert_eq!(g.get(perm[r], perm[c]), m.get(r, c));
        }
    }
    // Same thing as Q m Q^T with the 0/1 permutation matrix.
    let q = SquareMatrix::permutation(&perm);
    let via_q = mat_mul(&mat_mul(&q, &m), &q.transpose());
    assert!(g.max_diff(&via_q) == 0.0);
}

fn complex_entry() -> impl Strategy<Value = C64> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(re, im)| C64::new(re, im))
}

fn matrix3() -> impl Strategy<Value = SquareMatrix> {
    proptest::collection::vec(complex_entry(), 9)
        .prop_map(SquareMatrix::from_row_major)
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn kron_mixed_product_law(a in matrix3(), b in matrix3(), c in matrix3(), d in matrix3()) {
        let lhs = mat_mul(&kron(&a, &b), &kron(&c, &d));
        let rhs = kron(&mat_mul(&a, &c), &mat_mul(&b, &d));
        let scale = lhs.max_abs().max(rhs.max_abs()).max(1.0);
        prop_assert!(lhs.max_diff(&rhs) <= 1e-10 * scale);
    }

    #[test]
    fn kron_trace_is_product_of_traces(a in matrix3(), b in matrix3()) {
        let lhs = kron(&a, &b).trace();
        let rhs = a.trace() * b.trace();
        prop_assert!((lhs - rhs).norm() <= 1e-12 * rhs.norm().max(1.0));
    }

    #[test]
    fn multiplicity_sum_is_side(diag in proptest::collection::vec(0usize..3, 9)) {
        // Diagonal matrix over three well-separated eigenvalues.
        let values = [C64::new(1.0, 0.0), C64::new(-2.0, 0.0), C64::new(0.5, 1.5)];
        let m = SquareMatrix::from_fn(9, |r, c| {
            if r == c { values[diag[r]] } else { C64::new(0.0, 0.0) }
        });
        let got = multiplicities_from_traces(&m, &values, 1e-9).unwrap();
        let total: usize = got.iter().map(|&(_, k)| k).sum();
        prop_assert_eq!(total, 9);
        for (i, &(_, k)) in got.iter().enumerate() {
            prop_assert_eq!(k, diag.iter().filter(|&&d| d == i).count());
        }
    }

    #[test]
    fn rank_is_invariant_under_well_conditioned_factors(seed in 0u64..1000) {
        // Identity plus a small seeded perturbation stays invertible.
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = SquareMatrix::from_fn(9, |r, c| {
            let base = if r == c { 1.0 } else { 0.0 };
            C64::new(base + 0.05 * (rng.gen::<f64>() - 0.5), 0.05 * (rng.gen::<f64>() - 0.5))
        });
        // A rank-3 test subject (three Vandermonde rows).
        let m = SquareMatrix::from_fn(9, |r, c| {
            if r < 3 { C64::new(((c + 1) as f64).powi(r as i32 + 1), 0.0) } else { C64::new(0.0, 0.0) }
        });
        let base_rank = rank(&m, 1e-9);
        prop_assert_eq!(base_rank, 3);
        prop_assert_eq!(rank(&mat_mul(&f, &m), 1e-9), 3);
        prop_assert_eq!(rank(&mat_mul(&m, &f), 1e-9), 3);
    }
}
