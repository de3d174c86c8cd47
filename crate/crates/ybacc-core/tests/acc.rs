use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ybacc_core::acc::{
    assemble_check_r, braid_anomaly, braid_embed, convert_ordering, extract_params,
    grlex_permutation, is_acc_shaped, slots, swap_operator, to_check, to_r, ybe_residual,
    AccError, AccParams, BasisOrdering, GRLEX_PERM, PARAM_NAMES, SWAP_PERM,
};
use ybacc_core::numerics::{kron, mat_mul, SquareMatrix};
use ybacc_core::C64;

const ORDERINGS: [BasisOrdering; 3] =
    [BasisOrdering::Lex, BasisOrdering::Rlex, BasisOrdering::Grlex];

fn seeded_params(seed: u64) -> AccParams {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v = [C64::new(0.0, 0.0); 19];
    for slot in v.iter_mut() {
        *slot = C64::new(rng.gen::<f64>() * 2.0 - 1.0, rng.gen::<f64>() * 2.0 - 1.0);
    }
    AccParams::from_array(v)
}

/// Distinct integer-tagged values make slot mix-ups loudly visible.
fn tagged_params() -> AccParams {
    let mut v = [C64::new(0.0, 0.0); 19];
    for (i, slot) in v.iter_mut().enumerate() {
        *slot = C64::new((i + 1) as f64, ((i + 1) * 100) as f64);
    }
    AccParams::from_array(v)
}

#[test]
fn assembly_places_every_parameter_at_its_slot() {
    let p = tagged_params();
    let arr = p.as_array();
    for ordering in ORDERINGS {
        let m = assemble_check_r(&p, ordering);
        let table = slots(ordering);
        for (i, &(r, c)) in table.iter().enumerate() {
            assert_eq!(m.get(r, c), arr[i], "{} at ({r},{c}) in {:?}", PARAM_NAMES[i], ordering);
        }
        // Everything off-pattern is exactly zero.
        let mut on: Vec<(usize, usize)> = table.to_vec();
        on.sort_unstable();
        for r in 0..9 {
            for c in 0..9 {
                if !on.contains(&(r, c)) {
                    assert_eq!(m.get(r, c), C64::new(0.0, 0.0), "({r},{c}) in {:?}", ordering);
                }
            }
        }
    }
}

#[test]
fn grlex_assembly_is_block_diagonal() {
    // Charge blocks of sides 1, 2, 3, 2, 1 along the diagonal.
    let m = assemble_check_r(&seeded_params(5), BasisOrdering::Grlex);
    let block_of = |i: usize| match i {
        0 => 0,
        1 | 2 => 1,
        3 | 4 | 5 => 2,
        6 | 7 => 3,
        _ => 4,
    };
    for r in 0..9 {
        for c in 0..9 {
            if block_of(r) != block_of(c) {
                assert_eq!(m.get(r, c), C64::new(0.0, 0.0), "({r},{c})");
            }
        }
    }
}

#[test]
fn ordering_conversions_match_reassembly_bit_exactly() {
    let p = seeded_params(11);
    for from in ORDERINGS {
        let mf = assemble_check_r(&p, from);
        for to in ORDERINGS {
            let converted = convert_ordering(&mf, from, to).unwrap();
            let direct = assemble_check_r(&p, to);
            assert!(converted.max_diff(&direct) == 0.0, "{from:?} -> {to:?}");
            // Round trip is the identity.
            let back = convert_ordering(&converted, to, from).unwrap();
            assert!(back.max_diff(&mf) == 0.0, "{from:?} <-> {to:?}");
        }
    }
}

#[test]
fn conversion_agrees_with_permutation_conjugation() {
    let p = seeded_params(12);
    let rlex = assemble_check_r(&p, BasisOrdering::Rlex);
    // rlex -> grlex is conjugation by P_G, rlex -> lex by the swap P.
    let grlex = convert_ordering(&rlex, BasisOrdering::Rlex, BasisOrdering::Grlex).unwrap();
    assert!(grlex.max_diff(&rlex.conjugate_by_perm(&GRLEX_PERM)) == 0.0);
    let lex = convert_ordering(&rlex, BasisOrdering::Rlex, BasisOrdering::Lex).unwrap();
    assert!(lex.max_diff(&rlex.conjugate_by_perm(&SWAP_PERM)) == 0.0);
    // As matrix identities: M_grlex = P_G M_rlex P_G^T.
    let pg = grlex_permutation();
    let via = mat_mul(&mat_mul(&pg, &rlex), &pg.transpose());
    assert!(grlex.max_diff(&via) == 0.0);
}

#[test]
fn extract_params_round_trips_bit_exactly() {
    let p = seeded_params(13);
    for ordering in ORDERINGS {
        let m = assemble_check_r(&p, ordering);
        let q = extract_params(&m, ordering).unwrap();
        assert_eq!(p.as_array(), q.as_array(), "{ordering:?}");
    }
}

#[test]
fn extract_params_rejects_off_pattern_entries() {
    let mut m = assemble_check_r(&seeded_params(14), BasisOrdering::Rlex);
    m.set(0, 8, C64::new(1e-3, 0.0)); // charge 0 -> charge 4: forbidden
    match extract_params(&m, BasisOrdering::Rlex) {
        Err(AccError::OffPatternEntry { row: 0, col: 8, .. }) => {}
        other => panic!("expected OffPatternEntry, got {other:?}"),
    }
}

#[test]
fn shape_check_sees_ordering_and_leaks() {
    let p = seeded_params(15);
    let rlex = assemble_check_r(&p, BasisOrdering::Rlex);
    assert!(is_acc_shaped(&rlex, BasisOrdering::Rlex, 1e-9));
    // A generic rlex matrix is not grlex-shaped and vice versa.
    assert!(!is_acc_shaped(&rlex, BasisOrdering::Grlex, 1e-9));
    let mut leaky = rlex.clone();
    leaky.set(0, 4, C64::new(1e-6, 0.0));
    assert!(!is_acc_shaped(&leaky, BasisOrdering::Rlex, 1e-9));
    // ... but a sub-tolerance leak is accepted.
    let mut tiny = rlex;
    tiny.set(0, 4, C64::new(1e-14, 0.0));
    assert!(is_acc_shaped(&tiny, BasisOrdering::Rlex, 1e-9));
}

#[test]
fn swap_operator_is_the_tensor_swap() {
    let p = swap_operator();
    // P (e_a x e_b) = e_b x e_a with rlex index 3a + b.
    for a in 0..3 {
        for b in 0..3 {
            for r in 0..9 {
                let want = if r == 3 * b + a { 1.0 } else { 0.0 };
                assert_eq!(p.get(r, 3 * a + b), C64::new(want, 0.0));
            }
        }
    }
    // Involution.
    assert!(mat_mul(&p, &p).max_diff(&SquareMatrix::identity(9)) == 0.0);
}

#[test]
fn braid_and_plain_forms_are_swap_related() {
    let rcheck = assemble_check_r(&seeded_params(16), BasisOrdering::Rlex);
    let r = to_r(&rcheck).unwrap();
    let p = swap_operator();
    // Rcheck = P R, hence R = P Rcheck.
    assert!(mat_mul(&p, &r).max_diff(&rcheck) == 0.0);
    assert!(mat_mul(&p, &rcheck).max_diff(&r) == 0.0);
    // Round trip.
    assert!(to_check(&r).unwrap().max_diff(&rcheck) == 0.0);
}

#[test]
fn braid_embed_tensor_positions() {
    let m = assemble_check_r(&seeded_params(17), BasisOrdering::Rlex);
    assert!(braid_embed(&m, 2, 1).unwrap().max_diff(&m) == 0.0);
    let i3 = SquareMatrix::identity(3);
    assert!(braid_embed(&m, 3, 1).unwrap().max_diff(&kron(&m, &i3)) == 0.0);
    assert!(braid_embed(&m, 3, 2).unwrap().max_diff(&kron(&i3, &m)) == 0.0);
    assert_eq!(braid_embed(&m, 4, 2).unwrap().side(), 81);
    assert!(matches!(braid_embed(&m, 3, 3), Err(AccError::GeneratorOutOfRange { .. })));
    assert!(matches!(braid_embed(&m, 7, 1), Err(AccError::SitesOutOfRange { .. })));
}

#[test]
fn distant_generators_commute() {
    let m = assemble_check_r(&seeded_params(18), BasisOrdering::Rlex);
    let r1 = braid_embed(&m, 4, 1).unwrap();
    let r3 = braid_embed(&m, 4, 3).unwrap();
    let lhs = mat_mul(&r1, &r3);
    let rhs = mat_mul(&r3, &r1);
    assert!(lhs.max_diff(&rhs) <= 1e-12 * lhs.max_abs());
}

// --- Anomaly rows against the printed closed forms ---------------------

struct RowCheck {
    row: usize,
    entries: Vec<(usize, C64)>,
}

/// Rows 1 (`|001>`) and 2 (`|002>`) of the braid anomaly in closed form.
fn closed_form_rows(p: &AccParams) -> [RowCheck; 2] {
    let AccParams { a1, a2, a12, b12, c12, d12, a13, b13, c13, d13, x1, x2, x3, x4, .. } = *p;
    let row1 = RowCheck {
        row: 1,
        entries: vec![
            (1, -a12 * b12 * c12 - a1 * a12 * a12 + a1 * a1 * a12),
            (3, -a12 * b12 * d12),
        ],
    };
    let row2 = RowCheck {
        row: 2,
        entries: vec![
            (2, -a12 * x1 * x2 - a13 * b13 * c13 - a1 * a13 * a13 + a1 * a1 * a13),
            (4, -a13 * b13 * x4 + (a1 * a12 - a12 * a2 - a1 * a13) * x1),
            (6, -a12 * x1 * x3 - a13 * b13 * d13),
            (10, (a1 * b12 - a12 * b12 - b13 * c12) * x1),
            (12, (a1 * b13 - b13 * d12 - b12 * b12) * x1),
        ],
    };
    [row1, row2]
}

#[test]
fn anomaly_rows_001_and_002_match_closed_forms() {
    for seed in 0..20u64 {
        let p = seeded_params(1000 + seed);
        let m = assemble_check_r(&p, BasisOrdering::Rlex);
        let anomaly = braid_anomaly(&m).unwrap();
        let cubic = p.max_abs().powi(3).max(1.0);
        for check in closed_form_rows(&p) {
            let nonzero: Vec<usize> = check.entries.iter().map(|&(c, _)| c).collect();
            for (col, want) in &check.entries {
                let got = anomaly.get(check.row, *col);
                assert!(
                    (got - want).norm() <= 1e-12 * want.norm().max(1.0),
                    "seed {seed} A[{},{}]: got {got}, want {want}",
                    check.row,
                    col
                );
            }
            for col in 0..27 {
                if !nonzero.contains(&col) {
                    let got = anomaly.get(check.row, col).norm();
                    assert!(got <= 1e-12 * cubic, "seed {seed} A[{},{col}] = {got:e}", check.row);
                }
            }
        }
    }
}

#[test]
fn row_000_of_the_anomaly_vanishes_identically() {
    let p = seeded_params(55);
    let anomaly = braid_anomaly(&assemble_check_r(&p, BasisOrdering::Rlex)).unwrap();
    let cubic = p.max_abs().powi(3).max(1.0);
    for col in 0..27 {
        assert!(anomaly.get(0, col).norm() <= 1e-12 * cubic);
    }
}

#[test]
fn anomaly_and_ybe_vanish_together_on_solutions() {
    use ybacc_core::catalog::{instantiate, random_instance, FamilyId};
    let inst = random_instance(FamilyId::Case3_1_1, 3);
    let m = assemble_check_r(&instantiate(&inst).unwrap().params, BasisOrdering::Rlex);
    let scale = m.max_abs().powi(3);
    assert!(braid_anomaly(&m).unwrap().max_abs() <= 1e-12 * scale);
    assert!(ybe_residual(&to_r(&m).unwrap()).unwrap() <= 1e-12 * scale);
    // And are both loudly nonzero on a generic non-solution.
    let bad = assemble_check_r(&seeded_params(66), BasisOrdering::Rlex);
    let bad_scale = bad.max_abs().powi(3);
    assert!(braid_anomaly(&bad).unwrap().max_abs() > 1e-3 * bad_scale);
    assert!(ybe_residual(&to_r(&bad).unwrap()).unwrap() > 1e-3 * bad_scale);
}

#[test]
fn ordering_tags_round_trip() {
    for ordering in ORDERINGS {
        assert_eq!(BasisOrdering::parse(ordering.as_str()), Some(ordering));
    }
    assert_eq!(BasisOrdering::parse("nope"), None);
}

fn small_complex() -> impl Strategy<Value = C64> {
    (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(re, im)| C64::new(re, im))
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn anomaly_is_cubic_homogeneous(seed in 0u64..500, lam in small_complex()) {
        prop_assume!(lam.norm() > 0.05);
        let p = seeded_params(seed);
        let m = assemble_check_r(&p, BasisOrdering::Rlex);
        let a1 = braid_anomaly(&m.scale(lam)).unwrap();
        let a0 = braid_anomaly(&m).unwrap().scale(lam * lam * lam);
        let scale = a0.max_abs().max(1.0);
        prop_assert!(a1.max_diff(&a0) <= 1e-10 * scale);
    }

    #[test]
    fn params_survive_any_ordering_pair(seed in 0u64..500) {
        let p = seeded_params(seed);
        for from in ORDERINGS {
            for to in ORDERINGS {
                let m = convert_ordering(&assemble_check_r(&p, from), from, to).unwrap();
                let q = extract_params(&m, to).unwrap();
                prop_assert_eq!(p.as_array(), q.as_array());
            }
        }
    }
}
