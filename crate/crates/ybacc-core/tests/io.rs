use num_complex::Complex64 as C64;
use proptest::prelude::*;

use ybacc_core::acc::{assemble_check_r, BasisOrdering};
use ybacc_core::catalog::{instantiate, random_instance, FamilyId, ALL_FAMILIES};
use ybacc_core::io::{
    format_complex, parse_complex, InstanceFile, IoError, MatrixFile, ParamFile,
};
use ybacc_core::numerics::SquareMatrix;

fn bits(z: C64) -> (u64, u64) {
    (z.re.to_bits(), z.im.to_bits())
}

#[test]
fn matrix_file_round_trips_bit_exactly() {
    for (id, ordering) in [
        (FamilyId::Case1, BasisOrdering::Rlex),
        (FamilyId::Case5_7, BasisOrdering::Grlex),
        (FamilyId::Case6_2_2, BasisOrdering::Lex),
    ] {
        let params = instantiate(&random_instance(id, 5)).unwrap().params;
        let m = assemble_check_r(&params, ordering);
        let file = MatrixFile::from_matrix(&m, ordering);
        let json = serde_json::to_string(&file).unwrap();
        let back: MatrixFile = serde_json::from_str(&json).unwrap();
        assert_eq!(back.ordering, ordering);
        assert_eq!(back.side, 9);
        let m2 = back.to_matrix().unwrap();
        for r in 0..9 {
            for c in 0..9 {
                assert_eq!(bits(m.get(r, c)), bits(m2.get(r, c)), "{id:?} ({r},{c})");
            }
        }
        // Serializing again is byte-identical (deterministic output).
        assert_eq!(json, serde_json::to_string(&back).unwrap());
    }
}

#[test]
fn matrix_file_golden_shape() {
    let mut m = SquareMatrix::zeros(1);
    m.set(0, 0, C64::new(2.0, -1.0));
    let json = serde_json::to_string(&MatrixFile::from_matrix(&m, BasisOrdering::Rlex)).unwrap();
    assert_eq!(json, r#"{"ordering":"rlex","side":1,"entries":[[[2.0,-1.0]]]}"#);
}

#[test]
fn matrix_file_rejects_bad_shapes_and_values() {
    let good = |side: usize| MatrixFile {
        ordering: BasisOrdering::Rlex,
        side,
        entries: vec![vec![[0.0, 0.0]; side]; side],
    };

    let mut short = good(3);
    short.entries.pop();
    assert!(matches!(
        short.to_matrix(),
        Err(IoError::RowCountMismatch { side: 3, rows: 2 })
    ));

    let mut ragged = good(3);
    ragged.entries[1].pop();
    assert!(matches!(
        ragged.to_matrix(),
        Err(IoError::RowLengthMismatch { row: 1, len: 2, side: 3 })
    ));

    let mut inf = good(2);
    inf.entries[0][1] = [f64::INFINITY, 0.0];
    assert!(matches!(inf.to_matrix(), Err(IoError::NonFiniteEntry { row: 0, col: 1 })));

    let mut nan = good(2);
    nan.entries[1][0] = [0.0, f64::NAN];
    assert!(matches!(nan.to_matrix(), Err(IoError::NonFiniteEntry { row: 1, col: 0 })));
}

#[test]
fn malformed_json_becomes_a_structured_error() {
    let err: IoError = serde_json::from_str::<MatrixFile>("{not json").unwrap_err().into();
    assert!(matches!(err, IoError::Json(_)));
    assert!(!err.to_string().is_empty());
    // Unknown ordering tags are JSON-level errors too.
    let bad = r#"{"ordering":"colex","side":1,"entries":[[[0.0,0.0]]]}"#;
    assert!(serde_json::from_str::<MatrixFile>(bad).is_err());
}

#[test]
fn param_file_round_trips_and_orders_fields_canonically() {
    let params = instantiate(&random_instance(FamilyId::Case3_1_1, 21)).unwrap().params;
    let file = ParamFile::from_params(&params);
    let json = serde_json::to_string(&file).unwrap();
    let back: ParamFile = serde_json::from_str(&json).unwrap();
    let p2 = back.to_params().unwrap();
    for (a, b) in params.as_array().iter().zip(p2.as_array()) {
        assert_eq!(bits(*a), bits(b));
    }
    // Keys appear in canonical parameter order in the serialized text.
    let positions: Vec<usize> = ybacc_core::acc::PARAM_NAMES
        .iter()
        .map(|name| json.find(&format!("\"{name}\":")).expect(name))
        .collect();
    for w in positions.windows(2) {
        assert!(w[0] < w[1], "field order drifted");
    }
}

#[test]
fn param_file_rejects_non_finite_values() {
    let params = instantiate(&random_instance(FamilyId::Case5_2_1, 2)).unwrap().params;
    let mut file = ParamFile::from_params(&params);
    file.b12 = [f64::NAN, 0.0];
    match file.to_params() {
        Err(IoError::NonFiniteParam { name }) => assert_eq!(name, "b12"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn instance_file_round_trips_every_family() {
    for id in ALL_FAMILIES {
        let inst = random_instance(id, 9);
        let file = InstanceFile::from_instance(&inst);
        assert_eq!(file.family, id.as_str());
        let json = serde_json::to_string(&file).unwrap();
        let back = serde_json::from_str::<InstanceFile>(&json).unwrap().to_instance().unwrap();
        assert_eq!(back.id, inst.id);
        assert_eq!(back.discrete, inst.discrete);
        assert_eq!(back.continuous.len(), inst.continuous.len());
        for (name, value) in &inst.continuous {
            assert_eq!(bits(back.continuous[name]), bits(*value), "{id:?} {name}");
        }
    }
}

#[test]
fn instance_file_validates_family_and_values() {
    let unknown = InstanceFile {
        family: "case9".into(),
        continuous: Default::default(),
        discrete: Default::default(),
    };
    match unknown.to_instance() {
        Err(IoError::UnknownFamily { name }) => assert_eq!(name, "case9"),
        other => panic!("{other:?}"),
    }

    let bad_value = InstanceFile {
        family: "case1".into(),
        continuous: [("a".to_string(), [f64::NEG_INFINITY, 0.0])].into_iter().collect(),
        discrete: Default::default(),
    };
    match bad_value.to_instance() {
        Err(IoError::NonFiniteParam { name }) => assert_eq!(name, "a"),
        other => panic!("{other:?}"),
    }

    // Parameter maps are optional in the JSON source.
    let minimal: InstanceFile = serde_json::from_str(r#"{"family":"fixture_p"}"#).unwrap();
    assert_eq!(minimal.to_instance().unwrap().id, FamilyId::FixtureP);
}

#[test]
fn parse_complex_accepts_the_literal_grammar() {
    let cases = [
        ("1.5", 1.5, 0.0),
        ("-2", -2.0, 0.0),
        ("+3", 3.0, 0.0),
        ("0", 0.0, 0.0),
        ("1+2i", 1.0, 2.0),
        ("0.5-0.25i", 0.5, -0.25),
        ("2i", 0.0, 2.0),
        ("i", 0.0, 1.0),
        ("+i", 0.0, 1.0),
        ("-i", 0.0, -1.0),
        ("3+i", 3.0, 1.0),
        ("3-i", 3.0, -1.0),
        ("-1.5e2i", 0.0, -150.0),
        ("1e-3+2.5e2i", 1e-3, 250.0),
        ("1E-3-2E-4i", 1e-3, -2e-4),
        ("2I", 0.0, 2.0),
        (" 1+2i ", 1.0, 2.0),
        ("-0.5-0.5i", -0.5, -0.5),
    ];
    for (text, re, im) in cases {
        let z = parse_complex(text).unwrap_or_else(|e| panic!("{text}: {e}"));
        assert_eq!((z.re, z.im), (re, im), "{text}");
    }
}

#[test]
fn parse_complex_rejects_malformed_text() {
    for text in [
        "", " ", "abc", "1 + 2i", "i2", "1+i2", "1++2i", "--2", "1+2j",
        "nan", "inf", "-inf", "1e400", "nan+1i", "1+nani", "2ii",
    ] {
        assert!(
            matches!(parse_complex(text), Err(IoError::BadComplex { .. })),
            "{text:?} should not parse"
        );
    }
}

#[test]
fn format_complex_round_trips_reference_values() {
    let values = [
        C64::new(0.0, 0.0),
        C64::new(1.5, 0.0),
        C64::new(-2.0, 0.0),
        C64::new(0.0, 1.0),
        C64::new(0.0, -1.0),
        C64::new(0.0, 2.0),
        C64::new(1.0, 2.0),
        C64::new(0.5, -0.25),
        C64::new(1e-3, 250.0),
        C64::new(-1.0 / 3.0, 2.0_f64.sqrt()),
    ];
    for z in values {
        let text = format_complex(z);
        let back = parse_complex(&text).unwrap_or_else(|e| panic!("{text}: {e}"));
        assert_eq!(bits(back), bits(z), "{text}");
    }
    assert_eq!(format_complex(C64::new(0.0, 0.0)), "0");
    assert_eq!(format_complex(C64::new(1.0, 2.0)), "1+2i");
    assert_eq!(format_complex(C64::new(0.5, -0.25)), "0.5-0.25i");
    assert_eq!(format_complex(C64::new(0.0, -1.0)), "-1i");
}

proptest! {
    #![proptest_config(ProptestConfig {
        failure_persistence: None,
        cases: 256,
        ..ProptestConfig::default()
    })]

    /// Formatting then parsing returns the same bits (negative zero is
    /// normalized away in generation: the textual form drops a signed-zero
    /// component by design).
    #[test]
    fn prop_format_parse_identity(
        re in any::<f64>().prop_filter("finite", |x| x.is_finite()),
        im in any::<f64>().prop_filter("finite", |x| x.is_finite()),
    ) {
        let re = if re == 0.0 { 0.0 } else { re };
        let im = if im == 0.0 { 0.0 } else { im };
        let z = C64::new(re, im);
        let back = parse_complex(&format_complex(z)).unwrap();
        prop_assert_eq!(bits(back), bits(z));
    }

    /// Matrix payloads survive JSON with exact bits at any ordering tag.
    #[test]
    fn prop_matrix_json_round_trip(
        seed in 0u64..500,
        ord in prop_oneof![
            Just(BasisOrdering::Lex),
            Just(BasisOrdering::Rlex),
            Just(BasisOrdering::Grlex)
        ],
    ) {
        let params = instantiate(&random_instance(FamilyId::Case5_4_a, seed)).unwrap().params;
        let m = assemble_check_r(&params, ord);
        let json = serde_json::to_string(&MatrixFile::from_matrix(&m, ord)).unwrap();
        let back = serde_json::from_str::<MatrixFile>(&json).unwrap().to_matrix().unwrap();
        prop_assert_eq!(back.side(), m.side());
        for r in 0..9 {
            for c in 0..9 {
                prop_assert_eq!(bits(m.get(r, c)), bits(back.get(r, c)));
            }
        }
    }
}
