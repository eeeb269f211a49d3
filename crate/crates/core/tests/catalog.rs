use hopfq::catalog::{self, build, check_manifest, Level};
use hopfq::format::{Document, MorphismData};
use hopfq::hopf::{
    check_antipode_properties, codualize, convolution, convolution_inverse, convolution_unit, dualize,
    HopfQuasigroupData,
};
use hopfq::loops::builtin_group;
use hopfq::products::parity_pairing;
use hopfq::{Error, Field, LinMap};
use proptest::prelude::*;

const Q: Field = Field::Rational;

fn hopf_quasigroup(name: &str, field: Field) -> HopfQuasigroupData {
    match build(name, field).unwrap().document {
        Document::HopfQuasigroup(h) => h,
        other => panic!("{name} built a {}", other.kind()),
    }
}

const HQ_NAMES: [&str; 8] = [
    "taft4",
    "cross_z2_swap",
    "loop_algebra:s3",
    "loop_algebra:z_5",
    "loop_algebra:z2xz2",
    "loop_algebra:m_s3_2",
    "loop_algebra:m_z3_2",
    "chein_taft_dcp",
];

#[test]
fn every_entry_builds_and_its_manifest_holds() {
    for name in catalog::sample_names() {
        let built = build(name, Q).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(built.report.all_passed(), "{name}: {}", built.report);
        assert!(!built.report.entries.is_empty());
    }
}

#[test]
fn manifest_claims_are_checked_not_assumed() {
    let mut built = build("taft4", Q).unwrap();
    built.manifest.commutative = Some(true);
    built.manifest.dim = 5;
    let r = check_manifest(&built.document, &built.manifest).unwrap();
    assert_eq!(r.failed_axioms(), vec!["dim", "commutative"]);
}

#[test]
fn aliases_build_the_same_objects() {
    for (alias, name) in [
        ("paper_matched_pair", "chein_taft_pair"),
        ("paper_dcp", "chein_taft_dcp"),
        ("paper_dcp_dual", "chein_taft_dcp_dual"),
    ] {
        let a = build(alias, Q).unwrap().document.to_json();
        let b = build(name, Q).unwrap().document.to_json();
        assert_eq!(a, b, "{alias}");
    }
    assert_eq!(build("paper_dcp", Q).unwrap().manifest.dim, 48);
}

#[test]
fn chein_loop_entry_has_twelve_elements() {
    let built = build("m_s3_2", Q).unwrap();
    let Document::Loop(l) = &built.document else { panic!("not a loop") };
    assert_eq!(l.order, 12);
    assert_eq!(built.manifest.associative, Some(false));
    assert!(Level::IpLoop.run(&built.document).unwrap().all_passed());
}

#[test]
fn unknown_names_are_rejected() {
    for name in ["q8", "m_q8_2", "loop_algebra:", "taft5", ""] {
        assert!(matches!(build(name, Q), Err(Error::UnknownName(_))), "{name}");
    }
}

#[test]
fn serialization_roundtrip_on_every_entry() {
    for field in [Q, Field::prime(7).unwrap()] {
        for name in catalog::sample_names() {
            let doc = build(name, field).unwrap().document;
            let text = doc.to_string_pretty();
            let back = Document::parse(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(back.to_string_pretty(), text, "{name} over {field}");
        }
    }
}

#[test]
fn rational_entries_are_strings_and_prime_entries_integers() {
    let q = build("taft4", Q).unwrap().document.to_json();
    assert_eq!(q["schema"], "hopfq/v1");
    assert_eq!(q["convention"], "row-major-left-major-v1");
    assert_eq!(q["field"]["type"], "rational");
    assert_eq!(q["maps"]["antipode"][2][3], "-1");
    let p = build("taft4", Field::prime(5).unwrap()).unwrap().document.to_json();
    assert_eq!(p["field"], serde_json::json!({"type": "prime", "p": 5}));
    assert_eq!(p["maps"]["antipode"][2][3], 4);
}

#[test]
fn parser_accepts_fractions_and_integers() {
    let mut v = build("taft4", Q).unwrap().document.to_json();
    v["maps"]["antipode"][0][0] = serde_json::json!(1);
    v["maps"]["unit"][0][0] = serde_json::json!("2/2");
    let Document::HopfQuasigroup(h) = Document::from_json(&v).unwrap() else { panic!() };
    assert_eq!(h, hopf_quasigroup("taft4", Q));
}

#[test]
fn parser_rejects_bad_headers_and_shapes() {
    let good = build("taft4", Q).unwrap().document.to_json();
    let mut v = good.clone();
    v["convention"] = "column-major".into();
    assert!(matches!(Document::from_json(&v), Err(Error::Parse(_))));
    let mut v = good.clone();
    v["schema"] = "hopfq/v0".into();
    assert!(matches!(Document::from_json(&v), Err(Error::Parse(_))));
    let mut v = good.clone();
    v["maps"]["product"].as_array_mut().unwrap().pop();
    assert!(matches!(Document::from_json(&v), Err(Error::Shape(_))));
    let mut v = good;
    v["maps"]["counit"][0][0] = "1/0".into();
    assert!(Document::from_json(&v).is_err());
    assert!(matches!(Document::parse("{"), Err(Error::Parse(_))));
}

#[test]
fn morphism_documents_roundtrip() {
    let h = hopf_quasigroup("taft4", Q);
    let doc = Document::Morphism(MorphismData { source: h.clone(), map: LinMap::identity(Q, &[4]) });
    let text = doc.to_string_pretty();
    assert_eq!(Document::parse(&text).unwrap().to_string_pretty(), text);
}

#[test]
fn double_dual_is_identity_on_every_structure() {
    for name in catalog::sample_names() {
        match build(name, Q).unwrap().document {
            Document::HopfQuasigroup(h) => assert_eq!(codualize(&dualize(&h)), h, "{name}"),
            Document::HopfCoquasigroup(d) => assert_eq!(dualize(&codualize(&d)), d, "{name}"),
            _ => {}
        }
    }
}

#[test]
fn levels_refuse_documents_of_the_wrong_kind() {
    let doc = build("s3", Q).unwrap().document;
    assert!(matches!(Level::Quasigroup.run(&doc), Err(Error::Precondition(_))));
    assert_eq!("matched-pair".parse::<Level>().unwrap(), Level::MatchedPair);
    assert!("associativity".parse::<Level>().is_err());
}

fn antipode_suite(h: &HopfQuasigroupData) {
    let (c, m) = (h.comonoid(), h.magma());
    let id = LinMap::identity(h.field, &[h.dim]);
    let unit = convolution_unit(&c, &m);
    assert_eq!(convolution(&h.antipode, &id, &c, &m).unwrap(), unit);
    assert_eq!(convolution(&id, &h.antipode, &c, &m).unwrap(), unit);
    assert_eq!(convolution_inverse(&h.antipode, &c, &m).unwrap(), id);
    let r = check_antipode_properties(h);
    for axiom in ["antimu", "anticm", "lambda-eta", "eps-lambda", "1-conv", "2-conv"] {
        assert!(r.passed(axiom), "{axiom}: {r}");
    }
}

#[test]
fn antipode_suite_on_the_double_cross_product() {
    antipode_suite(&hopf_quasigroup("chein_taft_dcp", Q));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn antipode_suite_on_catalog_objects(k in 0..HQ_NAMES.len() - 1, p in prop::sample::select(vec![0u64, 3, 5, 7])) {
        let field = if p == 0 { Q } else { Field::prime(p).unwrap() };
        antipode_suite(&hopf_quasigroup(HQ_NAMES[k], field));
    }

    #[test]
    fn parity_pairing_is_its_own_convolution_inverse(g in prop::sample::select(vec!["z1", "z2", "z3", "s3", "z2xz2"])) {
        let sp = parity_pairing(&builtin_group(g).unwrap(), Q).unwrap();
        let c = hopfq::hopf::ComonoidData::tensor(&sp.a.comonoid(), &sp.h.comonoid()).unwrap();
        let k = hopfq::hopf::UnitalMagmaData::ground(Q);
        prop_assert!(convolution_inverse(&sp.tau, &c, &k).unwrap().same_matrix(&sp.tau));
    }
}
