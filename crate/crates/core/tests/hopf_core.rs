use hopfq::hopf::{
    associativity_witness, check_antipode_properties, codualize, convolution, convolution_inverse, convolution_unit,
    dualize, is_associative, is_coassociative, is_cocommutative, is_commutative, is_hopf_morphism,
    validate_hopf_coquasigroup, validate_hopf_quasigroup, HopfCoquasigroupData, HopfMaps, HopfQuasigroupData,
};
use hopfq::loops::{builtin_group, chein_double, direct_product, loop_algebra};
use hopfq::products::taft_algebra;
use hopfq::{Field, LinMap};
use proptest::prelude::*;

const Q: Field = Field::Rational;

fn taft() -> HopfQuasigroupData {
    taft_algebra(Q).unwrap()
}

fn m_s3_2() -> HopfQuasigroupData {
    loop_algebra(&chein_double(&builtin_group("s3").unwrap()), Q).unwrap()
}

/// Products of basis elements transcribed independently: (a, b) -> (c, sign).
const TAFT_TABLE: [[(usize, i64); 4]; 4] = [
    [(0, 1), (1, 1), (2, 1), (3, 1)],
    [(1, 1), (0, 1), (3, 1), (2, 1)],
    [(2, 1), (3, -1), (0, 0), (0, 0)],
    [(3, 1), (2, -1), (0, 0), (0, 0)],
];

#[test]
fn unit_law_through_dense_composition() {
    let h = taft();
    let lhs = h.product.compose(&h.unit.kron(&LinMap::identity(Q, &[4])).unwrap()).unwrap();
    assert!(lhs.is_identity());
    for a in 0..4 {
        for b in 0..4 {
            let (c, s) = TAFT_TABLE[a][b];
            for r in 0..4 {
                let want = if r == c { s } else { 0 };
                assert_eq!(*h.product.get(r, a * 4 + b), Q.int(want), "{a}·{b}");
            }
        }
    }
}

#[test]
fn counit_law_through_dense_composition() {
    let h = taft();
    let e = h.counit.kron(&LinMap::identity(Q, &[4])).unwrap();
    assert!(e.compose(&h.coproduct).unwrap().is_identity());
}

#[test]
fn catalog_objects_validate() {
    for h in [taft(), m_s3_2()] {
        let r = validate_hopf_quasigroup(&h);
        assert!(r.all_passed(), "{r}");
        let p = check_antipode_properties(&h);
        assert!(p.all_passed(), "{p}");
    }
}

#[test]
fn broken_antipode_fails_left_identity() {
    let mut h = taft();
    // λ(y) := y
    h.0.antipode.set(3, 2, Q.zero());
    h.0.antipode.set(2, 2, Q.one());
    let r = validate_hopf_quasigroup(&h);
    assert!(r.tier_passed("bimonoid"));
    let failed = r.failed_axioms();
    assert!(failed.iter().any(|a| a.starts_with("lH")), "{r}");
    let w = r.failures().next().unwrap().witness.clone().unwrap();
    assert_eq!(w.multi_index.len(), 2);
}

#[test]
fn duals_are_coquasigroups() {
    for h in [taft(), m_s3_2()] {
        let d = dualize(&h);
        let r = validate_hopf_coquasigroup(&d);
        assert!(r.all_passed(), "{r}");
        assert_eq!(codualize(&d), h);
    }
    let d = dualize(&m_s3_2());
    assert!(!d.comonoid().validate().passed("coassociativity"));
    assert!(d.magma().validate().all_passed());
}

#[test]
fn zeroed_antipode_breaks_coquasigroup_identities() {
    let d = dualize(&taft());
    let mut maps = d.maps().clone();
    maps.antipode = LinMap::zeros(Q, vec![4], vec![4]);
    let r = validate_hopf_coquasigroup(&HopfCoquasigroupData(maps));
    assert!(r.tier_passed("bimonoid"));
    assert!(!r.passed("clH.1") && !r.passed("clH.2"));
}

#[test]
fn convolution_identities() {
    for h in [taft(), m_s3_2()] {
        let (c, m) = (h.comonoid(), h.magma());
        let id = LinMap::identity(Q, &[h.dim]);
        let unit = convolution_unit(&c, &m);
        assert_eq!(convolution(&id, &h.antipode, &c, &m).unwrap(), unit);
        assert_eq!(convolution(&h.antipode, &id, &c, &m).unwrap(), unit);
        assert_eq!(convolution(&unit, &h.antipode, &c, &m).unwrap(), h.antipode);
        assert_eq!(convolution_inverse(&h.antipode, &c, &m).unwrap(), id);
        assert_eq!(convolution_inverse(&id, &c, &m).unwrap(), h.antipode);
        assert_eq!(convolution_inverse(&unit, &c, &m).unwrap(), unit);
    }
}

#[test]
fn zero_map_has_no_convolution_inverse() {
    let h = taft();
    let z = LinMap::zeros(Q, vec![4], vec![4]);
    assert!(matches!(
        convolution_inverse(&z, &h.comonoid(), &h.magma()),
        Err(hopfq::Error::NotConvolutionInvertible(_))
    ));
}

#[test]
fn commutativity_flags() {
    let t = taft();
    assert!(!is_commutative(&t) && !is_cocommutative(&t));
    assert!(is_associative(&t) && is_coassociative(&t));
    let l = m_s3_2();
    assert!(is_cocommutative(&l) && !is_commutative(&l));
    let [a, b, c] = associativity_witness(&l).expect("M(S3,2) is not associative");
    // Oracle: brute force over the loop table.
    let lp = chein_double(&builtin_group("s3").unwrap());
    assert_ne!(lp.mul(lp.mul(a, b), c), lp.mul(a, lp.mul(b, c)));
    assert_eq!(first_nonassociative(&lp), Some([a, b, c]));
}

fn first_nonassociative(l: &hopfq::FiniteLoop) -> Option<[usize; 3]> {
    let n = l.order;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if l.mul(l.mul(a, b), c) != l.mul(a, l.mul(b, c)) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

#[test]
fn identity_is_a_morphism_and_opposite_product_is_not() {
    let t = taft();
    let id = LinMap::identity(Q, &[4]);
    assert!(is_hopf_morphism(&id, &t, &t).unwrap().all_passed());
    let mut op = t.maps().clone();
    op.product = op.product.compose(&LinMap::swap(Q, 4, 4)).unwrap().reshape(vec![4, 4], vec![4]).unwrap();
    let r = is_hopf_morphism(&id, &t, &op).unwrap();
    assert!(!r.passed("multiplicative"));
    assert!(r.passed("unit") && r.passed("counit") && r.passed("comultiplicative"));
    assert!(is_hopf_morphism(&LinMap::identity(Q, &[3]), &t, &t).is_err());
}

#[test]
fn trivial_object_passes() {
    let one = LinMap::identity(Q, &[1]);
    let h = HopfQuasigroupData(
        HopfMaps::new(1, one.clone(), one.clone(), one.clone(), one.clone(), one).unwrap(),
    );
    assert!(validate_hopf_quasigroup(&h).all_passed());
    assert!(validate_hopf_coquasigroup(&dualize(&h)).all_passed());
    assert!(check_antipode_properties(&h).all_passed());
}

#[test]
fn shapes_are_checked() {
    let t = taft();
    let bad = HopfMaps::new(
        4,
        t.unit.clone(),
        LinMap::identity(Q, &[4]),
        t.counit.clone(),
        t.coproduct.clone(),
        t.antipode.clone(),
    );
    assert!(matches!(bad, Err(hopfq::Error::Shape(_))));
}

#[test]
fn prime_field_taft() {
    let f = Field::prime(3).unwrap();
    let t = taft_algebra(f).unwrap();
    assert!(validate_hopf_quasigroup(&t).all_passed());
    assert!(check_antipode_properties(&t).all_passed());
}

fn small_group() -> impl Strategy<Value = hopfq::FiniteGroup> {
    prop::sample::select(vec!["z1", "z2", "z3", "z4", "z5", "z2xz2", "s3"])
        .prop_map(|n| builtin_group(n).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn loop_algebras_are_cocommutative_hopf_quasigroups(g in small_group(), double in any::<bool>(), p in prop::sample::select(vec![0u64, 3, 5, 7])) {
        let l = if double { chein_double(&g) } else { g.as_loop().clone() };
        let field = if p == 0 { Q } else { Field::prime(p).unwrap() };
        let h = loop_algebra(&l, field).unwrap();
        prop_assert!(validate_hopf_quasigroup(&h).all_passed());
        prop_assert!(check_antipode_properties(&h).all_passed());
        prop_assert!(is_cocommutative(&h));
        prop_assert_eq!(is_associative(&h), l.is_associative());
        prop_assert!(h.antipode.compose(&h.antipode).unwrap().is_identity());
        prop_assert!(validate_hopf_coquasigroup(&dualize(&h)).all_passed());
        if is_associative(&h) {
            prop_assert!(check_antipode_properties(&h).passed("1-conv"));
        }
    }

    #[test]
    fn products_of_loops(a in small_group(), b in small_group()) {
        let l = direct_product(&chein_double(&a), &b);
        prop_assume!(l.order <= 24);
        let h = loop_algebra(&l, Q).unwrap();
        prop_assert!(validate_hopf_quasigroup(&h).all_passed());
    }

    #[test]
    fn automorphisms_of_cyclic_groups_are_morphisms(n in 2usize..9, k in 1usize..9) {
        let g = builtin_group(&format!("z{n}")).unwrap();
        let h = loop_algebra(&g, Q).unwrap();
        let f = LinMap::from_basis_map(Q, vec![n], vec![n], |u| Some(((u * k) % n, 1)));
        let r = is_hopf_morphism(&f, &h, &h).unwrap();
        // u ↦ ku is a group endomorphism for every k.
        prop_assert!(r.tier_passed("morphism"));
        prop_assert!(r.passed("antipode-morphism"));
    }
}
