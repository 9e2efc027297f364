mod common;

use common::{partition, pt, skew};
use proptest::prelude::*;
use steengrass::arith::{q, qz};
use steengrass::symfunc::{
    convert, from_oracle, hammond, hook_content_spec, multiply, omega, pairing, principal_spec, principal_spec_skew,
    set_degree_cap, skew_schur, to_oracle, try_convert, Basis, SymElem, SymError,
};
use steengrass::young::partitions_of;
use steengrass::{Partition, SkewShape};

fn element(max: usize) -> impl Strategy<Value = SymElem> {
    (prop::collection::vec((partition(max), -3i64..=3), 1..4), 0usize..5)
        .prop_map(|(terms, b)| SymElem::from_int_terms(Basis::ALL[b], terms))
}

#[test]
fn hall_duality_and_symmetric_transition() {
    for n in 0..=6 {
        let parts = partitions_of(n);
        for a in &parts {
            for b in &parts {
                assert_eq!(pairing(&SymElem::m(a.clone()), &SymElem::h(b.clone())), q((a == b) as i64));
                let ab = convert(&SymElem::m(a.clone()), Basis::Elementary).coeff(b);
                let ba = convert(&SymElem::m(b.clone()), Basis::Elementary).coeff(a);
                assert_eq!(ab, ba, "{a} {b}");
            }
        }
    }
}

#[test]
fn coproduct_of_h_via_skew_rows() {
    for n in 0..=6 {
        for k in 0..=n {
            let s = SkewShape::new(Partition::row(n), Partition::row(k)).unwrap();
            assert_eq!(skew_schur(&s), convert(&SymElem::h([n - k]), Basis::Schur));
        }
    }
}

#[test]
fn degree_cap_is_enforced() {
    set_degree_cap(6);
    let r = try_convert(&SymElem::m([7]), Basis::Schur);
    set_degree_cap(steengrass::symfunc::DEFAULT_DEGREE_CAP);
    assert!(matches!(r, Err(SymError::DegreeCap { degree: 7, cap: 6 })));
}

#[test]
fn display_form() {
    let f = SymElem::from_int_terms(Basis::Schur, [(pt(&[2, 1]), 1), (pt(&[1, 1, 1]), -2)]);
    assert_eq!(f.to_string(), "s(2,1) - 2*s(1,1,1)");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn conversions_round_trip(f in element(6), b in 0usize..5) {
        let there = convert(&f, Basis::ALL[b]);
        prop_assert_eq!(convert(&there, f.basis()), f);
    }

    #[test]
    fn omega_is_an_involution_sending_s_to_conjugate(lam in partition(7)) {
        let s = SymElem::s(lam.clone());
        prop_assert_eq!(omega(&s), SymElem::s(lam.conjugate()));
        prop_assert_eq!(omega(&omega(&s)), s);
    }

    #[test]
    fn hammond_is_adjoint_to_multiplication(f in element(3), g in element(6), h in element(3)) {
        prop_assert_eq!(pairing(&hammond(&f, &g), &h), pairing(&g, &multiply(&f, &h)));
    }

    #[test]
    fn degree_operator(lam in partition(8)) {
        let s = SymElem::s(lam.clone());
        let mut acc = SymElem::zero(Basis::Schur);
        for i in 1..=lam.weight() {
            acc = acc + multiply(&SymElem::p([i]), &hammond(&SymElem::p([i]), &s));
        }
        prop_assert_eq!(acc, s.scale(&q(lam.weight() as i64)));
    }

    #[test]
    fn hook_content_matches_specialization(lam in partition(8), n in -4i64..=4) {
        prop_assert_eq!(hook_content_spec(&lam, n), principal_spec(&SymElem::s(lam.conjugate()), n));
    }

    #[test]
    fn skew_specialization_matches_expansion(s in skew(8), n in -3i64..=4) {
        let v = principal_spec_skew(&s, n);
        prop_assert_eq!(qz(v), principal_spec(&skew_schur(&s), n));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn oracle_is_a_ring_homomorphism(a in partition(4), b in partition(4)) {
        let (f, g) = (SymElem::s(a), SymElem::s(b));
        let lhs = to_oracle(&multiply(&f, &g), 8);
        prop_assert_eq!(lhs.clone(), to_oracle(&f, 8).mul(&to_oracle(&g, 8)));
        let back = from_oracle(&lhs).unwrap();
        prop_assert_eq!(convert(&back, Basis::Schur), multiply(&f, &g));
    }
}
