use bicyclic_core::cert::{
    ac1_escape, check_cert, continuity_cert_ac1, continuity_cert_ac2, validate_cert, ContinuityCert,
};
use bicyclic_core::falsify::falsify_cert;
use bicyclic_core::format::{emit, parse};
use bicyclic_core::geometry::Side;
use bicyclic_core::{q, qe, Elem, Error, NbhdAc1, NbhdAc2, QCert, QElem};
use proptest::prelude::*;

fn elem() -> impl Strategy<Value = QElem> {
    (0i64..40, 1i64..4, 0i64..40, 1i64..4).prop_map(|(a, da, b, db)| Elem::new(q(a, da), q(b, db)).unwrap())
}

fn side() -> impl Strategy<Value = Side> {
    prop_oneof![Just(Side::Left), Just(Side::Right)]
}

fn ac1_cert(side: Side, t: &QElem, n: i64) -> QCert {
    continuity_cert_ac1(side, t, &NbhdAc1::new(q(n, 1)).unwrap())
}

fn edit(cert: &QCert, from: &str, to: &str) -> String {
    let text = emit(cert);
    assert!(text.contains(from), "{from:?} not in\n{text}");
    text.replacen(from, to, 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ac1_round_trip(side in side(), t in elem(), n in 1i64..60) {
        let cert = ac1_cert(side, &t, n);
        prop_assert_eq!(validate_cert(&cert), Ok(true));
        let text = emit(&cert);
        let back = parse(&text).unwrap();
        prop_assert_eq!(emit(&back), text);
        prop_assert_eq!(validate_cert(&back), Ok(true));
    }

    #[test]
    fn ac1_chosen_radius_is_safe(side in side(), t in elem(), n in 1i64..60) {
        let ContinuityCert::Ac1(c) = ac1_cert(side, &t, n) else { unreachable!() };
        prop_assert_eq!(ac1_escape(side, &t, c.target.n(), c.chosen.n()), None);
    }

    #[test]
    fn ac2_round_trip(side in side(), t in elem(), tops in prop::collection::vec(elem(), 1..4)) {
        let cert = continuity_cert_ac2(side, &t, &NbhdAc2::new(tops).unwrap());
        prop_assert_eq!(validate_cert(&cert), Ok(true));
        let text = emit(&cert);
        let back = parse(&text).unwrap();
        prop_assert_eq!(emit(&back), text);
        prop_assert_eq!(validate_cert(&back), Ok(true));
    }
}

#[test]
fn worked_ac1() {
    let cert = ac1_cert(Side::Left, &qe(1, 2), 4);
    let ContinuityCert::Ac1(c) = &cert else { unreachable!() };
    assert_eq!(*c.chosen.n(), q(8, 1));
    assert_eq!(falsify_cert(&cert, 20_000, 3), None);
}

#[test]
fn worked_ac2() {
    let cert = continuity_cert_ac2(Side::Left, &qe(1, 2), &NbhdAc2::new(vec![qe(3, 1)]).unwrap());
    let ContinuityCert::Ac2(c) = &cert else { unreachable!() };
    assert_eq!(c.chosen.tops(), [qe(6, 3)]);
}

#[test]
fn shrinking_the_chosen_radius_is_caught() {
    let cert = ac1_cert(Side::Left, &qe(1, 2), 4);
    let bad = parse(&edit(&cert, "chosen: 8/1", "chosen: 4/1")).unwrap();
    assert_eq!(validate_cert(&bad), Ok(false));
    assert!(!check_cert(&bad).unwrap().is_empty());
    assert!(falsify_cert(&bad, 20_000, 3).is_some());
}

#[test]
fn tampered_evidence_is_caught() {
    let cert = ac1_cert(Side::Left, &qe(1, 2), 4);
    let chain = parse(&edit(&cert, "chain=open:7/1,ge:4/1,ge:4/1", "chain=open:3/1,ge:4/1,ge:4/1")).unwrap();
    assert_eq!(validate_cert(&chain), Ok(false));
    let piece = parse(&edit(&cert, "3b hold", "3b shift")).unwrap();
    assert_eq!(validate_cert(&piece), Ok(false));

    let cert = continuity_cert_ac2(Side::Left, &qe(1, 2), &NbhdAc2::new(vec![qe(3, 1)]).unwrap());
    let witness = parse(&edit(&cert, "witness=(6/1,3/1)", "witness=(5/1,2/1)")).unwrap();
    assert_eq!(validate_cert(&witness), Ok(false));
}

#[test]
fn parse_errors() {
    let cert = ac1_cert(Side::Left, &qe(1, 2), 4);
    assert!(matches!(parse(&edit(&cert, "case: 3a", "case: 9")), Err(Error::MalformedCert(_))));
    assert!(matches!(parse(&edit(&cert, "side: left", "side: up")), Err(Error::Format { line: 3, .. })));
    assert!(matches!(parse(&edit(&cert, "bicyclic-cert v1", "bicyclic-cert v2")), Err(Error::Format { line: 1, .. })));
    assert!(parse(&edit(&cert, "translator: (1/1,2/1)", "translator: (1/1,-2/1)")).is_err());
}
