use iwforms_core::fixtures::{family_space, sl2};
use iwforms_dsl::{load, Outcome, Phase, Query, QueryOp, Value};

fn fixture(name: &str) -> String {
    let p = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    std::fs::read_to_string(p).unwrap()
}

#[test]
fn family_fixture() {
    let s = load(&fixture("family_n2.iw")).unwrap();
    assert_eq!(s.ambient, 3);
    let spaces: Vec<_> = s.bindings.iter().filter(|(_, v)| matches!(v, Value::Space(_))).collect();
    assert_eq!(spaces.len(), 1);
    assert_eq!(spaces[0].1, Value::Space(family_space(2)));
    assert_eq!(s.queries.len(), 1);
    let q = &s.queries[0];
    assert!(matches!(q.op, QueryOp::VeroneseWeb(..)));
    let Ok(Outcome::VeroneseWeb { contained, rnc, .. }) = q.run() else { panic!() };
    assert!(contained);
    assert!(rnc.is_rnc);
    assert_eq!(rnc.degree, 2);
}

#[test]
fn sl2_fixture() {
    let s = load(&fixture("sl2.iw")).unwrap();
    assert_eq!(s.get("g"), Some(&Value::Lie(sl2())));
    let Some(Outcome::Quadrics { system }) = s.queries.iter().find(|q| matches!(q.op, QueryOp::LieIw(_))).map(|q| q.run().unwrap()) else { panic!() };
    assert_eq!(system.len(), 1);
}

#[test]
fn every_fixture_meets_its_expectations() {
    for name in ["family_n2.iw", "sl2.iw", "sl2_point.iw", "heisenberg.iw", "gv.iw", "steiner_conic.iw"] {
        let s = load(&fixture(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
        for r in s.queries.iter().map(Query::evaluate) {
            assert_eq!(r.status, iwforms_dsl::exec::Status::Ok, "{name}: {} {:?}", r.query, r.error);
        }
    }
}

#[test]
fn rank_of_a_polynomial_is_a_type_error() {
    let e = load("ambient 2;\nq = x0^2 + x1;\nrank(q);").unwrap_err();
    assert_eq!(e.phase, Phase::Elaborate);
    assert_eq!((e.span.line, e.span.col), (3, 6));
    assert!(e.message.contains("polynomial"));
}

#[test]
fn degree_and_range_errors() {
    let e = load("ambient 2; w = d(x0) /\\ d(x1); is_integrable(w);").unwrap_err();
    assert!(e.message.contains("2-form"));
    assert!(load("ambient 2; w = d(x2);").is_err());
    assert!(load("ambient 2; is_integrable(v);").unwrap_err().message.contains("unbound"));
}
