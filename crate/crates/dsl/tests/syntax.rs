use iwforms_dsl::ast::{BinOp, Expr, ExprKind, StmtKind};
use iwforms_dsl::{parse, parse_expr, pretty, pretty_expr, Phase, Span};
use num_bigint::BigInt;
use proptest::prelude::*;

fn fixture_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn fixtures() -> Vec<(String, String)> {
    let mut out: Vec<_> = std::fs::read_dir(fixture_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "iw"))
        .map(|p| (p.display().to_string(), std::fs::read_to_string(&p).unwrap()))
        .collect();
    out.sort();
    assert!(!out.is_empty());
    out
}

#[test]
fn one_form_binding_parses() {
    let ast = parse("ambient 3; w = (2 + 3*x0)*d(x1);").unwrap();
    assert_eq!(ast.statements.len(), 2);
    assert_eq!(ast.statements[0].kind, StmtKind::Ambient(3));
    let StmtKind::Bind(name, e) = &ast.statements[1].kind else { panic!() };
    assert_eq!(name, "w");
    assert!(matches!(&e.kind, ExprKind::Binary(BinOp::Mul, _, r) if matches!(r.kind, ExprKind::D(_))));
}

#[test]
fn two_form_binding_parses() {
    let ast = parse("ambient 2; w = d(x0) /\\ d(x1);").unwrap();
    let StmtKind::Bind(_, e) = &ast.statements[1].kind else { panic!() };
    assert!(matches!(e.kind, ExprKind::Binary(BinOp::Wedge, ..)));
}

#[test]
fn missing_operand_points_at_semicolon() {
    let e = parse("ambient 1; w = d(x0) + ;").unwrap_err();
    assert_eq!(e.phase, Phase::Parse);
    assert_eq!(e.span, Span::new(1, 24));
    assert!(e.message.contains("expected an expression"), "{e}");
    assert!(!e.expected.is_empty());
}

#[test]
fn precedence() {
    let e = parse_expr("a + b /\\ c * e ^ 2").unwrap();
    assert_eq!(pretty_expr(&e), "a + b /\\ c*e^2");
    let ExprKind::Binary(BinOp::Add, _, r) = &e.kind else { panic!() };
    let ExprKind::Binary(BinOp::Wedge, _, r) = &r.kind else { panic!() };
    assert!(matches!(r.kind, ExprKind::Binary(BinOp::Mul, ..)));
    let e = parse_expr("d(x0) /\\ d(x1) + d(x2) /\\ d(x0)").unwrap();
    assert!(matches!(e.kind, ExprKind::Binary(BinOp::Add, ..)));
}

#[test]
fn located_errors() {
    for (src, line, col) in [
        ("ambient 2;\nw = d(x0);\nw = d(x1);", 3, 1),
        ("ambient 2;\nw = d(x5);", 2, 7),
        ("w = 1.5;", 1, 6),
        ("ambient 2; w = d(x0) $ 1;", 1, 22),
    ] {
        let e = parse(src).unwrap_err();
        assert_eq!(e.span, Span::new(line, col), "{src}: {e}");
    }
}

#[test]
fn fixtures_round_trip() {
    for (path, src) in fixtures() {
        let ast = parse(&src).unwrap_or_else(|e| panic!("{path}: {e}"));
        let once = pretty(&ast);
        let again = parse(&once).unwrap();
        assert_eq!(again, ast, "{path}");
        assert_eq!(pretty(&again), once, "{path}");
    }
}

fn leaf() -> impl Strategy<Value = Expr> {
    let sp = Span::new(1, 1);
    prop_oneof![
        (0u32..50).prop_map(move |k| Expr::new(ExprKind::Int(BigInt::from(k)), sp)),
        (0usize..4).prop_map(move |k| Expr::new(ExprKind::Var(k), sp)),
        Just(Expr::new(ExprKind::Z, sp)),
        prop::sample::select(vec!["a", "w0", "F", "omega_1"])
            .prop_map(move |n| Expr::new(ExprKind::Name(n.into()), sp)),
    ]
}

fn expr() -> impl Strategy<Value = Expr> {
    let sp = Span::new(1, 1);
    leaf().prop_recursive(5, 48, 4, move |inner| {
        prop_oneof![
            inner.clone().prop_map(move |e| Expr::new(ExprKind::Neg(Box::new(e)), sp)),
            (
                prop::sample::select(vec![BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Div, BinOp::Wedge]),
                inner.clone(),
                inner.clone()
            )
                .prop_map(move |(op, a, b)| Expr::new(ExprKind::Binary(op, Box::new(a), Box::new(b)), sp)),
            (inner.clone(), 0u32..5)
                .prop_map(move |(e, k)| Expr::new(ExprKind::Pow(Box::new(e), k), sp)),
            inner.clone().prop_map(move |e| Expr::new(ExprKind::D(Box::new(e)), sp)),
            prop::collection::vec(inner.clone(), 0..3)
                .prop_map(move |v| Expr::new(ExprKind::List(v), sp)),
            prop::collection::vec(inner, 1..3)
                .prop_map(move |v| Expr::new(ExprKind::Call("space".into(), v), sp)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn pretty_then_parse_is_identity(e in expr()) {
        let text = pretty_expr(&e);
        let back = parse_expr(&text).map_err(|d| TestCaseError::fail(format!("{text}: {d}")))?;
        prop_assert_eq!(&back, &e, "{}", text);
        prop_assert_eq!(pretty_expr(&back), text);
    }
}
