use proptest::prelude::*;
use stacky_cli::expr::{parse_poly, Expr, Sugar};

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (0u32..1000).prop_map(|n| Expr::Num(n.into())),
        (1u32..13).prop_map(Expr::Zeta),
        prop_oneof![
            Just(Sugar::I),
            Just(Sugar::Sqrt2),
            Just(Sugar::Sqrt5),
            Just(Sugar::SqrtM3)
        ]
        .prop_map(Expr::Const),
        prop_oneof![Just("x"), Just("y"), Just("t1"), Just("I4")].prop_map(|v| Expr::Var(v.into())),
    ]
}

fn expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(5, 48, 2, |inner| {
        let b = |e: Expr| Box::new(e);
        prop_oneof![
            inner.clone().prop_map(move |a| Expr::Neg(b(a))),
            (inner.clone(), inner.clone()).prop_map(move |(l, r)| Expr::Add(b(l), b(r))),
            (inner.clone(), inner.clone()).prop_map(move |(l, r)| Expr::Sub(b(l), b(r))),
            (inner.clone(), inner.clone()).prop_map(move |(l, r)| Expr::Mul(b(l), b(r))),
            (inner, 0u32..5).prop_map(move |(a, k)| Expr::Pow(b(a), k)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn printed_expressions_reparse(e in expr()) {
        let text = e.to_string();
        let back = parse_poly(&text);
        prop_assert_eq!(back.as_ref(), Ok(&e), "printed as {}", text);
    }
}
