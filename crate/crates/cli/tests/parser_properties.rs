//! Parse/render round-trip over generated expression trees.

use fps_cli::ast::{CallName, Expr};
use fps_cli::parser::parse;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn expr_strategy() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0i64..50).prop_map(|n| Expr::Number(BigRational::from(BigInt::from(n)))),
        Just(Expr::Var),
    ];
    leaf.prop_recursive(5, 64, 4, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| Expr::Div(Box::new(a), Box::new(b))),
            (inner.clone(), -9i64..=9, 1i64..=4).prop_map(|(base, n, d)| Expr::Pow(
                Box::new(base),
                BigRational::new(BigInt::from(n), BigInt::from(d))
            )),
            (inner.clone(), 0usize..12).prop_map(|(arg, pick)| {
                let names = [
                    CallName::Exp,
                    CallName::Log1p,
                    CallName::Sqrt,
                    CallName::Sin,
                    CallName::Cos,
                    CallName::Tan,
                    CallName::Sinh,
                    CallName::Arcsin,
                    CallName::Arctan,
                    CallName::Inv,
                    CallName::Rev,
                    CallName::D,
                ];
                Expr::Call(names[pick], Box::new(arg))
            }),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::Subs(Box::new(a), Box::new(b))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn parse_render_parse_is_identity(ast in expr_strategy()) {
        let rendered = ast.render();
        let reparsed = parse(&rendered).unwrap();
        prop_assert_eq!(&reparsed, &ast, "rendered as {}", rendered);
        // and rendering is a fixed point from there on
        prop_assert_eq!(reparsed.render(), rendered);
    }
}
