use kgsym::parse::{parse_jet, parse_operator};
use kgsym_core::{rat, FieldId, ReducedJetPoly, TDOperator, XYPoly};
use proptest::prelude::*;

fn xy() -> impl Strategy<Value = XYPoly> {
    prop::collection::vec((-9i64..=9, 1i64..=5, 0u32..=2, 0u32..=2), 0..4).prop_map(|ts| {
        ts.into_iter().fold(XYPoly::zero(), |acc, (n, d, i, j)| {
            &acc + &XYPoly::monomial(rat(n, d), i, j)
        })
    })
}

fn operator() -> impl Strategy<Value = TDOperator> {
    prop::collection::vec((xy(), 0u32..=3, 0u32..=3), 0..5).prop_map(|ts| {
        ts.into_iter()
            .filter(|(_, p, q)| p + q <= 3)
            .fold(TDOperator::zero(), |acc, (a, p, q)| {
                &acc + &TDOperator::term(a, p, q)
            })
    })
}

fn jet() -> impl Strategy<Value = ReducedJetPoly> {
    let var = (prop::bool::ANY, -4i64..=4)
        .prop_map(|(f, k)| ReducedJetPoly::field_var(if f { FieldId::F } else { FieldId::U }, k));
    prop::collection::vec((xy(), prop::collection::vec(var, 0..=2)), 0..5).prop_map(|ts| {
        ts.into_iter().fold(ReducedJetPoly::zero(), |acc, (a, vs)| {
            let m = vs
                .iter()
                .fold(ReducedJetPoly::coefficient(a), |m, v| &m * v);
            &acc + &m
        })
    })
}

proptest! {
    #[test]
    fn operators(op in operator()) {
        prop_assert_eq!(parse_operator(&op.to_string()).unwrap(), op);
    }

    #[test]
    fn jets(p in jet()) {
        prop_assert_eq!(parse_jet(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn composition_matches_parsed_product(a in operator(), b in operator()) {
        let text = format!("({a}) * ({b})");
        prop_assert_eq!(parse_operator(&text).unwrap(), a.compose(&b));
    }
}
