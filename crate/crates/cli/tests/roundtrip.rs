use facta::{CoeffRing, PolyExpr, PuiseuxMonoid, Rat};
use facta_cli::{parse_poly, parse_terms};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn ring() -> impl Strategy<Value = CoeffRing> {
    prop_oneof![
        Just(CoeffRing::Int),
        Just(CoeffRing::Rational),
        Just(CoeffRing::prime_field(7).unwrap()),
    ]
}

proptest! {
    #[test]
    fn render_then_parse_is_identity(
        ring in ring(),
        terms in prop::collection::vec((0u64..30, -99i64..=99, 1i64..=6), 0..7),
    ) {
        let m: PuiseuxMonoid = "grid:6".parse().unwrap();
        let terms: Vec<(Rat, BigRational)> = terms
            .into_iter()
            .map(|(k, n, d)| {
                let d = if ring == CoeffRing::Int { 1 } else { d };
                (Rat::ratio(k, 6), BigRational::new(BigInt::from(n), BigInt::from(d)))
            })
            .collect();
        let f = PolyExpr::new(ring, m.clone(), terms).unwrap();
        let text = f.to_string();
        let back = parse_poly(&text, ring, &m).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn parser_never_panics(text in "[0-9X^()/+* -]{0,16}") {
        let _ = parse_terms(&text);
    }
}
