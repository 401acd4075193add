use leavitt_cli::syntax::parse_element;
use leavitt_core::{enumerate_basis, AlgebraConfig, Element, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;

fn element(loops: u32, picks: &[(usize, i64, i64)]) -> (AlgebraConfig, Element) {
    let cfg = AlgebraConfig::new(loops).unwrap();
    let basis = enumerate_basis(&cfg, 4);
    let mut x = Element::zero();
    for &(k, n, d) in picks {
        let c = Rational::new(BigInt::from(n), BigInt::from(d));
        x.add_term(basis[k % basis.len()].clone(), c);
    }
    (cfg, x)
}

fn letter() -> impl Strategy<Value = String> {
    prop_oneof![
        Just("v".to_string()),
        (1u32..=3).prop_map(|i| format!("e{i}")),
        (1u32..=3).prop_map(|i| format!("e{i}'")),
    ]
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(
        loops in 1u32..=3,
        picks in proptest::collection::vec((0usize..10_000, -20i64..=20, 1i64..=7), 0..6),
    ) {
        let (cfg, x) = element(loops, &picks);
        let printed = x.to_string();
        let back = parse_element(&printed, &cfg).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn normalizing_printed_source_is_idempotent(
        terms in proptest::collection::vec(
            ((-9i64..=9), proptest::collection::vec(letter(), 1..6)),
            1..4,
        ),
    ) {
        let cfg = AlgebraConfig::new(3).unwrap();
        let mut source = String::new();
        for (k, (c, w)) in terms.iter().enumerate() {
            let sign = if *c < 0 { "-" } else if k > 0 { "+" } else { "" };
            source.push_str(&format!(" {sign} {}*{}", c.abs(), w.join(" ")));
        }
        let once = parse_element(&source, &cfg).unwrap().to_string();
        let twice = parse_element(&once, &cfg).unwrap().to_string();
        prop_assert_eq!(once, twice);
    }
}
