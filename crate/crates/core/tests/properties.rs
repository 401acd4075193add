//! Algebraic invariants checked on random inputs.

mod common;

use common::*;
use leavitt_core::derivation::generator_element;
use leavitt_core::report::{CoefficientIndex, Equation, Residual};
use leavitt_core::{
    ad, enumerate_basis, is_basis_monomial, multiply, oracle, reduce_word, BasisMonomial, DerivationSpec, Element,
    Generator, Rational,
};
use num_traits::One;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_forms_are_basic_and_stable(seed in any::<u64>(), l in 1u32..=3) {
        let c = cfg(l);
        let word = random_word(&mut rng(seed), &c, 8);
        let nf = reduce_word(&c, &word).unwrap();
        for (m, _) in &nf {
            prop_assert!(is_basis_monomial(&c, &m.spelling()));
            prop_assert_eq!(reduce_word(&c, &m.spelling()).unwrap(), Element::monomial(m.clone()));
        }
    }

    #[test]
    fn product_is_associative(seed in any::<u64>(), l in 1u32..=3) {
        let c = cfg(l);
        let mut r = rng(seed);
        let a = random_element(&mut r, &c, 4, 3);
        let b = random_element(&mut r, &c, 4, 3);
        let d = random_element(&mut r, &c, 4, 3);
        let left = multiply(&c, &a, &multiply(&c, &b, &d).unwrap()).unwrap();
        let right = multiply(&c, &multiply(&c, &a, &b).unwrap(), &d).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn unit_is_two_sided(seed in any::<u64>(), l in 1u32..=3) {
        let c = cfg(l);
        let a = random_element(&mut rng(seed), &c, 5, 4);
        prop_assert_eq!(multiply(&c, &Element::one(), &a).unwrap(), a.clone());
        prop_assert_eq!(multiply(&c, &a, &Element::one()).unwrap(), a);
    }

    #[test]
    fn oracle_agrees_with_normal_form(seed in any::<u64>(), l in 1u32..=3, s in any::<u64>()) {
        let c = cfg(l);
        let word = random_word(&mut rng(seed), &c, 8);
        prop_assert_eq!(oracle::exhaustive_reduce(&c, &word, s).unwrap(), reduce_word(&c, &word).unwrap());
    }

    #[test]
    fn extension_is_linear(seed in any::<u64>(), l in 1u32..=3) {
        let c = cfg(l);
        let mut r = rng(seed);
        let d = random_completed(&mut r, c, 3);
        let a = random_element(&mut r, &c, 4, 3);
        let b = random_element(&mut r, &c, 4, 3);
        let k = random_rational(&mut r);
        let mut combo = a.clone();
        combo.add_scaled(&k, &b);
        let mut expected = d.extend(&a).unwrap();
        expected.add_scaled(&k, &d.extend(&b).unwrap());
        prop_assert_eq!(d.extend(&combo).unwrap(), expected);
    }

    #[test]
    fn ad_is_linear(seed in any::<u64>(), l in 2u32..=3) {
        let c = cfg(l);
        let mut r = rng(seed);
        let x = random_element(&mut r, &c, 3, 3);
        let y = random_element(&mut r, &c, 3, 3);
        let (p, q) = (random_rational(&mut r), random_rational(&mut r));
        let mut combo = x.scale(&p);
        combo.add_scaled(&q, &y);
        let (dx, dy, dc) = (ad(&c, &x).unwrap(), ad(&c, &y).unwrap(), ad(&c, &combo).unwrap());
        for g in c.generators() {
            let mut expected = dx.value(g).scale(&p);
            expected.add_scaled(&q, &dy.value(g));
            prop_assert_eq!(dc.value(g).into_owned(), expected);
        }
    }

    #[test]
    fn ad_respects_relations(seed in any::<u64>(), l in 1u32..=3) {
        let c = cfg(l);
        let lambda = random_element(&mut rng(seed), &c, 5, 3);
        prop_assert!(ad(&c, &lambda).unwrap().check_relations().is_empty());
    }

    /// Relation residuals imply coefficient residuals, on arbitrary tables.
    #[test]
    fn relation_check_dominates_genth(seed in any::<u64>(), l in 1u32..=3, raw in any::<bool>()) {
        let c = cfg(l);
        let mut r = rng(seed);
        let d = if raw { random_raw_spec(&mut r, c, 3) } else { random_completed(&mut r, c, 3) };
        if d.check_relations().is_empty() {
            prop_assert!(d.check_genth_equations().is_empty());
        }
        if !raw {
            prop_assert!(d.check_relations().is_empty());
        }
    }
}

/// Each coefficient equation is the coefficient of one basis monomial in
/// `D(ei') ej + ei' D(ej)`; compare both sides on arbitrary tables.
#[test]
fn coefficient_families_match_expanded_products() {
    let mut r = rng(99);
    for round in 0..150 {
        let l = 1 + (round % 3) as u32;
        let c = cfg(l);
        let d = if round % 2 == 0 {
            random_raw_spec(&mut r, c, 3)
        } else {
            random_completed(&mut r, c, 3)
        };
        let report = d.check_genth_equations();
        let mut from_families: Vec<(u32, u32, BasisMonomial, Rational)> = report
            .iter()
            .map(|v| {
                let Equation::Coefficient { family, i, j, index } = &v.equation else {
                    panic!("unexpected entry {}", v.equation);
                };
                let Residual::Scalar(s) = &v.residual else { panic!("scalar expected") };
                let m = match (family, index) {
                    (1, CoefficientIndex::None) => BasisMonomial::Vertex,
                    (2, CoefficientIndex::Path(p)) => BasisMonomial::Path([p.as_slice(), &[*j]].concat()),
                    (3, CoefficientIndex::Path(p)) => BasisMonomial::Path(p.clone()),
                    (4, CoefficientIndex::None) => BasisMonomial::Path(vec![*j]),
                    (5, CoefficientIndex::Path(p)) => BasisMonomial::DualPath([p.as_slice(), &[*i]].concat()),
                    (6, CoefficientIndex::Path(p)) => BasisMonomial::DualPath(p.clone()),
                    (7, CoefficientIndex::None) => BasisMonomial::DualPath(vec![*i]),
                    (8, CoefficientIndex::Mixed { w, h }) => BasisMonomial::Mixed { w: w.clone(), h: h.clone() },
                    other => panic!("malformed entry {other:?}"),
                };
                (*i, *j, m, s.clone())
            })
            .collect();
        let mut from_products = Vec::new();
        for i in c.edges() {
            for j in c.edges() {
                let lhs = multiply(&c, &d.value(Generator::DualEdge(i)), &generator_element(Generator::Edge(j))).unwrap();
                let rhs = multiply(&c, &generator_element(Generator::DualEdge(i)), &d.value(Generator::Edge(j))).unwrap();
                for (m, s) in &(&lhs + &rhs) {
                    from_products.push((i, j, m.clone(), s.clone()));
                }
            }
        }
        from_families.sort();
        from_products.sort();
        assert_eq!(from_families, from_products, "round {round}");
    }
}

#[test]
fn leibniz_holds_for_completed_derivations() {
    let mut r = rng(5);
    for round in 0..40 {
        let c = cfg(1 + round % 3);
        let d = random_completed(&mut r, c, 3);
        for _ in 0..5 {
            let a = random_element(&mut r, &c, 4, 2);
            let b = random_element(&mut r, &c, 4, 2);
            let ab = multiply(&c, &a, &b).unwrap();
            let expected = &multiply(&c, &d.extend(&a).unwrap(), &b).unwrap()
                + &multiply(&c, &a, &d.extend(&b).unwrap()).unwrap();
            assert_eq!(d.extend(&ab).unwrap(), expected);
        }
    }
}

#[test]
fn relation_identities_on_generators() {
    for l in 1..=4 {
        let c = cfg(l);
        let mut sum = Element::zero();
        for i in c.edges() {
            for j in c.edges() {
                let p = multiply(&c, &generator_element(Generator::DualEdge(i)), &generator_element(Generator::Edge(j)))
                    .unwrap();
                let expected = if i == j { Element::one() } else { Element::zero() };
                assert_eq!(p, expected);
            }
            sum += &multiply(&c, &generator_element(Generator::Edge(i)), &generator_element(Generator::DualEdge(i)))
                .unwrap();
        }
        assert_eq!(sum, Element::one());
    }
}

#[test]
fn basis_spellings_are_fixed_points() {
    for l in 1..=3 {
        let c = cfg(l);
        for m in enumerate_basis(&c, 4) {
            assert!(is_basis_monomial(&c, &m.spelling()));
            let nf = reduce_word(&c, &m.spelling()).unwrap();
            assert_eq!(nf.iter().next(), Some((&m, &Rational::one())));
            assert_eq!(nf.len(), 1);
        }
    }
}

#[test]
fn arbitrary_tables_usually_fail_both_checks() {
    let mut r = rng(17);
    let mut both = 0;
    for _ in 0..50 {
        let d: DerivationSpec = random_raw_spec(&mut r, cfg(2), 2);
        let rel = d.check_relations();
        let gen = d.check_genth_equations();
        if !gen.is_empty() {
            assert!(!rel.is_empty());
        }
        if !rel.is_empty() && !gen.is_empty() {
            both += 1;
        }
    }
    assert!(both > 0);
}
