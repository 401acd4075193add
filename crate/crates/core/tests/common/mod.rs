#![allow(dead_code)]

use leavitt_core::{enumerate_basis, AlgebraConfig, DerivationSpec, Element, Generator, Rational, Word};
use rand::Rng;

pub fn cfg(l: u32) -> AlgebraConfig {
    AlgebraConfig::new(l).unwrap()
}

pub fn random_word<R: Rng>(rng: &mut R, cfg: &AlgebraConfig, max_len: usize) -> Word {
    let mut alphabet = vec![Generator::Vertex];
    alphabet.extend(cfg.generators());
    let len = rng.random_range(0..=max_len);
    (0..len).map(|_| alphabet[rng.random_range(0..alphabet.len())]).collect()
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let n: i64 = rng.random_range(-4..=4);
        let d: i64 = rng.random_range(1..=3);
        if n != 0 {
            return Rational::new(n.into(), d.into());
        }
    }
}

/// Up to `max_terms` random basis monomials of length at most `max_len`.
pub fn random_element<R: Rng>(rng: &mut R, cfg: &AlgebraConfig, max_len: usize, max_terms: usize) -> Element {
    let basis = enumerate_basis(cfg, max_len);
    let terms = rng.random_range(1..=max_terms);
    (0..terms)
        .map(|_| (basis[rng.random_range(0..basis.len())].clone(), random_rational(rng)))
        .collect()
}

pub fn random_completed<R: Rng>(rng: &mut R, cfg: AlgebraConfig, value_len: usize) -> DerivationSpec {
    let values = (0..cfg.loops())
        .map(|_| {
            if rng.random_bool(0.2) {
                Element::zero()
            } else {
                random_element(rng, &cfg, value_len, 3)
            }
        })
        .collect();
    DerivationSpec::complete_from_edge_values(cfg, values).unwrap()
}

/// Arbitrary generator values, almost never a derivation.
pub fn random_raw_spec<R: Rng>(rng: &mut R, cfg: AlgebraConfig, value_len: usize) -> DerivationSpec {
    let pick = |rng: &mut R| -> Vec<Element> {
        (0..cfg.loops()).map(|_| random_element(rng, &cfg, value_len, 3)).collect()
    };
    let edges = pick(rng);
    let duals = pick(rng);
    DerivationSpec::new(cfg, edges, duals).unwrap()
}
