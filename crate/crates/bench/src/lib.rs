//! Fixtures shared by the benchmarks.

use leavitt_core::{AlgebraConfig, BasisMonomial, DerivationSpec, Element, Generator, Word};

/// A deterministic word of length `len` cycling through every generator.
pub fn cycling_word(cfg: &AlgebraConfig, len: usize) -> Word {
    let alphabet: Vec<Generator> = cfg.generators();
    (0..len).map(|k| alphabet[(k * 7 + k / 3) % alphabet.len()]).collect()
}

/// `v + e1 e2 - e2' e1'`, a small element touching every class but mixed.
pub fn sample_element() -> Element {
    let mut x = Element::one();
    x += &Element::monomial(BasisMonomial::Path(vec![1, 2]));
    x -= &Element::monomial(BasisMonomial::DualPath(vec![1, 2]));
    x
}

/// The derivation completed from `D(e1) = e2`, `D(e2) = v`.
pub fn sample_derivation(cfg: AlgebraConfig) -> DerivationSpec {
    let mut values = vec![Element::zero(); cfg.loops() as usize];
    values[0] = Element::monomial(BasisMonomial::Path(vec![2]));
    values[1] = Element::one();
    DerivationSpec::complete_from_edge_values(cfg, values).expect("valid values")
}
