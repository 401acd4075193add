//! Brute-force checks of the rewriting system.
//!
//! Rules are applied one at a time, at seed-chosen positions on seed-chosen
//! summands, on plain words. Nothing here goes through
//! [`crate::algebra::reduce_word`].

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraConfig, BasisMonomial, Element, Generator, Rational, Word, SPECIAL_EDGE};
use crate::error::{Error, Result};
use crate::report::{Equation, ViolationReport};

/// Rule applications allowed per input word.
pub const STEP_BUDGET: usize = 1_000_000;

/// The defining relations, oriented as rewriting rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `v v -> v`
    VertexVertex,
    /// `v e -> e`, `e v -> e`
    VertexEdge,
    /// `v e' -> e'`, `e' v -> e'`
    VertexDual,
    /// `ei' ej -> delta(i,j) v`
    DualEdge,
    /// `e1 e1' -> v - sum_{k>=2} ek ek'`
    SpecialSum,
}

impl Rule {
    /// Position of the relation in the standard list (1 to 5).
    pub fn number(self) -> u8 {
        match self {
            Rule::VertexVertex => 1,
            Rule::VertexEdge => 2,
            Rule::VertexDual => 3,
            Rule::DualEdge => 4,
            Rule::SpecialSum => 5,
        }
    }
}

/// A linear combination of raw words.
pub type Combination = Vec<(Rational, Vec<Generator>)>;

/// A rule whose left-hand side matches `word[position..position + 2]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleApplication {
    pub rule: Rule,
    pub position: usize,
    pub replacement: Combination,
}

fn rule_for_pair(cfg: &AlgebraConfig, a: Generator, b: Generator) -> Option<(Rule, Combination)> {
    use Generator::*;
    let one = Rational::one;
    match (a, b) {
        (Vertex, Vertex) => Some((Rule::VertexVertex, vec![(one(), vec![Vertex])])),
        (Vertex, Edge(_)) => Some((Rule::VertexEdge, vec![(one(), vec![b])])),
        (Edge(_), Vertex) => Some((Rule::VertexEdge, vec![(one(), vec![a])])),
        (Vertex, DualEdge(_)) => Some((Rule::VertexDual, vec![(one(), vec![b])])),
        (DualEdge(_), Vertex) => Some((Rule::VertexDual, vec![(one(), vec![a])])),
        (DualEdge(i), Edge(j)) => {
            let rep = if i == j { vec![(one(), vec![Vertex])] } else { Vec::new() };
            Some((Rule::DualEdge, rep))
        }
        (Edge(SPECIAL_EDGE), DualEdge(SPECIAL_EDGE)) => {
            let mut rep = vec![(one(), vec![Vertex])];
            for k in 2..=cfg.loops() {
                rep.push((-one(), vec![Edge(k), DualEdge(k)]));
            }
            Some((Rule::SpecialSum, rep))
        }
        _ => None,
    }
}

/// Every rule application available on `word`.
pub fn applications(cfg: &AlgebraConfig, word: &[Generator]) -> Vec<RuleApplication> {
    word.windows(2)
        .enumerate()
        .filter_map(|(position, pair)| {
            rule_for_pair(cfg, pair[0], pair[1]).map(|(rule, replacement)| RuleApplication {
                rule,
                position,
                replacement,
            })
        })
        .collect()
}

fn apply(word: &[Generator], app: &RuleApplication) -> Combination {
    app.replacement
        .iter()
        .map(|(c, rep)| {
            let mut out = word[..app.position].to_vec();
            out.extend_from_slice(rep);
            out.extend_from_slice(&word[app.position + 2..]);
            (c.clone(), out)
        })
        .collect()
}

/// Reads an irreducible word as a basis monomial.
fn irreducible_monomial(cfg: &AlgebraConfig, word: &[Generator]) -> Option<BasisMonomial> {
    if word == [Generator::Vertex] {
        return Some(BasisMonomial::Vertex);
    }
    let mut w = Vec::new();
    let mut h_reversed = Vec::new();
    for &g in word {
        match g {
            Generator::Edge(i) if h_reversed.is_empty() => w.push(i),
            Generator::DualEdge(i) => h_reversed.push(i),
            _ => return None,
        }
    }
    h_reversed.reverse();
    let m = match (w.is_empty(), h_reversed.is_empty()) {
        (false, true) => BasisMonomial::Path(w),
        (true, false) => BasisMonomial::DualPath(h_reversed),
        (false, false) => BasisMonomial::Mixed { w, h: h_reversed },
        (true, true) => return None,
    };
    m.is_valid(cfg).then_some(m)
}

fn reduce_combination(
    cfg: &AlgebraConfig,
    mut pending: Combination,
    rng: &mut ChaCha8Rng,
) -> Result<Element> {
    let mut out = Element::zero();
    let mut steps = 0usize;
    while !pending.is_empty() {
        let (coeff, word) = pending.swap_remove(rng.random_range(0..pending.len()));
        let apps = applications(cfg, &word);
        if apps.is_empty() {
            let m = irreducible_monomial(cfg, &word).ok_or_else(|| Error::StuckWord {
                word: Word::new(word.clone()).to_string(),
            })?;
            out.add_term(m, coeff);
            continue;
        }
        steps += 1;
        if steps > STEP_BUDGET {
            return Err(Error::StepBudgetExceeded { budget: STEP_BUDGET });
        }
        let app = &apps[rng.random_range(0..apps.len())];
        for (c, next) in apply(&word, app) {
            pending.push((&coeff * c, next));
        }
    }
    Ok(out)
}

/// Normal form by rewriting in a seed-determined random order.
pub fn exhaustive_reduce(cfg: &AlgebraConfig, word: &Word, rng_seed: u64) -> Result<Element> {
    word.check(cfg)?;
    let letters = if word.is_empty() {
        vec![Generator::Vertex]
    } else {
        word.letters().to_vec()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    reduce_combination(cfg, vec![(Rational::one(), letters)], &mut rng)
}

fn alphabet(cfg: &AlgebraConfig) -> Vec<Generator> {
    std::iter::once(Generator::Vertex).chain(cfg.generators()).collect()
}

/// Reduces every three-letter word in which two rule left-hand sides overlap,
/// once starting at each of the two positions, and reports disagreements.
pub fn check_overlaps(cfg: &AlgebraConfig) -> Result<ViolationReport> {
    let letters = alphabet(cfg);
    let mut report = ViolationReport::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for &a in &letters {
        for &b in &letters {
            for &c in &letters {
                let word = [a, b, c];
                let apps = applications(cfg, &word);
                if apps.len() < 2 {
                    continue;
                }
                let left = reduce_combination(cfg, apply(&word, &apps[0]), &mut rng)?;
                let right = reduce_combination(cfg, apply(&word, &apps[1]), &mut rng)?;
                report.push_element(
                    Equation::Overlap {
                        word: Word::new(word.to_vec()),
                    },
                    &left - &right,
                );
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{enumerate_basis, reduce_word};
    use Generator::{DualEdge as D, Edge as E, Vertex as V};

    fn cfg(l: u32) -> AlgebraConfig {
        AlgebraConfig::new(l).unwrap()
    }

    #[test]
    fn basis_words_are_irreducible() {
        let c = cfg(2);
        for m in enumerate_basis(&c, 4) {
            for seed in 0..3 {
                assert_eq!(exhaustive_reduce(&c, &m.spelling(), seed).unwrap(), Element::monomial(m.clone()));
            }
        }
    }

    #[test]
    fn special_junction_any_seed() {
        let c = cfg(2);
        let word = Word::new(vec![E(1), D(1)]);
        let expected = reduce_word(&c, &word).unwrap();
        for seed in 0..10 {
            assert_eq!(exhaustive_reduce(&c, &word, seed).unwrap(), expected);
        }
    }

    #[test]
    fn nested_junction_agrees_with_hand_value() {
        let c = cfg(2);
        let word = Word::new(vec![E(2), E(1), D(1), D(1)]);
        let expected = &Element::monomial(BasisMonomial::Mixed { w: vec![2], h: vec![1] })
            - &Element::monomial(BasisMonomial::Mixed { w: vec![2, 2], h: vec![1, 2] });
        for seed in 0..10 {
            assert_eq!(exhaustive_reduce(&c, &word, seed).unwrap(), expected);
        }
    }

    #[test]
    fn overlap_examples_agree() {
        for l in 1..=2 {
            let c = cfg(l);
            let word = [D(1), E(1), D(1)];
            let apps = applications(&c, &word);
            assert_eq!(apps.len(), 2);
            let mut rng = ChaCha8Rng::seed_from_u64(1);
            let left = reduce_combination(&c, apply(&word, &apps[0]), &mut rng).unwrap();
            let right = reduce_combination(&c, apply(&word, &apps[1]), &mut rng).unwrap();
            assert_eq!(left, Element::monomial(BasisMonomial::DualPath(vec![1])));
            assert_eq!(left, right);
        }
        let c = cfg(2);
        let vvv = [V, V, V];
        let apps = applications(&c, &vvv);
        assert_eq!(apps.len(), 2);
    }

    #[test]
    fn no_critical_pair_fails() {
        for l in 1..=4 {
            assert!(check_overlaps(&cfg(l)).unwrap().is_empty(), "l = {l}");
        }
    }

    #[test]
    fn rule_numbers() {
        let apps = applications(&cfg(2), &[V, E(1), D(1), E(2)]);
        let numbers: Vec<u8> = apps.iter().map(|a| a.rule.number()).collect();
        assert_eq!(numbers, vec![2, 5, 4]);
    }
}
