//! Inner derivations `ad(lambda)(x) = lambda x - x lambda` and the
//! inner/outer question.
//!
//! Two independent tools are offered. [`obstruction_coefficients`] reads the
//! beta/gamma coefficients indexed by words `e1 p e1` off the generator
//! values; [`find_inner_witness`] decides innerness exactly for witnesses
//! supported on monomials up to a given length.

mod witness;

use std::fmt;

use crate::algebra::{mul_unchecked, AlgebraConfig, Element, Generator, Rational, SPECIAL_EDGE};
use crate::derivation::{generator_element, DerivationSpec};
use crate::error::{Error, Result};

pub use witness::{find_inner_witness, WitnessProblem};

/// The inner derivation determined by `lambda`.
pub fn ad(cfg: &AlgebraConfig, lambda: &Element) -> Result<DerivationSpec> {
    lambda.check(cfg)?;
    Ok(ad_unchecked(cfg, lambda))
}

pub(crate) fn ad_unchecked(cfg: &AlgebraConfig, lambda: &Element) -> DerivationSpec {
    let value = |g: Generator| {
        let x = generator_element(g);
        &mul_unchecked(cfg, lambda, &x) - &mul_unchecked(cfg, &x, lambda)
    };
    let edges = cfg.edges().map(|i| value(Generator::Edge(i))).collect();
    let duals = cfg.edges().map(|i| value(Generator::DualEdge(i))).collect();
    DerivationSpec::new(*cfg, edges, duals).expect("commutators stay inside the algebra")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ObstructionFamily {
    /// Coefficient of the path `e1 p e1` in `D(e1)`.
    BetaOfEdge,
    /// Coefficient of the path `e1 p e1` in `D(e1')`.
    BetaOfDual,
    /// Coefficient of the dual path `(e1 p e1)'` in `D(e1)`.
    GammaOfEdge,
    /// Coefficient of the dual path `(e1 p e1)'` in `D(e1')`.
    GammaOfDual,
}

impl fmt::Display for ObstructionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ObstructionFamily::BetaOfEdge => "beta(e1)",
            ObstructionFamily::BetaOfDual => "beta(e1')",
            ObstructionFamily::GammaOfEdge => "gamma(e1)",
            ObstructionFamily::GammaOfDual => "gamma(e1')",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionEntry {
    pub family: ObstructionFamily,
    /// The index word `e1 p e1`, forward.
    pub word: Vec<u32>,
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub entries: Vec<ObstructionEntry>,
    /// Whether the two-letter word `e1 e1` (empty `p`) was scanned.
    pub include_trivial_p: bool,
}

impl ObstructionReport {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for ObstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "no obstructions");
        }
        for e in &self.entries {
            let word: Vec<String> = e.word.iter().map(|i| format!("e{i}")).collect();
            writeln!(f, "{}[{}] = {}", e.family, word.join(" "), e.value)?;
        }
        Ok(())
    }
}

fn is_special_sandwich(word: &[u32], include_trivial_p: bool) -> bool {
    let min_len = if include_trivial_p { 2 } else { 3 };
    word.len() >= min_len && word[0] == SPECIAL_EDGE && word[word.len() - 1] == SPECIAL_EDGE
}

/// Nonzero beta/gamma coefficients of `D(e1)` and `D(e1')` indexed by a word
/// `e1 p e1`. With `include_trivial_p` the word `e1 e1` is scanned too.
pub fn obstruction_coefficients(d: &DerivationSpec, include_trivial_p: bool) -> ObstructionReport {
    let table = d.coefficients();
    let mut entries = Vec::new();
    let sources = [
        (ObstructionFamily::BetaOfEdge, &table.edge(SPECIAL_EDGE).beta),
        (ObstructionFamily::BetaOfDual, &table.dual(SPECIAL_EDGE).beta),
        (ObstructionFamily::GammaOfEdge, &table.edge(SPECIAL_EDGE).gamma),
        (ObstructionFamily::GammaOfDual, &table.dual(SPECIAL_EDGE).gamma),
    ];
    for (family, coefficients) in sources {
        for (word, value) in coefficients {
            if is_special_sandwich(word, include_trivial_p) {
                entries.push(ObstructionEntry {
                    family,
                    word: word.clone(),
                    value: value.clone(),
                });
            }
        }
    }
    ObstructionReport {
        entries,
        include_trivial_p,
    }
}

/// Label assigned from the obstruction coefficients alone. Vanishing
/// obstructions are not known to be sufficient for innerness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    InnerByObstruction,
    OuterByObstruction,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::InnerByObstruction => f.write_str("inner (obstructions vanish)"),
            Classification::OuterByObstruction => f.write_str("outer (nonzero obstruction)"),
        }
    }
}

pub fn classify_by_obstruction(d: &DerivationSpec, include_trivial_p: bool) -> Result<Classification> {
    if !d.respects_relations() {
        return Err(Error::NotADerivation {
            violations: d.check_relations().len(),
        });
    }
    Ok(if obstruction_coefficients(d, include_trivial_p).is_empty() {
        Classification::InnerByObstruction
    } else {
        Classification::OuterByObstruction
    })
}
