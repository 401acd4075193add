use std::collections::BTreeMap;

use num_traits::Zero;

use super::DerivationSpec;
use crate::algebra::{BasisMonomial, Element, Generator, Rational};

/// Coefficients of one value `D(x)`, bucketed by monomial class:
/// `alpha` on `v`, `beta[p]` on `p`, `gamma[p]` on `p'`, `rho[(w, h)]` on `w h'`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GeneratorCoefficients {
    pub alpha: Rational,
    pub beta: BTreeMap<Vec<u32>, Rational>,
    pub gamma: BTreeMap<Vec<u32>, Rational>,
    pub rho: BTreeMap<(Vec<u32>, Vec<u32>), Rational>,
}

impl GeneratorCoefficients {
    pub fn from_element(x: &Element) -> Self {
        let mut out = Self::default();
        for (m, c) in x {
            match m {
                BasisMonomial::Vertex => out.alpha = c.clone(),
                BasisMonomial::Path(p) => {
                    out.beta.insert(p.clone(), c.clone());
                }
                BasisMonomial::DualPath(p) => {
                    out.gamma.insert(p.clone(), c.clone());
                }
                BasisMonomial::Mixed { w, h } => {
                    out.rho.insert((w.clone(), h.clone()), c.clone());
                }
            }
        }
        out
    }

    pub fn beta(&self, p: &[u32]) -> Rational {
        self.beta.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn gamma(&self, p: &[u32]) -> Rational {
        self.gamma.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn rho(&self, w: &[u32], h: &[u32]) -> Rational {
        self.rho
            .get(&(w.to_vec(), h.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_empty() && self.gamma.is_empty() && self.rho.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTable {
    edges: Vec<GeneratorCoefficients>,
    duals: Vec<GeneratorCoefficients>,
}

impl CoefficientTable {
    pub(super) fn from_derivation(d: &DerivationSpec) -> Self {
        Self {
            edges: d.edge_values().iter().map(GeneratorCoefficients::from_element).collect(),
            duals: d.dual_values().iter().map(GeneratorCoefficients::from_element).collect(),
        }
    }

    /// Coefficients of `D(x)`. Panics on `v` (whose value is always zero) or
    /// an index outside the configuration.
    pub fn of(&self, x: Generator) -> &GeneratorCoefficients {
        match x {
            Generator::Edge(i) => &self.edges[(i - 1) as usize],
            Generator::DualEdge(i) => &self.duals[(i - 1) as usize],
            Generator::Vertex => panic!("derivations vanish on v"),
        }
    }

    pub fn edge(&self, i: u32) -> &GeneratorCoefficients {
        &self.edges[(i - 1) as usize]
    }

    pub fn dual(&self, i: u32) -> &GeneratorCoefficients {
        &self.duals[(i - 1) as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.edges.iter().chain(&self.duals).all(GeneratorCoefficients::is_zero)
    }
}
