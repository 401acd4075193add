//! Derivations of W(l), given by their values on `e_i` and `e_i'`.
//!
//! A derivation vanishes on `v`, so only the 2l values on edges and dual
//! edges are stored. A table of values defines a derivation exactly when it
//! respects the defining relations; see [`DerivationSpec::check_relations`].

mod coefficients;
mod genth;

use std::borrow::Cow;
use std::sync::OnceLock;

use crate::algebra::{mul_unchecked, AlgebraConfig, BasisMonomial, Element, Generator};
use crate::error::{Error, Result};
use crate::report::{Equation, ViolationReport};

pub use coefficients::{CoefficientTable, GeneratorCoefficients};

#[derive(Debug, Clone)]
pub struct DerivationSpec {
    cfg: AlgebraConfig,
    edge_values: Vec<Element>,
    dual_values: Vec<Element>,
    respects_relations: OnceLock<bool>,
}

impl PartialEq for DerivationSpec {
    fn eq(&self, other: &Self) -> bool {
        self.cfg == other.cfg
            && self.edge_values == other.edge_values
            && self.dual_values == other.dual_values
    }
}

impl Eq for DerivationSpec {}

impl DerivationSpec {
    /// `edge_values[k]` is `D(e_{k+1})`, `dual_values[k]` is `D(e_{k+1}')`.
    pub fn new(
        cfg: AlgebraConfig,
        edge_values: Vec<Element>,
        dual_values: Vec<Element>,
    ) -> Result<Self> {
        let expected = cfg.loops() as usize;
        for values in [&edge_values, &dual_values] {
            if values.len() != expected {
                return Err(Error::ValueCount {
                    expected,
                    got: values.len(),
                });
            }
            values.iter().try_for_each(|x| x.check(&cfg))?;
        }
        Ok(Self {
            cfg,
            edge_values,
            dual_values,
            respects_relations: OnceLock::new(),
        })
    }

    /// Like [`DerivationSpec::new`], also taking a value for `v`, which must be zero.
    pub fn with_vertex_value(
        cfg: AlgebraConfig,
        vertex_value: &Element,
        edge_values: Vec<Element>,
        dual_values: Vec<Element>,
    ) -> Result<Self> {
        if !vertex_value.is_zero() {
            return Err(Error::NonzeroVertexValue);
        }
        Self::new(cfg, edge_values, dual_values)
    }

    pub fn zero(cfg: AlgebraConfig) -> Self {
        let n = cfg.loops() as usize;
        Self::new(cfg, vec![Element::zero(); n], vec![Element::zero(); n])
            .expect("zero values are valid")
    }

    /// The unique derivation with the given edge values, with
    /// `D(ei') = -sum_j ei' D(ej) ej'`.
    pub fn complete_from_edge_values(cfg: AlgebraConfig, edge_values: Vec<Element>) -> Result<Self> {
        let n = cfg.loops() as usize;
        if edge_values.len() != n {
            return Err(Error::ValueCount {
                expected: n,
                got: edge_values.len(),
            });
        }
        edge_values.iter().try_for_each(|x| x.check(&cfg))?;
        let dual_values = cfg
            .edges()
            .map(|i| {
                let ei_star = generator_element(Generator::DualEdge(i));
                let mut acc = Element::zero();
                for (j, value) in cfg.edges().zip(&edge_values) {
                    let ej_star = generator_element(Generator::DualEdge(j));
                    let left = mul_unchecked(&cfg, &ei_star, value);
                    acc -= &mul_unchecked(&cfg, &left, &ej_star);
                }
                acc
            })
            .collect();
        Self::new(cfg, edge_values, dual_values)
    }

    /// The unique derivation with the given dual-edge values, with
    /// `D(ei) = -sum_j ej D(ej') ei`.
    pub fn complete_from_dual_values(cfg: AlgebraConfig, dual_values: Vec<Element>) -> Result<Self> {
        let n = cfg.loops() as usize;
        if dual_values.len() != n {
            return Err(Error::ValueCount {
                expected: n,
                got: dual_values.len(),
            });
        }
        dual_values.iter().try_for_each(|x| x.check(&cfg))?;
        let edge_values = cfg
            .edges()
            .map(|i| {
                let ei = generator_element(Generator::Edge(i));
                let mut acc = Element::zero();
                for (j, value) in cfg.edges().zip(&dual_values) {
                    let ej = generator_element(Generator::Edge(j));
                    let left = mul_unchecked(&cfg, &ej, value);
                    acc -= &mul_unchecked(&cfg, &left, &ei);
                }
                acc
            })
            .collect();
        Self::new(cfg, edge_values, dual_values)
    }

    pub fn config(&self) -> &AlgebraConfig {
        &self.cfg
    }

    pub fn edge_values(&self) -> &[Element] {
        &self.edge_values
    }

    pub fn dual_values(&self) -> &[Element] {
        &self.dual_values
    }

    /// `D(x)` for a generator; zero for `v`.
    pub fn value(&self, x: Generator) -> Cow<'_, Element> {
        match x {
            Generator::Vertex => Cow::Owned(Element::zero()),
            Generator::Edge(i) => Cow::Borrowed(&self.edge_values[(i - 1) as usize]),
            Generator::DualEdge(i) => Cow::Borrowed(&self.dual_values[(i - 1) as usize]),
        }
    }

    /// Residuals of the defining relations pushed through the Leibniz rule.
    pub fn check_relations(&self) -> ViolationReport {
        let cfg = &self.cfg;
        let mut report = ViolationReport::new();
        let v = Element::one();

        for x in cfg.generators() {
            let d = self.value(x);
            let sandwiched = mul_unchecked(cfg, &mul_unchecked(cfg, &v, &d), &v);
            report.push_element(Equation::Unit { generator: x }, &sandwiched - &d);
        }

        for i in cfg.edges() {
            let ei_star = generator_element(Generator::DualEdge(i));
            let d_ei_star = self.value(Generator::DualEdge(i));
            for j in cfg.edges() {
                let ej = generator_element(Generator::Edge(j));
                let d_ej = self.value(Generator::Edge(j));
                let residual = &mul_unchecked(cfg, &d_ei_star, &ej) + &mul_unchecked(cfg, &ei_star, &d_ej);
                report.push_element(Equation::DualEdge { i, j }, residual);
            }
        }

        let mut sum = Element::zero();
        for i in cfg.edges() {
            let ei = generator_element(Generator::Edge(i));
            let ei_star = generator_element(Generator::DualEdge(i));
            sum += &mul_unchecked(cfg, &self.value(Generator::Edge(i)), &ei_star);
            sum += &mul_unchecked(cfg, &ei, &self.value(Generator::DualEdge(i)));
        }
        report.push_element(Equation::Sum, sum);
        report
    }

    /// Whether the values define a derivation. Cached after the first call.
    pub fn respects_relations(&self) -> bool {
        *self
            .respects_relations
            .get_or_init(|| self.check_relations().is_empty())
    }

    /// Extends `D` to an arbitrary element by linearity and the Leibniz rule.
    ///
    /// Fails with [`Error::NotADerivation`] when the values do not respect the
    /// relations, since the result would then depend on the spelling.
    pub fn extend(&self, x: &Element) -> Result<Element> {
        if !self.respects_relations() {
            return Err(Error::NotADerivation {
                violations: self.check_relations().len(),
            });
        }
        x.check(&self.cfg)?;
        Ok(self.extend_unchecked(x))
    }

    /// Leibniz extension along the canonical spelling of each monomial,
    /// without checking the relations. Intended for diagnostics.
    pub fn extend_unchecked(&self, x: &Element) -> Element {
        let mut out = Element::zero();
        for (m, c) in x {
            out.add_scaled(c, &self.extend_monomial(m));
        }
        out
    }

    fn extend_monomial(&self, m: &BasisMonomial) -> Element {
        let cfg = &self.cfg;
        // running product of the prefix and D of the prefix
        let mut prefix = Element::one();
        let mut d_prefix = Element::zero();
        for &g in m.spelling().letters() {
            if g == Generator::Vertex {
                continue;
            }
            let letter = generator_element(g);
            let mut next_d = mul_unchecked(cfg, &d_prefix, &letter);
            next_d += &mul_unchecked(cfg, &prefix, &self.value(g));
            d_prefix = next_d;
            prefix = mul_unchecked(cfg, &prefix, &letter);
        }
        d_prefix
    }

    pub fn coefficients(&self) -> CoefficientTable {
        CoefficientTable::from_derivation(self)
    }

    /// Residuals of the eight coefficient families, see [`genth::check`].
    pub fn check_genth_equations(&self) -> ViolationReport {
        genth::check(self)
    }
}

/// A single generator as an element.
pub fn generator_element(g: Generator) -> Element {
    Element::monomial(match g {
        Generator::Vertex => BasisMonomial::Vertex,
        Generator::Edge(i) => BasisMonomial::Path(vec![i]),
        Generator::DualEdge(i) => BasisMonomial::DualPath(vec![i]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;
    use crate::report::Residual;

    fn cfg(l: u32) -> AlgebraConfig {
        AlgebraConfig::new(l).unwrap()
    }

    fn path(p: &[u32]) -> Element {
        Element::monomial(BasisMonomial::Path(p.to_vec()))
    }

    fn dual(p: &[u32]) -> Element {
        Element::monomial(BasisMonomial::DualPath(p.to_vec()))
    }

    fn d_dt() -> DerivationSpec {
        DerivationSpec::complete_from_edge_values(cfg(1), vec![Element::one()]).unwrap()
    }

    #[test]
    fn laurent_derivative_on_inverse() {
        let d = d_dt();
        assert_eq!(d.dual_values()[0], -dual(&[1, 1]));
        assert_eq!(d.extend(&dual(&[1])).unwrap(), -dual(&[1, 1]));
        assert!(d.extend(&Element::one()).unwrap().is_zero());
        assert_eq!(
            d.extend(&path(&[1, 1])).unwrap(),
            Element::from_integer(2, BasisMonomial::Path(vec![1]))
        );
    }

    #[test]
    fn completion_in_two_loops() {
        let d = DerivationSpec::complete_from_edge_values(
            cfg(2),
            vec![Element::from_integer(2, BasisMonomial::Vertex), Element::from_integer(-3, BasisMonomial::Vertex)],
        )
        .unwrap();
        let two = Rational::from_integer(2.into());
        let minus_three = Rational::from_integer((-3).into());
        let mut expected1 = Element::zero();
        expected1.add_scaled(&-two.clone(), &dual(&[1, 1]));
        expected1.add_scaled(&-minus_three.clone(), &dual(&[2, 1]));
        let mut expected2 = Element::zero();
        expected2.add_scaled(&-two, &dual(&[1, 2]));
        expected2.add_scaled(&-minus_three, &dual(&[2, 2]));
        assert_eq!(d.dual_values(), &[expected1, expected2]);
        assert!(d.check_relations().is_empty());
    }

    #[test]
    fn zero_edge_values_complete_to_zero() {
        let d = DerivationSpec::complete_from_edge_values(cfg(3), vec![Element::zero(); 3]).unwrap();
        assert_eq!(d, DerivationSpec::zero(cfg(3)));
        assert!(d.check_relations().is_empty());
    }

    #[test]
    fn dual_side_completion() {
        let d = DerivationSpec::complete_from_dual_values(cfg(1), vec![Element::one()]).unwrap();
        assert_eq!(d.edge_values()[0], -path(&[1, 1]));
        assert!(d.check_relations().is_empty());
    }

    #[test]
    fn sign_flip_is_caught() {
        let d = DerivationSpec::new(cfg(1), vec![Element::one()], vec![dual(&[1, 1])]).unwrap();
        let report = d.check_relations();
        let v = report.find(&Equation::DualEdge { i: 1, j: 1 }).unwrap();
        assert_eq!(
            v.residual,
            Residual::Element(Element::from_integer(2, BasisMonomial::DualPath(vec![1])))
        );
        assert!(matches!(d.extend(&path(&[1])), Err(Error::NotADerivation { .. })));
        // the diagnostic path still works
        assert_eq!(d.extend_unchecked(&path(&[1])), Element::one());
    }

    #[test]
    fn vertex_value_must_vanish() {
        let err = DerivationSpec::with_vertex_value(cfg(1), &Element::one(), vec![Element::zero()], vec![Element::zero()])
            .unwrap_err();
        assert_eq!(err, Error::NonzeroVertexValue);
    }

    #[test]
    fn value_count_is_checked() {
        assert!(matches!(
            DerivationSpec::new(cfg(2), vec![Element::zero()], vec![Element::zero(); 2]),
            Err(Error::ValueCount { expected: 2, got: 1 })
        ));
    }
}
