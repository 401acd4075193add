use std::fmt;

use crate::algebra::{BasisMonomial, Element, Generator, Rational, Word};

/// Which identity an entry of a [`ViolationReport`] refers to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Equation {
    /// `v D(x) v = D(x)`.
    Unit { generator: Generator },
    /// `D(ei') ej + ei' D(ej) = 0`.
    DualEdge { i: u32, j: u32 },
    /// `sum_i (D(ei) ei' + ei D(ei')) = 0`.
    Sum,
    /// One of the eight coefficient families, indexed by `(i, j)` and
    /// possibly a path or mixed monomial.
    Coefficient {
        family: u8,
        i: u32,
        j: u32,
        index: CoefficientIndex,
    },
    /// Two rewrites of an overlapping word led to different normal forms.
    Overlap { word: Word },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CoefficientIndex {
    None,
    Path(Vec<u32>),
    Mixed { w: Vec<u32>, h: Vec<u32> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Residual {
    Element(Element),
    Scalar(Rational),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub equation: Equation,
    pub residual: Residual,
}

/// Nonzero residuals of a family of identities. Empty means all hold.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ViolationReport {
    pub violations: Vec<Violation>,
}

impl ViolationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Violation> {
        self.violations.iter()
    }

    /// Records `residual` unless it is zero.
    pub fn push_element(&mut self, equation: Equation, residual: Element) {
        if !residual.is_zero() {
            self.violations.push(Violation {
                equation,
                residual: Residual::Element(residual),
            });
        }
    }

    pub fn push_scalar(&mut self, equation: Equation, residual: Rational) {
        use num_traits::Zero;
        if !residual.is_zero() {
            self.violations.push(Violation {
                equation,
                residual: Residual::Scalar(residual),
            });
        }
    }

    pub fn find(&self, equation: &Equation) -> Option<&Violation> {
        self.violations.iter().find(|v| &v.equation == equation)
    }
}

impl<'a> IntoIterator for &'a ViolationReport {
    type Item = &'a Violation;
    type IntoIter = std::slice::Iter<'a, Violation>;

    fn into_iter(self) -> Self::IntoIter {
        self.violations.iter()
    }
}

impl fmt::Display for CoefficientIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientIndex::None => Ok(()),
            CoefficientIndex::Path(p) => write!(f, "{}", BasisMonomial::Path(p.clone())),
            CoefficientIndex::Mixed { w, h } => write!(
                f,
                "{}",
                BasisMonomial::Mixed {
                    w: w.clone(),
                    h: h.clone()
                }
            ),
        }
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Equation::Unit { generator } => write!(f, "rel-unit {generator}"),
            Equation::DualEdge { i, j } => write!(f, "rel-dual-edge i={i} j={j}"),
            Equation::Sum => write!(f, "rel-sum"),
            Equation::Coefficient {
                family,
                i,
                j,
                index,
            } => {
                write!(f, "genth-{family} i={i} j={j}")?;
                if *index != CoefficientIndex::None {
                    write!(f, " index={index}")?;
                }
                Ok(())
            }
            Equation::Overlap { word } => write!(f, "overlap {word}"),
        }
    }
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Element(e) => write!(f, "{e}"),
            Residual::Scalar(c) => write!(f, "{c}"),
        }
    }
}

impl fmt::Display for ViolationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return writeln!(f, "no violations");
        }
        for v in &self.violations {
            writeln!(f, "{}: {}", v.equation, v.residual)?;
        }
        Ok(())
    }
}
