use std::collections::btree_map::{self, BTreeMap, Entry};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::config::AlgebraConfig;
use super::monomial::BasisMonomial;
use crate::error::Result;

pub type Rational = BigRational;

/// A finite rational linear combination of basis monomials.
///
/// Zero coefficients are never stored, so structural equality is equality
/// in the algebra.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<BasisMonomial, Rational>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `v`.
    pub fn one() -> Self {
        Self::monomial(BasisMonomial::Vertex)
    }

    pub fn monomial(m: BasisMonomial) -> Self {
        Self::term(Rational::one(), m)
    }

    pub fn term(coeff: Rational, m: BasisMonomial) -> Self {
        let mut e = Self::zero();
        e.add_term(m, coeff);
        e
    }

    pub fn from_integer(coeff: i64, m: BasisMonomial) -> Self {
        Self::term(Rational::from_integer(coeff.into()), m)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of monomials with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `m`, zero when absent.
    pub fn coeff(&self, m: &BasisMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, BasisMonomial, Rational> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &BasisMonomial> {
        self.terms.keys()
    }

    /// Longest spelling among the monomials of the support (0 for zero).
    pub fn max_len(&self) -> usize {
        self.terms.keys().map(BasisMonomial::len).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: BasisMonomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Rational, other: &Element) {
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(m.clone(), c * a);
        }
    }

    pub fn scale(&self, c: &Rational) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    /// Checks that every monomial is a basis monomial of `cfg`.
    pub fn check(&self, cfg: &AlgebraConfig) -> Result<()> {
        self.terms.keys().try_for_each(|m| m.check(cfg))
    }
}

impl FromIterator<(BasisMonomial, Rational)> for Element {
    fn from_iter<I: IntoIterator<Item = (BasisMonomial, Rational)>>(iter: I) -> Self {
        let mut e = Element::zero();
        for (m, c) in iter {
            e.add_term(m, c);
        }
        e
    }
}

impl<'a> IntoIterator for &'a Element {
    type Item = (&'a BasisMonomial, &'a Rational);
    type IntoIter = btree_map::Iter<'a, BasisMonomial, Rational>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Element> for Element {
    fn sub_assign(&mut self, rhs: &Element) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add<&Element> for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Element> for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for Element {
    type Output = Element;

    fn add(mut self, rhs: Element) -> Element {
        self += &rhs;
        self
    }
}

impl Sub for Element {
    type Output = Element;

    fn sub(mut self, rhs: Element) -> Element {
        self -= &rhs;
        self
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        Element {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Element {
    type Output = Element;

    fn neg(self) -> Element {
        -&self
    }
}

/// Canonical text form, e.g. `v - e2 e2'` or `-3/2*e1 + e2' e1'`.
///
/// Coefficients other than 1 are written as `p/q*` before the monomial.
impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let magnitude = c.abs();
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}
