use std::collections::BTreeMap;

use rayon::prelude::*;

use super::ad_unchecked;
use crate::algebra::{enumerate_basis, BasisMonomial, Element, Generator, Rational};
use crate::derivation::DerivationSpec;
use crate::error::{Error, Result};
use crate::linalg::{self, Solution, SparseRow};

/// The linear system `sum_b x_b ad(b)(g) = D(g)` for every non-vertex
/// generator `g`, over candidate monomials `b` of bounded length.
///
/// One row per pair `(g, m)` where the monomial `m` occurs in some `ad(b)(g)`
/// or in `D(g)`. The vertex is never a column since `ad(v) = 0`.
#[derive(Debug, Clone)]
pub struct WitnessProblem {
    pub basis_columns: Vec<BasisMonomial>,
    pub row_keys: Vec<(Generator, BasisMonomial)>,
    pub rows: Vec<SparseRow>,
    pub rhs: Vec<Rational>,
}

impl WitnessProblem {
    pub fn build(d: &DerivationSpec, max_len: usize) -> Self {
        let cfg = *d.config();
        let generators = cfg.generators();
        let basis_columns: Vec<BasisMonomial> = enumerate_basis(&cfg, max_len)
            .into_iter()
            .filter(|m| *m != BasisMonomial::Vertex)
            .collect();

        // ad(b) on every generator; the order of the output matches the columns
        let images: Vec<Vec<Element>> = basis_columns
            .par_iter()
            .map(|b| {
                let adb = ad_unchecked(&cfg, &Element::monomial(b.clone()));
                generators.iter().map(|&g| adb.value(g).into_owned()).collect()
            })
            .collect();

        let mut index: BTreeMap<(usize, BasisMonomial), usize> = BTreeMap::new();
        for per_generator in &images {
            for (g, value) in per_generator.iter().enumerate() {
                for m in value.monomials() {
                    index.insert((g, m.clone()), 0);
                }
            }
        }
        for (g, &x) in generators.iter().enumerate() {
            for m in d.value(x).monomials() {
                index.insert((g, m.clone()), 0);
            }
        }
        for (row, slot) in index.values_mut().enumerate() {
            *slot = row;
        }

        let mut rows: Vec<SparseRow> = vec![Vec::new(); index.len()];
        for (col, per_generator) in images.iter().enumerate() {
            for (g, value) in per_generator.iter().enumerate() {
                for (m, c) in value {
                    rows[index[&(g, m.clone())]].push((col, c.clone()));
                }
            }
        }
        let mut rhs = vec![num_traits::Zero::zero(); index.len()];
        for (g, &x) in generators.iter().enumerate() {
            for (m, c) in d.value(x).iter() {
                rhs[index[&(g, m.clone())]] = c.clone();
            }
        }
        let row_keys = index
            .into_keys()
            .map(|(g, m)| (generators[g], m))
            .collect();

        Self {
            basis_columns,
            row_keys,
            rows,
            rhs,
        }
    }

    pub fn solve(&self) -> Solution {
        linalg::solve(&self.rows, &self.rhs, self.basis_columns.len())
    }

    /// The element with coordinates `values` on the columns.
    pub fn element(&self, values: &[Rational]) -> Element {
        self.basis_columns
            .iter()
            .cloned()
            .zip(values.iter().cloned())
            .collect()
    }
}

/// Searches for `lambda` supported on non-vertex monomials of length at most
/// `max_len` with `ad(lambda) = D`.
///
/// `None` only certifies that no witness exists within that bound.
pub fn find_inner_witness(d: &DerivationSpec, max_len: usize) -> Result<Option<Element>> {
    if max_len == 0 {
        return Err(Error::EmptySupportBound);
    }
    if !d.respects_relations() {
        return Err(Error::NotADerivation {
            violations: d.check_relations().len(),
        });
    }
    let problem = WitnessProblem::build(d, max_len);
    match problem.solve() {
        Solution::Inconsistent { .. } => Ok(None),
        Solution::Unique { values, .. } => {
            let lambda = problem.element(&values);
            assert!(
                ad_unchecked(d.config(), &lambda) == *d,
                "witness failed re-evaluation"
            );
            Ok(Some(lambda))
        }
    }
}
