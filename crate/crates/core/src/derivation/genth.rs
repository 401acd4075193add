//! The coefficient form of `D(ei') ej + ei' D(ej) = 0`.
//!
//! Expanding both products in the basis and collecting terms gives, for each
//! pair `(i, j)`, eight families of scalar equations in the coefficients
//! alpha, beta, gamma, rho of the generator values:
//!
//! ```text
//! 1. gamma_{ej}(ei') + beta_{ei}(ej)                                         (at v)
//! 2. beta_p(ei') + [j!=1] rho_{p ej ej'}(ei') + beta_{ei p ej}(ej)            (at p ej)
//! 3. rho_{p ej'}(ei') + beta_{ei p}(ej),              last(p) != ej           (at p)
//! 4. alpha_v(ei') + [j!=1] rho_{ej ej'}(ei') + beta_{ei ej}(ej)               (at ej)
//! 5. gamma_{ej p ei}(ei') + gamma_p(ej) + [i!=1] rho_{ei (p ei)'}(ej)         (at (p ei)')
//! 6. gamma_{ej p}(ei') + rho_{ei p'}(ej),             last(p) != ei           (at p')
//! 7. alpha_v(ej) + gamma_{ej ei}(ei') + [i!=1] rho_{ei ei'}(ej)               (at ei')
//! 8. rho_{w (ej h)'}(ei') + rho_{ei w h'}(ej),        w h' mixed              (at w h')
//! ```
//!
//! All families range over infinitely many indices, but an instance can only
//! be nonzero if one of its terms is, so it suffices to visit the indices
//! obtained from the supports of `D(ei')` and `D(ej)` by stripping the
//! prefix or suffix letters each equation attaches.

use std::collections::BTreeSet;

use num_traits::Zero;

use super::{DerivationSpec, GeneratorCoefficients};
use crate::algebra::{Rational, SPECIAL_EDGE};
use crate::report::{CoefficientIndex, Equation, ViolationReport};

/// The Kronecker factor `1 - delta(1, k)`.
fn unless_special(k: u32, value: Rational) -> Rational {
    if k == SPECIAL_EDGE {
        Rational::zero()
    } else {
        value
    }
}

fn cat(prefix: &[u32], middle: &[u32], suffix: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(prefix.len() + middle.len() + suffix.len());
    out.extend_from_slice(prefix);
    out.extend_from_slice(middle);
    out.extend_from_slice(suffix);
    out
}

pub(super) fn check(d: &DerivationSpec) -> ViolationReport {
    let table = d.coefficients();
    let mut report = ViolationReport::new();
    for i in d.config().edges() {
        for j in d.config().edges() {
            check_pair(&mut report, i, j, table.dual(i), table.edge(j));
        }
    }
    report
}

/// `di` holds the coefficients of `D(ei')`, `dj` those of `D(ej)`.
fn check_pair(
    report: &mut ViolationReport,
    i: u32,
    j: u32,
    di: &GeneratorCoefficients,
    dj: &GeneratorCoefficients,
) {
    let eq = |family: u8, index: CoefficientIndex| Equation::Coefficient {
        family,
        i,
        j,
        index,
    };

    // 1
    report.push_scalar(eq(1, CoefficientIndex::None), di.gamma(&[j]) + dj.beta(&[i]));

    // 2
    let mut paths: BTreeSet<Vec<u32>> = di.beta.keys().cloned().collect();
    if j != SPECIAL_EDGE {
        for (w, h) in di.rho.keys() {
            if h.as_slice() == [j] && w.len() >= 2 && w.last() == Some(&j) {
                paths.insert(w[..w.len() - 1].to_vec());
            }
        }
    }
    for q in dj.beta.keys() {
        if q.len() >= 3 && q[0] == i && q.last() == Some(&j) {
            paths.insert(q[1..q.len() - 1].to_vec());
        }
    }
    for p in paths {
        let residual = di.beta(&p)
            + unless_special(j, di.rho(&cat(&[], &p, &[j]), &[j]))
            + dj.beta(&cat(&[i], &p, &[j]));
        report.push_scalar(eq(2, CoefficientIndex::Path(p)), residual);
    }

    // 3
    let mut paths = BTreeSet::new();
    for (w, h) in di.rho.keys() {
        if h.as_slice() == [j] && w.last() != Some(&j) {
            paths.insert(w.clone());
        }
    }
    for q in dj.beta.keys() {
        if q.len() >= 2 && q[0] == i && q.last() != Some(&j) {
            paths.insert(q[1..].to_vec());
        }
    }
    for p in paths {
        let residual = di.rho(&p, &[j]) + dj.beta(&cat(&[i], &p, &[]));
        report.push_scalar(eq(3, CoefficientIndex::Path(p)), residual);
    }

    // 4
    report.push_scalar(
        eq(4, CoefficientIndex::None),
        di.alpha.clone() + unless_special(j, di.rho(&[j], &[j])) + dj.beta(&[i, j]),
    );

    // 5
    let mut paths: BTreeSet<Vec<u32>> = dj.gamma.keys().cloned().collect();
    for q in di.gamma.keys() {
        if q.len() >= 3 && q[0] == j && q.last() == Some(&i) {
            paths.insert(q[1..q.len() - 1].to_vec());
        }
    }
    if i != SPECIAL_EDGE {
        for (w, h) in dj.rho.keys() {
            if w.as_slice() == [i] && h.len() >= 2 && h.last() == Some(&i) {
                paths.insert(h[..h.len() - 1].to_vec());
            }
        }
    }
    for p in paths {
        let residual = di.gamma(&cat(&[j], &p, &[i]))
            + dj.gamma(&p)
            + unless_special(i, dj.rho(&[i], &cat(&[], &p, &[i])));
        report.push_scalar(eq(5, CoefficientIndex::Path(p)), residual);
    }

    // 6
    let mut paths = BTreeSet::new();
    for q in di.gamma.keys() {
        if q.len() >= 2 && q[0] == j && q.last() != Some(&i) {
            paths.insert(q[1..].to_vec());
        }
    }
    for (w, h) in dj.rho.keys() {
        if w.as_slice() == [i] && h.last() != Some(&i) {
            paths.insert(h.clone());
        }
    }
    for p in paths {
        let residual = di.gamma(&cat(&[j], &p, &[])) + dj.rho(&[i], &p);
        report.push_scalar(eq(6, CoefficientIndex::Path(p)), residual);
    }

    // 7
    report.push_scalar(
        eq(7, CoefficientIndex::None),
        dj.alpha.clone() + di.gamma(&[j, i]) + unless_special(i, dj.rho(&[i], &[i])),
    );

    // 8
    let mut mixed = BTreeSet::new();
    for (w, h) in di.rho.keys() {
        if h.len() >= 2 && h[0] == j {
            mixed.insert((w.clone(), h[1..].to_vec()));
        }
    }
    for (w, h) in dj.rho.keys() {
        if w.len() >= 2 && w[0] == i {
            mixed.insert((w[1..].to_vec(), h.clone()));
        }
    }
    for (w, h) in mixed {
        let residual = di.rho(&w, &cat(&[j], &h, &[])) + dj.rho(&cat(&[i], &w, &[]), &h);
        report.push_scalar(eq(8, CoefficientIndex::Mixed { w, h }), residual);
    }
}
