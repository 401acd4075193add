use num_traits::One;

use super::config::{AlgebraConfig, Generator, Word, SPECIAL_EDGE};
use super::element::{Element, Rational};
use super::monomial::BasisMonomial;
use crate::error::Result;

/// Normal form of a word.
///
/// Vertex letters are dropped, adjacent `ei' ej` pairs are cancelled to
/// `delta(i,j)` until the word has the shape `w h'`, and then each junction
/// `e1 e1'` is expanded as `v - sum_{k>=2} ek ek'`, recursing on the shorter
/// word that carries the `v` term.
pub fn reduce_word(cfg: &AlgebraConfig, word: &Word) -> Result<Element> {
    word.check(cfg)?;
    Ok(normal_form_of_letters(cfg, word.letters()))
}

fn normal_form_of_letters(cfg: &AlgebraConfig, letters: &[Generator]) -> Element {
    let mut edges: Vec<u32> = Vec::new();
    let mut duals: Vec<u32> = Vec::new();
    for &g in letters {
        match g {
            Generator::Vertex => {}
            Generator::DualEdge(i) => duals.push(i),
            Generator::Edge(j) => match duals.last() {
                None => edges.push(j),
                Some(&i) if i == j => {
                    duals.pop();
                }
                Some(_) => return Element::zero(),
            },
        }
    }
    // the dual letters are read right to left to get h forward
    duals.reverse();
    expand_junction(cfg, &edges, &duals)
}

/// Normal form of `w h'` for paths `w`, `h`.
fn expand_junction(cfg: &AlgebraConfig, mut w: &[u32], mut h: &[u32]) -> Element {
    let mut out = Element::zero();
    let minus_one = -Rational::one();
    while let (Some(&SPECIAL_EDGE), Some(&SPECIAL_EDGE)) = (w.last(), h.last()) {
        w = &w[..w.len() - 1];
        h = &h[..h.len() - 1];
        for k in 2..=cfg.loops() {
            let mut wk = w.to_vec();
            wk.push(k);
            let mut hk = h.to_vec();
            hk.push(k);
            out.add_term(BasisMonomial::Mixed { w: wk, h: hk }, minus_one.clone());
        }
    }
    out.add_term(BasisMonomial::from_parts(w, h), Rational::one());
    out
}

/// Product of two basis monomials, assumed valid for `cfg`.
pub(crate) fn mul_monomials(cfg: &AlgebraConfig, a: &BasisMonomial, b: &BasisMonomial) -> Element {
    match (a, b) {
        (BasisMonomial::Vertex, _) => Element::monomial(b.clone()),
        (_, BasisMonomial::Vertex) => Element::monomial(a.clone()),
        _ => {
            let word = a.spelling().concat(&b.spelling());
            normal_form_of_letters(cfg, word.letters())
        }
    }
}

pub(crate) fn mul_unchecked(cfg: &AlgebraConfig, a: &Element, b: &Element) -> Element {
    let mut out = Element::zero();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let c = ca * cb;
            out.add_scaled(&c, &mul_monomials(cfg, ma, mb));
        }
    }
    out
}

/// Bilinear product in W(l).
pub fn multiply(cfg: &AlgebraConfig, a: &Element, b: &Element) -> Result<Element> {
    a.check(cfg)?;
    b.check(cfg)?;
    Ok(mul_unchecked(cfg, a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use Generator::{DualEdge as D, Edge as E, Vertex as V};

    fn cfg(l: u32) -> AlgebraConfig {
        AlgebraConfig::new(l).unwrap()
    }

    fn reduce(l: u32, letters: &[Generator]) -> Element {
        reduce_word(&cfg(l), &Word::new(letters.to_vec())).unwrap()
    }

    fn mixed(w: &[u32], h: &[u32]) -> BasisMonomial {
        BasisMonomial::Mixed {
            w: w.to_vec(),
            h: h.to_vec(),
        }
    }

    #[test]
    fn vertex_is_idempotent() {
        assert_eq!(reduce(2, &[V, V]), Element::one());
        assert_eq!(reduce(2, &[]), Element::one());
    }

    #[test]
    fn dual_then_other_edge_vanishes() {
        assert!(reduce(2, &[D(1), E(2)]).is_zero());
        assert_eq!(reduce(2, &[D(2), E(2)]), Element::one());
    }

    #[test]
    fn special_junction_expands() {
        let expected = &Element::one() - &Element::monomial(mixed(&[2], &[2]));
        assert_eq!(reduce(2, &[E(1), D(1)]), expected);
        assert_eq!(reduce(1, &[E(1), D(1)]), Element::one());
    }

    #[test]
    fn nested_junction_golden() {
        // e2 e1 e1' e1' = e2 e1' - e2 e2 (e1 e2)'
        let expected = &Element::monomial(mixed(&[2], &[1]))
            - &Element::monomial(mixed(&[2, 2], &[1, 2]));
        assert_eq!(reduce(2, &[E(2), E(1), D(1), D(1)]), expected);
    }

    #[test]
    fn out_of_range_index_is_rejected() {
        let err = reduce_word(&cfg(2), &Word::new(vec![E(5)])).unwrap_err();
        assert_eq!(err, Error::IndexOutOfRange { index: 5, loops: 2 });
    }

    #[test]
    fn product_examples() {
        let c = cfg(2);
        let e1 = Element::monomial(BasisMonomial::Path(vec![1]));
        let e1s = Element::monomial(BasisMonomial::DualPath(vec![1]));
        assert_eq!(multiply(&c, &e1s, &e1).unwrap(), Element::one());

        let x = Element::from_integer(3, BasisMonomial::Path(vec![1, 2]));
        assert_eq!(multiply(&c, &Element::one(), &x).unwrap(), x);

        let p = multiply(&c, &e1, &e1s).unwrap();
        assert_eq!(multiply(&c, &p, &p).unwrap(), p);
    }

    #[test]
    fn multiply_rejects_foreign_indices() {
        let x = Element::monomial(BasisMonomial::Path(vec![3]));
        assert!(multiply(&cfg(2), &x, &Element::one()).is_err());
    }
}
