use std::cmp::Ordering;
use std::fmt;

use super::config::{AlgebraConfig, Generator, Word, SPECIAL_EDGE};
use crate::error::Result;

/// A canonical basis element of W(l).
///
/// Paths are stored as forward edge-index sequences. `DualPath(p)` is `p'`,
/// spelled `p_m' ... p_1'`; `Mixed { w, h }` is `w h'` with `h` stored forward.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BasisMonomial {
    Vertex,
    Path(Vec<u32>),
    DualPath(Vec<u32>),
    Mixed { w: Vec<u32>, h: Vec<u32> },
}

impl BasisMonomial {
    /// Builds the monomial `w h'`, picking the class from which sides are empty.
    /// Does not check the junction condition.
    pub(crate) fn from_parts(w: &[u32], h: &[u32]) -> Self {
        match (w.is_empty(), h.is_empty()) {
            (true, true) => BasisMonomial::Vertex,
            (false, true) => BasisMonomial::Path(w.to_vec()),
            (true, false) => BasisMonomial::DualPath(h.to_vec()),
            (false, false) => BasisMonomial::Mixed {
                w: w.to_vec(),
                h: h.to_vec(),
            },
        }
    }

    /// The path part `w` and the (forward) dual part `h` of `w h'`.
    pub fn parts(&self) -> (&[u32], &[u32]) {
        match self {
            BasisMonomial::Vertex => (&[], &[]),
            BasisMonomial::Path(p) => (p, &[]),
            BasisMonomial::DualPath(p) => (&[], p),
            BasisMonomial::Mixed { w, h } => (w, h),
        }
    }

    /// Number of letters in the canonical spelling; the vertex counts as one.
    pub fn len(&self) -> usize {
        match self {
            BasisMonomial::Vertex => 1,
            BasisMonomial::Path(p) | BasisMonomial::DualPath(p) => p.len(),
            BasisMonomial::Mixed { w, h } => w.len() + h.len(),
        }
    }

    /// Never true: every basis monomial spells at least one letter.
    pub fn is_empty(&self) -> bool {
        false
    }

    fn class_rank(&self) -> u8 {
        match self {
            BasisMonomial::Vertex => 0,
            BasisMonomial::Path(_) => 1,
            BasisMonomial::DualPath(_) => 2,
            BasisMonomial::Mixed { .. } => 3,
        }
    }

    /// Letters of `w h'`: edges of `w` in order, then duals of `h` reversed.
    pub fn spelling(&self) -> Word {
        if let BasisMonomial::Vertex = self {
            return Word::new(vec![Generator::Vertex]);
        }
        let (w, h) = self.parts();
        w.iter()
            .map(|&i| Generator::Edge(i))
            .chain(h.iter().rev().map(|&i| Generator::DualEdge(i)))
            .collect()
    }

    pub fn is_valid(&self, cfg: &AlgebraConfig) -> bool {
        self.check(cfg).is_ok() && !self.has_special_junction()
    }

    pub(crate) fn check(&self, cfg: &AlgebraConfig) -> Result<()> {
        let (w, h) = self.parts();
        w.iter().chain(h).try_for_each(|&i| cfg.check_edge(i))
    }

    fn has_special_junction(&self) -> bool {
        match self {
            BasisMonomial::Path(p) | BasisMonomial::DualPath(p) => p.is_empty(),
            BasisMonomial::Mixed { w, h } => {
                w.is_empty()
                    || h.is_empty()
                    || (w.last() == Some(&SPECIAL_EDGE) && h.last() == Some(&SPECIAL_EDGE))
            }
            BasisMonomial::Vertex => false,
        }
    }
}

/// Lexicographic comparison of edge sequences with `e1 > e2 > ... > el`.
fn cmp_edges(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match y.cmp(x) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

/// Canonical order: by letter length, then class (vertex, path, dual path,
/// mixed), then lexicographically with `e1` the greatest edge.
impl Ord for BasisMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.class_rank().cmp(&other.class_rank()))
            .then_with(|| {
                let (w1, h1) = self.parts();
                let (w2, h2) = other.parts();
                cmp_edges(w1, w2).then_with(|| cmp_edges(h1, h2))
            })
    }
}

impl PartialOrd for BasisMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spelling())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_prints_reversed_starred_tail() {
        let m = BasisMonomial::Mixed {
            w: vec![2, 2],
            h: vec![1, 2],
        };
        assert_eq!(m.to_string(), "e2 e2 e2' e1'");
        assert_eq!(BasisMonomial::DualPath(vec![1, 1]).to_string(), "e1' e1'");
    }

    #[test]
    fn special_junction_is_not_basic() {
        let cfg = AlgebraConfig::new(2).unwrap();
        let bad = BasisMonomial::Mixed {
            w: vec![2, 1],
            h: vec![1],
        };
        assert!(!bad.is_valid(&cfg));
        let good = BasisMonomial::Mixed {
            w: vec![1],
            h: vec![2],
        };
        assert!(good.is_valid(&cfg));
        assert!(!BasisMonomial::Path(vec![3]).is_valid(&cfg));
    }

    #[test]
    fn order_puts_e1_last_within_a_class() {
        let mut ms = vec![
            BasisMonomial::Path(vec![1]),
            BasisMonomial::DualPath(vec![2]),
            BasisMonomial::Vertex,
            BasisMonomial::Path(vec![2]),
        ];
        ms.sort();
        assert_eq!(
            ms,
            vec![
                BasisMonomial::Vertex,
                BasisMonomial::Path(vec![2]),
                BasisMonomial::Path(vec![1]),
                BasisMonomial::DualPath(vec![2]),
            ]
        );
    }
}
