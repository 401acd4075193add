use super::config::{AlgebraConfig, Generator, Word, SPECIAL_EDGE};
use super::monomial::BasisMonomial;

/// Whether `word` is the canonical spelling of a basis monomial: the single
/// letter `v`, a path, a dual path, or `w h'` whose junction is not `e1 e1'`.
///
/// The empty word is not a spelling (it reduces to `v`).
pub fn is_basis_monomial(cfg: &AlgebraConfig, word: &Word) -> bool {
    let letters = word.letters();
    if word.check(cfg).is_err() || letters.is_empty() {
        return false;
    }
    if letters == [Generator::Vertex] {
        return true;
    }
    let split = letters
        .iter()
        .position(|g| !matches!(g, Generator::Edge(_)))
        .unwrap_or(letters.len());
    let (edges, duals) = letters.split_at(split);
    if !duals.iter().all(|g| matches!(g, Generator::DualEdge(_))) {
        return false;
    }
    !matches!(
        (edges.last(), duals.first()),
        (Some(Generator::Edge(SPECIAL_EDGE)), Some(Generator::DualEdge(SPECIAL_EDGE)))
    )
}

/// Every edge sequence of length `n` over `1..=l`, in odometer order.
fn sequences(loops: u32, n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (1..=loops).map(move |i| {
                    let mut next = prefix.clone();
                    next.push(i);
                    next
                })
            })
            .collect();
    }
    out
}

/// All basis monomials with at most `max_len` letters, in canonical order.
pub fn enumerate_basis(cfg: &AlgebraConfig, max_len: usize) -> Vec<BasisMonomial> {
    let l = cfg.loops();
    let mut out = Vec::new();
    if max_len >= 1 {
        out.push(BasisMonomial::Vertex);
    }
    for n in 1..=max_len {
        for p in sequences(l, n) {
            out.push(BasisMonomial::Path(p.clone()));
            out.push(BasisMonomial::DualPath(p));
        }
        for wl in 1..n {
            for w in sequences(l, wl) {
                for h in sequences(l, n - wl) {
                    if w.last() == Some(&SPECIAL_EDGE) && h.last() == Some(&SPECIAL_EDGE) {
                        continue;
                    }
                    out.push(BasisMonomial::Mixed { w: w.clone(), h });
                }
            }
        }
    }
    out.sort();
    out
}
