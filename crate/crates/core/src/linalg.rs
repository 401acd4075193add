//! Exact sparse Gaussian elimination over the rationals.

use num_traits::Zero;

use crate::algebra::Rational;

/// A sparse row: `(column, value)` pairs sorted by column, no zero values.
pub type SparseRow = Vec<(usize, Rational)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    /// One solution with all free variables set to zero, and the rank.
    Unique { values: Vec<Rational>, rank: usize },
    Inconsistent { rank: usize },
}

impl Solution {
    pub fn rank(&self) -> usize {
        match self {
            Solution::Unique { rank, .. } | Solution::Inconsistent { rank } => *rank,
        }
    }
}

fn bit_size(x: &Rational) -> u64 {
    x.numer().bits() + x.denom().bits()
}

/// `target - factor * source`, both sorted.
fn subtract_scaled(target: &SparseRow, factor: &Rational, source: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut a, mut b) = (target.iter().peekable(), source.iter().peekable());
    loop {
        match (a.peek(), b.peek()) {
            (Some((ca, va)), Some((cb, vb))) => {
                if ca < cb {
                    out.push((*ca, va.clone()));
                    a.next();
                } else if cb < ca {
                    out.push((*cb, -(factor * vb)));
                    b.next();
                } else {
                    let v = va - factor * vb;
                    if !v.is_zero() {
                        out.push((*ca, v));
                    }
                    a.next();
                    b.next();
                }
            }
            (Some((ca, va)), None) => {
                out.push((*ca, va.clone()));
                a.next();
            }
            (None, Some((cb, vb))) => {
                out.push((*cb, -(factor * vb)));
                b.next();
            }
            (None, None) => break,
        }
    }
    out
}

/// Solves `A x = b` for `A` given by sparse rows over `ncols` columns.
///
/// Columns are eliminated left to right. Among the rows whose leading entry
/// sits in the current column, the pivot is the entry of smallest
/// numerator-plus-denominator bit size, ties going to the lowest row index.
pub fn solve(rows: &[SparseRow], rhs: &[Rational], ncols: usize) -> Solution {
    assert_eq!(rows.len(), rhs.len(), "one right-hand side per row");
    // augment: the right-hand side lives in column `ncols`
    let mut work: Vec<SparseRow> = rows
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r: SparseRow = row.iter().filter(|(_, v)| !v.is_zero()).cloned().collect();
            r.sort_by_key(|(c, _)| *c);
            debug_assert!(r.iter().all(|(c, _)| *c < ncols));
            if !b.is_zero() {
                r.push((ncols, b.clone()));
            }
            r
        })
        .collect();

    let mut active: Vec<usize> = (0..work.len()).collect();
    let mut pivots: Vec<(usize, SparseRow)> = Vec::new();

    for col in 0..ncols {
        let pivot = active
            .iter()
            .enumerate()
            .filter_map(|(slot, &r)| match work[r].first() {
                Some((c, v)) if *c == col => Some((bit_size(v), r, slot)),
                _ => None,
            })
            .min_by_key(|(size, r, _)| (*size, *r));
        let Some((_, pivot_row, slot)) = pivot else {
            continue;
        };
        active.swap_remove(slot);
        let prow = std::mem::take(&mut work[pivot_row]);
        let pval = prow[0].1.clone();
        for &r in &active {
            if let Some((c, v)) = work[r].first() {
                if *c == col {
                    let factor = v / &pval;
                    work[r] = subtract_scaled(&work[r], &factor, &prow);
                }
            }
        }
        pivots.push((col, prow));
    }

    let rank = pivots.len();
    if active.iter().any(|&r| !work[r].is_empty()) {
        // every surviving row is of the form 0 = b with b != 0
        return Solution::Inconsistent { rank };
    }

    let mut values = vec![Rational::zero(); ncols];
    for (col, row) in pivots.iter().rev() {
        let mut acc = Rational::zero();
        let mut lead = None;
        for (c, v) in row {
            if c == col {
                lead = Some(v);
            } else if *c == ncols {
                acc += v;
            } else {
                acc -= v * &values[*c];
            }
        }
        let lead = lead.expect("pivot row keeps its leading entry");
        values[*col] = acc / lead;
    }
    Solution::Unique { values, rank }
}

/// Whether `rows * values == rhs`.
pub fn satisfies(rows: &[SparseRow], rhs: &[Rational], values: &[Rational]) -> bool {
    rows.iter().zip(rhs).all(|(row, b)| {
        let lhs: Rational = row.iter().map(|(c, v)| v * &values[*c]).sum();
        &lhs == b
    })
}
