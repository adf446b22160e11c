//! Pfaffians of skew-symmetric matrices with series entries.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::series::{MultiSeries, SeriesContext};

/// A skew-symmetric matrix of even dimension with [`MultiSeries`] entries.
///
/// Built from the strict upper triangle; the diagonal is zero and the lower
/// triangle is the negated mirror, so the invariants hold by construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewMatrix {
    dim: usize,
    entries: Vec<Vec<MultiSeries>>,
}

impl SkewMatrix {
    /// `upper(i, j)` supplies the entry at row `i`, column `j` for `i < j`.
    pub fn from_upper<F>(ctx: &Arc<SeriesContext>, dim: usize, mut upper: F) -> Self
    where
        F: FnMut(usize, usize) -> MultiSeries,
    {
        assert!(dim % 2 == 0, "skew matrix dimension must be even");
        let mut entries = vec![vec![MultiSeries::zero(ctx); dim]; dim];
        for i in 0..dim {
            for j in (i + 1)..dim {
                let e = upper(i, j);
                entries[j][i] = e.neg();
                entries[i][j] = e;
            }
        }
        SkewMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &MultiSeries {
        &self.entries[i][j]
    }
}

/// Exact Pfaffian by recursive expansion along the first row:
/// `Pf(A) = sum_{j>1} (-1)^j a_{1j} Pf(A with rows/cols 1 and j removed)`,
/// with `Pf` of the empty matrix equal to 1. The matrices that arise here are
/// small (at most 8x8), so the straightforward expansion is fine.
pub fn pfaffian(a: &SkewMatrix) -> MultiSeries {
    let ctx = if a.dim == 0 {
        panic!("pfaffian of a matrix with no context; use pfaffian_in");
    } else {
        a.entries[0][0].context().clone()
    };
    pf_rec(&ctx, &a.entries, (0..a.dim).collect())
}

/// Same as [`pfaffian`] but usable for the 0x0 matrix, whose Pfaffian is 1.
pub fn pfaffian_in(ctx: &Arc<SeriesContext>, a: &SkewMatrix) -> MultiSeries {
    pf_rec(ctx, &a.entries, (0..a.dim).collect())
}

fn pf_rec(ctx: &Arc<SeriesContext>, entries: &[Vec<MultiSeries>], rows: Vec<usize>) -> MultiSeries {
    if rows.is_empty() {
        return MultiSeries::one(ctx);
    }
    let mut acc = MultiSeries::zero(ctx);
    let first = rows[0];
    for (j, &rj) in rows.iter().enumerate().skip(1) {
        let e = &entries[first][rj];
        if e.is_zero() {
            continue;
        }
        let rest: Vec<usize> = rows
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != 0 && k != j)
            .map(|(_, &r)| r)
            .collect();
        let sub = pf_rec(ctx, entries, rest);
        // j is the 1-based column position minus 1; sign (-1)^(j+1) in
        // 0-based terms is (-1)^j for the 1-based formula.
        let term = e.mul(&sub);
        if j % 2 == 1 {
            acc.add_assign(&term);
        } else {
            acc.add_assign(&term.neg());
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsqrt2::QSqrt2;
    use alloc::collections::BTreeMap;

    fn ctx6() -> Arc<SeriesContext> {
        SeriesContext::uniform(&["a", "b", "c", "d", "e", "f"], 8)
    }

    fn var(ctx: &Arc<SeriesContext>, i: usize) -> MultiSeries {
        MultiSeries::monomial(ctx, &[(i, 1)], QSqrt2::one())
    }

    /// Independent oracle: determinant by Laplace expansion along the first
    /// remaining row. Exponential, but only used on dimension <= 6.
    fn determinant(ctx: &Arc<SeriesContext>, m: &SkewMatrix) -> MultiSeries {
        fn det_rec(
            ctx: &Arc<SeriesContext>,
            m: &SkewMatrix,
            rows: &[usize],
            cols: &[usize],
        ) -> MultiSeries {
            if rows.is_empty() {
                return MultiSeries::one(ctx);
            }
            let mut acc = MultiSeries::zero(ctx);
            let r = rows[0];
            let rest_rows: Vec<usize> = rows[1..].to_vec();
            for (k, &cj) in cols.iter().enumerate() {
                let e = m.entry(r, cj);
                if e.is_zero() {
                    continue;
                }
                let rest_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != cj).collect();
                let sub = det_rec(ctx, m, &rest_rows, &rest_cols);
                let term = e.mul(&sub);
                if k % 2 == 0 {
                    acc.add_assign(&term);
                } else {
                    acc.add_assign(&term.neg());
                }
            }
            acc
        }
        let idx: Vec<usize> = (0..m.dim()).collect();
        det_rec(ctx, m, &idx, &idx)
    }

    /// Second oracle: the full signed sum over pairings with
    /// omega(2i-1) < omega(2i) and omega(1) < omega(3) < ..., the sign being
    /// the parity of the flattened permutation counted by inversions.
    fn pfaffian_matching_sum(ctx: &Arc<SeriesContext>, m: &SkewMatrix) -> MultiSeries {
        fn matchings(remaining: Vec<usize>) -> Vec<Vec<(usize, usize)>> {
            if remaining.is_empty() {
                return vec![Vec::new()];
            }
            let i = remaining[0];
            let mut out = Vec::new();
            for &j in remaining.iter().skip(1) {
                let rest: Vec<usize> = remaining
                    .iter()
                    .copied()
                    .filter(|&x| x != i && x != j)
                    .collect();
                for mut tail in matchings(rest) {
                    tail.insert(0, (i, j));
                    out.push(tail);
                }
            }
            out
        }
        let mut acc = MultiSeries::zero(ctx);
        for pairing in matchings((0..m.dim()).collect()) {
            let flat: Vec<usize> = pairing.iter().flat_map(|&(i, j)| [i, j]).collect();
            let mut inversions = 0usize;
            for p in 0..flat.len() {
                for q in (p + 1)..flat.len() {
                    if flat[p] > flat[q] {
                        inversions += 1;
                    }
                }
            }
            let mut term = MultiSeries::one(ctx);
            for &(i, j) in &pairing {
                term = term.mul(m.entry(i, j));
            }
            acc.add_assign(&if inversions % 2 == 1 {
                term.neg()
            } else {
                term
            });
        }
        acc
    }

    #[test]
    fn two_by_two() {
        let ctx = ctx6();
        let a = SkewMatrix::from_upper(&ctx, 2, |_, _| var(&ctx, 0));
        assert_eq!(pfaffian(&a), var(&ctx, 0));
    }

    #[test]
    fn four_by_four_textbook() {
        // [[0,a,b,c],[-a,0,d,e],[-b,-d,0,f],[-c,-e,-f,0]] -> af - be + cd
        let ctx = ctx6();
        let slots = [
            (0, 1, 0),
            (0, 2, 1),
            (0, 3, 2),
            (1, 2, 3),
            (1, 3, 4),
            (2, 3, 5),
        ];
        let m = SkewMatrix::from_upper(&ctx, 4, |i, j| {
            let v = slots.iter().find(|&&(r, c, _)| (r, c) == (i, j)).unwrap().2;
            var(&ctx, v)
        });
        let af = var(&ctx, 0).mul(&var(&ctx, 5));
        let be = var(&ctx, 1).mul(&var(&ctx, 4));
        let cd = var(&ctx, 2).mul(&var(&ctx, 3));
        let want = af.sub(&be).add(&cd);
        assert_eq!(pfaffian(&m), want);
        assert_eq!(pfaffian_matching_sum(&ctx, &m), want);
    }

    #[test]
    fn empty_pfaffian_is_one() {
        let ctx = ctx6();
        let m = SkewMatrix::from_upper(&ctx, 0, |_, _| unreachable!());
        assert_eq!(pfaffian_in(&ctx, &m), MultiSeries::one(&ctx));
    }

    #[test]
    fn pfaffian_squared_equals_determinant() {
        // deterministic pseudo-random rational entries, dimensions 2, 4, 6
        let ctx = SeriesContext::uniform(&["t"], 0);
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for dim in [2usize, 4, 6] {
            for _ in 0..4 {
                let mut vals: BTreeMap<(usize, usize), i64> = BTreeMap::new();
                for i in 0..dim {
                    for j in (i + 1)..dim {
                        vals.insert((i, j), (next() % 11) as i64 - 5);
                    }
                }
                let m = SkewMatrix::from_upper(&ctx, dim, |i, j| {
                    MultiSeries::constant(&ctx, QSqrt2::from_int(vals[&(i, j)]))
                });
                let pf = pfaffian(&m);
                assert_eq!(pf.mul(&pf), determinant(&ctx, &m));
                assert_eq!(pf, pfaffian_matching_sum(&ctx, &m));
            }
        }
    }
}
