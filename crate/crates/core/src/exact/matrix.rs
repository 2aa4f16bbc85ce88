use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

type IntRow = Vec<(usize, BigInt)>;

/// Sparse matrix over the rationals, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    cols: usize,
    rows: Vec<Vec<(usize, Rational)>>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            cols,
            rows: vec![Vec::new(); rows],
        }
    }

    /// Builds a matrix from sparse rows. Zero entries are dropped; repeated
    /// column indices within a row are summed.
    ///
    /// Panics if a column index is out of range.
    pub fn from_sparse_rows(cols: usize, rows: Vec<Vec<(usize, Rational)>>) -> Self {
        let rows = rows
            .into_iter()
            .map(|mut r| {
                r.sort_by_key(|(c, _)| *c);
                let mut merged: Vec<(usize, Rational)> = Vec::with_capacity(r.len());
                for (c, v) in r {
                    assert!(c < cols, "column {c} out of range for {cols} columns");
                    match merged.last_mut() {
                        Some((lc, lv)) if *lc == c => *lv += v,
                        _ => merged.push((c, v)),
                    }
                }
                merged.retain(|(_, v)| !v.is_zero());
                merged
            })
            .collect();
        RationalMatrix { cols, rows }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_sparse_rows(
            cols,
            rows.iter().map(|r| r.iter().cloned().enumerate().collect()).collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.rows[r]
            .binary_search_by_key(&c, |(col, _)| *col)
            .map(|i| self.rows[r][i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn transpose(&self) -> Self {
        let mut rows = vec![Vec::new(); self.cols];
        for (r, c, v) in self.entries() {
            rows[c].push((r, v.clone()));
        }
        RationalMatrix {
            cols: self.rows.len(),
            rows,
        }
    }

    /// Exact rank over the rationals.
    ///
    /// Each row is scaled to a primitive integer vector, then rows are
    /// eliminated fraction-free: the pivot row for a column is the sparsest
    /// row seen with that leading column, and every combination
    /// `a·row − b·pivot` is divided by the gcd of its entries.
    pub fn rank(&self) -> usize {
        integer_rank(self.rows.iter().map(|r| primitive_integer_row(r)).collect())
    }
}

fn primitive_integer_row(row: &[(usize, Rational)]) -> IntRow {
    let lcm = row.iter().fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let ints: IntRow = row.iter().map(|(c, v)| (*c, v.numer() * (&lcm / v.denom()))).collect();
    make_primitive(ints)
}

fn make_primitive(mut row: IntRow) -> IntRow {
    let g = row.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
    if row.first().is_some_and(|(_, v)| v.is_negative()) {
        for (_, v) in row.iter_mut() {
            *v = -&*v;
        }
    }
    row
}

/// `a·row − b·pivot` with `a`, `b` chosen to cancel the shared leading entry.
fn eliminate(row: &IntRow, pivot: &IntRow) -> IntRow {
    let (p, r) = (&pivot[0].1, &row[0].1);
    let g = p.gcd(r);
    let a = p / &g;
    let b = r / &g;
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_pivot = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        let (c, v) = if take_row {
            i += 1;
            (row[i - 1].0, &a * &row[i - 1].1)
        } else if take_pivot {
            j += 1;
            (pivot[j - 1].0, -(&b * &pivot[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (row[i - 1].0, &a * &row[i - 1].1 - &b * &pivot[j - 1].1)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    make_primitive(out)
}

fn integer_rank(mut rows: Vec<IntRow>) -> usize {
    rows.retain(|r| !r.is_empty());
    rows.sort_by_key(Vec::len);
    let mut pivots: HashMap<usize, IntRow> = HashMap::new();
    for mut row in rows {
        while let Some(&(lead, _)) = row.first() {
            match pivots.get_mut(&lead) {
                None => {
                    pivots.insert(lead, row);
                    break;
                }
                Some(pivot) => {
                    if row.len() < pivot.len() {
                        std::mem::swap(pivot, &mut row);
                    }
                    row = eliminate(&row, pivot);
                }
            }
        }
    }
    pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ratio, rational};
    use proptest::prelude::*;

    fn dense(v: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_dense(
            &v.iter()
                .map(|r| r.iter().map(|&x| rational(x)).collect())
                .collect::<Vec<_>>(),
        )
    }

    // Plain Gaussian elimination over the rationals.
    fn oracle_rank(m: &RationalMatrix) -> usize {
        let mut a: Vec<Vec<Rational>> = (0..m.nrows())
            .map(|r| (0..m.ncols()).map(|c| m.get(r, c)).collect())
            .collect();
        let mut rank = 0;
        for c in 0..m.ncols() {
            let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for r in 0..a.len() {
                if r != rank && !a[r][c].is_zero() {
                    let f = &a[r][c] / &a[rank][c];
                    for k in 0..m.ncols() {
                        let d = &f * &a[rank][k];
                        a[r][k] -= d;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn small_ranks() {
        assert_eq!(dense(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).rank(), 3);
        assert_eq!(dense(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(RationalMatrix::zeros(3, 4).rank(), 0);
        let m = RationalMatrix::from_dense(&[vec![ratio(1, 2), ratio(1, 3)], vec![ratio(3, 2), rational(1)]]);
        assert_eq!(m.rank(), 1);
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..6, 1usize..7)
            .prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-2i64..3, c), r))
    }

    proptest! {
        #[test]
        fn rank_invariants(rows in small_matrix(), scale in 1i64..5, shift in 0usize..5) {
            let m = RationalMatrix::from_dense(
                &rows.iter().map(|r| r.iter().map(|&x| rational(x)).collect()).collect::<Vec<_>>(),
            );
            let r = m.rank();
            prop_assert_eq!(r, oracle_rank(&m));
            prop_assert_eq!(r, m.transpose().rank());
            let mut permuted: Vec<Vec<Rational>> = (0..m.nrows())
                .map(|i| (0..m.ncols()).map(|c| m.get(i, c) * ratio(scale * (1 + i as i64), 3)).collect())
                .collect();
            let k = shift % permuted.len();
            permuted.rotate_left(k);
            prop_assert_eq!(RationalMatrix::from_dense(&permuted).rank(), r);
        }
    }
}
