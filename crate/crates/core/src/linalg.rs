//! Exact row reduction over the rationals.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::Rational;

/// Incrementally built row-echelon basis of a subspace of `Q^dim`.
///
/// Rows are kept with a unit pivot and zeros in every earlier pivot column of
/// later rows, which is all that membership testing needs.
#[derive(Debug, Clone, Default)]
pub struct DenseSpan {
    dim: usize,
    rows: Vec<(usize, Vec<Rational>)>,
}

impl DenseSpan {
    pub fn new(dim: usize) -> Self {
        DenseSpan { dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &factor * r;
                }
            }
        }
        v
    }

    /// Adds `v`; returns true if the rank grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut v = self.reduce(v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pivot].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        self.rows.push((pivot, v));
        true
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }
}

/// Rank of a family of vectors.
pub fn rank<'a>(dim: usize, vectors: impl IntoIterator<Item = &'a [Rational]>) -> usize {
    let mut span = DenseSpan::new(dim);
    for v in vectors {
        span.insert(v);
    }
    span.rank()
}

/// Sparse vector keyed by column index.
pub type SparseVec = BTreeMap<usize, Rational>;

/// Row-echelon basis over sparse vectors, ordered by column index: a row's
/// pivot is its smallest column.
#[derive(Debug, Clone, Default)]
pub struct SparseEchelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    /// Reduces `v` until none of its columns is a pivot column.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut cursor = 0;
        loop {
            let next = v
                .range(cursor..)
                .find(|(col, _)| self.rows.contains_key(col))
                .map(|(col, c)| (*col, c.clone()));
            let Some((col, factor)) = next else { break };
            for (c, r) in &self.rows[&col] {
                let entry = v.entry(*c).or_insert_with(Rational::zero);
                *entry -= &factor * r;
                if entry.is_zero() {
                    v.remove(c);
                }
            }
            cursor = col + 1;
        }
        v
    }

    /// Adds `v`; returns true if the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce(v);
        let Some((&pivot, lead)) = v.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        let row: SparseVec = if inv.is_one() {
            v
        } else {
            v.into_iter().map(|(c, x)| (c, x * &inv)).collect()
        };
        self.rows.insert(pivot, row);
        true
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn dense_rank_and_membership() {
        let mut span = DenseSpan::new(3);
        assert!(span.insert(&v(&[1, 1, 0])));
        assert!(span.insert(&v(&[0, 1, 1])));
        assert!(!span.insert(&v(&[1, 2, 1])));
        assert!(span.contains(&v(&[2, 0, -2])));
        assert!(!span.contains(&v(&[0, 0, 1])));
        assert_eq!(span.rank(), 2);
    }

    #[test]
    fn sparse_reduction_leaves_only_free_columns() {
        let mut ech = SparseEchelon::new();
        let row = |xs: &[(usize, i64)]| -> SparseVec {
            xs.iter().map(|&(c, x)| (c, rat(x))).collect()
        };
        assert!(ech.insert(row(&[(0, 1), (2, 1)])));
        assert!(ech.insert(row(&[(1, 2), (2, -2)])));
        assert!(!ech.insert(row(&[(0, 1), (1, 1), (2, 0)])));
        let r = ech.reduce(row(&[(0, 3), (1, 1)]));
        assert_eq!(r, row(&[(2, -2)]));
        assert!(!ech.is_pivot(2));
    }
}
