//! Dense linear algebra over a coefficient field, used by the degreewise oracles.

use std::collections::BTreeMap;

use crate::field::Field;

#[derive(Clone, Debug)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(field: &F, rows: usize, cols: &[Vec<F::Elem>]) -> Self {
        let mut m = Self::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self, field: &F) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !field.is_zero(self.get(i, c))) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = field.inv(self.get(r, c));
            for j in c..self.cols {
                let v = field.mul(self.get(r, j), &inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || field.is_zero(self.get(i, c)) {
                    continue;
                }
                let f = self.get(i, c).clone();
                for j in c..self.cols {
                    if field.is_zero(self.get(r, j)) {
                        continue;
                    }
                    let v = field.sub(self.get(i, j), &field.mul(&f, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, field: &F) -> usize {
        self.clone().rref(field).len()
    }

    /// Basis of the null space `{x : A x = 0}`, as column vectors.
    pub fn nullspace(&self, field: &F) -> Vec<Vec<F::Elem>> {
        let mut m = self.clone();
        let pivots = m.rref(field);
        let mut out = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![field.zero(); self.cols];
            x[free] = field.one();
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = field.neg(m.get(r, free));
            }
            out.push(x);
        }
        out
    }

    pub fn mul_vec(&self, field: &F, x: &[F::Elem]) -> Vec<F::Elem> {
        (0..self.rows)
            .map(|i| {
                let mut acc = field.zero();
                for (j, xj) in x.iter().enumerate() {
                    if !field.is_zero(xj) {
                        acc = field.add(&acc, &field.mul(self.get(i, j), xj));
                    }
                }
                acc
            })
            .collect()
    }
}

/// Rank of the span of a set of vectors of a common length.
pub fn rank_of<F: Field>(field: &F, len: usize, vectors: &[Vec<F::Elem>]) -> usize {
    if vectors.is_empty() || len == 0 {
        return 0;
    }
    Matrix::from_columns(field, len, vectors).rank(field)
}

/// Rank of the span of sparse vectors given as `(index, value)` lists, by incremental
/// reduction against pivots keyed on the leading index.
pub fn sparse_rank<F: Field>(
    field: &F,
    vectors: impl IntoIterator<Item = Vec<(usize, F::Elem)>>,
) -> usize {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, F::Elem>> = BTreeMap::new();
    for v in vectors {
        let mut row: BTreeMap<usize, F::Elem> =
            v.into_iter().filter(|(_, x)| !field.is_zero(x)).collect();
        while let Some((&lead, c)) = row.iter().next() {
            let Some(piv) = pivots.get(&lead) else {
                let inv = field.inv(c);
                let normed = row
                    .into_iter()
                    .map(|(i, x)| (i, field.mul(&x, &inv)))
                    .collect();
                pivots.insert(lead, normed);
                break;
            };
            let c = c.clone();
            for (i, x) in piv {
                let y = field.mul(&c, x);
                let entry = row.entry(*i).or_insert_with(|| field.zero());
                *entry = field.sub(entry, &y);
                if field.is_zero(entry) {
                    row.remove(i);
                }
            }
        }
    }
    pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn rank_and_nullspace() {
        let k = Rationals;
        let cols: Vec<Vec<_>> = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
            .iter()
            .map(|c| c.iter().map(|&x| k.from_i64(x)).collect())
            .collect();
        let m = Matrix::from_columns(&k, 3, &cols);
        assert_eq!(m.rank(&k), 2);
        let ns = m.nullspace(&k);
        assert_eq!(ns.len(), 1);
        assert!(m.mul_vec(&k, &ns[0]).iter().all(|x| k.is_zero(x)));
    }

    #[test]
    fn prime_field_rank_drops() {
        let p = PrimeField::new(7).unwrap();
        let cols = vec![
            vec![p.from_i64(1), p.from_i64(3)],
            vec![p.from_i64(3), p.from_i64(2)],
        ];
        // det = 2 − 9 = −7 ≡ 0 mod 7
        assert_eq!(rank_of(&p, 2, &cols), 1);
        let q = Rationals;
        let cols = vec![
            vec![q.from_i64(1), q.from_i64(3)],
            vec![q.from_i64(3), q.from_i64(2)],
        ];
        assert_eq!(rank_of(&q, 2, &cols), 2);
    }

    #[test]
    fn sparse_rank_matches_dense() {
        let k = Rationals;
        let dense: Vec<Vec<_>> = [[1, 0, 2, 0], [0, 3, 0, 1], [2, 3, 4, 1], [0, 0, 0, 5]]
            .iter()
            .map(|c| c.iter().map(|&x| k.from_i64(x)).collect())
            .collect();
        let sparse = dense
            .iter()
            .map(|c| c.iter().cloned().enumerate().collect::<Vec<_>>());
        assert_eq!(sparse_rank(&k, sparse), rank_of(&k, 4, &dense));
        assert_eq!(rank_of(&k, 4, &dense), 3);
    }
}
