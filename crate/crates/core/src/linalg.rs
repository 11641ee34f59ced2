//! Square matrices and Gaussian elimination over a [`Field`].

use serde::{Deserialize, Serialize};

use crate::field::{Elem, Field, FieldAut};

/// Square matrix stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix {
    dim: usize,
    entries: Vec<Elem>,
}

impl Matrix {
    pub fn zero(dim: usize) -> Matrix {
        Matrix {
            dim,
            entries: vec![Elem::ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Matrix {
        let mut m = Matrix::zero(dim);
        for i in 0..dim {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    pub fn diagonal(diag: &[Elem]) -> Matrix {
        let mut m = Matrix::zero(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    /// Panics if the rows do not form a square.
    pub fn from_rows(rows: &[Vec<Elem>]) -> Matrix {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Matrix {
            dim,
            entries: rows.concat(),
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Elem>]) -> Matrix {
        let dim = cols.len();
        let mut m = Matrix::zero(dim);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), dim, "matrix must be square");
            for (i, &x) in col.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    /// Row-major element indices; `index` must be below `q^(dim²)`.
    pub fn from_index(dim: usize, q: usize, mut index: u128) -> Matrix {
        let mut entries = vec![Elem::ZERO; dim * dim];
        for slot in entries.iter_mut().rev() {
            *slot = Elem((index % q as u128) as u32);
            index /= q as u128;
        }
        Matrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Elem {
        self.entries[row * self.dim + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Elem) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, field: &Field, other: &Matrix) -> Matrix {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Elem::ZERO;
                for l in 0..n {
                    acc = field.add(acc, field.mul(self.get(i, l), other.get(l, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// `self · v`.
    pub fn apply(&self, field: &Field, v: &[Elem], out: &mut [Elem]) {
        for (i, slot) in out.iter_mut().enumerate() {
            let row = &self.entries[i * self.dim..(i + 1) * self.dim];
            *slot = row
                .iter()
                .zip(v)
                .fold(Elem::ZERO, |acc, (&a, &x)| field.add(acc, field.mul(a, x)));
        }
    }

    /// Applies a field automorphism to every entry.
    pub fn map_entries(&self, field: &Field, aut: FieldAut) -> Matrix {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(|&x| aut.apply(field, x)).collect(),
        }
    }

    pub fn scale(&self, field: &Field, c: Elem) -> Matrix {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(|&x| field.mul(c, x)).collect(),
        }
    }

    /// Divides by the first nonzero entry, giving the canonical representative
    /// of the matrix's projective class.
    pub fn normalized(&self, field: &Field) -> Matrix {
        match self.entries.iter().find(|x| !x.is_zero()) {
            Some(&lead) => self.scale(field, field.inv_nonzero(lead)),
            None => self.clone(),
        }
    }

    pub fn determinant(&self, field: &Field) -> Elem {
        let n = self.dim;
        let mut a = self.rows();
        let mut det = Elem::ONE;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Elem::ZERO;
            };
            if pivot != col {
                a.swap(pivot, col);
                det = field.neg(det);
            }
            let pv = a[col][col];
            det = field.mul(det, pv);
            let pinv = field.inv_nonzero(pv);
            for r in col + 1..n {
                let factor = field.mul(a[r][col], pinv);
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let sub = field.mul(factor, a[col][c]);
                    a[r][c] = field.sub(a[r][c], sub);
                }
            }
        }
        det
    }

    pub fn is_invertible(&self, field: &Field) -> bool {
        !self.determinant(field).is_zero()
    }
}

/// Rank of the matrix with the given rows (any shape).
pub fn rank(field: &Field, rows: &[Vec<Elem>]) -> usize {
    let mut a: Vec<Vec<Elem>> = rows.to_vec();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(pivot, rank);
        let pinv = field.inv_nonzero(a[rank][col]);
        for r in 0..a.len() {
            if r == rank || a[r][col].is_zero() {
                continue;
            }
            let factor = field.mul(a[r][col], pinv);
            for c in col..ncols {
                let sub = field.mul(factor, a[rank][c]);
                a[r][c] = field.sub(a[r][c], sub);
            }
        }
        rank += 1;
    }
    rank
}

/// Unique solution `x` of `A·x = b`, or `None` when `A` is singular.
pub fn solve(field: &Field, a: &Matrix, b: &[Elem]) -> Option<Vec<Elem>> {
    let n = a.dim();
    let mut aug: Vec<Vec<Elem>> = a
        .rows()
        .into_iter()
        .zip(b)
        .map(|(mut row, &bi)| {
            row.push(bi);
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(pivot, col);
        let pinv = field.inv_nonzero(aug[col][col]);
        for c in col..=n {
            aug[col][c] = field.mul(aug[col][c], pinv);
        }
        for r in 0..n {
            if r == col || aug[r][col].is_zero() {
                continue;
            }
            let factor = aug[r][col];
            for c in col..=n {
                let sub = field.mul(factor, aug[col][c]);
                aug[r][c] = field.sub(aug[r][c], sub);
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[u32]) -> Vec<Elem> {
        v.iter().map(|&x| Elem(x)).collect()
    }

    #[test]
    fn rank_of_fano_frames() {
        let f = Field::new(2, 1).unwrap();
        assert_eq!(rank(&f, &[e(&[1, 0, 0]), e(&[0, 1, 0]), e(&[0, 0, 1])]), 3);
        assert_eq!(rank(&f, &[e(&[1, 0, 0]), e(&[0, 1, 0]), e(&[1, 1, 0])]), 2);
        assert_eq!(rank(&f, &[e(&[0, 0, 0])]), 0);
    }

    #[test]
    fn invertible_count_matches_gl_order() {
        // |GL₂(q)| = (q²−1)(q²−q)
        for (p, k, expected) in [(2, 1, 6usize), (3, 1, 48), (2, 2, 180), (5, 1, 480)] {
            let f = Field::new(p, k).unwrap();
            let q = f.order();
            let count = (0..(q as u128).pow(4))
                .filter(|&i| Matrix::from_index(2, q, i).is_invertible(&f))
                .count();
            assert_eq!(count, expected);
        }
    }

    #[test]
    fn determinant_is_multiplicative() {
        let f = Field::new(3, 1).unwrap();
        for i in (0..3u128.pow(4)).step_by(7) {
            for j in (0..3u128.pow(4)).step_by(5) {
                let a = Matrix::from_index(2, 3, i);
                let b = Matrix::from_index(2, 3, j);
                assert_eq!(
                    a.mul(&f, &b).determinant(&f),
                    f.mul(a.determinant(&f), b.determinant(&f))
                );
            }
        }
    }

    #[test]
    fn solve_recovers_solution() {
        let f = Field::new(2, 2).unwrap();
        let a = Matrix::from_rows(&[e(&[1, 2]), e(&[2, 1])]);
        assert_eq!(a.determinant(&f), Elem(2));
        let x = e(&[2, 3]);
        let mut b = vec![Elem::ZERO; 2];
        a.apply(&f, &x, &mut b);
        assert_eq!(solve(&f, &a, &b), Some(x));
        let singular = Matrix::from_rows(&[e(&[1, 1]), e(&[1, 1])]);
        assert_eq!(solve(&f, &singular, &b), None);
    }
}
