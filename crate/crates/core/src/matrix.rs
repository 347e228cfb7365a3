//! Dense matrices over an exact field, with the handful of operations the
//! rest of the crate needs: products, row reduction, rank, nullspace, and
//! solving `A x = b` when a solution exists.

use crate::field::Field;

#[derive(Clone, Debug)]
pub struct Matrix<F: Field> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> PartialEq for Matrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<F: Field> Matrix<F> {
    pub fn zero(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        let _ = field;
        Matrix { rows, cols, data }
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self, field: &F) -> bool {
        self.data.iter().all(|x| field.is_zero(x))
    }

    pub fn mul(&self, field: &F, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = Matrix::zero(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if field.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if field.is_zero(b) {
                        continue;
                    }
                    let v = field.add(out.get(i, j), &field.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, field: &F, other: &Matrix<F>) -> Matrix<F> {
        assert!(self.rows == other.rows && self.cols == other.cols);
        Matrix::from_fn(field, self.rows, self.cols, |r, c| {
            field.add(self.get(r, c), other.get(r, c))
        })
    }

    pub fn sub(&self, field: &F, other: &Matrix<F>) -> Matrix<F> {
        assert!(self.rows == other.rows && self.cols == other.cols);
        Matrix::from_fn(field, self.rows, self.cols, |r, c| {
            field.sub(self.get(r, c), other.get(r, c))
        })
    }

    pub fn scale(&self, field: &F, s: &F::Elem) -> Matrix<F> {
        Matrix::from_fn(field, self.rows, self.cols, |r, c| field.mul(self.get(r, c), s))
    }

    pub fn transpose(&self, field: &F) -> Matrix<F> {
        Matrix::from_fn(field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, field: &F, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vcat(&self, field: &F, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.cols);
        Matrix::from_fn(field, self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows {
                self.get(r, c).clone()
            } else {
                other.get(r - self.rows, c).clone()
            }
        })
    }

    /// In-place reduction to reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self, field: &F) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !field.is_zero(self.get(r, col))) else {
                continue;
            };
            if pr != row {
                for c in 0..self.cols {
                    self.data.swap(pr * self.cols + c, row * self.cols + c);
                }
            }
            let inv = field.inv(self.get(row, col));
            for c in col..self.cols {
                let v = field.mul(self.get(row, c), &inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row || field.is_zero(self.get(r, col)) {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in col..self.cols {
                    let v = field.sub(self.get(r, c), &field.mul(&factor, self.get(row, c)));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self, field: &F) -> usize {
        let mut m = self.clone();
        m.rref(field).len()
    }

    /// Basis of the right nullspace, one column vector per basis element.
    pub fn nullspace(&self, field: &F) -> Vec<Matrix<F>> {
        let mut m = self.clone();
        let pivots = m.rref(field);
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = Matrix::zero(field, self.cols, 1);
            v.set(fc, 0, field.one());
            for (r, &pc) in pivots.iter().enumerate() {
                v.set(pc, 0, field.neg(m.get(r, fc)));
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self * x = b`; `None` when inconsistent. `b` may have several columns.
    pub fn solve(&self, field: &F, b: &Matrix<F>) -> Option<Matrix<F>> {
        assert_eq!(self.rows, b.rows);
        let mut aug = self.hcat(field, b);
        let pivots = aug.rref(field);
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zero(field, self.cols, b.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, aug.get(r, self.cols + j).clone());
            }
        }
        Some(x)
    }

    /// True when the matrix is square and invertible.
    pub fn is_invertible(&self, field: &F) -> bool {
        self.rows == self.cols && self.rank(field) == self.rows
    }

    pub fn inverse(&self, field: &F) -> Option<Matrix<F>> {
        if self.rows != self.cols {
            return None;
        }
        let id = Matrix::identity(field, self.rows);
        let inv = self.solve(field, &id)?;
        if self.mul(field, &inv) == id {
            Some(inv)
        } else {
            None
        }
    }

    /// Flattens to a single column (row-major), for treating maps as vectors.
    pub fn vectorize(&self, field: &F) -> Matrix<F> {
        Matrix::from_fn(field, self.rows * self.cols, 1, |r, _| self.data[r].clone())
    }
}

/// Rank of the column span of a list of vectors (given as n x 1 matrices).
pub fn span_rank<F: Field>(field: &F, vectors: &[Matrix<F>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let n = vectors[0].rows;
    let m = Matrix::from_fn(field, vectors.len(), n, |r, c| vectors[r].get(c, 0).clone());
    m.rank(field)
}
