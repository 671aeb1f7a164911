//! Dense exact linear algebra over an arbitrary coefficient [`Field`].
//!
//! Everything here is deterministic: row-echelon pivoting always takes the
//! first nonzero candidate, so bases of kernels and solution spaces are
//! reproducible across runs.

use crate::scalar::Field;

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat<F: Field> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<F>,
}

impl<F: Field> Mat<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn at(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut F {
        &mut self.data[i * self.cols + j]
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        Mat::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = F::zero();
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                let b = other.at(k, j);
                if b.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(b));
            }
            acc
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j).add(other.at(i, j)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j).sub(other.at(i, j)))
    }

    pub fn scale(&self, c: &F) -> Self {
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j).mul(c))
    }

    pub fn neg(&self) -> Self {
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j).neg())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Self) -> Self {
        Mat::from_fn(
            self.rows * other.rows,
            self.cols * other.cols,
            |i, j| {
                let (i1, i2) = (i / other.rows, i % other.rows);
                let (j1, j2) = (j / other.cols, j % other.cols);
                self.at(i1, j1).mul(other.at(i2, j2))
            },
        )
    }

    pub fn trace(&self) -> F {
        assert_eq!(self.rows, self.cols);
        let mut acc = F::zero();
        for i in 0..self.rows {
            acc = acc.add(self.at(i, i));
        }
        acc
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row >= self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, row * self.cols + j);
                }
            }
            let inv = self.at(row, col).try_inv().expect("pivot nonzero");
            for j in col..self.cols {
                let v = self.at(row, j).mul(&inv);
                *self.at_mut(row, j) = v;
            }
            for r in 0..self.rows {
                if r == row || self.at(r, col).is_zero() {
                    continue;
                }
                let factor = self.at(r, col).clone();
                for j in col..self.cols {
                    let v = self.at(r, j).sub(&factor.mul(self.at(row, j)));
                    *self.at_mut(r, j) = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right null space, as columns; deterministic echelon basis
    /// (free variables set to one in column order).
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().cloned().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = m.at(r, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `self * x = b` for a single solution; `None` if inconsistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.at(r, self.cols).clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix; `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.at(i, j).clone()
            } else if j - n == i {
                F::one()
            } else {
                F::zero()
            }
        });
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| aug.at(i, j + n).clone()))
    }

    /// Determinant by fraction-full Gaussian elimination.
    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = F::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return F::zero();
            };
            if p != col {
                for j in 0..n {
                    m.data.swap(p * n + j, col * n + j);
                }
                det = det.neg();
            }
            let piv = m.at(col, col).clone();
            det = det.mul(&piv);
            let inv = piv.try_inv().expect("pivot nonzero");
            for r in (col + 1)..n {
                if m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).mul(&inv);
                for j in col..n {
                    let v = m.at(r, j).sub(&factor.mul(m.at(col, j)));
                    *m.at_mut(r, j) = v;
                }
            }
        }
        det
    }

    /// A left inverse of a full-column-rank matrix; `None` if rank deficient.
    pub fn left_inverse(&self) -> Option<Self> {
        // The Gram trick (A^T A)^{-1} A^T can fail over Q(q) because the
        // symmetric bilinear form is not definite there, so instead select a
        // set of rows forming an invertible square submatrix.
        let mut chosen: Vec<usize> = Vec::new();
        for r in 0..self.rows {
            if chosen.len() == self.cols {
                break;
            }
            let mut cand = Mat::from_fn(chosen.len() + 1, self.cols, |i, j| {
                if i < chosen.len() {
                    self.at(chosen[i], j).clone()
                } else {
                    self.at(r, j).clone()
                }
            });
            if cand.rref().len() == chosen.len() + 1 {
                chosen.push(r);
            }
        }
        if chosen.len() < self.cols {
            return None;
        }
        let work = Mat::from_fn(chosen.len(), self.cols, |i, j| {
            self.at(chosen[i], j).clone()
        });
        let inv = work.inverse()?;
        // left_inv = inv * selector
        Some(Mat::from_fn(self.cols, self.rows, |i, j| {
            if let Some(k) = chosen.iter().position(|&r| r == j) {
                inv.at(i, k).clone()
            } else {
                F::zero()
            }
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::QScalar;

    fn qm(rows: usize, cols: usize, v: &[i64]) -> Mat<QScalar> {
        assert_eq!(v.len(), rows * cols);
        Mat {
            rows,
            cols,
            data: v.iter().map(|&x| QScalar::from_int(x)).collect(),
        }
    }

    #[test]
    fn inverse_and_det() {
        let m = qm(2, 2, &[1, 2, 3, 5]);
        assert_eq!(m.det(), QScalar::from_int(-1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(2));
    }

    #[test]
    fn nullspace_dim() {
        let m = qm(2, 3, &[1, 1, 0, 0, 0, 1]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        // 1*x0 + 1*x1 = 0, x2 = 0
        assert_eq!(ns[0][2], QScalar::zero());
    }

    #[test]
    fn left_inverse_tall() {
        let m = qm(3, 2, &[1, 0, 1, 1, 0, 1]);
        let li = m.left_inverse().unwrap();
        assert_eq!(li.mul(&m), Mat::identity(2));
    }

    #[test]
    fn solve_consistent() {
        let m = qm(2, 2, &[2, 0, 0, 4]);
        let x = m
            .solve(&[QScalar::from_int(6), QScalar::from_int(8)])
            .unwrap();
        assert_eq!(x, vec![QScalar::from_int(3), QScalar::from_int(2)]);
    }
}
