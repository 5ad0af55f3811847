//! Dense exact matrices over [`Scalar`].
//!
//! Rank and determinant use fraction-free (Bareiss) elimination; linear
//! solves use Gauss-Jordan reduction with first-nonzero pivoting so that
//! results and error reports are reproducible.

use std::fmt;

use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Outcome of [`Matrix::solve`] when no unique solution exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveError {
    Inconsistent,
    Underdetermined { nullity: usize },
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.data[r * self.cols + c] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Matrix product; panics on a shape mismatch.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += &(a * b);
                    }
                }
            }
        }
        out
    }

    /// Bareiss elimination in place. Returns (rank, number of row swaps,
    /// last pivot).
    fn bareiss(&mut self) -> (usize, usize, Scalar) {
        let mut prev = Scalar::one();
        let mut rank = 0;
        let mut swaps = 0;
        for c in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&r| !self.get(r, c).is_zero()) else {
                continue;
            };
            if p != rank {
                self.swap_rows(p, rank);
                swaps += 1;
            }
            let pivot = self.get(rank, c).clone();
            for i in rank + 1..self.rows {
                let lead = self.get(i, c).clone();
                for j in c + 1..self.cols {
                    let v = &(&pivot * self.get(i, j)) - &(&lead * self.get(rank, j));
                    let v = v.checked_div(&prev).expect("Bareiss divisor is nonzero");
                    self.set(i, j, v);
                }
                self.set(i, c, Scalar::zero());
            }
            prev = pivot;
            rank += 1;
        }
        (rank, swaps, prev)
    }

    pub fn rank(&self) -> usize {
        self.clone().bareiss().0
    }

    /// Determinant of a square matrix, or `None` if not square.
    pub fn determinant(&self) -> Option<Scalar> {
        if self.rows != self.cols {
            return None;
        }
        if self.rows == 0 {
            return Some(Scalar::one());
        }
        let (rank, swaps, last) = self.clone().bareiss();
        if rank < self.rows {
            return Some(Scalar::zero());
        }
        Some(if swaps % 2 == 1 { -last } else { last })
    }

    /// Solves `self · x = rhs` for a unique `x`.
    pub fn solve(&self, rhs: &[Scalar]) -> Result<Vec<Scalar>, SolveError> {
        assert_eq!(rhs.len(), self.rows, "rhs length mismatch");
        let n = self.cols;
        // augmented matrix [A | b]
        let mut aug = Matrix::zeros(self.rows, n + 1);
        for (r, b) in rhs.iter().enumerate() {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n, b.clone());
        }
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for c in 0..n {
            let Some(p) = (row..aug.rows).find(|&r| !aug.get(r, c).is_zero()) else {
                continue;
            };
            aug.swap_rows(p, row);
            let inv = aug.get(row, c).inv().expect("pivot is nonzero");
            for j in c..=n {
                let v = aug.get(row, j) * &inv;
                aug.set(row, j, v);
            }
            for r in 0..aug.rows {
                if r == row || aug.get(r, c).is_zero() {
                    continue;
                }
                let f = aug.get(r, c).clone();
                for j in c..=n {
                    let v = aug.get(r, j) - &(&f * aug.get(row, j));
                    aug.set(r, j, v);
                }
            }
            pivot_cols.push(c);
            row += 1;
            if row == aug.rows {
                break;
            }
        }
        if (row..aug.rows).any(|r| !aug.get(r, n).is_zero()) {
            return Err(SolveError::Inconsistent);
        }
        if pivot_cols.len() < n {
            return Err(SolveError::Underdetermined {
                nullity: n - pivot_cols.len(),
            });
        }
        Ok((0..n).map(|r| aug.get(r, n).clone()).collect())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}
