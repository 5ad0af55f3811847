use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// An element `(a_ij)` of `GL(m; Z)`.
///
/// Acts on Laurent polynomials by `x_i ↦ Π_j x_j^{a_ij}`, which sends the
/// exponent vector `l` to `Aᵀl`. With this convention acting by `A` and then
/// by `B` equals acting by [`UnimodularMatrix::compose`]`(A, B) = A·B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl UnimodularMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let dim = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::NotSquare {
                rows: dim,
                cols: bad.len(),
            });
        }
        let det = Matrix::from_int_rows(&rows)
            .determinant()
            .expect("square matrix");
        let det_int = det
            .as_rational()
            .map(|q| q.to_integer())
            .expect("integer matrix has rational determinant");
        if det_int != BigInt::from(1) && det_int != BigInt::from(-1) {
            return Err(Error::NotUnimodular { det: det_int });
        }
        Ok(UnimodularMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        UnimodularMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.dim).map(|i| self.row(i).to_vec()).collect()
    }

    /// Matrix product `self · other`: the basis change equal to applying
    /// `self` first and `other` second.
    pub fn compose(&self, other: &UnimodularMatrix) -> Result<UnimodularMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let n = self.dim;
        let mut entries = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc: i64 = 0;
                for k in 0..n {
                    acc = self
                        .get(i, k)
                        .checked_mul(other.get(k, j))
                        .and_then(|p| acc.checked_add(p))
                        .ok_or(Error::ExponentOverflow)?;
                }
                entries[i * n + j] = acc;
            }
        }
        Ok(UnimodularMatrix { dim: n, entries })
    }

    /// `Aᵀ l`.
    pub(crate) fn act_on_exponent(&self, l: &[i64]) -> Result<Vec<i64>> {
        (0..self.dim)
            .map(|j| {
                (0..self.dim).try_fold(0i64, |acc, i| {
                    self.get(i, j)
                        .checked_mul(l[i])
                        .and_then(|p| acc.checked_add(p))
                        .ok_or(Error::ExponentOverflow)
                })
            })
            .collect()
    }

    /// Induced action on local systems: `ρ'_i = Π_j ρ_j^{a_ij}`.
    pub fn act_on_point(&self, rho: &[Scalar]) -> Result<Vec<Scalar>> {
        if rho.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: rho.len(),
            });
        }
        (0..self.dim)
            .map(|i| {
                self.row(i).iter().zip(rho).try_fold(Scalar::one(), |acc, (&a, r)| {
                    let p = r
                        .pow(a)
                        .ok_or_else(|| Error::NotInvertible("zero entry".into()))?;
                    Ok(&acc * &p)
                })
            })
            .collect()
    }
}

/// Parses `1,0;1,1` (rows separated by `;`, entries by `,`).
impl FromStr for UnimodularMatrix {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let rows = s
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|e| e.trim().parse::<i64>().map_err(|e| e.to_string()))
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        UnimodularMatrix::new(rows).map_err(|e| e.to_string())
    }
}
