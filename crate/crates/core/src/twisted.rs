//! Twisted Koszul complex of a rank-one local system on the `n`-torus.
//!
//! The Morse complex of a minimal Morse function on `T^n` is the exterior
//! algebra `Λ*⟨p_1, …, p_n⟩`. A local system with monodromies `λ_i` twists
//! the differential into `a ↦ a ∧ ξ` with `ξ = Σ (λ_i − 1) p_i`.
//!
//! Basis of `Λ^k`: wedge monomials `p_S`, `|S| = k`, in lexicographic order
//! of `S`. Reordering uses `p_i ∧ p_S = (−1)^{#{s ∈ S : s < i}} p_{S ∪ {i}}`,
//! hence `p_S ∧ p_i = (−1)^{#{s ∈ S : s > i}} p_{S ∪ {i}}`.

use std::collections::HashMap;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::TwistData;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct KoszulComplex {
    twist: TwistData,
    /// `bases[k]` lists the subsets spanning `Λ^k`.
    bases: Vec<Vec<Vec<usize>>>,
    /// `differentials[k] : Λ^k → Λ^{k+1}` for `k = 0..n`, of shape
    /// `C(n, k+1) × C(n, k)`.
    differentials: Vec<Matrix>,
}

/// `(b_0, …, b_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct BettiVector(Vec<usize>);

impl BettiVector {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&b| b == 0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// `C(n, k)` for every `k = 0..=n`.
pub fn binomials(n: usize) -> Vec<usize> {
    let mut row = vec![1usize];
    for _ in 0..n {
        let mut next = vec![1usize; row.len() + 1];
        for k in 1..row.len() {
            next[k] = row[k - 1] + row[k];
        }
        row = next;
    }
    row
}

/// Builds the complex for `twist` on `T^n` and checks `d ∘ d = 0`.
pub fn build_complex(n: usize, twist: &TwistData) -> Result<KoszulComplex> {
    if n == 0 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: 0,
        });
    }
    if twist.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: twist.len(),
        });
    }
    if let Some(index) = twist.iter().position(Scalar::is_zero) {
        return Err(Error::ZeroMonodromy { index });
    }
    let xi: Vec<Scalar> = twist.iter().map(|l| l - &Scalar::one()).collect();
    let bases: Vec<Vec<Vec<usize>>> = (0..=n)
        .map(|k| (0..n).combinations(k).collect())
        .collect();

    let mut differentials = Vec::with_capacity(n);
    for k in 0..n {
        let target_index: HashMap<&[usize], usize> = bases[k + 1]
            .iter()
            .enumerate()
            .map(|(idx, s)| (s.as_slice(), idx))
            .collect();
        let mut d = Matrix::zeros(bases[k + 1].len(), bases[k].len());
        for (col, s) in bases[k].iter().enumerate() {
            for (i, coeff) in xi.iter().enumerate() {
                if coeff.is_zero() || s.contains(&i) {
                    continue;
                }
                let mut t = s.clone();
                let pos = t.partition_point(|&e| e < i);
                t.insert(pos, i);
                // elements of S greater than i
                let sign_negative = (s.len() - pos) % 2 == 1;
                let value = if sign_negative { -coeff } else { coeff.clone() };
                d.set(target_index[t.as_slice()], col, value);
            }
        }
        differentials.push(d);
    }
    for (k, pair) in differentials.windows(2).enumerate() {
        if !pair[1].mul(&pair[0]).is_zero() {
            return Err(Error::NotAComplex { degree: k });
        }
    }
    Ok(KoszulComplex {
        twist: twist.clone(),
        bases,
        differentials,
    })
}

impl KoszulComplex {
    pub fn n(&self) -> usize {
        self.differentials.len()
    }

    pub fn twist(&self) -> &TwistData {
        &self.twist
    }

    /// Subsets (0-based) indexing the basis of `Λ^k`.
    pub fn basis(&self, k: usize) -> &[Vec<usize>] {
        &self.bases[k]
    }

    pub fn differentials(&self) -> &[Matrix] {
        &self.differentials
    }

    /// `b_k = C(n,k) − rank d_k − rank d_{k−1}`.
    pub fn betti_numbers(&self) -> BettiVector {
        let n = self.n();
        let ranks: Vec<usize> = self.differentials.iter().map(Matrix::rank).collect();
        let dims = binomials(n);
        let betti = (0..=n)
            .map(|k| {
                let out = if k < n { ranks[k] } else { 0 };
                let inc = if k > 0 { ranks[k - 1] } else { 0 };
                dims[k] - out - inc
            })
            .collect();
        BettiVector(betti)
    }

    pub fn is_acyclic(&self) -> bool {
        self.betti_numbers().is_zero()
    }
}
