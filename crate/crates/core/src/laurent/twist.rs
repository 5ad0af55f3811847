use std::ops::Deref;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Monodromies `(λ₁, …, λ_m)` of a rank-one local system on a torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistData(Vec<Scalar>);

impl TwistData {
    pub fn new(entries: Vec<Scalar>) -> Result<Self> {
        if let Some(index) = entries.iter().position(Scalar::is_zero) {
            return Err(Error::ZeroMonodromy { index });
        }
        Ok(TwistData(entries))
    }

    /// The trivial local system `(1, …, 1)`.
    pub fn trivial(len: usize) -> Self {
        TwistData(vec![Scalar::one(); len])
    }

    pub fn from_ints(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&e| Scalar::from_int(e)).collect())
    }

    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(Scalar::is_one)
    }

    /// Entrywise quotient `self / other`, the twist `ρ₁ρ₂⁻¹` seen by the
    /// Floer complex of a pair of local systems.
    pub fn ratio(&self, other: &TwistData) -> Result<TwistData> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        let entries = self
            .0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_div(b).expect("twist entries are nonzero"))
            .collect();
        Ok(TwistData(entries))
    }

    pub fn into_inner(self) -> Vec<Scalar> {
        self.0
    }
}

impl Deref for TwistData {
    type Target = [Scalar];
    fn deref(&self) -> &[Scalar] {
        &self.0
    }
}
