use std::fmt;

use crate::error::{Error, Result};

/// Exponent vector `l ∈ Z^m` of a Laurent monomial.
///
/// Ordered lexicographically. All arithmetic is checked; overflow is an
/// error rather than a wrap.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponent(Vec<i64>);

impl Exponent {
    pub fn new(entries: Vec<i64>) -> Self {
        Exponent(entries)
    }

    pub fn zero(len: usize) -> Self {
        Exponent(vec![0; len])
    }

    /// The `i`-th unit vector.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut e = vec![0; len];
        e[i] = 1;
        Exponent(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn checked_add(&self, other: &Exponent) -> Result<Exponent> {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Exponent)
    }

    pub fn checked_sub(&self, other: &Exponent) -> Result<Exponent> {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Exponent)
    }

    pub fn checked_scale(&self, k: i64) -> Result<Exponent> {
        self.0
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Exponent)
    }

    pub fn checked_neg(&self) -> Result<Exponent> {
        self.checked_scale(-1)
    }

    /// `⟨self, d⟩`.
    pub fn dot(&self, d: &[i64]) -> Result<i64> {
        self.0.iter().zip(d).try_fold(0i64, |acc, (a, b)| {
            a.checked_mul(*b)
                .and_then(|p| acc.checked_add(p))
                .ok_or(Error::ExponentOverflow)
        })
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// Key for the rendering order: lexicographic comparison starting from the
    /// last variable.
    pub(crate) fn colex_key(&self) -> impl Ord + '_ {
        self.0.iter().rev().copied().collect::<Vec<_>>()
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<i64>> for Exponent {
    fn from(v: Vec<i64>) -> Self {
        Exponent(v)
    }
}

impl<const N: usize> From<[i64; N]> for Exponent {
    fn from(v: [i64; N]) -> Self {
        Exponent(v.to_vec())
    }
}
