//! Structure constants of the `r`-power basis from higher disk potentials.
//!
//! Given the potential `W = W_{L,1}` and the higher potentials
//! `W_{L,0} = 1, W_{L,1}, …, W_{L,k}`, the constants `c_{i,k}` are the
//! unique scalars with
//!
//! ```text
//! W^k = W_{L,k} + Σ_{0 ≤ i < k} c_{i,k} · W_{L,i}
//! ```
//!
//! as Laurent polynomials. They are recovered by an exact linear solve over
//! the union of supports.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{Exponent, LaurentPoly};
use crate::linalg::{Matrix, SolveError};
use crate::scalar::Scalar;

/// `W` together with `[W_{L,0}, W_{L,1}, …]`.
///
/// Families computed for different divisors are not comparable, so each
/// carries an optional free-text divisor label.
#[derive(Clone, Debug, PartialEq)]
pub struct PotentialFamily {
    label: Option<String>,
    w: LaurentPoly,
    higher: Vec<LaurentPoly>,
}

impl PotentialFamily {
    /// `higher[0]` must be `1` and `higher[1]`, when present, must equal `w`.
    pub fn new(w: LaurentPoly, higher: Vec<LaurentPoly>) -> Result<Self> {
        for h in &higher {
            w.vars().ensure_same(h.vars())?;
        }
        if let Some(h0) = higher.first() {
            if !h0.is_one() {
                return Err(Error::InvalidFamily(format!(
                    "W_0 must be 1, found {h0}"
                )));
            }
        }
        if let Some(h1) = higher.get(1) {
            if *h1 != w {
                return Err(Error::InvalidFamily(format!(
                    "W_1 = {h1} differs from W = {w}"
                )));
            }
        }
        Ok(PotentialFamily {
            label: None,
            w,
            higher,
        })
    }

    /// Family `[1, W, …]` with `W` read off `higher[1]`.
    pub fn from_higher(higher: Vec<LaurentPoly>) -> Result<Self> {
        let w = higher
            .get(1)
            .cloned()
            .ok_or(Error::IndexOutOfRange {
                index: 1,
                len: higher.len(),
            })?;
        Self::new(w, higher)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn w(&self) -> &LaurentPoly {
        &self.w
    }

    pub fn higher(&self) -> &[LaurentPoly] {
        &self.higher
    }

    /// Appends the next higher potential.
    pub fn push(&mut self, next: LaurentPoly) -> Result<()> {
        self.w.vars().ensure_same(next.vars())?;
        self.higher.push(next);
        Ok(())
    }

    fn require(&self, count: usize) -> Result<()> {
        if self.higher.len() < count {
            Err(Error::IndexOutOfRange {
                index: count - 1,
                len: self.higher.len(),
            })
        } else {
            Ok(())
        }
    }
}

/// `(c_{0,k}, …, c_{k-1,k})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ConstantsJson", into = "ConstantsJson")]
pub struct StructureConstants {
    k: usize,
    c: Vec<Scalar>,
}

impl StructureConstants {
    pub fn new(c: Vec<Scalar>) -> Result<Self> {
        if c.is_empty() {
            return Err(Error::InvalidFamily("k must be positive".into()));
        }
        Ok(StructureConstants { k: c.len(), c })
    }

    pub fn zeros(k: usize) -> Result<Self> {
        Self::new(vec![Scalar::zero(); k])
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn values(&self) -> &[Scalar] {
        &self.c
    }

    /// True if every constant is a rational integer.
    pub fn is_integral(&self) -> bool {
        self.c
            .iter()
            .all(|s| s.as_rational().is_some_and(|q| q.is_integer()))
    }
}

#[derive(Serialize, Deserialize)]
struct ConstantsJson {
    k: usize,
    c: Vec<String>,
}

impl From<StructureConstants> for ConstantsJson {
    fn from(s: StructureConstants) -> Self {
        ConstantsJson {
            k: s.k,
            c: s.c.iter().map(ToString::to_string).collect(),
        }
    }
}

impl TryFrom<ConstantsJson> for StructureConstants {
    type Error = String;

    fn try_from(j: ConstantsJson) -> std::result::Result<Self, String> {
        let c = j
            .c
            .iter()
            .map(|s| s.parse::<Scalar>().map_err(|e| e.to_string()))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if c.len() != j.k {
            return Err(format!("k = {} but {} constants given", j.k, c.len()));
        }
        StructureConstants::new(c).map_err(|e| e.to_string())
    }
}

fn check_k(k: usize) -> Result<u32> {
    if k == 0 {
        return Err(Error::InvalidFamily("k must be positive".into()));
    }
    u32::try_from(k).map_err(|_| Error::ExponentOverflow)
}

/// Solves `W^k - W_{L,k} = Σ c_i W_{L,i}` for the unique `c`.
///
/// Rows of the system are the exponents in the union of supports, in
/// lexicographic order; columns are `W_{L,0}, …, W_{L,k-1}`.
pub fn extract_structure_constants(
    fam: &PotentialFamily,
    k: usize,
) -> Result<StructureConstants> {
    let kk = check_k(k)?;
    fam.require(k + 1)?;
    let rhs = fam.w.pow(kk)?.sub(&fam.higher[k])?;

    let rows: BTreeSet<&Exponent> = rhs
        .terms()
        .map(|(e, _)| e)
        .chain(fam.higher[..k].iter().flat_map(|h| h.terms().map(|(e, _)| e)))
        .collect();
    let mut a = Matrix::zeros(rows.len(), k);
    let mut b = Vec::with_capacity(rows.len());
    for (r, e) in rows.iter().enumerate() {
        for (col, h) in fam.higher[..k].iter().enumerate() {
            a.set(r, col, h.coeff(e));
        }
        b.push(rhs.coeff(e));
    }
    match a.solve(&b) {
        Ok(c) => StructureConstants::new(c),
        Err(SolveError::Inconsistent) => Err(Error::Inconsistent),
        Err(SolveError::Underdetermined { nullity }) => Err(Error::Underdetermined { nullity }),
    }
}

/// `W^k - Σ c_i W_{L,i}`: the higher potential `W_{L,k}` implied by `c`.
pub fn synthesize_higher_potential(
    prefix: &PotentialFamily,
    k: usize,
    c: &StructureConstants,
) -> Result<LaurentPoly> {
    let kk = check_k(k)?;
    if c.k != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            found: c.k,
        });
    }
    prefix.require(k)?;
    let mut out = prefix.w.pow(kk)?;
    for (ci, h) in c.c.iter().zip(&prefix.higher) {
        out = out.sub(&h.scale(ci))?;
    }
    Ok(out)
}

/// Exact check of `W^k - W_{L,k} - Σ c_i W_{L,i} = 0`.
pub fn verify_power_identity(
    fam: &PotentialFamily,
    k: usize,
    c: &StructureConstants,
) -> Result<bool> {
    fam.require(k + 1)?;
    let implied = synthesize_higher_potential(fam, k, c)?;
    Ok(implied == fam.higher[k])
}
