use std::collections::HashMap;
use std::fmt;

use num_complex::Complex64;

use super::{Exponent, TwistData, UnimodularMatrix, Vars};
use crate::error::{Error, Result};
use crate::scalar::{Scalar, Tower};

/// Sparse Laurent polynomial in `C[x₁^{±1}, …, x_m^{±1}]` with exact
/// coefficients.
///
/// Terms live in a hash map keyed by exponent vector. No stored coefficient
/// is zero, so the zero polynomial is the empty map and equality of
/// polynomials is equality of term maps.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: Vars,
    terms: HashMap<Exponent, Scalar>,
}

impl LaurentPoly {
    pub fn zero(vars: &Vars) -> Self {
        LaurentPoly {
            vars: vars.clone(),
            terms: HashMap::new(),
        }
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, Scalar::one())
    }

    pub fn constant(vars: &Vars, c: Scalar) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Exponent::zero(vars.len()), c);
        }
        p
    }

    pub fn monomial(vars: &Vars, exp: impl Into<Exponent>, c: Scalar) -> Result<Self> {
        let exp = exp.into();
        check_len(vars, &exp)?;
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        Ok(p)
    }

    /// The `i`-th variable as a polynomial.
    pub fn var(vars: &Vars, i: usize) -> Self {
        let mut p = Self::zero(vars);
        p.terms.insert(Exponent::unit(vars.len(), i), Scalar::one());
        p
    }

    /// Builds a polynomial from possibly repeated terms; repeated exponents
    /// are summed and zero coefficients dropped.
    pub fn from_terms<I, E>(vars: &Vars, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (E, Scalar)>,
        E: Into<Exponent>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            let e = e.into();
            check_len(vars, &e)?;
            p.accumulate(e, &c);
        }
        p.prune();
        Ok(p)
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    /// Terms in unspecified order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Scalar)> {
        self.terms.iter()
    }

    /// Terms sorted lexicographically by exponent.
    pub fn sorted_terms(&self) -> Vec<(&Exponent, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_unstable_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn coeff(&self, exp: &Exponent) -> Scalar {
        self.terms.get(exp).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Smallest tower containing every coefficient.
    pub fn tower(&self) -> Tower {
        self.terms
            .values()
            .map(Scalar::tower)
            .max()
            .unwrap_or(Tower::Rational)
    }

    fn accumulate(&mut self, e: Exponent, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        self.terms
            .entry(e)
            .and_modify(|v| *v += c)
            .or_insert_with(|| c.clone());
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.vars.ensure_same(&other.vars)?;
        let (mut acc, small) = if self.terms.len() >= other.terms.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (e, c) in &small.terms {
            acc.accumulate(e.clone(), c);
        }
        acc.prune();
        Ok(acc)
    }

    pub fn sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by `c · x^shift`.
    pub fn mul_monomial(&self, shift: &Exponent, c: &Scalar) -> Result<LaurentPoly> {
        check_len(&self.vars, shift)?;
        if c.is_zero() {
            return Ok(Self::zero(&self.vars));
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, v)| Ok((e.checked_add(shift)?, v * c)))
            .collect::<Result<HashMap<_, _>>>()?;
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.vars.ensure_same(&other.vars)?;
        let mut out = Self::zero(&self.vars);
        out.terms.reserve(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.accumulate(ea.checked_add(eb)?, &(ca * cb));
            }
        }
        out.prune();
        Ok(out)
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, k: u32) -> Result<LaurentPoly> {
        let mut acc = Self::one(&self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// The single term of a Laurent unit `c·x^l`, or `None` if `self` is not
    /// a unit (zero, or more than one term).
    pub fn as_unit(&self) -> Option<(&Exponent, &Scalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn is_unit(&self) -> bool {
        self.as_unit().is_some()
    }

    /// `(c·x^l)⁻¹ = c⁻¹·x^{-l}`.
    pub fn unit_inverse(&self) -> Result<LaurentPoly> {
        let (e, c) = self
            .as_unit()
            .ok_or_else(|| Error::NotInvertible(format!("{self} is not a Laurent unit")))?;
        let inv = c.inv().expect("stored coefficients are nonzero");
        Self::monomial(&self.vars, e.checked_neg()?, inv)
    }

    /// Integer power; negative exponents require a unit.
    pub fn pow_signed(&self, k: i64) -> Result<LaurentPoly> {
        let base = if k < 0 {
            self.unit_inverse()?
        } else {
            self.clone()
        };
        let k = u32::try_from(k.unsigned_abs()).map_err(|_| Error::ExponentOverflow)?;
        if k > 1 && base.is_unit() {
            // c^k x^{kl} without the squaring loop
            let (e, c) = base.as_unit().expect("unit");
            let c = c.pow(i64::from(k)).expect("nonzero");
            return Self::monomial(&self.vars, e.checked_scale(i64::from(k))?, c);
        }
        base.pow(k)
    }

    /// `Σ_l coeff(l) · Π λ_i^{l_i}`.
    pub fn eval(&self, rho: &TwistData) -> Result<Scalar> {
        check_point_len(&self.vars, rho.len())?;
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (&k, lambda) in e.as_slice().iter().zip(rho.iter()) {
                if k != 0 {
                    term = &term * &lambda.pow(k).expect("twist entries are nonzero");
                }
            }
            acc += &term;
        }
        Ok(acc)
    }

    /// Floating-point evaluation at an approximate point of `(C*)^m`.
    pub fn eval_approx(&self, point: &[Complex64]) -> Result<Complex64> {
        check_point_len(&self.vars, point.len())?;
        if let Some(index) = point.iter().position(|z| *z == Complex64::new(0.0, 0.0)) {
            return Err(Error::ZeroMonodromy { index });
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in self.sorted_terms() {
            let mut term = c.to_complex64();
            for (&k, z) in e.as_slice().iter().zip(point) {
                if k != 0 {
                    let k = i32::try_from(k).map_err(|_| Error::ExponentOverflow)?;
                    term *= z.powi(k);
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Basis change `x_i ↦ Π_j x_j^{a_ij}`; the exponent `l` becomes `Aᵀl`.
    pub fn change_basis(&self, a: &UnimodularMatrix) -> Result<LaurentPoly> {
        if a.dim() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                found: a.dim(),
            });
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| Ok((Exponent::new(a.act_on_exponent(e.as_slice())?), c.clone())))
            .collect::<Result<HashMap<_, _>>>()?;
        // A is invertible, so distinct exponents stay distinct.
        debug_assert_eq!(terms.len(), self.terms.len());
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Exponent::zero(self.nvars()))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Exponent::is_zero)
    }

    /// `(min, max)` of `⟨l, d⟩` over the support.
    pub fn degree_along(&self, d: &[i64]) -> Result<(i64, i64)> {
        check_point_len(&self.vars, d.len())?;
        let mut range: Option<(i64, i64)> = None;
        for e in self.terms.keys() {
            let v = e.dot(d)?;
            range = Some(match range {
                None => (v, v),
                Some((lo, hi)) => (lo.min(v), hi.max(v)),
            });
        }
        range.ok_or(Error::ZeroPolynomial)
    }

    /// True if every exponent is nonnegative, i.e. `self` lies in the
    /// polynomial subring.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Exponent::is_nonnegative)
    }

    /// Substitutes `images[i]` for the `i`-th variable. Variables occurring
    /// with negative exponent must be sent to units.
    pub fn compose(&self, images: &[LaurentPoly], target: &Vars) -> Result<LaurentPoly> {
        if images.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                found: images.len(),
            });
        }
        for img in images {
            img.vars.ensure_same(target)?;
        }
        let mut cache: HashMap<(usize, i64), LaurentPoly> = HashMap::new();
        let mut out = Self::zero(target);
        for (e, c) in self.sorted_terms() {
            let mut term = Self::constant(target, c.clone());
            for (i, &k) in e.as_slice().iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let factor = match cache.get(&(i, k)) {
                    Some(f) => f,
                    None => {
                        let f = images[i].pow_signed(k)?;
                        cache.entry((i, k)).or_insert(f)
                    }
                };
                term = term.mul(factor)?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Leading term for the lexicographic order (largest exponent).
    fn leading(&self) -> Option<(&Exponent, &Scalar)> {
        self.terms.iter().max_by(|a, b| a.0.cmp(b.0))
    }

    /// Exact quotient `self / divisor` in the polynomial ring, or `None` if
    /// the division leaves a remainder. Both operands must have nonnegative
    /// exponents.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<Option<LaurentPoly>> {
        self.vars.ensure_same(&divisor.vars)?;
        if !self.is_polynomial() || !divisor.is_polynomial() {
            return Err(Error::NegativeExponent);
        }
        let (lead_e, lead_c) = divisor
            .leading()
            .ok_or_else(|| Error::NotInvertible("division by zero".into()))?;
        let lead_inv = lead_c.inv().expect("nonzero");
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars);
        // A single polynomial is a Gröbner basis of the ideal it generates,
        // so a nonzero remainder under lex order means non-divisibility.
        while let Some((e, c)) = rem.leading() {
            if !e.dominates(lead_e) {
                return Ok(None);
            }
            let shift = e.checked_sub(lead_e)?;
            let q = c * &lead_inv;
            rem = rem.sub(&divisor.mul_monomial(&shift, &q)?)?;
            quot.accumulate(shift, &q);
        }
        quot.prune();
        Ok(Some(quot))
    }
}

fn check_len(vars: &Vars, e: &Exponent) -> Result<()> {
    if e.len() == vars.len() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: vars.len(),
            found: e.len(),
        })
    }
}

fn check_point_len(vars: &Vars, len: usize) -> Result<()> {
    if len == vars.len() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: vars.len(),
            found: len,
        })
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::expr::render(self))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({:?}: {})", self.vars, self)
    }
}
