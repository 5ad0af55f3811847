//! Wall-crossing identities between Laurent potentials.
//!
//! A [`SubstitutionMap`] sends each variable of a source chart to a
//! monomial times a power of a binomial in the target chart,
//! `x_i ↦ c_i · y^{m_i} · (1 + b_i · y^{e_i})^{k_i}`. Substituting into a
//! Laurent polynomial yields a [`RationalFunction`] whose denominator is a
//! product of binomial powers; equality is always decided by
//! cross-multiplication, never by factoring.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::laurent::{Exponent, LaurentPoly, TwistData, UnimodularMatrix, Vars};
use crate::scalar::Scalar;

/// Exact fraction of two Laurent polynomials over the same variables.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        num.vars().ensure_same(den.vars())?;
        if den.is_zero() {
            return Err(Error::NotInvertible("zero denominator".into()));
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let den = LaurentPoly::one(p.vars());
        RationalFunction { num: p, den }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn vars(&self) -> &Vars {
        self.num.vars()
    }

    pub fn add(&self, other: &RationalFunction) -> Result<RationalFunction> {
        if self.den == other.den {
            return Self::new(self.num.add(&other.num)?, self.den.clone());
        }
        let num = self.num.mul(&other.den)?.add(&other.num.mul(&self.den)?)?;
        Self::new(num, self.den.mul(&other.den)?)
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &RationalFunction) -> Result<RationalFunction> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RationalFunction) -> Result<RationalFunction> {
        Self::new(self.num.mul(&other.num)?, self.den.mul(&other.den)?)
    }

    /// `num₁·den₂ = num₂·den₁`.
    pub fn equals(&self, other: &RationalFunction) -> Result<bool> {
        self.vars().ensure_same(other.vars())?;
        Ok(self.num.mul(&other.den)? == other.num.mul(&self.den)?)
    }

    /// The polynomial `num/den` if the denominator is a unit.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        let inv = self.den.unit_inverse().ok()?;
        self.num.mul(&inv).ok()
    }

    pub fn eval(&self, rho: &TwistData) -> Result<Scalar> {
        let d = self.den.eval(rho)?;
        let n = self.num.eval(rho)?;
        n.checked_div(&d)
            .ok_or_else(|| Error::NotInvertible("denominator vanishes at the point".into()))
    }
}

/// `rf_equals(a, b)`: exact equality by cross-multiplication.
pub fn rf_equals(a: &RationalFunction, b: &RationalFunction) -> Result<bool> {
    a.equals(b)
}

/// `1 + coeff · y^exp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Binomial {
    pub coeff: Scalar,
    pub exp: Exponent,
}

impl Binomial {
    pub fn new(coeff: Scalar, exp: Exponent) -> Self {
        Binomial { coeff, exp }
    }

    /// `1 + y^exp`.
    pub fn unit_coeff(exp: Exponent) -> Self {
        Binomial {
            coeff: Scalar::one(),
            exp,
        }
    }

    fn to_poly(&self, vars: &Vars) -> Result<LaurentPoly> {
        LaurentPoly::one(vars).add(&LaurentPoly::monomial(vars, self.exp.clone(), self.coeff.clone())?)
    }

    fn eval(&self, rho: &TwistData) -> Scalar {
        let mut m = self.coeff.clone();
        for (&k, r) in self.exp.as_slice().iter().zip(rho.iter()) {
            m = &m * &r.pow(k).expect("twist entries are nonzero");
        }
        &Scalar::one() + &m
    }
}

/// Image `coeff · y^monomial · binomial^power` of one source variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableImage {
    pub coeff: Scalar,
    pub monomial: Exponent,
    /// `None` stands for the constant binomial `1`.
    pub binomial: Option<Binomial>,
    pub power: i64,
}

impl VariableImage {
    pub fn monomial(coeff: Scalar, monomial: Exponent) -> Self {
        VariableImage {
            coeff,
            monomial,
            binomial: None,
            power: 0,
        }
    }

    fn binomial_power(&self) -> Option<(&Binomial, i64)> {
        match &self.binomial {
            Some(b) if self.power != 0 => Some((b, self.power)),
            _ => None,
        }
    }
}

/// Monomial-times-binomial-power map from a source chart into `target`.
#[derive(Clone, Debug, PartialEq)]
pub struct SubstitutionMap {
    target: Vars,
    images: Vec<VariableImage>,
}

impl SubstitutionMap {
    pub fn new(target: Vars, images: Vec<VariableImage>) -> Result<Self> {
        for (i, img) in images.iter().enumerate() {
            if img.coeff.is_zero() {
                return Err(Error::InvalidSubstitution(format!(
                    "monomial coefficient of variable {i} is zero"
                )));
            }
            let mut exps = vec![&img.monomial];
            if let Some(b) = &img.binomial {
                exps.push(&b.exp);
                if b.exp.is_zero() && (&Scalar::one() + &b.coeff).is_zero() {
                    return Err(Error::InvalidSubstitution(format!(
                        "binomial of variable {i} is identically zero"
                    )));
                }
            }
            for e in exps {
                if e.len() != target.len() {
                    return Err(Error::DimensionMismatch {
                        expected: target.len(),
                        found: e.len(),
                    });
                }
            }
        }
        Ok(SubstitutionMap { target, images })
    }

    pub fn identity(vars: &Vars) -> Self {
        let images = (0..vars.len())
            .map(|i| VariableImage::monomial(Scalar::one(), Exponent::unit(vars.len(), i)))
            .collect();
        SubstitutionMap {
            target: vars.clone(),
            images,
        }
    }

    /// The pure monomial map `x_i ↦ Π_j y_j^{a_ij}`.
    pub fn from_matrix(vars: &Vars, a: &UnimodularMatrix) -> Result<Self> {
        if a.dim() != vars.len() {
            return Err(Error::DimensionMismatch {
                expected: vars.len(),
                found: a.dim(),
            });
        }
        let images = (0..a.dim())
            .map(|i| VariableImage::monomial(Scalar::one(), Exponent::new(a.row(i).to_vec())))
            .collect();
        Self::new(vars.clone(), images)
    }

    pub fn target(&self) -> &Vars {
        &self.target
    }

    pub fn images(&self) -> &[VariableImage] {
        &self.images
    }

    pub fn source_arity(&self) -> usize {
        self.images.len()
    }

    /// `φ(ρ)`: the point of the source torus corresponding to `rho`.
    pub fn apply_to_point(&self, rho: &TwistData) -> Result<TwistData> {
        if rho.len() != self.target.len() {
            return Err(Error::DimensionMismatch {
                expected: self.target.len(),
                found: rho.len(),
            });
        }
        let mut out = Vec::with_capacity(self.images.len());
        for (index, img) in self.images.iter().enumerate() {
            let mut v = img.coeff.clone();
            for (&k, r) in img.monomial.as_slice().iter().zip(rho.iter()) {
                v = &v * &r.pow(k).expect("twist entries are nonzero");
            }
            if let Some((b, k)) = img.binomial_power() {
                let base = b.eval(rho);
                v = &v * &base.pow(k).ok_or(Error::OutsideDomain { index })?;
            }
            if v.is_zero() {
                return Err(Error::OutsideDomain { index });
            }
            out.push(v);
        }
        TwistData::new(out)
    }
}

/// `f ∘ φ` as a fraction whose denominator is a product of binomial powers.
pub fn substitute(f: &LaurentPoly, phi: &SubstitutionMap) -> Result<RationalFunction> {
    if f.nvars() != phi.source_arity() {
        return Err(Error::DimensionMismatch {
            expected: phi.source_arity(),
            found: f.nvars(),
        });
    }
    let target = &phi.target;
    let terms = f.sorted_terms();

    // binomial exponent carried by each term, per variable
    let mut shifts: Vec<i64> = vec![0; phi.images.len()];
    let mut term_powers = Vec::with_capacity(terms.len());
    for (e, _) in &terms {
        let mut powers = Vec::with_capacity(phi.images.len());
        for (i, (&l, img)) in e.as_slice().iter().zip(&phi.images).enumerate() {
            let p = match img.binomial_power() {
                Some((_, k)) => k.checked_mul(l).ok_or(Error::ExponentOverflow)?,
                None => 0,
            };
            shifts[i] = shifts[i].max(-p);
            powers.push(p);
        }
        term_powers.push(powers);
    }

    let binomials: Vec<Option<LaurentPoly>> = phi
        .images
        .iter()
        .map(|img| {
            img.binomial_power()
                .map(|(b, _)| b.to_poly(target))
                .transpose()
        })
        .collect::<Result<_>>()?;
    let mut cache: HashMap<(usize, i64), LaurentPoly> = HashMap::new();
    let mut binomial_pow = |i: usize, k: i64| -> Result<LaurentPoly> {
        if let Some(p) = cache.get(&(i, k)) {
            return Ok(p.clone());
        }
        let b = binomials[i].as_ref().expect("binomial present");
        let p = b.pow(u32::try_from(k).map_err(|_| Error::ExponentOverflow)?)?;
        cache.insert((i, k), p.clone());
        Ok(p)
    };

    let mut den = LaurentPoly::one(target);
    for (i, &n) in shifts.iter().enumerate() {
        if n > 0 {
            den = den.mul(&binomial_pow(i, n)?)?;
        }
    }

    let mut num = LaurentPoly::zero(target);
    for ((e, c), powers) in terms.iter().zip(&term_powers) {
        let mut mono = Exponent::zero(target.len());
        let mut coeff = (*c).clone();
        for (&l, img) in e.as_slice().iter().zip(&phi.images) {
            if l == 0 {
                continue;
            }
            mono = mono.checked_add(&img.monomial.checked_scale(l)?)?;
            coeff = &coeff * &img.coeff.pow(l).expect("nonzero coefficient");
        }
        let mut term = LaurentPoly::monomial(target, mono, coeff)?;
        for (i, &p) in powers.iter().enumerate() {
            let k = p + shifts[i];
            if k > 0 {
                term = term.mul(&binomial_pow(i, k)?)?;
            }
        }
        num = num.add(&term)?;
    }
    RationalFunction::new(num, den)
}

/// True iff `W1 ∘ φ = W0` as rational functions on the target chart.
pub fn wall_crossing_check(w0: &LaurentPoly, w1: &LaurentPoly, phi: &SubstitutionMap) -> Result<bool> {
    phi.target.ensure_same(w0.vars())?;
    let pulled = substitute(w1, phi)?;
    pulled.equals(&RationalFunction::from_poly(w0.clone()))
}
