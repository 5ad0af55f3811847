//! Localized polynomial algebras `C[g_1, …, g_n][s⁻¹]` and ring maps from
//! them into Laurent polynomial rings.
//!
//! This is the algebraic shadow of a closed-open map `SH⁰(M) → HF⁰(L, L)`
//! read in a Laurent chart: generators go to Laurent polynomials and the map
//! is well defined exactly when the localized element `s` lands on a unit.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Vars};
use crate::scalar::{Rational, Scalar};

/// Free commutative algebra on `gens`, localized at one polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalizedAlgebra {
    gens: Vars,
    inverted: LaurentPoly,
    /// Optional cohomological degree per generator. Stored, never enforced.
    grading: Vec<Option<Rational>>,
}

/// `numerator / s^denom_power`, kept in lowest terms with respect to `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    numerator: LaurentPoly,
    denom_power: u32,
}

impl AlgebraElement {
    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn denom_power(&self) -> u32 {
        self.denom_power
    }
}

impl LocalizedAlgebra {
    /// `inverted` must be a nonzero polynomial in `gens`.
    pub fn new(gens: Vars, inverted: LaurentPoly) -> Result<Self> {
        gens.ensure_same(inverted.vars())?;
        if inverted.is_zero() {
            return Err(Error::InvalidAlgebra("cannot invert 0".into()));
        }
        if !inverted.is_polynomial() {
            return Err(Error::InvalidAlgebra(format!(
                "localized element {inverted} has negative exponents"
            )));
        }
        let grading = vec![None; gens.len()];
        Ok(LocalizedAlgebra {
            gens,
            inverted,
            grading,
        })
    }

    /// The polynomial algebra `C[gens]`, nothing inverted.
    pub fn polynomial(gens: Vars) -> Self {
        let one = LaurentPoly::one(&gens);
        Self::new(gens, one).expect("1 is a valid localized element")
    }

    pub fn gens(&self) -> &Vars {
        &self.gens
    }

    pub fn inverted(&self) -> &LaurentPoly {
        &self.inverted
    }

    pub fn set_grading(&mut self, generator: &str, degree: Rational) -> Result<()> {
        let i = self
            .gens
            .index_of(generator)
            .ok_or_else(|| Error::InvalidAlgebra(format!("unknown generator {generator:?}")))?;
        self.grading[i] = Some(degree);
        Ok(())
    }

    pub fn grading(&self, generator: &str) -> Option<&Rational> {
        self.gens
            .index_of(generator)
            .and_then(|i| self.grading[i].as_ref())
    }

    /// `numerator / s^denom_power` in canonical form.
    pub fn element(&self, numerator: LaurentPoly, denom_power: u32) -> Result<AlgebraElement> {
        self.gens.ensure_same(numerator.vars())?;
        if !numerator.is_polynomial() {
            return Err(Error::NegativeExponent);
        }
        let mut e = AlgebraElement {
            numerator,
            denom_power,
        };
        self.canonicalize(&mut e)?;
        Ok(e)
    }

    pub fn from_poly(&self, p: LaurentPoly) -> Result<AlgebraElement> {
        self.element(p, 0)
    }

    pub fn generator(&self, i: usize) -> AlgebraElement {
        AlgebraElement {
            numerator: LaurentPoly::var(&self.gens, i),
            denom_power: 0,
        }
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement {
            numerator: LaurentPoly::one(&self.gens),
            denom_power: 0,
        }
    }

    /// `1 / s`.
    pub fn inverse_of_localized(&self) -> AlgebraElement {
        self.element(LaurentPoly::one(&self.gens), 1)
            .expect("1 is a polynomial")
    }

    fn canonicalize(&self, e: &mut AlgebraElement) -> Result<()> {
        if e.numerator.is_zero() {
            e.denom_power = 0;
            return Ok(());
        }
        while e.denom_power > 0 {
            match e.numerator.div_exact(&self.inverted)? {
                Some(q) => {
                    e.numerator = q;
                    e.denom_power -= 1;
                }
                None => break,
            }
        }
        Ok(())
    }

    fn check(&self, e: &AlgebraElement) -> Result<()> {
        self.gens.ensure_same(e.numerator.vars())
    }

    /// Numerator of `e` over the denominator `s^target`, `target ≥ e.denom_power`.
    fn lift(&self, e: &AlgebraElement, target: u32) -> Result<LaurentPoly> {
        e.numerator.mul(&self.inverted.pow(target - e.denom_power)?)
    }

    pub fn add(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(a)?;
        self.check(b)?;
        let k = a.denom_power.max(b.denom_power);
        let num = self.lift(a, k)?.add(&self.lift(b, k)?)?;
        self.element(num, k)
    }

    pub fn neg(&self, a: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            numerator: a.numerator.neg(),
            denom_power: a.denom_power,
        }
    }

    pub fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(a)?;
        self.check(b)?;
        let k = a
            .denom_power
            .checked_add(b.denom_power)
            .ok_or(Error::ExponentOverflow)?;
        self.element(a.numerator.mul(&b.numerator)?, k)
    }

    pub fn scale(&self, a: &AlgebraElement, c: &Scalar) -> Result<AlgebraElement> {
        self.element(a.numerator.scale(c), a.denom_power)
    }
}

/// A ring map from a localized algebra into a Laurent ring, given by the
/// image of each generator.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraHom {
    target: Vars,
    images: Vec<LaurentPoly>,
}

impl AlgebraHom {
    pub fn new(target: Vars, images: Vec<LaurentPoly>) -> Result<Self> {
        for img in &images {
            target.ensure_same(img.vars())?;
        }
        Ok(AlgebraHom { target, images })
    }

    /// Images keyed by generator name, ordered by `alg.gens()`.
    pub fn from_named(
        alg: &LocalizedAlgebra,
        target: Vars,
        mut named: HashMap<String, LaurentPoly>,
    ) -> Result<Self> {
        let mut images = Vec::with_capacity(alg.gens.len());
        for g in alg.gens.iter() {
            let img = named
                .remove(g)
                .ok_or_else(|| Error::InvalidHom(format!("no image for generator {g:?}")))?;
            images.push(img);
        }
        if let Some(extra) = named.keys().next() {
            return Err(Error::InvalidHom(format!("{extra:?} is not a generator")));
        }
        Self::new(target, images)
    }

    pub fn target(&self) -> &Vars {
        &self.target
    }

    pub fn images(&self) -> &[LaurentPoly] {
        &self.images
    }

    fn substitute(&self, alg: &LocalizedAlgebra, p: &LaurentPoly) -> Result<LaurentPoly> {
        if self.images.len() != alg.gens.len() {
            return Err(Error::InvalidHom(format!(
                "{} images for {} generators",
                self.images.len(),
                alg.gens.len()
            )));
        }
        p.compose(&self.images, &self.target)
    }

    /// Image of the localized element `s`.
    pub fn image_of_inverted(&self, alg: &LocalizedAlgebra) -> Result<LaurentPoly> {
        self.substitute(alg, &alg.inverted)
    }
}

/// True iff `h` extends to the localization: the image of `s` is a Laurent
/// unit (a single nonzero term).
pub fn hom_check(alg: &LocalizedAlgebra, h: &AlgebraHom) -> Result<bool> {
    Ok(h.image_of_inverted(alg)?.is_unit())
}

/// `h(numerator) · h(s)^{-denom_power}`.
pub fn apply_hom(alg: &LocalizedAlgebra, h: &AlgebraHom, e: &AlgebraElement) -> Result<LaurentPoly> {
    alg.check(e)?;
    let s_img = h.image_of_inverted(alg)?;
    if !s_img.is_unit() {
        return Err(Error::InvalidHom(format!(
            "image of the localized element, {s_img}, is not a unit"
        )));
    }
    let num = h.substitute(alg, &e.numerator)?;
    if e.denom_power == 0 {
        return Ok(num);
    }
    num.mul(&s_img.pow_signed(-i64::from(e.denom_power))?)
}

/// Checks `h(bs) = d · W` exactly.
pub fn closed_open_bs_check(
    alg: &LocalizedAlgebra,
    h: &AlgebraHom,
    bs: &AlgebraElement,
    d: u32,
    w: &LaurentPoly,
) -> Result<bool> {
    if d == 0 {
        return Err(Error::InvalidHom("d must be positive".into()));
    }
    h.target.ensure_same(w.vars())?;
    let image = apply_hom(alg, h, bs)?;
    Ok(image == w.scale(&Scalar::from(i64::from(d))))
}

/// `e^k` in canonical form.
pub fn power_in_algebra(alg: &LocalizedAlgebra, e: &AlgebraElement, k: u32) -> Result<AlgebraElement> {
    alg.check(e)?;
    let denom = e
        .denom_power
        .checked_mul(k)
        .ok_or(Error::ExponentOverflow)?;
    alg.element(e.numerator.pow(k)?, denom)
}
