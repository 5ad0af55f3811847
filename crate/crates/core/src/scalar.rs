//! Exact coefficients: rationals and Gaussian rationals.
//!
//! A [`Scalar`] is always kept in canonical form. Rationals are reduced by
//! `num-rational`; a Gaussian rational with vanishing imaginary part is
//! demoted to [`Scalar::Rational`], so structural equality is value equality.
//!
//! Approximate complex numbers are not scalars. They only show up as
//! evaluation points (see [`crate::LaurentPoly::eval_approx`]).

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::expr;

pub type Rational = BigRational;
pub type GaussianRational = Complex<BigRational>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    /// Invariant: the imaginary part is nonzero.
    Gaussian(GaussianRational),
}

/// Coefficient tower of a scalar or polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tower {
    Rational,
    Gaussian,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `num/den`; `None` if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Option<Self> {
        (den != 0).then(|| Scalar::Rational(Rational::new(num.into(), den.into())))
    }

    pub fn imaginary_unit() -> Self {
        Scalar::Gaussian(Complex::new(Rational::zero(), Rational::one()))
    }

    pub fn gaussian(re: Rational, im: Rational) -> Self {
        Self::from_complex(Complex::new(re, im))
    }

    fn from_complex(z: GaussianRational) -> Self {
        if z.im.is_zero() {
            Scalar::Rational(z.re)
        } else {
            Scalar::Gaussian(z)
        }
    }

    fn to_complex(&self) -> GaussianRational {
        match self {
            Scalar::Rational(q) => Complex::new(q.clone(), Rational::zero()),
            Scalar::Gaussian(z) => z.clone(),
        }
    }

    pub fn tower(&self) -> Tower {
        match self {
            Scalar::Rational(_) => Tower::Rational,
            Scalar::Gaussian(_) => Tower::Gaussian,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_one())
    }

    pub fn re(&self) -> Rational {
        match self {
            Scalar::Rational(q) => q.clone(),
            Scalar::Gaussian(z) => z.re.clone(),
        }
    }

    pub fn im(&self) -> Rational {
        match self {
            Scalar::Rational(_) => Rational::zero(),
            Scalar::Gaussian(z) => z.im.clone(),
        }
    }

    /// The rational value, if this scalar is real.
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Gaussian(_) => None,
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Gaussian(z) => {
                let norm = &z.re * &z.re + &z.im * &z.im;
                Self::from_complex(Complex::new(&z.re / &norm, -(&z.im / &norm)))
            }
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    /// Integer power; negative exponents invert. `None` for `0^k` with `k < 0`.
    pub fn pow(&self, exp: i64) -> Option<Self> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Scalar::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Some(acc)
    }

    pub fn to_complex64(&self) -> Complex64 {
        let re = self.re().to_f64().unwrap_or(f64::NAN);
        let im = self.im().to_f64().unwrap_or(f64::NAN);
        Complex64::new(re, im)
    }

    /// True for a negative rational. Used by the renderer to emit `a - b`.
    pub(crate) fn is_negative_rational(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_negative())
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Self {
        Scalar::Rational(q)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a $op b),
                    _ => Scalar::from_complex(self.to_complex() $op rhs.to_complex()),
                }
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                &self $op &rhs
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            _ => *self = &*self + rhs,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Gaussian(z) => Scalar::Gaussian(-z),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Rationals print as `p` or `p/q`; Gaussian rationals as `a+b*i`, with the
/// real part omitted when zero.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Gaussian(z) => {
                if z.re.is_zero() {
                    write!(f, "{}*i", z.im)
                } else if z.im.is_negative() {
                    write!(f, "{}-{}*i", z.re, -&z.im)
                } else {
                    write!(f, "{}+{}*i", z.re, z.im)
                }
            }
        }
    }
}

/// Accepts any constant expression of the polynomial language, e.g. `-3/4`,
/// `1/2+3/4*i`, `2i`.
impl FromStr for Scalar {
    type Err = expr::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        expr::parse_scalar(s)
    }
}
