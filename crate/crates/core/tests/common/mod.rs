#![allow(dead_code)]

use std::collections::BTreeMap;

use lgpot::laurent::{Exponent, LaurentPoly, TwistData, UnimodularMatrix, Vars};
use lgpot::scalar::{Rational, Scalar};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn vars(names: &[&str]) -> Vars {
    Vars::new(names.iter().copied()).unwrap()
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    q(rng.random_range(-6..=6), rng.random_range(1..=4))
}

pub fn random_nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let r = random_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Rational most of the time, Gaussian with probability `p_gauss`.
pub fn random_scalar<R: Rng>(rng: &mut R, p_gauss: f64) -> Scalar {
    let re = random_rational(rng);
    if rng.random_bool(p_gauss) {
        Scalar::gaussian(re, random_rational(rng))
    } else {
        Scalar::Rational(re)
    }
}

pub fn random_nonzero_scalar<R: Rng>(rng: &mut R, p_gauss: f64) -> Scalar {
    loop {
        let s = random_scalar(rng, p_gauss);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn random_exponent<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Exponent {
    Exponent::new((0..n).map(|_| rng.random_range(-bound..=bound)).collect())
}

pub fn random_poly<R: Rng>(rng: &mut R, v: &Vars, max_terms: usize, bound: i64, p_gauss: f64) -> LaurentPoly {
    let count = rng.random_range(0..=max_terms);
    let terms: Vec<_> = (0..count)
        .map(|_| (random_exponent(rng, v.len(), bound), random_nonzero_scalar(rng, p_gauss)))
        .collect();
    LaurentPoly::from_terms(v, terms).unwrap()
}

/// Nonzero polynomial with nonnegative exponents.
pub fn random_polynomial<R: Rng>(rng: &mut R, v: &Vars, max_terms: usize, max_deg: i64) -> LaurentPoly {
    loop {
        let count = rng.random_range(1..=max_terms);
        let terms: Vec<_> = (0..count)
            .map(|_| {
                let e = Exponent::new((0..v.len()).map(|_| rng.random_range(0..=max_deg)).collect());
                (e, Scalar::Rational(random_nonzero_rational(rng)))
            })
            .collect();
        let p = LaurentPoly::from_terms(v, terms).unwrap();
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_twist<R: Rng>(rng: &mut R, n: usize, p_gauss: f64) -> TwistData {
    TwistData::new((0..n).map(|_| random_nonzero_scalar(rng, p_gauss)).collect()).unwrap()
}

/// Product of random elementary moves, signs and swaps.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, moves: usize) -> UnimodularMatrix {
    let mut m: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    for _ in 0..moves {
        if n == 1 {
            if rng.random_bool(0.5) {
                m[0][0] = -m[0][0];
            }
            continue;
        }
        let i = rng.random_range(0..n);
        let mut j = rng.random_range(0..n);
        while j == i {
            j = rng.random_range(0..n);
        }
        match rng.random_range(0..4) {
            0 => m.swap(i, j),
            1 => m[i].iter_mut().for_each(|x| *x = -*x),
            _ => {
                let k = if rng.random_bool(0.5) { 1 } else { -1 };
                let rj = m[j].clone();
                for (a, b) in m[i].iter_mut().zip(rj) {
                    *a += k * b;
                }
            }
        }
    }
    UnimodularMatrix::new(m).unwrap()
}

/// Random twist with at least one entry ≠ 1.
pub fn random_nontrivial_twist<R: Rng>(rng: &mut R, n: usize, p_gauss: f64) -> TwistData {
    loop {
        let t = random_twist(rng, n, p_gauss);
        if !t.is_trivial() {
            return t;
        }
    }
}

/// Audit: no stored zeros, every Gaussian has a nonzero imaginary part,
/// every exponent has the right length.
pub fn is_canonical(p: &LaurentPoly) -> bool {
    p.terms().all(|(e, c)| {
        let scalar_ok = match c {
            Scalar::Rational(r) => !r.is_zero(),
            Scalar::Gaussian(z) => !z.im.is_zero(),
        };
        scalar_ok && e.len() == p.nvars()
    })
}

// ---------------------------------------------------------------------
// Naive oracle: Gaussian rationals as (re, im) pairs, polynomials as
// BTreeMaps, products by double loop.
// ---------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct G(pub Rational, pub Rational);

impl G {
    pub fn zero() -> G {
        G(Rational::zero(), Rational::zero())
    }

    pub fn one() -> G {
        G(Rational::one(), Rational::zero())
    }

    pub fn of(s: &Scalar) -> G {
        G(s.re(), s.im())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero() && self.1.is_zero()
    }

    pub fn add(&self, o: &G) -> G {
        G(&self.0 + &o.0, &self.1 + &o.1)
    }

    pub fn mul(&self, o: &G) -> G {
        G(&self.0 * &o.0 - &self.1 * &o.1, &self.0 * &o.1 + &self.1 * &o.0)
    }

    pub fn inv(&self) -> G {
        let n = &self.0 * &self.0 + &self.1 * &self.1;
        G(&self.0 / &n, -&self.1 / &n)
    }

    /// Repeated multiplication, inverting first for negative `k`.
    pub fn powi(&self, k: i64) -> G {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut out = G::one();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    pub fn matches(&self, s: &Scalar) -> bool {
        self.0 == s.re() && self.1 == s.im()
    }
}

pub type NaivePoly = BTreeMap<Vec<i64>, G>;

pub fn naive(p: &LaurentPoly) -> NaivePoly {
    p.terms()
        .map(|(e, c)| (e.as_slice().to_vec(), G::of(c)))
        .collect()
}

fn push(out: &mut NaivePoly, e: Vec<i64>, c: G) {
    let entry = out.entry(e.clone()).or_insert_with(G::zero);
    *entry = entry.add(&c);
    if entry.is_zero() {
        out.remove(&e);
    }
}

pub fn naive_add(a: &NaivePoly, b: &NaivePoly) -> NaivePoly {
    let mut out = a.clone();
    for (e, c) in b {
        push(&mut out, e.clone(), c.clone());
    }
    out
}

pub fn naive_mul(a: &NaivePoly, b: &NaivePoly) -> NaivePoly {
    let mut out = NaivePoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            push(&mut out, e, ca.mul(cb));
        }
    }
    out
}

pub fn naive_eval(a: &NaivePoly, rho: &[Scalar]) -> G {
    let rho: Vec<G> = rho.iter().map(G::of).collect();
    let mut total = G::zero();
    for (e, c) in a {
        let mut term = c.clone();
        for (x, &k) in rho.iter().zip(e) {
            term = term.mul(&x.powi(k));
        }
        total = total.add(&term);
    }
    total
}

/// Substitutes `x_i ↦ Π_j x_j^{a_ij}` term by term, building each image
/// monomial by repeated multiplication.
pub fn naive_change_basis(a: &NaivePoly, m: &UnimodularMatrix) -> NaivePoly {
    let n = m.dim();
    let image_of_var = |i: usize, sign: i64| -> NaivePoly {
        let e: Vec<i64> = (0..n).map(|j| sign * m.get(i, j)).collect();
        NaivePoly::from([(e, G::one())])
    };
    let mut out = NaivePoly::new();
    for (e, c) in a {
        let mut term = NaivePoly::from([(vec![0; n], c.clone())]);
        for (i, &k) in e.iter().enumerate() {
            let factor = image_of_var(i, k.signum());
            for _ in 0..k.unsigned_abs() {
                term = naive_mul(&term, &factor);
            }
        }
        out = naive_add(&out, &term);
    }
    out
}

// ---------------------------------------------------------------------
// proptest strategies
// ---------------------------------------------------------------------

pub fn arb_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

pub fn arb_scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        4 => arb_rational().prop_map(Scalar::Rational),
        1 => (arb_rational(), arb_rational()).prop_map(|(re, im)| Scalar::gaussian(re, im)),
    ]
}

pub fn arb_nonzero_scalar() -> impl Strategy<Value = Scalar> {
    arb_scalar().prop_filter("nonzero", |s| !s.is_zero())
}

pub fn arb_poly(v: Vars, max_terms: usize, bound: i64) -> impl Strategy<Value = LaurentPoly> {
    let n = v.len();
    prop::collection::vec(
        (prop::collection::vec(-bound..=bound, n), arb_scalar()),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        LaurentPoly::from_terms(&v, terms.into_iter().map(|(e, c)| (Exponent::new(e), c))).unwrap()
    })
}

pub fn arb_twist(n: usize) -> impl Strategy<Value = TwistData> {
    prop::collection::vec(arb_nonzero_scalar(), n).prop_map(|t| TwistData::new(t).unwrap())
}

pub fn arb_unimodular(n: usize) -> impl Strategy<Value = UnimodularMatrix> {
    any::<u64>().prop_map(move |seed| random_unimodular(&mut rng(seed), n, 6))
}
