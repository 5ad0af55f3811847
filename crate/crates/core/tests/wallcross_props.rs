mod common;

use common::*;
use lgpot::expr::parse_poly;
use lgpot::laurent::{Exponent, LaurentPoly, Vars};
use lgpot::wallcross::{
    rf_equals, substitute, wall_crossing_check, Binomial, RationalFunction, SubstitutionMap,
    VariableImage,
};
use lgpot::Error;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn uv() -> Vars {
    vars(&["u", "v"])
}

fn random_phi(r: &mut ChaCha8Rng, target: &Vars, arity: usize) -> SubstitutionMap {
    let images = (0..arity)
        .map(|_| {
            let binomial = r.random_bool(0.7).then(|| {
                let exp = loop {
                    let e = random_exponent(r, target.len(), 1);
                    if !e.is_zero() {
                        break e;
                    }
                };
                Binomial::new(random_nonzero_scalar(r, 0.1), exp)
            });
            VariableImage {
                coeff: random_nonzero_scalar(r, 0.1),
                monomial: random_exponent(r, target.len(), 1),
                binomial,
                power: r.random_range(-2..=2),
            }
        })
        .collect();
    SubstitutionMap::new(target.clone(), images).unwrap()
}

/// The Clifford to Chekanov correspondence `u ↦ u`, `v ↦ (1+u)⁻¹v⁻¹`.
fn clifford_chekanov() -> SubstitutionMap {
    SubstitutionMap::new(
        uv(),
        vec![
            VariableImage::monomial(lgpot::Scalar::one(), Exponent::new(vec![1, 0])),
            VariableImage {
                coeff: lgpot::Scalar::one(),
                monomial: Exponent::new(vec![0, -1]),
                binomial: Some(Binomial::unit_coeff(Exponent::new(vec![1, 0]))),
                power: -1,
            },
        ],
    )
    .unwrap()
}

#[test]
fn substitute_respects_the_ring_structure() {
    let mut r = rng(41);
    let s = vars(&["x", "y"]);
    for _ in 0..120 {
        let phi = random_phi(&mut r, &uv(), 2);
        let f = random_poly(&mut r, &s, 3, 2, 0.1);
        let g = random_poly(&mut r, &s, 3, 2, 0.1);
        let sf = substitute(&f, &phi).unwrap();
        let sg = substitute(&g, &phi).unwrap();
        assert!(rf_equals(&substitute(&f.mul(&g).unwrap(), &phi).unwrap(), &sf.mul(&sg).unwrap()).unwrap());
        assert!(rf_equals(&substitute(&f.add(&g).unwrap(), &phi).unwrap(), &sf.add(&sg).unwrap()).unwrap());
    }
}

#[test]
fn substitution_commutes_with_evaluation() {
    let mut r = rng(42);
    let s = vars(&["x", "y"]);
    let mut checked = 0;
    while checked < 150 {
        let phi = random_phi(&mut r, &uv(), 2);
        let f = random_poly(&mut r, &s, 4, 2, 0.1);
        let rho = random_twist(&mut r, 2, 0.2);
        let Ok(image) = phi.apply_to_point(&rho) else {
            continue;
        };
        let sf = substitute(&f, &phi).unwrap();
        assert_eq!(sf.eval(&rho).unwrap(), f.eval(&image).unwrap());
        checked += 1;
    }
}

#[test]
fn monomial_maps_agree_with_change_basis() {
    let mut r = rng(43);
    let v = uv();
    for _ in 0..100 {
        let m = random_unimodular(&mut r, 2, 5);
        let phi = SubstitutionMap::from_matrix(&v, &m).unwrap();
        let f = random_poly(&mut r, &v, 4, 3, 0.1);
        let sf = substitute(&f, &phi).unwrap();
        assert!(sf.den().is_one());
        assert_eq!(sf.num(), &f.change_basis(&m).unwrap());
    }
}

#[test]
fn rf_equals_is_an_equivalence() {
    let mut r = rng(44);
    let v = uv();
    let nonzero = |r: &mut ChaCha8Rng| loop {
        let p = random_poly(r, &v, 2, 1, 0.1);
        if !p.is_zero() {
            break p;
        }
    };
    for _ in 0..100 {
        let a = RationalFunction::new(random_poly(&mut r, &v, 3, 2, 0.1), nonzero(&mut r)).unwrap();
        // b and c represent a with the fraction scaled by random factors
        let k1 = nonzero(&mut r);
        let k2 = nonzero(&mut r);
        let b = RationalFunction::new(a.num().mul(&k1).unwrap(), a.den().mul(&k1).unwrap()).unwrap();
        let c = RationalFunction::new(b.num().mul(&k2).unwrap(), b.den().mul(&k2).unwrap()).unwrap();
        assert!(rf_equals(&a, &a).unwrap());
        assert!(rf_equals(&a, &b).unwrap() && rf_equals(&b, &a).unwrap());
        assert!(rf_equals(&b, &c).unwrap() && rf_equals(&a, &c).unwrap());
        let d = RationalFunction::new(nonzero(&mut r), nonzero(&mut r)).unwrap();
        assert_eq!(rf_equals(&a, &d).unwrap(), rf_equals(&d, &a).unwrap());
    }
}

#[test]
fn clifford_chekanov_wall_crossing() {
    let v = uv();
    let w0 = parse_poly("(u+1)*v", &v).unwrap();
    let w1 = parse_poly("v^-1", &v).unwrap();
    let phi = clifford_chekanov();
    assert!(wall_crossing_check(&w0, &w1, &phi).unwrap());
    assert!(!wall_crossing_check(&w0, &w1, &SubstitutionMap::identity(&v)).unwrap());
    assert!(wall_crossing_check(&w0, &w0, &SubstitutionMap::identity(&v)).unwrap());

    let image = substitute(&w1, &phi).unwrap();
    assert_eq!(image.as_laurent().unwrap(), w0);

    let mut r = rng(45);
    let mut checked = 0;
    while checked < 100 {
        let rho = random_twist(&mut r, 2, 0.3);
        let Ok(rho1) = phi.apply_to_point(&rho) else {
            continue;
        };
        assert_eq!(w0.eval(&rho).unwrap(), w1.eval(&rho1).unwrap());
        checked += 1;
    }
}

#[test]
fn expansion_example() {
    let x = vars(&["x", "y"]);
    let phi = SubstitutionMap::new(
        x.clone(),
        vec![
            VariableImage {
                coeff: lgpot::Scalar::one(),
                monomial: Exponent::new(vec![1, 0]),
                binomial: Some(Binomial::unit_coeff(Exponent::new(vec![0, 1]))),
                power: 1,
            },
            VariableImage::monomial(lgpot::Scalar::one(), Exponent::new(vec![0, 1])),
        ],
    )
    .unwrap();
    let f = parse_poly("x + 1", &x).unwrap();
    let image = substitute(&f, &phi).unwrap();
    assert_eq!(image.as_laurent().unwrap(), parse_poly("x + x*y + 1", &x).unwrap());
}

#[test]
fn binomial_zeros_are_outside_the_domain() {
    let phi = clifford_chekanov();
    let rho = lgpot::TwistData::from_ints(&[-1, 3]).unwrap();
    assert_eq!(phi.apply_to_point(&rho), Err(Error::OutsideDomain { index: 1 }));
}

#[test]
fn vanishing_binomial_is_rejected() {
    let image = VariableImage {
        coeff: lgpot::Scalar::one(),
        monomial: Exponent::new(vec![0, 0]),
        binomial: Some(Binomial::new(lgpot::Scalar::from_int(-1), Exponent::new(vec![0, 0]))),
        power: 1,
    };
    let err = SubstitutionMap::new(uv(), vec![image]).unwrap_err();
    assert!(matches!(err, Error::InvalidSubstitution(_)));
}

#[test]
fn arity_mismatch() {
    let phi = clifford_chekanov();
    let f = LaurentPoly::var(&vars(&["a", "b", "c"]), 0);
    assert!(matches!(substitute(&f, &phi), Err(Error::DimensionMismatch { .. })));
}
