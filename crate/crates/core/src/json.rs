//! JSON file formats.
//!
//! Polynomials serialize as
//! `{"vars":["x","y"],"terms":[{"coeff":"1","exp":[1,0]}, …]}` with terms in
//! lexicographic order of `exp`, so output is byte-stable. Coefficients are
//! strings: `"p/q"` or `"a/b+c/d*i"`.

use std::collections::{BTreeMap, HashMap};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{AlgebraHom, LocalizedAlgebra};
use crate::error::{Error, Result};
use crate::expr::{parse_poly, parse_scalar};
use crate::laurent::{Exponent, LaurentPoly, Vars};
use crate::scalar::{Rational, Scalar};
use crate::struct_const::PotentialFamily;
use crate::wallcross::{Binomial, SubstitutionMap, VariableImage};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exp: Vec<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl From<&LaurentPoly> for PolyJson {
    fn from(p: &LaurentPoly) -> Self {
        PolyJson {
            vars: p.vars().to_vec(),
            terms: p
                .sorted_terms()
                .into_iter()
                .map(|(e, c)| TermJson {
                    coeff: c.to_string(),
                    exp: e.as_slice().to_vec(),
                })
                .collect(),
        }
    }
}

impl PolyJson {
    pub fn to_poly(&self) -> Result<LaurentPoly> {
        let vars = Vars::new(self.vars.iter().cloned())?;
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((Exponent::new(t.exp.clone()), parse_scalar(&t.coeff)?)))
            .collect::<Result<Vec<_>>>()?;
        LaurentPoly::from_terms(&vars, terms)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        PolyJson::deserialize(deserializer)?
            .to_poly()
            .map_err(D::Error::custom)
    }
}

/// A polynomial given either as JSON terms or as an expression string.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum PolySource {
    Terms(PolyJson),
    Expr(String),
}

impl PolySource {
    /// Expression strings are parsed over `vars`; term lists must agree
    /// with `vars` when `vars` is given.
    pub fn resolve(&self, vars: Option<&Vars>) -> Result<LaurentPoly> {
        match self {
            PolySource::Terms(t) => {
                let p = t.to_poly()?;
                if let Some(v) = vars {
                    v.ensure_same(p.vars())?;
                }
                Ok(p)
            }
            PolySource::Expr(src) => {
                let vars = vars.ok_or_else(|| {
                    Error::InvalidFamily("expression strings need a \"vars\" list".into())
                })?;
                parse_poly(src, vars)
            }
        }
    }
}

/// `{"vars":[…], "label":"…", "W":…, "higher":[…]}`; `vars` and `label`
/// are optional.
#[derive(Clone, Debug, Deserialize)]
pub struct FamilyFile {
    #[serde(default)]
    pub vars: Option<Vec<String>>,
    #[serde(default)]
    pub label: Option<String>,
    #[serde(rename = "W")]
    pub w: PolySource,
    pub higher: Vec<PolySource>,
}

impl FamilyFile {
    pub fn to_family(&self) -> Result<PotentialFamily> {
        let vars = self
            .vars
            .as_ref()
            .map(|v| Vars::new(v.iter().cloned()))
            .transpose()?;
        let w = self.w.resolve(vars.as_ref())?;
        let vars = vars.unwrap_or_else(|| w.vars().clone());
        let higher = self
            .higher
            .iter()
            .map(|h| h.resolve(Some(&vars)))
            .collect::<Result<Vec<_>>>()?;
        let fam = PotentialFamily::new(w, higher)?;
        Ok(match &self.label {
            Some(l) => fam.with_label(l.clone()),
            None => fam,
        })
    }
}

/// `{"gens":["p","q"],"inverted":"1-p*q","grading":{"p":"0"}}`.
#[derive(Clone, Debug, Deserialize)]
pub struct AlgebraFile {
    pub gens: Vec<String>,
    #[serde(default = "one_string")]
    pub inverted: String,
    #[serde(default)]
    pub grading: BTreeMap<String, String>,
}

fn one_string() -> String {
    "1".to_string()
}

impl AlgebraFile {
    pub fn to_algebra(&self) -> Result<LocalizedAlgebra> {
        let gens = Vars::new(self.gens.iter().cloned())?;
        let inverted = parse_poly(&self.inverted, &gens)?;
        let mut alg = LocalizedAlgebra::new(gens, inverted)?;
        for (g, deg) in &self.grading {
            let q = parse_scalar(deg)?;
            let q: Rational = q
                .as_rational()
                .cloned()
                .ok_or_else(|| Error::InvalidAlgebra(format!("grading of {g} is not rational")))?;
            alg.set_grading(g, q)?;
        }
        Ok(alg)
    }
}

/// Either `{"vars":["u","v"],"images":{"p":"(u+1)*v","q":"v^-1"}}` or the
/// bare map `{"p":"(u+1)*v","q":"v^-1"}` with the target variables given
/// separately.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum HomFile {
    WithVars {
        vars: Vec<String>,
        images: HashMap<String, String>,
    },
    Bare(HashMap<String, String>),
}

impl HomFile {
    /// `target` supplies the variables for a bare map; when the file names
    /// its own variables, `target` must agree.
    pub fn to_hom(&self, alg: &LocalizedAlgebra, target: Option<&Vars>) -> Result<AlgebraHom> {
        let (vars, images) = match self {
            HomFile::WithVars { vars, images } => {
                let vars = Vars::new(vars.iter().cloned())?;
                if let Some(t) = target {
                    t.ensure_same(&vars)?;
                }
                (vars, images)
            }
            HomFile::Bare(images) => {
                let vars = target.cloned().ok_or_else(|| {
                    Error::InvalidHom("target variables are not given".into())
                })?;
                (vars, images)
            }
        };
        let named = images
            .iter()
            .map(|(g, src)| Ok((g.clone(), parse_poly(src, &vars)?)))
            .collect::<Result<HashMap<_, _>>>()?;
        AlgebraHom::from_named(alg, vars, named)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MonomialJson {
    pub coeff: String,
    pub exp: Vec<i64>,
}

/// One source variable of a substitution map:
/// `{"monomial":{"coeff":"1","exp":[0,-1]},"binomial_exp":[1,0],"power":-1}`
/// means `v ↦ v⁻¹·(1+u)⁻¹`. `binomial_coeff` defaults to `"1"`; without
/// `binomial_exp` the binomial is the constant 1.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VariableImageJson {
    pub monomial: MonomialJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub binomial_exp: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub binomial_coeff: Option<String>,
    #[serde(default)]
    pub power: i64,
}

impl VariableImageJson {
    pub fn to_image(&self) -> Result<VariableImage> {
        let binomial = match &self.binomial_exp {
            Some(e) => {
                let coeff = match &self.binomial_coeff {
                    Some(c) => parse_scalar(c)?,
                    None => Scalar::one(),
                };
                Some(Binomial::new(coeff, Exponent::new(e.clone())))
            }
            None => None,
        };
        Ok(VariableImage {
            coeff: parse_scalar(&self.monomial.coeff)?,
            monomial: Exponent::new(self.monomial.exp.clone()),
            binomial,
            power: self.power,
        })
    }
}

/// A φ file: an array with one entry per source variable, or
/// `{"vars":[…],"images":[…]}` naming the target chart.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum SubstitutionFile {
    WithVars {
        vars: Vec<String>,
        images: Vec<VariableImageJson>,
    },
    Bare(Vec<VariableImageJson>),
}

impl SubstitutionFile {
    pub fn target_vars(&self) -> Result<Option<Vars>> {
        match self {
            SubstitutionFile::WithVars { vars, .. } => Ok(Some(Vars::new(vars.iter().cloned())?)),
            SubstitutionFile::Bare(_) => Ok(None),
        }
    }

    pub fn to_map(&self, target: &Vars) -> Result<SubstitutionMap> {
        let entries = match self {
            SubstitutionFile::WithVars { images, .. } => images,
            SubstitutionFile::Bare(images) => images,
        };
        if let Some(own) = self.target_vars()? {
            target.ensure_same(&own)?;
        }
        let images = entries
            .iter()
            .map(VariableImageJson::to_image)
            .collect::<Result<Vec<_>>>()?;
        SubstitutionMap::new(target.clone(), images)
    }
}
