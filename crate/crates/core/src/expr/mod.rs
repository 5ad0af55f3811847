//! Surface syntax for Laurent polynomials: parsing, lowering and rendering.

mod lexer;
mod parser;
mod render;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Vars};
use crate::scalar::Scalar;

pub use render::render;

/// Expression tree over a declared variable list. Variables are stored as
/// indices into that list; parentheses leave no node behind.
///
/// Sums and products are n-ary, so tree depth only grows with nesting.
/// `a - b` is `Sum([a, Neg(b)])` and `a / b` is `Product([a, Recip(b)])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Literal(Scalar),
    Var(usize),
    Neg(Box<Expr>),
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    /// Inverse of a Laurent unit.
    Recip(Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub(crate) fn new(offset: usize, kind: ParseErrorKind) -> Self {
        ParseError { offset, kind }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unexpected {found}, expected {expected}")]
    UnexpectedToken {
        found: String,
        expected: &'static str,
    },
    #[error("unexpected end of input, expected {expected}")]
    UnexpectedEnd { expected: &'static str },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("zero denominator in literal")]
    ZeroDenominator,
    #[error("exponent must be an integer literal")]
    NonIntegerExponent,
    #[error("exponent does not fit in 64 bits")]
    ExponentOverflow,
    #[error("'^' is not associative; use parentheses")]
    ChainedExponent,
    #[error("expression nested too deeply")]
    NestingTooDeep,
    #[error("not a constant: {0}")]
    NotConstant(String),
}

pub fn parse_expression(src: &str, vars: &Vars) -> Result<Expr, ParseError> {
    parser::Parser::new(src, vars)?.parse_all()
}

/// Evaluates an expression tree into its canonical Laurent polynomial.
pub fn lower(e: &Expr, vars: &Vars) -> Result<LaurentPoly> {
    Ok(match e {
        Expr::Literal(c) => LaurentPoly::constant(vars, c.clone()),
        Expr::Var(i) => {
            if *i >= vars.len() {
                return Err(Error::DimensionMismatch {
                    expected: vars.len(),
                    found: i + 1,
                });
            }
            LaurentPoly::var(vars, *i)
        }
        Expr::Neg(a) => lower(a, vars)?.neg(),
        Expr::Sum(items) => items.iter().try_fold(LaurentPoly::zero(vars), |acc, e| {
            acc.add(&lower(e, vars)?)
        })?,
        Expr::Product(items) => items.iter().try_fold(LaurentPoly::one(vars), |acc, e| {
            acc.mul(&lower(e, vars)?)
        })?,
        Expr::Recip(a) => lower(a, vars)?.unit_inverse()?,
        Expr::Pow(a, k) => lower(a, vars)?.pow_signed(*k)?,
    })
}

/// `lower(parse_expression(src))`.
pub fn parse_poly(src: &str, vars: &Vars) -> Result<LaurentPoly> {
    lower(&parse_expression(src, vars)?, vars)
}

/// Parses a constant expression such as `-3/4` or `1/2+3/4*i`.
pub fn parse_scalar(src: &str) -> Result<Scalar, ParseError> {
    let vars = Vars::new(Vec::<String>::new()).expect("empty list");
    let e = parse_expression(src, &vars)?;
    let p = lower(&e, &vars)
        .map_err(|err| ParseError::new(0, ParseErrorKind::NotConstant(err.to_string())))?;
    Ok(p.constant_term())
}
