//! Recursive descent parser for the polynomial expression language.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := "-" unary | power
//! power  := atom ("^" int)?
//! atom   := literal | ident | "(" expr ")"
//! int    := "-"? digits
//! ```
//!
//! `^` binds tighter than unary minus, which binds tighter than `*`. A chain
//! `a^b^c` is rejected. The right operand of `/` must lower to a Laurent
//! unit; that is checked during lowering.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::lexer::{tokenize, Tok, Token};
use super::{Expr, ParseError, ParseErrorKind};
use crate::laurent::Vars;
use crate::scalar::Scalar;

const MAX_DEPTH: usize = 128;

pub(crate) struct Parser<'a> {
    tokens: Vec<Token>,
    cursor: usize,
    vars: &'a Vars,
    depth: usize,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(src: &str, vars: &'a Vars) -> Result<Self, ParseError> {
        Ok(Parser {
            tokens: tokenize(src)?,
            cursor: 0,
            vars,
            depth: 0,
        })
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.cursor]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.cursor].clone();
        if t.tok != Tok::Eof {
            self.cursor += 1;
        }
        t
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        let t = self.peek();
        let kind = match &t.tok {
            Tok::Eof => ParseErrorKind::UnexpectedEnd { expected },
            other => ParseErrorKind::UnexpectedToken {
                found: describe(other),
                expected,
            },
        };
        ParseError::new(t.offset, kind)
    }

    pub(crate) fn parse_all(mut self) -> Result<Expr, ParseError> {
        let e = self.expr()?;
        if self.peek().tok != Tok::Eof {
            return Err(self.unexpected("operator or end of input"));
        }
        Ok(e)
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParseError::new(
                self.peek().offset,
                ParseErrorKind::NestingTooDeep,
            ));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        self.enter()?;
        let mut operands = vec![self.term()?];
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    operands.push(self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    operands.push(Expr::Neg(Box::new(self.term()?)));
                }
                _ => break,
            }
        }
        self.depth -= 1;
        Ok(collapse(operands, Expr::Sum))
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut factors = vec![self.unary()?];
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.bump();
                    factors.push(self.unary()?);
                }
                Tok::Slash => {
                    self.bump();
                    factors.push(Expr::Recip(Box::new(self.unary()?)));
                }
                _ => break,
            }
        }
        Ok(collapse(factors, Expr::Product))
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek().tok == Tok::Minus {
            self.enter()?;
            self.bump();
            let inner = self.unary()?;
            self.depth -= 1;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let k = self.int()?;
        if self.peek().tok == Tok::Caret {
            return Err(ParseError::new(
                self.peek().offset,
                ParseErrorKind::ChainedExponent,
            ));
        }
        Ok(Expr::Pow(Box::new(base), k))
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let negative = if self.peek().tok == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let t = self.peek().clone();
        match &t.tok {
            Tok::Number {
                num,
                den: None,
                imaginary: false,
            } => {
                self.bump();
                let n = if negative { -num } else { num.clone() };
                n.to_i64()
                    .ok_or_else(|| ParseError::new(t.offset, ParseErrorKind::ExponentOverflow))
            }
            Tok::Number { .. } | Tok::Ident(_) | Tok::LParen => Err(ParseError::new(
                t.offset,
                ParseErrorKind::NonIntegerExponent,
            )),
            _ => Err(self.unexpected("integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Number {
                num,
                den,
                imaginary,
            } => {
                self.bump();
                let q = BigRational::new(num, den.unwrap_or_else(|| BigInt::from(1)));
                let value = if imaginary {
                    Scalar::gaussian(BigRational::zero(), q)
                } else {
                    Scalar::Rational(q)
                };
                Ok(Expr::Literal(value))
            }
            Tok::Ident(name) => {
                self.bump();
                match self.vars.index_of(&name) {
                    Some(i) => Ok(Expr::Var(i)),
                    None if name == "i" => Ok(Expr::Literal(Scalar::imaginary_unit())),
                    None => Err(ParseError::new(
                        t.offset,
                        ParseErrorKind::UnknownVariable(name),
                    )),
                }
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if self.peek().tok != Tok::RParen {
                    return Err(self.unexpected("')'"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("number, variable or '('")),
        }
    }
}

fn collapse(mut items: Vec<Expr>, wrap: fn(Vec<Expr>) -> Expr) -> Expr {
    if items.len() == 1 {
        items.pop().expect("one item")
    } else {
        wrap(items)
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Number { .. } => "number".into(),
        Tok::Ident(name) => format!("identifier {name:?}"),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::Eof => "end of input".into(),
    }
}
