use num_bigint::BigInt;

use super::{ParseError, ParseErrorKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    /// `digits ("/" digits)? ("i")?`
    Number {
        num: BigInt,
        den: Option<BigInt>,
        imaginary: bool,
    },
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Eof,
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub offset: usize,
}

fn digits_end(bytes: &[u8], start: usize) -> usize {
    let mut i = start;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    i
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let end = digits_end(bytes, i);
                let num: BigInt = src[i..end].parse().expect("ascii digits");
                i = end;
                let mut den = None;
                if i + 1 < bytes.len() && bytes[i] == b'/' && bytes[i + 1].is_ascii_digit() {
                    let end = digits_end(bytes, i + 1);
                    let d: BigInt = src[i + 1..end].parse().expect("ascii digits");
                    if d == BigInt::from(0) {
                        return Err(ParseError::new(i + 1, ParseErrorKind::ZeroDenominator));
                    }
                    den = Some(d);
                    i = end;
                }
                let mut imaginary = false;
                if i < bytes.len()
                    && bytes[i] == b'i'
                    && !bytes
                        .get(i + 1)
                        .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
                {
                    imaginary = true;
                    i += 1;
                }
                out.push(Token {
                    tok: Tok::Number {
                        num,
                        den,
                        imaginary,
                    },
                    offset: start,
                });
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                let mut end = i + 1;
                while end < bytes.len() && (bytes[end].is_ascii_alphanumeric() || bytes[end] == b'_')
                {
                    end += 1;
                }
                out.push(Token {
                    tok: Tok::Ident(src[i..end].to_string()),
                    offset: start,
                });
                i = end;
                continue;
            }
            _ => {
                let ch = src[i..].chars().next().expect("in bounds");
                return Err(ParseError::new(i, ParseErrorKind::UnexpectedChar(ch)));
            }
        };
        out.push(Token { tok, offset: start });
        i += 1;
    }
    out.push(Token {
        tok: Tok::Eof,
        offset: src.len(),
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(src: &str) -> Vec<Tok> {
        tokenize(src).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn numbers() {
        assert_eq!(
            toks("1/2i"),
            vec![
                Tok::Number {
                    num: 1.into(),
                    den: Some(2.into()),
                    imaginary: true
                },
                Tok::Eof
            ]
        );
        // "/" followed by a letter is an operator
        assert_eq!(toks("1/x")[1], Tok::Slash);
        assert!(matches!(toks("2in")[1], Tok::Ident(_)));
    }

    #[test]
    fn errors() {
        let e = tokenize("x + 3/0").unwrap_err();
        assert_eq!(e.offset, 6);
        assert_eq!(e.kind, ParseErrorKind::ZeroDenominator);
        let e = tokenize("x $ y").unwrap_err();
        assert_eq!(e.offset, 2);
        let e = tokenize("é").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnexpectedChar('é'));
    }
}
