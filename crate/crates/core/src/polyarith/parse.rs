//! Text format for integer polynomials in `x`.
//!
//! ```text
//! poly := ['+'|'-'] term (('+'|'-') term)*
//! term := INT | INT ['*'] 'x' ['^' UINT] | 'x' ['^' UINT]
//! ```
//!
//! Whitespace is ignored; repeated powers are summed.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{IntPoly, PolyError};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    X,
    Plus,
    Minus,
    Star,
    Caret,
}

fn err(pos: usize, msg: impl Into<String>) -> PolyError {
    PolyError::Parse { pos, msg: msg.into() }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, PolyError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '0'..='9' => {
                let start = i;
                let mut digits = String::new();
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i].is_whitespace()) {
                    if chars[i].is_ascii_digit() {
                        digits.push(chars[i]);
                    }
                    i += 1;
                }
                let n: BigInt = digits.parse().map_err(|_| err(start, "bad integer"))?;
                toks.push((start, Tok::Int(n)));
            }
            'x' => {
                toks.push((i, Tok::X));
                i += 1;
            }
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '^' => {
                toks.push((i, Tok::Caret));
                i += 1;
            }
            c if c.is_alphabetic() => {
                return Err(err(i, format!("unknown variable '{c}', only 'x' is supported")));
            }
            c => return Err(err(i, format!("unexpected character '{c}'"))),
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn exponent(&mut self) -> Result<usize, PolyError> {
        if self.peek() != Some(&Tok::Caret) {
            return Ok(1);
        }
        self.bump();
        let at = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => usize::try_from(&n).map_err(|_| err(at, "exponent too large")),
            _ => Err(err(at, "expected an unsigned exponent after '^'")),
        }
    }

    /// Returns (coefficient, power).
    fn term(&mut self) -> Result<(BigInt, usize), PolyError> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Int(c)) => match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let xat = self.here();
                    if self.bump() != Some(Tok::X) {
                        return Err(err(xat, "expected 'x' after '*'"));
                    }
                    Ok((c, self.exponent()?))
                }
                Some(Tok::X) => {
                    self.bump();
                    Ok((c, self.exponent()?))
                }
                _ => Ok((c, 0)),
            },
            Some(Tok::X) => Ok((BigInt::from(1), self.exponent()?)),
            Some(_) => Err(err(at, "expected a term")),
            None => Err(err(at, "unexpected end of input")),
        }
    }

    fn poly(&mut self) -> Result<IntPoly, PolyError> {
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut negate = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let (c, e) = self.term()?;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigInt::zero());
            }
            if negate {
                coeffs[e] -= c;
            } else {
                coeffs[e] += c;
            }
            let at = self.here();
            match self.bump() {
                None => break,
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                Some(_) => return Err(err(at, "expected '+' or '-'")),
            }
        }
        Ok(IntPoly::new(coeffs))
    }
}

/// Parses the textual polynomial format into canonical dense form.
pub fn poly_parse(text: &str) -> Result<IntPoly, PolyError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end: text.chars().count() };
    p.poly()
}

impl FromStr for IntPoly {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        poly_parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(poly_parse("x^2+1").unwrap(), IntPoly::from_i64s(&[1, 0, 1]));
        assert_eq!(poly_parse("2*x - x + 3").unwrap(), IntPoly::from_i64s(&[3, 1]));
        assert!(poly_parse("0").unwrap().is_zero());
    }

    #[test]
    fn forms() {
        assert_eq!(poly_parse("-x^3 + 2x - 7").unwrap(), IntPoly::from_i64s(&[-7, 2, 0, -1]));
        assert_eq!(poly_parse("+ 3 x ^ 2").unwrap(), IntPoly::from_i64s(&[0, 0, 3]));
        assert_eq!(poly_parse("x^2 + x^2").unwrap(), IntPoly::from_i64s(&[0, 0, 2]));
        assert_eq!(poly_parse("x - x").unwrap(), IntPoly::zero());
        assert_eq!(poly_parse("x^0 + 1").unwrap(), IntPoly::from_i64s(&[2]));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            poly_parse("x^2 + y"),
            Err(PolyError::Parse { pos: 6, msg: "unknown variable 'y', only 'x' is supported".into() })
        );
        assert!(matches!(poly_parse("x^"), Err(PolyError::Parse { pos: 2, .. })));
        assert!(matches!(poly_parse("x +"), Err(PolyError::Parse { pos: 3, .. })));
        assert!(matches!(poly_parse("2 x x"), Err(PolyError::Parse { pos: 4, .. })));
        assert!(matches!(poly_parse(""), Err(PolyError::Parse { pos: 0, .. })));
        assert!(matches!(poly_parse("3 * 4"), Err(PolyError::Parse { pos: 4, .. })));
        assert!(matches!(poly_parse("x^-1"), Err(PolyError::Parse { .. })));
    }

    #[test]
    fn canonical_round_trip() {
        for s in ["x^2 - 3*x + 1", "-x", "7", "2*x^5 + x^2 - 1"] {
            let f = poly_parse(s).unwrap();
            assert_eq!(f.to_string(), s);
            assert_eq!(poly_parse(&f.to_string()).unwrap(), f);
        }
    }
}
