//! Text wire format for polynomials and polynomial maps.
//!
//! ```text
//! poly     := ['-'] term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ['^' nat]
//! base     := rational | var | '(' poly ')'
//! rational := nat ['/' nat]
//! var      := 'x' | 'y' | 'z'
//! map      := '(' poly (';' poly)* ')'        -- 2 or 3 components
//! ```
//!
//! Whitespace between tokens is ignored. Multiplication must be written
//! explicitly. Printing is canonical: terms in descending graded reverse
//! lexicographic order, so `parse_poly(print_canonical(p)) == p`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::automap::PolyMap;
use crate::poly::{Monomial, Polynomial, Rational, Var};

/// A syntax error with the character offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at offset {position}: {message}")]
pub struct ParseDiagnostic {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TextError {
    #[error(transparent)]
    Parse(#[from] ParseDiagnostic),
    #[error("a map needs 2 or 3 components, found {0}")]
    Arity(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Nat(BigInt),
    Var(Var),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Semi,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Nat(n) => format!("number {n}"),
            Tok::Var(v) => format!("variable {v}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Slash => "'/'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Semi => "';'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseDiagnostic> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        let tok = match ch {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((start, Tok::Nat(digits.parse().expect("ascii digits"))));
                continue;
            }
            'x' => Tok::Var(Var::X),
            'y' => Tok::Var(Var::Y),
            'z' => Tok::Var(Var::Z),
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ';' => Tok::Semi,
            other => {
                return Err(ParseDiagnostic {
                    position: i,
                    message: format!("unexpected character {other:?}"),
                })
            }
        };
        out.push((i, tok));
        i += 1;
    }
    out.push((chars.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Self, ParseDiagnostic> {
        Ok(Parser { toks: lex(src)?, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseDiagnostic> {
        Err(ParseDiagnostic { position: self.offset(), message: message.into() })
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseDiagnostic> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected {}, found {}", want.describe(), self.peek().describe()))
        }
    }

    fn poly(&mut self) -> Result<Polynomial, ParseDiagnostic> {
        let negate = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc += self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc -= self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseDiagnostic> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseDiagnostic> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump() {
            Tok::Nat(n) => match n.to_u32() {
                Some(e) => Ok(base.pow(e)),
                None => Err(ParseDiagnostic { position: at, message: "exponent too large".into() }),
            },
            other => Err(ParseDiagnostic {
                position: at,
                message: format!("expected exponent, found {}", other.describe()),
            }),
        }
    }

    fn base(&mut self) -> Result<Polynomial, ParseDiagnostic> {
        match self.peek().clone() {
            Tok::Nat(n) => {
                self.bump();
                if *self.peek() != Tok::Slash {
                    return Ok(Polynomial::constant(Rational::from_integer(n)));
                }
                self.bump();
                let at = self.offset();
                match self.bump() {
                    Tok::Nat(d) if d.is_zero() => {
                        Err(ParseDiagnostic { position: at, message: "zero denominator".into() })
                    }
                    Tok::Nat(d) => Ok(Polynomial::constant(Rational::new(n, d))),
                    other => Err(ParseDiagnostic {
                        position: at,
                        message: format!("expected denominator, found {}", other.describe()),
                    }),
                }
            }
            Tok::Var(v) => {
                self.bump();
                Ok(Polynomial::var(v))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.poly()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            other => self.error(format!("expected a number, variable or '(', found {}", other.describe())),
        }
    }

    fn finish(&mut self) -> Result<(), ParseDiagnostic> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            self.error(format!("unexpected {}", self.peek().describe()))
        }
    }
}

/// Parses a polynomial in `x`, `y`, `z` with rational coefficients.
pub fn parse_poly(src: &str) -> Result<Polynomial, ParseDiagnostic> {
    let mut p = Parser::new(src)?;
    let poly = p.poly()?;
    p.finish()?;
    Ok(poly)
}

/// Parses `"(p1; p2)"` or `"(p1; p2; p3)"`.
pub fn parse_map(src: &str) -> Result<PolyMap, TextError> {
    let mut p = Parser::new(src)?;
    p.expect(Tok::LParen)?;
    let mut comps = vec![p.poly()?];
    while *p.peek() == Tok::Semi {
        p.bump();
        comps.push(p.poly()?);
    }
    p.expect(Tok::RParen)?;
    p.finish()?;
    match comps.len() {
        2 | 3 => Ok(PolyMap::from_components(comps)),
        n => Err(TextError::Arity(n)),
    }
}

/// Parses a rational literal such as `-3/4` or `5`.
pub fn parse_rational(src: &str) -> Result<Rational, ParseDiagnostic> {
    let p = parse_poly(src)?;
    p.constant_value().ok_or(ParseDiagnostic {
        position: 0,
        message: "expected a rational constant".into(),
    })
}

fn write_rational(out: &mut String, c: &Rational) {
    if c.is_integer() {
        write!(out, "{}", c.numer()).unwrap();
    } else {
        write!(out, "{}/{}", c.numer(), c.denom()).unwrap();
    }
}

fn write_monomial(out: &mut String, m: &Monomial) {
    let mut first = true;
    for v in Var::ALL {
        let e = m.exponent(v);
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push(v.name());
        if e > 1 {
            write!(out, "^{e}").unwrap();
        }
    }
}

/// Canonical text form of `p`.
pub fn print_canonical(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        if m.is_one() {
            write_rational(&mut out, &abs);
        } else {
            if !abs.is_one() {
                write_rational(&mut out, &abs);
                out.push('*');
            }
            write_monomial(&mut out, m);
        }
    }
    out
}

/// Canonical text form of a map: `"(p1; p2; p3)"`.
pub fn print_map(map: &PolyMap) -> String {
    let parts: Vec<String> = map.components().iter().map(print_canonical).collect();
    format!("({})", parts.join("; "))
}
