//! Textual polynomial grammar.
//!
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := primary ('^' sint)?
//! primary:= rational | 'sqrt' '(' uint ')' | variable | '(' expr ')'
//!
//! Rationals are `p` or `p/q`; exponents may be negative (Laurent monomials).
//! The printer in `mod.rs` emits exactly this grammar, in canonical term
//! order, so print -> parse is the identity.

use num::bigint::BigInt;
use num::rational::BigRational;

use crate::error::{Error, Result};
use crate::exactnum::{surd_normalize, Rational, Scalar};

use super::{MPoly, VarSet};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn next(&mut self) -> Result<Tok> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.src.len() {
            return Ok(Tok::End);
        }
        let c = self.src[self.pos];
        self.pos += 1;
        Ok(match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let start = self.pos - 1;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Tok::Int(s.parse().unwrap())
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos - 1;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Tok::Ident(std::str::from_utf8(&self.src[start..self.pos]).unwrap().into())
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character {:?} at byte {}",
                    other as char,
                    self.pos - 1
                )))
            }
        })
    }
}

struct Parser<'a> {
    lx: Lexer<'a>,
    cur: Tok,
    vars: &'a VarSet,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, vars: &'a VarSet) -> Result<Self> {
        let mut lx = Lexer::new(src);
        let cur = lx.next()?;
        Ok(Parser { lx, cur, vars })
    }

    fn bump(&mut self) -> Result<()> {
        self.cur = self.lx.next()?;
        Ok(())
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if self.cur == t {
            self.bump()
        } else {
            Err(Error::Parse(format!("expected {t:?}, found {:?}", self.cur)))
        }
    }

    fn parse_expr(&mut self) -> Result<MPoly> {
        let mut neg = false;
        loop {
            match self.cur {
                Tok::Plus => self.bump()?,
                Tok::Minus => {
                    neg = !neg;
                    self.bump()?
                }
                _ => break,
            }
        }
        let mut acc = self.parse_term()?;
        if neg {
            acc = -&acc;
        }
        loop {
            let negate = match self.cur {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump()?;
            let t = self.parse_term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<MPoly> {
        let mut acc = self.parse_factor()?;
        while self.cur == Tok::Star {
            self.bump()?;
            let f = self.parse_factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn parse_int_signed(&mut self) -> Result<BigInt> {
        let mut neg = false;
        while self.cur == Tok::Minus || self.cur == Tok::Plus {
            if self.cur == Tok::Minus {
                neg = !neg;
            }
            self.bump()?;
        }
        match std::mem::replace(&mut self.cur, Tok::End) {
            Tok::Int(n) => {
                self.bump()?;
                Ok(if neg { -n } else { n })
            }
            other => {
                self.cur = other;
                Err(Error::Parse(format!("expected integer, found {:?}", self.cur)))
            }
        }
    }

    fn parse_factor(&mut self) -> Result<MPoly> {
        let base = self.parse_primary()?;
        if self.cur == Tok::Caret {
            self.bump()?;
            let e = self.parse_int_signed()?;
            let e: i64 = i64::try_from(&e)
                .map_err(|_| Error::Parse("exponent out of range".into()))?;
            if e.unsigned_abs() > 1 << 20 {
                return Err(Error::Parse("exponent out of range".into()));
            }
            if e >= 0 {
                return Ok(base.pow(e as u32));
            }
            // negative exponent: only monomials are invertible
            let inv = base.monomial_inverse().ok_or_else(|| {
                Error::Parse("negative exponent on a non-monomial".into())
            })?;
            return Ok(inv.pow((-e) as u32));
        }
        Ok(base)
    }

    fn parse_primary(&mut self) -> Result<MPoly> {
        match std::mem::replace(&mut self.cur, Tok::End) {
            Tok::Int(n) => {
                self.bump()?;
                // optional /q
                if self.cur == Tok::Slash {
                    self.bump()?;
                    let d = self.parse_int_signed()?;
                    if d == BigInt::from(0) {
                        return Err(Error::Parse("zero denominator".into()));
                    }
                    return Ok(MPoly::constant(
                        self.vars,
                        Scalar::Rat(BigRational::new(n, d)),
                    ));
                }
                Ok(MPoly::constant(
                    self.vars,
                    Scalar::Rat(BigRational::from_integer(n)),
                ))
            }
            Tok::Ident(name) => {
                self.bump()?;
                if name == "sqrt" {
                    self.expect(Tok::LParen)?;
                    let d = self.parse_int_signed()?;
                    self.expect(Tok::RParen)?;
                    let d: i64 = i64::try_from(&d)
                        .map_err(|_| Error::RadicandTooLarge(d.to_string()))?;
                    let s = surd_normalize(Rational::from_integer(0.into()), Rational::from_integer(1.into()), d)?;
                    return Ok(MPoly::constant(self.vars, s));
                }
                match self.vars.index_of(&name) {
                    Some(i) => Ok(MPoly::var_idx(self.vars, i)),
                    None => Err(Error::Parse(format!(
                        "unknown variable {name:?}; declared variables are {}",
                        self.vars
                    ))),
                }
            }
            Tok::LParen => {
                self.bump()?;
                let e = self.parse_expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            other => {
                self.cur = other;
                Err(Error::Parse(format!("unexpected token {:?}", self.cur)))
            }
        }
    }
}

/// Parses a polynomial over the given variables.
pub fn parse_poly(src: &str, vars: &VarSet) -> Result<MPoly> {
    let mut p = Parser::new(src, vars)?;
    let e = p.parse_expr()?;
    if p.cur != Tok::End {
        return Err(Error::Parse(format!("trailing input at {:?}", p.cur)));
    }
    Ok(e)
}
