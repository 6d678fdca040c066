//! Text grammar for polynomials and words.
//!
//! ```text
//! poly   := ws sign? term (ws ('+'|'-') ws term)* ws
//! term   := coeff? ('*'? factor)*      (at least a coeff or a factor)
//! factor := ('x'|'y') ('^' uint)?
//! coeff  := uint | uint '/' uint       ('/' form legal only over Q)
//! ```
//!
//! Juxtaposition is allowed (`x^2yx^2`), `*` is optional, `-` always means
//! the additive inverse in the coefficient field, `1` is the empty word's
//! term and `0` the zero polynomial. Formatting produces canonical order;
//! `parse(format(p)) == p`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::{Coeff, Field, Generator, NcPoly, Word};
use crate::arith::Fp;

/// Word lengths explode exponentially through substitutions, so a single
/// parsed exponent is capped to keep pathological inputs from allocating
/// gigabytes.
pub const MAX_EXPONENT: u64 = 1 << 20;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Parser<'a> {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eof(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn uint(&mut self) -> Result<BigUint, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.error("expected a number");
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(BigUint::from_str(digits).unwrap())
    }

    fn exponent(&mut self) -> Result<u64, ParseError> {
        let at = self.pos;
        let n = self.uint()?;
        match n.to_u64() {
            Some(e) if e <= MAX_EXPONENT => Ok(e),
            _ => Err(ParseError {
                pos: at,
                message: format!("exponent exceeds the supported maximum {MAX_EXPONENT}"),
            }),
        }
    }

    fn coeff(&mut self, field: Field) -> Result<Coeff, ParseError> {
        let num = self.uint()?;
        if self.eat(b'/') {
            let den_pos = self.pos;
            let den = self.uint()?;
            match field {
                Field::Q => {
                    if den.is_zero() {
                        return Err(ParseError {
                            pos: den_pos,
                            message: "zero denominator".into(),
                        });
                    }
                    Ok(Coeff::Rat(BigRational::new(
                        BigInt::from(num),
                        BigInt::from(den),
                    )))
                }
                Field::Fp(_) => Err(ParseError {
                    pos: den_pos - 1,
                    message: format!("fractional coefficients are only legal over Q, not {field}"),
                }),
            }
        } else {
            Ok(match field {
                Field::Q => Coeff::Rat(BigRational::from(BigInt::from(num))),
                Field::Fp(p) => Coeff::Mod(Fp::new((num % p).to_u64().unwrap(), p)),
            })
        }
    }

    /// `factor := ('x'|'y') ('^' uint)?`, appended to `word`.
    fn factor(&mut self, word: &mut Word) -> Result<(), ParseError> {
        let g = match self.peek() {
            Some(b'x') => Generator::X,
            Some(b'y') => Generator::Y,
            _ => return self.error("expected generator 'x' or 'y'"),
        };
        self.pos += 1;
        let mut exp = 1u64;
        let before_ws = self.pos;
        self.skip_ws();
        if self.eat(b'^') {
            self.skip_ws();
            exp = self.exponent()?;
        } else {
            self.pos = before_ws;
        }
        word.push_run(g, exp);
        Ok(())
    }

    fn term(&mut self, field: Field) -> Result<NcPoly, ParseError> {
        let mut coeff = None;
        if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            coeff = Some(self.coeff(field)?);
        }
        let mut word = Word::empty();
        let mut saw_factor = false;
        loop {
            self.skip_ws();
            if self.eat(b'*') {
                self.skip_ws();
                self.factor(&mut word)?;
                saw_factor = true;
            } else if matches!(self.peek(), Some(b'x') | Some(b'y')) {
                self.factor(&mut word)?;
                saw_factor = true;
            } else {
                break;
            }
        }
        if coeff.is_none() && !saw_factor {
            return self.error("expected a term");
        }
        let c = coeff.unwrap_or_else(|| field.one());
        Ok(NcPoly::from_terms(field, [(word, c)]))
    }
}

/// Parse a polynomial in the grammar above; the result is canonical.
pub fn parse_poly(text: &str, field: Field) -> Result<NcPoly, ParseError> {
    let mut p = Parser::new(text);
    p.skip_ws();
    if p.eof() {
        return p.error("empty input");
    }
    let mut acc = NcPoly::zero(field);
    let mut negate = p.eat(b'-');
    if !negate {
        let _ = p.eat(b'+');
    }
    loop {
        p.skip_ws();
        let t = p.term(field)?;
        acc = if negate { &acc - &t } else { &acc + &t };
        p.skip_ws();
        if p.eof() {
            break;
        }
        negate = match p.peek() {
            Some(b'+') => false,
            Some(b'-') => true,
            _ => return p.error("expected '+' or '-'"),
        };
        p.pos += 1;
    }
    Ok(acc)
}

/// Parse a bare word (juxtaposed factors, e.g. `xyyx` or `x*y^2*x`).
pub fn parse_word(text: &str) -> Result<Word, ParseError> {
    let mut p = Parser::new(text);
    let mut word = Word::empty();
    loop {
        p.skip_ws();
        if p.eof() {
            return Ok(word);
        }
        let _ = p.eat(b'*');
        p.skip_ws();
        p.factor(&mut word)?;
    }
}
