//! Words over `{x, y}`, run-length encoding, and noncommutative polynomials
//! over an exact coefficient field (`Q` or a prime field `F_p`).
//!
//! Polynomials are kept canonical at all times: no zero coefficients are
//! stored and terms are ordered graded-first (by word length), then
//! lexicographically with `x < y`. Equality is structural, which is what
//! lets polynomials serve as automaton states downstream.

mod coeff;
mod parse;
mod poly;
mod word;

pub use coeff::{Coeff, Field, FieldError};
pub use parse::{parse_poly, parse_word, ParseError};
pub use poly::NcPoly;
pub use word::{Generator, RleForm, Word};
