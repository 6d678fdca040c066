//! Exact scalar arithmetic and exact linear algebra.
//!
//! Integers and rationals are arbitrary precision (`num-bigint` /
//! `num-rational`); prime fields carry a runtime modulus. On top of the
//! scalars sit dense rational matrices with an exact characteristic
//! polynomial, bit-packed GF(2) matrices tuned for nilpotency searches at
//! dimension `2^10` and beyond, and univariate polynomials over `Q`.

mod bitmatrix;
mod charpoly;
mod fp;
mod matrix;
mod unipoly;

pub use bitmatrix::BitMatrix;
pub use charpoly::charpoly_exact;
pub use fp::{is_prime_u64, Fp};
pub use matrix::ExactMatrix;
pub use unipoly::{chebyshev_t, UniPoly};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Shorthand for an exact rational from an integer pair.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an exact rational from an integer.
pub fn rat_int(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}
