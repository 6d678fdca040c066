//! Coefficient fields: the rationals or a prime field with runtime modulus.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{is_prime_u64, Fp};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Field {
    /// The rational numbers.
    Q,
    /// The prime field with the given modulus.
    Fp(u64),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FieldError {
    NotPrime(u64),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(p) => write!(f, "{p} is not prime"),
        }
    }
}

impl std::error::Error for FieldError {}

impl Field {
    /// A validated prime field.
    pub fn fp(p: u64) -> Result<Field, FieldError> {
        if is_prime_u64(p) {
            Ok(Field::Fp(p))
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self, Field::Fp(_))
    }

    pub fn zero(&self) -> Coeff {
        match self {
            Field::Q => Coeff::Rat(BigRational::zero()),
            Field::Fp(p) => Coeff::Mod(Fp::zero(*p)),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            Field::Q => Coeff::Rat(BigRational::one()),
            Field::Fp(p) => Coeff::Mod(Fp::one(*p)),
        }
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match self {
            Field::Q => Coeff::Rat(BigRational::from(BigInt::from(n))),
            Field::Fp(p) => Coeff::Mod(Fp::from_i64(n, *p)),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "Q"),
            Field::Fp(p) => write!(f, "F_{p}"),
        }
    }
}

/// A scalar from one of the supported fields. Operations panic when the
/// operands come from different fields.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Coeff {
    Rat(BigRational),
    Mod(Fp),
}

impl Coeff {
    pub fn field(&self) -> Field {
        match self {
            Coeff::Rat(_) => Field::Q,
            Coeff::Mod(v) => Field::Fp(v.modulus()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_zero(),
            Coeff::Mod(v) => v.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_one(),
            Coeff::Mod(v) => v.is_one(),
        }
    }

    pub fn add(&self, rhs: &Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a + b),
            (Coeff::Mod(a), Coeff::Mod(b)) => Coeff::Mod(*a + *b),
            _ => panic!("coefficient field mismatch"),
        }
    }

    pub fn sub(&self, rhs: &Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a - b),
            (Coeff::Mod(a), Coeff::Mod(b)) => Coeff::Mod(*a - *b),
            _ => panic!("coefficient field mismatch"),
        }
    }

    pub fn mul(&self, rhs: &Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a * b),
            (Coeff::Mod(a), Coeff::Mod(b)) => Coeff::Mod(*a * *b),
            _ => panic!("coefficient field mismatch"),
        }
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Rat(a) => Coeff::Rat(-a),
            Coeff::Mod(a) => Coeff::Mod(-*a),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Coeff> {
        match self {
            Coeff::Rat(a) => (!a.is_zero()).then(|| Coeff::Rat(a.recip())),
            Coeff::Mod(a) => a.inv().map(Coeff::Mod),
        }
    }

    /// Exact rational view; `None` for prime-field scalars.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Coeff::Rat(r) => Some(r),
            Coeff::Mod(_) => None,
        }
    }

    /// True for rationals strictly below zero (prime-field residues are
    /// printed as least nonnegative residues, so they are never negative).
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_negative(),
            Coeff::Mod(_) => false,
        }
    }

    pub fn abs(&self) -> Coeff {
        match self {
            Coeff::Rat(r) => Coeff::Rat(r.abs()),
            Coeff::Mod(v) => Coeff::Mod(*v),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rat(r) => write!(f, "{r}"),
            Coeff::Mod(v) => write!(f, "{v}"),
        }
    }
}
