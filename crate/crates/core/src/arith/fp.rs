//! Prime-field scalars with a runtime modulus.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Deterministic Miller-Rabin primality test, valid for all `u64` inputs.
///
/// The witness set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} is known to
/// be sufficient below 3.3 * 10^24, which covers the whole `u64` range.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Modular inverse in `Z/m` for `gcd(a, m) = 1`, via extended Euclid.
pub(crate) fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

/// An element of the prime field `F_p`: a residue in `[0, p)` together with
/// its modulus. Mixing moduli is a programming error and panics.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    modulus: u64,
    value: u64,
}

impl Fp {
    /// Reduce `value` into `F_p`. The modulus must be prime; this is checked
    /// in debug builds only, so construct fields through
    /// [`crate::freealg::Field::fp`] (or check with [`is_prime_u64`]) first.
    pub fn new(value: u64, modulus: u64) -> Fp {
        debug_assert!(is_prime_u64(modulus), "modulus {modulus} is not prime");
        Fp {
            modulus,
            value: value % modulus,
        }
    }

    pub fn from_i64(value: i64, modulus: u64) -> Fp {
        let m = modulus as i128;
        Fp::new((value as i128).rem_euclid(m) as u64, modulus)
    }

    pub fn zero(modulus: u64) -> Fp {
        Fp::new(0, modulus)
    }

    pub fn one(modulus: u64) -> Fp {
        Fp::new(1, modulus)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Least nonnegative residue.
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1 % self.modulus
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Fp> {
        inv_mod(self.value, self.modulus).map(|v| Fp {
            modulus: self.modulus,
            value: v,
        })
    }

    pub fn pow(&self, exp: u64) -> Fp {
        Fp {
            modulus: self.modulus,
            value: pow_mod(self.value, exp, self.modulus),
        }
    }

    fn check(&self, rhs: &Fp) {
        assert_eq!(
            self.modulus, rhs.modulus,
            "prime-field operands have different moduli"
        );
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let mut v = self.value + rhs.value; // < 2^64 requires p < 2^63
        if v >= self.modulus {
            v -= self.modulus;
        }
        Fp {
            modulus: self.modulus,
            value: v,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let v = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.value + (self.modulus - rhs.value)
        };
        Fp {
            modulus: self.modulus,
            value: v,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        Fp {
            modulus: self.modulus,
            value: mul_mod(self.value, rhs.value, self.modulus),
        }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp {
            modulus: self.modulus,
            value: if self.value == 0 {
                0
            } else {
                self.modulus - self.value
            },
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
