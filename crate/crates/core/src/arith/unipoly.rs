//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are exact `BigRational`s indexed by degree with trailing
//! zeros trimmed; the zero polynomial has an empty coefficient vector and no
//! degree. The display variable is `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{rat, rat_int};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UniPoly {
    /// Coefficient of `t^i` at index `i`; the last entry is nonzero.
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn zero() -> UniPoly {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> UniPoly {
        UniPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> UniPoly {
        UniPoly::from_coeffs(vec![c])
    }

    /// `c * t^deg`.
    pub fn monomial(c: BigRational, deg: usize) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly { coeffs }
    }

    /// The variable `t`.
    pub fn var() -> UniPoly {
        UniPoly::monomial(BigRational::one(), 1)
    }

    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> UniPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// Convenience constructor from ascending integer pairs `(num, den)`.
    pub fn from_rats(pairs: &[(i64, i64)]) -> UniPoly {
        UniPoly::from_coeffs(pairs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Divide by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let lc = self.leading_coeff();
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c / &lc).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat_int(i as i64 + 1))
                .collect(),
        )
    }

    /// Exact Euclidean division: `self = q * div + r` with `deg r < deg div`.
    ///
    /// # Panics
    /// Panics if `div` is the zero polynomial.
    pub fn div_rem(&self, div: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let dd = div.degree().unwrap();
        if self.coeffs.len() < div.coeffs.len() {
            return (UniPoly::zero(), self.clone());
        }
        let lc = div.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / &lc;
            for (j, dc) in div.coeffs.iter().enumerate() {
                let t = dc * &q;
                rem[i - dd + j] -= t;
            }
            quot[i - dd] = q;
        }
        (UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem))
    }

    /// True when `div` divides `self` exactly.
    pub fn divides_by(&self, div: &UniPoly) -> bool {
        self.div_rem(div).1.is_zero()
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self / gcd(self, self')`, normalized monic — the product of the
    /// distinct irreducible factors.
    ///
    /// # Panics
    /// Panics on the zero polynomial.
    pub fn squarefree_part(&self) -> UniPoly {
        assert!(!self.is_zero(), "squarefree part of the zero polynomial");
        if self.degree() == Some(0) {
            return UniPoly::one();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Yun's squarefree decomposition: returns `(f_i, m_i)` with each `f_i`
    /// monic squarefree, pairwise coprime, and
    /// `self = lc * prod f_i^{m_i}` with multiplicities strictly increasing.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, usize)> {
        assert!(!self.is_zero(), "decomposition of the zero polynomial");
        let f = self.monic();
        if f.degree() == Some(0) {
            return Vec::new();
        }
        let df = f.derivative();
        let mut out = Vec::new();
        let g = f.gcd(&df);
        let mut c = f.div_rem(&g).0;
        let mut d = df.div_rem(&g).0 - c.derivative();
        let mut i = 1;
        while c.degree() != Some(0) {
            let a = c.gcd(&d);
            c = c.div_rem(&a).0;
            d = d.div_rem(&a).0 - c.derivative();
            if a.degree() != Some(0) {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }

    /// Substitute `inner` for the variable.
    pub fn compose(&self, inner: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * inner + UniPoly::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, mut exp: u32) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: &UniPoly) -> UniPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            if i > 0 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                write!(f, "t")?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
        Ok(())
    }
}

/// Chebyshev polynomial of the first kind, via the three-term recurrence
/// `T_0 = 1`, `T_1 = t`, `T_{n+1} = 2 t T_n - T_{n-1}`.
pub fn chebyshev_t(n: usize) -> UniPoly {
    let two_t = UniPoly::monomial(rat_int(2), 1);
    let mut prev = UniPoly::one();
    if n == 0 {
        return prev;
    }
    let mut cur = UniPoly::var();
    for _ in 1..n {
        let next = &(&two_t * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t2_minus_1() -> UniPoly {
        UniPoly::from_rats(&[(-1, 1), (0, 1), (1, 1)])
    }

    #[test]
    fn chebyshev_small() {
        assert_eq!(chebyshev_t(0), UniPoly::one());
        assert_eq!(chebyshev_t(1), UniPoly::var());
        assert_eq!(chebyshev_t(2), UniPoly::from_rats(&[(-1, 1), (0, 1), (2, 1)]));
        // T_4 = 8 t^4 - 8 t^2 + 1
        assert_eq!(
            chebyshev_t(4),
            UniPoly::from_rats(&[(1, 1), (0, 1), (-8, 1), (0, 1), (8, 1)])
        );
    }

    #[test]
    fn chebyshev_composition_law() {
        // T_m(T_n) = T_{mn}
        for m in 0..=8usize {
            for n in 0..=8usize {
                assert_eq!(
                    chebyshev_t(m).compose(&chebyshev_t(n)),
                    chebyshev_t(m * n),
                    "T_{m} o T_{n}"
                );
            }
        }
    }

    #[test]
    fn compose_example() {
        // (t^2 - 1) o (2t^2 - 1) = 4t^4 - 4t^2
        let outer = t2_minus_1();
        let inner = UniPoly::from_rats(&[(-1, 1), (0, 1), (2, 1)]);
        let expect = UniPoly::from_rats(&[(0, 1), (0, 1), (-4, 1), (0, 1), (4, 1)]);
        assert_eq!(outer.compose(&inner), expect);
    }

    #[test]
    fn gcd_example() {
        let a = t2_minus_1();
        let b = UniPoly::from_rats(&[(-1, 1), (1, 1)]); // t - 1
        assert_eq!(a.gcd(&b), b);
        assert_eq!(UniPoly::zero().gcd(&UniPoly::zero()), UniPoly::zero());
    }

    #[test]
    fn squarefree_example() {
        // t^2 (t^2 - 1) -> t^3 - t
        let p = &UniPoly::monomial(rat_int(1), 2) * &t2_minus_1();
        let expect = UniPoly::from_rats(&[(0, 1), (-1, 1), (0, 1), (1, 1)]);
        assert_eq!(p.squarefree_part(), expect);
    }

    #[test]
    fn squarefree_decomposition_reassembles() {
        // (t - 1) * t^3 * (t + 2)^2, scaled by 3
        let f = UniPoly::from_rats(&[(-1, 1), (1, 1)]);
        let g = UniPoly::monomial(rat_int(1), 1);
        let h = UniPoly::from_rats(&[(2, 1), (1, 1)]);
        let p = (&(&f * &g.pow(3)) * &h.pow(2)).scale(&rat_int(3));
        let dec = p.squarefree_decomposition();
        assert_eq!(dec, vec![(f.clone(), 1), (h.clone(), 2), (g.clone(), 3)]);
        let mut prod = UniPoly::constant(p.leading_coeff());
        for (fac, m) in &dec {
            prod = &prod * &fac.pow(*m as u32);
        }
        assert_eq!(prod, p);
    }

    #[test]
    fn div_rem_exact_and_remainder() {
        let num = &t2_minus_1() * &t2_minus_1();
        let (q, r) = num.div_rem(&t2_minus_1());
        assert!(r.is_zero());
        assert_eq!(q, t2_minus_1());

        let (q, r) = UniPoly::var().div_rem(&t2_minus_1());
        assert!(q.is_zero());
        assert_eq!(r, UniPoly::var());
    }

    #[test]
    #[should_panic(expected = "zero polynomial")]
    fn division_by_zero_panics() {
        let _ = UniPoly::one().div_rem(&UniPoly::zero());
    }

    #[test]
    fn display_forms() {
        assert_eq!(UniPoly::zero().to_string(), "0");
        assert_eq!(t2_minus_1().to_string(), "t^2 - 1");
        let p = UniPoly::from_rats(&[(1, 128), (0, 1), (-1, 4), (0, 1), (5, 4)]);
        assert_eq!(p.to_string(), "5/4*t^4 - 1/4*t^2 + 1/128");
        assert_eq!(UniPoly::monomial(rat_int(-1), 1).to_string(), "-t");
    }
}
