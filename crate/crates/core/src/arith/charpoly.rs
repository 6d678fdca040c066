//! Exact characteristic polynomials of rational matrices.
//!
//! No floating point anywhere: denominators are cleared, the integer
//! characteristic polynomial is computed modulo enough 62-bit primes
//! (Hessenberg reduction plus the standard recurrence, O(n^3) per prime),
//! and the true coefficients are recovered by CRT under a Hadamard-style
//! bound. Characteristic polynomials commute with reduction mod p, so every
//! prime is usable — there are no unlucky primes to reject.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use super::fp::{inv_mod, is_prime_u64, mul_mod};
use super::{ExactMatrix, UniPoly};

/// Monic `det(t I - m)`, exact, degree = dimension.
pub fn charpoly_exact(m: &ExactMatrix) -> UniPoly {
    let n = m.dim();
    if n == 0 {
        return UniPoly::one();
    }

    // Clear denominators: N = d * m is an integer matrix and
    // charpoly(m)(t) = d^{-n} charpoly(N)(d t).
    let mut d = BigInt::one();
    for e in m.entries() {
        d = d.lcm(e.denom());
    }
    let ints: Vec<BigInt> = m
        .entries()
        .iter()
        .map(|e| e.numer() * (&d / e.denom()))
        .collect();

    let bound = coeff_bound(&ints, n);
    let primes = primes_covering(&(bound * 2i32 + 1i32));

    let residues: Vec<Vec<u64>> = primes
        .par_iter()
        .map(|&p| {
            let pb = BigInt::from(p);
            let reduced: Vec<u64> = ints
                .iter()
                .map(|x| x.mod_floor(&pb).to_u64().expect("residue fits u64"))
                .collect();
            charpoly_mod_p(reduced, n, p)
        })
        .collect();

    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let c = crt_centered(residues.iter().map(|r| r[j]), &primes);
        coeffs.push(BigRational::new(c, d.pow((n - j) as u32)));
    }
    UniPoly::from_coeffs(coeffs)
}

/// Bound on the coefficients of the characteristic polynomial of an integer
/// matrix: the coefficient of `t^{n-i}` is (up to sign) the sum of the
/// `binom(n, i)` principal `i x i` minors, each bounded by the product of
/// the `i` largest row 2-norms (Hadamard).
fn coeff_bound(ints: &[BigInt], n: usize) -> BigInt {
    let mut sq_sums: Vec<BigInt> = (0..n)
        .map(|i| (0..n).map(|j| &ints[i * n + j] * &ints[i * n + j]).sum())
        .collect();
    sq_sums.sort_unstable_by(|a, b| b.cmp(a));

    let mut best = BigInt::one();
    let mut prefix = BigInt::one();
    let mut binom = BigInt::one();
    for i in 1..=n {
        prefix *= &sq_sums[i - 1];
        binom = binom * (n - i + 1) / i;
        let b = &binom * (prefix.sqrt() + 1);
        if b > best {
            best = b;
        }
    }
    best
}

/// Distinct 62-bit primes whose product exceeds `target`.
fn primes_covering(target: &BigInt) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut prod = BigInt::one();
    let mut cand = (1u64 << 62) - 1;
    while prod <= *target {
        while !is_prime_u64(cand) {
            cand -= 2;
        }
        primes.push(cand);
        prod *= cand;
        cand -= 2;
    }
    primes
}

/// Combine residues into the centered representative in `(-M/2, M/2]`.
fn crt_centered(residues: impl Iterator<Item = u64>, primes: &[u64]) -> BigInt {
    let mut x = BigInt::zero();
    let mut m = BigInt::one();
    for (r, &p) in residues.zip(primes) {
        let pb = BigInt::from(p);
        let cur = x.mod_floor(&pb).to_u64().expect("residue fits u64");
        let delta = (r + p - cur) % p;
        let m_mod = m.mod_floor(&pb).to_u64().expect("residue fits u64");
        let t = mul_mod(delta, inv_mod(m_mod, p).expect("coprime moduli"), p);
        x += &m * t;
        m *= pb;
    }
    if &x * 2i32 > m {
        x -= &m;
    }
    x
}

/// Characteristic polynomial mod p (coefficients ascending, monic).
fn charpoly_mod_p(mut a: Vec<u64>, n: usize, p: u64) -> Vec<u64> {
    let at = |a: &[u64], i: usize, j: usize| a[i * n + j];
    hessenberg_in_place(&mut a, n, p);

    // Recurrence over leading principal minors of the Hessenberg form:
    // p_m = (t - H[m-1][m-1]) p_{m-1}
    //       - sum_{i=1}^{m-1} H[i-1][m-1] (prod_{r=i}^{m-1} H[r][r-1]) p_{i-1}
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![1 % p]);
    for m in 1..=n {
        let mut pm = vec![0u64; m + 1];
        let h = at(&a, m - 1, m - 1);
        for (idx, &c) in polys[m - 1].iter().enumerate() {
            pm[idx + 1] = add_mod(pm[idx + 1], c, p);
            pm[idx] = sub_mod(pm[idx], mul_mod(h, c, p), p);
        }
        let mut prod = 1u64;
        for i in (1..m).rev() {
            prod = mul_mod(prod, at(&a, i, i - 1), p);
            if prod == 0 {
                break;
            }
            let coeff = mul_mod(at(&a, i - 1, m - 1), prod, p);
            if coeff == 0 {
                continue;
            }
            for (idx, &c) in polys[i - 1].iter().enumerate() {
                pm[idx] = sub_mod(pm[idx], mul_mod(coeff, c, p), p);
            }
        }
        polys.push(pm);
    }
    polys.pop().expect("nonempty")
}

/// Reduce to upper Hessenberg form by similarity transformations over F_p.
fn hessenberg_in_place(a: &mut [u64], n: usize, p: u64) {
    for j in 0..n.saturating_sub(2) {
        let Some(r) = (j + 1..n).find(|&r| a[r * n + j] != 0) else {
            continue;
        };
        if r != j + 1 {
            for c in 0..n {
                a.swap(r * n + c, (j + 1) * n + c);
            }
            for row in 0..n {
                a.swap(row * n + r, row * n + j + 1);
            }
        }
        let piv_inv = inv_mod(a[(j + 1) * n + j], p).expect("pivot invertible");
        for i in j + 2..n {
            let f = mul_mod(a[i * n + j], piv_inv, p);
            if f == 0 {
                continue;
            }
            // row_i -= f * row_{j+1}; then col_{j+1} += f * col_i.
            for c in j..n {
                let t = mul_mod(f, a[(j + 1) * n + c], p);
                a[i * n + c] = sub_mod(a[i * n + c], t, p);
            }
            for row in 0..n {
                let t = mul_mod(f, a[row * n + i], p);
                a[row * n + j + 1] = add_mod(a[row * n + j + 1], t, p);
            }
        }
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}
