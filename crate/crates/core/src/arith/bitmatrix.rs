//! Bit-packed square matrices over GF(2).
//!
//! Rows are packed 64 bits to a word. Multiplication is row-by-row XOR
//! accumulation, parallel over destination rows; this is what makes mod-2
//! powers of 1024x1024 matrices cheap.

use rayon::prelude::*;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMatrix {
    n: usize,
    words_per_row: usize,
    rows: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(n: usize) -> BitMatrix {
        let words_per_row = n.div_ceil(64);
        BitMatrix {
            n,
            words_per_row,
            rows: vec![0; n * words_per_row],
        }
    }

    pub fn identity(n: usize) -> BitMatrix {
        let mut m = BitMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> BitMatrix {
        let mut m = BitMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.n && j < self.n);
        self.rows[i * self.words_per_row + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, bit: bool) {
        debug_assert!(i < self.n && j < self.n);
        let w = &mut self.rows[i * self.words_per_row + j / 64];
        if bit {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    /// Flip entry `(i, j)`; handy when accumulating a sum of permutation
    /// matrices mod 2.
    pub fn toggle(&mut self, i: usize, j: usize) {
        self.rows[i * self.words_per_row + j / 64] ^= 1 << (j % 64);
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> u64 {
        self.rows.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn mul(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        let n = self.n;
        let wpr = self.words_per_row;
        let rows: Vec<u64> = (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut acc = vec![0u64; wpr];
                for (wi, &word) in self.row(i).iter().enumerate() {
                    let mut w = word;
                    while w != 0 {
                        let j = wi * 64 + w.trailing_zeros() as usize;
                        w &= w - 1;
                        for (a, b) in acc.iter_mut().zip(rhs.row(j)) {
                            *a ^= b;
                        }
                    }
                }
                acc
            })
            .collect();
        BitMatrix {
            n,
            words_per_row: wpr,
            rows,
        }
    }

    pub fn pow(&self, exp: u64) -> BitMatrix {
        assert!(exp >= 1, "power must be positive");
        // Square-and-multiply over the stored squarings.
        let mut squares = vec![self.clone()];
        let mut e = 1u64;
        while e * 2 <= exp {
            let last = squares.last().unwrap();
            squares.push(last.mul(last));
            e *= 2;
        }
        power_from_squares(&squares, exp)
    }

    /// Smallest `N <= cap` with `self^N = 0`, or `None`.
    ///
    /// Brackets the index by repeated squaring, then binary-searches inside
    /// the bracket, so only `O(log^2 n)` multiplications are spent. For an
    /// `n x n` matrix a nilpotency index, when it exists, is at most `n`, so
    /// `cap = n` gives a conclusive answer.
    pub fn nilpotency_index(&self, cap: u64) -> Option<u64> {
        assert!(cap >= 1, "cap must be at least 1");
        if self.is_zero() {
            return Some(1);
        }
        // Squarings m^1, m^2, m^4, ... until zero or past dim (index <= n).
        let mut squares = vec![self.clone()];
        loop {
            let last = squares.last().unwrap();
            if last.is_zero() {
                break;
            }
            let e = 1u64 << (squares.len() - 1);
            if e >= self.n as u64 {
                return None; // m^{2^t} != 0 with 2^t >= n: not nilpotent
            }
            let sq = last.mul(last);
            squares.push(sq);
        }
        // Zero first appeared at exponent 2^t; search (2^{t-1}, 2^t].
        let t = squares.len() - 1;
        let mut lo = 1u64 << (t - 1); // m^lo != 0
        let mut hi = 1u64 << t; // m^hi == 0
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if power_from_squares(&squares, mid).is_zero() {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        (hi <= cap).then_some(hi)
    }
}

fn power_from_squares(squares: &[BitMatrix], exp: u64) -> BitMatrix {
    debug_assert!(exp >= 1 && (exp >> squares.len()) == 0);
    let mut acc: Option<BitMatrix> = None;
    for (bit, sq) in squares.iter().enumerate() {
        if exp >> bit & 1 == 1 {
            acc = Some(match acc {
                None => sq.clone(),
                Some(m) => m.mul(sq),
            });
        }
    }
    acc.expect("exponent is positive")
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            for j in 0..self.n {
                write!(f, "{}", if self.get(i, j) { '1' } else { '0' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
