//! Dense square matrices over exact rationals.

use std::fmt;
use std::ops::{Add, Mul};

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

/// A square matrix with `BigRational` entries, stored row-major.
///
/// Values are immutable in spirit: operations return new matrices, and a
/// shared `&ExactMatrix` may be used freely across threads.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    n: usize,
    entries: Vec<BigRational>,
}

impl ExactMatrix {
    pub fn new(n: usize, entries: Vec<BigRational>) -> ExactMatrix {
        assert_eq!(entries.len(), n * n, "entry count must be n^2");
        ExactMatrix { n, entries }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> ExactMatrix {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { n, entries }
    }

    pub fn zeros(n: usize) -> ExactMatrix {
        ExactMatrix {
            n,
            entries: vec![BigRational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.entries[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn scale(&self, c: &BigRational) -> ExactMatrix {
        ExactMatrix {
            n: self.n,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn row_sum(&self, i: usize) -> BigRational {
        self.row(i).iter().sum()
    }

    pub fn col_sum(&self, j: usize) -> BigRational {
        (0..self.n).map(|i| self.get(i, j)).sum()
    }

    /// Exactly one entry 1 per row and per column, all others 0.
    pub fn is_permutation(&self) -> bool {
        let mut col_seen = vec![false; self.n];
        for i in 0..self.n {
            let mut row_one = 0usize;
            for j in 0..self.n {
                let e = self.get(i, j);
                if e.is_one() {
                    row_one += 1;
                    if col_seen[j] {
                        return false;
                    }
                    col_seen[j] = true;
                } else if !e.is_zero() {
                    return false;
                }
            }
            if row_one != 1 {
                return false;
            }
        }
        true
    }

    pub fn pow(&self, mut exp: u64) -> ExactMatrix {
        let mut base = self.clone();
        let mut acc = ExactMatrix::identity(self.n);
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

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        ExactMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;

    /// Exact product; rows of the result are computed independently (and in
    /// parallel), so the output does not depend on the worker count.
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        let n = self.n;
        let entries: Vec<BigRational> = (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut out = vec![BigRational::zero(); n];
                for k in 0..n {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    for (j, cell) in out.iter_mut().enumerate() {
                        let b = rhs.get(k, j);
                        if !b.is_zero() {
                            *cell += a * b;
                        }
                    }
                }
                out
            })
            .collect();
        ExactMatrix { n, entries }
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
