//! Exact-arithmetic toolkit for a self-similar algebra on the free algebra
//! over two generators.
//!
//! The algebra embeds into 2x2 matrices over itself through a morphism
//! `psi_{a,b}` sending `x` to `[[0, x^a], [y^a, 0]]` and `y` to
//! `[[0, x^b], [y^b, 0]]`. Everything in this crate grows out of that map:
//!
//! * [`freealg`] — words over `{x, y}`, run-length encoding, and
//!   noncommutative polynomials over `Q` or a prime field.
//! * [`selfsim`] — the morphism, its `k`-fold iterates into `2^k x 2^k`
//!   matrices, the right action of the four-letter alphabet, and the
//!   run-length-encoding correspondence for monomials.
//! * [`langunits`] — the unit-language automaton of a polynomial, exact word
//!   counts, the `2^k mu - 2 nu` growth law, and the constructive density
//!   machinery for `mu`.
//! * [`spectra`] — the doubly stochastic matrices `M_k(a,b)`, exact
//!   characteristic polynomials, Chebyshev root certificates, and
//!   nilpotency-mod-2 experiments with parity bitmaps.
//! * [`arith`] — the exact scalar and linear-algebra layer everything else
//!   sits on (rationals, prime fields, dense rational matrices, bit-packed
//!   GF(2) matrices, univariate polynomials).
//!
//! All arithmetic is exact; no floating point is used anywhere.

pub mod arith;
pub mod freealg;
pub mod langunits;
pub mod selfsim;
pub mod spectra;
