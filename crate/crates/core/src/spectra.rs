//! The spectral side: the doubly stochastic matrices `M_k(a,b)`, their exact
//! characteristic polynomials and the recurrence they satisfy, Chebyshev
//! root certificates, the nilpotency-mod-2 conjecture, and parity bitmaps.
//!
//! `M_k(a,b)` is the `k`-th iterate of the morphism applied to
//! `(x + y) / 2`, evaluated entrywise at `(1, 1)`. Since `2 M_k = A_k + B_k`
//! with `A_k`, `B_k` permutation matrices, everything here runs off the
//! permutation recursion; the symbolic route survives as a test oracle.
//!
//! Checks compare computed objects against published claims and *report*
//! disagreements — a mismatch is a finding, not a crash.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{charpoly_exact, chebyshev_t, BitMatrix, ExactMatrix, UniPoly};
use crate::selfsim::{generator_perms, LevelCapError, MorphismParams};

pub use crate::selfsim::DEFAULT_MAX_LEVEL;

/// Exact characteristic polynomials get expensive beyond 256 x 256.
pub const DEFAULT_MAX_CHARPOLY_LEVEL: u32 = 8;

fn check_level(k: u32, max_level: u32) -> Result<(), LevelCapError> {
    if k > max_level {
        Err(LevelCapError {
            requested: k,
            max: max_level,
        })
    } else {
        Ok(())
    }
}

/// The `2^k x 2^k` doubly stochastic matrix
/// `psi_{a,b}^(k)((x + y)/2)` evaluated at `(1, 1)`, computed as
/// `(A_k + B_k) / 2` from the generator permutations.
pub fn m_k(params: MorphismParams, k: u32, max_level: u32) -> Result<ExactMatrix, LevelCapError> {
    check_level(k, max_level)?;
    let (pa, pb) = generator_perms(params, k);
    let n = pa.len();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut m = ExactMatrix::zeros(n);
    for i in 0..n {
        let (ca, cb) = (pa[i] as usize, pb[i] as usize);
        if ca == cb {
            m.set(i, ca, BigRational::one());
        } else {
            m.set(i, ca, half.clone());
            m.set(i, cb, half.clone());
        }
    }
    Ok(m)
}

/// What the published proposition asserts `M_k(a,b)` to be when
/// `a = b (mod 2)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ParityClaim {
    /// Both odd: the exchange matrix `J`.
    Exchange,
    /// Both even: the block identity `diag(I, I)`.
    BlockIdentity,
}

/// Structures the checker knows how to name.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RecognizedStructure {
    Exchange,
    Identity,
    /// `[[0, I], [I, 0]]` — swaps the two halves.
    HalfSwap,
}

impl fmt::Display for RecognizedStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecognizedStructure::Exchange => write!(f, "exchange matrix J"),
            RecognizedStructure::Identity => write!(f, "identity matrix"),
            RecognizedStructure::HalfSwap => write!(f, "half-swap block matrix [[0, I], [I, 0]]"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParityStructureReport {
    pub params: MorphismParams,
    pub k: u32,
    pub claim: ParityClaim,
    /// The computed matrix equals the claimed structure exactly.
    pub matches_claim: bool,
    /// What the matrix actually is, when recognizable.
    pub actual: Option<RecognizedStructure>,
    /// The spectral consequence, checked independently: the characteristic
    /// polynomial is exactly `(t - 1)^p (t + 1)^q`.
    pub spectrum_is_pm_one: bool,
    pub plus_one_multiplicity: usize,
    pub minus_one_multiplicity: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParityCheckError {
    /// The structural claims only cover `a = b (mod 2)`.
    ParityMismatch(MorphismParams),
    LevelCap(LevelCapError),
}

impl fmt::Display for ParityCheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParityCheckError::ParityMismatch(p) => {
                write!(f, "params {p} have mixed parity; the structural claim needs a = b (mod 2)")
            }
            ParityCheckError::LevelCap(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ParityCheckError {}

fn recognize(m: &ExactMatrix) -> Option<RecognizedStructure> {
    let n = m.dim();
    let is = |pred: &dyn Fn(usize, usize) -> bool| {
        (0..n).all(|i| {
            (0..n).all(|j| {
                let e = m.get(i, j);
                if pred(i, j) {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    };
    if is(&|i, j| i == j) {
        Some(RecognizedStructure::Identity)
    } else if is(&|i, j| i + j == n - 1) {
        Some(RecognizedStructure::Exchange)
    } else if n % 2 == 0 && is(&|i, j| j == (i + n / 2) % n) {
        Some(RecognizedStructure::HalfSwap)
    } else {
        None
    }
}

/// Check `M_k(a,b)` against the published structural claim for
/// `a = b (mod 2)` (exchange matrix when odd, block identity when even) and,
/// independently, verify by exact division that the spectrum is contained
/// in `{-1, 1}`. A failed structural comparison is reported in the result,
/// with the actual structure named when possible.
pub fn structural_check_parity(
    params: MorphismParams,
    k: u32,
    max_level: u32,
) -> Result<ParityStructureReport, ParityCheckError> {
    if params.a % 2 != params.b % 2 {
        return Err(ParityCheckError::ParityMismatch(params));
    }
    let m = m_k(params, k, max_level).map_err(ParityCheckError::LevelCap)?;
    let n = m.dim();
    let claim = if params.a % 2 == 1 {
        ParityClaim::Exchange
    } else {
        ParityClaim::BlockIdentity
    };
    let claimed_matrix = match claim {
        ParityClaim::Exchange => ExactMatrix::from_fn(n, |i, j| {
            if i + j == n - 1 {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        }),
        ParityClaim::BlockIdentity => ExactMatrix::identity(n),
    };
    let matches_claim = m == claimed_matrix;
    let actual = recognize(&m);

    let cp = charpoly_exact(&m);
    let (plus, minus, rest) = split_pm_one(&cp);
    let spectrum_is_pm_one = rest.degree() == Some(0) && rest.leading_coeff().is_one();

    Ok(ParityStructureReport {
        params,
        k,
        claim,
        matches_claim,
        actual,
        spectrum_is_pm_one,
        plus_one_multiplicity: plus,
        minus_one_multiplicity: minus,
    })
}

/// Divide out `(t - 1)^p (t + 1)^q` exactly; returns `(p, q, quotient)`.
fn split_pm_one(cp: &UniPoly) -> (usize, usize, UniPoly) {
    let t_minus_1 = UniPoly::from_rats(&[(-1, 1), (1, 1)]);
    let t_plus_1 = UniPoly::from_rats(&[(1, 1), (1, 1)]);
    let mut rest = cp.clone();
    let mut plus = 0usize;
    let mut minus = 0usize;
    loop {
        let (q, r) = rest.div_rem(&t_minus_1);
        if r.is_zero() {
            rest = q;
            plus += 1;
        } else {
            break;
        }
    }
    loop {
        let (q, r) = rest.div_rem(&t_plus_1);
        if r.is_zero() {
            rest = q;
            minus += 1;
        } else {
            break;
        }
    }
    (plus, minus, rest)
}

/// `C_k`, the exact characteristic polynomial of `M_k(1,0)`: monic of
/// degree `2^k`.
pub fn c_k(k: u32, max_level: u32) -> Result<UniPoly, LevelCapError> {
    check_level(k, max_level)?;
    Ok(charpoly_exact(&m_k(MorphismParams::DEFAULT, k, k)?))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RecurrenceReport {
    pub k: u32,
    pub holds: bool,
    pub lhs: UniPoly,
    pub rhs: UniPoly,
}

/// Verify `C_k(t) = t^(2^(k-1)) / 2^(2^(k-2)) * C_(k-2)(2 t^2 - 1)`
/// symbolically; both sides are computed independently (the left from the
/// matrix, never from the recurrence).
pub fn verify_recurrence(k: u32, max_level: u32) -> Result<RecurrenceReport, LevelCapError> {
    assert!(k >= 2, "the recurrence starts at k = 2");
    let lhs = c_k(k, max_level)?;
    let prev = c_k(k - 2, max_level)?;
    let inner = UniPoly::from_rats(&[(-1, 1), (0, 1), (2, 1)]); // 2t^2 - 1
    let scale = BigRational::new(BigInt::one(), BigInt::one() << (1u32 << (k - 2)));
    let rhs = &UniPoly::monomial(BigRational::one(), 1 << (k - 1)) * &prev.compose(&inner).scale(&scale);
    Ok(RecurrenceReport {
        k,
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChebyshevWitness {
    pub k: u32,
    /// Squarefree part of `C_k`.
    pub squarefree: UniPoly,
    /// `squarefree` divides `T_(2^k)^2 - 1` exactly; this certifies every
    /// eigenvalue to be `cos(pi j / 2^m)` for some `m <= k`.
    pub divides: bool,
    /// For each distinct squarefree factor of `C_k`: the smallest `m <= k`
    /// with `factor | T_(2^m)^2 - 1`, when one exists.
    pub factor_witnesses: Vec<(UniPoly, Option<u32>)>,
}

impl ChebyshevWitness {
    pub fn verdict(&self) -> bool {
        self.divides && self.factor_witnesses.iter().all(|(_, m)| m.is_some())
    }
}

/// The Chebyshev root certificate for `C_k`, `k >= 1`.
pub fn chebyshev_root_witness(k: u32, max_level: u32) -> Result<ChebyshevWitness, LevelCapError> {
    assert!(k >= 1, "the certificate starts at k = 1");
    let ck = c_k(k, max_level)?;
    let squarefree = ck.squarefree_part();
    let big_target = cheb_square_minus_one(k);
    let divides = big_target.div_rem(&squarefree).1.is_zero();
    let factor_witnesses = ck
        .squarefree_decomposition()
        .into_iter()
        .map(|(factor, _)| {
            let m = (0..=k).find(|&m| cheb_square_minus_one(m).div_rem(&factor).1.is_zero());
            (factor, m)
        })
        .collect();
    Ok(ChebyshevWitness {
        k,
        squarefree,
        divides,
        factor_witnesses,
    })
}

/// `T_(2^m)^2 - 1`.
fn cheb_square_minus_one(m: u32) -> UniPoly {
    let t = chebyshev_t(1usize << m);
    &(&t * &t) - &UniPoly::one()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NilpotencyReport {
    pub a: u32,
    pub b: u32,
    pub k: u32,
    /// All entries of `2 M_k(a,b)` are integers (they must be: the double
    /// is a sum of two permutation matrices — checked, not assumed).
    pub integral: bool,
    /// Smallest `N <= 2^k` with `(2 M_k)^N = 0 (mod 2)`; `None` would be a
    /// counterexample to the nilpotency conjecture.
    pub index: Option<u64>,
}

/// Test the conjecture that `2 M_k(a,b)` is nilpotent mod 2. A missing
/// index is a first-class finding, not an error.
pub fn nilpotency_conjecture(
    params: MorphismParams,
    k: u32,
    max_level: u32,
) -> Result<NilpotencyReport, LevelCapError> {
    let m = m_k(params, k, max_level)?;
    let doubled = m.scale(&BigRational::from(BigInt::from(2)));
    let n = doubled.dim();
    if !doubled.entries().iter().all(BigRational::is_integer) {
        return Ok(NilpotencyReport {
            a: params.a,
            b: params.b,
            k,
            integral: false,
            index: None,
        });
    }
    let bits = BitMatrix::from_fn(n, |i, j| doubled.get(i, j).numer().is_odd());
    Ok(NilpotencyReport {
        a: params.a,
        b: params.b,
        k,
        integral: true,
        index: bits.nilpotency_index(1 << k),
    })
}

/// A square black-and-white bitmap; bit 1 marks an odd entry and renders
/// black.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParityImage {
    bits: BitMatrix,
}

impl ParityImage {
    pub fn size(&self) -> usize {
        self.bits.dim()
    }

    pub fn bit(&self, i: usize, j: usize) -> bool {
        self.bits.get(i, j)
    }

    pub fn bits(&self) -> &BitMatrix {
        &self.bits
    }

    pub fn black_count(&self) -> u64 {
        self.bits.count_ones()
    }

    /// Binary PBM (`P4`): rows packed most-significant-bit first.
    pub fn to_pbm_p4(&self) -> Vec<u8> {
        let n = self.size();
        let mut out = format!("P4\n{n} {n}\n").into_bytes();
        for i in 0..n {
            let mut byte = 0u8;
            for j in 0..n {
                if self.bit(i, j) {
                    byte |= 0x80 >> (j % 8);
                }
                if j % 8 == 7 || j == n - 1 {
                    out.push(byte);
                    byte = 0;
                }
            }
        }
        out
    }

    /// Plain-text PBM (`P1`), wrapped well under the 70-column convention.
    pub fn to_pbm_p1(&self) -> Vec<u8> {
        let n = self.size();
        let mut out = format!("P1\n{n} {n}\n");
        for i in 0..n {
            for j in 0..n {
                out.push(if self.bit(i, j) { '1' } else { '0' });
                if j % 64 == 63 || j == n - 1 {
                    out.push('\n');
                }
            }
        }
        out.into_bytes()
    }
}

/// The parity image of `(2 M_k(a,b))^power`: black where the integer-matrix
/// entry is odd. Computed entirely over GF(2) — the parity of an integer
/// matrix power equals the power of its mod-2 reduction.
pub fn parity_image(
    params: MorphismParams,
    k: u32,
    power: u64,
    max_level: u32,
) -> Result<ParityImage, LevelCapError> {
    assert!(power >= 1, "power must be positive");
    check_level(k, max_level)?;
    let (pa, pb) = generator_perms(params, k);
    let n = pa.len();
    let mut bits = BitMatrix::zeros(n);
    for i in 0..n {
        // A_k + B_k mod 2: coinciding ones cancel
        bits.toggle(i, pa[i] as usize);
        bits.toggle(i, pb[i] as usize);
    }
    Ok(ParityImage {
        bits: bits.pow(power),
    })
}
