//! The self-similar structure: the morphism `psi_{a,b}` into 2x2 matrices
//! over the algebra, its `k`-fold iterates, the right action of the
//! four-letter alphabet, generator matrices evaluated at `(1,1)`, and the
//! run-length-encoding correspondence for monomials.
//!
//! `psi_{a,b}` sends `x` to `[[0, x^a], [y^a, 0]]` and `y` to
//! `[[0, x^b], [y^b, 0]]`. The image of a word telescopes: an n-letter word
//! maps to a matrix with exactly two nonzero entries, each an alternating
//! word whose i-th block has exponent `a` or `b` according to the i-th
//! source letter. Everything here exploits that shape; the generic
//! matrix-product route survives in tests as the independent oracle.

use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use crate::arith::ExactMatrix;
use crate::freealg::{Coeff, Field, Generator, NcPoly, ParseError, RleForm, Word};

/// The exponent pair `(a, b)` of the morphism.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct MorphismParams {
    pub a: u32,
    pub b: u32,
}

impl MorphismParams {
    /// The unnamed default morphism: `a = 1`, `b = 0`. The action and the
    /// automaton layer are fixed to these parameters.
    pub const DEFAULT: MorphismParams = MorphismParams { a: 1, b: 0 };

    pub fn new(a: u32, b: u32) -> MorphismParams {
        MorphismParams { a, b }
    }
}

impl fmt::Display for MorphismParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// A letter of the action alphabet: a pair `(i, j)` with `i, j` in `{0, 1}`
/// addressing an entry of a 2x2 matrix.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Letter {
    row: u8,
    col: u8,
}

impl Letter {
    pub const ALL: [Letter; 4] = [
        Letter { row: 0, col: 0 },
        Letter { row: 0, col: 1 },
        Letter { row: 1, col: 0 },
        Letter { row: 1, col: 1 },
    ];

    pub fn new(row: u8, col: u8) -> Letter {
        assert!(row < 2 && col < 2, "letter components must be 0 or 1");
        Letter { row, col }
    }

    pub fn row(&self) -> usize {
        self.row as usize
    }

    pub fn col(&self) -> usize {
        self.col as usize
    }

    pub fn is_diagonal(&self) -> bool {
        self.row == self.col
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Parse a letter word like `(0,0)(1,1)(0,1)`; whitespace between letters is
/// allowed. The empty string is the empty word.
pub fn parse_letter_word(text: &str) -> Result<Vec<Letter>, ParseError> {
    let bytes = text.as_bytes();
    let mut pos = 0usize;
    let mut out = Vec::new();
    let err = |pos: usize, message: &str| ParseError {
        pos,
        message: message.into(),
    };
    while pos < bytes.len() {
        if bytes[pos].is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        if bytes[pos] != b'(' {
            return Err(err(pos, "expected '('"));
        }
        let bit = |p: usize| -> Result<u8, ParseError> {
            match bytes.get(p) {
                Some(b'0') => Ok(0),
                Some(b'1') => Ok(1),
                _ => Err(err(p, "expected '0' or '1'")),
            }
        };
        let i = bit(pos + 1)?;
        if bytes.get(pos + 2) != Some(&b',') {
            return Err(err(pos + 2, "expected ','"));
        }
        let j = bit(pos + 3)?;
        if bytes.get(pos + 4) != Some(&b')') {
            return Err(err(pos + 4, "expected ')'"));
        }
        out.push(Letter::new(i, j));
        pos += 5;
    }
    Ok(out)
}

/// A square matrix over the free algebra; the dimension is a power of two
/// (1 for `psi^(0)`, 2 for `psi`, `2^k` for the iterates).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgMatrix {
    n: usize,
    field: Field,
    entries: Vec<NcPoly>,
}

impl AlgMatrix {
    pub fn from_fn(field: Field, n: usize, mut f: impl FnMut(usize, usize) -> NcPoly) -> AlgMatrix {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let e = f(i, j);
                assert_eq!(e.field(), field, "entry field mismatch");
                entries.push(e);
            }
        }
        AlgMatrix { n, field, entries }
    }

    pub fn zeros(field: Field, n: usize) -> AlgMatrix {
        AlgMatrix::from_fn(field, n, |_, _| NcPoly::zero(field))
    }

    pub fn identity(field: Field, n: usize) -> AlgMatrix {
        AlgMatrix::from_fn(
            field,
            n,
            |i, j| {
                if i == j {
                    NcPoly::one(field)
                } else {
                    NcPoly::zero(field)
                }
            },
        )
    }

    /// Assemble `[[tl, tr], [bl, br]]`.
    pub fn from_blocks(tl: &AlgMatrix, tr: &AlgMatrix, bl: &AlgMatrix, br: &AlgMatrix) -> AlgMatrix {
        let m = tl.n;
        assert!(
            tr.n == m && bl.n == m && br.n == m,
            "blocks must share a dimension"
        );
        AlgMatrix::from_fn(tl.field, 2 * m, |i, j| {
            let block = match (i < m, j < m) {
                (true, true) => tl,
                (true, false) => tr,
                (false, true) => bl,
                (false, false) => br,
            };
            block.get(i % m, j % m).clone()
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &NcPoly {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[NcPoly] {
        &self.entries
    }

    pub fn add(&self, rhs: &AlgMatrix) -> AlgMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        AlgMatrix::from_fn(self.field, self.n, |i, j| self.get(i, j) + rhs.get(i, j))
    }

    pub fn mul(&self, rhs: &AlgMatrix) -> AlgMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        AlgMatrix::from_fn(self.field, self.n, |i, j| {
            let mut acc = NcPoly::zero(self.field);
            for k in 0..self.n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                acc = &acc + &(a * rhs.get(k, j));
            }
            acc
        })
    }

    /// Entrywise coefficient sums.
    pub fn eval_ones(&self) -> Vec<Coeff> {
        self.entries.iter().map(NcPoly::eval_ones).collect()
    }

    /// Entrywise coefficient sums as an exact rational matrix; the entries
    /// must live over `Q`.
    pub fn eval_ones_rational(&self) -> ExactMatrix {
        assert_eq!(self.field, Field::Q, "rational evaluation needs Q entries");
        ExactMatrix::new(
            self.n,
            self.entries
                .iter()
                .map(|p| match p.eval_ones() {
                    Coeff::Rat(r) => r,
                    Coeff::Mod(_) => unreachable!(),
                })
                .collect(),
        )
    }

    /// Exactly one nonzero entry in each row and each column.
    pub fn is_monomial_pattern(&self) -> bool {
        let mut col_used = vec![false; self.n];
        for i in 0..self.n {
            let mut row_nonzero = 0;
            for j in 0..self.n {
                if !self.get(i, j).is_zero() {
                    row_nonzero += 1;
                    if col_used[j] {
                        return false;
                    }
                    col_used[j] = true;
                }
            }
            if row_nonzero != 1 {
                return false;
            }
        }
        true
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j).is_zero()))
    }
}

impl fmt::Display for AlgMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// The word in row `start` of the image of the word `w`: blocks alternate
/// generators starting from `start`, the i-th block having exponent `a` or
/// `b` according to the i-th letter of `w`.
fn word_image_row(w: &Word, start: Generator, params: MorphismParams) -> Word {
    let mut out = Word::empty();
    let mut g = start;
    for letter in w.letters() {
        let e = match letter {
            Generator::X => params.a,
            Generator::Y => params.b,
        };
        out.push_run(g, e as u64);
        g = g.other();
    }
    out
}

/// Entry `(i, j)` of `psi_{a,b}(w)` for a word `w`, or `None` when that
/// entry is structurally zero. Even-length words land on the diagonal,
/// odd-length words on the antidiagonal; row 0 carries the block word
/// starting with `x`, row 1 the one starting with `y`.
fn word_image_entry(w: &Word, l: Letter, params: MorphismParams) -> Option<Word> {
    let even = w.len() % 2 == 0;
    if even != l.is_diagonal() {
        return None;
    }
    let start = if l.row() == 0 {
        Generator::X
    } else {
        Generator::Y
    };
    Some(word_image_row(w, start, params))
}

/// The image of `s` under the algebra morphism `psi_{a,b}`: a 2x2 matrix
/// over the same algebra. A scalar maps to that scalar times the identity.
pub fn psi(s: &NcPoly, params: MorphismParams) -> AlgMatrix {
    let field = s.field();
    let mut cells: [Vec<(Word, Coeff)>; 4] = Default::default();
    for (w, c) in s.terms() {
        for (idx, l) in Letter::ALL.iter().enumerate() {
            if let Some(img) = word_image_entry(w, *l, params) {
                cells[idx].push((img, c.clone()));
            }
        }
    }
    let mut cells = cells.into_iter();
    AlgMatrix::from_fn(field, 2, |_, _| {
        NcPoly::from_terms(field, cells.next().unwrap())
    })
}

/// The right action `s . (i,j) := psi(s)[i,j]`, with the morphism fixed at
/// the default parameters `(1, 0)`.
pub fn act(s: &NcPoly, l: Letter) -> NcPoly {
    let field = s.field();
    NcPoly::from_terms(
        field,
        s.terms().filter_map(|(w, c)| {
            word_image_entry(w, l, MorphismParams::DEFAULT).map(|img| (img, c.clone()))
        }),
    )
}

/// Left-to-right fold of [`act`]; the empty word acts as the identity.
pub fn act_word(s: &NcPoly, letters: &[Letter]) -> NcPoly {
    letters.iter().fold(s.clone(), |t, &l| act(&t, l))
}

/// Default ceiling for the `2^k` dimension guards.
pub const DEFAULT_MAX_LEVEL: u32 = 12;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LevelCapError {
    pub requested: u32,
    pub max: u32,
}

impl fmt::Display for LevelCapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "level {} exceeds the cap {} (dimension 2^{}); raise the cap to override",
            self.requested, self.max, self.requested
        )
    }
}

impl std::error::Error for LevelCapError {}

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

/// The iterated morphism: `psi^(0)(s) = s` as a 1x1 matrix, and
/// `psi^(k+1)(s)` is the block matrix of `psi^(k)` applied to the four
/// entries of `psi(s)`. The result is dense of dimension `2^k`, hence the
/// level guard.
pub fn psi_iter(
    s: &NcPoly,
    k: u32,
    params: MorphismParams,
    max_level: u32,
) -> Result<AlgMatrix, LevelCapError> {
    check_level(k, max_level)?;
    Ok(psi_iter_inner(s, k, params))
}

fn psi_iter_inner(s: &NcPoly, k: u32, params: MorphismParams) -> AlgMatrix {
    if k == 0 {
        return AlgMatrix::from_fn(s.field(), 1, |_, _| s.clone());
    }
    let m = psi(s, params);
    let blocks: Vec<AlgMatrix> = m
        .entries()
        .iter()
        .map(|e| psi_iter_inner(e, k - 1, params))
        .collect();
    AlgMatrix::from_blocks(&blocks[0], &blocks[1], &blocks[2], &blocks[3])
}

/// Row-to-column permutations of the generator matrices
/// `A_k = psi^(k)(x)|_(1,1)` and `B_k = psi^(k)(y)|_(1,1)`.
///
/// Both are permutation matrices: the image of a word under `psi` has one
/// nonzero monomial entry per row and column, and evaluation at `(1,1)`
/// sends each monomial to 1. They satisfy the joint recursion
/// `A_{k+1} = [[0, A_k^a], [B_k^a, 0]]` (and likewise with `b` for `B`),
/// which is how dimension `2^10` stays cheap.
pub fn generator_perms(params: MorphismParams, k: u32) -> (Vec<u32>, Vec<u32>) {
    let mut a_perm = vec![0u32];
    let mut b_perm = vec![0u32];
    for _ in 0..k {
        let n = a_perm.len() as u32;
        let next = |exp: u32| -> Vec<u32> {
            let top = perm_pow(&a_perm, exp);
            let bottom = perm_pow(&b_perm, exp);
            let mut out = Vec::with_capacity(2 * n as usize);
            out.extend(top.iter().map(|&c| n + c));
            out.extend(bottom.iter().copied());
            out
        };
        let new_a = next(params.a);
        let new_b = next(params.b);
        a_perm = new_a;
        b_perm = new_b;
    }
    (a_perm, b_perm)
}

fn perm_compose(p: &[u32], q: &[u32]) -> Vec<u32> {
    p.iter().map(|&i| q[i as usize]).collect()
}

fn perm_pow(p: &[u32], mut exp: u32) -> Vec<u32> {
    let mut acc: Vec<u32> = (0..p.len() as u32).collect();
    let mut base = p.to_vec();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = perm_compose(&acc, &base);
        }
        exp >>= 1;
        if exp > 0 {
            base = perm_compose(&base, &base);
        }
    }
    acc
}

pub(crate) fn perm_to_matrix(perm: &[u32]) -> ExactMatrix {
    let n = perm.len();
    let mut m = ExactMatrix::zeros(n);
    for (i, &j) in perm.iter().enumerate() {
        m.set(i, j as usize, BigRational::one());
    }
    m
}

/// `psi^(k)` of a generator, evaluated entrywise at `(1, 1)`: a `2^k`
/// permutation matrix with exact 0/1 rational entries.
pub fn generator_matrix_at_ones(
    g: Generator,
    k: u32,
    params: MorphismParams,
    max_level: u32,
) -> Result<ExactMatrix, LevelCapError> {
    check_level(k, max_level)?;
    let (a_perm, b_perm) = generator_perms(params, k);
    Ok(perm_to_matrix(match g {
        Generator::X => &a_perm,
        Generator::Y => &b_perm,
    }))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RleCheckError {
    /// Needs `a != b` and both positive: with `b = 0` blocks vanish and
    /// with `a = b` adjacent runs merge, so the correspondence degenerates.
    InvalidParams(MorphismParams),
    EmptyWord,
}

impl fmt::Display for RleCheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RleCheckError::InvalidParams(p) => write!(
                f,
                "params {p} unsupported: the correspondence needs a != b with a >= 1 and b >= 1"
            ),
            RleCheckError::EmptyWord => write!(f, "the word must be nonempty"),
        }
    }
}

impl std::error::Error for RleCheckError {}

/// Everything the run-length-encoding correspondence check saw.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RleWitness {
    /// Maximal-run encoding of the input word.
    pub z_runs: RleForm,
    /// The nonzero image entry whose blocks start with `x` (row 0).
    pub row_word: Word,
    /// The nonzero image entry whose blocks start with `y` (row 1).
    pub col_word: Word,
    /// One value (`a` or `b`) per input letter: the block exponents of the
    /// image words.
    pub values: Vec<u64>,
    /// Run lengths of `values`.
    pub value_run_lengths: Vec<u64>,
    /// The image entries computed by the generic matrix product agree with
    /// the structural block reconstruction, character for character.
    pub words_match: bool,
    /// `value_run_lengths` equals the exponent sequence of `z_runs`.
    pub runs_match: bool,
}

impl RleWitness {
    pub fn verdict(&self) -> bool {
        self.words_match && self.runs_match
    }
}

/// Check the correspondence between the exponents of a monomial `z` and the
/// run-length encoding of the exponents of the two nonzero entries of
/// `psi_{a,b}(z)`.
///
/// The image is computed by the plain product of generator images (no
/// shortcut), then compared with the structural reconstruction; a mismatch
/// in either comparison is reported in the witness, never ignored.
pub fn rle_correspondence_check(
    z: &Word,
    params: MorphismParams,
) -> Result<RleWitness, RleCheckError> {
    if params.a == params.b || params.a == 0 || params.b == 0 {
        return Err(RleCheckError::InvalidParams(params));
    }
    if z.is_empty() {
        return Err(RleCheckError::EmptyWord);
    }

    // psi(z) the slow honest way: multiply the generator images.
    let field = Field::Q;
    let image = z
        .letters()
        .iter()
        .fold(AlgMatrix::identity(field, 2), |m, &g| {
            m.mul(&psi(&NcPoly::generator(field, g), params))
        });
    let even = z.len() % 2 == 0;
    let (row_entry, col_entry) = if even {
        (image.get(0, 0), image.get(1, 1))
    } else {
        (image.get(0, 1), image.get(1, 0))
    };
    let extract = |p: &NcPoly| -> Word {
        let (w, c) = p.as_monomial().expect("image entry is a monomial");
        assert!(c.is_one(), "image entry has coefficient 1");
        w.clone()
    };
    let (row_word, col_word) = (extract(row_entry), extract(col_entry));

    // Structural reconstruction straight from the source letters.
    let expect_row = word_image_row(z, Generator::X, params);
    let expect_col = word_image_row(z, Generator::Y, params);
    let words_match = row_word == expect_row && col_word == expect_col;

    let values: Vec<u64> = z
        .letters()
        .iter()
        .map(|g| match g {
            Generator::X => params.a as u64,
            Generator::Y => params.b as u64,
        })
        .collect();
    let mut value_run_lengths: Vec<u64> = Vec::new();
    let mut prev: Option<u64> = None;
    for &v in &values {
        if prev == Some(v) {
            *value_run_lengths.last_mut().unwrap() += 1;
        } else {
            value_run_lengths.push(1);
            prev = Some(v);
        }
    }

    let z_runs = z.rle();
    let runs_match = value_run_lengths == z_runs.exponents();

    Ok(RleWitness {
        z_runs,
        row_word,
        col_word,
        values,
        value_run_lengths,
        words_match,
        runs_match,
    })
}
