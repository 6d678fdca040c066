//! The free monoid on two generators and its run-length encoding.

use std::cmp::Ordering;
use std::fmt;

/// One of the two free generators.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Generator {
    X,
    Y,
}

impl Generator {
    pub fn other(self) -> Generator {
        match self {
            Generator::X => Generator::Y,
            Generator::Y => Generator::X,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Generator::X => 'x',
            Generator::Y => 'y',
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A finite word over `{x, y}`; the empty word is the monoid identity and
/// prints as `1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn gen(g: Generator) -> Word {
        Word(vec![g])
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Generator>) -> Word {
        Word(letters.into_iter().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Append `count` copies of `g`.
    pub fn push_run(&mut self, g: Generator, count: u64) {
        self.0
            .extend(std::iter::repeat(g).take(count as usize));
    }

    /// Maximal-run encoding; decoding it gives back the word.
    pub fn rle(&self) -> RleForm {
        let mut runs: Vec<(Generator, u64)> = Vec::new();
        for &g in &self.0 {
            match runs.last_mut() {
                Some((last, count)) if *last == g => *count += 1,
                _ => runs.push((g, 1)),
            }
        }
        RleForm(runs)
    }
}

/// Graded order: shorter words first, ties broken lexicographically with
/// `x < y`. This is the canonical term order for polynomials.
impl Ord for Word {
    fn cmp(&self, other: &Word) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for (i, (g, count)) in self.rle().runs().iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{g}")?;
            if *count > 1 {
                write!(f, "^{count}")?;
            }
        }
        Ok(())
    }
}

/// A sequence of `(generator, run length)` pairs with positive run lengths
/// and distinct adjacent generators.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct RleForm(Vec<(Generator, u64)>);

impl RleForm {
    /// Build from explicit runs, checking the invariants.
    pub fn from_runs(runs: Vec<(Generator, u64)>) -> RleForm {
        for (i, (g, count)) in runs.iter().enumerate() {
            assert!(*count >= 1, "run lengths must be positive");
            if i > 0 {
                assert_ne!(runs[i - 1].0, *g, "adjacent runs must alternate");
            }
        }
        RleForm(runs)
    }

    pub fn runs(&self) -> &[(Generator, u64)] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The run lengths alone, in order.
    pub fn exponents(&self) -> Vec<u64> {
        self.0.iter().map(|&(_, count)| count).collect()
    }

    pub fn decode(&self) -> Word {
        let mut w = Word::empty();
        for &(g, count) in &self.0 {
            w.push_run(g, count);
        }
        w
    }
}
