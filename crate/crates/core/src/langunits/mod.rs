//! The unit language of a polynomial and its growth.
//!
//! For `s` over a prime field, the right action of the four letters closes
//! into a finite deterministic automaton whose states are canonical
//! polynomials. Counting accepted words of length `k` follows the exact law
//! `2^k mu(s) - 2 nu(s)` once `k` is large enough; `mu` and `nu` are exact
//! rationals computed by back-propagation from a small closed base set of
//! states. The `sigma` fold and the `omega_construct` builder realize any
//! nonnegative dyadic rational as a `mu` value, which is what makes the
//! range of `mu` dense in the nonnegative ray.

mod export;

pub use export::{count_table_csv, to_dot, to_json};

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::freealg::{Field, Generator, NcPoly, Word};
use crate::selfsim::{act, psi, Letter, MorphismParams};

/// What counts as a unit when deciding acceptance.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum UnitPolicy {
    /// Units are the nonzero scalars: the textbook units of a free algebra
    /// over a field. This is the default.
    Scalar,
    /// Greatest fixed point extending the scalars: a state survives when
    /// its image under the morphism is a monomial-pattern matrix (one
    /// nonzero entry per row and column) with every nonzero entry again a
    /// survivor. This reproduces readings in which the generators
    /// themselves are treated as units. Experimental.
    RecursiveMonomial,
}

impl fmt::Display for UnitPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnitPolicy::Scalar => write!(f, "scalar"),
            UnitPolicy::RecursiveMonomial => write!(f, "recursive"),
        }
    }
}

impl FromStr for UnitPolicy {
    type Err = String;
    fn from_str(s: &str) -> Result<UnitPolicy, String> {
        match s {
            "scalar" => Ok(UnitPolicy::Scalar),
            "recursive" | "recursive-monomial" => Ok(UnitPolicy::RecursiveMonomial),
            other => Err(format!("unknown policy '{other}' (expected 'scalar' or 'recursive')")),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AutomatonError {
    /// The action layer needs prime-field coefficients; over `Q` the state
    /// space is not usefully finite.
    NotPrimeField(Field),
    StateBudgetExceeded { max_states: usize },
}

impl fmt::Display for AutomatonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutomatonError::NotPrimeField(field) => {
                write!(f, "automaton construction needs a prime field, got {field}")
            }
            AutomatonError::StateBudgetExceeded { max_states } => {
                write!(f, "state budget of {max_states} exceeded")
            }
        }
    }
}

impl std::error::Error for AutomatonError {}

/// Deterministic, complete automaton over the four letters whose states are
/// canonical polynomials: the action closure of the initial polynomial.
///
/// States are numbered by `(BFS depth, canonical text)`, so identical inputs
/// produce byte-identical exports.
#[derive(Clone, Debug)]
pub struct UnitAutomaton {
    field: Field,
    policy: UnitPolicy,
    states: Vec<NcPoly>,
    depths: Vec<u32>,
    initial: usize,
    /// `transitions[state][letter_index(l)]`.
    transitions: Vec<[usize; 4]>,
    accepting: Vec<bool>,
}

pub(crate) fn letter_index(l: Letter) -> usize {
    l.row() * 2 + l.col()
}

impl UnitAutomaton {
    /// Breadth-first closure of `s` under the action, with transitions per
    /// letter and the accepting set decided by `policy`.
    pub fn build(
        s: &NcPoly,
        policy: UnitPolicy,
        max_states: usize,
    ) -> Result<UnitAutomaton, AutomatonError> {
        let field = s.field();
        if !field.is_prime_field() {
            return Err(AutomatonError::NotPrimeField(field));
        }
        let mut index: HashMap<NcPoly, usize> = HashMap::new();
        let mut states: Vec<NcPoly> = Vec::new();
        let mut depths: Vec<u32> = Vec::new();
        let mut transitions: Vec<[usize; 4]> = Vec::new();
        let mut queue: VecDeque<usize> = VecDeque::new();

        index.insert(s.clone(), 0);
        states.push(s.clone());
        depths.push(0);
        queue.push_back(0);

        while let Some(u) = queue.pop_front() {
            let mut row = [usize::MAX; 4];
            for (li, &l) in Letter::ALL.iter().enumerate() {
                let t = act(&states[u], l);
                let v = match index.get(&t) {
                    Some(&v) => v,
                    None => {
                        if states.len() >= max_states {
                            return Err(AutomatonError::StateBudgetExceeded { max_states });
                        }
                        let v = states.len();
                        index.insert(t.clone(), v);
                        states.push(t);
                        depths.push(depths[u] + 1);
                        queue.push_back(v);
                        v
                    }
                };
                row[li] = v;
            }
            transitions.push(row);
        }

        // Renumber by (depth, canonical text) for reproducible exports.
        let mut order: Vec<usize> = (0..states.len()).collect();
        order.sort_by_cached_key(|&i| (depths[i], states[i].to_string()));
        let mut rank = vec![0usize; states.len()];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }
        let states: Vec<NcPoly> = order.iter().map(|&old| states[old].clone()).collect();
        let depths: Vec<u32> = order.iter().map(|&old| depths[old]).collect();
        let transitions: Vec<[usize; 4]> = order
            .iter()
            .map(|&old| transitions[old].map(|v| rank[v]))
            .collect();

        let accepting = unit_set(&states, policy);
        Ok(UnitAutomaton {
            field,
            policy,
            states,
            depths,
            initial: rank[0],
            transitions,
            accepting,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn policy(&self) -> UnitPolicy {
        self.policy
    }

    pub fn states(&self) -> &[NcPoly] {
        &self.states
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn depth(&self, id: usize) -> u32 {
        self.depths[id]
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn transition(&self, id: usize, l: Letter) -> usize {
        self.transitions[id][letter_index(l)]
    }

    pub fn is_accepting(&self, id: usize) -> bool {
        self.accepting[id]
    }

    pub fn state_id(&self, p: &NcPoly) -> Option<usize> {
        self.states.iter().position(|s| s == p)
    }

    /// Exact number of accepted words of each length `0..=kmax`, by
    /// iterating the transfer count (the matrix whose `(u, v)` entry is the
    /// number of letters mapping `u` to `v`) against the accepting
    /// indicator. Arbitrary precision throughout.
    pub fn count_words_range(&self, kmax: u32) -> Vec<BigUint> {
        let n = self.states.len();
        let mut v: Vec<BigUint> = (0..n)
            .map(|i| {
                if self.accepting[i] {
                    BigUint::one()
                } else {
                    BigUint::zero()
                }
            })
            .collect();
        let mut out = Vec::with_capacity(kmax as usize + 1);
        out.push(v[self.initial].clone());
        for _ in 0..kmax {
            let mut next = vec![BigUint::zero(); n];
            for (u, row) in self.transitions.iter().enumerate() {
                for &t in row {
                    next[u] += &v[t];
                }
            }
            v = next;
            out.push(v[self.initial].clone());
        }
        out
    }

    /// Exact number of length-`k` words accepted from the initial state.
    pub fn count_words(&self, k: u32) -> BigUint {
        self.count_words_range(k).pop().unwrap()
    }
}

/// The accepting subset of `states` under `policy` (as a parallel `bool`
/// vector).
///
/// `Scalar` keeps the nonzero scalars. `RecursiveMonomial` computes the
/// greatest fixed point described on [`UnitPolicy::RecursiveMonomial`]; the
/// fixpoint only ever inspects a state's own action closure, so membership
/// does not depend on the ambient state set.
pub fn unit_set(states: &[NcPoly], policy: UnitPolicy) -> Vec<bool> {
    match policy {
        UnitPolicy::Scalar => states
            .iter()
            .map(|s| s.as_nonzero_scalar().is_some())
            .collect(),
        UnitPolicy::RecursiveMonomial => {
            let index: HashMap<&NcPoly, usize> =
                states.iter().enumerate().map(|(i, s)| (s, i)).collect();
            // For each state: None when its psi image is not monomial
            // pattern; otherwise the ids of the nonzero entries.
            let children: Vec<Option<Vec<usize>>> = states
                .iter()
                .map(|s| {
                    let m = psi(s, MorphismParams::DEFAULT);
                    if !m.is_monomial_pattern() {
                        return None;
                    }
                    m.entries()
                        .iter()
                        .filter(|e| !e.is_zero())
                        .map(|e| index.get(e).copied())
                        .collect()
                })
                .collect();
            let scalar: Vec<bool> = states
                .iter()
                .map(|s| s.as_nonzero_scalar().is_some())
                .collect();
            let mut alive: Vec<bool> = states.iter().map(|s| !s.is_zero()).collect();
            loop {
                let mut changed = false;
                for i in 0..states.len() {
                    if !alive[i] || scalar[i] {
                        continue;
                    }
                    let keep = match &children[i] {
                        Some(ids) => ids.iter().all(|&c| alive[c]),
                        None => false,
                    };
                    if !keep {
                        alive[i] = false;
                        changed = true;
                    }
                }
                if !changed {
                    return alive;
                }
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BruteForceError {
    BudgetExceeded { k: u32, max_k: u32 },
    Automaton(AutomatonError),
}

impl fmt::Display for BruteForceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BruteForceError::BudgetExceeded { k, max_k } => {
                write!(f, "brute-force length {k} exceeds the 4^k budget (max {max_k})")
            }
            BruteForceError::Automaton(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for BruteForceError {}

/// Independent oracle for [`UnitAutomaton::count_words`]: walk all `4^k`
/// letter words by depth-first search, applying the action directly and
/// testing the unit predicate on the final polynomial. No transfer matrix
/// anywhere. Capped at `k <= 10`.
pub fn brute_force_count(
    s: &NcPoly,
    policy: UnitPolicy,
    k: u32,
) -> Result<BigUint, BruteForceError> {
    const MAX_K: u32 = 10;
    if k > MAX_K {
        return Err(BruteForceError::BudgetExceeded { k, max_k: MAX_K });
    }
    let predicate: Box<dyn Fn(&NcPoly) -> bool> = match policy {
        UnitPolicy::Scalar => Box::new(|t: &NcPoly| t.as_nonzero_scalar().is_some()),
        UnitPolicy::RecursiveMonomial => {
            // The fixpoint needs the action closure of s once; descendants
            // stay inside it.
            let aut = UnitAutomaton::build(s, policy, usize::MAX)
                .map_err(BruteForceError::Automaton)?;
            let units: std::collections::HashSet<NcPoly> = aut
                .states()
                .iter()
                .enumerate()
                .filter(|&(i, _)| aut.is_accepting(i))
                .map(|(_, p)| p.clone())
                .collect();
            Box::new(move |t: &NcPoly| units.contains(t))
        }
    };

    fn walk(t: &NcPoly, remaining: u32, pred: &dyn Fn(&NcPoly) -> bool) -> BigUint {
        if remaining == 0 {
            return if pred(t) {
                BigUint::one()
            } else {
                BigUint::zero()
            };
        }
        if t.is_zero() {
            // 0 is absorbing and never a unit.
            return BigUint::zero();
        }
        Letter::ALL
            .iter()
            .map(|&l| walk(&act(t, l), remaining - 1, pred))
            .sum()
    }

    Ok(walk(s, k, &*predicate))
}

/// Classification of the closed base set `B' = {0} u {g} u {g x} u {g y}`
/// over the nonzero scalars `g` of the field.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BaseState {
    Zero,
    Scalar,
    ScalarX,
    ScalarY,
}

/// `Some(class)` when the polynomial belongs to the base set.
pub fn classify_base(p: &NcPoly) -> Option<BaseState> {
    if p.is_zero() {
        return Some(BaseState::Zero);
    }
    let (w, _) = p.as_monomial()?;
    match w.letters() {
        [] => Some(BaseState::Scalar),
        [Generator::X] => Some(BaseState::ScalarX),
        [Generator::Y] => Some(BaseState::ScalarY),
        _ => None,
    }
}

/// `(mu, nu, first valid k)` for a base state under a policy. The values
/// are pinned by the brute-force oracle in the test suite.
fn base_values(class: BaseState, policy: UnitPolicy) -> (BigRational, BigRational, u32) {
    let one = BigRational::one();
    let zero = BigRational::zero();
    match (class, policy) {
        (BaseState::Zero, _) => (zero.clone(), zero, 0),
        (BaseState::Scalar, _) => (one, zero, 0),
        // g x: counts 0, 0, 2, 6, ... = 2^k - 2 from k >= 1
        (BaseState::ScalarX, UnitPolicy::Scalar) => (one.clone(), one, 1),
        // g y: counts 0, 2, 4, ... = 2^k from k >= 1
        (BaseState::ScalarY, UnitPolicy::Scalar) => (one, zero, 1),
        // with generators as units the count is 2^k from k >= 0
        (BaseState::ScalarX, UnitPolicy::RecursiveMonomial) => (one, zero, 0),
        (BaseState::ScalarY, UnitPolicy::RecursiveMonomial) => (one, zero, 0),
    }
}

/// The asymptotic count model of a polynomial: exact `mu` and `nu` with the
/// first length `k_s` from which `count(k) = 2^k mu - 2 nu` has been
/// verified to hold.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CountModel {
    pub mu: BigRational,
    pub nu: BigRational,
    /// First `k` of the machine-validated range.
    pub k_s: u32,
    /// The BFS layer at which every descendant lies in the base set.
    pub base_layer: u32,
    /// `nu` is asserted to be a nonnegative integer by the theory; this
    /// flag records whether it actually is.
    pub nu_is_integer: bool,
    /// Inclusive range of `k` over which the law was checked exactly.
    pub validated: (u32, u32),
    pub automaton_states: usize,
}

impl CountModel {
    /// `2^k mu - 2 nu`.
    pub fn predicted(&self, k: u32) -> BigRational {
        let pow = BigRational::from(BigInt::from(1u8) << k);
        pow * &self.mu - BigRational::from(BigInt::from(2)) * &self.nu
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MuNuError {
    Automaton(AutomatonError),
    /// No BFS layer within the cap landed inside the base set. With a
    /// generous cap this would contradict the finite-closure claim, so it
    /// is surfaced loudly rather than silently extended.
    DepthCapExceeded { cap: u32 },
    /// A cycle among non-base reachable states: back-propagation cannot
    /// ground out. This would likewise falsify the finite-closure claim.
    CycleOutsideBase { state: String },
    /// The computed model disagrees with the exact count at some length —
    /// falsification evidence, never swallowed.
    CountLawMismatch {
        k: u32,
        counted: BigUint,
        predicted: BigRational,
    },
}

impl fmt::Display for MuNuError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MuNuError::Automaton(e) => write!(f, "{e}"),
            MuNuError::DepthCapExceeded { cap } => {
                write!(f, "no BFS layer within depth cap {cap} closed into the base set")
            }
            MuNuError::CycleOutsideBase { state } => {
                write!(f, "cycle through non-base state '{state}' during back-propagation")
            }
            MuNuError::CountLawMismatch { k, counted, predicted } => write!(
                f,
                "count law mismatch at k = {k}: counted {counted}, predicted {predicted}"
            ),
        }
    }
}

impl std::error::Error for MuNuError {}

#[derive(Clone, Copy, Debug)]
pub struct MuNuOptions {
    pub max_states: usize,
    /// BFS depth cap for the base-closure search; `None` uses
    /// `4 * (deg s + 1)`.
    pub depth_cap: Option<u32>,
    /// How many lengths past `k_s` to validate.
    pub validate_span: u32,
}

impl Default for MuNuOptions {
    fn default() -> MuNuOptions {
        MuNuOptions {
            max_states: 100_000,
            depth_cap: None,
            validate_span: 8,
        }
    }
}

/// Compute `mu(s)` and `nu(s)` exactly.
///
/// The automaton is closed, the least BFS layer contained in the base set
/// is located, values are back-propagated through the (acyclic) non-base
/// part via `mu(t) = (1/2) sum_l mu(t.l)` and `nu(t) = sum_l nu(t.l)`, and
/// finally the model is validated against exact counts on a window of
/// lengths. Every failure mode is a typed error.
pub fn compute_mu_nu(
    s: &NcPoly,
    policy: UnitPolicy,
    options: &MuNuOptions,
) -> Result<CountModel, MuNuError> {
    let aut = UnitAutomaton::build(s, policy, options.max_states).map_err(MuNuError::Automaton)?;
    compute_mu_nu_on(&aut, options)
}

/// As [`compute_mu_nu`], reusing an already-built automaton.
pub fn compute_mu_nu_on(
    aut: &UnitAutomaton,
    options: &MuNuOptions,
) -> Result<CountModel, MuNuError> {
    let n = aut.num_states();
    let base: Vec<Option<BaseState>> = aut.states().iter().map(classify_base).collect();

    // Least BFS layer (set of exactly-t-step images) inside the base set.
    let cap = options.depth_cap.unwrap_or_else(|| {
        let deg = aut.states()[aut.initial()].degree().unwrap_or(0) as u32;
        4 * (deg + 1)
    });
    let mut layer = vec![false; n];
    layer[aut.initial()] = true;
    let mut base_layer = None;
    for t in 0..=cap {
        if (0..n).all(|i| !layer[i] || base[i].is_some()) {
            base_layer = Some(t);
            break;
        }
        let mut next = vec![false; n];
        for i in 0..n {
            if layer[i] {
                for &l in &Letter::ALL {
                    next[aut.transition(i, l)] = true;
                }
            }
        }
        layer = next;
    }
    let base_layer = base_layer.ok_or(MuNuError::DepthCapExceeded { cap })?;

    // Back-propagate (mu, nu, first-valid-k) by memoized DFS; a non-base
    // state revisited while in progress is a cycle.
    #[derive(Clone)]
    enum Mark {
        Unvisited,
        InProgress,
        Done(BigRational, BigRational, u32),
    }
    let mut marks = vec![Mark::Unvisited; n];

    fn visit(
        id: usize,
        aut: &UnitAutomaton,
        base: &[Option<BaseState>],
        marks: &mut [Mark],
    ) -> Result<(BigRational, BigRational, u32), MuNuError> {
        if let Mark::Done(mu, nu, k) = &marks[id] {
            return Ok((mu.clone(), nu.clone(), *k));
        }
        if matches!(marks[id], Mark::InProgress) {
            return Err(MuNuError::CycleOutsideBase {
                state: aut.states()[id].to_string(),
            });
        }
        let result = if let Some(class) = base[id] {
            base_values(class, aut.policy())
        } else {
            marks[id] = Mark::InProgress;
            let mut mu = BigRational::zero();
            let mut nu = BigRational::zero();
            let mut k = 0u32;
            for &l in &Letter::ALL {
                let (cmu, cnu, ck) = visit(aut.transition(id, l), aut, base, marks)?;
                mu += cmu;
                nu += cnu;
                k = k.max(ck);
            }
            mu /= BigRational::from(BigInt::from(2));
            (mu, nu, k + 1)
        };
        marks[id] = Mark::Done(result.0.clone(), result.1.clone(), result.2);
        Ok(result)
    }

    let (mu, nu, k_rec) = visit(aut.initial(), aut, &base, &mut marks)?;

    // The recursive threshold is sound but can overshoot; tighten it to the
    // least k from which the law actually holds, then validate the window.
    let span = options.validate_span;
    let counts = aut.count_words_range(k_rec + span);
    let model_at = |k: u32| -> BigRational {
        BigRational::from(BigInt::from(1u8) << k) * &mu - BigRational::from(BigInt::from(2)) * &nu
    };
    let mut k_s = k_rec;
    while k_s > 0 && BigRational::from(BigInt::from(counts[(k_s - 1) as usize].clone())) == model_at(k_s - 1)
    {
        k_s -= 1;
    }
    for k in k_s..=k_rec + span {
        let counted = &counts[k as usize];
        let predicted = model_at(k);
        if BigRational::from(BigInt::from(counted.clone())) != predicted {
            return Err(MuNuError::CountLawMismatch {
                k,
                counted: counted.clone(),
                predicted,
            });
        }
    }

    Ok(CountModel {
        nu_is_integer: nu.is_integer() && !nu.numer().is_negative(),
        mu,
        nu,
        k_s,
        base_layer,
        validated: (k_s, k_rec + span),
        automaton_states: n,
    })
}

/// The fold `sigma(r, s) = (r + y s)` with `x -> xy, y -> yx` substituted
/// afterwards. On arguments whose morphism image is diagonal, `mu` is
/// additive: `mu(sigma(r, s)) = mu(r) + mu(s)`.
pub fn sigma(r: &NcPoly, s: &NcPoly) -> NcPoly {
    assert_eq!(r.field(), s.field(), "coefficient field mismatch");
    let y = NcPoly::generator(r.field(), Generator::Y);
    (r + &(&y * s)).subst_xy_yx()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OmegaError {
    Negative,
    NotDyadic,
    /// The construction would need absurdly long words or too many terms.
    TooLarge,
}

impl fmt::Display for OmegaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OmegaError::Negative => write!(f, "alpha must be nonnegative"),
            OmegaError::NotDyadic => {
                write!(f, "alpha must be dyadic (denominator a power of two)")
            }
            OmegaError::TooLarge => write!(f, "alpha is too large or too fine for construction"),
        }
    }
}

impl std::error::Error for OmegaError {}

/// `1 - (xy)^(2^k)`, the generating elements of the construction.
pub fn omega_generator(field: Field, k: u32) -> NcPoly {
    let letters = (0..1u64 << k).flat_map(|_| [Generator::X, Generator::Y]);
    let monomial = NcPoly::monomial(field, Word::from_letters(letters));
    &NcPoly::one(field) - &monomial
}

/// Build a polynomial with `mu = alpha` for a nonnegative dyadic `alpha`.
///
/// `alpha` is written as a sum of terms `2^(1-k)` with `k >= 0` (binary
/// digits at exponents above 1 split into repeated `mu = 2` terms), each
/// term is realized as `1 - (xy)^(2^k)`, and the terms are folded with
/// [`sigma`]. `alpha = 0` yields the zero polynomial.
pub fn omega_construct(alpha: &BigRational, field: Field) -> Result<NcPoly, OmegaError> {
    if alpha.numer().is_negative() {
        return Err(OmegaError::Negative);
    }
    if alpha.is_zero() {
        return Ok(NcPoly::zero(field));
    }
    let den = alpha.denom().to_biguint().expect("positive denominator");
    if den.count_ones() != 1 {
        return Err(OmegaError::NotDyadic);
    }
    let q = den.trailing_zeros().unwrap_or(0);
    if q > 18 {
        return Err(OmegaError::TooLarge);
    }
    let num = alpha.numer().to_biguint().expect("nonnegative numerator");

    // k-values of the terms 2^{1-k}, largest term first.
    let mut ks: Vec<u32> = Vec::new();
    for (i, digit) in num.to_radix_le(2).iter().enumerate() {
        if *digit == 0 {
            continue;
        }
        let e = i as i64 - q as i64; // binary digit at exponent e
        if e <= 1 {
            ks.push((1 - e) as u32);
        } else {
            // 2^e = 2^{e-1} copies of the mu = 2 generator
            let copies = 1u64.checked_shl((e - 1) as u32).ok_or(OmegaError::TooLarge)?;
            if copies > 4096 {
                return Err(OmegaError::TooLarge);
            }
            ks.extend(std::iter::repeat(0).take(copies as usize));
        }
    }
    ks.sort_unstable();
    if ks.len() > 4096 {
        return Err(OmegaError::TooLarge);
    }

    let mut acc = omega_generator(field, ks[0]);
    for &k in &ks[1..] {
        acc = sigma(&acc, &omega_generator(field, k));
    }
    Ok(acc)
}
