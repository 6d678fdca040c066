//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (run with `--nocapture` to see them) and holding to its runtime budget.
//!
//! Criterion 4 is split: the odd-parameter structural claim and the
//! spectrum consequence hold and are asserted green; the even-parameter
//! structural claim as published is falsified by the computed matrices
//! (they are the half-swap `[[0, I], [I, 0]]`, not `diag(I, I)`), so that
//! test is expected to stay red. See `criterion_4_parity_structure_even_as_published`.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use selfsim_core::arith::{rat, rat_int, BitMatrix, ExactMatrix, UniPoly};
use selfsim_core::freealg::{parse_poly, parse_word, Field, Generator, NcPoly, Word};
use selfsim_core::langunits::{
    brute_force_count, compute_mu_nu, omega_construct, MuNuOptions, UnitAutomaton, UnitPolicy,
};
use selfsim_core::selfsim::{
    act, act_word, psi, rle_correspondence_check, AlgMatrix, Letter, MorphismParams,
};
use selfsim_core::spectra::{
    c_k, chebyshev_root_witness, m_k, nilpotency_conjecture, parity_image,
    structural_check_parity, verify_recurrence, ParityClaim,
};

struct Criterion {
    name: &'static str,
    budget: Duration,
    start: Instant,
}

impl Criterion {
    fn begin(name: &'static str, budget_secs: u64) -> Criterion {
        Criterion {
            name,
            budget: Duration::from_secs(budget_secs),
            start: Instant::now(),
        }
    }

    fn pass(self) {
        let elapsed = self.start.elapsed();
        println!(
            "acceptance criterion {}: PASS ({} ms, budget {} s)",
            self.name,
            elapsed.as_millis(),
            self.budget.as_secs()
        );
        assert!(
            elapsed <= self.budget,
            "criterion {} exceeded its {} s budget ({} ms)",
            self.name,
            self.budget.as_secs(),
            elapsed.as_millis()
        );
    }
}

fn f2() -> Field {
    Field::fp(2).unwrap()
}

fn p2(text: &str) -> NcPoly {
    parse_poly(text, f2()).unwrap()
}

fn mat2(rows: [[&str; 2]; 2]) -> AlgMatrix {
    AlgMatrix::from_fn(f2(), 2, |i, j| p2(rows[i][j]))
}

fn default_params() -> MorphismParams {
    MorphismParams::DEFAULT
}

#[test]
fn criterion_1_psi_images_of_the_worked_example() {
    let c = Criterion::begin("1 (psi images)", 1);
    let s = p2("1+x^2yx^2+yx^2y");
    assert_eq!(
        psi(&s, default_params()),
        mat2([["1+yx", "xy^2x"], ["yx^2y", "1+xy"]])
    );
    let printed: [(&str, [[&str; 2]; 2]); 8] = [
        ("1+yx", [["1+y", "0"], ["0", "1+x"]]),
        ("1+xy", [["1+x", "0"], ["0", "1+y"]]),
        ("xy^2x", [["xy", "0"], ["0", "yx"]]),
        ("yx^2y", [["yx", "0"], ["0", "xy"]]),
        ("xy", [["x", "0"], ["0", "y"]]),
        ("yx", [["y", "0"], ["0", "x"]]),
        ("1+x", [["1", "x"], ["y", "1"]]),
        ("1+y", [["1", "1"], ["1", "1"]]),
    ];
    for (input, image) in printed {
        assert_eq!(psi(&p2(input), default_params()), mat2(image), "psi({input})");
    }
    // and the chained action lands on x
    assert_eq!(
        act_word(
            &s,
            &[Letter::new(0, 0), Letter::new(1, 1), Letter::new(0, 1)]
        ),
        p2("x")
    );
    c.pass();
}

#[test]
fn criterion_2_rle_correspondence_example() {
    let c = Criterion::begin("2 (RLE correspondence)", 1);
    let z = parse_word("xy^2x^4y^3").unwrap();
    let w = rle_correspondence_check(&z, MorphismParams::new(1, 2)).unwrap();
    assert!(w.verdict());
    assert_eq!(w.value_run_lengths, vec![1, 2, 4, 3]);
    // the two printed entry words, character for character
    assert_eq!(w.row_word, parse_word("xy^2x^2y^1x^1y^1x^1y^2x^2y^2").unwrap());
    assert_eq!(w.col_word, parse_word("yx^2y^2x^1y^1x^1y^1x^2y^2x^2").unwrap());
    assert_eq!(w.row_word.to_string(), "x*y^2*x^2*y*x*y*x*y^2*x^2*y^2");
    assert_eq!(w.col_word.to_string(), "y*x^2*y^2*x*y*x*y*x^2*y^2*x^2");
    c.pass();
}

#[test]
fn criterion_3_printed_matrices() {
    let c = Criterion::begin("3 (printed M_k(1,0))", 1);
    let m1 = ExactMatrix::from_fn(2, |i, j| if i + j == 1 { rat(1, 1) } else { rat(0, 1) });
    let m2 = ExactMatrix::from_fn(4, |i, j| {
        if (i < 2) != (j < 2) {
            rat(1, 2)
        } else {
            rat(0, 1)
        }
    });
    let m3_rows: [[i64; 8]; 8] = [
        [0, 0, 0, 0, 1, 0, 0, 1],
        [0, 0, 0, 0, 0, 1, 1, 0],
        [0, 0, 0, 0, 0, 1, 1, 0],
        [0, 0, 0, 0, 1, 0, 0, 1],
        [1, 0, 1, 0, 0, 0, 0, 0],
        [0, 1, 0, 1, 0, 0, 0, 0],
        [1, 0, 1, 0, 0, 0, 0, 0],
        [0, 1, 0, 1, 0, 0, 0, 0],
    ];
    let m3 = ExactMatrix::from_fn(8, |i, j| rat(m3_rows[i][j], 2));
    assert_eq!(m_k(default_params(), 1, 12).unwrap(), m1);
    assert_eq!(m_k(default_params(), 2, 12).unwrap(), m2);
    assert_eq!(m_k(default_params(), 3, 12).unwrap(), m3);
    c.pass();
}

#[test]
fn criterion_4_parity_structure_odd_and_spectrum() {
    let c = Criterion::begin("4 (parity: odd structure + spectra)", 10);
    for a in [1u32, 3] {
        for b in [1u32, 3] {
            for k in 1..=6u32 {
                let r = structural_check_parity(MorphismParams::new(a, b), k, 12).unwrap();
                assert_eq!(r.claim, ParityClaim::Exchange);
                assert!(r.matches_claim, "exchange structure at ({a},{b}), k={k}");
                assert!(r.spectrum_is_pm_one);
                assert_eq!(
                    r.plus_one_multiplicity + r.minus_one_multiplicity,
                    1 << k,
                    "charpoly is exactly (t-1)^p (t+1)^q"
                );
            }
        }
    }
    // The spectrum consequence also holds for the even pairs (their actual
    // structure is an involution), verified by exact division.
    for a in [0u32, 2, 4] {
        for b in [0u32, 2, 4] {
            for k in 1..=6u32 {
                let r = structural_check_parity(MorphismParams::new(a, b), k, 12).unwrap();
                assert!(r.spectrum_is_pm_one, "spectrum at ({a},{b}), k={k}");
                assert_eq!(r.plus_one_multiplicity + r.minus_one_multiplicity, 1 << k);
            }
        }
    }
    c.pass();
}

/// EXPECTED RED. The published claim says `M_k(a,b) = diag(I, I)` for even
/// `a, b`; the computed matrix is the half-swap `[[0, I], [I, 0]]` for every
/// even pair and every `k >= 1` (already `M_1(0,0) = J != I_2`). The claim
/// is asserted here exactly as stated so the falsification stays visible;
/// the true structure and the surviving eigenvalue consequence are covered
/// by `criterion_4_parity_structure_odd_and_spectrum` and the spectra module
/// tests.
#[test]
fn criterion_4_parity_structure_even_as_published() {
    let c = Criterion::begin("4 (parity: even structure as published)", 10);
    let mut failures = Vec::new();
    for a in [0u32, 2, 4] {
        for b in [0u32, 2, 4] {
            for k in 1..=6u32 {
                let r = structural_check_parity(MorphismParams::new(a, b), k, 12).unwrap();
                assert_eq!(r.claim, ParityClaim::BlockIdentity);
                if !r.matches_claim {
                    failures.push(format!(
                        "M_{k}({a},{b}) is {}, not the block identity",
                        r.actual
                            .map(|s| s.to_string())
                            .unwrap_or_else(|| "unrecognized".into())
                    ));
                }
            }
        }
    }
    if !failures.is_empty() {
        println!(
            "acceptance criterion 4 (even structure as published): FAIL — {} of 54 cells \
             falsify the published block-identity claim; first: {}",
            failures.len(),
            failures[0]
        );
    }
    assert!(
        failures.is_empty(),
        "published even-parity structural claim falsified ({} cells): {}; \
         the computed matrices are half-swaps, whose spectrum is still {{-1, 1}}",
        failures.len(),
        failures[0]
    );
    c.pass();
}

/// The printed factored characteristic polynomials `C_0 .. C_8` (with the
/// `x^2` misprint in `C_6` read as `t^2`, consistent with `C_7`/`C_8`).
fn printed_c(k: u32) -> UniPoly {
    let t2m1 = UniPoly::from_rats(&[(-1, 1), (0, 1), (1, 1)]);
    let t2mh = UniPoly::from_rats(&[(-1, 2), (0, 1), (1, 1)]);
    let quartic = UniPoly::from_rats(&[(1, 8), (0, 1), (-1, 1), (0, 1), (1, 1)]);
    let octic = UniPoly::from_rats(&[
        (1, 128),
        (0, 1),
        (-1, 4),
        (0, 1),
        (5, 4),
        (0, 1),
        (-2, 1),
        (0, 1),
        (1, 1),
    ]);
    let t = |e: usize| UniPoly::monomial(rat_int(1), e);
    match k {
        0 => UniPoly::from_rats(&[(-1, 1), (1, 1)]),
        1 => t2m1,
        2 => &t2m1 * &t(2),
        3 => &t2m1 * &t(6),
        4 => &(&t2m1 * &t(10)) * &t2mh.pow(2),
        5 => &(&t2m1 * &t(18)) * &t2mh.pow(6),
        6 => &(&(&t2m1 * &t(34)) * &t2mh.pow(10)) * &quartic.pow(2),
        7 => &(&(&t2m1 * &t(66)) * &t2mh.pow(18)) * &quartic.pow(6),
        8 => &(&(&(&t2m1 * &t(130)) * &t2mh.pow(34)) * &quartic.pow(10)) * &octic.pow(2),
        _ => unreachable!(),
    }
}

#[test]
fn criterion_5_characteristic_polynomials_and_recurrence() {
    let c = Criterion::begin("5 (C_0..C_8 + recurrence)", 600);
    for k in 0..=8u32 {
        let got = c_k(k, 8).unwrap();
        assert_eq!(got, printed_c(k), "C_{k} differs from the printed form");
    }
    for k in 2..=8u32 {
        let r = verify_recurrence(k, 8).unwrap();
        assert!(r.holds, "recurrence fails at k = {k}");
    }
    c.pass();
}

#[test]
fn criterion_6_chebyshev_witness() {
    let c = Criterion::begin("6 (Chebyshev witness)", 60);
    for k in 1..=8u32 {
        let w = chebyshev_root_witness(k, 8).unwrap();
        assert!(w.divides, "squarefree(C_{k}) does not divide T_(2^{k})^2 - 1");
        assert!(w.verdict(), "factor witness missing at k = {k}");
    }
    c.pass();
}

fn corpus() -> Vec<NcPoly> {
    let mut out: Vec<NcPoly> = [
        "0",
        "1",
        "x",
        "y",
        "1+x",
        "1+y",
        "1+x*y",
        "1+x^2yx^2+yx^2y",
        "1+xyxy",
        "1+xyxyxyxy",
    ]
    .iter()
    .map(|t| p2(t))
    .collect();
    for alpha in [rat(1, 2), rat(1, 1), rat(3, 2), rat(7, 4)] {
        out.push(omega_construct(&alpha, f2()).unwrap());
    }
    out
}

#[test]
fn criterion_7_counting_law_on_the_corpus() {
    let c = Criterion::begin("7 (counting law)", 120);
    for s in corpus() {
        let aut = UnitAutomaton::build(&s, UnitPolicy::Scalar, 100_000).unwrap();
        for k in 0..=8u32 {
            assert_eq!(
                aut.count_words(k),
                brute_force_count(&s, UnitPolicy::Scalar, k).unwrap(),
                "oracle mismatch for {s} at k = {k}"
            );
        }
        let model = compute_mu_nu(&s, UnitPolicy::Scalar, &MuNuOptions::default()).unwrap();
        for k in model.k_s..=model.k_s + 8 {
            let counted = aut.count_words(k);
            assert_eq!(
                BigRational::from(BigInt::from(counted)),
                model.predicted(k),
                "count law fails for {s} at k = {k}"
            );
        }
        assert!(model.nu_is_integer, "nu not a nonnegative integer for {s}");
    }
    c.pass();
}

#[test]
fn criterion_8_density_construction() {
    let c = Criterion::begin("8 (density construction)", 120);
    for alpha in [
        rat(0, 1),
        rat(1, 2),
        rat(1, 1),
        rat(3, 2),
        rat(7, 4),
        rat(5, 2),
        rat(2, 1),
    ] {
        let s = omega_construct(&alpha, f2()).unwrap();
        let model = compute_mu_nu(&s, UnitPolicy::Scalar, &MuNuOptions::default()).unwrap();
        assert_eq!(model.mu, alpha, "mu(omega_construct({alpha})) != {alpha}");
    }
    c.pass();
}

#[test]
fn criterion_9_nilpotency_sweep() {
    let c = Criterion::begin("9 (nilpotency sweep)", 300);
    for a in 0..=4u32 {
        for b in 0..=4u32 {
            for k in 1..=10u32 {
                let r = nilpotency_conjecture(MorphismParams::new(a, b), k, 12).unwrap();
                assert!(r.integral, "2 M_{k}({a},{b}) has a non-integer entry");
                let index = r.index.unwrap_or_else(|| {
                    panic!("2 M_{k}({a},{b}) not nilpotent mod 2 within 2^{k}")
                });
                assert!(index <= 1 << k);
            }
        }
    }
    c.pass();
}

/// Golden hashes pinned from the first accepted run; the published figures
/// are the visual reference only, so the pin guards against regressions
/// rather than against external pixel data.
const FIGURE_1_SHA256: &str = "0d57ea038ad62460198c5e20b3c1c61c52779b2038b03dd950bc2a361b8700a8";
const FIGURE_2_SHA256: &str = "ae4cbd75996361bf9e8dac38d27eecd8f53fc2627d9e1e75be48b06d5a6607d0";

fn sha256_hex(bytes: &[u8]) -> String {
    use sha2::{Digest, Sha256};
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

#[test]
fn criterion_10_parity_figures() {
    let c = Criterion::begin("10 (parity figures)", 60);
    let fig1 = parity_image(MorphismParams::new(1, 0), 10, 15, 12).unwrap();
    let fig2 = parity_image(MorphismParams::new(1, 2), 10, 15, 12).unwrap();
    for fig in [&fig1, &fig2] {
        assert_eq!(fig.size(), 1024);
        let pbm = fig.to_pbm_p4();
        assert!(pbm.starts_with(b"P4\n1024 1024\n"));
        assert_eq!(pbm.len(), 13 + 1024 * 128);
        // the 15th power is not yet even everywhere: black points exist
        assert!(fig.black_count() > 0);
    }
    let h1 = sha256_hex(&fig1.to_pbm_p4());
    let h2 = sha256_hex(&fig2.to_pbm_p4());
    assert_eq!(h1, FIGURE_1_SHA256, "figure 1 drifted from the pinned golden");
    assert_eq!(h2, FIGURE_2_SHA256, "figure 2 drifted from the pinned golden");
    c.pass();
}

#[test]
fn criterion_11_property_suites() {
    use rand::{rngs::StdRng, Rng, SeedableRng};
    let c = Criterion::begin("11 (property suites)", 120);
    let mut rng = StdRng::seed_from_u64(0x5e1f51);

    let mut random_word = |rng: &mut StdRng, max_len: usize| -> Word {
        let len = rng.gen_range(0..=max_len);
        Word::from_letters((0..len).map(|_| {
            if rng.gen_bool(0.5) {
                Generator::X
            } else {
                Generator::Y
            }
        }))
    };
    let random_poly = |rng: &mut StdRng, rw: &mut dyn FnMut(&mut StdRng, usize) -> Word| -> NcPoly {
        let terms = rng.gen_range(0..5);
        NcPoly::from_terms(
            Field::Fp(2),
            (0..terms).map(|_| (rw(rng, 5), Field::Fp(2).one())),
        )
    };

    // morphism laws, all params <= 3
    for a in 0..=3u32 {
        for b in 0..=3u32 {
            let params = MorphismParams::new(a, b);
            for _ in 0..10 {
                let p = random_poly(&mut rng, &mut random_word);
                let q = random_poly(&mut rng, &mut random_word);
                assert_eq!(psi(&(&p + &q), params), psi(&p, params).add(&psi(&q, params)));
                assert_eq!(psi(&(&p * &q), params), psi(&p, params).mul(&psi(&q, params)));
            }
        }
    }

    // action associativity over concatenation
    for _ in 0..50 {
        let s = random_poly(&mut rng, &mut random_word);
        let u: Vec<Letter> = (0..rng.gen_range(0..4)).map(|_| Letter::ALL[rng.gen_range(0..4)]).collect();
        let v: Vec<Letter> = (0..rng.gen_range(0..4)).map(|_| Letter::ALL[rng.gen_range(0..4)]).collect();
        let mut uv = u.clone();
        uv.extend(&v);
        assert_eq!(act_word(&s, &uv), act_word(&act_word(&s, &u), &v));
    }

    // automaton determinism and completeness on the corpus
    for s in corpus() {
        let aut = UnitAutomaton::build(&s, UnitPolicy::Scalar, 100_000).unwrap();
        for id in 0..aut.num_states() {
            for &l in &Letter::ALL {
                assert_eq!(&act(&aut.states()[id], l), &aut.states()[aut.transition(id, l)]);
            }
        }
    }

    // RLE round-trip, 1000 random words of length <= 64
    for _ in 0..1000 {
        let w = random_word(&mut rng, 64);
        assert_eq!(w.rle().decode(), w);
    }

    // base-set closure over three fields
    for p in [2u64, 3, 5] {
        let field = Field::fp(p).unwrap();
        for gamma in 1..p {
            let g = field.from_i64(gamma as i64);
            for base in [
                NcPoly::scalar(field, g.clone()),
                NcPoly::generator(field, Generator::X).scale(&g),
                NcPoly::generator(field, Generator::Y).scale(&g),
                NcPoly::zero(field),
            ] {
                for &l in &Letter::ALL {
                    assert!(
                        selfsim_core::langunits::classify_base(&act(&base, l)).is_some(),
                        "base set not closed over F_{p}"
                    );
                }
            }
        }
    }

    // the parity-transport shortcut behind the figures
    for _ in 0..10 {
        let n = rng.gen_range(2..=6usize);
        let m = ExactMatrix::from_fn(n, |_, _| rat_int(rng.gen_range(0..10)));
        let e = rng.gen_range(1..=6u64);
        let int_pow = m.pow(e);
        let bits = BitMatrix::from_fn(n, |i, j| {
            use num_integer::Integer;
            m.get(i, j).numer().is_odd()
        });
        let bit_pow = bits.pow(e);
        for i in 0..n {
            for j in 0..n {
                use num_integer::Integer;
                assert_eq!(int_pow.get(i, j).numer().is_odd(), bit_pow.get(i, j));
            }
        }
    }

    // canonical-form sanity: p - p = 0 over Q, p + p = 0 over F_2
    let one = NcPoly::one(Field::Q);
    assert!( (&one - &one).is_zero());
    let p = p2("1 + x + y*x");
    assert!((&p + &p).is_zero());
    assert!(BigRational::zero().is_zero() && BigRational::one().is_one());

    c.pass();
}
