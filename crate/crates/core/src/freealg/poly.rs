//! Noncommutative polynomials: finite sums of `coefficient * word`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Coeff, Field, Generator, Word};

/// An element of the free algebra over the chosen coefficient field.
///
/// Invariants: no stored zero coefficients; all coefficients belong to
/// `field`; terms are kept in the canonical graded-lex order by the
/// `BTreeMap`. Structural equality is therefore algebra equality, and a
/// polynomial can act as a map key (automaton state).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NcPoly {
    field: Field,
    terms: BTreeMap<Word, Coeff>,
}

impl NcPoly {
    pub fn zero(field: Field) -> NcPoly {
        NcPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: Field) -> NcPoly {
        NcPoly::scalar(field, field.one())
    }

    pub fn scalar(field: Field, c: Coeff) -> NcPoly {
        NcPoly::from_terms(field, [(Word::empty(), c)])
    }

    /// The monomial `1 * w`.
    pub fn monomial(field: Field, w: Word) -> NcPoly {
        NcPoly::from_terms(field, [(w, field.one())])
    }

    pub fn generator(field: Field, g: Generator) -> NcPoly {
        NcPoly::monomial(field, Word::gen(g))
    }

    /// Accumulate terms, dropping zero totals.
    pub fn from_terms(field: Field, terms: impl IntoIterator<Item = (Word, Coeff)>) -> NcPoly {
        let mut map: BTreeMap<Word, Coeff> = BTreeMap::new();
        for (w, c) in terms {
            assert_eq!(c.field(), field, "coefficient field mismatch");
            if c.is_zero() {
                continue;
            }
            match map.entry(w) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = e.get().add(&c);
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        e.insert(sum);
                    }
                }
            }
        }
        NcPoly { field, terms: map }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Coeff {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Longest word length with a nonzero coefficient; `None` is the
    /// degree of the zero polynomial (the "minus infinity" case).
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    /// The coefficient when the polynomial is a nonzero scalar.
    pub fn as_nonzero_scalar(&self) -> Option<&Coeff> {
        if self.terms.len() != 1 {
            return None;
        }
        let (w, c) = self.terms.iter().next().unwrap();
        w.is_empty().then_some(c)
    }

    /// `(word, coefficient)` when the polynomial has exactly one term.
    pub fn as_monomial(&self) -> Option<(&Word, &Coeff)> {
        if self.terms.len() != 1 {
            return None;
        }
        self.terms.iter().next()
    }

    /// Sum of all coefficients: the image under `x -> 1, y -> 1`.
    pub fn eval_ones(&self) -> Coeff {
        self.terms
            .values()
            .fold(self.field.zero(), |acc, c| acc.add(c))
    }

    pub fn scale(&self, c: &Coeff) -> NcPoly {
        assert_eq!(c.field(), self.field, "coefficient field mismatch");
        if c.is_zero() {
            return NcPoly::zero(self.field);
        }
        NcPoly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(w, t)| (w.clone(), t.mul(c)))
                .collect(),
        }
    }

    /// The unique algebra endomorphism sending `x` and `y` to the given
    /// images, applied to `self`.
    pub fn substitute(&self, image_x: &NcPoly, image_y: &NcPoly) -> NcPoly {
        assert_eq!(self.field, image_x.field(), "coefficient field mismatch");
        assert_eq!(self.field, image_y.field(), "coefficient field mismatch");
        let mut acc = NcPoly::zero(self.field);
        for (w, c) in &self.terms {
            let mut prod = NcPoly::scalar(self.field, c.clone());
            for g in w.letters() {
                prod = &prod
                    * match g {
                        Generator::X => image_x,
                        Generator::Y => image_y,
                    };
            }
            acc = &acc + &prod;
        }
        acc
    }

    /// Swap the generators: `p(x, y) -> p(y, x)`.
    pub fn swap_xy(&self) -> NcPoly {
        self.map_words(|w| Word::from_letters(w.letters().iter().map(|g| g.other())))
    }

    /// The substitution `x -> xy, y -> yx`, done at the word level.
    pub fn subst_xy_yx(&self) -> NcPoly {
        self.map_words(|w| {
            Word::from_letters(w.letters().iter().flat_map(|g| match g {
                Generator::X => [Generator::X, Generator::Y],
                Generator::Y => [Generator::Y, Generator::X],
            }))
        })
    }

    fn map_words(&self, f: impl Fn(&Word) -> Word) -> NcPoly {
        NcPoly::from_terms(self.field, self.terms.iter().map(|(w, c)| (f(w), c.clone())))
    }
}

impl Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        assert_eq!(self.field, rhs.field, "coefficient field mismatch");
        NcPoly::from_terms(
            self.field,
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(w, c)| (w.clone(), c.clone())),
        )
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        self + &-rhs
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.neg()))
                .collect(),
        }
    }
}

impl Mul for &NcPoly {
    type Output = NcPoly;

    /// Noncommutative product: words concatenate.
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        assert_eq!(self.field, rhs.field, "coefficient field mismatch");
        NcPoly::from_terms(
            self.field,
            self.terms.iter().flat_map(|(w1, c1)| {
                rhs.terms
                    .iter()
                    .map(move |(w2, c2)| (w1.concat(w2), c1.mul(c2)))
            }),
        )
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for NcPoly {
            type Output = NcPoly;
            fn $method(self, rhs: NcPoly) -> NcPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&NcPoly> for NcPoly {
            type Output = NcPoly;
            fn $method(self, rhs: &NcPoly) -> NcPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if w.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{mag}*{w}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_poly;
    use super::*;
    use crate::freealg::Generator::{X, Y};
    use proptest::prelude::*;

    fn f2() -> Field {
        Field::fp(2).unwrap()
    }

    #[test]
    fn product_expands_over_f2() {
        // (1 + x)(1 + y) = 1 + x + y + xy
        let f = f2();
        let p = &NcPoly::one(f) + &NcPoly::generator(f, X);
        let q = &NcPoly::one(f) + &NcPoly::generator(f, Y);
        assert_eq!(&p * &q, parse_poly("1 + x + y + x*y", f).unwrap());
    }

    #[test]
    fn generators_do_not_commute() {
        let f = f2();
        let xy = &NcPoly::generator(f, X) * &NcPoly::generator(f, Y);
        let yx = &NcPoly::generator(f, Y) * &NcPoly::generator(f, X);
        assert_ne!(xy, yx);
    }

    #[test]
    fn char_two_square_kills_cross_terms() {
        // (1 + x)^2 = 1 + x^2 over F_2
        let f = f2();
        let p = &NcPoly::one(f) + &NcPoly::generator(f, X);
        assert_eq!(&p * &p, parse_poly("1 + x^2", f).unwrap());
    }

    #[test]
    fn eval_ones_examples() {
        let p = parse_poly("1 + x + x*y", Field::Q).unwrap();
        assert_eq!(p.eval_ones(), Field::Q.from_i64(3));
        assert_eq!(NcPoly::zero(Field::Q).eval_ones(), Field::Q.zero());
        // ((x+y)/2)^2 has four terms, each 1/4.
        let h = parse_poly("1/2*x + 1/2*y", Field::Q).unwrap();
        assert_eq!((&h * &h).eval_ones(), Field::Q.one());
    }

    #[test]
    fn degree_examples() {
        let f = f2();
        let s = parse_poly("1+x^2yx^2+yx^2y", f).unwrap();
        assert_eq!(s.degree(), Some(5));
        assert_eq!(NcPoly::one(f).degree(), Some(0));
        assert_eq!(NcPoly::zero(f).degree(), None);
    }

    #[test]
    fn substitution_helpers() {
        let f = f2();
        let p = parse_poly("x + y", f).unwrap();
        assert_eq!(p.subst_xy_yx(), parse_poly("x*y + y*x", f).unwrap());
        let q = parse_poly("1 + y*x", f).unwrap();
        assert_eq!(q.swap_xy(), parse_poly("1 + x*y", f).unwrap());
        // word-level shortcuts agree with the generic endomorphism
        let im_x = parse_poly("x*y", f).unwrap();
        let im_y = parse_poly("y*x", f).unwrap();
        let s = parse_poly("1+x^2yx^2+yx^2y", f).unwrap();
        assert_eq!(s.subst_xy_yx(), s.substitute(&im_x, &im_y));
        let gy = NcPoly::generator(f, Y);
        let gx = NcPoly::generator(f, X);
        assert_eq!(s.swap_xy(), s.substitute(&gy, &gx));
    }

    #[test]
    fn scalar_and_monomial_views() {
        let f = f2();
        assert!(NcPoly::one(f).as_nonzero_scalar().is_some());
        assert!(NcPoly::zero(f).as_nonzero_scalar().is_none());
        assert!(NcPoly::generator(f, X).as_nonzero_scalar().is_none());
        assert!(NcPoly::generator(f, X).as_monomial().is_some());
        let two_terms = parse_poly("1 + x", f).unwrap();
        assert!(two_terms.as_monomial().is_none());
    }

    fn arb_poly(field: Field) -> impl Strategy<Value = NcPoly> {
        let coeff = match field {
            Field::Q => (-5i64..6).boxed(),
            Field::Fp(p) => (0i64..p as i64).boxed(),
        };
        prop::collection::vec(
            (prop::collection::vec(prop::bool::ANY, 0..5), coeff),
            0..8,
        )
        .prop_map(move |terms| {
            NcPoly::from_terms(
                field,
                terms.into_iter().map(|(ls, c)| {
                    (
                        Word::from_letters(ls.iter().map(|&b| if b { X } else { Y })),
                        field.from_i64(c),
                    )
                }),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms_over_q(
            p in arb_poly(Field::Q),
            q in arb_poly(Field::Q),
            r in arb_poly(Field::Q),
        ) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
            prop_assert_eq!(&p * &NcPoly::one(Field::Q), p.clone());
            prop_assert_eq!(&NcPoly::one(Field::Q) * &p, p.clone());
            // canonical form: p - p = 0
            prop_assert_eq!(&p - &p, NcPoly::zero(Field::Q));
        }

        #[test]
        fn ring_axioms_over_f2(
            p in arb_poly(Field::Fp(2)),
            q in arb_poly(Field::Fp(2)),
            r in arb_poly(Field::Fp(2)),
        ) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            // characteristic 2: p + p = 0
            prop_assert_eq!(&p + &p, NcPoly::zero(Field::Fp(2)));
        }

        #[test]
        fn substitute_is_a_morphism(
            p in arb_poly(Field::Fp(2)),
            q in arb_poly(Field::Fp(2)),
        ) {
            let f = Field::Fp(2);
            let im_x = parse_poly("x*y", f).unwrap();
            let im_y = parse_poly("1 + y*x", f).unwrap();
            let lhs = (&p * &q).substitute(&im_x, &im_y);
            let rhs = &p.substitute(&im_x, &im_y) * &q.substitute(&im_x, &im_y);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn swap_is_an_involution(p in arb_poly(Field::Q)) {
            prop_assert_eq!(p.swap_xy().swap_xy(), p.clone());
            // degree doubling preserves the coefficient sum
            prop_assert_eq!(p.subst_xy_yx().eval_ones(), p.eval_ones());
        }
    }
}
