//! Exact sparse multivariate polynomials over the rationals, with a
//! lexicographic monomial order parameterized by a variable priority.
//!
//! # Design notes
//! - Coefficients are arbitrary-precision rationals; nothing is ever rounded.
//! - Monomials are dense exponent vectors (the rings here are small) with the
//!   total degree cached.
//! - A polynomial stores its terms strictly decreasing under the order it was
//!   built with; every operation that can disturb that invariant takes the
//!   order as an argument and restores it.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent vector over a fixed list of ring variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    /// The constant monomial `1`.
    pub fn one(n_vars: usize) -> Self {
        Monomial::new(vec![0; n_vars])
    }

    /// The single variable `var`.
    pub fn var(n_vars: usize, var: usize) -> Self {
        let mut exps = vec![0; n_vars];
        exps[var] = 1;
        Monomial::new(exps)
    }

    pub fn n_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n_vars(), other.n_vars());
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.n_vars() == other.n_vars() && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, or `None` when the division is not exact.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n_vars(), other.n_vars());
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Appends `extra` fresh variables with exponent zero.
    pub fn extended(&self, extra: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat_n(0, extra));
        Monomial::new(exps)
    }

    /// Drops the last variable; `None` when its exponent is nonzero.
    pub fn projected(&self) -> Option<Monomial> {
        match self.exps.split_last() {
            Some((0, rest)) => Some(Monomial::new(rest.to_vec())),
            _ => None,
        }
    }
}

/// Lexicographic monomial order scanning variables in an explicit priority
/// sequence; the default priority is the variable index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    priority: Vec<usize>,
}

impl MonomialOrder {
    /// Plain lex order: variable 0 ranks highest.
    pub fn lex(n_vars: usize) -> Self {
        MonomialOrder {
            priority: (0..n_vars).collect(),
        }
    }

    /// Lex order that ranks `first` above all other variables (whose mutual
    /// order is unchanged); suitable for eliminating `first`.
    pub fn elimination(n_vars: usize, first: usize) -> Self {
        let mut priority = vec![first];
        priority.extend((0..n_vars).filter(|&v| v != first));
        MonomialOrder { priority }
    }

    pub fn n_vars(&self) -> usize {
        self.priority.len()
    }

    /// Total order comparison; errors when the monomials do not live in this
    /// order's ring.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.n_vars() != self.n_vars() || b.n_vars() != self.n_vars() {
            return Err(Error::domain(format!(
                "monomials on {}/{} variables compared under an order on {}",
                a.n_vars(),
                b.n_vars(),
                self.n_vars()
            )));
        }
        Ok(self.cmp_mono(a, b))
    }

    pub(crate) fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &v in &self.priority {
            match a.exponent(v).cmp(&b.exponent(v)) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// Exponents permuted into priority order; the natural `Ord` on keys
    /// agrees with the monomial order.
    pub(crate) fn key(&self, m: &Monomial) -> Vec<u32> {
        self.priority.iter().map(|&v| m.exponent(v)).collect()
    }
}

/// One coefficient-monomial pair of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: BigRational,
    pub monomial: Monomial,
}

/// A polynomial in canonical form: terms strictly decreasing under the
/// monomial order it was constructed with, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

/// Convenience for integer coefficients.
pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    /// Canonicalizes an arbitrary bag of terms under `ord`: sorts strictly
    /// decreasing, merges equal monomials, drops zeros.
    pub fn from_terms(
        terms: impl IntoIterator<Item = (BigRational, Monomial)>,
        ord: &MonomialOrder,
    ) -> Polynomial {
        let mut list: Vec<Term> = terms
            .into_iter()
            .filter(|(c, _)| !c.is_zero())
            .map(|(coeff, monomial)| Term { coeff, monomial })
            .collect();
        list.sort_by(|s, t| ord.cmp_mono(&t.monomial, &s.monomial));
        let mut out: Vec<Term> = Vec::with_capacity(list.len());
        for term in list {
            match out.last_mut() {
                Some(last) if last.monomial == term.monomial => {
                    last.coeff += term.coeff;
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push(term),
            }
        }
        Polynomial { terms: out }
    }

    /// Wraps terms already known to be strictly decreasing and nonzero.
    pub(crate) fn from_sorted_terms(terms: Vec<Term>) -> Polynomial {
        Polynomial { terms }
    }

    pub fn constant(c: BigRational, n_vars: usize) -> Polynomial {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: vec![Term {
                    coeff: c,
                    monomial: Monomial::one(n_vars),
                }],
            }
        }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest term under the construction order; `None` for zero.
    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub(crate) fn without_leading_term(&self) -> Polynomial {
        Polynomial {
            terms: self.terms[1..].to_vec(),
        }
    }

    pub fn add(&self, other: &Polynomial, ord: &MonomialOrder) -> Polynomial {
        Polynomial::from_terms(
            self.terms
                .iter()
                .chain(&other.terms)
                .map(|t| (t.coeff.clone(), t.monomial.clone())),
            ord,
        )
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: -t.coeff.clone(),
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial, ord: &MonomialOrder) -> Polynomial {
        self.add(&other.neg(), ord)
    }

    /// Multiplies by `coeff * mono`. Monomial multiplication preserves the
    /// order of terms, so no re-sort is needed.
    pub fn mul_by_term(&self, coeff: &BigRational, mono: &Monomial) -> Polynomial {
        if coeff.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * coeff,
                    monomial: t.monomial.mul(mono),
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial, ord: &MonomialOrder) -> Polynomial {
        let mut products = Vec::with_capacity(self.terms.len() * other.terms.len());
        for s in &self.terms {
            for t in &other.terms {
                products.push((&s.coeff * &t.coeff, s.monomial.mul(&t.monomial)));
            }
        }
        Polynomial::from_terms(products, ord)
    }

    /// Scales so the leading coefficient is one; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => Polynomial::zero(),
            Some(lt) => {
                let inv = BigRational::one() / lt.coeff.clone();
                Polynomial {
                    terms: self
                        .terms
                        .iter()
                        .map(|t| Term {
                            coeff: &t.coeff * &inv,
                            monomial: t.monomial.clone(),
                        })
                        .collect(),
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    /// Lifts into a ring with `extra` extra trailing variables. Valid for any
    /// order whose restriction to the old variables preserves their relative
    /// priority, which holds for [`MonomialOrder::elimination`] on the new
    /// variable.
    pub fn extended(&self, extra: usize) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.clone(),
                    monomial: t.monomial.extended(extra),
                })
                .collect(),
        }
    }

    /// Drops the last (zero-exponent everywhere) variable; `None` if any term
    /// actually uses it.
    pub fn projected(&self) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(Term {
                coeff: t.coeff.clone(),
                monomial: t.monomial.projected()?,
            });
        }
        Some(Polynomial { terms })
    }

    /// True when every coefficient is an integer (used by tests to confirm
    /// binomial-friendly arithmetic stays integral).
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.iter().all(|t| t.coeff.denom().abs().is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Ring with variables x1, x2, y1, y2 (indices 0, 1, 2, 3).
    fn ord4() -> MonomialOrder {
        MonomialOrder::lex(4)
    }

    fn m(exps: [u32; 4]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn compare_examples() {
        let ord = ord4();
        // x1*y2 > x2*y1: the first variable with differing exponent is x1.
        let a = m([1, 0, 0, 1]);
        let b = m([0, 1, 1, 0]);
        assert_eq!(ord.compare(&a, &b).unwrap(), Ordering::Greater);
        // y1 > y2.
        let y1 = m([0, 0, 1, 0]);
        let y2 = m([0, 0, 0, 1]);
        assert_eq!(ord.compare(&y1, &y2).unwrap(), Ordering::Greater);
        assert_eq!(ord.compare(&y1, &y1).unwrap(), Ordering::Equal);
    }

    #[test]
    fn compare_rejects_mismatched_lengths() {
        let ord = ord4();
        let short = Monomial::one(3);
        assert!(ord.compare(&short, &Monomial::one(4)).is_err());
    }

    #[test]
    fn elimination_order_ranks_the_auxiliary_first() {
        let ord = MonomialOrder::elimination(3, 2);
        let t = Monomial::var(3, 2);
        let x = Monomial::new(vec![5, 5, 0]);
        assert_eq!(ord.compare(&t, &x).unwrap(), Ordering::Greater);
        // Restricted to the old variables the order is unchanged.
        let a = Monomial::new(vec![1, 0, 0]);
        let b = Monomial::new(vec![0, 1, 0]);
        assert_eq!(ord.compare(&a, &b).unwrap(), Ordering::Greater);
    }

    #[test]
    fn monomial_arithmetic() {
        let a = m([1, 0, 0, 1]);
        let b = m([0, 1, 1, 0]);
        assert_eq!(a.mul(&b), m([1, 1, 1, 1]));
        assert_eq!(a.lcm(&b), m([1, 1, 1, 1]));
        assert!(a.is_coprime(&b));
        assert!(a.divides(&a.mul(&b)));
        assert!(!a.divides(&b));
        assert_eq!(a.mul(&b).checked_div(&a), Some(b.clone()));
        assert_eq!(b.checked_div(&a), None);
        assert_eq!(a.degree(), 2);
        assert!(a.is_squarefree());
        assert!(!m([2, 0, 0, 0]).is_squarefree());
    }

    #[test]
    fn from_terms_canonicalizes() {
        let ord = ord4();
        let p = Polynomial::from_terms(
            [
                (rational(1), m([0, 1, 1, 0])),
                (rational(2), m([1, 0, 0, 1])),
                (rational(-1), m([0, 1, 1, 0])),
            ],
            &ord,
        );
        // The two x2*y1 terms cancel; only 2*x1*y2 remains.
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.leading_term().unwrap().coeff, rational(2));
        assert_eq!(p.leading_monomial().unwrap(), &m([1, 0, 0, 1]));
    }

    #[test]
    fn zero_polynomial_has_no_leading_term() {
        let p = Polynomial::zero();
        assert!(p.is_zero());
        assert!(p.leading_term().is_none());
        assert_eq!(p.total_degree(), None);
    }

    #[test]
    fn add_and_mul() {
        let ord = ord4();
        let f = Polynomial::from_terms(
            [
                (rational(1), m([1, 0, 0, 1])),
                (rational(-1), m([0, 1, 1, 0])),
            ],
            &ord,
        );
        assert!(f.add(&f.neg(), &ord).is_zero());
        let sq = f.mul(&f, &ord);
        // (a - b)^2 = a^2 - 2ab + b^2.
        assert_eq!(sq.terms().len(), 3);
        assert_eq!(sq.terms()[1].coeff, rational(-2));
        assert!(sq.has_integer_coefficients());
    }

    #[test]
    fn monic_divides_by_leading_coefficient() {
        let ord = ord4();
        let f = Polynomial::from_terms(
            [
                (rational(-3), m([1, 0, 0, 1])),
                (rational(6), m([0, 1, 1, 0])),
            ],
            &ord,
        );
        let g = f.monic();
        assert_eq!(g.leading_term().unwrap().coeff, rational(1));
        assert_eq!(g.terms()[1].coeff, rational(-2));
    }

    #[test]
    fn extension_and_projection_round_trip() {
        let ord = ord4();
        let f = Polynomial::from_terms(
            [
                (rational(1), m([1, 0, 0, 1])),
                (rational(-1), m([0, 1, 1, 0])),
            ],
            &ord,
        );
        let lifted = f.extended(1);
        assert_eq!(lifted.projected().unwrap(), f);
        // A polynomial that uses the new variable cannot be projected.
        let t =
            Polynomial::from_terms([(rational(1), Monomial::var(5, 4))], &MonomialOrder::lex(5));
        assert_eq!(t.projected(), None);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        /// The order is total and multiplicative: u > v implies uw > vw.
        #[test]
        fn order_is_multiplicative(
            u in proptest::collection::vec(0u32..4, 4),
            v in proptest::collection::vec(0u32..4, 4),
            w in proptest::collection::vec(0u32..4, 4),
        ) {
            let ord = ord4();
            let (u, v, w) = (Monomial::new(u), Monomial::new(v), Monomial::new(w));
            let base = ord.compare(&u, &v).unwrap();
            let shifted = ord.compare(&u.mul(&w), &v.mul(&w)).unwrap();
            prop_assert_eq!(base, shifted);
            prop_assert_eq!(base == Ordering::Equal, u == v);
        }

        /// Addition commutes and canonical forms agree.
        #[test]
        fn addition_is_commutative(
            a in proptest::collection::vec((0u32..3, 0u32..3, 0u32..3, 0u32..3, -4i64..5), 0..6),
            b in proptest::collection::vec((0u32..3, 0u32..3, 0u32..3, 0u32..3, -4i64..5), 0..6),
        ) {
            let ord = ord4();
            let build = |spec: &[(u32, u32, u32, u32, i64)]| {
                Polynomial::from_terms(
                    spec.iter().map(|&(e0, e1, e2, e3, c)| {
                        (rational(c), Monomial::new(vec![e0, e1, e2, e3]))
                    }),
                    &ord,
                )
            };
            let (p, q) = (build(&a), build(&b));
            prop_assert_eq!(p.add(&q, &ord), q.add(&p, &ord));
            prop_assert!(p.sub(&p, &ord).is_zero());
        }
    }
}
