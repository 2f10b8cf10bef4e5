//! Buchberger's algorithm and the ideal-level operations built on it:
//! normal forms, reduced Groebner bases, ideal equality, and intersection by
//! elimination. This engine is deliberately independent of the closed-form
//! basis construction in [`crate::edge_ideal`] so the two can check each
//! other.

use std::collections::BTreeSet;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Term};

/// A generating set of an ideal, tagged with the order its polynomials are
/// canonical under and whether it is a reduced Groebner basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealBasis {
    generators: Vec<Polynomial>,
    order: MonomialOrder,
    reduced: bool,
}

impl IdealBasis {
    /// Wraps plain generators (zeros dropped, sorted by leading monomial);
    /// does not run Buchberger.
    pub fn new(generators: impl IntoIterator<Item = Polynomial>, order: MonomialOrder) -> Self {
        let mut generators: Vec<Polynomial> =
            generators.into_iter().filter(|g| !g.is_zero()).collect();
        sort_by_leading_monomial(&mut generators, &order);
        IdealBasis {
            generators,
            order,
            reduced: false,
        }
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

fn sort_by_leading_monomial(polys: &mut [Polynomial], ord: &MonomialOrder) {
    polys.sort_by(|f, g| match (f.leading_monomial(), g.leading_monomial()) {
        (Some(a), Some(b)) => ord.cmp_mono(a, b),
        _ => std::cmp::Ordering::Equal,
    });
}

/// The S-polynomial `(L/lt f) f - (L/lt g) g` where `L` is the lcm of the
/// leading monomials. Errors on zero input.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &MonomialOrder) -> Result<Polynomial> {
    let (ltf, ltg) = match (f.leading_term(), g.leading_term()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::domain("s-polynomial of a zero polynomial")),
    };
    let l = ltf.monomial.lcm(&ltg.monomial);
    let uf = l.checked_div(&ltf.monomial).expect("lcm is divisible");
    let ug = l.checked_div(&ltg.monomial).expect("lcm is divisible");
    let inv_f = num_rational::BigRational::from_integer(1.into()) / ltf.coeff.clone();
    let inv_g = num_rational::BigRational::from_integer(1.into()) / ltg.coeff.clone();
    Ok(f.mul_by_term(&inv_f, &uf)
        .sub(&g.mul_by_term(&inv_g, &ug), ord))
}

/// Full deterministic division: repeatedly cancels the working leading term
/// against the first generator (in list order) whose leading monomial divides
/// it; irreducible leading terms move to the remainder. No term of the result
/// is divisible by any generator's leading monomial.
fn reduce(f: &Polynomial, basis: &[Polynomial], ord: &MonomialOrder) -> Polynomial {
    let mut remainder: Vec<Term> = Vec::new();
    let mut work = f.clone();
    'outer: while let Some(lt) = work.leading_term().cloned() {
        for g in basis {
            let glt = match g.leading_term() {
                Some(t) => t,
                None => continue,
            };
            if glt.monomial.divides(&lt.monomial) {
                let c = &lt.coeff / &glt.coeff;
                let m = lt
                    .monomial
                    .checked_div(&glt.monomial)
                    .expect("divisibility just checked");
                work = work.sub(&g.mul_by_term(&c, &m), ord);
                continue 'outer;
            }
        }
        remainder.push(lt);
        work = work.without_leading_term();
    }
    // Remainder terms were peeled off in strictly decreasing order.
    Polynomial::from_sorted_terms(remainder)
}

/// Remainder of `f` modulo the basis under the basis's own order.
pub fn normal_form(f: &Polynomial, basis: &IdealBasis) -> Polynomial {
    reduce(f, basis.generators(), basis.order())
}

/// Buchberger with the normal selection strategy (smallest lcm first) and the
/// coprimality criterion, followed by minimization and tail reduction.
/// Tolerates an empty input (the zero ideal has the empty reduced basis).
fn reduced_groebner(gens: &[Polynomial], ord: &MonomialOrder) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    sort_by_leading_monomial(&mut basis, ord);

    // Queue of unprocessed pairs keyed by the lcm of their leading monomials;
    // the key vector is ordered so that its natural Ord matches `ord`.
    let mut queue: BTreeSet<(Vec<u32>, usize, usize)> = BTreeSet::new();
    let lcm_key = |ord: &MonomialOrder, f: &Polynomial, g: &Polynomial| -> (Vec<u32>, Monomial) {
        let a = f.leading_monomial().expect("nonzero");
        let b = g.leading_monomial().expect("nonzero");
        let l = a.lcm(b);
        (ord.key(&l), l)
    };
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let (key, _) = lcm_key(ord, &basis[i], &basis[j]);
            queue.insert((key, i, j));
        }
    }

    while let Some(entry) = queue.iter().next().cloned() {
        queue.remove(&entry);
        let (_, i, j) = entry;
        let (lmi, lmj) = (
            basis[i].leading_monomial().expect("nonzero"),
            basis[j].leading_monomial().expect("nonzero"),
        );
        if lmi.is_coprime(lmj) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], ord).expect("basis entries are nonzero");
        let h = reduce(&s, &basis, ord);
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        let new_idx = basis.len();
        for (k, b) in basis.iter().enumerate() {
            let (key, _) = lcm_key(ord, b, &h);
            queue.insert((key, k, new_idx));
        }
        basis.push(h);
    }

    // Minimize: drop any generator whose leading monomial is divisible by
    // another surviving one (ties on equal leading monomials keep the first).
    let mut minimal: Vec<Polynomial> = Vec::new();
    'outer: for (idx, g) in basis.iter().enumerate() {
        let lmg = g.leading_monomial().expect("nonzero");
        for (jdx, h) in basis.iter().enumerate() {
            if jdx == idx {
                continue;
            }
            let lmh = h.leading_monomial().expect("nonzero");
            if lmh.divides(lmg) && (lmh != lmg || jdx < idx) {
                continue 'outer;
            }
        }
        minimal.push(g.clone());
    }
    sort_by_leading_monomial(&mut minimal, ord);

    // Tail-reduce each generator against the rest. Leading monomials are
    // mutually indivisible at this point, so they survive and one pass yields
    // the unique reduced basis.
    let count = minimal.len();
    for i in 0..count {
        let f = minimal[i].clone();
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, p)| p.clone())
            .collect();
        minimal[i] = reduce(&f, &others, ord).monic();
    }
    sort_by_leading_monomial(&mut minimal, ord);
    minimal
}

/// The unique reduced Groebner basis of the ideal generated by `gens`:
/// monic generators, none of whose terms is divisible by another's leading
/// monomial, sorted ascending by leading monomial.
///
/// Errors when the input generates the zero ideal (empty or all zero); use
/// [`ideal_equal`] to compare possibly-zero ideals.
pub fn buchberger_reduced(gens: &[Polynomial], ord: &MonomialOrder) -> Result<IdealBasis> {
    if gens.iter().all(|g| g.is_zero()) {
        return Err(Error::domain(
            "cannot build a Groebner basis from an empty or all-zero generating set",
        ));
    }
    let generators = reduced_groebner(gens, ord);
    Ok(IdealBasis {
        generators,
        order: ord.clone(),
        reduced: true,
    })
}

/// Ideal equality via uniqueness of the reduced Groebner basis. Zero ideals
/// (empty generating sets) compare equal to each other.
pub fn ideal_equal(a: &[Polynomial], b: &[Polynomial], ord: &MonomialOrder) -> bool {
    reduced_groebner(a, ord) == reduced_groebner(b, ord)
}

/// Intersection of two ideals in a ring with `n_vars` variables, by
/// eliminating an auxiliary variable `t` from `t*A + (1-t)*B`.
///
/// The result is returned in the original ring, canonical under plain lex
/// order, sorted ascending by leading monomial. Errors when `n_vars + 1`
/// exceeds the configured variable bound.
pub fn intersect(
    a: &[Polynomial],
    b: &[Polynomial],
    n_vars: usize,
    bounds: &Bounds,
) -> Result<Vec<Polynomial>> {
    let total = n_vars + 1;
    if total > bounds.intersect_max_vars {
        return Err(Error::resource(format!(
            "intersection needs {total} ring variables, above the bound {}",
            bounds.intersect_max_vars
        )));
    }
    let t = n_vars; // index of the auxiliary variable
    let ord = MonomialOrder::elimination(total, t);
    let t_mono = Monomial::var(total, t);
    let one = num_rational::BigRational::from_integer(1.into());
    let one_minus_t = Polynomial::from_terms(
        [
            (one.clone(), Monomial::one(total)),
            (-one.clone(), t_mono.clone()),
        ],
        &ord,
    );

    let mut gens: Vec<Polynomial> = Vec::new();
    for f in a {
        gens.push(f.extended(1).mul_by_term(&one, &t_mono));
    }
    for g in b {
        gens.push(g.extended(1).mul(&one_minus_t, &ord));
    }

    let gb = reduced_groebner(&gens, &ord);
    let mut out = Vec::new();
    for g in gb {
        if let Some(projected) = g.projected() {
            out.push(projected);
        }
    }
    // Elements free of t are canonical under the restricted order already,
    // and arrive sorted because the elimination order extends plain lex.
    Ok(out)
}
