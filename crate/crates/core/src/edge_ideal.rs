//! Binomial edge ideals and their closed-form reduced Groebner bases.
//!
//! A graph on `1..=n` determines the ideal generated by the binomials
//! `x_i*y_j - x_j*y_i`, one per edge, inside the polynomial ring on
//! `x_1..x_n, y_1..y_n` ordered lexicographically with every `x` above every
//! `y`. The reduced Groebner basis of that ideal has a purely combinatorial
//! description: one element `u*f` per admissible path, where the path's
//! endpoints give the binomial `f` and its interior vertices give the
//! monomial `u`. Everything in this module computes that description
//! directly, without running Buchberger; [`crate::groebner`] provides the
//! independent check.
//!
//! # Admissible paths
//! A path `i = v_0, v_1, ..., v_r = j` with `i < j` is admissible when
//! 1. its vertices are distinct,
//! 2. every interior vertex is either below `i` or above `j`, and
//! 3. no proper subset of the interior vertices can be arranged into a path
//!    from `i` to `j` (in particular, if `{i,j}` is an edge, the edge itself
//!    is the only admissible path between them).
//!
//! The attached monomial multiplies `x_v` for interior `v > j` and `y_v` for
//! interior `v < i`.

use std::collections::BTreeSet;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::poly::{rational, Monomial, MonomialOrder, Polynomial};

/// Index of `x_v` in the ring on `2n` variables (`v` is 1-based).
pub fn x_index(_n: usize, v: usize) -> usize {
    v - 1
}

/// Index of `y_v` in the ring on `2n` variables (`v` is 1-based).
pub fn y_index(n: usize, v: usize) -> usize {
    n + v - 1
}

/// Lex order on `x_1 > ... > x_n > y_1 > ... > y_n`.
pub fn xy_order(n: usize) -> MonomialOrder {
    MonomialOrder::lex(2 * n)
}

/// The binomial `x_i*y_j - x_j*y_i` for any pair `i < j` of the vertex range,
/// canonical under [`xy_order`] (the positive term leads).
pub fn pair_binomial(n: usize, i: usize, j: usize) -> Polynomial {
    debug_assert!(i < j && j <= n);
    let lead = Monomial::var(2 * n, x_index(n, i)).mul(&Monomial::var(2 * n, y_index(n, j)));
    let trail = Monomial::var(2 * n, x_index(n, j)).mul(&Monomial::var(2 * n, y_index(n, i)));
    Polynomial::from_terms([(rational(1), lead), (rational(-1), trail)], &xy_order(n))
}

/// One defining generator of the edge ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeBinomial {
    pub i: usize,
    pub j: usize,
    polynomial: Polynomial,
}

impl EdgeBinomial {
    pub fn new(n: usize, i: usize, j: usize) -> Result<Self> {
        if i >= j || i < 1 || j > n {
            return Err(Error::domain(format!(
                "edge binomial needs 1 <= i < j <= {n}, got ({i},{j})"
            )));
        }
        Ok(EdgeBinomial {
            i,
            j,
            polynomial: pair_binomial(n, i, j),
        })
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.polynomial
    }
}

/// The defining generators of the edge ideal, in sorted edge order.
pub fn edge_generators(g: &LabeledGraph) -> Vec<EdgeBinomial> {
    g.edges()
        .map(|(i, j)| EdgeBinomial::new(g.n(), i, j).expect("graph edges are valid pairs"))
        .collect()
}

/// An admissible path together with the monomial it attaches to its endpoint
/// binomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissiblePath {
    vertices: Vec<usize>,
    monomial: Monomial,
}

impl AdmissiblePath {
    fn new(n: usize, vertices: Vec<usize>) -> Self {
        let (i, j) = (vertices[0], *vertices.last().unwrap());
        let mut mono = Monomial::one(2 * n);
        for &v in &vertices[1..vertices.len() - 1] {
            let var = if v > j { x_index(n, v) } else { y_index(n, v) };
            mono = mono.mul(&Monomial::var(2 * n, var));
        }
        debug_assert!(i < j);
        AdmissiblePath {
            vertices,
            monomial: mono,
        }
    }

    /// The full vertex sequence, starting at the smaller endpoint.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    pub fn interior(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    /// `x`-variables for interior vertices above the upper endpoint,
    /// `y`-variables for interior vertices below the lower one.
    pub fn path_monomial(&self) -> &Monomial {
        &self.monomial
    }
}

/// DFS over all simple paths `from -> to`; every extension step costs one
/// unit of `budget`.
fn simple_paths(
    g: &LabeledGraph,
    from: usize,
    to: usize,
    budget: &mut usize,
) -> Result<Vec<Vec<usize>>> {
    fn dfs(
        adj: &[Vec<usize>],
        to: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<usize>>,
        budget: &mut usize,
    ) -> Result<()> {
        let v = *path.last().unwrap();
        if v == to {
            out.push(path.clone());
            return Ok(());
        }
        for &w in &adj[v] {
            if on_path[w] {
                continue;
            }
            if *budget == 0 {
                return Err(Error::resource(
                    "simple-path enumeration exceeded the step cap",
                ));
            }
            *budget -= 1;
            path.push(w);
            on_path[w] = true;
            dfs(adj, to, path, on_path, out, budget)?;
            path.pop();
            on_path[w] = false;
        }
        Ok(())
    }

    let mut adj = g.adjacency();
    for nb in &mut adj {
        nb.sort_unstable();
    }
    let mut out = Vec::new();
    let mut path = vec![from];
    let mut on_path = vec![false; g.n() + 1];
    on_path[from] = true;
    dfs(&adj, to, &mut path, &mut on_path, &mut out, budget)?;
    Ok(out)
}

fn admissible_with_budget(
    g: &LabeledGraph,
    i: usize,
    j: usize,
    budget: &mut usize,
) -> Result<Vec<AdmissiblePath>> {
    let paths = simple_paths(g, i, j, budget)?;
    // Interior vertex sets of every simple path, as bitmasks; minimality of a
    // candidate is judged against all of them.
    let masks: Vec<u64> = paths
        .iter()
        .map(|p| p[1..p.len() - 1].iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    let mut result: Vec<Vec<usize>> = Vec::new();
    for (p, &mask) in paths.iter().zip(&masks) {
        let interior_ok = p[1..p.len() - 1].iter().all(|&v| v < i || v > j);
        if !interior_ok {
            continue;
        }
        let shortcut = masks
            .iter()
            .any(|&other| other != mask && other & mask == other);
        if !shortcut {
            result.push(p.clone());
        }
    }
    result.sort();
    Ok(result
        .into_iter()
        .map(|p| AdmissiblePath::new(g.n(), p))
        .collect())
}

/// All admissible paths from `i` to `j` (requires `i < j`), sorted by vertex
/// sequence. Errors when the vertex count exceeds the enumeration bound or
/// the DFS step cap is hit.
pub fn admissible_paths(
    g: &LabeledGraph,
    i: usize,
    j: usize,
    bounds: &Bounds,
) -> Result<Vec<AdmissiblePath>> {
    if !(1..=g.n()).contains(&i) || !(1..=g.n()).contains(&j) {
        return Err(Error::domain(format!(
            "vertices ({i},{j}) outside 1..={}",
            g.n()
        )));
    }
    if i >= j {
        return Err(Error::domain(format!(
            "admissible paths run from the smaller label to the larger, got ({i},{j})"
        )));
    }
    if g.n() > bounds.path_enum_max_n {
        return Err(Error::resource(format!(
            "path enumeration on {} vertices exceeds the bound {}",
            g.n(),
            bounds.path_enum_max_n
        )));
    }
    let mut budget = bounds.path_cap;
    admissible_with_budget(g, i, j, &mut budget)
}

/// One element of the combinatorial basis: the admissible path, its endpoint
/// pair, and the product polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub path: AdmissiblePath,
    pub endpoints: (usize, usize),
    pub polynomial: Polynomial,
}

/// The closed-form reduced Groebner basis, sorted ascending by leading
/// monomial and deduplicated by polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoreticalBasis {
    elements: Vec<BasisElement>,
    duplicate_paths: usize,
}

impl TheoreticalBasis {
    pub fn elements(&self) -> &[BasisElement] {
        &self.elements
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.elements.iter().map(|e| e.polynomial.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// How many admissible paths were dropped because another path produced
    /// the identical polynomial (same endpoints and interior set).
    pub fn duplicate_paths(&self) -> usize {
        self.duplicate_paths
    }
}

/// The full combinatorial basis: one element per admissible path between any
/// vertex pair `i < j`, across all pairs. The DFS step cap is shared across
/// the whole call.
pub fn theoretical_groebner(g: &LabeledGraph, bounds: &Bounds) -> Result<TheoreticalBasis> {
    if g.n() > bounds.path_enum_max_n {
        return Err(Error::resource(format!(
            "path enumeration on {} vertices exceeds the bound {}",
            g.n(),
            bounds.path_enum_max_n
        )));
    }
    let ord = xy_order(g.n());
    let mut budget = bounds.path_cap;
    let mut elements: Vec<BasisElement> = Vec::new();
    for i in 1..=g.n() {
        for j in (i + 1)..=g.n() {
            for path in admissible_with_budget(g, i, j, &mut budget)? {
                let polynomial =
                    pair_binomial(g.n(), i, j).mul_by_term(&rational(1), path.path_monomial());
                elements.push(BasisElement {
                    path,
                    endpoints: (i, j),
                    polynomial,
                });
            }
        }
    }
    elements.sort_by(|a, b| {
        let lma = a
            .polynomial
            .leading_monomial()
            .expect("binomials are nonzero");
        let lmb = b
            .polynomial
            .leading_monomial()
            .expect("binomials are nonzero");
        ord.cmp_mono(lma, lmb)
            .then_with(|| a.path.vertices().cmp(b.path.vertices()))
    });
    let before = elements.len();
    elements.dedup_by(|a, b| a.polynomial == b.polynomial);
    let duplicate_paths = before - elements.len();
    Ok(TheoreticalBasis {
        elements,
        duplicate_paths,
    })
}

/// Leading monomials of the combinatorial basis, plus their squarefreeness
/// (which certifies that the ideal is radical).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InitialIdeal {
    pub monomials: Vec<Monomial>,
    pub squarefree: bool,
}

pub fn initial_ideal(g: &LabeledGraph, bounds: &Bounds) -> Result<InitialIdeal> {
    let basis = theoretical_groebner(g, bounds)?;
    let monomials: Vec<Monomial> = basis
        .elements()
        .iter()
        .map(|e| {
            e.polynomial
                .leading_monomial()
                .expect("binomials are nonzero")
                .clone()
        })
        .collect();
    let squarefree = monomials.iter().all(|m| m.is_squarefree());
    Ok(InitialIdeal {
        monomials,
        squarefree,
    })
}

/// Whether the edge generators alone already form the reduced Groebner basis
/// (equivalently: every admissible path is a single edge).
pub fn has_quadratic_gb(g: &LabeledGraph, bounds: &Bounds) -> Result<bool> {
    let basis = theoretical_groebner(g, bounds)?;
    let quadratic = basis
        .elements()
        .iter()
        .all(|e| e.path.vertices().len() == 2);
    if quadratic {
        // Sanity: the quadratic elements must then be exactly the edges.
        debug_assert_eq!(basis.len(), g.edge_count());
        let edges: BTreeSet<(usize, usize)> = g.edges().collect();
        debug_assert!(basis
            .elements()
            .iter()
            .all(|e| edges.contains(&e.endpoints)));
    }
    Ok(quadratic)
}
