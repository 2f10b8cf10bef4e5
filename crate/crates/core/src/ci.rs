//! Conditional-independence models compiled down to edge ideals.
//!
//! The setting: observed variables `X_1..X_N` with finite state spaces, plus
//! one hidden binary variable. A statement "X_S is independent of the hidden
//! variable given X_T" (with `S`, `T` partitioning the positions) translates
//! to rank-one conditions on the 2-by-M matrix of joint probabilities, where
//! M is the number of observed states. Collecting the 2x2 minors demanded by
//! a family of such statements yields exactly the edge ideal of a graph on
//! the state labels: states are adjacent when some statement's `T` cannot
//! tell them apart. Decomposing that ideal decomposes the model into pieces
//! with structural zeros and independent blocks.

use std::collections::{BTreeMap, BTreeSet};

use crate::bounds::Bounds;
use crate::decomposition::minimal_primes;
use crate::edge_ideal::pair_binomial;
use crate::error::{Error, Result};
use crate::formats::{probability_variable_names, render_polynomial};
use crate::graph::{LabeledGraph, VertexSubset};
use crate::poly::Polynomial;

/// Finite product state space; labels are 1-based and enumerate states in
/// lexicographic order with the first position most significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateSpace {
    dims: Vec<usize>,
    size: usize,
}

impl StateSpace {
    pub fn new(dims: impl IntoIterator<Item = usize>) -> Result<Self> {
        let dims: Vec<usize> = dims.into_iter().collect();
        if dims.is_empty() {
            return Err(Error::domain("a state space needs at least one position"));
        }
        if let Some(pos) = dims.iter().position(|&d| d == 0) {
            return Err(Error::domain(format!(
                "position {} has an empty state set",
                pos + 1
            )));
        }
        let size = dims
            .iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d))
            .ok_or_else(|| Error::resource("state space size overflows usize"))?;
        Ok(StateSpace { dims, size })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Number of observed variables.
    pub fn positions(&self) -> usize {
        self.dims.len()
    }

    /// Total number of states (the product of the dimensions).
    pub fn size(&self) -> usize {
        self.size
    }

    /// Mixed-radix label of a state, starting at 1.
    pub fn label_of(&self, state: &[usize]) -> Result<usize> {
        if state.len() != self.dims.len() {
            return Err(Error::domain(format!(
                "state has {} coordinates, expected {}",
                state.len(),
                self.dims.len()
            )));
        }
        let mut label = 0usize;
        for (pos, (&s, &d)) in state.iter().zip(&self.dims).enumerate() {
            if s == 0 || s > d {
                return Err(Error::domain(format!(
                    "coordinate {} at position {} is outside 1..={}",
                    s,
                    pos + 1,
                    d
                )));
            }
            label = label * d + (s - 1);
        }
        Ok(label + 1)
    }

    /// Inverse of [`StateSpace::label_of`].
    pub fn state_of(&self, label: usize) -> Result<Vec<usize>> {
        if label == 0 || label > self.size {
            return Err(Error::domain(format!(
                "label {} is outside 1..={}",
                label, self.size
            )));
        }
        let mut rest = label - 1;
        let mut state = vec![0usize; self.dims.len()];
        for (slot, &d) in state.iter_mut().zip(&self.dims).rev() {
            *slot = rest % d + 1;
            rest /= d;
        }
        Ok(state)
    }

    /// All states in label order.
    pub fn states(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (1..=self.size).map(|l| self.state_of(l).expect("label in range"))
    }
}

/// One conditional-independence statement: the positions in `independent`
/// are jointly independent of the hidden variable once the positions in
/// `given` are fixed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CiStatement {
    independent: VertexSubset,
    given: VertexSubset,
}

impl CiStatement {
    pub fn new(independent: VertexSubset, given: VertexSubset) -> Result<Self> {
        if independent.is_empty() {
            return Err(Error::domain(
                "a statement needs a nonempty independent set",
            ));
        }
        if let Some(v) = independent.members().find(|&v| given.contains(v)) {
            return Err(Error::domain(format!(
                "position {v} appears on both sides of a statement"
            )));
        }
        Ok(CiStatement { independent, given })
    }

    pub fn independent(&self) -> &VertexSubset {
        &self.independent
    }

    pub fn given(&self) -> &VertexSubset {
        &self.given
    }
}

/// A family of statements over one state space. Every statement must use
/// each position exactly once (either conditioned on or declared
/// independent), so the associated minors stay within one probability table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RobustnessSpec {
    space: StateSpace,
    statements: Vec<CiStatement>,
}

impl RobustnessSpec {
    pub fn new(space: StateSpace, statements: Vec<CiStatement>) -> Result<Self> {
        if statements.is_empty() {
            return Err(Error::domain(
                "a specification needs at least one statement",
            ));
        }
        let n = space.positions();
        for (idx, st) in statements.iter().enumerate() {
            st.independent.validate(n)?;
            st.given.validate(n)?;
            let covered = st.independent.len() + st.given.len();
            if covered != n {
                return Err(Error::domain(format!(
                    "statement {} covers {} of {} positions",
                    idx + 1,
                    covered,
                    n
                )));
            }
        }
        Ok(RobustnessSpec { space, statements })
    }

    /// The distance-k family: one statement per k-element independent set.
    /// Its graph joins states at Hamming distance at most k.
    pub fn hamming(space: StateSpace, k: usize) -> Result<Self> {
        let n = space.positions();
        if k == 0 || k > n {
            return Err(Error::domain(format!(
                "Hamming radius {k} is outside 1..={n}"
            )));
        }
        let mut statements = Vec::new();
        for combo in combinations(n, k) {
            let independent: VertexSubset = combo.iter().copied().collect();
            let given: VertexSubset = (1..=n).filter(|v| !independent.contains(*v)).collect();
            statements.push(CiStatement { independent, given });
        }
        RobustnessSpec::new(space, statements)
    }

    pub fn space(&self) -> &StateSpace {
        &self.space
    }

    pub fn statements(&self) -> &[CiStatement] {
        &self.statements
    }
}

/// All k-element subsets of `1..=n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(n: usize, k: usize, next: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in next..=n {
            if n - v + 1 < k - current.len() {
                break;
            }
            current.push(v);
            go(n, k, v + 1, current, out);
            current.pop();
        }
    }
    go(n, k, 1, &mut current, &mut out);
    out
}

fn check_space_bound(space: &StateSpace, bounds: &Bounds) -> Result<()> {
    if space.size() > bounds.state_space_max {
        return Err(Error::resource(format!(
            "state space of size {} exceeds the bound {}",
            space.size(),
            bounds.state_space_max
        )));
    }
    Ok(())
}

/// The graph a specification compiles to: one vertex per state label, with
/// two states adjacent when some statement conditions only on positions
/// where they agree.
pub fn spec_to_graph(spec: &RobustnessSpec, bounds: &Bounds) -> Result<LabeledGraph> {
    let space = spec.space();
    check_space_bound(space, bounds)?;
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for st in spec.statements() {
        let given: Vec<usize> = st.given().to_vec();
        let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (idx, state) in space.states().enumerate() {
            let key: Vec<usize> = given.iter().map(|&p| state[p - 1]).collect();
            groups.entry(key).or_default().push(idx + 1);
        }
        for labels in groups.values() {
            for (i, &u) in labels.iter().enumerate() {
                for &v in &labels[i + 1..] {
                    edges.insert((u, v));
                }
            }
        }
    }
    LabeledGraph::new(space.size(), edges)
}

/// Graph joining states at Hamming distance at most `k`; agrees with
/// compiling [`RobustnessSpec::hamming`].
pub fn hamming_graph(space: &StateSpace, k: usize, bounds: &Bounds) -> Result<LabeledGraph> {
    let n = space.positions();
    if k == 0 || k > n {
        return Err(Error::domain(format!(
            "Hamming radius {k} is outside 1..={n}"
        )));
    }
    check_space_bound(space, bounds)?;
    let states: Vec<Vec<usize>> = space.states().collect();
    let mut edges = Vec::new();
    for u in 0..states.len() {
        for v in u + 1..states.len() {
            let dist = states[u]
                .iter()
                .zip(&states[v])
                .filter(|(a, b)| a != b)
                .count();
            if dist <= k {
                edges.push((u + 1, v + 1));
            }
        }
    }
    LabeledGraph::new(space.size(), edges)
}

/// The minor attached to one adjacent pair of states: with `pXs` denoting
/// the probability of hidden state `X` and observed state `s`, the binomial
/// is `p1u*p2v - p1v*p2u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CiBinomial {
    u: usize,
    v: usize,
    polynomial: Polynomial,
}

impl CiBinomial {
    /// The two state labels, smaller first.
    pub fn labels(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    /// The minor in the 2M-variable probability ring: indices `0..M` hold
    /// the first hidden state's row, `M..2M` the second's.
    pub fn polynomial(&self) -> &Polynomial {
        &self.polynomial
    }

    /// Text form with probability variable names, e.g. `p111*p221 - p121*p211`.
    pub fn text(&self, space: &StateSpace) -> Result<String> {
        render_polynomial(&self.polynomial, &probability_variable_names(space.dims())?)
    }
}

/// The generating minors of a compiled graph, in edge order.
pub fn ci_generators(space: &StateSpace, g: &LabeledGraph) -> Result<Vec<CiBinomial>> {
    if g.n() != space.size() {
        return Err(Error::domain(format!(
            "graph on {} vertices does not match a state space of size {}",
            g.n(),
            space.size()
        )));
    }
    Ok(g.edges()
        .map(|(u, v)| CiBinomial {
            u,
            v,
            polynomial: pair_binomial(space.size(), u, v),
        })
        .collect())
}

/// One irreducible piece of the model: the listed states carry probability
/// zero, and within each block the two hidden rows are proportional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatisticalComponent {
    structural_zeros: Vec<Vec<usize>>,
    blocks: Vec<Vec<Vec<usize>>>,
    dimension: usize,
}

impl StatisticalComponent {
    pub fn structural_zeros(&self) -> &[Vec<usize>] {
        &self.structural_zeros
    }

    pub fn blocks(&self) -> &[Vec<Vec<usize>>] {
        &self.blocks
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }
}

/// The full decomposition of a compiled model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecDecomposition {
    components: Vec<StatisticalComponent>,
    dimension: usize,
}

impl SpecDecomposition {
    pub fn components(&self) -> &[StatisticalComponent] {
        &self.components
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }
}

/// Decomposes the ideal of a compiled graph and carries the answer back to
/// states. Subject to the minimal-prime enumeration bound, which a large
/// state space will exceed.
pub fn decompose_spec(
    space: &StateSpace,
    g: &LabeledGraph,
    bounds: &Bounds,
) -> Result<SpecDecomposition> {
    if g.n() != space.size() {
        return Err(Error::domain(format!(
            "graph on {} vertices does not match a state space of size {}",
            g.n(),
            space.size()
        )));
    }
    let decomp = minimal_primes(g, bounds)?;
    let to_states = |labels: Vec<usize>| -> Vec<Vec<usize>> {
        labels
            .into_iter()
            .map(|l| space.state_of(l).expect("label in range"))
            .collect()
    };
    let components = decomp
        .components()
        .iter()
        .map(|pc| StatisticalComponent {
            structural_zeros: to_states(pc.cut_set().to_vec()),
            blocks: pc
                .blocks()
                .blocks()
                .iter()
                .map(|b| to_states(b.to_vec()))
                .collect(),
            dimension: pc.dimension(),
        })
        .collect();
    Ok(SpecDecomposition {
        components,
        dimension: decomp.dimension(),
    })
}

/// The statement every full-support distribution in the model satisfies:
/// the union of the independent sets, given the intersection of the
/// conditioning sets. Unconditional exactly when the union is everything.
pub fn full_support_implication(spec: &RobustnessSpec) -> CiStatement {
    let n = spec.space().positions();
    let independent: VertexSubset = (1..=n)
        .filter(|&v| {
            spec.statements()
                .iter()
                .any(|st| st.independent().contains(v))
        })
        .collect();
    let given: VertexSubset = (1..=n)
        .filter(|&v| spec.statements().iter().all(|st| st.given().contains(v)))
        .collect();
    CiStatement { independent, given }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn space(dims: &[usize]) -> StateSpace {
        StateSpace::new(dims.iter().copied()).unwrap()
    }

    fn subset(vs: &[usize]) -> VertexSubset {
        VertexSubset::new(vs.iter().copied())
    }

    fn statement(s: &[usize], t: &[usize]) -> CiStatement {
        CiStatement::new(subset(s), subset(t)).unwrap()
    }

    #[test]
    fn labels_and_states_are_inverse() {
        let sp = space(&[2, 3, 2]);
        assert_eq!(sp.size(), 12);
        assert_eq!(sp.state_of(1).unwrap(), vec![1, 1, 1]);
        assert_eq!(sp.state_of(2).unwrap(), vec![1, 1, 2]);
        assert_eq!(sp.state_of(12).unwrap(), vec![2, 3, 2]);
        for label in 1..=12 {
            let st = sp.state_of(label).unwrap();
            assert_eq!(sp.label_of(&st).unwrap(), label);
        }
        // Label order is lexicographic order on states.
        let all: Vec<Vec<usize>> = sp.states().collect();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
    }

    #[test]
    fn state_space_validation() {
        assert!(StateSpace::new([]).is_err());
        assert!(StateSpace::new([2, 0]).is_err());
        let sp = space(&[2, 2]);
        assert!(sp.label_of(&[1]).is_err());
        assert!(sp.label_of(&[1, 3]).is_err());
        assert!(sp.label_of(&[0, 2]).is_err());
        assert!(sp.state_of(0).is_err());
        assert!(sp.state_of(5).is_err());
    }

    #[test]
    fn statement_validation() {
        assert!(CiStatement::new(subset(&[]), subset(&[1])).is_err());
        assert!(CiStatement::new(subset(&[1]), subset(&[1, 2])).is_err());
        // Coverage is checked against the space.
        let sp = space(&[2, 2, 2]);
        assert!(RobustnessSpec::new(sp.clone(), vec![statement(&[1], &[2])]).is_err());
        assert!(RobustnessSpec::new(sp.clone(), vec![]).is_err());
        assert!(RobustnessSpec::new(sp, vec![statement(&[1], &[2, 3])]).is_ok());
    }

    #[test]
    fn single_statement_graph() {
        // Two binary variables; independence of the first given the second
        // links states that share their second coordinate.
        let spec = RobustnessSpec::new(space(&[2, 2]), vec![statement(&[1], &[2])]).unwrap();
        let g = spec_to_graph(&spec, &Bounds::default()).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 3), (2, 4)]);
    }

    #[test]
    fn two_statements_make_a_cycle() {
        let spec = RobustnessSpec::new(
            space(&[2, 2]),
            vec![statement(&[1], &[2]), statement(&[2], &[1])],
        )
        .unwrap();
        let g = spec_to_graph(&spec, &Bounds::default()).unwrap();
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(1, 2), (1, 3), (2, 4), (3, 4)]
        );
        // Same thing via the Hamming constructor at radius one.
        let h = hamming_graph(&space(&[2, 2]), 1, &Bounds::default()).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn hamming_radius_two_is_complete() {
        let g = hamming_graph(&space(&[2, 2]), 2, &Bounds::default()).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert!(hamming_graph(&space(&[2, 2]), 0, &Bounds::default()).is_err());
        assert!(hamming_graph(&space(&[2, 2]), 3, &Bounds::default()).is_err());
    }

    #[test]
    fn hamming_spec_matches_direct_graph() {
        let sp = space(&[2, 2, 2]);
        let direct = hamming_graph(&sp, 1, &Bounds::default()).unwrap();
        assert_eq!(direct.edge_count(), 12);
        let spec = RobustnessSpec::hamming(sp, 1).unwrap();
        assert_eq!(spec.statements().len(), 3);
        let compiled = spec_to_graph(&spec, &Bounds::default()).unwrap();
        assert_eq!(direct, compiled);
    }

    #[test]
    fn space_bound_is_enforced() {
        let bounds = Bounds {
            state_space_max: 3,
            ..Bounds::default()
        };
        let sp = space(&[2, 2]);
        assert!(matches!(
            hamming_graph(&sp, 1, &bounds).unwrap_err(),
            Error::Resource(_)
        ));
    }

    #[test]
    fn generator_text_for_two_binary_variables() {
        let sp = space(&[2, 2]);
        let g = hamming_graph(&sp, 1, &Bounds::default()).unwrap();
        let gens = ci_generators(&sp, &g).unwrap();
        assert_eq!(gens.len(), 4);
        let texts: Vec<String> = gens.iter().map(|b| b.text(&sp).unwrap()).collect();
        // Edge {1,3}: states (1,1) and (2,1).
        assert_eq!(texts[1], "p111*p221 - p121*p211");
        // Edge {2,4}: states (1,2) and (2,2).
        assert_eq!(texts[2], "p112*p222 - p122*p212");
        // The polynomials really are the pair minors on four labels.
        for b in &gens {
            let (u, v) = b.labels();
            assert_eq!(*b.polynomial(), pair_binomial(4, u, v));
        }
    }

    #[test]
    fn decomposition_of_two_binary_variables() {
        let sp = space(&[2, 2]);
        let g = hamming_graph(&sp, 1, &Bounds::default()).unwrap();
        let d = decompose_spec(&sp, &g, &Bounds::default()).unwrap();
        assert_eq!(d.dimension(), 5);
        assert_eq!(d.components().len(), 3);
        let full = &d.components()[0];
        assert!(full.structural_zeros().is_empty());
        assert_eq!(full.blocks().len(), 1);
        assert_eq!(full.dimension(), 5);
        let diag = &d.components()[1];
        assert_eq!(diag.structural_zeros(), &[vec![1, 1], vec![2, 2]]);
        assert_eq!(diag.blocks(), &[vec![vec![1, 2]], vec![vec![2, 1]]]);
        assert_eq!(diag.dimension(), 4);
        let off = &d.components()[2];
        assert_eq!(off.structural_zeros(), &[vec![1, 2], vec![2, 1]]);
        assert_eq!(off.blocks(), &[vec![vec![1, 1]], vec![vec![2, 2]]]);
    }

    /// All partitions of `1..=d`, each as sorted blocks in first-element order.
    fn set_partitions(d: usize) -> Vec<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut assignment = vec![0usize; d];
        fn go(
            d: usize,
            i: usize,
            used: usize,
            assignment: &mut Vec<usize>,
            out: &mut Vec<Vec<Vec<usize>>>,
        ) {
            if i == d {
                let mut blocks = vec![Vec::new(); used];
                for (elem, &b) in assignment.iter().enumerate() {
                    blocks[b].push(elem + 1);
                }
                out.push(blocks);
                return;
            }
            for b in 0..=used.min(i) {
                assignment[i] = b;
                go(d, i + 1, used.max(b + 1), assignment, out);
            }
        }
        go(d, 0, 0, &mut assignment, &mut out);
        out
    }

    fn stirling2(n: usize, k: usize) -> usize {
        if n == 0 && k == 0 {
            return 1;
        }
        if n == 0 || k == 0 {
            return 0;
        }
        k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)
    }

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn two_variable_components_are_matched_partition_pairs() {
        // For two observed variables at radius one, the components
        // correspond to pairs of partitions with equally many blocks plus a
        // matching between the blocks; surviving states are the matched
        // products. Checked exhaustively for 2x2 and 2x3 state spaces.
        for dims in [[2usize, 2], [2, 3]] {
            let sp = space(&dims);
            let g = hamming_graph(&sp, 1, &Bounds::default()).unwrap();
            let d = decompose_spec(&sp, &g, &Bounds::default()).unwrap();

            let expected_count: usize = (1..=dims[0].min(dims[1]))
                .map(|c| stirling2(dims[0], c) * stirling2(dims[1], c) * factorial(c))
                .sum();
            assert_eq!(d.components().len(), expected_count);

            let mut expected = BTreeSet::new();
            for p1 in set_partitions(dims[0]) {
                for p2 in set_partitions(dims[1]) {
                    if p1.len() != p2.len() {
                        continue;
                    }
                    for perm in (0..p2.len()).permutations(p2.len()) {
                        let mut survivors = BTreeSet::new();
                        let mut blocks = Vec::new();
                        for (a_block, &pi) in p1.iter().zip(&perm) {
                            let mut block = Vec::new();
                            for &a in a_block {
                                for &b in &p2[pi] {
                                    block.push(vec![a, b]);
                                    survivors.insert(vec![a, b]);
                                }
                            }
                            block.sort();
                            blocks.push(block);
                        }
                        blocks.sort();
                        let zeros: Vec<Vec<usize>> =
                            sp.states().filter(|s| !survivors.contains(s)).collect();
                        expected.insert((zeros, blocks));
                    }
                }
            }
            let got: BTreeSet<_> = d
                .components()
                .iter()
                .map(|c| (c.structural_zeros().to_vec(), c.blocks().to_vec()))
                .collect();
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn full_support_implications() {
        let spec = RobustnessSpec::new(space(&[2, 2]), vec![statement(&[1], &[2])]).unwrap();
        let st = full_support_implication(&spec);
        assert_eq!(st.independent().to_vec(), vec![1]);
        assert_eq!(st.given().to_vec(), vec![2]);

        let spec = RobustnessSpec::hamming(space(&[2, 2]), 1).unwrap();
        let st = full_support_implication(&spec);
        assert_eq!(st.independent().to_vec(), vec![1, 2]);
        assert!(st.given().is_empty());

        let spec = RobustnessSpec::new(
            space(&[2, 2, 2]),
            vec![statement(&[1], &[2, 3]), statement(&[2], &[1, 3])],
        )
        .unwrap();
        let st = full_support_implication(&spec);
        assert_eq!(st.independent().to_vec(), vec![1, 2]);
        assert_eq!(st.given().to_vec(), vec![3]);
    }

    #[test]
    fn generators_reject_mismatched_graphs() {
        let sp = space(&[2, 2]);
        let g = LabeledGraph::new(3, [(1, 2)]).unwrap();
        assert!(ci_generators(&sp, &g).is_err());
        assert!(decompose_spec(&sp, &g, &Bounds::default()).is_err());
    }
}
