//! Labeled simple graphs and the structural predicates the rest of the
//! toolkit is built on.
//!
//! A [`LabeledGraph`] lives on the vertex set `1..=n` and the labeling is
//! significant: closedness of the labeling, the closure, and the directed
//! shortest-path test all read the numeric labels, not just the isomorphism
//! type.
//!
//! # Key operations
//! - [`is_closed_labeling`] / [`closedness_witness`]: the pairwise edge
//!   condition that characterizes quadratic Groebner bases of edge binomials.
//! - [`closure`]: least closed supergraph under the same labeling.
//! - [`find_closed_labeling`]: pruned permutation search for a relabeling
//!   that makes the graph closed.
//! - [`all_shortest_paths_directed`]: checks that every shortest path between
//!   two vertices is monotone in the labels.
//! - [`closed_necessary_conditions`]: chordality and claw-freeness.

use std::collections::BTreeSet;

use crate::bounds::Bounds;
use crate::error::{Error, Result};

/// A simple graph on vertices `1..=n` with a fixed labeling.
///
/// Edges are stored as ordered pairs `(i, j)` with `i < j`; parallel edges
/// collapse and loops are rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl LabeledGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("vertex count must be positive"));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::domain(format!("loop at vertex {a}")));
            }
            if !(1..=n).contains(&a) || !(1..=n).contains(&b) {
                return Err(Error::domain(format!(
                    "edge {{{a},{b}}} has an endpoint outside 1..={n}"
                )));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(LabeledGraph { n, edges: set })
    }

    /// Edgeless graph on `1..=n`.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted order, each as `(i, j)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Neighbor lists indexed by vertex (`adjacency()[v]` for `v` in `1..=n`;
    /// index 0 is an empty placeholder).
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// All vertices `1..=n` as a subset.
    pub fn full_vertex_set(&self) -> VertexSubset {
        (1..=self.n).collect()
    }

    pub fn is_connected(&self) -> bool {
        connected_components(self, &self.full_vertex_set())
            .map(|p| p.count() <= 1)
            .unwrap_or(false)
    }

    /// Applies the relabeling `perm` (old vertex `v` becomes `perm[v-1]`).
    pub fn relabel(&self, perm: &[usize]) -> Result<LabeledGraph> {
        if perm.len() != self.n {
            return Err(Error::domain(format!(
                "permutation length {} does not match vertex count {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n + 1];
        for &p in perm {
            if !(1..=self.n).contains(&p) || seen[p] {
                return Err(Error::domain("relabeling is not a permutation of 1..=n"));
            }
            seen[p] = true;
        }
        LabeledGraph::new(
            self.n,
            self.edges.iter().map(|&(a, b)| (perm[a - 1], perm[b - 1])),
        )
    }
}

/// Complete graph on `1..=n`.
pub fn complete_graph(n: usize) -> Result<LabeledGraph> {
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            edges.push((i, j));
        }
    }
    LabeledGraph::new(n, edges)
}

/// Path graph `1 - 2 - ... - n`.
pub fn path_graph(n: usize) -> Result<LabeledGraph> {
    LabeledGraph::new(n, (1..n).map(|i| (i, i + 1)))
}

/// Cycle `1 - 2 - ... - n - 1`; requires `n >= 3`.
pub fn cycle_graph(n: usize) -> Result<LabeledGraph> {
    if n < 3 {
        return Err(Error::domain(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    let edges = (1..n).map(|i| (i, i + 1)).chain([(1, n)]);
    LabeledGraph::new(n, edges)
}

/// All `2^(n choose 2)` graphs on the labeled vertex set `1..=n`, in bitmask
/// order over the sorted list of possible edges.
pub fn enumerate_graphs(n: usize) -> impl Iterator<Item = LabeledGraph> {
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            pairs.push((i, j));
        }
    }
    let total: u64 = 1 << pairs.len();
    (0..total).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e);
        LabeledGraph::new(n, edges).expect("enumerated edges are valid")
    })
}

/// A set of vertex labels. Membership in a particular graph is validated at
/// the point of use, not at construction.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct VertexSubset {
    members: BTreeSet<usize>,
}

impl VertexSubset {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        VertexSubset {
            members: members.into_iter().collect(),
        }
    }

    pub fn empty() -> Self {
        VertexSubset::default()
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.iter().copied().collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_subset(&self, other: &VertexSubset) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Errors unless every member lies in `1..=n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        match self.members.iter().find(|&&v| v < 1 || v > n) {
            Some(v) => Err(Error::domain(format!("vertex {v} outside 1..={n}"))),
            None => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSubset::new(iter)
    }
}

/// Connected components of an induced subgraph, as disjoint vertex blocks
/// sorted by smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    blocks: Vec<VertexSubset>,
}

impl ComponentPartition {
    pub fn blocks(&self) -> &[VertexSubset] {
        &self.blocks
    }

    pub fn count(&self) -> usize {
        self.blocks.len()
    }
}

/// An orientation of a labeled graph; arcs always point from the smaller to
/// the larger label, so the result is acyclic by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
}

impl DirectedGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }
}

/// Subgraph induced on `t`, kept on the same label universe `1..=n`
/// (vertices outside `t` become isolated).
pub fn induced_subgraph(g: &LabeledGraph, t: &VertexSubset) -> Result<LabeledGraph> {
    t.validate(g.n())?;
    LabeledGraph::new(
        g.n(),
        g.edges().filter(|&(a, b)| t.contains(a) && t.contains(b)),
    )
}

/// Connected components of the subgraph induced on `t`. Members of `t` with
/// no incident induced edge appear as singleton blocks.
pub fn connected_components(g: &LabeledGraph, t: &VertexSubset) -> Result<ComponentPartition> {
    t.validate(g.n())?;
    let adj = g.adjacency();
    let mut seen = vec![false; g.n() + 1];
    let mut blocks = Vec::new();
    for start in t.members() {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        let mut block = BTreeSet::new();
        seen[start] = true;
        while let Some(v) = stack.pop() {
            block.insert(v);
            for &w in &adj[v] {
                if t.contains(w) && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        blocks.push(VertexSubset::new(block));
    }
    Ok(ComponentPartition { blocks })
}

/// Evidence that a labeling is not closed: two edges that share the smaller
/// (or larger) endpoint while the edge between their other endpoints is
/// absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosednessWitness {
    pub edge_a: (usize, usize),
    pub edge_b: (usize, usize),
    pub missing: (usize, usize),
}

/// First violation of the closedness condition in sorted edge order, or
/// `None` when the labeling is closed.
pub fn closedness_witness(g: &LabeledGraph) -> Option<ClosednessWitness> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for (idx, &(i, j)) in edges.iter().enumerate() {
        for &(k, l) in &edges[idx + 1..] {
            let missing = if i == k && j != l {
                (j.min(l), j.max(l))
            } else if j == l && i != k {
                (i.min(k), i.max(k))
            } else {
                continue;
            };
            if !g.has_edge(missing.0, missing.1) {
                return Some(ClosednessWitness {
                    edge_a: (i, j),
                    edge_b: (k, l),
                    missing,
                });
            }
        }
    }
    None
}

/// Whether the given labeling is closed: whenever two edges share their
/// smaller endpoint or share their larger endpoint, the remaining two
/// endpoints are also joined by an edge.
pub fn is_closed_labeling(g: &LabeledGraph) -> bool {
    closedness_witness(g).is_none()
}

/// Least closed supergraph of `g` under the same labeling, computed by
/// saturating the forced-edge rule.
pub fn closure(g: &LabeledGraph) -> LabeledGraph {
    let mut edges = g.edges.clone();
    loop {
        let snapshot: Vec<(usize, usize)> = edges.iter().copied().collect();
        let mut grew = false;
        for (idx, &(i, j)) in snapshot.iter().enumerate() {
            for &(k, l) in &snapshot[idx + 1..] {
                let forced = if i == k && j != l {
                    (j.min(l), j.max(l))
                } else if j == l && i != k {
                    (i.min(k), i.max(k))
                } else {
                    continue;
                };
                grew |= edges.insert(forced);
            }
        }
        if !grew {
            return LabeledGraph { n: g.n, edges };
        }
    }
}

/// Searches for a permutation of the labels under which the graph is closed.
///
/// Returns the lexicographically smallest such permutation `sigma` (as the
/// sequence `sigma(1), ..., sigma(n)`), or `None` when no labeling of the
/// graph is closed. The search assigns new labels to old vertices in order
/// and prunes any prefix whose relabeled edges already violate closedness;
/// this is sound because a violation among placed vertices can never be
/// repaired by placing more.
pub fn find_closed_labeling(g: &LabeledGraph, bounds: &Bounds) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if n > bounds.find_labeling_max_n {
        return Err(Error::resource(format!(
            "closed-labeling search on {n} vertices exceeds the bound {}",
            bounds.find_labeling_max_n
        )));
    }

    fn prefix_ok(g: &LabeledGraph, assign: &[usize]) -> bool {
        // Relabeled edges among the placed old vertices 1..=assign.len().
        let placed = assign.len();
        let mut relabeled = Vec::new();
        for (a, b) in g.edges() {
            if a <= placed && b <= placed {
                let (x, y) = (assign[a - 1], assign[b - 1]);
                relabeled.push((x.min(y), x.max(y)));
            }
        }
        relabeled.sort_unstable();
        let edge_set: BTreeSet<(usize, usize)> = relabeled.iter().copied().collect();
        for (idx, &(i, j)) in relabeled.iter().enumerate() {
            for &(k, l) in &relabeled[idx + 1..] {
                let forced = if i == k && j != l {
                    (j.min(l), j.max(l))
                } else if j == l && i != k {
                    (i.min(k), i.max(k))
                } else {
                    continue;
                };
                if !edge_set.contains(&forced) {
                    return false;
                }
            }
        }
        true
    }

    fn extend(g: &LabeledGraph, assign: &mut Vec<usize>, used: &mut [bool]) -> bool {
        if assign.len() == g.n() {
            return true;
        }
        for label in 1..=g.n() {
            if used[label - 1] {
                continue;
            }
            assign.push(label);
            used[label - 1] = true;
            if prefix_ok(g, assign) && extend(g, assign, used) {
                return true;
            }
            used[label - 1] = false;
            assign.pop();
        }
        false
    }

    let mut assign = Vec::with_capacity(n);
    let mut used = vec![false; n];
    if extend(g, &mut assign, &mut used) {
        Ok(Some(assign))
    } else {
        Ok(None)
    }
}

/// Orients every edge from its smaller to its larger label.
pub fn to_dag(g: &LabeledGraph) -> DirectedGraph {
    DirectedGraph {
        n: g.n(),
        arcs: g.edges.clone(),
    }
}

/// Whether every shortest path between `i` and `j` is monotone in the labels
/// (equivalently, a directed path in [`to_dag`]'s orientation).
///
/// Errors if `i == j`, an endpoint is out of range, or the vertices lie in
/// different components.
pub fn all_shortest_paths_directed(g: &LabeledGraph, i: usize, j: usize) -> Result<bool> {
    if i == j {
        return Err(Error::domain("endpoints must be distinct"));
    }
    for v in [i, j] {
        if !(1..=g.n()).contains(&v) {
            return Err(Error::domain(format!("vertex {v} outside 1..={}", g.n())));
        }
    }
    let adj = g.adjacency();
    let mut dist = vec![usize::MAX; g.n() + 1];
    dist[i] = 0;
    let mut queue = std::collections::VecDeque::from([i]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    if dist[j] == usize::MAX {
        return Err(Error::domain(format!(
            "vertices {i} and {j} lie in different components"
        )));
    }

    // Walk backwards from j along distance-decreasing arcs; each completed
    // walk is a shortest path, checked for monotonicity as the labels go.
    fn descend(adj: &[Vec<usize>], dist: &[usize], path: &mut Vec<usize>) -> bool {
        let v = *path.last().unwrap();
        if dist[v] == 0 {
            return is_monotone(path);
        }
        for &w in &adj[v] {
            if dist[w] + 1 == dist[v] {
                path.push(w);
                if !descend(adj, dist, path) {
                    return false;
                }
                path.pop();
            }
        }
        true
    }

    fn is_monotone(path: &[usize]) -> bool {
        path.windows(2).all(|w| w[0] < w[1]) || path.windows(2).all(|w| w[0] > w[1])
    }

    let mut path = vec![j];
    Ok(descend(&adj, &dist, &mut path))
}

/// Chordality via simplicial elimination: repeatedly delete a vertex whose
/// remaining neighbors form a clique; the graph is chordal exactly when this
/// empties it.
pub fn is_chordal(g: &LabeledGraph) -> bool {
    let adj = g.adjacency();
    let mut alive: BTreeSet<usize> = (1..=g.n()).collect();
    'outer: while !alive.is_empty() {
        for &v in &alive {
            let nb: Vec<usize> = adj[v]
                .iter()
                .copied()
                .filter(|w| alive.contains(w))
                .collect();
            let simplicial = nb
                .iter()
                .enumerate()
                .all(|(idx, &a)| nb[idx + 1..].iter().all(|&b| g.has_edge(a, b)));
            if simplicial {
                alive.remove(&v);
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Claw-freeness: no vertex has three pairwise non-adjacent neighbors.
pub fn is_claw_free(g: &LabeledGraph) -> bool {
    let adj = g.adjacency();
    for mut nb in adj.into_iter().skip(1) {
        nb.sort_unstable();
        for (p, &a) in nb.iter().enumerate() {
            for (q, &b) in nb.iter().enumerate().skip(p + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &c in nb.iter().skip(q + 1) {
                    if !g.has_edge(a, c) && !g.has_edge(b, c) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `(chordal, claw_free)` — both hold for every graph that admits a closed
/// labeling; neither alone is sufficient.
pub fn closed_necessary_conditions(g: &LabeledGraph) -> (bool, bool) {
    (is_chordal(g), is_claw_free(g))
}
