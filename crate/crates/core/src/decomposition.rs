//! Minimal prime decomposition of binomial edge ideals, Krull dimension, and
//! the related structural certificates.
//!
//! Every subset `S` of the vertices determines a prime component: the
//! variables `x_i, y_i` for `i` in `S`, together with all 2x2 minors on each
//! connected component ("block") of the graph with `S` deleted. The edge
//! ideal is the intersection of these components, and a component is minimal
//! exactly when every element of `S` is a cut point with respect to `S`
//! (deleting it from `S` strictly lowers the block count). Disconnected
//! graphs decompose componentwise and recombine by unions.

use crate::bounds::Bounds;
use crate::edge_ideal::{pair_binomial, x_index, xy_order, y_index};
use crate::error::{Error, Result};
use crate::graph::{
    connected_components, is_closed_labeling, ComponentPartition, LabeledGraph, VertexSubset,
};
use crate::poly::{Monomial, Polynomial};

/// The prime component attached to a vertex subset `S`: its blocks, and the
/// height `|S| + (n - c(S))` where `c(S)` counts the blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeComponent {
    s: VertexSubset,
    blocks: ComponentPartition,
    height: usize,
    n: usize,
}

impl PrimeComponent {
    pub fn cut_set(&self) -> &VertexSubset {
        &self.s
    }

    pub fn blocks(&self) -> &ComponentPartition {
        &self.blocks
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// `dim = (n - |S|) + c(S)`; together with the height this sums to `2n`.
    pub fn dimension(&self) -> usize {
        (self.n - self.s.len()) + self.blocks.count()
    }

    /// Materializes the generators: both variables per cut vertex, then all
    /// 2x2 minors within each block.
    pub fn generators(&self) -> Vec<Polynomial> {
        let n = self.n;
        let ord = xy_order(n);
        let mut gens = Vec::new();
        for v in self.s.members() {
            gens.push(Polynomial::from_terms(
                [(
                    crate::poly::rational(1),
                    Monomial::var(2 * n, x_index(n, v)),
                )],
                &ord,
            ));
            gens.push(Polynomial::from_terms(
                [(
                    crate::poly::rational(1),
                    Monomial::var(2 * n, y_index(n, v)),
                )],
                &ord,
            ));
        }
        for block in self.blocks.blocks() {
            let verts = block.to_vec();
            for (idx, &k) in verts.iter().enumerate() {
                for &l in &verts[idx + 1..] {
                    gens.push(pair_binomial(n, k, l));
                }
            }
        }
        gens
    }
}

/// Builds the prime component for an arbitrary subset `S`.
pub fn prime_component(g: &LabeledGraph, s: &VertexSubset) -> Result<PrimeComponent> {
    s.validate(g.n())?;
    let rest: VertexSubset = (1..=g.n()).filter(|v| !s.contains(*v)).collect();
    let blocks = connected_components(g, &rest)?;
    let height = s.len() + (g.n() - blocks.count());
    Ok(PrimeComponent {
        s: s.clone(),
        blocks,
        height,
        n: g.n(),
    })
}

/// Height of the component for `S` without materializing generators.
pub fn component_height(g: &LabeledGraph, s: &VertexSubset) -> Result<usize> {
    Ok(prime_component(g, s)?.height)
}

/// Containment test between components: the component of `T` sits inside the
/// component of `S` iff `T` is a subset of `S` and, for every block `H` of
/// the `T`-deletion, the part of `H` surviving `S` stays inside a single
/// block of the `S`-deletion.
pub fn component_contains(g: &LabeledGraph, t: &VertexSubset, s: &VertexSubset) -> Result<bool> {
    t.validate(g.n())?;
    s.validate(g.n())?;
    if !t.is_subset(s) {
        return Ok(false);
    }
    let t_blocks = prime_component(g, t)?.blocks;
    let s_blocks = prime_component(g, s)?.blocks;
    for h in t_blocks.blocks() {
        let survivors: Vec<usize> = h.members().filter(|v| !s.contains(*v)).collect();
        if survivors.is_empty() {
            continue;
        }
        let inside_one = s_blocks
            .blocks()
            .iter()
            .any(|b| survivors.iter().all(|&v| b.contains(v)));
        if !inside_one {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The minimal prime components of the edge ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    minimal_sets: Vec<VertexSubset>,
    components: Vec<PrimeComponent>,
    dimension: usize,
}

impl Decomposition {
    pub fn minimal_sets(&self) -> &[VertexSubset] {
        &self.minimal_sets
    }

    pub fn components(&self) -> &[PrimeComponent] {
        &self.components
    }

    /// `max (n - |S|) + c(S)` over the minimal components.
    pub fn dimension(&self) -> usize {
        self.dimension
    }
}

/// Minimal subsets for one connected piece of the graph, by exhausting its
/// subsets against the cut-point criterion.
fn minimal_sets_within(g: &LabeledGraph, block: &VertexSubset) -> Vec<VertexSubset> {
    let verts = block.to_vec();
    let count_blocks = |s: &VertexSubset| -> usize {
        let rest: VertexSubset = verts.iter().copied().filter(|v| !s.contains(*v)).collect();
        connected_components(g, &rest)
            .expect("subset of the graph's vertices")
            .count()
    };
    let mut out = Vec::new();
    for mask in 0u64..(1 << verts.len()) {
        let s: VertexSubset = verts
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        if s.is_empty() {
            out.push(s);
            continue;
        }
        let c_s = count_blocks(&s);
        let every_member_cuts = s.members().all(|v| {
            let without: VertexSubset = s.members().filter(|&w| w != v).collect();
            count_blocks(&without) < c_s
        });
        if every_member_cuts {
            out.push(s);
        }
    }
    out
}

/// All minimal prime components. Connected graphs use the cut-point
/// criterion directly; disconnected graphs take unions of one minimal choice
/// per connected piece. Output is sorted by cut set.
pub fn minimal_primes(g: &LabeledGraph, bounds: &Bounds) -> Result<Decomposition> {
    if g.n() > bounds.minimal_primes_max_n {
        return Err(Error::resource(format!(
            "minimal-prime enumeration on {} vertices exceeds the bound {}",
            g.n(),
            bounds.minimal_primes_max_n
        )));
    }
    let pieces = connected_components(g, &g.full_vertex_set())?;
    let mut combined: Vec<VertexSubset> = vec![VertexSubset::empty()];
    for piece in pieces.blocks() {
        let local = minimal_sets_within(g, piece);
        let mut next = Vec::with_capacity(combined.len() * local.len());
        for base in &combined {
            for choice in &local {
                next.push(base.members().chain(choice.members()).collect());
            }
        }
        combined = next;
    }
    combined.sort();
    let components: Vec<PrimeComponent> = combined
        .iter()
        .map(|s| prime_component(g, s))
        .collect::<Result<_>>()?;
    let dimension = components
        .iter()
        .map(|c| c.dimension())
        .max()
        .expect("at least the empty cut set is minimal");
    Ok(Decomposition {
        minimal_sets: combined,
        components,
        dimension,
    })
}

/// Krull dimension of the quotient by the edge ideal.
pub fn krull_dimension(g: &LabeledGraph, bounds: &Bounds) -> Result<usize> {
    Ok(minimal_primes(g, bounds)?.dimension)
}

/// The edge ideal is prime exactly when every connected piece induces a
/// complete graph.
pub fn is_prime_ideal(g: &LabeledGraph) -> bool {
    let pieces =
        connected_components(g, &g.full_vertex_set()).expect("full vertex set is always valid");
    pieces.blocks().iter().all(|block| {
        let verts = block.to_vec();
        verts
            .iter()
            .enumerate()
            .all(|(idx, &a)| verts[idx + 1..].iter().all(|&b| g.has_edge(a, b)))
    })
}

/// Unmixedness: all minimal components have the same height.
pub fn is_unmixed(g: &LabeledGraph, bounds: &Bounds) -> Result<bool> {
    let decomp = minimal_primes(g, bounds)?;
    let mut heights = decomp.components().iter().map(|c| c.height());
    let first = heights.next().expect("decomposition is never empty");
    Ok(heights.all(|h| h == first))
}

/// A sufficient condition for the quotient to be Cohen-Macaulay: the graph is
/// connected, the labeling is closed, and whenever edges `{i, j+1}` (with
/// `i < j`) and `{j, k+1}` (with `j < k`) are present, so is `{i, k+1}`.
/// Errors on disconnected input; apply it per connected piece instead.
pub fn cm_sufficient(g: &LabeledGraph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::domain(
            "the Cohen-Macaulay test applies to connected graphs; test each piece separately",
        ));
    }
    if !is_closed_labeling(g) {
        return Ok(false);
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for &(a, b) in &edges {
        // First edge read as {i, j+1}: i = a, j = b - 1, requiring i < j.
        if a + 1 >= b {
            continue;
        }
        for &(c, d) in &edges {
            // Second edge read as {j, k+1}: needs c = j and j < k, i.e. d > b.
            if c == b - 1 && d > b && !g.has_edge(a, d) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Prime/unmixed report for the cycle on `n` vertices; all three flags agree
/// (they hold exactly for the triangle).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleReport {
    pub n: usize,
    pub prime: bool,
    pub unmixed: bool,
    pub cm_equivalent: bool,
}

pub fn cycle_report(n: usize, bounds: &Bounds) -> Result<CycleReport> {
    let g = crate::graph::cycle_graph(n)?;
    Ok(CycleReport {
        n,
        prime: is_prime_ideal(&g),
        unmixed: is_unmixed(&g, bounds)?,
        cm_equivalent: n == 3,
    })
}
