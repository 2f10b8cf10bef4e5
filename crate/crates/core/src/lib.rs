//! Binomial edge ideals: closed-form reduced Groebner bases from admissible
//! paths, an independent Buchberger implementation to check them against,
//! minimal prime decompositions with Krull dimension, structural graph
//! certificates, and a bridge from conditional-independence models to all of
//! the above.
//!
//! A graph on labels `1..=n` determines the ideal generated by
//! `x_i*y_j - x_j*y_i` over its edges, inside the polynomial ring on
//! `x1..xn, y1..yn` ordered lexicographically. Everything this crate
//! computes — bases, primality, dimension, model decompositions — is exact,
//! over arbitrary-precision rationals.

pub mod bounds;
pub mod ci;
pub mod decomposition;
pub mod edge_ideal;
pub mod error;
pub mod formats;
pub mod graph;
pub mod groebner;
pub mod oracle;
pub mod poly;

pub use bounds::Bounds;
pub use ci::{
    ci_generators, decompose_spec, full_support_implication, hamming_graph, spec_to_graph,
    CiBinomial, CiStatement, RobustnessSpec, SpecDecomposition, StateSpace, StatisticalComponent,
};
pub use decomposition::{
    cm_sufficient, component_contains, component_height, cycle_report, is_prime_ideal, is_unmixed,
    krull_dimension, minimal_primes, prime_component, CycleReport, Decomposition, PrimeComponent,
};
pub use edge_ideal::{
    admissible_paths, edge_generators, has_quadratic_gb, initial_ideal, pair_binomial,
    theoretical_groebner, xy_order, AdmissiblePath, BasisElement, EdgeBinomial, InitialIdeal,
    TheoreticalBasis,
};
pub use error::{Error, Result};
pub use graph::{
    all_shortest_paths_directed, closed_necessary_conditions, closedness_witness, closure,
    connected_components, enumerate_graphs, find_closed_labeling, is_closed_labeling,
    ClosednessWitness, ComponentPartition, LabeledGraph, VertexSubset,
};
pub use groebner::{buchberger_reduced, ideal_equal, intersect, normal_form, IdealBasis};
pub use oracle::{verify_up_to, OracleReport};
pub use poly::{Monomial, MonomialOrder, Polynomial, Term};
