//! Exhaustive cross-checks between the closed-form basis and an independent
//! Buchberger computation, over every graph on up to a few vertices.
//!
//! This is the trust anchor for the rest of the crate: the combinatorial
//! basis, the quadratic/closed equivalence, and the squarefree initial
//! ideal are each recomputed from first principles and compared.

use crate::bounds::Bounds;
use crate::edge_ideal::{
    edge_generators, has_quadratic_gb, initial_ideal, theoretical_groebner, xy_order,
};
use crate::error::{Error, Result};
use crate::graph::{enumerate_graphs, is_closed_labeling};
use crate::groebner::buchberger_reduced;
use crate::poly::Polynomial;

/// Tally of one verification sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub max_n: usize,
    /// Graphs enumerated, including edgeless ones.
    pub graphs_checked: usize,
    /// Graphs whose basis was recomputed via Buchberger and compared.
    pub bases_compared: usize,
    /// Admissible paths dropped as duplicates across all graphs; expected to
    /// stay zero.
    pub duplicate_paths: usize,
    pub failures: Vec<String>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Sweeps every graph on `1..=max_n` vertices and checks, for each: the
/// closed-form basis equals the Buchberger basis of the edge generators,
/// the basis is quadratic exactly when the labeling is closed, and every
/// leading monomial is squarefree. Graph count doubles per edge slot, so
/// `max_n` is capped at five.
pub fn verify_up_to(max_n: usize, bounds: &Bounds) -> Result<OracleReport> {
    if max_n == 0 {
        return Err(Error::domain("verification needs at least one vertex"));
    }
    if max_n > 5 {
        return Err(Error::resource(format!(
            "verification sweeps all 2^(n(n-1)/2) graphs; {max_n} vertices is past the cap of 5"
        )));
    }
    let mut report = OracleReport {
        max_n,
        graphs_checked: 0,
        bases_compared: 0,
        duplicate_paths: 0,
        failures: Vec::new(),
    };
    for n in 1..=max_n {
        let ord = xy_order(n);
        for g in enumerate_graphs(n) {
            report.graphs_checked += 1;
            let tag = || format!("n={} edges={:?}", n, g.edges().collect::<Vec<_>>());
            let basis = theoretical_groebner(&g, bounds)?;
            report.duplicate_paths += basis.duplicate_paths();

            if g.edge_count() == 0 {
                if !basis.is_empty() {
                    report
                        .failures
                        .push(format!("{}: edgeless graph produced a basis", tag()));
                }
            } else {
                report.bases_compared += 1;
                let gens: Vec<Polynomial> = edge_generators(&g)
                    .iter()
                    .map(|e| e.polynomial().clone())
                    .collect();
                let independent = buchberger_reduced(&gens, &ord)?;
                if independent.generators() != basis.polynomials().as_slice() {
                    report
                        .failures
                        .push(format!("{}: closed form differs from Buchberger", tag()));
                }
            }

            let quadratic = has_quadratic_gb(&g, bounds)?;
            if quadratic != is_closed_labeling(&g) {
                report.failures.push(format!(
                    "{}: quadratic basis is {quadratic} but closedness disagrees",
                    tag()
                ));
            }

            if !initial_ideal(&g, bounds)?.squarefree {
                report
                    .failures
                    .push(format!("{}: initial ideal is not squarefree", tag()));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_up_to_four_vertices() {
        let report = verify_up_to(4, &Bounds::default()).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        // 1 + 2 + 8 + 64 graphs; those with at least one edge get the
        // independent recomputation.
        assert_eq!(report.graphs_checked, 75);
        assert_eq!(report.bases_compared, 71);
        assert_eq!(report.duplicate_paths, 0);
    }

    #[test]
    fn sweep_bounds() {
        assert!(matches!(
            verify_up_to(0, &Bounds::default()).unwrap_err(),
            Error::Domain(_)
        ));
        assert!(matches!(
            verify_up_to(6, &Bounds::default()).unwrap_err(),
            Error::Resource(_)
        ));
    }
}
