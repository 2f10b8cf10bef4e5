//! Resource limits for the search-heavy operations.
//!
//! Every bound can be raised explicitly by the caller; the defaults keep the
//! exhaustive searches (permutation search, simple-path enumeration, subset
//! enumeration, elimination-order Groebner bases) inside territory where they
//! finish in reasonable time on small inputs.

/// Limits consulted by operations that perform unbounded-in-principle search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    /// Largest vertex count accepted by the closed-labeling permutation search.
    pub find_labeling_max_n: usize,
    /// Largest vertex count accepted by admissible-path enumeration.
    pub path_enum_max_n: usize,
    /// Hard cap on DFS steps spent enumerating simple paths in one call.
    pub path_cap: usize,
    /// Total ring variables (including the auxiliary one) allowed when
    /// intersecting ideals by elimination.
    pub intersect_max_vars: usize,
    /// Largest vertex count accepted by minimal-prime subset enumeration.
    pub minimal_primes_max_n: usize,
    /// Largest compiled state space (vertex count of a statement graph).
    pub state_space_max: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            find_labeling_max_n: 10,
            path_enum_max_n: 12,
            path_cap: 1_000_000,
            intersect_max_vars: 11,
            minimal_primes_max_n: 20,
            state_space_max: 4096,
        }
    }
}
