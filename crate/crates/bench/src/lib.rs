//! Graph builders shared by the benchmark suite.

use bei_core::LabeledGraph;

/// Star with center 1 and `n - 1` leaves. Not closed for `n >= 4`, and its
/// closure is the complete graph, which makes it a good stress input.
pub fn star_graph(n: usize) -> LabeledGraph {
    LabeledGraph::new(n, (2..=n).map(|v| (1, v))).expect("a star is a valid graph")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_shape() {
        let g = star_graph(5);
        assert_eq!(g.edge_count(), 4);
        assert!(g.neighbors(1).len() == 4 && g.neighbors(3) == vec![1]);
    }
}
