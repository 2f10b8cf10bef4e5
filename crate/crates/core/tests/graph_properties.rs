//! Structural sweeps that cut across modules: which graph shapes admit
//! closed labelings, and bookkeeping invariants of the combinatorial basis.

use bei_core::graph::enumerate_graphs;
use bei_core::{
    find_closed_labeling, is_closed_labeling, theoretical_groebner, Bounds, LabeledGraph,
};

/// Two-colorability by depth-first search.
fn is_bipartite(g: &LabeledGraph) -> bool {
    let n = g.n();
    let mut color = vec![0i8; n + 1]; // 0 unset, 1 / -1 the two sides
    for start in 1..=n {
        if color[start] != 0 {
            continue;
        }
        color[start] = 1;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in 1..=n {
                if !g.has_edge(v, w) {
                    continue;
                }
                if color[w] == 0 {
                    color[w] = -color[v];
                    stack.push(w);
                } else if color[w] == color[v] {
                    return false;
                }
            }
        }
    }
    true
}

/// Connected, acyclic, and everywhere of degree at most two.
fn is_path_shaped(g: &LabeledGraph) -> bool {
    if !g.is_connected() || g.edge_count() + 1 != g.n() {
        return false;
    }
    (1..=g.n()).all(|v| g.neighbors(v).len() <= 2)
}

#[test]
fn bipartite_graphs_admit_closed_labelings_only_when_path_shaped() {
    let bounds = Bounds::default();
    for n in 1..=6 {
        for g in enumerate_graphs(n) {
            if !g.is_connected() || !is_bipartite(&g) {
                continue;
            }
            let found = find_closed_labeling(&g, &bounds).unwrap();
            assert_eq!(
                found.is_some(),
                is_path_shaped(&g),
                "n={} edges={:?}",
                n,
                g.edges().collect::<Vec<_>>()
            );
        }
    }
}

#[test]
fn found_labelings_really_are_closed() {
    let bounds = Bounds::default();
    for n in 1..=5 {
        for g in enumerate_graphs(n) {
            if let Some(sigma) = find_closed_labeling(&g, &bounds).unwrap() {
                let relabeled = g.relabel(&sigma).unwrap();
                assert!(
                    is_closed_labeling(&relabeled),
                    "n={} edges={:?} sigma={:?}",
                    n,
                    g.edges().collect::<Vec<_>>(),
                    sigma
                );
            }
        }
    }
}

#[test]
fn basis_elements_have_path_degree_and_no_duplicates_occur() {
    // Each element's total degree is the edge minor's two plus one per
    // interior vertex, and no two admissible paths ever collapse to the
    // same polynomial on up to five vertices.
    let bounds = Bounds::default();
    for n in 1..=5 {
        for g in enumerate_graphs(n) {
            let basis = theoretical_groebner(&g, &bounds).unwrap();
            assert_eq!(basis.duplicate_paths(), 0);
            for e in basis.elements() {
                let interior = e.path.vertices().len() - 2;
                assert_eq!(
                    e.polynomial.total_degree(),
                    Some(2 + interior as u32),
                    "path {:?}",
                    e.path.vertices()
                );
            }
        }
    }
}
