//! Structural graph invariants and graph6 round-trips.

mod common;

use proptest::prelude::*;
use rand::Rng;

use pdim_core::iso::are_isomorphic;
use pdim_core::{parse_graph6, write_graph6, Graph};

proptest! {
    #[test]
    fn adjacency_is_symmetric_and_loop_free(
        n in 1usize..20,
        raw in prop::collection::vec((0usize..20, 0usize..20), 0..40),
    ) {
        let edges: Vec<(usize, usize)> =
            raw.into_iter().filter(|&(u, v)| u != v && u < n && v < n).collect();
        let g = Graph::from_edge_list(n, &edges).unwrap();
        for u in 0..n {
            prop_assert!(!g.has_edge(u, u));
            for v in 0..n {
                prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
        prop_assert_eq!(g.edge_count(), g.edges().count());
    }

    #[test]
    fn complement_involution(
        n in 1usize..16,
        raw in prop::collection::vec((0usize..16, 0usize..16), 0..40),
    ) {
        let edges: Vec<(usize, usize)> =
            raw.into_iter().filter(|&(u, v)| u != v && u < n && v < n).collect();
        let g = Graph::from_edge_list(n, &edges).unwrap();
        prop_assert_eq!(g.complement().complement(), g);
    }
}

#[test]
fn graph6_round_trip_bulk() {
    let mut rng = common::rng(7);
    for i in 0..10_000 {
        let n = rng.gen_range(1..=20);
        let p = rng.gen_range(0.0..=1.0);
        let g = common::random_graph(&mut rng, n, p);
        let s = write_graph6(&g).unwrap();
        assert_eq!(parse_graph6(&s).unwrap(), g, "iteration {i}: {s}");
    }
}

#[test]
fn join_of_empty_graphs_is_biclique() {
    for a in 1..=5usize {
        for b in 1..=5usize {
            let joined =
                Graph::empty(a).unwrap().join(&Graph::empty(b).unwrap()).unwrap();
            let kab = pdim_core::families::biclique(a, b).unwrap();
            assert!(are_isomorphic(&joined, &kab).unwrap(), "a={a} b={b}");
        }
    }
}
