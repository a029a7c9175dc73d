//! Twin relation properties on the exhaustive small-order corpus.

mod common;

use pdim_core::dist::distances;
use pdim_core::iso::enumerate_connected;
use pdim_core::twins::{are_twins, twin_decomposition};
use pdim_core::Graph;

fn small_corpus() -> Vec<Graph> {
    (1..=7).flat_map(|n| enumerate_connected(n).unwrap()).collect()
}

#[test]
fn twin_relation_is_symmetric_and_transitive() {
    for g in small_corpus() {
        let n = g.n();
        for u in 0..n {
            for v in (u + 1)..n {
                assert_eq!(are_twins(&g, u, v).unwrap(), are_twins(&g, v, u).unwrap());
                for w in (v + 1)..n {
                    if are_twins(&g, u, v).unwrap() && are_twins(&g, v, w).unwrap() {
                        assert!(are_twins(&g, u, w).unwrap(), "{g:?} {u} {v} {w}");
                    }
                }
            }
        }
    }
}

#[test]
fn twins_are_equidistant_from_everything_else() {
    for g in small_corpus() {
        let dm = distances(&g);
        for u in 0..g.n() {
            for v in (u + 1)..g.n() {
                if !are_twins(&g, u, v).unwrap() {
                    continue;
                }
                for z in 0..g.n() {
                    if z != u && z != v {
                        assert_eq!(dm.dist(u, z), dm.dist(v, z));
                    }
                }
            }
        }
    }
}

#[test]
fn twin_classes_invariant_under_complement() {
    let mut rng = common::rng(23);
    let graphs: Vec<Graph> = small_corpus()
        .into_iter()
        .chain((0..200).map(|_| common::random_graph(&mut rng, 10, 0.4)))
        .collect();
    for g in graphs {
        let a = twin_decomposition(&g);
        let b = twin_decomposition(&g.complement());
        let classes =
            |d: &pdim_core::twins::TwinDecomposition| -> Vec<Vec<usize>> {
                let mut c: Vec<Vec<usize>> =
                    d.classes.iter().map(|c| c.vertices.clone()).collect();
                c.sort();
                c
            };
        assert_eq!(classes(&a), classes(&b), "{g:?}");
        assert_eq!(a.tau(), b.tau());
    }
}

#[test]
fn tau_equals_n_iff_complete() {
    for g in small_corpus() {
        let n = g.n();
        let complete = g.edge_count() == n * (n - 1) / 2;
        assert_eq!(twin_decomposition(&g).tau() == n, complete, "{g:?}");
    }
}
