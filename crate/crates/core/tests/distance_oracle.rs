//! BFS distances against an independent Floyd-Warshall oracle.

mod common;

use pdim_core::dist::distances;
use pdim_core::iso::enumerate_connected;
use pdim_core::Graph;

const INF: u32 = u32::MAX / 4;

fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for v in 0..n {
        d[v][v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    d
}

fn agree(g: &Graph) {
    let dm = distances(g);
    let fw = floyd_warshall(g);
    for u in 0..g.n() {
        for v in 0..g.n() {
            let expect = (fw[u][v] < INF).then_some(fw[u][v]);
            assert_eq!(dm.get(u, v), expect, "({u},{v}) in {g:?}");
        }
    }
}

#[test]
fn all_connected_graphs_up_to_7() {
    for n in 1..=7 {
        for g in enumerate_connected(n).unwrap() {
            agree(&g);
        }
    }
}

#[test]
fn random_graphs_including_disconnected() {
    let mut rng = common::rng(11);
    for _ in 0..300 {
        let g = common::random_graph(&mut rng, 9, 0.25);
        agree(&g);
    }
}
