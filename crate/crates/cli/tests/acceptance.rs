//! End-to-end acceptance gate: one pass/fail line per criterion.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use pdim_cli::suites;
use pdim_core::families;
use pdim_core::iso::{augmentations, canonical_form, enumerate_connected};
use pdim_core::partition::is_locating_partition;
use pdim_core::solver::{partition_dimension, partition_dimension_naive};
use pdim_core::twins::twin_decomposition;
use pdim_core::{distances, parse_graph6, write_graph6, Graph};

fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

fn bp(g: &Graph) -> usize {
    partition_dimension(g, None).unwrap().value().expect("default budget suffices")
}

/// Parallel variant of the catalog builder used by `pdim gen-catalog`.
fn build_catalog(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1).unwrap()];
    for _ in 1..n {
        let mut forms: Vec<String> = level
            .par_iter()
            .flat_map_iter(|g| augmentations(g).map(|h| canonical_form(&h).unwrap()))
            .collect();
        forms.sort();
        forms.dedup();
        level = forms.iter().map(|f| parse_graph6(f).unwrap()).collect();
    }
    level
}

fn criterion_1_table2() -> bool {
    suites::suite_table2(12).unwrap().pass
}

fn criterion_2_refutation() -> bool {
    suites::suite_refutation(&[9, 10], None).unwrap().pass
}

fn criterion_3_forward_direction() -> bool {
    let mut ok = true;
    for n in [9usize, 10] {
        for i in 1..=15usize {
            let g = families::h_graph(i, n).unwrap();
            let expected_tau = match i {
                1 | 2 => n - 2,
                3..=10 => n - 3,
                _ => n - 4,
            };
            ok &= twin_decomposition(&g).tau() == expected_tau;
            ok &= bp(&g) == n - 2;
        }
    }
    ok
}

fn criterion_4_exhaustive_n9() -> bool {
    let catalog = build_catalog(9);
    if catalog.len() != 261_080 {
        eprintln!("catalog size {} != 261080", catalog.len());
        return false;
    }
    let r2 = suites::suite_bp_n_minus_2(9, &catalog, None).unwrap();
    let r1 = suites::suite_bp_n_minus_1(9, &catalog, None).unwrap();
    r1.pass && r2.pass
}

fn criterion_5_oracle_equivalence() -> bool {
    let mut ok = true;
    for n in 1..=6 {
        for g in enumerate_connected(n).unwrap() {
            ok &= bp(&g) == partition_dimension_naive(&g).unwrap().value().unwrap();
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for i in 0..200 {
        let g = random_connected(&mut rng, 7, [0.2, 0.4, 0.6, 0.8][i % 4]);
        ok &= bp(&g) == partition_dimension_naive(&g).unwrap().value().unwrap();
    }
    ok
}

fn criterion_6_twin_characterization() -> bool {
    suites::suite_twin_n_minus_2().unwrap().pass
}

fn criterion_7_realization() -> bool {
    suites::suite_realization(None).unwrap().pass
}

fn criterion_8_property_spot_checks() -> bool {
    let mut ok = true;
    let mut rng = ChaCha8Rng::seed_from_u64(4242);

    // bound chain + witness validation + twin separation on random graphs
    for i in 0..60 {
        let n = 8 + i % 3;
        let g = random_connected(&mut rng, n, 0.4);
        let td = twin_decomposition(&g);
        let res = partition_dimension(&g, None).unwrap();
        let v = res.value().unwrap();
        let pi = res.witness().unwrap();
        ok &= td.tau() <= v;
        ok &= is_locating_partition(&distances(&g), pi).0;
        ok &= twin_decomposition(&g.complement()).tau() == td.tau();
    }

    // graph6 round-trips
    for _ in 0..2000 {
        let n = rng.gen_range(1..=20);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(0.3) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges).unwrap();
        ok &= parse_graph6(&write_graph6(&g).unwrap()).unwrap() == g;
    }

    // determinism across pool sizes
    let graphs: Vec<Graph> = (0..20).map(|_| random_connected(&mut rng, 9, 0.4)).collect();
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| {
            graphs
                .par_iter()
                .map(|g| {
                    let r = partition_dimension(g, None).unwrap();
                    (r.value().unwrap(), r.witness().unwrap().clone(), r.stats.clone())
                })
                .collect::<Vec<_>>()
        })
    };
    ok &= run(1) == run(4);
    ok
}

#[test]
fn acceptance() {
    let criteria: Vec<(&str, fn() -> bool)> = vec![
        ("table 2 reproduction", criterion_1_table2),
        ("refutation beta_p(F_i) = n-3", criterion_2_refutation),
        ("forward direction beta_p(H_i) = n-2", criterion_3_forward_direction),
        ("exhaustive characterization at n = 9", criterion_4_exhaustive_n9),
        ("oracle equivalence", criterion_5_oracle_equivalence),
        ("twin number n-2 characterization", criterion_6_twin_characterization),
        ("tree realization grid", criterion_7_realization),
        ("property spot checks", criterion_8_property_spot_checks),
    ];
    let mut all = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = std::time::Instant::now();
        let pass = f();
        println!(
            "criterion {}: {} — {} ({:.1?})",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            name,
            t.elapsed()
        );
        all &= pass;
    }
    assert!(all, "at least one acceptance criterion failed");
}
