//! Parameterized generators for every named graph family.
//!
//! Composite families are built by composing the join/union operators in
//! the left-to-right order of their defining expression, so vertex
//! numbering is fixed: first operand block first, deleted edges chosen
//! lexicographically least among the qualifying ones.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    EmptyGraph { n: usize },
    /// K_{1,n-1} on n vertices, center 0.
    Star { n: usize },
    Biclique { a: usize, b: usize },
    /// K_{n-2} v complement(K_2): K_n minus one edge.
    SplitCliqueIndep { n: usize },
    /// complement(K_{n-2}) v K_2.
    SplitIndepClique { n: usize },
    /// K_1 v (K_1 + K_{n-2}): K_{n-1} with a pendant leaf.
    PendantClique { n: usize },
    H { i: usize, n: usize },
    F { i: usize, n: usize },
    /// Complete k-ary tree of height 2.
    TK2 { k: usize },
    /// The spider-with-pendant-paths tree T*(k,h).
    TStar { k: usize, h: usize },
}

impl FamilySpec {
    /// Parse the CLI form, e.g. "H:3:9", "Tk2:3", "biclique:2:7".
    pub fn parse(s: &str) -> Result<FamilySpec> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |idx: usize| -> Result<usize> {
            parts
                .get(idx)
                .and_then(|p| p.parse().ok())
                .ok_or_else(|| Error::UnknownFamily(s.to_string()))
        };
        let spec = match (parts[0].to_ascii_lowercase().as_str(), parts.len()) {
            ("path", 2) => FamilySpec::Path { n: num(1)? },
            ("cycle", 2) => FamilySpec::Cycle { n: num(1)? },
            ("complete", 2) => FamilySpec::Complete { n: num(1)? },
            ("empty", 2) => FamilySpec::EmptyGraph { n: num(1)? },
            ("star", 2) => FamilySpec::Star { n: num(1)? },
            ("biclique", 3) => FamilySpec::Biclique { a: num(1)?, b: num(2)? },
            ("splitclique", 2) => FamilySpec::SplitCliqueIndep { n: num(1)? },
            ("splitindep", 2) => FamilySpec::SplitIndepClique { n: num(1)? },
            ("pendantclique", 2) => FamilySpec::PendantClique { n: num(1)? },
            ("h", 3) => FamilySpec::H { i: num(1)?, n: num(2)? },
            ("f", 3) => FamilySpec::F { i: num(1)?, n: num(2)? },
            ("tk2", 2) => FamilySpec::TK2 { k: num(1)? },
            ("tstar", 3) => FamilySpec::TStar { k: num(1)?, h: num(2)? },
            _ => return Err(Error::UnknownFamily(s.to_string())),
        };
        Ok(spec)
    }

    pub fn generate(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Path { n } => path(n),
            FamilySpec::Cycle { n } => cycle(n),
            FamilySpec::Complete { n } => complete(n),
            FamilySpec::EmptyGraph { n } => Graph::empty(n),
            FamilySpec::Star { n } => star(n),
            FamilySpec::Biclique { a, b } => biclique(a, b),
            FamilySpec::SplitCliqueIndep { n } => {
                require(n >= 4, "splitclique needs n >= 4")?;
                complete(n - 2)?.join(&Graph::empty(2)?)
            }
            FamilySpec::SplitIndepClique { n } => {
                require(n >= 4, "splitindep needs n >= 4")?;
                Graph::empty(n - 2)?.join(&complete(2)?)
            }
            FamilySpec::PendantClique { n } => {
                require(n >= 3, "pendantclique needs n >= 3")?;
                complete(1)?.join(&Graph::empty(1)?.disjoint_union(&complete(n - 2)?)?)
            }
            FamilySpec::H { i, n } => h_graph(i, n),
            FamilySpec::F { i, n } => f_graph(i, n),
            FamilySpec::TK2 { k } => t_k2(k),
            FamilySpec::TStar { k, h } => t_star(k, h),
        }
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            FamilySpec::Path { n } => write!(f, "path:{n}"),
            FamilySpec::Cycle { n } => write!(f, "cycle:{n}"),
            FamilySpec::Complete { n } => write!(f, "complete:{n}"),
            FamilySpec::EmptyGraph { n } => write!(f, "empty:{n}"),
            FamilySpec::Star { n } => write!(f, "star:{n}"),
            FamilySpec::Biclique { a, b } => write!(f, "biclique:{a}:{b}"),
            FamilySpec::SplitCliqueIndep { n } => write!(f, "splitclique:{n}"),
            FamilySpec::SplitIndepClique { n } => write!(f, "splitindep:{n}"),
            FamilySpec::PendantClique { n } => write!(f, "pendantclique:{n}"),
            FamilySpec::H { i, n } => write!(f, "H:{i}:{n}"),
            FamilySpec::F { i, n } => write!(f, "F:{i}:{n}"),
            FamilySpec::TK2 { k } => write!(f, "Tk2:{k}"),
            FamilySpec::TStar { k, h } => write!(f, "Tstar:{k}:{h}"),
        }
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::FamilyParam(msg.to_string()))
    }
}

pub fn path(n: usize) -> Result<Graph> {
    require(n >= 1, "path needs n >= 1")?;
    Graph::from_edge_list(n, &(0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>())
}

pub fn cycle(n: usize) -> Result<Graph> {
    require(n >= 3, "cycle needs n >= 3")?;
    let mut e: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    e.push((n - 1, 0));
    Graph::from_edge_list(n, &e)
}

pub fn complete(n: usize) -> Result<Graph> {
    require(n >= 1, "complete needs n >= 1")?;
    let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_edge_list(n, &e)
}

/// K_{1,n-1} on n vertices, center 0.
pub fn star(n: usize) -> Result<Graph> {
    require(n >= 2, "star needs n >= 2")?;
    Graph::from_edge_list(n, &(1..n).map(|v| (0, v)).collect::<Vec<_>>())
}

pub fn biclique(a: usize, b: usize) -> Result<Graph> {
    require(a >= 1 && b >= 1, "biclique needs a,b >= 1")?;
    Graph::empty(a)?.join(&Graph::empty(b)?)
}

/// The 15 generators of the beta_p = n-2 characterization.
pub fn h_graph(i: usize, n: usize) -> Result<Graph> {
    require((1..=15).contains(&i), "h_graph index must be 1..=15")?;
    require(n >= 7, "h_graph needs n >= 7")?;
    let g = match i {
        1 => biclique(2, n - 2)?,
        2 => Graph::empty(n - 2)?.join(&complete(2)?)?,
        3 => complete(n - 3)?.join(&complete(2)?.disjoint_union(&Graph::empty(1)?)?)?,
        4 => complete(n - 3)?.join(&Graph::empty(3)?)?,
        5 => complete(n - 3)?.disjoint_union(&Graph::empty(1)?)?.join(&complete(2)?)?,
        6 => complete(n - 3)?.disjoint_union(&Graph::empty(1)?)?.join(&Graph::empty(2)?)?,
        // e_1: the K_1 vertex (n-3) to the least vertex of the joined pair
        7 => h_graph(6, n)?.delete_edge(n - 3, n - 2)?,
        8 => complete(n - 3)?.disjoint_union(&complete(2)?)?.join(&complete(1)?)?,
        // e_2: the K_1 vertex (n-1) to the least K_2 vertex (n-3)
        9 => h_graph(8, n)?.delete_edge(n - 3, n - 1)?,
        10 => complete(n - 3)?.disjoint_union(&Graph::empty(2)?)?.join(&complete(1)?)?,
        11 => complete(n - 4)?.join(&cycle(4)?)?,
        12 => complete(n - 4)?.join(&path(4)?)?,
        13 => {
            let k2 = complete(2)?;
            complete(n - 4)?.join(&k2.disjoint_union(&k2)?)?
        }
        // e': the K_1 vertex (n-4) to the least P_3 endpoint (n-3)
        14 => complete(n - 4)?
            .disjoint_union(&Graph::empty(1)?)?
            .join(&path(3)?)?
            .delete_edge(n - 4, n - 3)?,
        // e_3: the K_1 vertex to the remaining P_3 endpoint (n-1)
        15 => h_graph(14, n)?.delete_edge(n - 4, n - 1)?,
        _ => unreachable!(),
    };
    Ok(g)
}

/// The refuted-characterization graphs with figure-free definitions;
/// F_4, F_6, F_7, F_8 are only defined by an unavailable figure and are not
/// generated.
pub fn f_graph(i: usize, n: usize) -> Result<Graph> {
    require(matches!(i, 1 | 2 | 3 | 5), "f_graph supports i in {1,2,3,5}")?;
    require(n >= 7, "f_graph needs n >= 7")?;
    let g = match i {
        1 => Graph::empty(n - 3)?.join(&complete(2)?.disjoint_union(&Graph::empty(1)?)?)?,
        2 => biclique(2, n - 2)?.delete_edge(0, 2)?,
        3 => complete(1)?.join(&Graph::empty(n - 3)?.disjoint_union(&complete(2)?)?)?,
        // delete a claw at 0 with leaves 1,2,3 plus the edge {1,2}
        5 => complete(n)?
            .delete_edge(0, 1)?
            .delete_edge(0, 2)?
            .delete_edge(0, 3)?
            .delete_edge(1, 2)?,
        _ => unreachable!(),
    };
    Ok(g)
}

/// Complete k-ary tree of height 2: root 0, children 1..=k, grandchildren
/// of child i at k + (i-1)k + j for j = 1..=k.
pub fn t_k2(k: usize) -> Result<Graph> {
    require(k >= 2, "t_k2 needs k >= 2")?;
    let n = 1 + k + k * k;
    require(n <= crate::graph::MAX_VERTICES, "t_k2 order exceeds 64")?;
    let mut edges = Vec::new();
    for i in 1..=k {
        edges.push((0, i));
        for j in 1..=k {
            edges.push((i, k + (i - 1) * k + j));
        }
    }
    Graph::from_edge_list(n, &edges)
}

fn tstar_indices(k: usize, h: usize) -> (usize, impl Fn(usize, usize) -> usize, impl Fn(usize, usize) -> usize) {
    let m = h - 1;
    let x_idx = move |i: usize, j: usize| k + 2 + (i - 1) * m + (j - 1);
    let y_idx = move |i: usize, j: usize| k + 2 + m * m + (i - 1) * m + (j - 1);
    (k + 2 + 2 * m * m, x_idx, y_idx)
}

/// T*(k,h): hub x = 0 with (h-1)^2 pendant paths of length 2, plus a
/// neighbor z = 1 carrying k leaves z_i = 1 + i. Order k + 2 + 2(h-1)^2.
pub fn t_star(k: usize, h: usize) -> Result<Graph> {
    require(k >= 1, "t_star needs k >= 1")?;
    require(h >= k + 2, "t_star needs h >= k + 2")?;
    let (n, x_idx, y_idx) = tstar_indices(k, h);
    require(n <= crate::graph::MAX_VERTICES, "t_star order exceeds 64")?;
    let mut edges = vec![(0, 1)];
    for i in 1..=k {
        edges.push((1, 1 + i));
    }
    for i in 1..h {
        for j in 1..h {
            edges.push((0, x_idx(i, j)));
            edges.push((x_idx(i, j), y_idx(i, j)));
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// The explicit size k+1 locating partition from the T(k,2) analysis:
/// S_i = {x_i} with the i-th grandchild of every child, the root alone.
pub fn proof_partition_tk2(k: usize) -> Result<Partition> {
    require(k >= 2, "t_k2 needs k >= 2")?;
    let n = 1 + k + k * k;
    let mut part_of = vec![0usize; n];
    part_of[0] = k;
    for i in 1..=k {
        part_of[i] = i - 1;
        for j in 1..=k {
            part_of[k + (i - 1) * k + j] = j - 1;
        }
    }
    Partition::new(part_of)
}

/// The explicit size h locating partition from the T*(k,h) analysis.
pub fn proof_partition_tstar(k: usize, h: usize) -> Result<Partition> {
    require(k >= 1 && h >= k + 2, "t_star needs k >= 1, h >= k + 2")?;
    let (n, x_idx, y_idx) = tstar_indices(k, h);
    let mut part_of = vec![0usize; n];
    part_of[0] = h - 1; // x
    part_of[1] = h - 1; // z
    for i in 1..=k {
        part_of[1 + i] = i - 1; // z_i in S_i
    }
    for i in 1..h {
        for j in 1..h {
            part_of[x_idx(i, j)] = i - 1; // x_(i,m) in S_i
            part_of[y_idx(i, j)] = j - 1; // y_(n,i) in S_i
        }
    }
    Partition::new(part_of)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::{distances, DistanceMatrix};
    use crate::partition::is_locating_partition;
    use crate::twins::twin_decomposition;

    #[test]
    fn spec_strings_round_trip() {
        for s in ["H:3:9", "F:1:9", "Tk2:3", "Tstar:2:4", "star:9", "biclique:2:7", "path:5"] {
            let spec = FamilySpec::parse(s).unwrap();
            assert_eq!(spec.to_string(), s);
            spec.generate().unwrap();
        }
        assert!(FamilySpec::parse("H:16:9").unwrap().generate().is_err());
        assert!(FamilySpec::parse("F:4:9").unwrap().generate().is_err());
        assert!(FamilySpec::parse("nope:3").is_err());
        assert!(FamilySpec::parse("Tk2").is_err());
    }

    #[test]
    fn basic_family_shapes() {
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!(c5.vertices().all(|v| c5.degree(v) == 2));

        let k27 = biclique(2, 7).unwrap();
        assert_eq!(k27.edge_count(), 14);

        // K_1 v (K_1 + K_{n-2}) at n = 9 is K_8 with a pendant leaf
        let g = FamilySpec::PendantClique { n: 9 }.generate().unwrap();
        let mut degs = g.degree_sequence();
        assert_eq!(degs.remove(0), 1);
        assert_eq!(g.edge_count(), 8 * 7 / 2 + 1);
    }

    #[test]
    fn h_graph_twin_numbers_match_caption() {
        for n in [9, 10, 11] {
            for i in 1..=15 {
                let g = h_graph(i, n).unwrap();
                assert!(g.is_connected(), "H_{i} at n={n}");
                assert_eq!(g.n(), n);
                let expected = match i {
                    1 | 2 => n - 2,
                    3..=10 => n - 3,
                    _ => n - 4,
                };
                assert_eq!(twin_decomposition(&g).tau(), expected, "H_{i} at n={n}");
            }
        }
    }

    #[test]
    fn h4_degrees() {
        // H_4 = K_6 v complement(K_3) at n = 9
        let g = h_graph(4, 9).unwrap();
        let mut degs = g.degree_sequence();
        degs.reverse();
        assert_eq!(degs, vec![8, 8, 8, 8, 8, 8, 6, 6, 6]);
    }

    #[test]
    fn edge_deleted_variants() {
        for (a, b) in [(6, 7), (8, 9), (14, 15)] {
            let ga = h_graph(a, 9).unwrap();
            let gb = h_graph(b, 9).unwrap();
            assert_eq!(ga.edge_count(), gb.edge_count() + 1);
        }
    }

    #[test]
    fn trees_orders_and_proof_partitions() {
        let t32 = t_k2(3).unwrap();
        assert_eq!(t32.n(), 13);
        assert_eq!(t_k2(2).unwrap().n(), 7);
        // leaf count k^2
        assert_eq!(t32.vertices().filter(|&v| t32.degree(v) == 1).count(), 9);

        let pi = proof_partition_tk2(3).unwrap();
        assert_eq!(pi.k(), 4);
        assert!(is_locating_partition(&distances(&t32), &pi).0);

        let t13 = t_star(1, 3).unwrap();
        assert_eq!(t13.n(), 11);
        assert_eq!(twin_decomposition(&t13).tau(), 1);
        let pi = proof_partition_tstar(1, 3).unwrap();
        assert_eq!(pi.k(), 3);
        assert!(is_locating_partition(&distances(&t13), &pi).0);

        let t24 = t_star(2, 4).unwrap();
        assert_eq!(t24.n(), 22);
        let pi = proof_partition_tstar(2, 4).unwrap();
        assert_eq!(pi.k(), 4);
        assert!(is_locating_partition(&distances(&t24), &pi).0);

        let t35 = t_star(3, 5).unwrap();
        assert_eq!(t35.n(), 37);
        let pi = proof_partition_tstar(3, 5).unwrap();
        assert_eq!(pi.k(), 5);
        assert!(is_locating_partition(&DistanceMatrix::new(&t35), &pi).0);
    }

    #[test]
    fn f_graphs_connected_and_sized() {
        for n in [9, 10] {
            for i in [1, 2, 3, 5] {
                let g = f_graph(i, n).unwrap();
                assert!(g.is_connected());
                assert_eq!(g.n(), n);
            }
        }
    }
}
