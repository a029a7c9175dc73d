//! Vertex partitions and the locating checkers.

use crate::dist::DistanceMatrix;
use crate::error::{Error, Result};

/// Assignment of every vertex to a part index `0..k-1`, every part
/// non-empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    part_of: Vec<usize>,
    k: usize,
}

impl Partition {
    pub fn new(part_of: Vec<usize>) -> Result<Partition> {
        if part_of.is_empty() {
            return Err(Error::InvalidPartition("no vertices".into()));
        }
        let k = part_of.iter().max().unwrap() + 1;
        let mut used = vec![false; k];
        for &p in &part_of {
            used[p] = true;
        }
        if used.iter().any(|&u| !u) {
            return Err(Error::InvalidPartition("empty part index".into()));
        }
        Ok(Partition { part_of, k })
    }

    /// Build from explicit parts; every vertex of `0..n` must appear exactly
    /// once.
    pub fn from_parts(n: usize, parts: &[Vec<usize>]) -> Result<Partition> {
        let mut part_of = vec![usize::MAX; n];
        for (i, part) in parts.iter().enumerate() {
            for &v in part {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if part_of[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("vertex {v} repeated")));
                }
                part_of[v] = i;
            }
        }
        if part_of.iter().any(|&p| p == usize::MAX) {
            return Err(Error::InvalidPartition("vertex missing from parts".into()));
        }
        if parts.iter().any(|p| p.is_empty()) {
            return Err(Error::InvalidPartition("empty part".into()));
        }
        Ok(Partition { part_of: part_of.clone(), k: parts.len() })
    }

    pub fn singletons(n: usize) -> Partition {
        Partition { part_of: (0..n).collect(), k: n }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.part_of.len()
    }

    #[inline]
    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    pub fn parts(&self) -> Vec<Vec<usize>> {
        let mut parts = vec![Vec::new(); self.k];
        for (v, &p) in self.part_of.iter().enumerate() {
            parts[p].push(v);
        }
        parts
    }

    pub fn part_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.k];
        for (v, &p) in self.part_of.iter().enumerate() {
            masks[p] |= 1 << v;
        }
        masks
    }

    /// Renumber parts in restricted-growth order (part indices appear in
    /// increasing order of first occurrence).
    pub fn canonicalized(&self) -> Partition {
        let mut map = vec![usize::MAX; self.k];
        let mut next = 0;
        let mut part_of = Vec::with_capacity(self.part_of.len());
        for &p in &self.part_of {
            if map[p] == usize::MAX {
                map[p] = next;
                next += 1;
            }
            part_of.push(map[p]);
        }
        Partition { part_of, k: self.k }
    }

    /// The restricted-growth string over vertex order 0..n-1 (requires
    /// canonicalized numbering for the RGS property to hold).
    pub fn rgs(&self) -> &[usize] {
        &self.part_of
    }
}

/// r(u|Pi): per-part minimum distance from `u`.
pub type DistanceVector = Vec<u32>;

pub fn distance_vector(dm: &DistanceMatrix, pi: &Partition, u: usize) -> DistanceVector {
    let mut vec = vec![u32::MAX; pi.k()];
    for v in 0..pi.n() {
        let p = pi.part_of(v);
        vec[p] = vec[p].min(dm.dist(u, v));
    }
    vec
}

/// True iff all distance vectors are pairwise distinct. Vertices in
/// different parts always differ (each has 0 only at its own part), so only
/// same-part pairs are compared. On failure reports one offending pair.
pub fn is_locating_partition(dm: &DistanceMatrix, pi: &Partition) -> (bool, Option<(usize, usize)>) {
    let n = pi.n();
    let vectors: Vec<DistanceVector> = (0..n).map(|u| distance_vector(dm, pi, u)).collect();
    let mut by_part: Vec<Vec<usize>> = vec![Vec::new(); pi.k()];
    for v in 0..n {
        by_part[pi.part_of(v)].push(v);
    }
    for part in &by_part {
        for (i, &u) in part.iter().enumerate() {
            for &v in &part[i + 1..] {
                if vectors[u] == vectors[v] {
                    return (false, Some((u, v)));
                }
            }
        }
    }
    (true, None)
}

/// True iff the tuples of distances to the vertices of `s` are pairwise
/// distinct over V.
pub fn is_locating_set(dm: &DistanceMatrix, s: &[usize]) -> bool {
    let n = dm.n();
    let codes: Vec<Vec<u32>> =
        (0..n).map(|u| s.iter().map(|&x| dm.dist(u, x)).collect()).collect();
    for u in 0..n {
        for v in (u + 1)..n {
            if codes[u] == codes[v] {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::distances;
    use crate::graph::Graph;

    fn path(n: usize) -> Graph {
        Graph::from_edge_list(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut e: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        e.push((n - 1, 0));
        Graph::from_edge_list(n, &e).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![0, 1, 0, 2]).is_ok());
        assert!(Partition::new(vec![0, 2]).is_err()); // part 1 empty
        assert!(Partition::from_parts(3, &[vec![0, 1], vec![2]]).is_ok());
        assert!(Partition::from_parts(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::from_parts(3, &[vec![0, 1]]).is_err());
    }

    #[test]
    fn canonicalized_rgs() {
        let pi = Partition::new(vec![2, 0, 2, 1]).unwrap();
        assert_eq!(pi.canonicalized().rgs(), &[0, 1, 0, 2]);
    }

    #[test]
    fn distance_vector_own_part_zero() {
        let g = cycle(6);
        let dm = distances(&g);
        let pi = Partition::new(vec![0, 0, 1, 1, 2, 2]).unwrap();
        for u in 0..6 {
            assert_eq!(distance_vector(&dm, &pi, u)[pi.part_of(u)], 0);
        }
    }

    #[test]
    fn singleton_vector_is_distance_row() {
        let g = path(5);
        let dm = distances(&g);
        let pi = Partition::singletons(5);
        for u in 0..5 {
            let vec = distance_vector(&dm, &pi, u);
            for v in 0..5 {
                assert_eq!(vec[v], dm.dist(u, v));
            }
        }
    }

    #[test]
    fn singletons_always_locating_one_part_never() {
        let g = cycle(7);
        let dm = distances(&g);
        assert!(is_locating_partition(&dm, &Partition::singletons(7)).0);
        let one = Partition::new(vec![0; 7]).unwrap();
        let (ok, pair) = is_locating_partition(&dm, &one);
        assert!(!ok);
        assert!(pair.is_some());
    }

    #[test]
    fn locating_sets() {
        let p5 = path(5);
        let dm = distances(&p5);
        assert!(is_locating_set(&dm, &[0])); // endpoint of a path
        assert!(is_locating_set(&dm, &(0..5).collect::<Vec<_>>()));
        let c5 = cycle(5);
        let dmc = distances(&c5);
        assert!(!is_locating_set(&dmc, &[0])); // beta(C_n) = 2
        assert!(is_locating_set(&dmc, &[0, 1]));
    }

    #[test]
    fn f1_example_partition() {
        // F_1 = complement(K_{n-3}) join (K_2 + K_1) at n = 9, with the
        // size-6 partition pairing the first three independent vertices
        // with the three join-side vertices.
        let indep = Graph::empty(6).unwrap();
        let k2k1 = Graph::from_edge_list(2, &[(0, 1)])
            .unwrap()
            .disjoint_union(&Graph::empty(1).unwrap())
            .unwrap();
        let f1 = indep.join(&k2k1).unwrap();
        let dm = distances(&f1);
        let pi = Partition::from_parts(
            9,
            &[vec![0, 6], vec![1, 7], vec![2, 8], vec![3], vec![4], vec![5]],
        )
        .unwrap();
        // the part {v_4} (index 3) separates each mixed pair
        assert_eq!(distance_vector(&dm, &pi, 0)[3], 2);
        assert_eq!(distance_vector(&dm, &pi, 6)[3], 1);
        assert!(is_locating_partition(&dm, &pi).0);
    }
}
