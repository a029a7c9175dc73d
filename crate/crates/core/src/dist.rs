//! All-pairs BFS distances.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Internal sentinel for unreachable pairs; never exposed, the public
/// accessor returns `None` instead.
const UNREACHABLE: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    /// BFS from every vertex.
    pub fn new(g: &Graph) -> DistanceMatrix {
        let n = g.n();
        let mut d = vec![UNREACHABLE; n * n];
        for src in 0..n {
            let mut seen = 1u64 << src;
            let mut frontier = seen;
            let mut dist = 0u32;
            while frontier != 0 {
                let mut rest = frontier;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    d[src * n + v] = dist;
                }
                let next = g.neighborhood_of_set(frontier) & !seen;
                seen |= next;
                frontier = next;
                dist += 1;
            }
        }
        DistanceMatrix { n, d }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        let x = self.d[u * self.n + v];
        (x != UNREACHABLE).then_some(x)
    }

    /// Distance on a connected graph; panics on an unreachable pair, which
    /// callers rule out by checking connectivity first.
    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> u32 {
        let x = self.d[u * self.n + v];
        debug_assert_ne!(x, UNREACHABLE, "distance query on a disconnected pair");
        x
    }

    /// d(u, S) for a vertex-set mask; None if S is empty or unreachable.
    pub fn dist_to_set(&self, u: usize, set: u64) -> Option<u32> {
        let mut best = None;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if let Some(d) = self.get(u, v) {
                best = Some(best.map_or(d, |b: u32| b.min(d)));
            }
        }
        best
    }
}

pub fn distances(g: &Graph) -> DistanceMatrix {
    DistanceMatrix::new(g)
}

pub fn diameter(g: &Graph) -> Result<u32> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let dm = DistanceMatrix::new(g);
    let mut best = 0;
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            best = best.max(dm.dist(u, v));
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edge_list(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut e: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        e.push((n - 1, 0));
        Graph::from_edge_list(n, &e).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edge_list(n, &e).unwrap()
    }

    #[test]
    fn path_distances() {
        let dm = distances(&path(4));
        assert_eq!(dm.dist(0, 3), 3);
        assert_eq!(dm.dist(0, 0), 0);
        assert_eq!(dm.dist(1, 3), 2);
    }

    #[test]
    fn complete_distances() {
        let dm = distances(&complete(6));
        for u in 0..6 {
            for v in 0..6 {
                assert_eq!(dm.dist(u, v), u32::from(u != v));
            }
        }
    }

    #[test]
    fn cycle_distances() {
        let dm = distances(&cycle(6));
        assert_eq!(dm.dist(0, 3), 3);
        assert_eq!(dm.dist(0, 2), 2);
    }

    #[test]
    fn diameters() {
        assert_eq!(diameter(&cycle(5)).unwrap(), 2);
        assert_eq!(diameter(&path(5)).unwrap(), 4);
        let two_k2 = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_k2.is_connected());
        assert!(matches!(diameter(&two_k2), Err(Error::Disconnected)));
    }

    #[test]
    fn unreachable_is_none() {
        let two_k2 = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        let dm = distances(&two_k2);
        assert_eq!(dm.get(0, 2), None);
        assert_eq!(dm.get(0, 1), Some(1));
        assert_eq!(dm.dist_to_set(0, 0b1100), None);
        assert_eq!(dm.dist_to_set(0, 0b0110), Some(1));
    }
}
