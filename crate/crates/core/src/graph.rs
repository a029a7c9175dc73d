//! Immutable simple undirected graphs with bitmask adjacency.
//!
//! Vertices are `0..n-1` with `n <= 64`, so every neighborhood fits in one
//! `u64` and twin tests, induced subgraphs and BFS frontiers are word ops.

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge_mut(u, v)?;
        }
        Ok(g)
    }

    fn add_edge_mut(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Neighborhood of `v` as a bit mask.
    #[inline]
    pub fn adj(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            ((u + 1)..self.n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v))
        })
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Full-vertex-set bit mask.
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// N(S) for a vertex-set mask (open neighborhood, may intersect S).
    pub fn neighborhood_of_set(&self, set: u64) -> u64 {
        let mut out = 0;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= self.adj[v];
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let full = self.full_mask();
        let adj = (0..self.n).map(|v| (!self.adj[v] & full) & !(1 << v)).collect();
        Graph { n: self.n, adj }
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|m| m << self.n));
        Ok(Graph { n, adj })
    }

    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let right = g.full_mask() & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// Subgraph induced by `w`; vertex `i` of the result is the `i`-th
    /// smallest element of `w`.
    pub fn induced(&self, w: &[usize]) -> Result<Graph> {
        let mut sorted = w.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &v in &sorted {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let mut g = Graph::empty(sorted.len().max(1))?;
        if sorted.is_empty() {
            return Err(Error::EmptyGraph);
        }
        g.n = sorted.len();
        for (i, &u) in sorted.iter().enumerate() {
            for (j, &v) in sorted.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        Ok(g)
    }

    /// Induced subgraph from a bit-mask vertex set.
    pub fn induced_mask(&self, mask: u64) -> Result<Graph> {
        let verts: Vec<usize> = (0..self.n).filter(|&v| mask >> v & 1 == 1).collect();
        self.induced(&verts)
    }

    /// Graph with one edge removed; errors if the edge is absent.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n || v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: u.max(v), n: self.n });
        }
        if !self.has_edge(u, v) {
            return Err(Error::Precondition(format!("edge ({u},{v}) not present")));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let next = self.neighborhood_of_set(frontier) & !seen;
            seen |= next;
            frontier = next;
        }
        seen == self.full_mask()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degs.sort_unstable();
        degs
    }

    /// Relabel vertices: vertex `v` of the result is `perm[v]` of `self`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut inv = vec![0usize; self.n];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            let (a, b) = (inv[u], inv[v]);
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Graph { n: self.n, adj }
    }
}

/// Parse the plain-text fixture format: first line `n`, then one `u v` pair
/// per line.
pub fn parse_edge_list_text(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (lno, first) = lines.next().ok_or(Error::EdgeListParse {
        line: 1,
        msg: "missing vertex count".into(),
    })?;
    let n: usize = first.trim().parse().map_err(|_| Error::EdgeListParse {
        line: lno + 1,
        msg: format!("bad vertex count '{}'", first.trim()),
    })?;
    let mut edges = Vec::new();
    for (lno, line) in lines {
        let mut it = line.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<usize> {
            tok.ok_or(Error::EdgeListParse { line: lno + 1, msg: "expected 'u v'".into() })?
                .parse()
                .map_err(|_| Error::EdgeListParse { line: lno + 1, msg: "bad vertex".into() })
        };
        let u = parse(it.next())?;
        let v = parse(it.next())?;
        if it.next().is_some() {
            return Err(Error::EdgeListParse { line: lno + 1, msg: "trailing tokens".into() });
        }
        edges.push((u, v));
    }
    Graph::from_edge_list(n, &edges)
}

pub fn write_edge_list_text(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edge_list_basics() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert!(p3.has_edge(0, 1) && p3.has_edge(1, 2) && !p3.has_edge(0, 2));

        let empty4 = Graph::from_edge_list(4, &[]).unwrap();
        assert_eq!(empty4.edge_count(), 0);

        let dup = Graph::from_edge_list(4, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(dup, Graph::from_edge_list(4, &[(0, 1)]).unwrap());
    }

    #[test]
    fn from_edge_list_errors() {
        assert!(matches!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::SelfLoop(1))));
        assert!(matches!(Graph::empty(0), Err(Error::EmptyGraph)));
        assert!(matches!(Graph::empty(65), Err(Error::TooManyVertices(65))));
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let k4 = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        assert_eq!(k4.complement().edge_count(), 0);
        assert_eq!(k4.complement().complement(), k4);
    }

    #[test]
    fn union_and_join() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let k1 = Graph::empty(1).unwrap();
        let u = k2.disjoint_union(&k1).unwrap();
        assert_eq!(u.n(), 3);
        assert_eq!(u.edge_count(), 1);

        let matching = k2.disjoint_union(&k2).unwrap();
        assert_eq!(matching.edge_count(), 2);
        assert!(!matching.is_connected());

        // join(empty2, empty3) = K_{2,3}
        let e2 = Graph::empty(2).unwrap();
        let e3 = Graph::empty(3).unwrap();
        let k23 = e2.join(&e3).unwrap();
        assert_eq!(k23.edge_count(), 6);
        assert_eq!(k23.degree_sequence(), vec![2, 2, 2, 3, 3]);
    }

    #[test]
    fn join_degree_of_hub() {
        let k1 = Graph::empty(1).unwrap();
        let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let wheel = k1.join(&c4).unwrap();
        assert_eq!(wheel.degree(0), 4);
    }

    #[test]
    fn join_split_edge_count() {
        // K̄_{n-2} ∨ K_2 has (n-2)*2 + 1 edges
        for n in 4..10 {
            let e = Graph::empty(n - 2).unwrap();
            let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
            assert_eq!(e.join(&k2).unwrap().edge_count(), (n - 2) * 2 + 1);
        }
    }

    #[test]
    fn induced_subgraphs() {
        let k5: Vec<(usize, usize)> =
            (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        let k5 = Graph::from_edge_list(5, &k5).unwrap();
        let k3 = k5.induced(&[0, 1, 2]).unwrap();
        assert_eq!(k3.n(), 3);
        assert_eq!(k3.edge_count(), 3);

        let all: Vec<usize> = (0..5).collect();
        assert_eq!(k5.induced(&all).unwrap(), k5);

        let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let p3 = c5.induced(&[0, 1, 2]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(p3.degree_sequence(), vec![1, 1, 2]);
    }

    #[test]
    fn edge_list_text_round_trip() {
        let g = Graph::from_edge_list(5, &[(0, 3), (1, 4), (2, 3)]).unwrap();
        let txt = write_edge_list_text(&g);
        assert_eq!(parse_edge_list_text(&txt).unwrap(), g);
        assert!(parse_edge_list_text("").is_err());
        assert!(parse_edge_list_text("3\n0 1 2\n").is_err());
    }
}
