//! Twin relation, twin classes and the twin number.

use crate::dist::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwinKind {
    /// Class of size >= 2 inducing a clique (shared closed neighborhoods).
    True,
    /// Class of size >= 2 inducing an independent set (shared open
    /// neighborhoods).
    False,
    /// Class of size 1.
    Singleton,
}

#[derive(Clone, Debug)]
pub struct TwinClass {
    /// Members in increasing vertex order.
    pub vertices: Vec<usize>,
    pub kind: TwinKind,
}

impl TwinClass {
    pub fn mask(&self) -> u64 {
        self.vertices.iter().fold(0, |m, &v| m | 1 << v)
    }
}

#[derive(Clone, Debug)]
pub struct TwinDecomposition {
    /// Classes sorted by least member.
    pub classes: Vec<TwinClass>,
    pub twin_number: usize,
    /// Indices into `classes` of every class of maximum size.
    pub tau_sets: Vec<usize>,
}

impl TwinDecomposition {
    pub fn tau(&self) -> usize {
        self.twin_number
    }

    /// The unique tau-set, available exactly when one class attains the
    /// maximum (guaranteed when tau > n/2).
    pub fn unique_tau_set(&self) -> Option<&TwinClass> {
        match self.tau_sets.as_slice() {
            [i] => Some(&self.classes[*i]),
            _ => None,
        }
    }

    /// Multiset of class sizes, sorted descending.
    pub fn class_size_profile(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.classes.iter().map(|c| c.vertices.len()).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }
}

/// N(u)\{v} = N(v)\{u}, i.e. equal neighborhoods once bits u,v are cleared.
pub fn are_twins(g: &Graph, u: usize, v: usize) -> Result<bool> {
    if u == v {
        return Err(Error::Precondition("are_twins requires u != v".into()));
    }
    let clear = !(1u64 << u | 1u64 << v);
    Ok(g.adj(u) & clear == g.adj(v) & clear)
}

pub fn twin_decomposition(g: &Graph) -> TwinDecomposition {
    let n = g.n();
    let mut class_of: Vec<Option<usize>> = vec![None; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if class_of[v].is_some() {
            continue;
        }
        let id = classes.len();
        class_of[v] = Some(id);
        let mut members = vec![v];
        for u in (v + 1)..n {
            if class_of[u].is_none() && are_twins(g, v, u).unwrap() {
                class_of[u] = Some(id);
                members.push(u);
            }
        }
        classes.push(members);
    }
    let classes: Vec<TwinClass> = classes
        .into_iter()
        .map(|vertices| {
            let kind = if vertices.len() == 1 {
                TwinKind::Singleton
            } else if g.has_edge(vertices[0], vertices[1]) {
                TwinKind::True
            } else {
                TwinKind::False
            };
            TwinClass { vertices, kind }
        })
        .collect();
    let twin_number = classes.iter().map(|c| c.vertices.len()).max().unwrap_or(0);
    let tau_sets = classes
        .iter()
        .enumerate()
        .filter(|(_, c)| c.vertices.len() == twin_number)
        .map(|(i, _)| i)
        .collect();
    TwinDecomposition { classes, twin_number, tau_sets }
}

/// All v outside a clique tau-set W with d(v,z) != d(v,W) for every
/// z in N(W)\W.
pub fn distinguishing_vertices(g: &Graph, w: &[usize]) -> Result<Vec<usize>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let td = twin_decomposition(g);
    let w_sorted = {
        let mut s = w.to_vec();
        s.sort_unstable();
        s
    };
    let is_tau_set = td
        .tau_sets
        .iter()
        .any(|&i| td.classes[i].vertices == w_sorted && td.classes[i].kind == TwinKind::True);
    if !is_tau_set {
        return Err(Error::Precondition(
            "distinguishing_vertices requires a tau-set inducing a clique".into(),
        ));
    }
    let dm = DistanceMatrix::new(g);
    let w_mask: u64 = w_sorted.iter().fold(0, |m, &v| m | 1 << v);
    let boundary = g.neighborhood_of_set(w_mask) & !w_mask;
    let mut out = Vec::new();
    for v in 0..g.n() {
        if w_mask >> v & 1 == 1 {
            continue;
        }
        let dvw = dm.dist_to_set(v, w_mask).expect("connected");
        let mut rest = boundary;
        let mut ok = true;
        while rest != 0 {
            let z = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if dm.dist(v, z) == dvw {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(v);
        }
    }
    Ok(out)
}
