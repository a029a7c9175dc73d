//! Isomorphism testing, canonical forms and exhaustive enumeration of
//! small connected graphs.
//!
//! Canonicalization is iterated color refinement plus individualization
//! backtracking; the canonical form is the lexicographically least graph6
//! string over all leaf labelings. Twin vertices inside a target cell are
//! interchangeable by an automorphism, so only one branch per twin class is
//! explored.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, write_graph6};

/// Largest order accepted by [`canonical_form`].
pub const CANONICAL_LIMIT: usize = 16;
/// Largest order accepted by [`enumerate_connected`].
pub const ENUMERATION_LIMIT: usize = 9;

/// Cheap isomorphism invariants, used to rule isomorphism out quickly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub n: usize,
    pub edges: usize,
    pub degree_sequence: Vec<usize>,
    /// Sorted multiset of all pairwise distances, unreachable pairs last.
    pub distance_multiset: Vec<u32>,
    /// Sorted multiset of twin class sizes.
    pub twin_profile: Vec<usize>,
}

pub fn fingerprint(g: &Graph) -> Fingerprint {
    let dm = crate::dist::distances(g);
    let mut dists = Vec::with_capacity(g.n() * (g.n() - 1) / 2);
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            dists.push(dm.get(u, v).unwrap_or(u32::MAX));
        }
    }
    dists.sort_unstable();
    Fingerprint {
        n: g.n(),
        edges: g.edge_count(),
        degree_sequence: g.degree_sequence(),
        distance_multiset: dists,
        twin_profile: crate::twins::twin_decomposition(g).class_size_profile(),
    }
}

/// One round of color refinement to a stable coloring. Colors are
/// normalized so equal colorings of isomorphic graphs stay comparable:
/// classes are renumbered by sorted (old color, neighbor color multiset)
/// signature.
fn refine(g: &Graph, init: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut color = init.to_vec();
    let mut classes = count_classes(&color);
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n)
                    .filter(|&u| g.has_edge(v, u))
                    .map(|u| color[u])
                    .collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut sorted: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        let index: BTreeMap<&(usize, Vec<usize>), usize> =
            sorted.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let next: Vec<usize> = sigs.iter().map(|s| index[s]).collect();
        let next_classes = count_classes(&next);
        sigs.clear();
        if next_classes == classes {
            return next;
        }
        color = next;
        classes = next_classes;
    }
}

fn count_classes(color: &[usize]) -> usize {
    color.iter().copied().max().map_or(0, |m| m + 1)
}

fn is_discrete(color: &[usize]) -> bool {
    count_classes(color) == color.len()
}

/// graph6 string of `g` relabeled by a discrete coloring (color rank
/// becomes the vertex index).
fn labeled_graph6(g: &Graph, color: &[usize]) -> String {
    let mut perm = vec![0usize; g.n()];
    for (v, &c) in color.iter().enumerate() {
        perm[c] = v;
    }
    write_graph6(&g.relabel(&perm)).expect("n <= 16 fits graph6")
}

fn canon_search(g: &Graph, color: Vec<usize>, class_of: &[usize], best: &mut Option<String>) {
    let color = refine(g, &color);
    if is_discrete(&color) {
        let s = labeled_graph6(g, &color);
        if best.as_ref().is_none_or(|b| s < *b) {
            *best = Some(s);
        }
        return;
    }
    // first non-singleton cell in color order
    let cell_color = (0..count_classes(&color))
        .find(|&c| color.iter().filter(|&&x| x == c).count() > 1)
        .unwrap();
    let fresh = g.n(); // strictly above every normalized color
    let mut tried_classes: Vec<usize> = Vec::new();
    for v in 0..g.n() {
        if color[v] != cell_color || tried_classes.contains(&class_of[v]) {
            continue;
        }
        tried_classes.push(class_of[v]);
        let mut next = color.clone();
        next[v] = fresh;
        canon_search(g, next, class_of, best);
    }
}

/// Canonical graph6 form: equal strings iff isomorphic. Supported for
/// n <= 16.
pub fn canonical_form(g: &Graph) -> Result<String> {
    if g.n() > CANONICAL_LIMIT {
        return Err(Error::CanonicalTooLarge { n: g.n(), limit: CANONICAL_LIMIT });
    }
    let td = crate::twins::twin_decomposition(g);
    let mut class_of = vec![0usize; g.n()];
    for (i, class) in td.classes.iter().enumerate() {
        for &v in &class.vertices {
            class_of[v] = i;
        }
    }
    let mut best = None;
    canon_search(g, vec![0; g.n()], &class_of, &mut best);
    Ok(best.expect("search visits at least one leaf"))
}

/// The canonically relabeled graph itself.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    parse_graph6(&canonical_form(g)?)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if fingerprint(a) != fingerprint(b) {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// All ways of attaching one new vertex to `g` with a non-empty
/// neighborhood. Every connected graph on n+1 vertices arises this way from
/// a connected graph on n vertices (delete a non-cut vertex).
pub fn augmentations(g: &Graph) -> impl Iterator<Item = Graph> + '_ {
    let m = g.n();
    let base: Vec<(usize, usize)> = g.edges().collect();
    (1u64..1 << m).map(move |set| {
        let mut edges = base.clone();
        for v in 0..m {
            if set >> v & 1 == 1 {
                edges.push((v, m));
            }
        }
        Graph::from_edge_list(m + 1, &edges).expect("augmented graph is valid")
    })
}

/// All connected graphs on `n` vertices up to isomorphism, in canonical
/// labeling, sorted by canonical form. Supported for n <= 9; the n = 8 and
/// n = 9 levels take noticeable time.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::EnumerationTooLarge { n, limit: ENUMERATION_LIMIT });
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut level = vec![Graph::empty(1)?];
    for _ in 1..n {
        level = augment_level(&level)?;
    }
    Ok(level)
}

/// One enumeration step: all connected graphs on m+1 vertices from the
/// complete iso-free list on m vertices.
pub fn augment_level(level: &[Graph]) -> Result<Vec<Graph>> {
    let mut seen: BTreeMap<String, Graph> = BTreeMap::new();
    for g in level {
        for h in augmentations(g) {
            let key = canonical_form(&h)?;
            seen.entry(key.clone()).or_insert_with(|| parse_graph6(&key).unwrap());
        }
    }
    Ok(seen.into_values().collect())
}

/// Read a graph6 catalog: one record per line, optional `>>graph6<<`
/// header, blank lines ignored. Errors carry 1-based line numbers.
pub fn ingest_catalog(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim().trim_start_matches(">>graph6<<");
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| Error::Catalog {
            line: idx + 1,
            msg: e.to_string(),
        })?;
        out.push(g);
    }
    Ok(out)
}

pub fn write_catalog(graphs: &[Graph]) -> Result<String> {
    let mut out = String::new();
    for g in graphs {
        out.push_str(&write_graph6(g)?);
        out.push('\n');
    }
    Ok(out)
}
