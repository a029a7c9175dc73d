//! Lower and constructive upper bounds for the partition dimension.

use crate::dist::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{is_locating_partition, Partition};
use crate::twins::{distinguishing_vertices, TwinDecomposition, TwinKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LowerReason {
    /// beta_p >= 2 for n >= 2 (or 1 for K_1).
    Trivial,
    /// tau(G) <= beta_p(G).
    TwinNumber,
    /// Clique tau-set on a non-complete graph forces beta_p >= tau + 1.
    CliqueTauSet,
    /// beta_p(K_n) = n.
    CompleteGraph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UpperReason {
    AllSingletons,
    /// beta_p <= n - diam + 1.
    Diameter,
    /// beta_p <= n - min(deg u, n-1-deg u), witnessed by pairing neighbors
    /// of u with non-neighbors.
    DegreePairing { vertex: usize },
    /// Clique tau-set with tau > n/2: beta_p <= n - k/2, k = n - tau.
    HalfOutside,
    /// Empty tau-set with tau > n/2: beta_p = tau.
    FalseTwin,
    /// W-distinguishing vertex in the clique tau-set regime: beta_p <= tau+1.
    Distinguishing,
    /// beta_p <= beta + 1 from a locating set.
    MetricDimPlusOne,
}

#[derive(Clone, Debug)]
pub struct LowerBound {
    pub value: usize,
    pub reason: LowerReason,
}

#[derive(Clone, Debug)]
pub struct UpperBound {
    pub value: usize,
    pub reason: UpperReason,
    pub witness: Partition,
}

#[derive(Clone, Debug)]
pub struct Bounds {
    pub lower: LowerBound,
    pub upper: UpperBound,
}

pub fn bp_lower_bounds(g: &Graph, td: &TwinDecomposition) -> Result<LowerBound> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n == 1 {
        return Ok(LowerBound { value: 1, reason: LowerReason::Trivial });
    }
    if td.tau() == n {
        return Ok(LowerBound { value: n, reason: LowerReason::CompleteGraph });
    }
    let mut best = LowerBound { value: 2, reason: LowerReason::Trivial };
    if td.tau() > best.value {
        best = LowerBound { value: td.tau(), reason: LowerReason::TwinNumber };
    }
    let clique_tau_set = td.tau_sets.iter().any(|&i| td.classes[i].kind == TwinKind::True);
    if clique_tau_set && td.tau() + 1 > best.value {
        best = LowerBound { value: td.tau() + 1, reason: LowerReason::CliqueTauSet };
    }
    Ok(best)
}

/// Constructive upper bounds; `locating_set` optionally supplies a metric
/// basis for the beta+1 bound. Every candidate witness is checked before it
/// can win.
pub fn bp_upper_bounds(
    g: &Graph,
    td: &TwinDecomposition,
    locating_set: Option<&[usize]>,
) -> Result<UpperBound> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let dm = DistanceMatrix::new(g);
    let mut best = UpperBound {
        value: n,
        reason: UpperReason::AllSingletons,
        witness: Partition::singletons(n),
    };
    let mut consider = |cand: UpperBound| {
        let (ok, _) = is_locating_partition(&dm, &cand.witness);
        assert!(ok, "bound witness failed the locating check: {:?}", cand.reason);
        assert_eq!(cand.witness.k(), cand.value);
        if cand.value < best.value {
            best = cand;
        }
    };

    if n >= 2 {
        if let Some(pi) = diameter_partition(g, &dm) {
            consider(UpperBound { value: pi.k(), reason: UpperReason::Diameter, witness: pi });
        }
        // best degree-pairing vertex
        let u = (0..n)
            .max_by_key(|&u| g.degree(u).min(n - 1 - g.degree(u)))
            .expect("n >= 2");
        let pi = construct_degree_pairing(g, u)?;
        consider(UpperBound {
            value: pi.k(),
            reason: UpperReason::DegreePairing { vertex: u },
            witness: pi,
        });
    }

    if td.tau() * 2 > n && td.tau() < n {
        let class = td.unique_tau_set().expect("tau > n/2 has a unique tau-set");
        let w = class.vertices.clone();
        match class.kind {
            TwinKind::False => {
                let pi = construct_false_twin(g, &w)?;
                consider(UpperBound {
                    value: pi.k(),
                    reason: UpperReason::FalseTwin,
                    witness: pi,
                });
            }
            TwinKind::True => {
                let pi = construct_kmedios(g, &w)?;
                consider(UpperBound {
                    value: pi.k(),
                    reason: UpperReason::HalfOutside,
                    witness: pi,
                });
                let dv = distinguishing_vertices(g, &w)?;
                if let Some(&v) = dv.first() {
                    let pi = construct_distinguishing(g, &w, v)?;
                    consider(UpperBound {
                        value: pi.k(),
                        reason: UpperReason::Distinguishing,
                        witness: pi,
                    });
                }
            }
            TwinKind::Singleton => {}
        }
    }

    if let Some(s) = locating_set {
        if s.len() + 1 <= n {
            let mut parts: Vec<Vec<usize>> = s.iter().map(|&v| vec![v]).collect();
            let in_s: u64 = s.iter().fold(0, |m, &v| m | 1 << v);
            let rest: Vec<usize> = (0..n).filter(|&v| in_s >> v & 1 == 0).collect();
            parts.push(rest);
            let pi = Partition::from_parts(n, &parts)?;
            consider(UpperBound {
                value: pi.k(),
                reason: UpperReason::MetricDimPlusOne,
                witness: pi,
            });
        }
    }

    Ok(best)
}

pub fn compute_bounds(
    g: &Graph,
    td: &TwinDecomposition,
    locating_set: Option<&[usize]>,
) -> Result<Bounds> {
    let lower = bp_lower_bounds(g, td)?;
    let upper = bp_upper_bounds(g, td, locating_set)?;
    debug_assert!(lower.value <= upper.value);
    Ok(Bounds { lower, upper })
}

/// Witness for beta_p <= n - diam + 1: the first d vertices of a diametral
/// shortest path share one part, everything else is a singleton. The final
/// path vertex (a singleton) resolves the shared part.
fn diameter_partition(g: &Graph, dm: &DistanceMatrix) -> Option<Partition> {
    let n = g.n();
    let (mut bu, mut bv, mut d) = (0, 0, 0);
    for u in 0..n {
        for v in (u + 1)..n {
            if dm.dist(u, v) > d {
                d = dm.dist(u, v);
                bu = u;
                bv = v;
            }
        }
    }
    if d == 0 {
        return None;
    }
    // walk a shortest path from bu to bv, least-index next hop
    let mut path = vec![bu];
    let mut cur = bu;
    while cur != bv {
        let next = (0..n)
            .find(|&w| g.has_edge(cur, w) && dm.dist(w, bv) + 1 == dm.dist(cur, bv))
            .expect("shortest path step exists");
        path.push(next);
        cur = next;
    }
    let shared: Vec<usize> = path[..path.len() - 1].to_vec();
    let in_shared: u64 = shared.iter().fold(0, |m, &v| m | 1 << v);
    let mut parts = vec![shared];
    parts.extend((0..n).filter(|&v| in_shared >> v & 1 == 0).map(|v| vec![v]));
    Some(Partition::from_parts(n, &parts).expect("valid partition"))
}

/// Pairs each of the first m neighbors of `u` with a non-neighbor, where
/// m = min(deg u, n-1-deg u); all other vertices are singletons. `u` itself
/// stays a singleton and resolves every pair.
pub fn construct_degree_pairing(g: &Graph, u: usize) -> Result<Partition> {
    let n = g.n();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if n < 2 {
        return Err(Error::Precondition("degree pairing needs n >= 2".into()));
    }
    let xs: Vec<usize> = (0..n).filter(|&v| g.has_edge(u, v)).collect();
    let ys: Vec<usize> = (0..n).filter(|&v| v != u && !g.has_edge(u, v)).collect();
    let m = xs.len().min(ys.len());
    let mut parts: Vec<Vec<usize>> = (0..m).map(|i| vec![xs[i], ys[i]]).collect();
    let paired: u64 = parts.iter().flatten().fold(0, |mask, &v| mask | 1 << v);
    parts.extend((0..n).filter(|&v| paired >> v & 1 == 0).map(|v| vec![v]));
    Partition::from_parts(n, &parts)
}

/// The size-tau partition for an empty tau-set with tau > n/2: pair w_i
/// with v_i, listing the outside vertices adjacent to W first.
pub fn construct_false_twin(g: &Graph, w: &[usize]) -> Result<Partition> {
    let n = g.n();
    let (class_w, _) = check_tau_set_regime(g, w, TwinKind::False)?;
    let w_mask: u64 = class_w.iter().fold(0, |m, &v| m | 1 << v);
    let nw = g.neighborhood_of_set(w_mask);
    let mut outside: Vec<usize> = (0..n).filter(|&v| w_mask >> v & 1 == 0 && nw >> v & 1 == 1).collect();
    outside.extend((0..n).filter(|&v| w_mask >> v & 1 == 0 && nw >> v & 1 == 0));
    let tau = class_w.len();
    let mut parts = Vec::with_capacity(tau);
    for (i, &wi) in class_w.iter().enumerate() {
        if i < outside.len() {
            parts.push(vec![wi, outside[i]]);
        } else {
            parts.push(vec![wi]);
        }
    }
    Partition::from_parts(n, &parts)
}

/// The n - k/2 construction for a clique tau-set with tau > n/2 on a
/// non-complete graph. Boundary vertices that are universal inside the
/// boundary get a witness neighbor deeper outside (A2); the rest are
/// dominated in the complement by a half-size set (A1); A1 and A2 become
/// singletons and the leftovers pair up with tau-set members.
pub fn construct_kmedios(g: &Graph, w: &[usize]) -> Result<Partition> {
    let n = g.n();
    let (class_w, _) = check_tau_set_regime(g, w, TwinKind::True)?;
    if class_w.len() == n {
        return Err(Error::Precondition("construct_kmedios requires G != K_n".into()));
    }
    let w_mask: u64 = class_w.iter().fold(0, |m, &v| m | 1 << v);
    let w1_mask = g.neighborhood_of_set(w_mask) & !w_mask;
    let full = g.full_mask();
    let w2_mask = full & !w_mask & !w1_mask;
    let w1: Vec<usize> = (0..n).filter(|&v| w1_mask >> v & 1 == 1).collect();
    let r = w1.len();
    // universal-inside-the-boundary vertices
    let u1: Vec<usize> = w1
        .iter()
        .copied()
        .filter(|&x| (g.adj(x) & w1_mask).count_ones() as usize == r - 1)
        .collect();
    let u1_mask: u64 = u1.iter().fold(0, |m, &v| m | 1 << v);
    let u2: Vec<usize> = w1.iter().copied().filter(|&x| u1_mask >> x & 1 == 0).collect();

    let mut a2_mask = 0u64;
    for &x in &u1 {
        let cands = g.adj(x) & w2_mask;
        if cands == 0 {
            return Err(Error::Precondition(
                "universal boundary vertex with no neighbor outside N[W]".into(),
            ));
        }
        a2_mask |= 1 << cands.trailing_zeros();
    }

    // Half-size dominating set of the complement of G[U2]: a greedy maximal
    // independent set I there and its complement within U2 are both
    // dominating (minimum degree >= 1), keep the smaller.
    let a1_mask = if u2.is_empty() {
        0u64
    } else {
        let mut i_mask = 0u64;
        for &x in &u2 {
            // independent in the complement = pairwise adjacent in G
            if u2.iter().all(|&y| i_mask >> y & 1 == 0 || g.has_edge(x, y)) {
                i_mask |= 1 << x;
            }
        }
        let comp_mask: u64 = u2.iter().fold(0, |m, &v| m | 1 << v) & !i_mask;
        if (i_mask.count_ones()) <= comp_mask.count_ones() {
            i_mask
        } else {
            comp_mask
        }
    };

    let singles_mask = a1_mask | a2_mask;
    let leftovers: Vec<usize> =
        (0..n).filter(|&v| (w1_mask | w2_mask) >> v & 1 == 1 && singles_mask >> v & 1 == 0).collect();
    if leftovers.len() > class_w.len() {
        return Err(Error::Precondition("more leftovers than tau-set members".into()));
    }
    let mut parts: Vec<Vec<usize>> =
        (0..n).filter(|&v| singles_mask >> v & 1 == 1).map(|v| vec![v]).collect();
    for (i, &wi) in class_w.iter().enumerate() {
        if i < leftovers.len() {
            parts.push(vec![wi, leftovers[i]]);
        } else {
            parts.push(vec![wi]);
        }
    }
    Partition::from_parts(n, &parts)
}

/// The size tau+1 partition from a W-distinguishing vertex v: v alone in
/// the last part, every other outside vertex paired with a tau-set member.
pub fn construct_distinguishing(g: &Graph, w: &[usize], v: usize) -> Result<Partition> {
    let n = g.n();
    let (class_w, _) = check_tau_set_regime(g, w, TwinKind::True)?;
    let dv = distinguishing_vertices(g, &class_w)?;
    if !dv.contains(&v) {
        return Err(Error::Precondition(format!("{v} is not a W-distinguishing vertex")));
    }
    let w_mask: u64 = class_w.iter().fold(0, |m, &vv| m | 1 << vv);
    let zs: Vec<usize> = (0..n).filter(|&z| z != v && w_mask >> z & 1 == 0).collect();
    if zs.len() > class_w.len() {
        return Err(Error::Precondition("outside set larger than tau-set".into()));
    }
    let mut parts = Vec::with_capacity(class_w.len() + 1);
    for (i, &wi) in class_w.iter().enumerate() {
        if i < zs.len() {
            parts.push(vec![wi, zs[i]]);
        } else {
            parts.push(vec![wi]);
        }
    }
    parts.push(vec![v]);
    Partition::from_parts(n, &parts)
}

/// Shared precondition check: connected, `w` is the unique tau-set with
/// tau > n/2 and the requested kind. Returns the sorted class.
fn check_tau_set_regime(g: &Graph, w: &[usize], kind: TwinKind) -> Result<(Vec<usize>, usize)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let td = crate::twins::twin_decomposition(g);
    let n = g.n();
    if td.tau() * 2 <= n {
        return Err(Error::Precondition("requires tau > n/2".into()));
    }
    let class = td
        .unique_tau_set()
        .ok_or_else(|| Error::Precondition("tau-set is not unique".into()))?;
    let mut ws = w.to_vec();
    ws.sort_unstable();
    if class.vertices != ws {
        return Err(Error::Precondition("w is not the tau-set".into()));
    }
    if class.kind != kind {
        return Err(Error::Precondition(format!(
            "tau-set kind is {:?}, expected {:?}",
            class.kind, kind
        )));
    }
    Ok((class.vertices.clone(), td.tau()))
}
