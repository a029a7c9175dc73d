//! Exact solvers for the metric dimension and the partition dimension.
//!
//! The partition-dimension search enumerates restricted growth strings by
//! increasing part count. Symmetry is broken twice: the RGS canonical order
//! kills part relabeling, and the largest twin class is moved to the front
//! of the vertex order and pre-assigned to parts 0..tau-1 (its members are
//! pairwise interchangeable by an automorphism, and no two twins may share
//! a part in any locating partition).

use crate::bounds::{compute_bounds, Bounds};
use crate::dist::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{is_locating_partition, is_locating_set, Partition};
use crate::twins::{twin_decomposition, TwinDecomposition, TwinKind};

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Branch assignments explored.
    pub nodes_expanded: u64,
    /// Complete partitions handed to the locating checker.
    pub partitions_tested: u64,
    /// Part counts proven to admit no locating partition.
    pub levels_exhausted: Vec<usize>,
}

#[derive(Clone, Debug)]
pub enum Outcome {
    Exact { value: usize, witness: Partition },
    /// Budget ran out; the bounds are still valid.
    Unknown { lower: usize, upper: usize },
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub outcome: Outcome,
    pub bounds: Option<Bounds>,
    pub stats: SearchStats,
}

impl SolveResult {
    pub fn value(&self) -> Option<usize> {
        match &self.outcome {
            Outcome::Exact { value, .. } => Some(*value),
            Outcome::Unknown { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&Partition> {
        match &self.outcome {
            Outcome::Exact { witness, .. } => Some(witness),
            Outcome::Unknown { .. } => None,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub budget: u64,
    /// Also compute the metric dimension and use beta + 1 as an upper bound.
    pub use_metric_dim_bound: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { budget: DEFAULT_BUDGET, use_metric_dim_bound: false }
    }
}

pub fn partition_dimension(g: &Graph, budget: Option<u64>) -> Result<SolveResult> {
    partition_dimension_with(
        g,
        SolveOptions { budget: budget.unwrap_or(DEFAULT_BUDGET), ..Default::default() },
    )
}

pub fn partition_dimension_with(g: &Graph, opts: SolveOptions) -> Result<SolveResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n == 1 {
        return Ok(SolveResult {
            outcome: Outcome::Exact { value: 1, witness: Partition::singletons(1) },
            bounds: None,
            stats: SearchStats::default(),
        });
    }
    let td = twin_decomposition(g);
    let beta_witness = if opts.use_metric_dim_bound {
        Some(metric_dimension(g)?.witness)
    } else {
        None
    };
    let bounds = compute_bounds(g, &td, beta_witness.as_deref())?;
    let dm = DistanceMatrix::new(g);

    let search = SearchContext::new(g, &dm, &td);
    let mut stats = SearchStats::default();
    for k in bounds.lower.value..=bounds.upper.value {
        match search.run_level(k, opts.budget, &mut stats) {
            LevelResult::Found(pi) => {
                return Ok(SolveResult {
                    outcome: Outcome::Exact { value: k, witness: pi },
                    bounds: Some(bounds),
                    stats,
                });
            }
            LevelResult::Exhausted => stats.levels_exhausted.push(k),
            LevelResult::BudgetExceeded => {
                let lower = stats.levels_exhausted.last().map_or(bounds.lower.value, |&l| l + 1);
                return Ok(SolveResult {
                    outcome: Outcome::Unknown { lower, upper: bounds.upper.value },
                    bounds: Some(bounds),
                    stats,
                });
            }
        }
    }
    Err(Error::Precondition(
        "search exhausted every level below a proven upper bound (internal bug)".into(),
    ))
}

enum LevelResult {
    Found(Partition),
    Exhausted,
    BudgetExceeded,
}

struct SearchContext<'a> {
    g: &'a Graph,
    dm: &'a DistanceMatrix,
    /// Vertex visited at each search position: largest twin class first.
    order: Vec<usize>,
    /// Twin class id of the vertex at each position.
    class_of_pos: Vec<usize>,
    class_sizes: Vec<usize>,
    largest_class_len: usize,
}

impl<'a> SearchContext<'a> {
    fn new(g: &'a Graph, dm: &'a DistanceMatrix, td: &'a TwinDecomposition) -> Self {
        let n = g.n();
        // least-index class among the tau-sets
        let lead = td.tau_sets[0];
        let mut order: Vec<usize> = td.classes[lead].vertices.clone();
        let in_lead: u64 = order.iter().fold(0, |m, &v| m | 1 << v);
        order.extend((0..n).filter(|&v| in_lead >> v & 1 == 0));

        let mut class_of_vertex = vec![0usize; n];
        for (ci, class) in td.classes.iter().enumerate() {
            for &v in &class.vertices {
                class_of_vertex[v] = ci;
            }
        }
        let class_of_pos = order.iter().map(|&v| class_of_vertex[v]).collect();
        let class_sizes = td.classes.iter().map(|c| c.vertices.len()).collect();
        SearchContext {
            g,
            dm,
            order,
            class_of_pos,
            class_sizes,
            largest_class_len: td.tau(),
        }
    }

    fn run_level(&self, k: usize, budget: u64, stats: &mut SearchStats) -> LevelResult {
        let n = self.g.n();
        if k == 0 || k > n {
            return LevelResult::Exhausted;
        }
        // a twin class larger than k can never spread over k parts
        if self.class_sizes.iter().any(|&s| s > k) {
            return LevelResult::Exhausted;
        }
        let mut assign = vec![usize::MAX; n];
        let mut class_parts: Vec<u64> = vec![0; self.class_sizes.len()];
        // pre-assign the leading twin class to parts 0..t-1
        let forced = self.largest_class_len.min(k);
        for (i, a) in assign.iter_mut().enumerate().take(forced) {
            *a = i;
            class_parts[self.class_of_pos[i]] |= 1 << i;
        }
        let mut state = LevelState {
            ctx: self,
            k,
            budget,
            stats,
            assign,
            class_parts,
        };
        state.dfs(forced, forced)
    }
}

struct LevelState<'a, 'b> {
    ctx: &'a SearchContext<'a>,
    k: usize,
    budget: u64,
    stats: &'b mut SearchStats,
    /// Part index per search position.
    assign: Vec<usize>,
    /// Parts already used by each twin class.
    class_parts: Vec<u64>,
}

impl LevelState<'_, '_> {
    fn dfs(&mut self, pos: usize, open: usize) -> LevelResult {
        let n = self.ctx.g.n();
        if pos == n {
            debug_assert_eq!(open, self.k);
            self.stats.partitions_tested += 1;
            let mut part_of = vec![0usize; n];
            for (i, &v) in self.ctx.order.iter().enumerate() {
                part_of[v] = self.assign[i];
            }
            let pi = Partition::new(part_of).expect("all parts open");
            let (ok, _) = is_locating_partition(self.ctx.dm, &pi);
            return if ok {
                LevelResult::Found(pi.canonicalized())
            } else {
                LevelResult::Exhausted
            };
        }
        let remaining = n - pos;
        let cls = self.ctx.class_of_pos[pos];
        // a position may reuse any open part or open part index `open`
        let limit = if open < self.k { open + 1 } else { self.k };
        for p in 0..limit {
            let opened = open + usize::from(p == open);
            // must still be able to open the missing parts
            if self.k - opened > remaining - 1 {
                continue;
            }
            if self.class_parts[cls] >> p & 1 == 1 {
                continue;
            }
            self.stats.nodes_expanded += 1;
            if self.stats.nodes_expanded > self.budget {
                return LevelResult::BudgetExceeded;
            }
            self.assign[pos] = p;
            self.class_parts[cls] |= 1 << p;
            let res = self.dfs(pos + 1, opened);
            self.class_parts[cls] &= !(1u64 << p);
            self.assign[pos] = usize::MAX;
            match res {
                LevelResult::Exhausted => {}
                other => return other,
            }
        }
        LevelResult::Exhausted
    }
}

/// Unpruned oracle: every set partition in RGS order by increasing part
/// count. Enforced to n <= 8.
pub fn partition_dimension_naive(g: &Graph) -> Result<SolveResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n > 8 {
        return Err(Error::Precondition(format!(
            "naive solver refuses n = {n} > 8"
        )));
    }
    let dm = DistanceMatrix::new(g);
    let mut stats = SearchStats::default();
    for k in 1..=n {
        let mut rgs = vec![0usize; n];
        if let Some(pi) = naive_level(&dm, n, k, &mut rgs, 1, 1, &mut stats) {
            return Ok(SolveResult {
                outcome: Outcome::Exact { value: k, witness: pi },
                bounds: None,
                stats,
            });
        }
        stats.levels_exhausted.push(k);
    }
    Err(Error::Precondition("no locating partition found (internal bug)".into()))
}

fn naive_level(
    dm: &DistanceMatrix,
    n: usize,
    k: usize,
    rgs: &mut Vec<usize>,
    pos: usize,
    open: usize,
    stats: &mut SearchStats,
) -> Option<Partition> {
    if pos == n {
        if open != k {
            return None;
        }
        stats.partitions_tested += 1;
        let pi = Partition::new(rgs.clone()).expect("rgs uses all parts");
        return is_locating_partition(dm, &pi).0.then_some(pi);
    }
    for p in 0..=open.min(k - 1) {
        stats.nodes_expanded += 1;
        rgs[pos] = p;
        let opened = open.max(p + 1);
        if let Some(pi) = naive_level(dm, n, k, rgs, pos + 1, opened, stats) {
            return Some(pi);
        }
    }
    None
}

#[derive(Clone, Debug)]
pub struct MetricDimResult {
    pub value: usize,
    pub witness: Vec<usize>,
    pub sets_tested: u64,
}

/// Exact metric dimension by subset search in increasing size. Every
/// locating set must contain all but one vertex of each twin class, which
/// gives the starting size and a membership filter.
pub fn metric_dimension(g: &Graph) -> Result<MetricDimResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n == 1 {
        return Ok(MetricDimResult { value: 0, witness: vec![], sets_tested: 0 });
    }
    let dm = DistanceMatrix::new(g);
    let td = twin_decomposition(g);
    let lower = (n - td.classes.len()).max(1);
    let mut tested = 0u64;
    for size in lower..n {
        let mut chosen = Vec::with_capacity(size);
        if let Some(w) = metric_search(&dm, &td, n, size, 0, &mut chosen, &mut tested) {
            return Ok(MetricDimResult { value: size, witness: w, sets_tested: tested });
        }
    }
    // V minus one vertex is always locating on a connected graph with n >= 2
    Ok(MetricDimResult {
        value: n - 1,
        witness: (0..n - 1).collect(),
        sets_tested: tested,
    })
}

fn metric_search(
    dm: &DistanceMatrix,
    td: &TwinDecomposition,
    n: usize,
    size: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    tested: &mut u64,
) -> Option<Vec<usize>> {
    if chosen.len() == size {
        // twin filter: at most one member of each class missing
        let in_set: u64 = chosen.iter().fold(0, |m, &v| m | 1 << v);
        for class in &td.classes {
            if (class.mask() & !in_set).count_ones() > 1 {
                return None;
            }
        }
        *tested += 1;
        return is_locating_set(dm, chosen).then(|| chosen.clone());
    }
    for v in start..n {
        if n - v < size - chosen.len() {
            break;
        }
        chosen.push(v);
        if let Some(w) = metric_search(dm, td, n, size, v + 1, chosen, tested) {
            return Some(w);
        }
        chosen.pop();
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BetaPPrediction {
    /// Empty tau-set: beta_p = tau exactly.
    ExactlyTau(usize),
    /// Clique tau-set: tau < beta_p <= (n + tau)/2.
    Interval { lower_exclusive: usize, upper_inclusive: usize },
}

#[derive(Clone, Debug)]
pub struct LargeTwinClassification {
    pub tau: usize,
    pub tau_set: Vec<usize>,
    pub kind: TwinKind,
    pub prediction: BetaPPrediction,
}

/// Trichotomy classification for tau > n/2 on a non-complete graph.
pub fn classify_large_twin(g: &Graph) -> Result<LargeTwinClassification> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let td = twin_decomposition(g);
    if td.tau() * 2 <= n {
        return Err(Error::Precondition("classification requires tau > n/2".into()));
    }
    if td.tau() == n {
        return Err(Error::Precondition("classification excludes K_n".into()));
    }
    let class = td.unique_tau_set().expect("tau > n/2 has a unique tau-set");
    let tau = td.tau();
    let prediction = match class.kind {
        TwinKind::False => BetaPPrediction::ExactlyTau(tau),
        TwinKind::True => BetaPPrediction::Interval {
            lower_exclusive: tau,
            upper_inclusive: (n + tau) / 2,
        },
        TwinKind::Singleton => unreachable!("tau > n/2 >= 1 implies a class of size >= 2"),
    };
    Ok(LargeTwinClassification {
        tau,
        tau_set: class.vertices.clone(),
        kind: class.kind,
        prediction,
    })
}
