//! Exact computation of the signed Roman domination number.
//!
//! Small graphs are solved by exhaustive enumeration of all 3^n labelings
//! (the oracle path); larger ones by depth-first branch and bound. Both
//! return a verified witness labeling along with the optimum.

use std::sync::atomic::{AtomicBool, AtomicI32, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::graph::Graph;
use crate::srdf::{Label, Labeling};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    Exhaustive,
    BranchAndBound,
}

impl SolveMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveMethod::Exhaustive => "exhaustive",
            SolveMethod::BranchAndBound => "branch-and-bound",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Largest order solved by plain enumeration; branch and bound above.
    pub exhaustive_threshold: usize,
    /// Cap on explored search nodes; `None` runs to completion.
    pub node_budget: Option<u64>,
    /// Sequential fixed-order search with a reproducible witness. When
    /// false, independent subtrees may be searched in parallel; the optimum
    /// is unchanged but the witness may be any optimal labeling.
    pub deterministic: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            exhaustive_threshold: 12,
            node_budget: None,
            deterministic: true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    /// The signed Roman domination number of the input graph.
    pub gamma: i32,
    /// An optimal labeling; always verifier-valid with weight `gamma`.
    pub witness: Labeling,
    pub nodes_explored: u64,
    pub method: SolveMethod,
    pub elapsed: Duration,
}

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("cannot solve the order-0 graph")]
    EmptyGraph,
    #[error("node budget exhausted after {nodes_explored} nodes; proven bounds [{lower_bound}, {upper_bound}]")]
    BudgetExhausted {
        /// Largest weight proven unreachable from below.
        lower_bound: i32,
        /// Weight of the best labeling found.
        upper_bound: i32,
        /// The labeling achieving `upper_bound`.
        incumbent: Labeling,
        nodes_explored: u64,
    },
}

/// Advances to the next labeling in lexicographic order (vertex 0 most
/// significant, values ordered −1 < 1 < 2); false once the last one wraps.
fn odometer_step(f: &mut Labeling) -> bool {
    let mut i = f.len();
    loop {
        if i == 0 {
            return false;
        }
        i -= 1;
        match f.get(i) {
            Label::MinusOne => {
                f.set(i, Label::One);
                return true;
            }
            Label::One => {
                f.set(i, Label::Two);
                return true;
            }
            Label::Two => f.set(i, Label::MinusOne),
        }
    }
}

/// Streams every labeling in {−1,1,2}^V that passes `filter`, in
/// lexicographic order over the value order (−1, 1, 2) with vertex 0 most
/// significant. Returns the number visited. Nothing is materialized, so the
/// caller controls the time budget (3^n steps).
pub fn enumerate_labelings<F, V>(g: &Graph, mut filter: F, mut visitor: V) -> u64
where
    F: FnMut(&Labeling) -> bool,
    V: FnMut(&Labeling),
{
    let mut f = Labeling::new(vec![Label::MinusOne; g.order()]);
    let mut count = 0u64;
    loop {
        if filter(&f) {
            visitor(&f);
            count += 1;
        }
        if !odometer_step(&mut f) {
            return count;
        }
    }
}

/// Lower bound on gamma when the graph has a universal vertex (the whole
/// weight then appears in one closed neighborhood). Otherwise returns the
/// trivial bound −order, which claims nothing.
pub fn lower_bound_universal(g: &Graph) -> i32 {
    if g.has_universal_vertex() == Some(true) {
        1
    } else {
        -(g.order() as i32)
    }
}

/// Proven lower bound used to seed the search. On a d-regular graph each
/// vertex appears in exactly d+1 closed neighborhoods, so summing the n
/// closed-sum constraints gives (d+1)·w(f) >= n.
fn seed_lower_bound(g: &Graph) -> i32 {
    let mut bound = lower_bound_universal(g);
    let n = g.order();
    if n > 0 {
        let min_deg = (0..n).map(|v| g.degree(v)).min().unwrap();
        let max_deg = g.max_degree().unwrap();
        if min_deg == max_deg {
            bound = bound.max(n.div_ceil(max_deg + 1) as i32);
        }
    }
    bound
}

/// Computes gamma exactly, with one optimal witness.
pub fn solve_exact(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolverError> {
    if g.order() == 0 {
        return Err(SolverError::EmptyGraph);
    }
    let start = Instant::now();
    let mut result = if g.order() <= opts.exhaustive_threshold {
        solve_exhaustive(g, opts.node_budget)?
    } else {
        solve_branch_and_bound(g, opts)?
    };
    result.elapsed = start.elapsed();
    Ok(result)
}

/// Validity check without report allocation, for the hot enumeration loop.
fn is_valid_srdf(g: &Graph, f: &Labeling) -> bool {
    for v in 0..g.order() {
        let mut sum = f.get(v).value();
        for &u in g.neighbors(v) {
            sum += f.get(u).value();
        }
        if sum < 1 {
            return false;
        }
        if f.get(v) == Label::MinusOne && !g.neighbors(v).iter().any(|&u| f.get(u) == Label::Two) {
            return false;
        }
    }
    true
}

fn solve_exhaustive(g: &Graph, budget: Option<u64>) -> Result<SolveResult, SolverError> {
    let mut best: Option<(i32, Labeling)> = None;
    let mut nodes = 0u64;
    let mut f = Labeling::new(vec![Label::MinusOne; g.order()]);
    loop {
        nodes += 1;
        if budget.is_some_and(|b| nodes > b) {
            let (upper_bound, incumbent) =
                best.unwrap_or_else(|| (g.order() as i32, Labeling::all_ones(g.order())));
            return Err(SolverError::BudgetExhausted {
                lower_bound: seed_lower_bound(g),
                upper_bound,
                incumbent,
                nodes_explored: nodes,
            });
        }
        if is_valid_srdf(g, &f) {
            let w = f.weight();
            if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
                best = Some((w, f.clone()));
            }
        }
        if !odometer_step(&mut f) {
            break;
        }
    }
    // all-ones is always a valid SRDF, so a minimum exists
    let (gamma, witness) = best.expect("every nonempty graph admits an SRDF");
    Ok(SolveResult {
        gamma,
        witness,
        nodes_explored: nodes,
        method: SolveMethod::Exhaustive,
        elapsed: Duration::ZERO,
    })
}

/// Deterministic valid starting labeling: label a greedy dominating set 2
/// and everything else 1, then flip 1s to −1 wherever all closed sums stay
/// at least 1. Tightens pruning from the first search node.
fn greedy_incumbent(g: &Graph) -> Labeling {
    let n = g.order();
    let mut in_set = vec![false; n];
    let mut covered = vec![false; n];
    let mut uncovered = n;
    while uncovered > 0 {
        // highest coverage gain first, ties by index
        let mut best = (0usize, 0usize);
        for v in 0..n {
            let gain =
                usize::from(!covered[v]) + g.neighbors(v).iter().filter(|&&u| !covered[u]).count();
            if gain > best.1 {
                best = (v, gain);
            }
        }
        let v = best.0;
        in_set[v] = true;
        for &u in g.neighbors(v) {
            if !covered[u] {
                covered[u] = true;
                uncovered -= 1;
            }
        }
        if !covered[v] {
            covered[v] = true;
            uncovered -= 1;
        }
    }
    let mut f: Vec<Label> = in_set
        .iter()
        .map(|&s| if s { Label::Two } else { Label::One })
        .collect();
    let mut sums: Vec<i32> = (0..n)
        .map(|v| f[v].value() + g.neighbors(v).iter().map(|&u| f[u].value()).sum::<i32>())
        .collect();
    for v in 0..n {
        if f[v] != Label::One {
            continue;
        }
        let has_two_neighbor = g.neighbors(v).iter().any(|&u| f[u] == Label::Two);
        let room = sums[v] >= 3 && g.neighbors(v).iter().all(|&u| sums[u] >= 3);
        if has_two_neighbor && room {
            f[v] = Label::MinusOne;
            sums[v] -= 2;
            for &u in g.neighbors(v) {
                sums[u] -= 2;
            }
        }
    }
    Labeling::new(f)
}

/// Shared monotone state: only strictly better solutions are published.
struct Incumbent {
    weight: AtomicI32,
    labeling: Mutex<Labeling>,
}

impl Incumbent {
    fn new(f: Labeling) -> Self {
        Incumbent {
            weight: AtomicI32::new(f.weight()),
            labeling: Mutex::new(f),
        }
    }

    fn weight(&self) -> i32 {
        self.weight.load(Ordering::Relaxed)
    }

    fn offer(&self, weight: i32, labels: &[Label]) {
        let mut guard = self.labeling.lock().unwrap();
        if weight < self.weight.load(Ordering::Relaxed) {
            self.weight.store(weight, Ordering::Relaxed);
            *guard = Labeling::new(labels.to_vec());
        }
    }
}

/// Per-task search state. All counters are maintained incrementally and
/// undone on backtrack.
struct SearchState<'a> {
    graph: &'a Graph,
    order: Vec<usize>,
    labels: Vec<Label>,
    assigned: Vec<bool>,
    /// Sum of assigned labels over N[v].
    assigned_closed_sum: Vec<i32>,
    /// Unassigned vertices remaining in N[v].
    unassigned_closed: Vec<usize>,
    /// Unassigned vertices remaining in N(v).
    unassigned_open: Vec<usize>,
    /// Neighbors of v currently labeled 2.
    two_neighbors: Vec<usize>,
    partial_weight: i32,
}

enum Flow {
    Completed,
    Aborted,
}

struct SearchCtx<'a> {
    incumbent: &'a Incumbent,
    nodes: &'a AtomicU64,
    budget: Option<u64>,
    stop: &'a AtomicBool,
    /// Decision mode: stop as soon as any solution below the cutoff exists.
    stop_at_first: bool,
    /// Static cutoff for decision mode; descent uses the incumbent weight.
    static_cutoff: Option<i32>,
    lower_bound: i32,
}

impl<'a> SearchState<'a> {
    fn new(graph: &'a Graph) -> Self {
        let n = graph.order();
        let mut order: Vec<usize> = (0..n).collect();
        // high-degree vertices first: they constrain the most neighborhoods
        order.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
        SearchState {
            graph,
            order,
            labels: vec![Label::One; n],
            assigned: vec![false; n],
            assigned_closed_sum: vec![0; n],
            unassigned_closed: (0..n).map(|v| graph.degree(v) + 1).collect(),
            unassigned_open: (0..n).map(|v| graph.degree(v)).collect(),
            two_neighbors: vec![0; n],
            partial_weight: 0,
        }
    }

    fn unassigned_total(&self, depth: usize) -> i32 {
        (self.graph.order() - depth) as i32
    }

    /// Optimistic completion bound: every unassigned vertex taken as −1.
    fn optimistic(&self, depth: usize) -> i32 {
        self.partial_weight - self.unassigned_total(depth)
    }

    /// Applies `label` at `v` and reports whether the partial assignment is
    /// still feasible. The state is updated even on failure; callers must
    /// always `unassign` afterwards.
    fn assign(&mut self, v: usize, label: Label) -> bool {
        let value = label.value();
        self.labels[v] = label;
        self.assigned[v] = true;
        self.partial_weight += value;
        let mut feasible = true;
        self.assigned_closed_sum[v] += value;
        self.unassigned_closed[v] -= 1;
        for i in 0..self.graph.neighbors(v).len() {
            let u = self.graph.neighbors(v)[i];
            self.assigned_closed_sum[u] += value;
            self.unassigned_closed[u] -= 1;
            self.unassigned_open[u] -= 1;
            if label == Label::Two {
                self.two_neighbors[u] += 1;
            }
            // condition (a), optimistically completed with 2s
            if self.assigned_closed_sum[u] + 2 * (self.unassigned_closed[u] as i32) < 1 {
                feasible = false;
            }
            // condition (b) for a settled −1 neighbor
            if self.assigned[u]
                && self.labels[u] == Label::MinusOne
                && self.unassigned_open[u] == 0
                && self.two_neighbors[u] == 0
            {
                feasible = false;
            }
        }
        if self.assigned_closed_sum[v] + 2 * (self.unassigned_closed[v] as i32) < 1 {
            feasible = false;
        }
        if label == Label::MinusOne && self.unassigned_open[v] == 0 && self.two_neighbors[v] == 0 {
            feasible = false;
        }
        feasible
    }

    fn unassign(&mut self, v: usize) {
        let value = self.labels[v].value();
        self.assigned[v] = false;
        self.partial_weight -= value;
        self.assigned_closed_sum[v] -= value;
        self.unassigned_closed[v] += 1;
        for i in 0..self.graph.neighbors(v).len() {
            let u = self.graph.neighbors(v)[i];
            self.assigned_closed_sum[u] -= value;
            self.unassigned_closed[u] += 1;
            self.unassigned_open[u] += 1;
            if self.labels[v] == Label::Two {
                self.two_neighbors[u] -= 1;
            }
        }
    }

    fn dfs(&mut self, depth: usize, ctx: &SearchCtx<'_>) -> Flow {
        if ctx.stop.load(Ordering::Relaxed) {
            return Flow::Completed;
        }
        let cutoff = ctx.static_cutoff.unwrap_or_else(|| ctx.incumbent.weight());
        if self.optimistic(depth) >= cutoff {
            return Flow::Completed; // nothing better below this node
        }
        if depth == self.graph.order() {
            // feasibility was enforced incrementally, so this is a valid
            // SRDF strictly better than the cutoff
            ctx.incumbent.offer(self.partial_weight, &self.labels);
            if ctx.stop_at_first || self.partial_weight <= ctx.lower_bound {
                ctx.stop.store(true, Ordering::Relaxed);
            }
            return Flow::Completed;
        }
        let v = self.order[depth];
        // 2 first so feasible incumbents appear early
        for label in [Label::Two, Label::One, Label::MinusOne] {
            let nodes_seen = ctx.nodes.fetch_add(1, Ordering::Relaxed) + 1;
            if ctx.budget.is_some_and(|b| nodes_seen > b) {
                return Flow::Aborted;
            }
            let feasible = self.assign(v, label);
            let flow = if feasible {
                self.dfs(depth + 1, ctx)
            } else {
                Flow::Completed
            };
            self.unassign(v);
            if matches!(flow, Flow::Aborted) {
                return Flow::Aborted;
            }
            if ctx.stop.load(Ordering::Relaxed) {
                return Flow::Completed;
            }
        }
        Flow::Completed
    }
}

fn solve_branch_and_bound(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolverError> {
    let n = g.order();
    let seed_lb = seed_lower_bound(g);
    let mut start = greedy_incumbent(g);
    debug_assert!(crate::srdf::verify(g, &start).is_ok_and(|r| r.valid));
    if start.weight() > n as i32 {
        start = Labeling::all_ones(n);
    }
    let incumbent = Incumbent::new(start);
    let nodes = AtomicU64::new(0);

    // Phase 1: incumbent-driven descent. With no budget this is complete
    // and exact; with a budget, half is reserved for bound raising below.
    let descent_budget = opts.node_budget.map(|b| b / 2);
    let descent = SearchCtx {
        incumbent: &incumbent,
        nodes: &nodes,
        budget: descent_budget,
        stop: &AtomicBool::new(false),
        stop_at_first: false,
        static_cutoff: None,
        lower_bound: seed_lb,
    };
    let flow = if opts.deterministic {
        SearchState::new(g).dfs(0, &descent)
    } else {
        parallel_descent(g, &descent)
    };

    if matches!(flow, Flow::Completed) {
        let witness = incumbent.labeling.lock().unwrap().clone();
        return Ok(SolveResult {
            gamma: incumbent.weight(),
            witness,
            nodes_explored: nodes.load(Ordering::Relaxed),
            method: SolveMethod::BranchAndBound,
            elapsed: Duration::ZERO,
        });
    }

    // Phase 2: raise the proven lower bound with the remaining budget by
    // deciding, for increasing t, whether any SRDF of weight <= t exists.
    let budget = opts
        .node_budget
        .expect("descent aborts only under a budget");
    let mut proven_lb = seed_lb;
    while proven_lb < incumbent.weight() {
        let t = proven_lb;
        let round_incumbent = Incumbent::new(Labeling::all_ones(n));
        let stop = AtomicBool::new(false);
        let round = SearchCtx {
            incumbent: &round_incumbent,
            nodes: &nodes,
            budget: Some(budget),
            stop: &stop,
            stop_at_first: true,
            static_cutoff: Some(t + 1),
            lower_bound: i32::MIN,
        };
        let flow = SearchState::new(g).dfs(0, &round);
        let found = round_incumbent.weight() <= t;
        if matches!(flow, Flow::Aborted) && !found {
            let witness = incumbent.labeling.lock().unwrap().clone();
            return Err(SolverError::BudgetExhausted {
                lower_bound: proven_lb,
                upper_bound: incumbent.weight(),
                incumbent: witness,
                nodes_explored: nodes.load(Ordering::Relaxed),
            });
        }
        if found {
            // gamma >= t was proven by the earlier rounds, so this hit is
            // optimal
            let witness = round_incumbent.labeling.lock().unwrap().clone();
            return Ok(SolveResult {
                gamma: round_incumbent.weight(),
                witness,
                nodes_explored: nodes.load(Ordering::Relaxed),
                method: SolveMethod::BranchAndBound,
                elapsed: Duration::ZERO,
            });
        }
        proven_lb = t + 1;
    }

    // Every weight below the incumbent was refuted, so it is optimal.
    let witness = incumbent.labeling.lock().unwrap().clone();
    Ok(SolveResult {
        gamma: incumbent.weight(),
        witness,
        nodes_explored: nodes.load(Ordering::Relaxed),
        method: SolveMethod::BranchAndBound,
        elapsed: Duration::ZERO,
    })
}

/// Splits the root vertex's three label choices across rayon tasks. The
/// shared incumbent keeps the optimum identical to the sequential search.
fn parallel_descent(g: &Graph, ctx: &SearchCtx<'_>) -> Flow {
    use rayon::prelude::*;
    let aborted: Vec<bool> = [Label::Two, Label::One, Label::MinusOne]
        .into_par_iter()
        .map(|label| {
            let mut state = SearchState::new(g);
            let v = state.order[0];
            let nodes_seen = ctx.nodes.fetch_add(1, Ordering::Relaxed) + 1;
            if ctx.budget.is_some_and(|b| nodes_seen > b) {
                return true;
            }
            let feasible = state.assign(v, label);
            let flow = if feasible {
                state.dfs(1, ctx)
            } else {
                Flow::Completed
            };
            matches!(flow, Flow::Aborted)
        })
        .collect();
    if aborted.into_iter().any(|a| a) {
        Flow::Aborted
    } else {
        Flow::Completed
    }
}
