//! Exhaustive breadth-first search over `(lion multiset, cleared set)` states.
//!
//! Graphs are limited to 64 vertices and at most [`MAX_SEARCH_LIONS`] lions
//! so that a state packs into a `u128`: six bits per sorted lion position in
//! the high word, the cleared mask in the low word.

use rayon::prelude::*;
use rustc_hash::{FxHashMap, FxHashSet};
use serde::Serialize;

use crate::dynamics::{initial_state, step, MotionModel, MoveStep, Trace};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subsets::masks;

pub const MAX_SEARCH_LIONS: usize = 10;
pub const DEFAULT_MAX_STATES: u64 = 10_000_000;
pub const DEFAULT_MAX_DEPTH: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_states: u64,
    pub max_depth: usize,
    /// Drop a state when an already stored state has the same lions and a
    /// superset of its cleared vertices.
    pub dominance_pruning: bool,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_states: DEFAULT_MAX_STATES,
            max_depth: DEFAULT_MAX_DEPTH,
            dominance_pruning: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum StartPolicy {
    /// Canonical starts: everything on vertex 0 when start positions do not
    /// matter, one start per parity class for caffeinated lions on a
    /// bipartite graph, and every multiset on a disconnected graph.
    #[default]
    Auto,
    Explicit(Vec<Vec<usize>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchVerdict {
    Cleared(Trace),
    Impossible,
    Unknown(String),
}

impl SearchVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            SearchVerdict::Cleared(_) => "cleared",
            SearchVerdict::Impossible => "impossible",
            SearchVerdict::Unknown(_) => "unknown",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub verdict: SearchVerdict,
    /// States stored in the visited set, starts included.
    pub explored: u64,
    pub peak_frontier: usize,
}

/// Result of searching `k = 0, 1, …` for the smallest sweeping team.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinLions {
    Found {
        k: usize,
        trace: Trace,
    },
    /// Every `k ≤ k_max` is impossible.
    Exhausted {
        k_max: usize,
    },
    Unknown {
        k: usize,
        reason: String,
    },
}

/// Applies one synchronous move to a cleared mask. Mirrors
/// [`crate::dynamics::step`] on graphs with at most 64 vertices.
pub fn fast_step(nbrs: &[u64], cleared: u64, from: &[usize], to: &[usize]) -> u64 {
    let occupied = to.iter().fold(0u64, |m, &v| m | 1 << v);
    let mut endpoints = 0u64;
    for (&a, &b) in from.iter().zip(to) {
        if a != b {
            endpoints |= 1 << a | 1 << b;
        }
    }
    let mut next = cleared | occupied;
    let mut rest = cleared & !occupied;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let mut sources = nbrs[v] & !cleared;
        if sources == 0 {
            continue;
        }
        if endpoints >> v & 1 == 1 {
            for (&a, &b) in from.iter().zip(to) {
                if a == v && b != v {
                    sources &= !(1 << b);
                } else if b == v && a != v {
                    sources &= !(1 << a);
                }
            }
        }
        if sources != 0 {
            next &= !(1 << v);
        }
    }
    next
}

fn pack(sorted: &[usize], cleared: u64) -> u128 {
    let pos = sorted
        .iter()
        .enumerate()
        .fold(0u64, |w, (i, &p)| w | (p as u64) << (6 * i));
    (pos as u128) << 64 | cleared as u128
}

fn unpack(key: u128, k: usize) -> (Vec<usize>, u64) {
    let pos = (key >> 64) as u64;
    (
        (0..k).map(|i| (pos >> (6 * i) & 63) as usize).collect(),
        key as u64,
    )
}

struct Expander<'a> {
    nbrs: Vec<u64>,
    options: Vec<Vec<usize>>,
    model: MotionModel,
    k: usize,
    g: &'a Graph,
}

impl<'a> Expander<'a> {
    fn new(g: &'a Graph, model: MotionModel, k: usize) -> Result<Self> {
        let nbrs = masks(g)?;
        let options = (0..g.vertex_count())
            .map(|v| {
                let mut o = Vec::new();
                if model == MotionModel::Free {
                    o.push(v);
                }
                o.extend_from_slice(g.neighbors(v));
                o
            })
            .collect();
        Ok(Expander {
            nbrs,
            options,
            model,
            k,
            g,
        })
    }

    /// Calls `f` with every target vector from `from` (in a fixed order).
    /// Lions sharing a vertex pick options in nondecreasing order, since
    /// swapping them gives the same successor.
    fn for_each_move(&self, from: &[usize], mut f: impl FnMut(&[usize])) {
        let k = from.len();
        if self.model == MotionModel::Polite {
            let mut to = from.to_vec();
            f(&to);
            for i in 0..k {
                if i > 0 && from[i] == from[i - 1] {
                    continue;
                }
                for &w in self.g.neighbors(from[i]) {
                    to[i] = w;
                    f(&to);
                }
                to[i] = from[i];
            }
            return;
        }
        if k == 0 {
            f(&[]);
            return;
        }
        if from.iter().any(|&v| self.options[v].is_empty()) {
            return;
        }
        let mut idx = vec![0usize; k];
        let mut to: Vec<usize> = from.iter().map(|&v| self.options[v][0]).collect();
        loop {
            f(&to);
            // advance like an odometer from the last lion
            let mut i = k;
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                if idx[i] + 1 < self.options[from[i]].len() {
                    idx[i] += 1;
                    to[i] = self.options[from[i]][idx[i]];
                    for j in i + 1..k {
                        idx[j] = if from[j] == from[j - 1] {
                            idx[j - 1]
                        } else {
                            0
                        };
                        to[j] = self.options[from[j]][idx[j]];
                    }
                    break;
                }
            }
        }
    }

    fn successors(&self, key: u128) -> Vec<u128> {
        let (from, cleared) = unpack(key, self.k);
        let mut out = Vec::new();
        let mut sorted = vec![0; self.k];
        self.for_each_move(&from, |to| {
            let next = fast_step(&self.nbrs, cleared, &from, to);
            sorted.copy_from_slice(to);
            sorted.sort_unstable();
            out.push(pack(&sorted, next));
        });
        out
    }

    /// A move from the labelled positions `from` reaching state `target`.
    fn move_to(&self, from: &[usize], cleared: u64, target: u128) -> Option<Vec<usize>> {
        let mut order: Vec<usize> = (0..self.k).collect();
        order.sort_by_key(|&i| from[i]);
        let sorted_from: Vec<usize> = order.iter().map(|&i| from[i]).collect();
        let mut found = None;
        let mut sorted = vec![0; self.k];
        self.for_each_move(&sorted_from, |to| {
            if found.is_some() {
                return;
            }
            let next = fast_step(&self.nbrs, cleared, &sorted_from, to);
            sorted.copy_from_slice(to);
            sorted.sort_unstable();
            if pack(&sorted, next) == target {
                let mut labelled = vec![0; self.k];
                for (slot, &i) in order.iter().enumerate() {
                    labelled[i] = to[slot];
                }
                found = Some(labelled);
            }
        });
        found
    }
}

/// Visited states, either exact or up to cleared-set dominance.
enum Visited {
    Exact(FxHashSet<u128>),
    Dominance(FxHashMap<u64, Vec<u64>>),
}

impl Visited {
    fn insert(&mut self, key: u128) -> bool {
        match self {
            Visited::Exact(set) => set.insert(key),
            Visited::Dominance(map) => {
                let cleared = key as u64;
                let list = map.entry((key >> 64) as u64).or_default();
                if list.iter().any(|&c| c & cleared == cleared) {
                    return false;
                }
                list.retain(|&c| c & cleared != c);
                list.push(cleared);
                true
            }
        }
    }
}

fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in lo..n {
            cur.push(v);
            rec(n, k, v, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// Start configurations used by [`StartPolicy::Auto`].
pub fn auto_starts(g: &Graph, k: usize, model: MotionModel) -> Vec<Vec<usize>> {
    if !g.is_connected() {
        return multisets(g.vertex_count(), k);
    }
    if model != MotionModel::Caffeinated || g.has_odd_cycle() {
        return vec![vec![0; k]];
    }
    // parity classes: j lions on vertex 0, the rest on a neighbour
    match g.neighbors(0).first() {
        None => vec![vec![0; k]],
        Some(&w) => (0..=k)
            .map(|j| {
                let mut s = vec![0; j];
                s.extend(std::iter::repeat_n(w, k - j));
                s
            })
            .collect(),
    }
}

pub fn can_clear(
    g: &Graph,
    k: usize,
    model: MotionModel,
    starts: &StartPolicy,
    limits: &SearchLimits,
) -> Result<SearchOutcome> {
    can_clear_with(g, k, model, starts, limits, false)
}

/// [`can_clear`] with optional parallel expansion of each BFS level.
/// Successors are merged in frontier order, so results match the
/// single-threaded run exactly.
pub fn can_clear_with(
    g: &Graph,
    k: usize,
    model: MotionModel,
    starts: &StartPolicy,
    limits: &SearchLimits,
    parallel: bool,
) -> Result<SearchOutcome> {
    if k > MAX_SEARCH_LIONS {
        return Err(Error::ResourceLimit(format!(
            "search supports at most {MAX_SEARCH_LIONS} lions, got {k}"
        )));
    }
    if limits.max_states == 0 || limits.max_depth == 0 {
        return Err(Error::InvalidParameter(
            "search limits must be positive".into(),
        ));
    }
    let exp = Expander::new(g, model, k)?;
    let start_list = match starts {
        StartPolicy::Auto => auto_starts(g, k, model),
        StartPolicy::Explicit(list) => list.clone(),
    };
    for s in &start_list {
        initial_state(g, s)?;
        if s.len() != k {
            return Err(Error::InvalidParameter(format!(
                "start {s:?} does not place {k} lions"
            )));
        }
    }
    let full = if g.vertex_count() == 64 {
        !0
    } else {
        (1u64 << g.vertex_count()) - 1
    };

    let mut visited = if limits.dominance_pruning {
        Visited::Dominance(FxHashMap::default())
    } else {
        Visited::Exact(FxHashSet::default())
    };
    // states[i] has parent parents[i]; roots point at themselves
    let mut states: Vec<u128> = Vec::new();
    let mut parents: Vec<u32> = Vec::new();
    let mut frontier: Vec<u32> = Vec::new();
    let mut explored = 0u64;
    let mut peak = 0usize;

    let finish = |verdict, explored, peak| SearchOutcome {
        verdict,
        explored,
        peak_frontier: peak,
    };

    for s in &start_list {
        let mut sorted = s.clone();
        sorted.sort_unstable();
        let cleared = sorted.iter().fold(0u64, |m, &v| m | 1 << v);
        let key = pack(&sorted, cleared);
        if visited.insert(key) {
            explored += 1;
            let id = states.len() as u32;
            states.push(key);
            parents.push(id);
            frontier.push(id);
            if cleared == full {
                let trace = rebuild(g, &exp, &states, &parents, id)?;
                return Ok(finish(SearchVerdict::Cleared(trace), explored, 1));
            }
        }
    }

    let mut depth = 0usize;
    while !frontier.is_empty() {
        peak = peak.max(frontier.len());
        if depth >= limits.max_depth {
            return Ok(finish(
                SearchVerdict::Unknown(format!("depth limit {} reached", limits.max_depth)),
                explored,
                peak,
            ));
        }
        depth += 1;
        let expand = |&id: &u32| exp.successors(states[id as usize]);
        let children: Vec<Vec<u128>> = if parallel {
            frontier.par_iter().map(expand).collect()
        } else {
            frontier.iter().map(expand).collect()
        };
        let mut next = Vec::new();
        for (&parent, kids) in frontier.iter().zip(children) {
            for key in kids {
                if !visited.insert(key) {
                    continue;
                }
                explored += 1;
                let id = states.len() as u32;
                states.push(key);
                parents.push(parent);
                if key as u64 == full {
                    let trace = rebuild(g, &exp, &states, &parents, id)?;
                    return Ok(finish(
                        SearchVerdict::Cleared(trace),
                        explored,
                        peak.max(next.len() + 1),
                    ));
                }
                if explored >= limits.max_states {
                    return Ok(finish(
                        SearchVerdict::Unknown(format!(
                            "state limit {} reached",
                            limits.max_states
                        )),
                        explored,
                        peak.max(next.len() + 1),
                    ));
                }
                next.push(id);
            }
        }
        frontier = next;
    }
    Ok(finish(SearchVerdict::Impossible, explored, peak))
}

/// Turns the parent chain ending at `id` into a trace with labelled lions.
fn rebuild(g: &Graph, exp: &Expander, states: &[u128], parents: &[u32], id: u32) -> Result<Trace> {
    let mut chain = vec![id];
    let mut cur = id;
    while parents[cur as usize] != cur {
        cur = parents[cur as usize];
        chain.push(cur);
    }
    chain.reverse();
    let (start, _) = unpack(states[chain[0] as usize], exp.k);
    let mut trace = Trace::new(initial_state(g, &start)?);
    for &next in &chain[1..] {
        let state = trace.last();
        let cleared = state.cleared.to_mask().expect("search graphs fit a mask");
        let to = exp
            .move_to(&state.lions, cleared, states[next as usize])
            .expect("every stored state is reachable from its parent");
        let mv = MoveStep::between(&state.lions, &to);
        let after = step(g, state, &mv)?;
        debug_assert_eq!(after.cleared.to_mask(), Some(states[next as usize] as u64));
        trace.push(mv, after);
    }
    Ok(trace)
}

pub fn min_lions(
    g: &Graph,
    model: MotionModel,
    k_max: usize,
    limits: &SearchLimits,
) -> Result<MinLions> {
    min_lions_with(g, model, k_max, limits, false)
}

pub fn min_lions_with(
    g: &Graph,
    model: MotionModel,
    k_max: usize,
    limits: &SearchLimits,
    parallel: bool,
) -> Result<MinLions> {
    for k in 0..=k_max {
        match can_clear_with(g, k, model, &StartPolicy::Auto, limits, parallel)?.verdict {
            SearchVerdict::Cleared(trace) => return Ok(MinLions::Found { k, trace }),
            SearchVerdict::Impossible => {}
            SearchVerdict::Unknown(reason) => return Ok(MinLions::Unknown { k, reason }),
        }
    }
    Ok(MinLions::Exhausted { k_max })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LemmaViolation {
    /// The cleared set grew by more than the number of lions.
    Growth {
        time: usize,
        before: usize,
        after: usize,
    },
    /// The cleared set grew although its boundary had at least `2k` vertices.
    GrowthDespiteBoundary {
        time: usize,
        boundary: usize,
        before: usize,
        after: usize,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub steps_checked: usize,
    pub violations: Vec<LemmaViolation>,
}

/// Checks at every step that `|C(t+1)| - |C(t)| ≤ k` and that
/// `|∂C(t)| ≥ 2k` forces `|C(t+1)| ≤ |C(t)|`.
pub fn verify_lemma_bounds(g: &Graph, trace: &Trace, k: usize) -> Result<LemmaReport> {
    let mut report = LemmaReport::default();
    for w in trace.states.windows(2) {
        let (before, after) = (w[0].cleared.len(), w[1].cleared.len());
        let boundary = g.boundary(&w[0].cleared)?.len();
        report.steps_checked += 1;
        if after > before + k {
            report.violations.push(LemmaViolation::Growth {
                time: w[0].time,
                before,
                after,
            });
        }
        if boundary >= 2 * k && after > before {
            report
                .violations
                .push(LemmaViolation::GrowthDespiteBoundary {
                    time: w[0].time,
                    boundary,
                    before,
                    after,
                });
        }
    }
    Ok(report)
}
