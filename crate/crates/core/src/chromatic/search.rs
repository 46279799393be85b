//! Exhaustive k-colorability: DSATUR-ordered backtracking with forward
//! checking over per-vertex color domains.
//!
//! Symmetry breaking: the vertices of a maximal clique are precolored
//! `0, 1, ..`, and a vertex may only take a color already in use or the
//! next fresh one.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use super::{clique_lower, dsatur_upper, Coloring};
use crate::geometry::UGraph;

/// Largest `k` the bitmask domains can represent.
pub const MAX_SEARCH_COLORS: usize = 64;

const UNCOLORED: u8 = u8::MAX;
const CHECK_EVERY: u64 = 1024;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    /// Give up after roughly this many search nodes (checked every 1024).
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
    /// 1 is the canonical single-threaded run.
    pub threads: usize,
    /// Precolor a maximal clique.
    pub fix_clique: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            node_budget: None,
            time_budget: None,
            threads: 1,
            fix_clique: true,
        }
    }
}

impl SearchOptions {
    /// Short stable description recorded in certificates.
    pub fn describe(&self) -> String {
        format!(
            "order=min-domain,max-degree,min-index;forward-checking;fresh-color-bound;fix-clique={}",
            self.fix_clique
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Colorable(Coloring),
    /// Complete search found no coloring.
    Unsat,
    /// Budget ran out first.
    Unresolved,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: SearchOutcome,
    pub nodes: u64,
    /// Vertices fixed to colors `0, 1, ..` before branching.
    pub precolored: Vec<usize>,
    pub elapsed: Duration,
}

/// A proper `k`-coloring, or `None` when none exists. Runs without budget.
pub fn k_colorable(g: &UGraph, k: usize) -> Option<Coloring> {
    match k_colorable_with(g, k, &SearchOptions::default()).outcome {
        SearchOutcome::Colorable(c) => Some(c),
        SearchOutcome::Unsat => None,
        SearchOutcome::Unresolved => unreachable!("no budget was set"),
    }
}

pub fn k_colorable_with(g: &UGraph, k: usize, opts: &SearchOptions) -> SearchReport {
    let start = Instant::now();
    let report = |outcome, nodes, precolored| SearchReport {
        outcome,
        nodes,
        precolored,
        elapsed: start.elapsed(),
    };
    if g.n() == 0 {
        return report(
            SearchOutcome::Colorable(Coloring::new(vec![], k).expect("empty")),
            0,
            vec![],
        );
    }
    if k == 0 {
        return report(SearchOutcome::Unsat, 0, vec![]);
    }
    let greedy = dsatur_upper(g);
    if greedy.k <= k {
        return report(
            SearchOutcome::Colorable(Coloring { k, ..greedy }),
            0,
            vec![],
        );
    }
    if k > MAX_SEARCH_COLORS {
        return report(SearchOutcome::Unresolved, 0, vec![]);
    }

    let precolored = if opts.fix_clique {
        clique_lower(g)
    } else {
        Vec::new()
    };
    if precolored.len() > k {
        return report(SearchOutcome::Unsat, 0, precolored);
    }
    let mut base = State::new(g, k);
    for (c, &v) in precolored.iter().enumerate() {
        if !base.assign(v, c as u8) {
            return report(SearchOutcome::Unsat, 0, precolored);
        }
    }
    let stop = AtomicBool::new(false);
    let nodes = AtomicU64::new(0);
    let ctl = Control {
        node_budget: opts.node_budget,
        deadline: opts.time_budget.map(|t| start + t),
        stop: &stop,
        nodes: &nodes,
    };
    let (step, coloring) = if opts.threads <= 1 {
        let mut s = base;
        let step = s.run(&ctl, None);
        (step, (step == Step::Found).then(|| s.coloring()))
    } else {
        run_parallel(&base, &ctl, opts.threads)
    };
    let outcome = match step {
        Step::Found => SearchOutcome::Colorable(coloring.expect("coloring for Found")),
        Step::Exhausted => SearchOutcome::Unsat,
        Step::Aborted => SearchOutcome::Unresolved,
    };
    report(outcome, nodes.load(Ordering::Relaxed), precolored)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    Found,
    Exhausted,
    Aborted,
}

struct Control<'a> {
    node_budget: Option<u64>,
    deadline: Option<Instant>,
    /// Raised by a worker that found a coloring, or on budget exhaustion.
    stop: &'a AtomicBool,
    nodes: &'a AtomicU64,
}

impl Control<'_> {
    /// Flushes `batch` local nodes; true when the search must stop.
    fn flush(&self, batch: u64) -> bool {
        let total = self.nodes.fetch_add(batch, Ordering::Relaxed) + batch;
        if self.node_budget.is_some_and(|b| total > b)
            || self.deadline.is_some_and(|d| Instant::now() > d)
        {
            self.stop.store(true, Ordering::Relaxed);
        }
        self.stop.load(Ordering::Relaxed)
    }
}

struct Frame {
    v: u32,
    cand: u64,
    mark: usize,
    used_before: usize,
}

#[derive(Clone)]
struct State<'g> {
    g: &'g UGraph,
    k: usize,
    color: Vec<u8>,
    domain: Vec<u64>,
    trail: Vec<(u32, u64)>,
    colored: usize,
    /// Colors `0..used` appear somewhere.
    used: usize,
}

impl<'g> State<'g> {
    fn new(g: &'g UGraph, k: usize) -> Self {
        let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        State {
            g,
            k,
            color: vec![UNCOLORED; g.n()],
            domain: vec![full; g.n()],
            trail: Vec::new(),
            colored: 0,
            used: 0,
        }
    }

    /// Colors `v` and prunes `c` from its uncolored neighbors; false on a
    /// domain wipe-out. The caller undoes either way.
    fn assign(&mut self, v: usize, c: u8) -> bool {
        self.color[v] = c;
        self.colored += 1;
        self.used = self.used.max(c as usize + 1);
        let bit = 1u64 << c;
        for &u in self.g.neighbors(v) {
            if self.color[u] == UNCOLORED && self.domain[u] & bit != 0 {
                self.domain[u] &= !bit;
                self.trail.push((u as u32, bit));
                if self.domain[u] == 0 {
                    return false;
                }
            }
        }
        self.color[v] != UNCOLORED && self.domain[v] & bit != 0
    }

    fn undo(&mut self, v: usize, mark: usize, used_before: usize) {
        while self.trail.len() > mark {
            let (u, bit) = self.trail.pop().expect("nonempty trail");
            self.domain[u as usize] |= bit;
        }
        self.color[v] = UNCOLORED;
        self.colored -= 1;
        self.used = used_before;
    }

    fn pick(&self) -> usize {
        let mut best = usize::MAX;
        let mut best_key = (u32::MAX, 0usize);
        for v in 0..self.g.n() {
            if self.color[v] != UNCOLORED {
                continue;
            }
            let key = (self.domain[v].count_ones(), self.g.degree(v));
            if key.0 < best_key.0 || (key.0 == best_key.0 && key.1 > best_key.1) {
                best = v;
                best_key = key;
                if key.0 <= 1 {
                    break;
                }
            }
        }
        best
    }

    fn allowed(&self) -> u64 {
        let fresh = (self.used + 1).min(self.k);
        if fresh == 64 {
            u64::MAX
        } else {
            (1u64 << fresh) - 1
        }
    }

    fn coloring(&self) -> Coloring {
        let colors = self.color.iter().map(|&c| c as usize).collect();
        Coloring::new(colors, self.k).expect("colors below k")
    }

    /// Depth-first search from the current state. With `split`, partial
    /// assignments reaching `depth` further vertices are recorded and
    /// treated as dead ends instead of being explored.
    fn run(&mut self, ctl: &Control, mut split: Option<(usize, &mut Vec<Vec<(u32, u8)>>)>) -> Step {
        let n = self.g.n();
        let mut stack: Vec<Frame> = Vec::new();
        let mut local = 0u64;
        let finish = |local: u64| {
            ctl.nodes.fetch_add(local, Ordering::Relaxed);
        };
        loop {
            if self.colored == n {
                finish(local);
                return Step::Found;
            }
            let at_split = match &mut split {
                Some((depth, out)) if stack.len() == *depth => {
                    out.push(
                        stack
                            .iter()
                            .map(|f| (f.v, self.color[f.v as usize]))
                            .collect(),
                    );
                    true
                }
                _ => false,
            };
            if !at_split {
                let v = self.pick();
                stack.push(Frame {
                    v: v as u32,
                    cand: self.domain[v] & self.allowed(),
                    mark: self.trail.len(),
                    used_before: self.used,
                });
            }
            loop {
                let Some(f) = stack.last_mut() else {
                    finish(local);
                    return Step::Exhausted;
                };
                let v = f.v as usize;
                if self.color[v] != UNCOLORED {
                    let (mark, used) = (f.mark, f.used_before);
                    self.undo(v, mark, used);
                }
                let f = stack.last_mut().expect("frame still present");
                if f.cand == 0 {
                    stack.pop();
                    continue;
                }
                let c = f.cand.trailing_zeros() as u8;
                f.cand &= f.cand - 1;
                local += 1;
                if local == CHECK_EVERY {
                    local = 0;
                    if ctl.flush(CHECK_EVERY) {
                        return Step::Aborted;
                    }
                }
                if self.assign(v, c) {
                    break;
                }
            }
        }
    }
}

/// Splits the tree into prefixes and hands them to `threads` workers.
fn run_parallel(base: &State, ctl: &Control, threads: usize) -> (Step, Option<Coloring>) {
    let mut prefixes = Vec::new();
    let mut depth = 1;
    loop {
        prefixes.clear();
        let mut probe = base.clone();
        match probe.run(ctl, Some((depth, &mut prefixes))) {
            Step::Found => return (Step::Found, Some(probe.coloring())),
            Step::Aborted => return (Step::Aborted, None),
            Step::Exhausted => {}
        }
        if prefixes.is_empty() {
            return (Step::Exhausted, None);
        }
        if prefixes.len() >= 16 * threads || depth >= base.g.n() {
            break;
        }
        depth += 1;
    }

    let next = AtomicUsize::new(0);
    let found: Mutex<Option<Coloring>> = Mutex::new(None);
    let aborted = AtomicBool::new(false);
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= prefixes.len() || ctl.stop.load(Ordering::Relaxed) {
                    break;
                }
                let mut s = base.clone();
                for &(v, c) in &prefixes[i] {
                    let ok = s.assign(v as usize, c);
                    debug_assert!(ok, "recorded prefix replays cleanly");
                }
                match s.run(ctl, None) {
                    Step::Found => {
                        let mut slot = found.lock().expect("no poisoned workers");
                        if slot.is_none() {
                            *slot = Some(s.coloring());
                        }
                        ctl.stop.store(true, Ordering::Relaxed);
                    }
                    Step::Aborted => aborted.store(true, Ordering::Relaxed),
                    Step::Exhausted => {}
                }
            });
        }
    });
    let found = found.into_inner().expect("no poisoned workers");
    match (found, aborted.load(Ordering::Relaxed)) {
        (Some(c), _) => (Step::Found, Some(c)),
        (None, true) => (Step::Aborted, None),
        (None, false) => (Step::Exhausted, None),
    }
}
