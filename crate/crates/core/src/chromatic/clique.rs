use crate::geometry::UGraph;

/// Node budget for the exact clique search; past it the best clique found
/// so far is returned.
pub const CLIQUE_NODE_BUDGET: u64 = 1_000_000;

/// A large clique, sorted by vertex index. Exact whenever the branch and
/// bound finishes within [`CLIQUE_NODE_BUDGET`] (always for small graphs).
pub fn clique_lower(g: &UGraph) -> Vec<usize> {
    max_clique(g, CLIQUE_NODE_BUDGET).0
}

/// Returns the clique and whether it is proven maximum.
pub fn max_clique(g: &UGraph, budget: u64) -> (Vec<usize>, bool) {
    let mut s = CliqueSearch {
        g,
        best: greedy_clique(g),
        nodes: 0,
        budget,
    };
    let all = full_set(g.n(), g.words());
    let mut current = Vec::new();
    let complete = s.expand(&mut current, all);
    let mut best = s.best;
    best.sort_unstable();
    (best, complete)
}

fn full_set(n: usize, words: usize) -> Vec<u64> {
    let mut set = vec![u64::MAX; words];
    if !n.is_multiple_of(64) {
        set[words - 1] = (1u64 << (n % 64)) - 1;
    }
    set
}

fn members(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(w, &bits)| {
        let mut b = bits;
        std::iter::from_fn(move || {
            (b != 0).then(|| {
                let i = b.trailing_zeros() as usize;
                b &= b - 1;
                w * 64 + i
            })
        })
    })
}

fn first_member(set: &[u64]) -> Option<usize> {
    set.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}

/// Repeatedly adds the candidate with most candidate neighbors.
fn greedy_clique(g: &UGraph) -> Vec<usize> {
    let mut best = Vec::new();
    for start in 0..g.n() {
        let mut clique = vec![start];
        let mut cand: Vec<u64> = g.row(start).to_vec();
        loop {
            let pick = members(&cand).max_by_key(|&v| {
                let overlap: u32 = g
                    .row(v)
                    .iter()
                    .zip(&cand)
                    .map(|(a, b)| (a & b).count_ones())
                    .sum();
                (overlap, std::cmp::Reverse(v))
            });
            let Some(v) = pick else { break };
            clique.push(v);
            for (c, r) in cand.iter_mut().zip(g.row(v)) {
                *c &= r;
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

struct CliqueSearch<'a> {
    g: &'a UGraph,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl CliqueSearch<'_> {
    /// Branch and bound with a greedy-coloring bound on the candidates.
    /// Returns false when the budget ran out.
    fn expand(&mut self, current: &mut Vec<usize>, mut cand: Vec<u64>) -> bool {
        let order = self.color_order(&cand);
        for &(v, bound) in order.iter().rev() {
            if current.len() + bound <= self.best.len() {
                return true;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return false;
            }
            current.push(v);
            let next: Vec<u64> = cand.iter().zip(self.g.row(v)).map(|(a, b)| a & b).collect();
            if next.iter().all(|&w| w == 0) {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else if !self.expand(current, next) {
                return false;
            }
            current.pop();
            cand[v / 64] &= !(1 << (v % 64));
        }
        true
    }

    /// Candidates in greedy color-class order with the running class count.
    fn color_order(&self, cand: &[u64]) -> Vec<(usize, usize)> {
        let mut left = cand.to_vec();
        let mut out = Vec::new();
        let mut class = 0;
        while left.iter().any(|&w| w != 0) {
            class += 1;
            let mut avail = left.clone();
            while let Some(v) = first_member(&avail) {
                out.push((v, class));
                left[v / 64] &= !(1 << (v % 64));
                avail[v / 64] &= !(1 << (v % 64));
                for (a, r) in avail.iter_mut().zip(self.g.row(v)) {
                    *a &= !r;
                }
            }
        }
        out
    }
}

/// True iff `vs` are pairwise adjacent.
pub fn is_clique(g: &UGraph, vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &a)| vs[i + 1..].iter().all(|&b| a != b && g.adjacent(a, b)))
}
