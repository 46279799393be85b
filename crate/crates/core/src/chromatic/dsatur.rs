use std::cmp::Reverse;
use std::collections::{BTreeSet, HashSet};

use super::Coloring;
use crate::geometry::UGraph;

/// Greedy DSATUR coloring.
///
/// Next vertex: largest saturation (distinct neighbor colors), then largest
/// degree, then smallest index. It receives the least color not used by a
/// neighbor.
pub fn dsatur_upper(g: &UGraph) -> Coloring {
    let n = g.n();
    let mut color: Vec<Option<usize>> = vec![None; n];
    let mut seen: Vec<HashSet<usize>> = vec![HashSet::new(); n];
    let key = |v: usize, sat: usize| (Reverse(sat), Reverse(g.degree(v)), v);
    let mut queue: BTreeSet<_> = (0..n).map(|v| key(v, 0)).collect();
    while let Some(k @ (_, _, v)) = queue.first().copied() {
        queue.remove(&k);
        let c = (0..)
            .find(|c| !seen[v].contains(c))
            .expect("unbounded range");
        color[v] = Some(c);
        for &u in g.neighbors(v) {
            if color[u].is_none() && !seen[u].contains(&c) {
                queue.remove(&key(u, seen[u].len()));
                seen[u].insert(c);
                queue.insert(key(u, seen[u].len()));
            }
        }
    }
    Coloring::from_colors(color.into_iter().map(|c| c.expect("all colored")).collect())
}
