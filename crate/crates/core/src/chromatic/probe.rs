use std::collections::VecDeque;

use serde::Serialize;

use crate::geometry::UGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub n: usize,
    pub m: usize,
    pub is_bipartite: bool,
    pub triangle_count: u64,
    pub shortest_odd_cycle: Option<usize>,
}

pub fn structure_probe(g: &UGraph) -> StructureReport {
    StructureReport {
        n: g.n(),
        m: g.m(),
        is_bipartite: odd_cycle(g).is_none(),
        triangle_count: triangle_count(g),
        shortest_odd_cycle: shortest_odd_cycle(g).map(|c| c.len()),
    }
}

pub fn triangle_count(g: &UGraph) -> u64 {
    let common: u64 = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            g.row(a)
                .iter()
                .zip(g.row(b))
                .map(|(x, y)| (x & y).count_ones() as u64)
                .sum::<u64>()
        })
        .sum();
    common / 3
}

/// Some odd cycle found by BFS 2-coloring, or `None` if the graph is
/// bipartite.
pub fn odd_cycle(g: &UGraph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if depth[u] == usize::MAX {
                    depth[u] = depth[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else if depth[u] % 2 == depth[v] % 2 {
                    return Some(join_paths(v, u, &parent, &depth));
                }
            }
        }
    }
    None
}

/// Cycle `a .. lca .. b` through the tree edges plus the edge `a b`.
fn join_paths(mut a: usize, mut b: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let mut left = Vec::new();
    let mut right = Vec::new();
    while depth[a] > depth[b] {
        left.push(a);
        a = parent[a];
    }
    while depth[b] > depth[a] {
        right.push(b);
        b = parent[b];
    }
    while a != b {
        left.push(a);
        right.push(b);
        a = parent[a];
        b = parent[b];
    }
    left.push(a);
    left.extend(right.into_iter().rev());
    left
}

/// A shortest odd cycle, or `None` if the graph is bipartite.
///
/// BFS from every root; an edge between two vertices on the same level `d`
/// closes an odd walk of length `2d + 1` through the root, and the minimum
/// over all roots is attained by a genuine cycle.
pub fn shortest_odd_cycle(g: &UGraph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<(usize, usize, usize, usize)> = None;
    let mut depth = vec![usize::MAX; n];
    for root in 0..n {
        depth.fill(usize::MAX);
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        'bfs: while let Some(v) = queue.pop_front() {
            if let Some((len, ..)) = best {
                if 2 * depth[v] + 1 >= len {
                    break 'bfs;
                }
            }
            for &u in g.neighbors(v) {
                if depth[u] == usize::MAX {
                    depth[u] = depth[v] + 1;
                    queue.push_back(u);
                } else if depth[u] == depth[v] && v < u {
                    let len = 2 * depth[v] + 1;
                    if best.is_none_or(|(l, ..)| len < l) {
                        best = Some((len, root, v, u));
                    }
                    break 'bfs;
                }
            }
        }
    }
    let (_, root, a, b) = best?;
    // rebuild the two BFS paths from the winning root
    let mut parent = vec![usize::MAX; n];
    depth.fill(usize::MAX);
    depth[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbors(v) {
            if depth[u] == usize::MAX {
                depth[u] = depth[v] + 1;
                parent[u] = v;
                queue.push_back(u);
            }
        }
    }
    Some(join_paths(a, b, &parent, &depth))
}

/// True iff `cycle` is an odd cycle of `g` on distinct vertices.
pub fn is_odd_cycle(g: &UGraph, cycle: &[usize]) -> bool {
    let len = cycle.len();
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    len >= 3
        && len % 2 == 1
        && sorted.len() == len
        && (0..len).all(|i| g.adjacent(cycle[i], cycle[(i + 1) % len]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{build_fp_graph, DiagForm};

    #[test]
    fn cycles_and_bipartite_graphs() {
        let c9 = UGraph::cycle(9);
        let r = structure_probe(&c9);
        assert!(!r.is_bipartite);
        assert_eq!((r.triangle_count, r.shortest_odd_cycle), (0, Some(9)));
        assert!(is_odd_cycle(&c9, &odd_cycle(&c9).unwrap()));

        let c8 = UGraph::cycle(8);
        let r = structure_probe(&c8);
        assert!(r.is_bipartite && r.shortest_odd_cycle.is_none());

        let f2 = build_fp_graph(2, &DiagForm::euclidean(2)).unwrap();
        assert!(structure_probe(&f2).is_bipartite);
    }

    #[test]
    fn triangles() {
        assert_eq!(triangle_count(&UGraph::complete(5)), 10);
        let f3 = build_fp_graph(3, &DiagForm::euclidean(2)).unwrap();
        let r = structure_probe(&f3);
        // the lines x = c and y = c are triangles
        assert_eq!((r.triangle_count, r.shortest_odd_cycle), (6, Some(3)));
    }

    #[test]
    fn shortest_cycle_is_a_real_cycle() {
        // C7 with a chord splitting it into C5 and C4, plus a pendant path
        let mut edges: Vec<_> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        edges.extend([(0, 4), (6, 7), (7, 8)]);
        let g = UGraph::from_edges(9, edges).unwrap();
        let c = shortest_odd_cycle(&g).unwrap();
        assert_eq!(c.len(), 5);
        assert!(is_odd_cycle(&g, &c));
    }
}
