use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Finite simple graph with a fixed vertex order.
///
/// Adjacency is kept twice: as bitset rows for the solver and as a sorted
/// edge list `(i, j)`, `i < j`, for export.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UGraph {
    n: usize,
    words: usize,
    labels: Vec<String>,
    rows: Vec<u64>,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl UGraph {
    /// Builds a graph from an edge list; duplicates and orientation are
    /// normalized away, self-loops are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Graph(format!(
                    "edge ({a}, {b}) out of range for {n} vertices"
                )));
            }
            if a == b {
                return Err(Error::Graph(format!("self-loop at {a}")));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        list.dedup();
        let words = n.div_ceil(64);
        let mut rows = vec![0u64; n * words];
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &list {
            rows[a * words + b / 64] |= 1 << (b % 64);
            rows[b * words + a / 64] |= 1 << (a % 64);
            adj[a].push(b);
            adj[b].push(a);
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        Ok(UGraph {
            n,
            words,
            labels: (0..n).map(|i| i.to_string()).collect(),
            rows,
            adj,
            edges: list,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Graph(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Self::from_edges(n, edges).expect("valid edges")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid edges")
    }

    pub fn empty(n: usize) -> Self {
        Self::from_edges(n, []).expect("no edges")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Number of `u64` words per bitset row.
    pub fn words(&self) -> usize {
        self.words
    }

    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.rows[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    /// The constant degree, if every vertex has the same one.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    /// Subgraph induced by `vs`, renumbered in the given order.
    pub fn induced(&self, vs: &[usize]) -> Self {
        let mut edges = Vec::new();
        for (i, &a) in vs.iter().enumerate() {
            for (j, &b) in vs.iter().enumerate().skip(i + 1) {
                if self.adjacent(a, b) {
                    edges.push((i, j));
                }
            }
        }
        let labels = vs.iter().map(|&v| self.labels[v].clone()).collect();
        Self::from_edges(vs.len(), edges)
            .expect("valid edges")
            .with_labels(labels)
            .expect("one label per vertex")
    }

    /// DIMACS text: `p edge N M` then `e i j` (1-indexed, `i < j`) in
    /// lexicographic order.
    pub fn to_dimacs(&self) -> String {
        let mut out = String::with_capacity(16 + 12 * self.edges.len());
        writeln!(out, "p edge {} {}", self.n, self.m()).expect("string write");
        for &(a, b) in &self.edges {
            writeln!(out, "e {} {}", a + 1, b + 1).expect("string write");
        }
        out
    }

    pub fn dimacs_sha256(&self) -> String {
        hex::encode(Sha256::digest(self.to_dimacs().as_bytes()))
    }

    /// Parses DIMACS edge format; `c` lines are comments.
    pub fn from_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let bad = |what: &str| Error::Graph(format!("line {}: {what}", lineno + 1));
            let mut it = line.split_whitespace();
            match it.next() {
                None | Some("c") => {}
                Some("p") => {
                    if header.is_some() {
                        return Err(bad("duplicate header"));
                    }
                    if !matches!(it.next(), Some("edge" | "col")) {
                        return Err(bad("expected 'p edge N M'"));
                    }
                    let n = it
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| bad("bad N"))?;
                    let m = it
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| bad("bad M"))?;
                    header = Some((n, m));
                }
                Some("e") => {
                    let (n, _) = header.ok_or_else(|| bad("edge before header"))?;
                    let mut end = || -> Result<usize> {
                        let v: usize = it
                            .next()
                            .and_then(|s| s.parse().ok())
                            .ok_or_else(|| bad("bad endpoint"))?;
                        if v == 0 || v > n {
                            return Err(bad("endpoint out of range"));
                        }
                        Ok(v - 1)
                    };
                    let a = end()?;
                    let b = end()?;
                    edges.push((a, b));
                }
                Some(other) => return Err(bad(&format!("unknown line type '{other}'"))),
            }
        }
        let (n, m) = header.ok_or_else(|| Error::Graph("missing header".into()))?;
        let g = Self::from_edges(n, edges)?;
        if g.m() != m {
            return Err(Error::Graph(format!(
                "header declares {m} edges, found {}",
                g.m()
            )));
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn views_agree() {
        let g = UGraph::from_edges(70, [(0, 69), (69, 0), (3, 65), (1, 2)]).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g.edges(), &[(0, 69), (1, 2), (3, 65)]);
        assert!(g.adjacent(69, 0) && g.adjacent(65, 3) && !g.adjacent(0, 1));
        assert_eq!(g.row(0).len(), 2);
        let degree_sum: usize = (0..70).map(|v| g.degree(v)).sum();
        assert_eq!(degree_sum, 2 * g.m());
        assert!(UGraph::from_edges(3, [(1, 1)]).is_err());
        assert!(UGraph::from_edges(3, [(1, 3)]).is_err());
    }

    #[test]
    fn dimacs_round_trip() {
        let g = UGraph::cycle(5);
        let text = g.to_dimacs();
        assert_eq!(text, "p edge 5 5\ne 1 2\ne 1 5\ne 2 3\ne 3 4\ne 4 5\n");
        let h = UGraph::from_dimacs(&format!("c hello\n{text}")).unwrap();
        assert_eq!(h.edges(), g.edges());
        assert_eq!(h.dimacs_sha256(), g.dimacs_sha256());
        assert!(UGraph::from_dimacs("p edge 2 2\ne 1 2\n").is_err());
        assert!(UGraph::from_dimacs("e 1 2\n").is_err());
        assert!(UGraph::from_dimacs("p edge 2 1\ne 1 3\n").is_err());
    }

    #[test]
    fn induced_subgraph() {
        let k = UGraph::complete(5);
        let sub = k.induced(&[4, 2, 0]);
        assert_eq!(sub.m(), 3);
        assert_eq!(sub.labels(), &["4", "2", "0"]);
    }
}
