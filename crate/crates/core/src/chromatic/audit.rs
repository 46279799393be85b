//! Standalone certificate checker. Reads the JSON form and re-derives every
//! claim from the graph alone; it does not call into the solver.

use std::collections::HashSet;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::geometry::UGraph;

#[derive(Deserialize)]
struct Cert {
    version: u32,
    graph: GraphPart,
    chi: usize,
    upper: UpperPart,
    lower: LowerPart,
}

#[derive(Deserialize)]
struct GraphPart {
    n: usize,
    m: usize,
    dimacs_sha256: String,
}

#[derive(Deserialize)]
struct UpperPart {
    k: usize,
    colors: Vec<usize>,
}

#[derive(Deserialize)]
struct LowerPart {
    kind: String,
    witness: Vec<usize>,
    k: usize,
    #[allow(dead_code)]
    nodes: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnsatCheck {
    /// Trust the attestation; only its shape is checked.
    Skip,
    /// Re-run an independent backtracking search with this node budget.
    Rerun { node_budget: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct AuditReport {
    pub chi: usize,
    pub lower_kind: String,
    /// `Some(true)` when the rerun confirmed the exhaustive claim, `None`
    /// when it was skipped or ran out of budget.
    pub unsat_confirmed: Option<bool>,
}

/// Checks a certificate against `g`. Any inconsistency is an error;
/// `Ok` means every checked claim holds.
pub fn check_certificate(g: &UGraph, json: &str, unsat: UnsatCheck) -> Result<AuditReport> {
    let fail = |msg: String| Error::Certificate(msg);
    let cert: Cert = serde_json::from_str(json).map_err(|e| fail(format!("malformed: {e}")))?;
    if cert.version != 1 {
        return Err(fail(format!("unsupported version {}", cert.version)));
    }
    let edges: HashSet<(usize, usize)> = g.edges().iter().copied().collect();
    let adjacent = |a: usize, b: usize| edges.contains(&(a.min(b), a.max(b)));

    if cert.graph.n != g.n() || cert.graph.m != edges.len() {
        return Err(fail("graph size differs".into()));
    }
    if cert.graph.dimacs_sha256 != g.dimacs_sha256() {
        return Err(fail("graph digest differs".into()));
    }

    let up = &cert.upper;
    if up.k != cert.chi || up.colors.len() != g.n() {
        return Err(fail(
            "upper bound does not match chi or vertex count".into(),
        ));
    }
    if up.colors.iter().any(|&c| c >= up.k) {
        return Err(fail("color out of range".into()));
    }
    if let Some(&(a, b)) = g
        .edges()
        .iter()
        .find(|&&(a, b)| up.colors[a] == up.colors[b])
    {
        return Err(fail(format!("edge ({a}, {b}) is monochromatic")));
    }

    let lo = &cert.lower;
    let w = &lo.witness;
    if w.iter().any(|&v| v >= g.n()) {
        return Err(fail("witness vertex out of range".into()));
    }
    let distinct = w.iter().collect::<HashSet<_>>().len() == w.len();
    let pairwise = || (0..w.len()).all(|i| (i + 1..w.len()).all(|j| adjacent(w[i], w[j])));
    let mut unsat_confirmed = None;
    match lo.kind.as_str() {
        "clique" => {
            if !distinct || !pairwise() || w.len() != cert.chi || lo.k + 1 != cert.chi {
                return Err(fail("clique witness does not prove chi".into()));
            }
        }
        "odd_cycle" => {
            let len = w.len();
            let closed = (0..len).all(|i| adjacent(w[i], w[(i + 1) % len]));
            if !distinct
                || len < 3
                || len.is_multiple_of(2)
                || !closed
                || cert.chi != 3
                || lo.k != 2
            {
                return Err(fail("odd cycle witness does not prove chi".into()));
            }
        }
        "exhaustive_unsat" => {
            if lo.k + 1 != cert.chi || !distinct || !pairwise() || w.len() > lo.k {
                return Err(fail("exhaustive witness inconsistent with chi".into()));
            }
            if let UnsatCheck::Rerun { node_budget } = unsat {
                match no_coloring(g, lo.k, w, node_budget) {
                    Some(true) => unsat_confirmed = Some(true),
                    Some(false) => {
                        return Err(fail(format!("a {}-coloring exists", lo.k)));
                    }
                    None => {}
                }
            }
        }
        other => return Err(fail(format!("unknown lower bound kind '{other}'"))),
    }
    Ok(AuditReport {
        chi: cert.chi,
        lower_kind: lo.kind.clone(),
        unsat_confirmed,
    })
}

/// Plain backtracking over a fixed vertex order (clique first, then most
/// already-placed neighbors). `Some(true)`: no `k`-coloring; `None`: budget.
fn no_coloring(g: &UGraph, k: usize, clique: &[usize], budget: u64) -> Option<bool> {
    let n = g.n();
    let mut order: Vec<usize> = clique.to_vec();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    for &v in clique {
        placed[v] = true;
        for &u in g.neighbors(v) {
            links[u] += 1;
        }
    }
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            links[u] += 1;
        }
    }
    let pos: Vec<usize> = {
        let mut p = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            p[v] = i;
        }
        p
    };
    let earlier: Vec<Vec<usize>> = order
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&u| pos[u] < pos[v])
                .collect()
        })
        .collect();

    let mut color = vec![usize::MAX; n];
    let fixed = clique.len();
    for (i, &v) in clique.iter().enumerate() {
        color[v] = i;
    }
    // next color to try at each position; the fresh-color rule keeps one
    // representative per permutation of unused colors
    let mut next = vec![0usize; n];
    let mut high = vec![0usize; n + 1];
    high[fixed] = fixed;
    let mut i = fixed;
    let mut nodes = 0u64;
    loop {
        if i == n {
            return Some(false);
        }
        let v = order[i];
        let limit = (high[i] + 1).min(k);
        let mut chosen = None;
        while next[i] < limit {
            let c = next[i];
            next[i] += 1;
            nodes += 1;
            if nodes > budget {
                return None;
            }
            if earlier[i].iter().all(|&u| color[u] != c) {
                chosen = Some(c);
                break;
            }
        }
        match chosen {
            Some(c) => {
                color[v] = c;
                high[i + 1] = high[i].max(c + 1);
                i += 1;
            }
            None => {
                next[i] = 0;
                color[v] = usize::MAX;
                if i == fixed {
                    return Some(true);
                }
                i -= 1;
                color[order[i]] = usize::MAX;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::chi_exact;

    fn wheel() -> UGraph {
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, 5)));
        UGraph::from_edges(6, edges).unwrap()
    }

    #[test]
    fn accepts_solver_output() {
        for g in [
            UGraph::complete(4),
            UGraph::cycle(7),
            UGraph::cycle(6),
            wheel(),
        ] {
            let cert = chi_exact(&g);
            let r = check_certificate(
                &g,
                &cert.to_json(),
                UnsatCheck::Rerun {
                    node_budget: 1 << 20,
                },
            )
            .unwrap();
            assert_eq!(r.chi, cert.chi);
        }
        let w = wheel();
        let r = check_certificate(
            &w,
            &chi_exact(&w).to_json(),
            UnsatCheck::Rerun {
                node_budget: 1 << 20,
            },
        )
        .unwrap();
        assert_eq!(r.unsat_confirmed, Some(true));
    }

    #[test]
    fn rejects_tampering() {
        let g = UGraph::cycle(5);
        let good = chi_exact(&g).to_json();
        let bad_chi = good.replace("\"chi\": 3", "\"chi\": 2");
        assert!(check_certificate(&g, &bad_chi, UnsatCheck::Skip).is_err());
        let other = UGraph::cycle(7);
        assert!(check_certificate(&other, &good, UnsatCheck::Skip).is_err());
        assert!(check_certificate(&g, "{}", UnsatCheck::Skip).is_err());

        // a false exhaustive claim is caught by the rerun
        let c6 = UGraph::cycle(6);
        let colors: Vec<String> = (0..6).map(|i| (i % 3).to_string()).collect();
        let fake = format!(
            r#"{{"version":1,"graph":{{"n":6,"m":6,"dimacs_sha256":"{}"}},"chi":3,
            "upper":{{"k":3,"colors":[{}]}},
            "lower":{{"kind":"exhaustive_unsat","witness":[0,1],"k":2,"nodes":5}}}}"#,
            c6.dimacs_sha256(),
            colors.join(",")
        );
        assert!(check_certificate(&c6, &fake, UnsatCheck::Skip).is_ok());
        assert!(check_certificate(&c6, &fake, UnsatCheck::Rerun { node_budget: 1000 }).is_err());
    }
}
