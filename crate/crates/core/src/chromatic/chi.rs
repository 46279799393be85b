use serde::{Deserialize, Serialize};

use super::{
    clique_lower, dsatur_upper, k_colorable_with, odd_cycle, shortest_odd_cycle, Coloring,
    SearchOptions, SearchOutcome,
};
use crate::geometry::UGraph;

/// Why fewer than `chi` colors cannot work.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LowerWitness {
    Clique(Vec<usize>),
    OddCycle(Vec<usize>),
    /// Complete search found no `k`-coloring.
    ExhaustiveUnsat {
        k: usize,
        nodes: u64,
        precolored: Vec<usize>,
        options: String,
    },
}

impl LowerWitness {
    /// The bound this witness proves: no `bound() - 1` coloring exists.
    pub fn bound(&self) -> usize {
        match self {
            LowerWitness::Clique(c) => c.len(),
            LowerWitness::OddCycle(_) => 3,
            LowerWitness::ExhaustiveUnsat { k, .. } => k + 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiCertificate {
    pub n: usize,
    pub m: usize,
    pub dimacs_sha256: String,
    pub chi: usize,
    pub upper: Coloring,
    pub lower: LowerWitness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChiOutcome {
    Exact(ChiCertificate),
    /// The search budget ran out: `lo <= chi <= hi`.
    Bounds {
        lo: usize,
        hi: usize,
        upper: Coloring,
        lower: LowerWitness,
    },
}

/// Exact chromatic number with a certificate, without any budget.
pub fn chi_exact(g: &UGraph) -> ChiCertificate {
    match chi_exact_with(g, &SearchOptions::default()) {
        ChiOutcome::Exact(c) => c,
        ChiOutcome::Bounds { .. } => unreachable!("no budget was set"),
    }
}

/// Tries `k = hi - 1, hi - 2, ..` down to the clique/odd-cycle bound.
pub fn chi_exact_with(g: &UGraph, opts: &SearchOptions) -> ChiOutcome {
    let mut upper = dsatur_upper(g);
    let clique = clique_lower(g);
    let cycle = if clique.len() < 3 {
        odd_cycle(g).map(|_| shortest_odd_cycle(g).expect("odd cycle exists"))
    } else {
        None
    };
    let mut lower = match cycle {
        Some(c) => LowerWitness::OddCycle(c),
        None => LowerWitness::Clique(clique),
    };
    let lo = lower.bound();
    while upper.k > lo {
        let k = upper.k - 1;
        let r = k_colorable_with(g, k, opts);
        match r.outcome {
            SearchOutcome::Colorable(c) => upper = c,
            SearchOutcome::Unsat => {
                lower = LowerWitness::ExhaustiveUnsat {
                    k,
                    nodes: r.nodes,
                    precolored: r.precolored,
                    options: opts.describe(),
                };
                break;
            }
            SearchOutcome::Unresolved => {
                return ChiOutcome::Bounds {
                    lo,
                    hi: upper.k,
                    upper,
                    lower,
                }
            }
        }
    }
    ChiOutcome::Exact(ChiCertificate {
        n: g.n(),
        m: g.m(),
        dimacs_sha256: g.dimacs_sha256(),
        chi: upper.k,
        upper,
        lower,
    })
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    m: usize,
    dimacs_sha256: String,
}

#[derive(Serialize, Deserialize)]
struct UpperJson {
    k: usize,
    colors: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct LowerJson {
    kind: String,
    witness: Vec<usize>,
    k: usize,
    nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    options: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct CertJson {
    version: u32,
    graph: GraphJson,
    chi: usize,
    upper: UpperJson,
    lower: LowerJson,
}

impl ChiCertificate {
    /// Certificate JSON. In `lower`, `k` is the number of colors shown
    /// impossible; `witness` lists the clique, the odd cycle, or the
    /// precolored clique of the exhaustive search.
    pub fn to_json(&self) -> String {
        let lower = match &self.lower {
            LowerWitness::Clique(c) => LowerJson {
                kind: "clique".into(),
                witness: c.clone(),
                k: c.len().saturating_sub(1),
                nodes: 0,
                seed: None,
                options: None,
            },
            LowerWitness::OddCycle(c) => LowerJson {
                kind: "odd_cycle".into(),
                witness: c.clone(),
                k: 2,
                nodes: 0,
                seed: None,
                options: None,
            },
            LowerWitness::ExhaustiveUnsat {
                k,
                nodes,
                precolored,
                options,
            } => LowerJson {
                kind: "exhaustive_unsat".into(),
                witness: precolored.clone(),
                k: *k,
                nodes: *nodes,
                seed: Some(0),
                options: Some(options.clone()),
            },
        };
        let json = CertJson {
            version: 1,
            graph: GraphJson {
                n: self.n,
                m: self.m,
                dimacs_sha256: self.dimacs_sha256.clone(),
            },
            chi: self.chi,
            upper: UpperJson {
                k: self.upper.k,
                colors: self.upper.colors.clone(),
            },
            lower,
        };
        serde_json::to_string_pretty(&json).expect("serializable") + "\n"
    }
}
