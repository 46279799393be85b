use std::fmt::Write as _;

use crate::chromatic::Coloring;
use crate::error::Result;
use crate::exact::{quad_val_ramified, rat, HalfVal, QuadElem};
use crate::geometry::UGraph;

/// Classes of `(1/√2)·A` modulo `√2·A`, as `(a mod 2, 2b mod 2)`.
pub const CLASS_NAMES: [&str; 4] = ["0", "1", "U", "V"];

/// Vertices the printed coloring puts in its first class.
pub const PUBLISHED_FIRST_CLASS: [&str; 8] = ["00", "11", "U0", "V1", "U1", "V0", "UV", "VU"];

/// A first class that does give a proper coloring: the zero set of
/// `a1 + a2 + u2 (mod 2)`.
pub const CORRECTED_FIRST_CLASS: [&str; 8] = ["00", "11", "U0", "V1", "1U", "0V", "UV", "VU"];

fn class_rep(c: usize) -> QuadElem {
    let (a, b) = match c {
        0 => (rat(0, 1), rat(0, 1)),
        1 => (rat(1, 1), rat(0, 1)),
        2 => (rat(0, 1), rat(1, 2)),
        _ => (rat(1, 1), rat(1, 2)),
    };
    QuadElem::new(2, a, b).expect("m = 2 is valid")
}

/// The 16-vertex quotient graph on `{0, 1, U, V}²`, `U = 1/√2`,
/// `V = 1 + 1/√2`; vertex `4·c1 + c2` for coordinate classes `c1, c2`.
#[derive(Debug, Clone)]
pub struct Sqrt2Quotient {
    pub graph: UGraph,
}

impl Sqrt2Quotient {
    /// Edges by exact valuation: `x ~ y` iff `v(q(y - x) - 1) >= 1` at 2.
    pub fn build() -> Result<Self> {
        let reps: Vec<[QuadElem; 2]> = (0..16)
            .map(|i| [class_rep(i / 4), class_rep(i % 4)])
            .collect();
        let one = QuadElem::from_rat(2, rat(1, 1));
        let mut edges = Vec::new();
        for i in 0..16 {
            for j in i + 1..16 {
                let d0 = reps[j][0].checked_sub(&reps[i][0])?;
                let d1 = reps[j][1].checked_sub(&reps[i][1])?;
                let q = d0.checked_mul(&d0)?.checked_add(&d1.checked_mul(&d1)?)?;
                if quad_val_ramified(&q.checked_sub(&one)?, 2)? >= HalfVal::from_int(1) {
                    edges.push((i, j));
                }
            }
        }
        let labels = (0..16).map(vertex_label).collect();
        Ok(Sqrt2Quotient {
            graph: UGraph::from_edges(16, edges)?.with_labels(labels)?,
        })
    }

    pub fn index(label: &str) -> Option<usize> {
        (0..16).find(|&i| vertex_label(i) == label)
    }

    pub fn neighbor_labels(&self, label: &str) -> Option<Vec<String>> {
        let v = Self::index(label)?;
        let mut out: Vec<String> = self
            .graph
            .neighbors(v)
            .iter()
            .map(|&u| vertex_label(u))
            .collect();
        out.sort();
        Some(out)
    }

    /// Color 0 on `first_class`, 1 elsewhere.
    pub fn two_coloring(first_class: &[&str]) -> Coloring {
        let colors = (0..16)
            .map(|i| usize::from(!first_class.contains(&vertex_label(i).as_str())))
            .collect();
        Coloring::new(colors, 2).expect("two colors")
    }

    /// Whether adjacency commutes with translation by every class pair.
    pub fn translation_invariant(&self) -> bool {
        let shift = |v: usize, t: usize| ((v / 4) ^ (t / 4)) * 4 + ((v % 4) ^ (t % 4));
        (0..16).all(|t| {
            (0..16).all(|x| {
                (0..16).all(|y| {
                    self.graph.adjacent(x, y) == self.graph.adjacent(shift(x, t), shift(y, t))
                        || x == y
                })
            })
        })
    }

    pub fn canonical(&self) -> String {
        let mut out = String::from("fixture sqrt2_quotient\n");
        for &(a, b) in self.graph.edges() {
            writeln!(out, "edge {} {}", vertex_label(a), vertex_label(b)).expect("string write");
        }
        writeln!(
            out,
            "published_first_class {}",
            PUBLISHED_FIRST_CLASS.join(" ")
        )
        .expect("string write");
        out
    }
}

fn vertex_label(i: usize) -> String {
    format!("{}{}", CLASS_NAMES[i / 4], CLASS_NAMES[i % 4])
}
