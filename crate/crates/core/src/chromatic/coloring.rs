use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::UGraph;

/// Vertex colors in `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub k: usize,
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, k: usize) -> Result<Self> {
        if let Some(&c) = colors.iter().find(|&&c| c >= k) {
            return Err(Error::Graph(format!("color {c} out of range for k = {k}")));
        }
        Ok(Coloring { k, colors })
    }

    /// `k` taken as one more than the largest color used.
    pub fn from_colors(colors: Vec<usize>) -> Self {
        let k = colors.iter().max().map_or(0, |&c| c + 1);
        Coloring { k, colors }
    }

    pub fn classes_used(&self) -> usize {
        let mut seen = vec![false; self.k];
        for &c in &self.colors {
            seen[c] = true;
        }
        seen.into_iter().filter(|&s| s).count()
    }
}

/// True iff no edge is monochromatic.
pub fn verify_coloring(g: &UGraph, c: &Coloring) -> Result<bool> {
    if c.colors.len() != g.n() {
        return Err(Error::PartialColoring {
            n: g.n(),
            got: c.colors.len(),
        });
    }
    if c.colors.iter().any(|&x| x >= c.k) {
        return Ok(false);
    }
    Ok(g.edges().iter().all(|&(a, b)| c.colors[a] != c.colors[b]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{build_fp_graph, fp_vector, DiagForm};

    #[test]
    fn f3_diagonal_coloring() {
        let g = build_fp_graph(3, &DiagForm::euclidean(2)).unwrap();
        let colors = (0..9)
            .map(|i| {
                let v = fp_vector(i, 3, 2);
                ((v[0] + v[1]) % 3) as usize
            })
            .collect();
        assert!(verify_coloring(&g, &Coloring::new(colors, 3).unwrap()).unwrap());
        assert!(!verify_coloring(&g, &Coloring::new(vec![0; 9], 1).unwrap()).unwrap());
        assert!(verify_coloring(&g, &Coloring::new(vec![0; 8], 1).unwrap()).is_err());
    }

    #[test]
    fn construction() {
        assert!(Coloring::new(vec![0, 3], 3).is_err());
        let c = Coloring::from_colors(vec![0, 2, 2]);
        assert_eq!((c.k, c.classes_used()), (3, 2));
    }
}
