//! Unit-distance graphs on `F_p^d`.

use super::{DiagForm, UGraph};
use crate::error::{Error, Result};
use crate::numtheory::check_prime;

/// Default cap on `p^d` for finite-field graphs.
pub const DEFAULT_VERTEX_BUDGET: u128 = 1_000_000;

/// Vectors of `F_p^dim` in lexicographic order (`0..p^dim`).
pub fn fp_vector(mut index: usize, p: u64, dim: usize) -> Vec<u64> {
    let mut v = vec![0; dim];
    for slot in v.iter_mut().rev() {
        *slot = index as u64 % p;
        index /= p as usize;
    }
    v
}

pub fn fp_index(v: &[u64], p: u64) -> usize {
    v.iter()
        .fold(0usize, |acc, &x| acc * p as usize + (x % p) as usize)
}

pub(crate) fn vertex_count(p: u64, d: usize, budget: u128) -> Result<usize> {
    let mut size: u128 = 1;
    for _ in 0..d {
        size = size.saturating_mul(p as u128);
        if size > budget {
            return Err(Error::Budget { size, budget });
        }
    }
    Ok(size as usize)
}

/// All `Δ` in `F_p^d` with `q(Δ) = 1`, lexicographically.
pub fn unit_sphere_fp(p: u64, form: &DiagForm) -> Result<Vec<Vec<u64>>> {
    check_prime(p)?;
    let d = form.dim();
    let count = vertex_count(p, d, DEFAULT_VERTEX_BUDGET)?;
    Ok((0..count)
        .map(|i| fp_vector(i, p, d))
        .filter(|v| form.eval_fp(v, p) == 1 % p)
        .collect())
}

/// `Γ(F_p^d, q)` with vertices in lexicographic order, default budget.
pub fn build_fp_graph(p: u64, form: &DiagForm) -> Result<UGraph> {
    build_fp_graph_with_budget(p, form, DEFAULT_VERTEX_BUDGET)
}

pub fn build_fp_graph_with_budget(p: u64, form: &DiagForm, budget: u128) -> Result<UGraph> {
    check_prime(p)?;
    let d = form.dim();
    let n = vertex_count(p, d, budget)?;
    let sphere = unit_sphere_fp(p, form)?;
    let mut edges = Vec::with_capacity(n * sphere.len() / 2);
    let mut labels = Vec::with_capacity(n);
    for i in 0..n {
        let x = fp_vector(i, p, d);
        for delta in &sphere {
            let y: Vec<u64> = x.iter().zip(delta).map(|(a, b)| (a + b) % p).collect();
            let j = fp_index(&y, p);
            if i < j {
                edges.push((i, j));
            }
        }
        labels.push(fp_label(&x));
    }
    UGraph::from_edges(n, edges)?.with_labels(labels)
}

pub fn fp_label(x: &[u64]) -> String {
    let parts: Vec<String> = x.iter().map(u64::to_string).collect();
    format!("({})", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spheres() {
        let e2 = DiagForm::euclidean(2);
        assert_eq!(
            unit_sphere_fp(3, &e2).unwrap(),
            vec![vec![0, 1], vec![0, 2], vec![1, 0], vec![2, 0]]
        );
        assert_eq!(unit_sphere_fp(11, &e2).unwrap().len(), 12);
        assert_eq!(unit_sphere_fp(7, &e2).unwrap().len(), 8);
        assert_eq!(unit_sphere_fp(5, &e2).unwrap().len(), 4);
        assert!(unit_sphere_fp(9, &e2).is_err());
    }

    #[test]
    fn small_graphs() {
        let e2 = DiagForm::euclidean(2);
        let g3 = build_fp_graph(3, &e2).unwrap();
        assert_eq!((g3.n(), g3.m(), g3.regular_degree()), (9, 18, Some(4)));
        assert_eq!(g3.labels()[5], "(1,2)");
        let g11 = build_fp_graph(11, &e2).unwrap();
        assert_eq!(
            (g11.n(), g11.m(), g11.regular_degree()),
            (121, 726, Some(12))
        );
        let g2 = build_fp_graph(2, &e2).unwrap();
        assert_eq!(g2.edges(), &[(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn budget() {
        let e3 = DiagForm::euclidean(3);
        assert!(matches!(
            build_fp_graph_with_budget(11, &e3, 1000),
            Err(Error::Budget {
                size: 1331,
                budget: 1000
            })
        ));
        assert!(build_fp_graph(1009, &DiagForm::euclidean(2)).is_err());
    }

    #[test]
    fn index_round_trip() {
        for i in 0..125 {
            assert_eq!(fp_index(&fp_vector(i, 5, 3), 5), i);
        }
    }
}
