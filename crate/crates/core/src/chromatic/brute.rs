use crate::error::{Error, Result};
use crate::geometry::UGraph;

/// Largest graph [`brute_force_chi`] accepts.
pub const BRUTE_FORCE_MAX_N: usize = 12;

/// Chromatic number by trying every assignment in `k^n` for `k = 1, 2, ..`.
/// Deliberately naive; it serves as an oracle for the real solver.
pub fn brute_force_chi(g: &UGraph) -> Result<usize> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::TooLarge(n));
    }
    if n == 0 {
        return Ok(0);
    }
    for k in 1..=n {
        let mut assign = vec![0usize; n];
        loop {
            if g.edges().iter().all(|&(a, b)| assign[a] != assign[b]) {
                return Ok(k);
            }
            // odometer increment
            let mut i = 0;
            while i < n && assign[i] == k - 1 {
                assign[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            assign[i] += 1;
        }
    }
    unreachable!("n colors always suffice")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_graphs() {
        assert_eq!(brute_force_chi(&UGraph::complete(4)).unwrap(), 4);
        assert_eq!(brute_force_chi(&UGraph::cycle(5)).unwrap(), 3);
        assert_eq!(brute_force_chi(&UGraph::cycle(6)).unwrap(), 2);
        assert_eq!(brute_force_chi(&UGraph::empty(4)).unwrap(), 1);
        assert!(matches!(
            brute_force_chi(&UGraph::empty(13)),
            Err(Error::TooLarge(13))
        ));
    }
}
