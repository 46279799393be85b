use crate::error::Result;
use crate::geometry::{fp_vector, DiagForm};
use crate::numtheory::check_prime;

/// Largest search space either scan will walk.
pub const ANISOTROPY_BUDGET: u128 = 10_000_000;

/// Whether `q(z) = 0` has only the trivial solution in `F_p^d`.
pub fn anisotropic_fp(form: &DiagForm, p: u64) -> Result<bool> {
    check_prime(p)?;
    let d = form.dim();
    let n = crate::geometry::fp::vertex_count(p, d, ANISOTROPY_BUDGET)?;
    Ok((1..n).all(|i| form.eval_fp(&fp_vector(i, p, d), p) != 0))
}

/// Whether every solution of `q(z) ≡ 0 (mod p²)` has all `z_i ≡ 0 (mod p)`.
pub fn anisotropic_mod_p2(form: &DiagForm, p: u64) -> Result<bool> {
    check_prime(p)?;
    let d = form.dim();
    let p2 = p * p;
    let n = crate::geometry::fp::vertex_count(p2, d, ANISOTROPY_BUDGET)?;
    Ok((1..n).all(|i| {
        let z = fp_vector(i, p2, d);
        z.iter().all(|zi| zi % p == 0) || form.eval_fp(&z, p2) != 0
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::numtheory::primes_up_to;

    #[test]
    fn euclidean_planes() {
        let e2 = DiagForm::euclidean(2);
        assert!(anisotropic_fp(&e2, 3).unwrap());
        assert!(!anisotropic_fp(&e2, 5).unwrap());
        assert!(!anisotropic_fp(&e2, 2).unwrap());
        assert!(!anisotropic_fp(&DiagForm::euclidean(3), 3).unwrap());
        assert!(anisotropic_mod_p2(&e2, 2).unwrap());
        assert!(anisotropic_mod_p2(&e2, 3).unwrap());
        assert!(!anisotropic_mod_p2(&e2, 5).unwrap());
        assert!(!anisotropic_fp(&DiagForm::lorentzian(), 7).unwrap());
    }

    #[test]
    fn congruence_rule() {
        let e2 = DiagForm::euclidean(2);
        for p in primes_up_to(200).into_iter().filter(|&p| p > 2) {
            assert_eq!(anisotropic_fp(&e2, p).unwrap(), p % 4 == 3, "p = {p}");
        }
    }

    #[test]
    fn budget() {
        let e8 = DiagForm::euclidean(8);
        assert!(matches!(
            anisotropic_fp(&e8, 101),
            Err(Error::Budget { .. })
        ));
    }
}
