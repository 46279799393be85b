//! Exact scalars: rationals, quadratic and biquadratic field elements, and
//! p-adic valuations on them.

mod biquad;
mod halfval;
mod literal;
mod quad;
mod scalar;
mod valuation;

pub use biquad::BiQuadElem;
pub use halfval::HalfVal;
pub use literal::{parse_literal, Literal};
pub use quad::{is_square_rational_in_quad, QuadElem};
pub use scalar::{FieldDesc, Scalar};
pub use valuation::{
    biquad_val_ramified, quad_val_ramified, quad_val_split, rat_mod_pk, rat_val, SplitPlace,
    DEFAULT_PRECISION_CAP,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Arbitrary-precision rational; always kept in lowest terms with a positive
/// denominator.
pub type Rat = BigRational;

/// `n / d` as a [`Rat`]. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub(crate) fn is_squarefree(m: i64) -> bool {
    if m == 0 {
        return false;
    }
    let mut n = m.unsigned_abs();
    let mut f = 2u64;
    while f * f <= n {
        if n.is_multiple_of(f) {
            n /= f;
            if n.is_multiple_of(f) {
                return false;
            }
        }
        f += 1;
    }
    true
}

/// Splits `n = s^2 * f` with `f` squarefree (sign kept on `f`).
pub(crate) fn squarefree_split(n: i64) -> (i64, i64) {
    debug_assert!(n != 0);
    let sign = n.signum();
    let mut rest = n.unsigned_abs();
    let mut s = 1u64;
    let mut f = 2u64;
    while f * f <= rest {
        while rest.is_multiple_of(f * f) {
            rest /= f * f;
            s *= f;
        }
        f += 1;
    }
    (s as i64, sign * rest as i64)
}

/// Exact square root of a rational, if it has one.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(Rat::zero());
    }
    let int_sqrt = |n: &BigInt| {
        let s = n.sqrt();
        (&s * &s == *n).then_some(s)
    };
    Some(Rat::new(int_sqrt(r.numer())?, int_sqrt(r.denom())?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squarefree_helpers() {
        assert!(is_squarefree(-5));
        assert!(is_squarefree(33));
        assert!(!is_squarefree(12));
        assert!(!is_squarefree(0));
        assert_eq!(squarefree_split(12), (2, 3));
        assert_eq!(squarefree_split(-20), (2, -5));
        assert_eq!(squarefree_split(9), (3, 1));
    }

    #[test]
    fn rational_square_roots() {
        assert_eq!(rat_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rat_sqrt(&int(3)), None);
        assert_eq!(rat_sqrt(&int(-4)), None);
    }
}
