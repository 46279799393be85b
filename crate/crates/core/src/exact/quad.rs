use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{is_squarefree, rat_sqrt, Rat};
use crate::error::{Error, Result};

/// `a + b·√m` in the quadratic field `Q(√m)`, `m` squarefree and `m ∉ {0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadElem {
    m: i64,
    a: Rat,
    b: Rat,
}

impl QuadElem {
    pub(crate) fn check_radicand(m: i64) -> Result<()> {
        if m == 1 || !is_squarefree(m) {
            return Err(Error::BadRadicand(m));
        }
        Ok(())
    }

    pub fn new(m: i64, a: Rat, b: Rat) -> Result<Self> {
        Self::check_radicand(m)?;
        Ok(QuadElem { m, a, b })
    }

    pub fn from_rat(m: i64, a: Rat) -> Self {
        QuadElem {
            m,
            a,
            b: Rat::zero(),
        }
    }

    /// `√m` itself.
    pub fn sqrt_m(m: i64) -> Result<Self> {
        Self::new(m, Rat::zero(), Rat::one())
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// `a - b·√m`.
    pub fn conj(&self) -> Self {
        QuadElem {
            m: self.m,
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// `a² - m·b²`, equal to `x · conj(x)`.
    pub fn norm(&self) -> Rat {
        &self.a * &self.a - Rat::from_integer(self.m.into()) * &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QuadElem {
            m: self.m,
            a: &self.a / &n,
            b: -&self.b / &n,
        })
    }

    fn same_field(&self, rhs: &Self) -> Result<()> {
        if self.m != rhs.m {
            return Err(Error::FieldMismatch(
                format!("Q(sqrt({}))", self.m),
                format!("Q(sqrt({}))", rhs.m),
            ));
        }
        Ok(())
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(QuadElem {
            m: self.m,
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(QuadElem {
            m: self.m,
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        let m = Rat::from_integer(self.m.into());
        Ok(QuadElem {
            m: self.m,
            a: &self.a * &rhs.a + m * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        self.checked_mul(&rhs.inv()?)
    }
}

/// A square root of the nonzero rational `r` inside `Q(√m)`, if one exists.
///
/// `r` is a square in `Q(√m)` exactly when `r` or `r/m` is a rational square:
/// the witness is then `√r` or `√(r/m)·√m`.
pub fn is_square_rational_in_quad(r: &Rat, m: i64) -> Option<QuadElem> {
    debug_assert!(!r.is_zero());
    if let Some(s) = rat_sqrt(r) {
        return Some(QuadElem::from_rat(m, s));
    }
    let over_m = r / Rat::from_integer(m.into());
    let s = rat_sqrt(&over_m)?;
    Some(QuadElem {
        m,
        a: Rat::zero(),
        b: s,
    })
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident, $ty:ty) => {
        impl $tr<&$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
    };
}
pub(crate) use forward_binop;

forward_binop!(Add, add, checked_add, QuadElem);
forward_binop!(Sub, sub, checked_sub, QuadElem);
forward_binop!(Mul, mul, checked_mul, QuadElem);

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem {
            m: self.m,
            a: -self.a,
            b: -self.b,
        }
    }
}

/// Writes `coef*sqrt(radicand)` with an explicit sign, skipping zero terms.
pub(crate) fn write_surd_term(
    f: &mut fmt::Formatter<'_>,
    coef: &Rat,
    radicand: i64,
) -> fmt::Result {
    if coef.is_zero() {
        return Ok(());
    }
    let sign = if coef.is_negative() { '-' } else { '+' };
    write!(f, "{sign}{}*sqrt({radicand})", coef.abs())
}

impl fmt::Display for QuadElem {
    /// Output follows the literal grammar accepted by [`super::parse_literal`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.a)?;
        write_surd_term(f, &self.b, self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn q(m: i64, a: Rat, b: Rat) -> QuadElem {
        QuadElem::new(m, a, b).unwrap()
    }

    #[test]
    fn product_of_conjugate_pair() {
        let x = q(2, int(1), int(1));
        let y = q(2, int(-1), int(1));
        assert_eq!(&x * &y, QuadElem::from_rat(2, int(1)));
    }

    #[test]
    fn norm_example() {
        assert_eq!(q(7, int(3), int(1)).norm(), int(2));
    }

    #[test]
    fn square_of_sixth_root_of_unity_shape() {
        // (1+√3)²/4 = (4+2√3)/4 = 1 + √3/2
        let x = q(3, rat(1, 2), rat(1, 2));
        assert_eq!(&x * &x, q(3, int(1), rat(1, 2)));
        assert_ne!(&x * &x, q(3, rat(-1, 2), rat(1, 2)));
    }

    #[test]
    fn mismatched_fields_and_zero_division() {
        let x = q(2, int(1), int(1));
        let y = q(3, int(1), int(1));
        assert!(matches!(x.checked_add(&y), Err(Error::FieldMismatch(..))));
        assert!(matches!(
            x.checked_div(&QuadElem::from_rat(2, int(0))),
            Err(Error::DivisionByZero)
        ));
        assert!(QuadElem::new(4, int(1), int(1)).is_err());
        assert!(QuadElem::new(1, int(1), int(1)).is_err());
        assert!(QuadElem::new(-5, int(1), int(1)).is_ok());
    }

    #[test]
    fn division_round_trip() {
        let x = q(-5, rat(3, 2), rat(-7, 3));
        let y = q(-5, rat(1, 5), int(2));
        assert_eq!(x.checked_div(&y).unwrap().checked_mul(&y).unwrap(), x);
    }

    #[test]
    fn square_witnesses() {
        assert_eq!(is_square_rational_in_quad(&int(3), 7), None);
        let w = is_square_rational_in_quad(&int(3), 3).unwrap();
        assert_eq!(w, QuadElem::sqrt_m(3).unwrap());
        let w = is_square_rational_in_quad(&rat(9, 4), 7).unwrap();
        assert_eq!(w, QuadElem::from_rat(7, rat(3, 2)));
        let w = is_square_rational_in_quad(&rat(3, 4), 3).unwrap();
        assert_eq!(&w * &w, QuadElem::from_rat(3, rat(3, 4)));
        assert_eq!(is_square_rational_in_quad(&int(3), -5), None);
    }

    #[test]
    fn display_matches_grammar() {
        assert_eq!(q(3, rat(1, 2), rat(-1, 2)).to_string(), "1/2-1/2*sqrt(3)");
        assert_eq!(q(-5, int(0), int(1)).to_string(), "0+1*sqrt(-5)");
        assert_eq!(QuadElem::from_rat(7, int(4)).to_string(), "4");
    }
}
