use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::quad::{forward_binop, write_surd_term};
use super::{is_squarefree, squarefree_split, Rat};
use crate::error::{Error, Result};

/// `a + b·e1 + c·e2 + d·e3` in `Q(√m1, √m2)` with `e1² = m1`, `e2² = m2` and
/// `e3 = e1·e2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiQuadElem {
    m1: i64,
    m2: i64,
    c: [Rat; 4],
}

impl BiQuadElem {
    pub(crate) fn check_field(m1: i64, m2: i64) -> Result<()> {
        // distinct squarefree m1, m2 > 1 make m1·m2 a non-square as well
        if m1 <= 1 || m2 <= 1 || m1 == m2 || !is_squarefree(m1) || !is_squarefree(m2) {
            return Err(Error::BadBiquadField(m1, m2));
        }
        Ok(())
    }

    pub fn new(m1: i64, m2: i64, coeffs: [Rat; 4]) -> Result<Self> {
        Self::check_field(m1, m2)?;
        Ok(BiQuadElem { m1, m2, c: coeffs })
    }

    pub fn from_rat(m1: i64, m2: i64, r: Rat) -> Self {
        BiQuadElem {
            m1,
            m2,
            c: [r, Rat::zero(), Rat::zero(), Rat::zero()],
        }
    }

    pub fn field_pair(&self) -> (i64, i64) {
        (self.m1, self.m2)
    }

    pub fn coeffs(&self) -> &[Rat; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// The rational value, when the three irrational components vanish.
    pub fn as_rational(&self) -> Option<&Rat> {
        self.c[1..].iter().all(Zero::is_zero).then_some(&self.c[0])
    }

    /// Galois conjugate: `flip_1` negates `√m1`, `flip_2` negates `√m2`
    /// (and `√(m1m2)` follows).
    pub fn conj(&self, flip_1: bool, flip_2: bool) -> Self {
        let [a, b, c, d] = &self.c;
        let s = |x: &Rat, neg: bool| if neg { -x } else { x.clone() };
        BiQuadElem {
            m1: self.m1,
            m2: self.m2,
            c: [a.clone(), s(b, flip_1), s(c, flip_2), s(d, flip_1 ^ flip_2)],
        }
    }

    fn nontrivial_conj_product(&self) -> Self {
        let p = self
            .conj(true, false)
            .mul_unchecked(&self.conj(false, true));
        p.mul_unchecked(&self.conj(true, true))
    }

    /// Product of all four conjugates; always rational.
    pub fn norm(&self) -> Rat {
        let n = self.mul_unchecked(&self.nontrivial_conj_product());
        n.as_rational()
            .cloned()
            .expect("product of all conjugates is rational")
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            // only x = 0 has zero norm in a field
            assert!(self.is_zero(), "zero divisor in a biquadratic field");
            return Err(Error::DivisionByZero);
        }
        let p = self.nontrivial_conj_product();
        let c = p.c.map(|x| x / &n);
        Ok(BiQuadElem {
            m1: self.m1,
            m2: self.m2,
            c,
        })
    }

    fn same_field(&self, rhs: &Self) -> Result<()> {
        if (self.m1, self.m2) != (rhs.m1, rhs.m2) {
            return Err(Error::FieldMismatch(
                format!("Q(sqrt({}),sqrt({}))", self.m1, self.m2),
                format!("Q(sqrt({}),sqrt({}))", rhs.m1, rhs.m2),
            ));
        }
        Ok(())
    }

    fn mul_unchecked(&self, rhs: &Self) -> Self {
        let [a, b, c, d] = &self.c;
        let [e, f, g, h] = &rhs.c;
        let m1 = Rat::from_integer(self.m1.into());
        let m2 = Rat::from_integer(self.m2.into());
        let m12 = &m1 * &m2;
        BiQuadElem {
            m1: self.m1,
            m2: self.m2,
            c: [
                a * e + &m1 * b * f + &m2 * c * g + &m12 * d * h,
                a * f + b * e + &m2 * (c * h + d * g),
                a * g + c * e + &m1 * (b * h + d * f),
                a * h + d * e + b * g + c * f,
            ],
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        let mut c = self.c.clone();
        for (x, y) in c.iter_mut().zip(&rhs.c) {
            *x += y;
        }
        Ok(BiQuadElem { c, ..*self })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        let mut c = self.c.clone();
        for (x, y) in c.iter_mut().zip(&rhs.c) {
            *x -= y;
        }
        Ok(BiQuadElem { c, ..*self })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(self.mul_unchecked(rhs))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(self.mul_unchecked(&rhs.inv()?))
    }

    pub fn one(m1: i64, m2: i64) -> Self {
        Self::from_rat(m1, m2, Rat::one())
    }
}

forward_binop!(Add, add, checked_add, BiQuadElem);
forward_binop!(Sub, sub, checked_sub, BiQuadElem);
forward_binop!(Mul, mul, checked_mul, BiQuadElem);

impl Neg for BiQuadElem {
    type Output = BiQuadElem;
    fn neg(self) -> BiQuadElem {
        BiQuadElem {
            m1: self.m1,
            m2: self.m2,
            c: self.c.map(|x| -x),
        }
    }
}

impl fmt::Display for BiQuadElem {
    /// `√(m1m2)` is written with the squarefree part of `m1m2`, so that the
    /// output parses back through the literal grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.c[0])?;
        write_surd_term(f, &self.c[1], self.m1)?;
        write_surd_term(f, &self.c[2], self.m2)?;
        let (s, f3) = squarefree_split(self.m1 * self.m2);
        write_surd_term(f, &(&self.c[3] * Rat::from_integer(s.into())), f3)
    }
}
