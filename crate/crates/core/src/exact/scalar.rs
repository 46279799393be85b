use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::literal::Literal;
use super::{int, BiQuadElem, QuadElem, Rat};
use crate::error::{Error, Result};

/// Which field a scalar lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldDesc {
    Rational,
    Quad(i64),
    BiQuad(i64, i64),
}

impl fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDesc::Rational => write!(f, "q"),
            FieldDesc::Quad(m) => write!(f, "quad:{m}"),
            FieldDesc::BiQuad(m1, m2) => write!(f, "biquad:{m1},{m2}"),
        }
    }
}

impl FromStr for FieldDesc {
    type Err = Error;

    /// Accepts `q`, `quad:M` and `biquad:M1,M2`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownName(format!("field '{s}'"));
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldDesc::Rational);
        }
        if let Some(m) = s.strip_prefix("quad:") {
            let m: i64 = m.trim().parse().map_err(|_| bad())?;
            QuadElem::check_radicand(m)?;
            return Ok(FieldDesc::Quad(m));
        }
        if let Some(rest) = s.strip_prefix("biquad:") {
            let (a, b) = rest.split_once(',').ok_or_else(bad)?;
            let m1: i64 = a.trim().parse().map_err(|_| bad())?;
            let m2: i64 = b.trim().parse().map_err(|_| bad())?;
            BiQuadElem::check_field(m1, m2)?;
            return Ok(FieldDesc::BiQuad(m1, m2));
        }
        Err(bad())
    }
}

/// Common surface of the exact scalar types, so that points, forms and
/// graphs can be written once for every field.
///
/// The arithmetic operators panic when the operands belong to different
/// fields; the `checked_*` methods on the concrete types report it instead.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn field(&self) -> FieldDesc;

    /// The rational `r` embedded in the same field as `self`.
    fn lift_rat(&self, r: Rat) -> Self;

    fn is_zero_elem(&self) -> bool;

    fn try_inv(&self) -> Option<Self>;

    /// Coordinates over Q in the field's standard basis.
    fn components(&self) -> Vec<Rat>;

    fn from_literal(lit: &Literal, field: FieldDesc) -> Result<Self>;

    /// Inverse of [`components`](Scalar::components).
    fn from_components(field: FieldDesc, c: &[Rat]) -> Result<Self>;

    fn zero_like(&self) -> Self {
        self.lift_rat(Rat::zero())
    }

    fn one_like(&self) -> Self {
        self.lift_rat(Rat::one())
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    fn mul_int(&self, k: i64) -> Self {
        self.lift_rat(int(k)) * self.clone()
    }

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * rhs.try_inv().ok_or(Error::DivisionByZero)?)
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn parse_in(s: &str, field: FieldDesc) -> Result<Self> {
        Self::from_literal(&super::parse_literal(s)?, field)
    }
}

impl Scalar for Rat {
    fn field(&self) -> FieldDesc {
        FieldDesc::Rational
    }

    fn lift_rat(&self, r: Rat) -> Self {
        r
    }

    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }

    fn try_inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }

    fn components(&self) -> Vec<Rat> {
        vec![self.clone()]
    }

    fn from_literal(lit: &Literal, field: FieldDesc) -> Result<Self> {
        match field {
            FieldDesc::Rational => lit.to_rat(),
            other => Err(Error::FieldMismatch("q".into(), other.to_string())),
        }
    }

    fn from_components(field: FieldDesc, c: &[Rat]) -> Result<Self> {
        match (field, c) {
            (FieldDesc::Rational, [a]) => Ok(a.clone()),
            (FieldDesc::Rational, _) => Err(Error::Dimension {
                expected: 1,
                got: c.len(),
            }),
            (other, _) => Err(Error::FieldMismatch("q".into(), other.to_string())),
        }
    }
}

impl Scalar for QuadElem {
    fn field(&self) -> FieldDesc {
        FieldDesc::Quad(self.m())
    }

    fn lift_rat(&self, r: Rat) -> Self {
        QuadElem::from_rat(self.m(), r)
    }

    fn is_zero_elem(&self) -> bool {
        QuadElem::is_zero(self)
    }

    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }

    fn components(&self) -> Vec<Rat> {
        vec![self.a().clone(), self.b().clone()]
    }

    fn from_literal(lit: &Literal, field: FieldDesc) -> Result<Self> {
        match field {
            FieldDesc::Quad(m) => lit.to_quad(m),
            other => Err(Error::FieldMismatch("quad".into(), other.to_string())),
        }
    }

    fn from_components(field: FieldDesc, c: &[Rat]) -> Result<Self> {
        match (field, c) {
            (FieldDesc::Quad(m), [a, b]) => QuadElem::new(m, a.clone(), b.clone()),
            (FieldDesc::Quad(_), _) => Err(Error::Dimension {
                expected: 2,
                got: c.len(),
            }),
            (other, _) => Err(Error::FieldMismatch("quad".into(), other.to_string())),
        }
    }
}

impl Scalar for BiQuadElem {
    fn field(&self) -> FieldDesc {
        let (m1, m2) = self.field_pair();
        FieldDesc::BiQuad(m1, m2)
    }

    fn lift_rat(&self, r: Rat) -> Self {
        let (m1, m2) = self.field_pair();
        BiQuadElem::from_rat(m1, m2, r)
    }

    fn is_zero_elem(&self) -> bool {
        BiQuadElem::is_zero(self)
    }

    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }

    fn components(&self) -> Vec<Rat> {
        self.coeffs().to_vec()
    }

    fn from_literal(lit: &Literal, field: FieldDesc) -> Result<Self> {
        match field {
            FieldDesc::BiQuad(m1, m2) => lit.to_biquad(m1, m2),
            other => Err(Error::FieldMismatch("biquad".into(), other.to_string())),
        }
    }

    fn from_components(field: FieldDesc, c: &[Rat]) -> Result<Self> {
        match (field, c) {
            (FieldDesc::BiQuad(m1, m2), [a, b, c2, d]) => {
                BiQuadElem::new(m1, m2, [a.clone(), b.clone(), c2.clone(), d.clone()])
            }
            (FieldDesc::BiQuad(..), _) => Err(Error::Dimension {
                expected: 4,
                got: c.len(),
            }),
            (other, _) => Err(Error::FieldMismatch("biquad".into(), other.to_string())),
        }
    }
}
