use std::fmt;
use std::ops::Add;

use serde::{Serialize, Serializer};

/// A valuation in `½Z ∪ {∞}`, stored doubled so that all arithmetic stays
/// integral. Variant order makes `Infinity` the maximum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HalfVal {
    /// Twice the valuation.
    Finite(i64),
    Infinity,
}

impl HalfVal {
    pub const ZERO: HalfVal = HalfVal::Finite(0);

    pub fn from_int(v: i64) -> Self {
        HalfVal::Finite(2 * v)
    }

    pub fn from_doubled(d: i64) -> Self {
        HalfVal::Finite(d)
    }

    pub fn doubled(self) -> Option<i64> {
        match self {
            HalfVal::Finite(d) => Some(d),
            HalfVal::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == HalfVal::Infinity
    }

    /// Integer value when the valuation is not a proper half.
    pub fn as_int(self) -> Option<i64> {
        match self {
            HalfVal::Finite(d) if d % 2 == 0 => Some(d / 2),
            _ => None,
        }
    }
}

impl Add for HalfVal {
    type Output = HalfVal;
    fn add(self, rhs: HalfVal) -> HalfVal {
        match (self, rhs) {
            (HalfVal::Finite(a), HalfVal::Finite(b)) => HalfVal::Finite(a + b),
            _ => HalfVal::Infinity,
        }
    }
}

impl fmt::Display for HalfVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            HalfVal::Infinity => write!(f, "inf"),
            HalfVal::Finite(d) if d % 2 == 0 => write!(f, "{}", d / 2),
            HalfVal::Finite(d) => write!(f, "{d}/2"),
        }
    }
}

impl Serialize for HalfVal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_and_addition() {
        assert!(HalfVal::Infinity > HalfVal::Finite(i64::MAX));
        assert!(HalfVal::Finite(-3) < HalfVal::Finite(1));
        assert_eq!(HalfVal::Finite(1) + HalfVal::Finite(2), HalfVal::Finite(3));
        assert_eq!(HalfVal::Finite(1) + HalfVal::Infinity, HalfVal::Infinity);
        assert_eq!(HalfVal::Finite(3).to_string(), "3/2");
        assert_eq!(HalfVal::from_int(-3).to_string(), "-3");
        assert_eq!(HalfVal::Finite(-1).to_string(), "-1/2");
    }
}
