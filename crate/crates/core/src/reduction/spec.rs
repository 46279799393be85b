use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{BiQuadElem, FieldDesc, QuadElem};
use crate::numtheory::{check_prime, least_sqrt_mod, legendre};

/// How the field sits over `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PrimeKind {
    /// `Q` at `p`, reduction mod `p`.
    Rational,
    /// `Q` at `p`, where integrality of unit vectors comes from
    /// anisotropy modulo `p²`; reduction is still mod `p`.
    ModSquare,
    /// `p` divides `m`; `√m` is a uniformizer and maps to 0. With
    /// `half_lattice`, representatives are taken modulo `(1/√m)·A` instead
    /// of `A`.
    Ramified { half_lattice: bool },
    /// `m` is a nonzero square mod `p`; `√m ↦ root`.
    Split { root: u64 },
    /// `Q(√m1, √m2)` with `p | m2` and `√m1 ↦ root`; `√m2, √(m1m2) ↦ 0`.
    BiQuadRamified { root: u64 },
}

/// A prime of a field together with its residue map to `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PrimeSpec {
    pub p: u64,
    #[serde(serialize_with = "ser_field")]
    pub field: FieldDesc,
    pub kind: PrimeKind,
}

fn ser_field<S: serde::Serializer>(f: &FieldDesc, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(f)
}

fn root_for(m: i64, p: u64, root: Option<u64>) -> Result<u64> {
    if legendre(m, p)? != 1 {
        return Err(Error::BadPrimeSpec(format!(
            "{m} is not a nonzero square mod {p}"
        )));
    }
    let least = least_sqrt_mod(m, p)?;
    match root {
        None => Ok(least),
        Some(r) if r % p == least || r % p == p - least => Ok(r % p),
        Some(r) => Err(Error::BadPrimeSpec(format!("{r}^2 is not {m} mod {p}"))),
    }
}

impl PrimeSpec {
    pub fn rational(p: u64) -> Result<Self> {
        check_prime(p)?;
        Ok(PrimeSpec {
            p,
            field: FieldDesc::Rational,
            kind: PrimeKind::Rational,
        })
    }

    pub fn mod_square(p: u64) -> Result<Self> {
        check_prime(p)?;
        Ok(PrimeSpec {
            p,
            field: FieldDesc::Rational,
            kind: PrimeKind::ModSquare,
        })
    }

    pub fn ramified(m: i64, p: u64, half_lattice: bool) -> Result<Self> {
        check_prime(p)?;
        QuadElem::check_radicand(m)?;
        let pi = p as i64;
        if m % pi != 0 || (m / pi) % pi == 0 {
            return Err(Error::BadPrimeSpec(format!(
                "{p} must divide {m} exactly once"
            )));
        }
        Ok(PrimeSpec {
            p,
            field: FieldDesc::Quad(m),
            kind: PrimeKind::Ramified { half_lattice },
        })
    }

    /// Least root when `root` is `None`.
    pub fn split(m: i64, p: u64, root: Option<u64>) -> Result<Self> {
        check_prime(p)?;
        QuadElem::check_radicand(m)?;
        if p == 2 {
            return Err(Error::BadPrimeSpec("split places need an odd prime".into()));
        }
        let root = root_for(m, p, root)?;
        Ok(PrimeSpec {
            p,
            field: FieldDesc::Quad(m),
            kind: PrimeKind::Split { root },
        })
    }

    pub fn biquad_ramified(m1: i64, m2: i64, p: u64, root: Option<u64>) -> Result<Self> {
        check_prime(p)?;
        BiQuadElem::check_field(m1, m2)?;
        let field = FieldDesc::BiQuad(m1, m2);
        let pi = p as i64;
        if p == 2 || m2 % pi != 0 || (m2 / pi) % pi == 0 {
            return Err(Error::BadPrimeSpec(format!(
                "{p} must be odd and divide {m2} exactly once"
            )));
        }
        let root = root_for(m1, p, root)?;
        Ok(PrimeSpec {
            p,
            field,
            kind: PrimeKind::BiQuadRamified { root },
        })
    }

    pub(crate) fn expect_field(&self, got: FieldDesc) -> Result<()> {
        if got != self.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                got.to_string(),
            ));
        }
        Ok(())
    }

    /// Smallest valuation a coordinate difference along a unit edge may
    /// have, in doubled units: `-1` for the half lattice, else `0`.
    pub fn edge_floor_doubled(&self) -> i64 {
        match self.kind {
            PrimeKind::Ramified { half_lattice: true } => -1,
            _ => 0,
        }
    }
}

impl fmt::Display for PrimeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            PrimeKind::Rational => write!(f, "{} at {}", self.field, self.p),
            PrimeKind::ModSquare => write!(f, "{} at {} (mod {}^2)", self.field, self.p, self.p),
            PrimeKind::Ramified { half_lattice } => write!(
                f,
                "{} ramified at {}{}",
                self.field,
                self.p,
                if half_lattice { " (half lattice)" } else { "" }
            ),
            PrimeKind::Split { root } | PrimeKind::BiQuadRamified { root } => {
                write!(f, "{} at {}, root {}", self.field, self.p, root)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(PrimeSpec::ramified(3, 3, false).is_ok());
        assert!(PrimeSpec::ramified(-5, 5, false).is_ok());
        assert!(PrimeSpec::ramified(7, 3, false).is_err());
        assert!(PrimeSpec::ramified(18, 3, false).is_err());
        assert_eq!(
            PrimeSpec::split(7, 3, None).unwrap().kind,
            PrimeKind::Split { root: 1 }
        );
        assert_eq!(
            PrimeSpec::split(-5, 3, Some(2)).unwrap().kind,
            PrimeKind::Split { root: 2 }
        );
        assert!(PrimeSpec::split(2, 3, None).is_err());
        assert!(PrimeSpec::split(7, 3, Some(0)).is_err());
        assert!(PrimeSpec::split(3, 3, None).is_err());
        let b = PrimeSpec::biquad_ramified(3, 11, 11, Some(5)).unwrap();
        assert_eq!(b.field, FieldDesc::BiQuad(3, 11));
        assert!(PrimeSpec::biquad_ramified(3, 11, 11, Some(4)).is_err());
        assert!(PrimeSpec::biquad_ramified(11, 3, 11, None).is_err());
        assert!(PrimeSpec::rational(4).is_err());
    }
}
