use num_bigint::BigInt;
use num_traits::Zero;

use super::{PrimeKind, PrimeSpec};
use crate::error::{Error, Result};
use crate::exact::{
    biquad_val_ramified, quad_val_ramified, rat_mod_pk, rat_val, BiQuadElem, HalfVal, QuadElem,
    Rat, Scalar, SplitPlace,
};
use crate::numtheory::int_val;

/// `c / p^k` with `0 <= c < p^k` and `r - c/p^k` p-integral: the p-adic
/// principal part of `r`, zero when `r` is already integral.
pub fn class_representative(r: &Rat, p: u64) -> Rat {
    if r.is_zero() {
        return Rat::zero();
    }
    let v = int_val(r.numer(), p) as i64 - int_val(r.denom(), p) as i64;
    if v >= 0 {
        return Rat::zero();
    }
    let k = (-v) as u32;
    let pk = BigInt::from(p).pow(k);
    let scaled = r * Rat::from_integer(pk.clone());
    let c = rat_mod_pk(&scaled, p, k).expect("scaled value is integral");
    Rat::new(c, pk)
}

/// Representative of `b` modulo `p^(-1)·Z_(p)`.
fn class_representative_shifted(b: &Rat, p: u64) -> Rat {
    let pr = Rat::from_integer(p.into());
    class_representative(&(b * &pr), p) / pr
}

/// Scalars that can be reduced at a [`PrimeSpec`] of their field.
pub trait Reducible: Scalar {
    fn valuation_at(&self, spec: &PrimeSpec) -> Result<HalfVal>;

    /// Canonical element of `self + L`, where `L` is the valuation ring
    /// (or `(1/√m)·A` for a half-lattice spec). It depends only on the
    /// coset, and `self - representative` lies in `L`.
    fn representative(&self, spec: &PrimeSpec) -> Result<Self>;

    /// Image in `F_p` of an element of the valuation ring.
    fn residue(&self, spec: &PrimeSpec) -> Result<u64>;

    /// Class in `(Z/p)²` of an element of `(1/√m)·A` modulo `√m·A`, as
    /// `(a mod p, p·b mod p)` for `a + b√m`. Half-lattice specs only.
    fn half_lattice_class(&self, spec: &PrimeSpec) -> Result<(u64, u64)> {
        Err(Error::BadPrimeSpec(format!(
            "no half-lattice classes for {spec}"
        )))
    }
}

fn not_integral(v: HalfVal) -> Error {
    Error::NotIntegral {
        index: 0,
        valuation: v.to_string(),
    }
}

fn rat_residue(r: &Rat, p: u64) -> Result<u64> {
    let v = rat_val(r, p)?;
    if v < HalfVal::ZERO {
        return Err(not_integral(v));
    }
    Ok(u64::try_from(rat_mod_pk(r, p, 1)?).expect("below p"))
}

impl Reducible for Rat {
    fn valuation_at(&self, spec: &PrimeSpec) -> Result<HalfVal> {
        spec.expect_field(self.field())?;
        rat_val(self, spec.p)
    }

    fn representative(&self, spec: &PrimeSpec) -> Result<Self> {
        spec.expect_field(self.field())?;
        Ok(class_representative(self, spec.p))
    }

    fn residue(&self, spec: &PrimeSpec) -> Result<u64> {
        spec.expect_field(self.field())?;
        rat_residue(self, spec.p)
    }
}

impl Reducible for QuadElem {
    fn valuation_at(&self, spec: &PrimeSpec) -> Result<HalfVal> {
        spec.expect_field(self.field())?;
        match spec.kind {
            PrimeKind::Ramified { .. } => quad_val_ramified(self, spec.p),
            PrimeKind::Split { root } => {
                SplitPlace::new(self.m(), spec.p, Some(root))?.valuation(self)
            }
            _ => Err(Error::BadPrimeSpec(spec.to_string())),
        }
    }

    fn representative(&self, spec: &PrimeSpec) -> Result<Self> {
        spec.expect_field(self.field())?;
        let p = spec.p;
        match spec.kind {
            PrimeKind::Ramified { half_lattice } => {
                let b = if half_lattice {
                    class_representative_shifted(self.b(), p)
                } else {
                    class_representative(self.b(), p)
                };
                QuadElem::new(self.m(), class_representative(self.a(), p), b)
            }
            PrimeKind::Split { root } => {
                let place = SplitPlace::new(self.m(), p, Some(root))?;
                Ok(QuadElem::from_rat(self.m(), place.principal_part(self)?))
            }
            _ => Err(Error::BadPrimeSpec(spec.to_string())),
        }
    }

    fn residue(&self, spec: &PrimeSpec) -> Result<u64> {
        spec.expect_field(self.field())?;
        match spec.kind {
            PrimeKind::Ramified { .. } => {
                let v = quad_val_ramified(self, spec.p)?;
                if v < HalfVal::ZERO {
                    return Err(not_integral(v));
                }
                rat_residue(self.a(), spec.p)
            }
            PrimeKind::Split { root } => {
                SplitPlace::new(self.m(), spec.p, Some(root))?.residue(self)
            }
            _ => Err(Error::BadPrimeSpec(spec.to_string())),
        }
    }

    fn half_lattice_class(&self, spec: &PrimeSpec) -> Result<(u64, u64)> {
        spec.expect_field(self.field())?;
        if spec.kind != (PrimeKind::Ramified { half_lattice: true }) {
            return Err(Error::BadPrimeSpec(format!("{spec} has no half lattice")));
        }
        let v = quad_val_ramified(self, spec.p)?;
        if v < HalfVal::from_doubled(-1) {
            return Err(not_integral(v));
        }
        let pb = self.b() * Rat::from_integer(spec.p.into());
        Ok((rat_residue(self.a(), spec.p)?, rat_residue(&pb, spec.p)?))
    }
}

impl Reducible for BiQuadElem {
    fn valuation_at(&self, spec: &PrimeSpec) -> Result<HalfVal> {
        spec.expect_field(self.field())?;
        match spec.kind {
            PrimeKind::BiQuadRamified { root } => biquad_val_ramified(self, spec.p, Some(root)),
            _ => Err(Error::BadPrimeSpec(spec.to_string())),
        }
    }

    /// Only defined on elements with p-integral components, where it is 0.
    fn representative(&self, spec: &PrimeSpec) -> Result<Self> {
        check_biquad_domain(self, spec)?;
        Ok(self.zero_like())
    }

    fn residue(&self, spec: &PrimeSpec) -> Result<u64> {
        check_biquad_domain(self, spec)?;
        let PrimeKind::BiQuadRamified { root } = spec.kind else {
            unreachable!("checked by domain test");
        };
        let [a, b, _, _] = self.coeffs();
        let s = Rat::from_integer(root.into());
        rat_residue(&(a + b * s), spec.p)
    }
}

fn check_biquad_domain(x: &BiQuadElem, spec: &PrimeSpec) -> Result<()> {
    spec.expect_field(x.field())?;
    if !matches!(spec.kind, PrimeKind::BiQuadRamified { .. }) {
        return Err(Error::BadPrimeSpec(spec.to_string()));
    }
    if let Some(c) = x.coeffs().iter().find(|c| int_val(c.denom(), spec.p) > 0) {
        return Err(Error::OutsideDomain(format!(
            "component {c} of {x} is not {}-integral",
            spec.p
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn rational_representatives() {
        assert_eq!(class_representative(&rat(22, 9), 3), rat(4, 9));
        assert_eq!(class_representative(&rat(-1, 3), 3), rat(2, 3));
        assert_eq!(class_representative(&rat(5, 2), 3), int(0));
        assert_eq!(class_representative(&int(0), 3), int(0));
        assert_eq!(class_representative(&rat(7, 12), 2), rat(1, 4));
    }

    #[test]
    fn ramified_representatives() {
        let spec = PrimeSpec::ramified(3, 3, false).unwrap();
        let x = QuadElem::new(3, rat(1, 3), rat(5, 9)).unwrap();
        assert_eq!(x.representative(&spec).unwrap(), x);
        let y = QuadElem::new(3, rat(4, 3), rat(2, 1)).unwrap();
        assert_eq!(
            y.representative(&spec).unwrap(),
            QuadElem::new(3, rat(1, 3), int(0)).unwrap()
        );
        let half = QuadElem::new(3, rat(1, 2), rat(1, 2)).unwrap();
        assert_eq!(half.residue(&spec).unwrap(), 2);
    }

    #[test]
    fn half_lattice() {
        let spec = PrimeSpec::ramified(2, 2, true).unwrap();
        // 1/√2 lies in the half lattice itself
        let u = QuadElem::new(2, int(0), rat(1, 2)).unwrap();
        assert!(u.representative(&spec).unwrap().is_zero());
        assert_eq!(u.half_lattice_class(&spec).unwrap(), (0, 1));
        let v = QuadElem::new(2, int(1), rat(1, 2)).unwrap();
        assert_eq!(v.half_lattice_class(&spec).unwrap(), (1, 1));
        let w = QuadElem::new(2, rat(1, 2), rat(1, 4)).unwrap();
        assert_eq!(
            w.representative(&spec).unwrap(),
            QuadElem::new(2, rat(1, 2), rat(1, 4)).unwrap()
        );
        assert!(w.half_lattice_class(&spec).is_err());
    }

    #[test]
    fn split_representatives() {
        let spec = PrimeSpec::split(7, 3, Some(2)).unwrap();
        // (√7 + 2)/3 = 1/(√7 - 2)
        let x = QuadElem::new(7, rat(2, 3), rat(1, 3)).unwrap();
        let rho = x.representative(&spec).unwrap();
        assert!(rho.is_rational());
        let diff = &x - &rho;
        assert!(diff.valuation_at(&spec).unwrap() >= HalfVal::ZERO);
        let p = QuadElem::new(7, int(0), rat(3, 8)).unwrap();
        assert_eq!(p.residue(&spec).unwrap(), 0);
        let q = QuadElem::new(7, rat(1, 8), int(0)).unwrap();
        assert_eq!(q.residue(&spec).unwrap(), 2);
    }

    #[test]
    fn biquad_domain() {
        let spec = PrimeSpec::biquad_ramified(3, 11, 11, Some(5)).unwrap();
        let p4 = BiQuadElem::new(3, 11, [rat(5, 6), int(0), int(0), int(0)]).unwrap();
        assert_eq!(p4.residue(&spec).unwrap(), 10);
        let s3 = BiQuadElem::new(3, 11, [int(0), int(1), int(0), int(0)]).unwrap();
        assert_eq!(s3.residue(&spec).unwrap(), 5);
        let bad = BiQuadElem::new(3, 11, [rat(1, 11), int(0), int(0), int(0)]).unwrap();
        assert!(matches!(bad.residue(&spec), Err(Error::OutsideDomain(_))));
        assert!(matches!(
            bad.representative(&spec),
            Err(Error::OutsideDomain(_))
        ));
    }
}
