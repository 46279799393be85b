use std::fmt::Write as _;

use crate::exact::{biquad_val_ramified, int, rat, BiQuadElem, HalfVal};

fn e(c: [crate::exact::Rat; 4]) -> BiQuadElem {
    BiQuadElem::new(3, 11, c).expect("(3, 11) is a valid field")
}

/// The unit `23 + 4√33` and the factorization
/// `11 = (23 + 4√33)·π²·π̄²` in `Q(√3, √11)`, with
/// `π = -5/2 - √3/2 + √11/2 + √33/2` and
/// `π̄ = -5/2 + √3/2 - √11/2 + √33/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitIdentity {
    pub unit: BiQuadElem,
    pub inverse: BiQuadElem,
    pub pi: BiQuadElem,
    pub pi_bar: BiQuadElem,
}

impl UnitIdentity {
    pub fn build() -> Self {
        let h = |n| rat(n, 2);
        UnitIdentity {
            unit: e([int(23), int(0), int(0), int(4)]),
            inverse: e([int(23), int(0), int(0), int(-4)]),
            pi: e([h(-5), h(-1), h(1), h(1)]),
            pi_bar: e([h(-5), h(1), h(-1), h(1)]),
        }
    }

    pub fn unit_times_inverse(&self) -> BiQuadElem {
        self.unit.clone() * self.inverse.clone()
    }

    pub fn factorization_product(&self) -> BiQuadElem {
        let pi2 = self.pi.clone() * self.pi.clone();
        let pb2 = self.pi_bar.clone() * self.pi_bar.clone();
        self.unit.clone() * pi2 * pb2
    }

    pub fn unit_ok(&self) -> bool {
        self.unit_times_inverse() == BiQuadElem::one(3, 11)
    }

    pub fn factorization_ok(&self) -> bool {
        self.factorization_product() == BiQuadElem::from_rat(3, 11, int(11))
    }

    /// `(v(π), v(π̄))` at the prime over 11 with `√3 ↦ root`.
    pub fn valuations(&self, root: u64) -> crate::error::Result<(HalfVal, HalfVal)> {
        Ok((
            biquad_val_ramified(&self.pi, 11, Some(root))?,
            biquad_val_ramified(&self.pi_bar, 11, Some(root))?,
        ))
    }

    pub fn canonical(&self) -> String {
        let mut out = String::from("fixture unit_identity\n");
        for (k, v) in [
            ("unit", &self.unit),
            ("inverse", &self.inverse),
            ("pi", &self.pi),
            ("pi_bar", &self.pi_bar),
        ] {
            writeln!(out, "{k} {v}").expect("string write");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_hold() {
        let u = UnitIdentity::build();
        assert!(u.unit_ok());
        assert!(u.factorization_ok());
        assert_eq!(u.unit.norm(), int(1));
    }

    #[test]
    fn pi_lies_over_the_other_root() {
        let u = UnitIdentity::build();
        let half = HalfVal::from_doubled(1);
        assert_eq!(u.valuations(6).unwrap(), (half, HalfVal::ZERO));
        assert_eq!(u.valuations(5).unwrap(), (HalfVal::ZERO, half));
    }
}
