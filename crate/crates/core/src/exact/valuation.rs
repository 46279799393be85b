//! p-adic valuations on Q, on quadratic fields at ramified and split primes,
//! and on `Q(√m1, √m2)` at a prime ramified in `Q(√m2)` and split in `Q(√m1)`.
//!
//! All values are [`HalfVal`]s normalized so that `v(p) = 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{BiQuadElem, HalfVal, QuadElem, Rat};
use crate::error::{Error, Result};
use crate::numtheory::{
    check_odd_prime, check_prime, hensel_lift, int_val, least_sqrt_mod, mod_inverse,
};

/// Largest p-adic precision (in digits) tried before giving up.
pub const DEFAULT_PRECISION_CAP: u64 = 1 << 20;

/// Integer p-adic valuation of a rational; `None` for zero.
pub(crate) fn rat_val_int(r: &Rat, p: u64) -> Option<i64> {
    if r.is_zero() {
        return None;
    }
    Some(int_val(r.numer(), p) as i64 - int_val(r.denom(), p) as i64)
}

/// p-adic valuation of a rational, in half units.
pub fn rat_val(r: &Rat, p: u64) -> Result<HalfVal> {
    check_prime(p)?;
    Ok(match rat_val_int(r, p) {
        None => HalfVal::Infinity,
        Some(v) => HalfVal::from_int(v),
    })
}

/// `r mod p^k` in `0..p^k` for a p-integral rational `r`.
pub fn rat_mod_pk(r: &Rat, p: u64, k: u32) -> Result<BigInt> {
    let modulus = BigInt::from(p).pow(k);
    let inv = mod_inverse(r.denom(), &modulus)
        .ok_or_else(|| Error::ValuationPrecondition(format!("{r} is not {p}-integral")))?;
    Ok((r.numer() * inv).mod_floor(&modulus))
}

fn pow_p(p: u64, e: i64) -> Rat {
    let base = Rat::from_integer(BigInt::from(p));
    if e >= 0 {
        base.pow(e as i32)
    } else {
        base.recip().pow((-e) as i32)
    }
}

/// Valuation on `Q(√m)` at a prime `p` with `v_p(m) = 1`, where `√m` is a
/// uniformizer of valuation ½. The rational and irrational parts never have
/// equal valuation, so `v(a + b√m) = min(v(a), v(b) + ½)`.
pub fn quad_val_ramified(x: &QuadElem, p: u64) -> Result<HalfVal> {
    check_prime(p)?;
    let m = BigInt::from(x.m());
    if m.is_zero() || int_val(&m, p) != 1 {
        return Err(Error::ValuationPrecondition(format!(
            "{p} must divide {} exactly once",
            x.m()
        )));
    }
    let va = rat_valued(x.a(), p, 0);
    let vb = rat_valued(x.b(), p, 1);
    Ok(va.min(vb))
}

fn rat_valued(r: &Rat, p: u64, shift: i64) -> HalfVal {
    match rat_val_int(r, p) {
        None => HalfVal::Infinity,
        Some(v) => HalfVal::from_doubled(2 * v + shift),
    }
}

/// A degree-one place of `Q(√m)` over an odd prime `p` that splits, fixed by
/// choosing which p-adic square root of `m` `√m` maps to: the one congruent
/// to `root` mod `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPlace {
    p: u64,
    m: i64,
    root: u64,
    cap: u64,
}

impl SplitPlace {
    /// Uses the least root in `1..p` when `root` is `None`.
    pub fn new(m: i64, p: u64, root: Option<u64>) -> Result<Self> {
        check_odd_prime(p)?;
        let least = least_sqrt_mod(m, p)?;
        let root = match root {
            None => least,
            Some(r) => {
                let r = r % p;
                if r != least && r != p - least {
                    return Err(Error::NonResidue {
                        n: format!("{m} (root {r})"),
                        p,
                    });
                }
                r
            }
        };
        Ok(SplitPlace {
            p,
            m,
            root,
            cap: DEFAULT_PRECISION_CAP,
        })
    }

    pub fn with_precision_cap(mut self, cap: u64) -> Self {
        self.cap = cap.max(1);
        self
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn root(&self) -> u64 {
        self.root
    }

    /// `√m` modulo `p^k`.
    pub fn sqrt_approx(&self, k: u32) -> BigInt {
        hensel_lift(&BigInt::from(self.m), self.p, k, self.root).expect("validated root")
    }

    /// `(A + B·√m) mod p^k` for p-integral rationals `A`, `B`.
    fn eval_mod(&self, a: &Rat, b: &Rat, k: u32) -> BigInt {
        let modulus = BigInt::from(self.p).pow(k);
        let am = rat_mod_pk(a, self.p, k).expect("integral");
        let bm = rat_mod_pk(b, self.p, k).expect("integral");
        (am + bm * self.sqrt_approx(k)).mod_floor(&modulus)
    }

    /// Largest `t` with both `a/p^t` and `b/p^t` integral; `None` if both vanish.
    fn common_shift(&self, a: &Rat, b: &Rat) -> Option<i64> {
        match (rat_val_int(a, self.p), rat_val_int(b, self.p)) {
            (None, None) => None,
            (Some(x), None) | (None, Some(x)) => Some(x),
            (Some(x), Some(y)) => Some(x.min(y)),
        }
    }

    /// Valuation of `a + b·√m` under this place, escalating p-adic precision
    /// until the truncated value is nonzero.
    pub fn valuation_of_pair(&self, a: &Rat, b: &Rat) -> Result<HalfVal> {
        let Some(t) = self.common_shift(a, b) else {
            return Ok(HalfVal::Infinity);
        };
        let scale = pow_p(self.p, -t);
        let (sa, sb) = (a * &scale, b * &scale);
        let mut k: u64 = 1;
        loop {
            let y = self.eval_mod(&sa, &sb, k as u32);
            if !y.is_zero() {
                return Ok(HalfVal::from_int(t + int_val(&y, self.p) as i64));
            }
            if k >= self.cap {
                return Err(Error::PrecisionCap { cap: self.cap });
            }
            k = (k * 2).min(self.cap);
        }
    }

    pub fn valuation(&self, x: &QuadElem) -> Result<HalfVal> {
        self.check_field(x)?;
        self.valuation_of_pair(x.a(), x.b())
    }

    fn check_field(&self, x: &QuadElem) -> Result<()> {
        if x.m() != self.m {
            return Err(Error::FieldMismatch(
                format!("Q(sqrt({}))", self.m),
                format!("Q(sqrt({}))", x.m()),
            ));
        }
        Ok(())
    }

    /// The rational `c / p^k`, `0 <= c < p^k`, that is the p-adic principal
    /// part of `a + b·√m`; zero when the element is integral at this place.
    pub fn principal_part_of_pair(&self, a: &Rat, b: &Rat) -> Rat {
        let Some(t) = self.common_shift(a, b) else {
            return Rat::zero();
        };
        if t >= 0 {
            return Rat::zero();
        }
        let k = (-t) as u32;
        let scale = pow_p(self.p, -t);
        let c = self.eval_mod(&(a * &scale), &(b * &scale), k);
        Rat::new(c, BigInt::from(self.p).pow(k))
    }

    pub fn principal_part(&self, x: &QuadElem) -> Result<Rat> {
        self.check_field(x)?;
        Ok(self.principal_part_of_pair(x.a(), x.b()))
    }

    /// Image of the integral element `a + b·√m` in the residue field `F_p`.
    pub fn residue_of_pair(&self, a: &Rat, b: &Rat) -> Result<u64> {
        let v = self.valuation_of_pair(a, b)?;
        if v < HalfVal::ZERO {
            return Err(Error::NotIntegral {
                index: 0,
                valuation: v.to_string(),
            });
        }
        let t = self.common_shift(a, b).unwrap_or(0);
        if t >= 0 {
            let r = self.eval_mod(a, b, 1);
            return Ok(u64::try_from(r).expect("residue below p"));
        }
        // denominators cancel against the expansion of √m: work at precision
        // 1 - t and divide the p^(-t) factor out exactly
        let lost = (-t) as u32;
        let scale = pow_p(self.p, -t);
        let y = self.eval_mod(&(a * &scale), &(b * &scale), lost + 1);
        let q = y / BigInt::from(self.p).pow(lost);
        Ok(u64::try_from(q.mod_floor(&BigInt::from(self.p))).expect("residue below p"))
    }

    pub fn residue(&self, x: &QuadElem) -> Result<u64> {
        self.check_field(x)?;
        self.residue_of_pair(x.a(), x.b())
    }
}

/// Valuation at a split prime with root convention `root` (least root when
/// `None`).
pub fn quad_val_split(x: &QuadElem, p: u64, root: Option<u64>) -> Result<HalfVal> {
    if BigInt::from(x.m()).is_zero() || (x.m() as i128).rem_euclid(p as i128) == 0 {
        return Err(Error::ValuationPrecondition(format!(
            "{p} divides {}",
            x.m()
        )));
    }
    SplitPlace::new(x.m(), p, root)?.valuation(x)
}

/// Valuation on `Q(√m1, √m2)` at the prime above `p` where `p` divides `m2`
/// exactly once and `m1` is a square mod `p` (`√m1 ↦ root`). Writing
/// `x = (a + b√m1) + √m2·(c + d√m1)`, the two halves live in `Q_p`, `√m2` is a
/// uniformizer, and `v(x) = min(v(a + b√m1), v(c + d√m1) + ½)`.
pub fn biquad_val_ramified(x: &BiQuadElem, p: u64, root: Option<u64>) -> Result<HalfVal> {
    let (m1, m2) = x.field_pair();
    if int_val(&BigInt::from(m2), p) != 1 {
        return Err(Error::ValuationPrecondition(format!(
            "{p} must divide {m2} exactly once"
        )));
    }
    let place = SplitPlace::new(m1, p, root)?;
    let [a, b, c, d] = x.coeffs();
    let lo = place.valuation_of_pair(a, b)?;
    let hi = match place.valuation_of_pair(c, d)? {
        HalfVal::Infinity => HalfVal::Infinity,
        v => v + HalfVal::from_doubled(1),
    };
    Ok(lo.min(hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn q(m: i64, a: Rat, b: Rat) -> QuadElem {
        QuadElem::new(m, a, b).unwrap()
    }

    #[test]
    fn rational_valuations() {
        assert_eq!(rat_val(&int(0), 3).unwrap(), HalfVal::Infinity);
        assert_eq!(rat_val(&rat(1, 8), 2).unwrap(), HalfVal::from_doubled(-6));
        assert_eq!(rat_val(&rat(6, 5), 3).unwrap(), HalfVal::from_doubled(2));
        assert!(rat_val(&int(6), 4).is_err());
    }

    #[test]
    fn ramified_examples() {
        let v = |x: QuadElem| quad_val_ramified(&x, 2).unwrap();
        assert_eq!(v(q(2, int(0), int(1))), HalfVal::from_doubled(1));
        assert_eq!(v(q(2, int(2), int(2))), HalfVal::from_doubled(2));
        assert_eq!(v(q(2, int(0), int(2))), HalfVal::from_doubled(3));
        assert_eq!(v(q(2, int(1), int(1))), HalfVal::ZERO);
        assert_eq!(v(q(2, int(-1), int(1))), HalfVal::ZERO);
        assert!(quad_val_ramified(&q(3, int(1), int(1)), 2).is_err());
        assert!(quad_val_ramified(&q(-5, int(1), int(1)), 5).is_ok());
    }

    #[test]
    fn split_examples() {
        let v = |x: QuadElem| quad_val_split(&x, 3, Some(2)).unwrap();
        assert_eq!(v(q(7, int(-2), int(1))), HalfVal::from_int(1));
        assert_eq!(v(q(7, int(3), int(0))), HalfVal::from_int(1));
        assert_eq!(v(q(7, int(2), int(1))), HalfVal::ZERO);
        // the other root swaps the two primes above 3
        assert_eq!(
            quad_val_split(&q(7, int(2), int(1)), 3, Some(1)).unwrap(),
            HalfVal::from_int(1)
        );
        assert_eq!(
            quad_val_split(&q(7, int(0), int(0)), 3, None).unwrap(),
            HalfVal::Infinity
        );
        assert!(quad_val_split(&q(7, int(1), int(1)), 7, None).is_err());
        assert!(quad_val_split(&q(2, int(1), int(1)), 3, None).is_err());
        assert!(SplitPlace::new(7, 3, Some(0)).is_err());
    }

    #[test]
    fn split_high_valuation() {
        // (√7 - 2)^5 has valuation 5 at the place √7 ↦ 2
        let base = q(7, int(-2), int(1));
        let mut x = base.clone();
        for _ in 0..4 {
            x = &x * &base;
        }
        assert_eq!(
            quad_val_split(&x, 3, Some(2)).unwrap(),
            HalfVal::from_int(5)
        );
        let inv = x.inv().unwrap();
        assert_eq!(
            quad_val_split(&inv, 3, Some(2)).unwrap(),
            HalfVal::from_int(-5)
        );
        let capped = SplitPlace::new(7, 3, Some(2))
            .unwrap()
            .with_precision_cap(2);
        assert!(matches!(
            capped.valuation(&x),
            Err(Error::PrecisionCap { .. })
        ));
    }

    #[test]
    fn principal_parts_and_residues() {
        let place = SplitPlace::new(7, 3, Some(2)).unwrap();
        // 1/(√7 - 2) = (√7 + 2)/3 has valuation -1
        let x = q(7, rat(2, 3), rat(1, 3));
        let rho = place.principal_part(&x).unwrap();
        assert_eq!(*rho.denom(), BigInt::from(3));
        let y = q(7, x.a() - &rho, x.b().clone());
        assert!(place.valuation(&y).unwrap() >= HalfVal::ZERO);
        // (√7 - 2)/3 = 1/(√7 + 2) is a unit; √7 + 2 ↦ 4 ↦ 1, so its inverse ↦ 1
        let u = q(7, rat(-2, 3), rat(1, 3));
        assert_eq!(place.valuation(&u).unwrap(), HalfVal::ZERO);
        assert_eq!(place.residue(&u).unwrap(), 1);
        assert_eq!(place.residue(&q(7, rat(1, 8), rat(3, 8))).unwrap(), 2);
        assert!(place.residue(&x).is_err());
    }

    #[test]
    fn biquad_valuation() {
        let e = |c: [Rat; 4]| BiQuadElem::new(3, 11, c).unwrap();
        let v = |x: &BiQuadElem| biquad_val_ramified(x, 11, Some(5)).unwrap();
        assert_eq!(
            v(&e([int(0), int(0), int(1), int(0)])),
            HalfVal::from_doubled(1)
        );
        assert_eq!(
            v(&e([int(11), int(0), int(0), int(0)])),
            HalfVal::from_int(1)
        );
        assert_eq!(v(&e([int(1), int(0), int(0), int(0)])), HalfVal::ZERO);
        // π generates the prime with √3 ↦ 6
        let pi = e([rat(-5, 2), rat(-1, 2), rat(1, 2), rat(1, 2)]);
        assert_eq!(
            biquad_val_ramified(&pi, 11, Some(6)).unwrap(),
            HalfVal::from_doubled(1)
        );
        assert_eq!(v(&pi), HalfVal::ZERO);
        let pi2 = e([rat(-5, 2), rat(1, 2), rat(-1, 2), rat(1, 2)]);
        assert_eq!(v(&pi2), HalfVal::from_doubled(1));
    }
}
