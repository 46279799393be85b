//! Seeded random inputs for checking the oracles on many unit pairs.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{color_oracle, edge_integrality_check, OracleId, Reducible};
use crate::error::{Error, Result};
use crate::exact::{BiQuadElem, FieldDesc, QuadElem, Rat, Scalar};
use crate::geometry::{circle_param, rotate_to_e1, DiagForm, Point};
use crate::numtheory::int_val;

/// Denominators used when sampling for `id`: powers of the oracle's prime
/// and a few others, except for the biquadratic oracle whose domain
/// excludes 11 in denominators.
pub fn oracle_denominators(id: OracleId) -> Vec<i64> {
    match id {
        OracleId::Biquad5Color => vec![1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13],
        _ => vec![1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 16, 18, 27, 32, 81],
    }
}

pub fn random_rat<R: Rng>(rng: &mut R, height: i64, dens: &[i64]) -> Rat {
    let n = rng.gen_range(-height..=height);
    let d = *dens.choose(rng).expect("nonempty denominators");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn random_scalar<S: Scalar, R: Rng>(
    rng: &mut R,
    field: FieldDesc,
    height: i64,
    dens: &[i64],
) -> Result<S> {
    let k = match field {
        FieldDesc::Rational => 1,
        FieldDesc::Quad(_) => 2,
        FieldDesc::BiQuad(..) => 4,
    };
    let c: Vec<Rat> = (0..k).map(|_| random_rat(rng, height, dens)).collect();
    S::from_components(field, &c)
}

/// A Euclidean unit vector `circle_param(t)`, optionally turned by the
/// inverse of the rotation that normalizes a second random unit vector.
pub fn random_unit_vector<S: Scalar, R: Rng>(
    rng: &mut R,
    field: FieldDesc,
    height: i64,
    dens: &[i64],
    rotate: bool,
) -> Result<Point<S>> {
    let mut unit = || -> Result<Point<S>> {
        loop {
            let t: S = random_scalar(rng, field, height, dens)?;
            match circle_param(&t) {
                Err(Error::CircleSingular) => continue,
                other => return other,
            }
        }
    };
    let u = unit()?;
    if !rotate {
        return Ok(u);
    }
    let w = unit()?;
    rotate_to_e1(&w)?.transpose().apply(&u)
}

/// Outcome of coloring many random unit pairs with one oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SoundnessReport {
    pub oracle: OracleId,
    pub pairs: usize,
    pub seed: u64,
    /// Pairs that received the same color.
    pub violations: usize,
    /// Pairs whose difference failed the integrality check.
    pub integrality_failures: usize,
    pub colors_seen: BTreeSet<usize>,
    pub first_violation: Option<(String, String)>,
}

impl SoundnessReport {
    pub fn ok(&self) -> bool {
        self.violations == 0
            && self.integrality_failures == 0
            && self.colors_seen.iter().all(|&c| c < self.oracle.k())
    }
}

const POINT_HEIGHT: i64 = 200;
const PARAM_HEIGHT: i64 = 30;

fn soundness_in<S: Reducible>(id: OracleId, pairs: usize, seed: u64) -> Result<SoundnessReport> {
    let field = id.field();
    let spec = id.spec();
    let dens = oracle_denominators(id);
    let rotations = matches!(id, OracleId::Sqrt7_3Color | OracleId::SqrtNeg5_3Color);
    let e2 = DiagForm::euclidean(2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SoundnessReport {
        oracle: id,
        pairs,
        seed,
        violations: 0,
        integrality_failures: 0,
        colors_seen: BTreeSet::new(),
        first_violation: None,
    };
    for i in 0..pairs {
        let coords = (0..2)
            .map(|_| random_scalar::<S, _>(&mut rng, field, POINT_HEIGHT, &dens))
            .collect::<Result<Vec<_>>>()?;
        let x = Point::new(coords)?;
        // the biquadratic oracle is only defined on 11-integral components
        let delta: Point<S> = loop {
            let d = random_unit_vector(
                &mut rng,
                field,
                PARAM_HEIGHT,
                &dens,
                rotations && i % 2 == 1,
            )?;
            if id != OracleId::Biquad5Color || p_integral_components(&d, spec.p) {
                break d;
            }
        };
        if !e2.eval(delta.coords())?.is_one() {
            return Err(Error::NotUnitDistance);
        }
        let y = x.add(&delta)?;
        if !edge_integrality_check(&x, &y, &spec)? {
            report.integrality_failures += 1;
        }
        let cx = color_oracle(id, &x)?.color;
        let cy = color_oracle(id, &y)?.color;
        report.colors_seen.insert(cx);
        report.colors_seen.insert(cy);
        if cx == cy {
            report.violations += 1;
            report
                .first_violation
                .get_or_insert_with(|| (x.to_string(), y.to_string()));
        }
    }
    Ok(report)
}

fn p_integral_components<S: Scalar>(x: &Point<S>, p: u64) -> bool {
    x.coords()
        .iter()
        .flat_map(|c| c.components())
        .all(|r| int_val(r.denom(), p) == 0)
}

/// Colors `pairs` seeded random pairs `(x, x + δ)` with `q(δ) = 1` and
/// counts the pairs that share a color.
pub fn oracle_soundness(id: OracleId, pairs: usize, seed: u64) -> Result<SoundnessReport> {
    match id.field() {
        FieldDesc::Rational => soundness_in::<Rat>(id, pairs, seed),
        FieldDesc::Quad(_) => soundness_in::<QuadElem>(id, pairs, seed),
        FieldDesc::BiQuad(..) => soundness_in::<BiQuadElem>(id, pairs, seed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_vectors_are_unit() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let e2 = DiagForm::euclidean(2);
        for rotate in [false, true] {
            let d: Point<QuadElem> =
                random_unit_vector(&mut rng, FieldDesc::Quad(7), 10, &[1, 3], rotate).unwrap();
            assert!(e2.eval(d.coords()).unwrap().is_one());
        }
    }

    #[test]
    fn every_oracle_survives_a_short_run() {
        for id in OracleId::ALL {
            let r = oracle_soundness(id, 200, 7).unwrap();
            assert!(r.ok(), "{id}: {r:?}");
        }
    }
}
