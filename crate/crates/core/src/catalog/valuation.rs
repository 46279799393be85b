use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::exact::{quad_val_ramified, quad_val_split, rat_val, HalfVal, QuadElem, Rat};
use crate::reduction::sample::random_rat;

/// Axiom checks for one valuation over random nonzero pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValuationAxiomRow {
    pub valuation: String,
    pub pairs: usize,
    pub failures: usize,
}

const DENS: [i64; 12] = [1, 2, 3, 4, 7, 8, 9, 11, 12, 27, 121, 32];

fn check<T, R: Rng>(
    name: String,
    pairs: usize,
    rng: &mut R,
    mut sample: impl FnMut(&mut R) -> T,
    val: impl Fn(&T) -> Result<HalfVal>,
    add: impl Fn(&T, &T) -> T,
    mul: impl Fn(&T, &T) -> T,
    is_zero: impl Fn(&T) -> bool,
) -> Result<ValuationAxiomRow> {
    let mut failures = 0;
    for _ in 0..pairs {
        let x = sample(rng);
        let y = sample(rng);
        let (vx, vy) = (val(&x)?, val(&y)?);
        let mut ok = vx.is_infinite() == is_zero(&x) && vy.is_infinite() == is_zero(&y);
        ok &= val(&mul(&x, &y))? == vx + vy;
        ok &= val(&add(&x, &y))? >= vx.min(vy);
        if !ok {
            failures += 1;
        }
    }
    Ok(ValuationAxiomRow {
        valuation: name,
        pairs,
        failures,
    })
}

/// `v(0) = ∞`, `v(xy) = v(x) + v(y)` and `v(x + y) >= min` for `rat_val` at
/// 2, 3, 11, the ramified valuations of `Q(√2)` at 2 and `Q(√3)` at 3, and
/// the split valuation of `Q(√7)` at 3.
pub fn check_all(pairs: usize, seed: u64) -> Result<Vec<ValuationAxiomRow>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    for p in [2, 3, 11] {
        rows.push(check(
            format!("rat_val at {p}"),
            pairs,
            &mut rng,
            |r| random_rat(r, 500, &DENS),
            |x: &Rat| rat_val(x, p),
            |a, b| a + b,
            |a, b| a * b,
            |x| *x == Rat::from_integer(0.into()),
        )?);
    }
    let quad = |m: i64| {
        move |r: &mut ChaCha8Rng| {
            QuadElem::new(m, random_rat(r, 500, &DENS), random_rat(r, 500, &DENS)).expect("valid m")
        }
    };
    let q_add = |a: &QuadElem, b: &QuadElem| a.clone() + b.clone();
    let q_mul = |a: &QuadElem, b: &QuadElem| a.clone() * b.clone();
    for (m, p) in [(2, 2), (3, 3)] {
        rows.push(check(
            format!("quad_val_ramified on Q(sqrt {m}) at {p}"),
            pairs,
            &mut rng,
            quad(m),
            |x| quad_val_ramified(x, p),
            q_add,
            q_mul,
            QuadElem::is_zero,
        )?);
    }
    rows.push(check(
        "quad_val_split on Q(sqrt 7) at 3".into(),
        pairs,
        &mut rng,
        quad(7),
        |x| quad_val_split(x, 3, None),
        q_add,
        q_mul,
        QuadElem::is_zero,
    )?);
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axioms_hold_on_a_small_sample() {
        for row in check_all(300, 3).unwrap() {
            assert_eq!(row.failures, 0, "{}", row.valuation);
        }
    }
}
