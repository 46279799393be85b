//! Prime-field utilities: primality, Legendre symbols, Hensel lifting of
//! square roots, the congruence rules for 3 and 11 being squares, and prime
//! scans.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod m` for word-sized operands.
pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &SMALL {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub(crate) fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

pub(crate) fn check_odd_prime(p: u64) -> Result<()> {
    if p != 2 && is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotOddPrime(p))
    }
}

/// `a mod p` as a residue in `0..p`, for any sign of `a`.
pub fn residue(a: i64, p: u64) -> u64 {
    (a as i128).rem_euclid(p as i128) as u64
}

/// Legendre symbol by Euler's criterion: `a^((p-1)/2) mod p`.
pub fn legendre(a: i64, p: u64) -> Result<i8> {
    check_odd_prime(p)?;
    let r = residue(a, p);
    if r == 0 {
        return Ok(0);
    }
    Ok(if pow_mod(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    })
}

/// Tri-state answer to "is `a` a square mod `q`".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QrStatus {
    Residue,
    NonResidue,
    /// `q` divides `a`.
    Ramified,
}

impl QrStatus {
    pub fn of(a: i64, q: u64) -> Result<Self> {
        Ok(match legendre(a, q)? {
            1 => QrStatus::Residue,
            -1 => QrStatus::NonResidue,
            _ => QrStatus::Ramified,
        })
    }
}

/// Decides whether `a` (3 or 11) is a square mod the odd prime `q` from the
/// congruence class of `q` alone: mod 12 for 3, mod 44 for 11.
pub fn residue_rule(a: i64, q: u64) -> Result<bool> {
    check_odd_prime(q)?;
    match a {
        3 | 11 if q.is_multiple_of(a as u64) => Err(Error::Ramified { a, q }),
        3 => Ok(matches!(q % 12, 1 | 11)),
        11 => {
            const CLASSES: [u64; 10] = [1, 43, 9, 35, 5, 39, 7, 37, 19, 25];
            Ok(CLASSES.contains(&(q % 44)))
        }
        _ => Err(Error::UnsupportedResidue(a)),
    }
}

/// Modular inverse for arbitrary-precision operands, `None` when not coprime.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let a = a.mod_floor(m);
    let eg = a.extended_gcd(m);
    if !eg.gcd.is_one() {
        return None;
    }
    Some(eg.x.mod_floor(m))
}

/// Least square root of `n` in `1..p`, found by Tonelli-Shanks.
pub fn least_sqrt_mod(n: i64, p: u64) -> Result<u64> {
    check_odd_prime(p)?;
    let a = residue(n, p);
    if a == 0 || pow_mod(a, (p - 1) / 2, p) != 1 {
        return Err(Error::NonResidue {
            n: n.to_string(),
            p,
        });
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Ok(r.min(p - r))
}

/// Lifts the root `root` of `x^2 = n (mod p)` to a root modulo `p^k` by
/// Newton iteration. The result lies in `0..p^k` and is congruent to `root`
/// mod `p`.
pub fn hensel_lift(n: &BigInt, p: u64, k: u32, root: u64) -> Result<BigInt> {
    check_odd_prime(p)?;
    let pb = BigInt::from(p);
    let root_b = BigInt::from(root % p);
    if root_b.is_zero() || !((&root_b * &root_b - n).mod_floor(&pb)).is_zero() {
        return Err(Error::NonResidue {
            n: format!("{n} (root {root})"),
            p,
        });
    }
    if k == 0 {
        return Ok(BigInt::zero());
    }
    let mut s = root_b;
    let mut prec = 1u32;
    while prec < k {
        prec = (prec * 2).min(k);
        let modulus = pb.pow(prec);
        let two_s = (&s * 2u32).mod_floor(&modulus);
        let inv = mod_inverse(&two_s, &modulus).expect("2s is a unit for odd p");
        s = (&s - (&s * &s - n) * inv).mod_floor(&modulus);
    }
    Ok(s)
}

/// Square root of `n` modulo `p^k` lifted from the least root mod `p`.
pub fn hensel_sqrt(n: i64, p: u64, k: u32) -> Result<BigInt> {
    let root = least_sqrt_mod(n, p)?;
    hensel_lift(&BigInt::from(n), p, k, root)
}

/// Exponent of the prime `p` in the nonzero integer `n`.
pub fn int_val(n: &BigInt, p: u64) -> u64 {
    debug_assert!(!n.is_zero());
    let pb = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&pb);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// Sieve of Eratosthenes up to and including `limit`.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Per-prime evaluation of the embedding criteria.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimePredicateReport {
    pub prime: u64,
    pub mod4_is_3: bool,
    pub residues: Vec<(i64, QrStatus)>,
    pub passes: bool,
}

/// Odd primes `p <= limit` that are 3 mod 4 (when requested) and for which
/// every integer in `require_qr` is a nonzero square mod `p`.
pub fn scan_embedding_primes(
    require_mod4_3: bool,
    require_qr: &[i64],
    limit: u64,
) -> Vec<PrimePredicateReport> {
    primes_up_to(limit)
        .into_iter()
        .filter(|&p| p != 2)
        .map(|p| {
            let residues: Vec<_> = require_qr
                .iter()
                .map(|&a| (a, QrStatus::of(a, p).expect("odd prime")))
                .collect();
            let mod4_is_3 = p % 4 == 3;
            let passes = (!require_mod4_3 || mod4_is_3)
                && residues.iter().all(|(_, s)| *s == QrStatus::Residue);
            PrimePredicateReport {
                prime: p,
                mod4_is_3,
                residues,
                passes,
            }
        })
        .filter(|r| r.passes)
        .collect()
}
