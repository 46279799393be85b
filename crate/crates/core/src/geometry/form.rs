use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::{int, Scalar};

/// Diagonal quadratic form `q(x) = Σ c_i x_i²` with nonzero integer
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagForm {
    coeffs: Vec<i64>,
}

impl DiagForm {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::BadForm("no coefficients".into()));
        }
        if coeffs.contains(&0) {
            return Err(Error::BadForm("zero coefficient".into()));
        }
        Ok(DiagForm { coeffs })
    }

    pub fn euclidean(d: usize) -> Self {
        assert!(d >= 1, "dimension must be positive");
        DiagForm { coeffs: vec![1; d] }
    }

    /// `x1² - x2²`.
    pub fn lorentzian() -> Self {
        DiagForm {
            coeffs: vec![1, -1],
        }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// `q(x) mod p` for a vector of residues.
    pub fn eval_fp(&self, x: &[u64], p: u64) -> u64 {
        debug_assert_eq!(x.len(), self.dim());
        let p128 = p as u128;
        self.coeffs.iter().zip(x).fold(0u128, |acc, (&c, &xi)| {
            let c = c.rem_euclid(p as i64) as u128;
            let xi = xi as u128 % p128;
            (acc + c * (xi * xi % p128)) % p128
        }) as u64
    }

    pub fn eval<S: Scalar>(&self, x: &[S]) -> Result<S> {
        if x.len() != self.dim() {
            return Err(Error::Dimension {
                expected: self.dim(),
                got: x.len(),
            });
        }
        let mut acc = x[0].zero_like();
        for (c, xi) in self.coeffs.iter().zip(x) {
            acc = acc + xi.lift_rat(int(*c)) * xi.square();
        }
        Ok(acc)
    }
}

impl fmt::Display for DiagForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(i64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for DiagForm {
    type Err = Error;

    /// Comma-separated coefficients, e.g. `1,-1`.
    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::BadForm(format!("bad coefficient '{c}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        DiagForm::new(coeffs)
    }
}
