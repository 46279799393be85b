use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("expected an odd prime, got {0}")]
    NotOddPrime(u64),
    #[error("{0} is not a valid squarefree radicand")]
    BadRadicand(i64),
    #[error("invalid biquadratic field ({0}, {1}): need distinct squarefree integers > 1")]
    BadBiquadField(i64, i64),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{n} is not a quadratic residue mod {p}")]
    NonResidue { n: String, p: u64 },
    #[error("residue rule only supports a = 3 or a = 11, got {0}")]
    UnsupportedResidue(i64),
    #[error("{q} divides {a}: ramified, no residue rule applies")]
    Ramified { a: i64, q: u64 },
    #[error("valuation precondition failed: {0}")]
    ValuationPrecondition(String),
    #[error("p-adic precision cap of {cap} digits exceeded")]
    PrecisionCap { cap: u64 },
    #[error("literal parse error at byte {pos}: expected {expected}")]
    Parse { pos: usize, expected: String },
    #[error("literal {literal} does not belong to field {field}")]
    NotInField { literal: String, field: String },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("invalid quadratic form: {0}")]
    BadForm(String),
    #[error("size {size} exceeds budget {budget}")]
    Budget { size: u128, budget: u128 },
    #[error("points mix scalar fields ({0} and {1})")]
    MixedScalars(String, String),
    #[error("1 + t^2 vanishes; no circle point for this parameter")]
    CircleSingular,
    #[error("vector is not on the unit circle")]
    NotUnit,
    #[error("points are not at unit distance")]
    NotUnitDistance,
    #[error("invalid graph: {0}")]
    Graph(String),
    #[error("coloring has {got} entries for {n} vertices")]
    PartialColoring { n: usize, got: usize },
    #[error("graph has {0} vertices; brute force is limited to 12")]
    TooLarge(usize),
    #[error("coordinate {index} is not integral at the prime (valuation {valuation})")]
    NotIntegral { index: usize, valuation: String },
    #[error("invalid prime specification: {0}")]
    BadPrimeSpec(String),
    #[error("point outside oracle domain: {0}")]
    OutsideDomain(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("certificate: {0}")]
    Certificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
