//! The concrete constructions as named fixtures, and the claim suite that
//! checks them.

mod claims;
mod f11;
mod fixtures;
mod sqrt2;
mod units;
mod valuation;

pub use claims::{
    claims_table, claims_to_json, verify_paper, ClaimSource, ClaimStatus, PaperClaim, VerifyOptions,
};
pub use f11::{f11_coloring, F11_TABLE};
pub use fixtures::{
    c5_sqrt_neg5, c9_sqrt7, f11_canonical, fixture, lorentz_cycle, lorentz_four_cycle,
    moser_spindle, triangle_sqrt3, Fixture, PointFixture, PointSet, FIXTURE_NAMES,
};
pub use sqrt2::{Sqrt2Quotient, CLASS_NAMES, CORRECTED_FIRST_CLASS, PUBLISHED_FIRST_CLASS};
pub use units::UnitIdentity;
pub use valuation::{check_all as valuation_axioms, ValuationAxiomRow};
