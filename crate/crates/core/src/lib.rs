//! Exact unit-distance graphs over finite fields and quadratic or
//! biquadratic number fields, certified chromatic numbers, and total
//! coloring oracles for planes over number fields obtained by reduction
//! modulo a prime.

pub mod catalog;
pub mod chromatic;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod numtheory;
pub mod reduction;

pub use error::{Error, Result};
