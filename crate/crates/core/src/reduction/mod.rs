//! Reduction of number-field points modulo a prime: anisotropy scans,
//! residue maps, coset representatives, and the coloring oracles built
//! from them.

mod anisotropy;
mod hom;
mod oracle;
mod reducible;
pub mod sample;
mod spec;

pub use anisotropy::{anisotropic_fp, anisotropic_mod_p2, ANISOTROPY_BUDGET};
pub use hom::{edge_integrality_check, reduce_graph_hom, reduce_point, HomReport};
pub use oracle::{color_oracle, color_oracle_text, OracleId, OracleTrace};
pub use reducible::{class_representative, Reducible};
pub use sample::{oracle_soundness, SoundnessReport};
pub use spec::{PrimeKind, PrimeSpec};
