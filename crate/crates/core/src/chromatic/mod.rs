//! Exact chromatic numbers with certificates: DSATUR upper bounds, clique
//! and odd-cycle lower bounds, exhaustive k-colorability, structure probes
//! and an independent certificate checker.

pub mod audit;
mod brute;
mod chi;
mod clique;
mod coloring;
mod dsatur;
mod probe;
mod search;

pub use brute::{brute_force_chi, BRUTE_FORCE_MAX_N};
pub use chi::{chi_exact, chi_exact_with, ChiCertificate, ChiOutcome, LowerWitness};
pub use clique::{clique_lower, is_clique, max_clique, CLIQUE_NODE_BUDGET};
pub use coloring::{verify_coloring, Coloring};
pub use dsatur::dsatur_upper;
pub use probe::{
    is_odd_cycle, odd_cycle, shortest_odd_cycle, structure_probe, triangle_count, StructureReport,
};
pub use search::{
    k_colorable, k_colorable_with, SearchOptions, SearchOutcome, SearchReport, MAX_SEARCH_COLORS,
};
