//! Unit-distance graphs over `F_p^d` and over explicit number-field point
//! sets, with the circle parametrization and the rotation normalizer.

mod exact_graph;
mod form;
pub(crate) mod fp;
mod graph;
mod point;

pub use exact_graph::{
    build_exact_graph, circle_param, is_unit_pair, lift_point, rotate_to_e1, Mat2,
};
pub use form::DiagForm;
pub use fp::{
    build_fp_graph, build_fp_graph_with_budget, fp_index, fp_label, fp_vector, unit_sphere_fp,
    DEFAULT_VERTEX_BUDGET,
};
pub use graph::UGraph;
pub use point::Point;
