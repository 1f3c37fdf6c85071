//! Betti tables and the resolution-based property checks.

mod betti;
mod properties;
mod sequential;

pub use betti::{
    betti_koszul, betti_taylor, betti_taylor_bounded, lcm_lattice, quotient_module_betti,
    upper_koszul_complex, BettiTable, TAYLOR_GENERATOR_BOUND,
};
pub use properties::{
    degree_component, depth_ab, has_linear_resolution, is_componentwise_linear, is_gorenstein,
    is_level, last_shifts, projective_dimension, squarefree_component,
};
pub use sequential::{
    dimension_filtration, is_sequentially_cm, is_sequentially_cm_dual, layer_report,
    FiltrationLayer, IdealChain,
};
