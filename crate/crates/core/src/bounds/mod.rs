//! Constructive lower bounds on |d·Had ∩ ℤⁿ|: certificate families for small
//! d, hypercube sampling for large d, and the regime selector tying them
//! together.

pub mod case1;
pub mod case3;
pub mod regime;

pub use case1::{
    admissible_dims, case1_count_lower_bound, case1_enumerate_families, case1_verify_injectivity,
    Case1Count, Case1Families, Case1Family, InjectivityReport, DEFAULT_FAMILY_BUDGET,
};
pub use case3::{
    case3_lower_bound_value, case3_sample_density, draw_support, hoeffding_bound,
    hoeffding_condition, Case3Bound, DensityEstimate, HypercubeSpec,
};
pub use regime::{classify, theorem1_bound, BoundReport, Regime};
