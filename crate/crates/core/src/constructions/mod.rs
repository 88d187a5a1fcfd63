//! Generators for projective-plane families, counterexamples and the
//! embedded extremal examples.

mod families;
mod field;
mod plane;
mod random;

pub use families::{
    biased_counterexample, construct_by_name, example_f6, example_f6_linear, example_f7,
    exponential_counterexample, one_factorization_instance, BIASED_MAX_R, CONSTRUCTION_NAMES,
    EXPONENTIAL_R_RANGE, F6_DIGITS, F6_LINEAR_DIGITS, F7_DIGITS,
};
pub use field::{finite_field, FiniteField, MAX_PRIME_ORDER};
pub use plane::{
    oval_points, oval_secant_subplane, projective_plane, truncated_projective_plane, ProjectivePlaneModel,
};
pub use random::{random_intersecting, random_line_subset, rng_from_seed, ATTEMPTS_PER_EDGE};
