//! Error functionals of the algorithm and the bounds they satisfy.
//!
//! For a function with mean `a` the error at probability level `p` is the
//! smallest `α` such that outcomes with `|a - ā(j)| ≤ α` carry probability at
//! least `p`. The worst-probabilistic error maximises it over all functions;
//! the average-probabilistic error averages it under a [`Measure`].
//!
//! [`Measure`]: crate::boolean::Measure

mod bounds;
mod calculus;
mod level;
mod sweep;

pub use bounds::{
    rounding_resolution, rounding_success_probability, wa4_upper_bound, wan4_lower_bound,
};
pub use calculus::{
    c_bound, g, h, linear_estimate, queries_for_epsilon, v, v_inverse, w, EpsilonPlan,
    EIGHT_OVER_PI2, FOUR_OVER_PI2,
};
pub use level::{error_at_level, error_at_level_for, LEVEL_SLACK};
pub use sweep::{
    avg_probabilistic_error, avg_probabilistic_error_with_beta, avg_record, class_error,
    worst_case_argmax, worst_case_bound, worst_probabilistic_error,
    worst_probabilistic_error_sampled, worst_record, BoundKind, BoundRef, ErrorRecord, Setting,
    DEFAULT_BETA,
};
