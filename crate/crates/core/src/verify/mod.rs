//! Numerical certification on compact subdisks `|z| <= r_max < 1`.
//!
//! Conditions stated on the whole open disk are sampled on a [`DiskGrid`]
//! (or on one circle for the topological checks) and summarised in a
//! [`CheckReport`] whose margin is positive exactly when the check passes.

mod boundary;
mod grid;
mod pointwise;
mod report;
mod theorem;

pub use boundary::{
    check_convex_in_direction, check_univalent_boundary, probe_points, sample_circle, DEFAULT_RADIUS,
    DEFAULT_SAMPLES, MIN_CONVEXITY_SAMPLES, PLATEAU_TOL,
};
pub use grid::DiskGrid;
pub use pointwise::{
    check_fully_convex, check_marx_strohhacker, check_re_ratio_derivative, check_re_ratio_values,
    check_sense_preserving, check_silverman, jacobian_zero_on_ray, tangent_turning_rate, value_ratio,
    SilvermanReport, CONVEXITY_STEP, VANISHING,
};
pub use report::CheckReport;
pub use theorem::{run_theorem, Pipeline, TheoremSettings};
