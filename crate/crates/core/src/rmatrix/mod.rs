//! The trigonometric R-matrix: construction and verification.

mod build;
mod verify;

pub use build::{
    build_r, build_r1p, build_r2p, d_series, expand_matrix, r1p_with, r2p_with, RMatrixBundle,
};
pub use verify::{
    check_exact_zero, check_matrix_equal, check_matrix_vanishes, crossing_residuals, flip, gbar_series,
    grade_highest_component, r_rational, series_matrix_inverse, unitarity_residual, verify_crossing,
    verify_rational_limit, verify_unitarity, verify_ybe, ybe_residual,
};

#[cfg(test)]
mod tests;
