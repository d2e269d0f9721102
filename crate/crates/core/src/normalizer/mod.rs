//! The normalizing series `g(u)`: the f-route, the layer recursion as an
//! independent oracle, and the rational limit `ḡ`.

mod appendix;
mod fcoeffs;
mod froute;
mod gbar;
mod relations;
#[cfg(test)]
mod tests;

pub use appendix::{antiderivative_in_basis, appendix_layers, solve_g_appendix_a, AppendixA, ZFrac};
pub use fcoeffs::{b_value_at_one, check_b_regularity, solve_f, FCoeffs, FractionJson};
pub use froute::{build_gtilde, solve_g_froute, symmetrize_g, GSeries};
pub use gbar::{check_highest_component, g_rat_series, gbar_residual, solve_gbar_rational};
pub use relations::{
    check_difference_equation, check_display, check_equal, check_product_identity, check_unitarity_g,
    check_vanishes, display_layers, verify_g_relations,
};
