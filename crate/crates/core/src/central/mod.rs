//! Central series in evaluation representations: centrality under the
//! `L₀`-action, commutation, `h`-regularity of `Θ_m` and classical limits.

mod centrality;
mod classical;
mod commute;
mod exact;
mod rep;
mod series;
#[cfg(test)]
mod tests;

pub use centrality::{
    centrality_residual, check_bi_vanishes, BiEntry, l0_factors, verify_centrality, CentralityResidual, L0Factors, L0_SLOT,
};
pub use classical::{
    classical_word, compare_symbol, qdet_bar, theta_bar, verify_qdet_classical, verify_theta_classical,
};
pub use commute::{commutator, verify_commute, verify_pairwise_commute};
pub use exact::{verify_at_exact, verify_comm1_exact, verify_rtt_exact, ExactRep};
pub use rep::{AuxKind, TruncRep, AUX, AUX2};
pub use series::{
    big_theta, contract, kernel, low_h_witness, series_value, signed_kernel, theta, theta_combination,
    verify_h_valuation, Kernel, SeriesId,
};
