//! Matrices on tensor powers of `C^n` over a pluggable coefficient ring.

mod perm;
mod ring;
mod tensor;

pub use perm::{
    all_perms, all_reduced_words, cycle_word, diag_d, diag_d_product, h_permutation, length,
    perm_action, perm_of_word, reduced_word, std_perm_action, std_permutation, Perm,
};
pub use ring::RingElem;
pub use tensor::{Slot, TensorMatrix};

#[cfg(test)]
mod tests;
