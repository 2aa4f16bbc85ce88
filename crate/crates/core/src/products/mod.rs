//! Bilinear products on the tree bases, extended to linear combinations.

mod assoc;
mod dend;
mod trees;

pub use assoc::{assoc_concat, assoc_sym};
pub use dend::{dend_brace, dend_left, dend_left_basis, dend_right, dend_right_basis, dend_square, DendComb};
pub use trees::{nap_product, nap_product_trees, prelie_product, prelie_product_trees, sharp, TreeProduct};
