//! Descriptors of the finite simple classical groups and their index calculus.

mod descriptor;
mod error;
mod index;
mod order;

pub use descriptor::{prime_power, Family, GroupDescriptor};
pub use error::{ModelError, Result};
pub use index::{
    delta_of, graph_indices, has_index_class, index_of_phi, is_valid_index, max_root_height,
    p_exponent, phi_dichotomy_holds, phi_of_index, valid_indices, IndexClass, IndexParity,
};
pub use order::{order_of, order_of_with};
pub use zsig_arith::Sign;
