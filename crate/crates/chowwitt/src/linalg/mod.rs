//! Exact linear algebra over the integers.

pub mod group;
pub mod matrix;
pub mod snf;
pub mod sparse;

pub use group::{fiber_product, isomorphic, FpAbGroup, GroupHom, GroupType};
pub use matrix::{big, big_vec, IntMatrix};
pub use snf::{hermite_basis, left_kernel, smith_normal_form, solve_in_hermite, Snf};
