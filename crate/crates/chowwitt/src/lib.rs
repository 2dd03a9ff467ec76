//! Exact computation of Chow-Witt rings and their companion theories for
//! projective spaces, classifying spaces of `G_m` and `mu_n`, and products.

pub mod error;
pub mod graded;
pub mod linalg;
pub mod scalar;
pub mod spaces;
pub mod stack;
pub mod report;
pub mod topo;

pub use error::{CwError, CwResult};
