//! Exact singularity analysis of rational plane curves.
//!
//! Given a parameterization of a plane curve by three homogeneous forms
//! (a : b : c) of common degree n, this crate computes a mu-basis of the
//! syzygy module, builds the associated resultant matrices, extracts the
//! singular factors d_k(t, u) from a Smith normal form over Q[t], and
//! verifies the factorization identities relating them to the conductor
//! polynomial Delta and to D-resultants. All arithmetic is exact over Q;
//! floating point only appears in the optional root display layer.

pub mod error;
pub mod input;
pub mod mubasis;
pub mod oracle;
pub mod pipeline;
pub mod polycore;
pub mod samples;
pub mod resmat;
pub mod singularity;
pub mod smithlab;

pub use error::{Error, Result};
pub use polycore::rat::Rat;
