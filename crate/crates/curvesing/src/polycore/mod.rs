//! Exact rational and polynomial arithmetic: the foundation for everything else.
//!
//! Submodules:
//! - [`rat`]: arbitrary-precision rationals (thin layer over `num-rational`).
//! - [`unipoly`]: dense univariate polynomials over Q.
//! - [`bihom`]: dense homogeneous binary forms in a tagged variable pair.
//! - [`tripoly`]: sparse polynomials in the projective coordinates x1, x2, x3.
//! - [`moebius`]: invertible linear changes of coordinates on P^1.
//! - [`mat`]: generic dense matrices, exact linear algebra, determinants.
//! - [`roots`]: approximate complex roots (display layer only).

pub mod bihom;
pub mod mat;
pub mod moebius;
pub mod rat;
pub mod roots;
pub mod tripoly;
pub mod unipoly;

pub use bihom::{BiHomPoly, VarPair};
pub use mat::Mat;
pub use moebius::MoebiusChange;
pub use rat::Rat;
pub use tripoly::TriPoly;
pub use unipoly::UniPoly;
