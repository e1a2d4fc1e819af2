//! Exact coefficient arithmetic: rationals, sparse multivariate polynomials,
//! binary forms in `(s, t)` and small dense linear algebra over ℚ.

mod biform;
pub mod linalg;
mod mpoly;
mod normalize;
mod rational;

pub use biform::BiForm;
pub use mpoly::{MPoly, Monomial};
pub use normalize::{primitive_normalize, Projective};
pub use rational::{int, parse_rational, rat, serde_rational, Rational};
