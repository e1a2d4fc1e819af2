//! Exact symbolic toolkit for finite-dimensional spaces of holomorphic 1-form
//! germs, represented by polynomial-coefficient forms over ℚ.
//!
//! The crate computes ranks and integrability varieties `I_W`, builds the
//! rational normal curve through `n + 3` general points by Steiner's pencil
//! construction, checks that such curves consist of integrable forms, and
//! covers two sources of examples: left-invariant forms on Lie groups (via the
//! Chevalley–Eilenberg differential) and finite Godbillon–Vey developments.
//!
//! All arithmetic is exact; there is no tolerance anywhere.

pub mod algebra;
pub mod error;
pub mod exterior;
pub mod fixtures;
pub mod formspace;
pub mod gv;
pub mod lie;
pub mod steiner;
pub mod testkit;

pub use algebra::{BiForm, MPoly, Monomial, Rational};
pub use error::{Error, Result};
pub use exterior::{PForm, PVectorField};
pub use formspace::{CurveParam, FormSpace, QuadricSystem};
