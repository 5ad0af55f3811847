//! Exact algebra for Landau-Ginzburg potentials of monotone Lagrangian tori.
//!
//! The kernel is [`LaurentPoly`], a sparse Laurent polynomial with exact
//! rational or Gaussian-rational coefficients. On top of it sit
//!
//! - [`struct_const`]: structure constants from families of higher potentials,
//! - [`twisted`]: the twisted Koszul complex of a torus local system,
//! - [`algebra`]: localized polynomial algebras and closed-open style ring maps,
//! - [`wallcross`]: wall-crossing identities under monomial-binomial substitutions,
//! - [`expr`]: the expression language used by the `lgpot` binary.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod expr;
pub mod json;
pub mod laurent;
pub mod linalg;
pub mod scalar;
pub mod struct_const;
pub mod twisted;
pub mod wallcross;

pub use error::{Error, Result};
pub use laurent::{Exponent, LaurentPoly, TwistData, UnimodularMatrix, Vars};
pub use scalar::{Scalar, Tower};
