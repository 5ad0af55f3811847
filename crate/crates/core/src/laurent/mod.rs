//! Sparse Laurent polynomials, exponent vectors, basis changes and local
//! systems.

mod basis;
mod exponent;
mod poly;
mod twist;
mod vars;

pub use basis::UnimodularMatrix;
pub use exponent::Exponent;
pub use poly::LaurentPoly;
pub use twist::TwistData;
pub use vars::Vars;
