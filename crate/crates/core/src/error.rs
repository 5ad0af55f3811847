use num_bigint::BigInt;
use thiserror::Error;

use crate::expr::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable lists differ: {left:?} vs {right:?}")]
    VariableMismatch {
        left: Vec<String>,
        right: Vec<String>,
    },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid variable name {0:?}")]
    InvalidVariableName(String),
    #[error("duplicate variable name {0:?}")]
    DuplicateVariable(String),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("monodromy entry {index} is zero")]
    ZeroMonodromy { index: usize },
    #[error("matrix is not unimodular (determinant {det})")]
    NotUnimodular { det: BigInt },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("the zero polynomial has no support")]
    ZeroPolynomial,
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("expected a polynomial with nonnegative exponents")]
    NegativeExponent,
    #[error("linear system is inconsistent: no structure constants satisfy the identity")]
    Inconsistent,
    #[error("linear system is underdetermined (solution space of dimension {nullity})")]
    Underdetermined { nullity: usize },
    #[error("index {index} out of range (family has {len} entries)")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("invalid potential family: {0}")]
    InvalidFamily(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),
    #[error("invalid substitution map: {0}")]
    InvalidSubstitution(String),
    #[error("point lies outside the domain of the substitution (variable {index})")]
    OutsideDomain { index: usize },
    #[error("differential fails d∘d = 0 in degree {degree}")]
    NotAComplex { degree: usize },
    #[error(transparent)]
    Parse(#[from] ParseError),
}
