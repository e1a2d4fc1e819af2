use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("degree mismatch: expected a {expected}-form, got a {got}-form")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("index {index} out of range for {bound} variables")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("all entries are zero")]
    AllZero,
    #[error("forms are linearly dependent over the constants")]
    LinearlyDependent,
    #[error("points are not in general position: {0}")]
    GeneralPosition(String),
    #[error("rank of W is {rank} but dim W is {dim}")]
    RankDeficient { rank: usize, dim: usize },
    #[error("form #{0} is not integrable")]
    NotIntegrable(usize),
    #[error("form #{0} does not lie in the space")]
    NotInSpace(usize),
    #[error("structure constants are not antisymmetric at [{i},{j}]")]
    NotAntisymmetric { i: usize, j: usize },
    #[error("structure constants violate the Jacobi identity")]
    JacobiFailure,
    #[error("not a Godbillon-Vey sequence")]
    NotGodbillonVey,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
