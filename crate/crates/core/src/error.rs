use thiserror::Error;

/// Which generalized-Cartan-matrix axiom failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    Square,
    Diagonal,
    OffDiagonalSign,
    ZeroSymmetry,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Axiom::Square => "matrix must be square and non-empty",
            Axiom::Diagonal => "a_ii = 2",
            Axiom::OffDiagonalSign => "a_ij <= 0 for i != j",
            Axiom::ZeroSymmetry => "a_ij = 0 iff a_ji = 0",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("axiom violated at ({i}, {j}): {axiom}")]
    AxisViolation { i: usize, j: usize, axiom: Axiom },
    #[error("unknown or illegal type: {0}")]
    UnknownType(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("algebra tag mismatch: {0} vs {1}")]
    TagMismatch(String, String),
    #[error("matrix does not lie in {0}")]
    NotInAlgebra(String),
    #[error("unsupported algebra: {0}")]
    UnsupportedAlgebra(String),
    #[error("diagram automorphisms of order {0} are not supported")]
    UnsupportedOrder(u8),
    #[error("unsupported type: {0}")]
    UnsupportedType(String),
    #[error("illegal involution: {0}")]
    IllegalSpec(String),
    #[error("map is not involutive on the given span")]
    NotInvolutive,
    #[error("payload is not nilpotent")]
    NotNilpotent,
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("rotation must have modulus one")]
    BadRotation,
    #[error("loop does not satisfy the compact reality condition")]
    NotCompact,
    #[error("monodromy drifted from the unitary group by {0:e}")]
    NonUnitaryDrift(f64),
    #[error("element is not in the span of the split")]
    NotInSpan,
    #[error("degenerate plane spanned by two null vectors")]
    BothNull,
    #[error("vectors are linearly dependent")]
    Dependent,
    #[error("no OSAKA sign pattern matches the Gram matrix")]
    Unclassifiable,
    #[error("empty slice: {0}")]
    EmptySlice(String),
}

pub type Result<T> = std::result::Result<T, Error>;
