use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("bad rational {0:?}")]
    BadRational(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("Jacobi identity fails for basis triple ({i}, {j}, {k}); residual {residual}")]
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        residual: String,
    },

    #[error("point does not lie on the affine subspace")]
    NotOnSubspace,

    #[error("subspace is not contained in the target subspace")]
    NotContained,

    #[error("{0} is not a Lie subalgebra")]
    NotSubalgebra(String),

    #[error("complement check failed: {0}")]
    NotComplement(String),

    #[error("rank of TC + ♯N*C is not constant along C: {0}")]
    RankNotConstant(String),

    #[error("♯N* of the extension is not certified constant")]
    ConstancyNotCertified,

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Mathematical refusals, as opposed to malformed input.
    pub fn is_refusal(&self) -> bool {
        matches!(
            self,
            Error::RankNotConstant(_)
                | Error::ConstancyNotCertified
                | Error::NotSubalgebra(_)
                | Error::NotComplement(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Malformed(e.to_string())
    }
}
