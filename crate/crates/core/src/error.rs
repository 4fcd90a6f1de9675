use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("unsupported Coxeter label m = {0} (supported: 2, 3, 4, 6, inf)")]
    UnsupportedLabel(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown generator label {0:?}")]
    UnknownLabel(String),

    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),

    #[error("roots {0} and {1} share a wall")]
    SameWall(String, String),

    #[error("reflection order anomaly: 4c^2 = {0} is below 4 but matches no finite order")]
    OrderAnomaly(String),

    #[error("pair {{{0}, {1}}} is not prenilpotent")]
    NotPrenilpotent(String, String),

    #[error("no chamber found within length {bound}")]
    ChamberNotFound { bound: usize },

    #[error("gallery index out of range: [{i}, {j}] with gallery length {len}")]
    IndexOutOfRange { i: usize, j: usize, len: usize },

    #[error("gallery does not lie in a rank-2 residue: {0}")]
    NotRankTwo(String),

    #[error("degenerate pair: {0} and {1} are equal or opposite")]
    DegeneratePair(String, String),

    #[error("not a generalized Cartan matrix: {0}")]
    NotGcm(String),

    #[error("vector is not a root of the basis: {0}")]
    NotARoot(String),

    #[error("invalid root basis: {0}")]
    InvalidBasis(String),

    #[error("invalid relation family: {0}")]
    InvalidFamily(String),

    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by a violated operation precondition rather than
    /// bad input syntax or an internal failure.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::NotPrenilpotent(..)
                | Error::DegeneratePair(..)
                | Error::SameWall(..)
                | Error::ChamberNotFound { .. }
                | Error::InvalidFamily(_)
                | Error::IndexOutOfRange { .. }
                | Error::NotRankTwo(_)
        )
    }
}
