use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("y^2 differs from exp(2πi·λ): {0}")]
    SquareMismatch(String),
    #[error("y must lie in the non-identity component of the L-group")]
    NotInNonIdentityComponent,
    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),
    #[error("normalization violated: {0}")]
    NormalizationViolated(String),
    #[error("unsupported geometry: {0}")]
    UnsupportedGeometry(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("block mismatch: {0}")]
    BlockMismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("SL(2) image does not centralize ψ(ℂ×): {0}")]
    SL2NotInLevi(String),
    #[error("no unipotent fixture: {0}")]
    UnsupportedFixture(String),
    #[error("empty input: {0}")]
    EmptyInput(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// The variant name, echoed by the command line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::SquareMismatch(_) => "SquareMismatch",
            Error::NotInNonIdentityComponent => "NotInNonIdentityComponent",
            Error::UnsupportedGroup(_) => "UnsupportedGroup",
            Error::NormalizationViolated(_) => "NormalizationViolated",
            Error::UnsupportedGeometry(_) => "UnsupportedGeometry",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::BlockMismatch(_) => "BlockMismatch",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::SL2NotInLevi(_) => "SL2NotInLevi",
            Error::UnsupportedFixture(_) => "UnsupportedFixture",
            Error::EmptyInput(_) => "EmptyInput",
            Error::Parse(_) => "Parse",
        }
    }
}
