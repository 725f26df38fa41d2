//! Crate-wide error type with stable machine-readable codes.

use thiserror::Error;

/// All failure modes of the library. The CLI maps [`Error::code`] into the
/// `error.code` field of its JSON error output, so variant codes are stable.
#[derive(Debug, Error)]
pub enum Error {
    #[error("config parse error: {0}")]
    Parse(String),
    #[error("unknown function name: {0}")]
    UnknownFunctionName(String),
    #[error("missing or invalid field: {0}")]
    MissingField(String),
    #[error("constraint is not increasing: {0}")]
    NonIncreasingConstraint(String),
    #[error("bad Lipschitz bounds: {0}")]
    BadLipschitzBounds(String),
    #[error("drivers reading z require a linear constraint")]
    ZDriverNeedsLinearH,
    #[error("terminal constraint E[h(xi)] fails: {0}")]
    TerminalConstraintViolated(String),
    #[error("non-finite state: {0}")]
    NonFiniteState(String),
    #[error("tree too large: {0}")]
    TreeTooLarge(String),
    #[error("bracket failure in reflection offset: {0}")]
    BracketFailure(String),
    #[error("rank-deficient regression design: {0}")]
    RankDeficient(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("Picard iteration diverged: {0}")]
    PicardDivergence(String),
    #[error("assumption violated: {0}")]
    AssumptionViolated(String),
    #[error("unsupported model for this oracle: {0}")]
    UnsupportedModel(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("no oracle available: {0}")]
    OracleUnavailable(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-readable code for this error.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "ParseError",
            Error::UnknownFunctionName(_) => "UnknownFunctionName",
            Error::MissingField(_) => "MissingField",
            Error::NonIncreasingConstraint(_) => "NonIncreasingConstraint",
            Error::BadLipschitzBounds(_) => "BadLipschitzBounds",
            Error::ZDriverNeedsLinearH => "ZDriverNeedsLinearH",
            Error::TerminalConstraintViolated(_) => "TerminalConstraintViolated",
            Error::NonFiniteState(_) => "NonFiniteState",
            Error::TreeTooLarge(_) => "TreeTooLarge",
            Error::BracketFailure(_) => "BracketFailure",
            Error::RankDeficient(_) => "RankDeficient",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::PicardDivergence(_) => "PicardDivergence",
            Error::AssumptionViolated(_) => "AssumptionViolated",
            Error::UnsupportedModel(_) => "UnsupportedModel",
            Error::DegenerateInput(_) => "DegenerateInput",
            Error::OracleUnavailable(_) => "OracleUnavailable",
            Error::Io(_) => "IoError",
        }
    }

    /// True for errors caused by a bad config document rather than a
    /// runtime/numerical failure. The CLI exits with status 2 for these.
    pub fn is_config_error(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::UnknownFunctionName(_)
                | Error::MissingField(_)
                | Error::NonIncreasingConstraint(_)
                | Error::BadLipschitzBounds(_)
                | Error::ZDriverNeedsLinearH
                | Error::TerminalConstraintViolated(_)
        )
    }
}
