use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weights do not sum to zero (trace {0})")]
    Trace(i64),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("shape mismatch: expected {expected}, got {got}")]
    Shape { expected: usize, got: usize },
    #[error("outside domain: {0}")]
    Domain(String),
    #[error("budget exceeded: {what} needs {needed}, cap is {cap}")]
    Budget { what: String, needed: usize, cap: usize },
    #[error("invalid fan: {0}")]
    Fan(String),
    #[error("inconsistent surface model: {0}")]
    Model(String),
    #[error("missing chart data: {0}")]
    Chart(String),
    #[error("S-invariant is not linear in c: {0}")]
    Nonlinearity(String),
    #[error("fixed-point valuations disagree: {0}")]
    Consistency(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Budget { .. } => 3,
            Error::Model(_) | Error::Nonlinearity(_) | Error::Consistency(_) => 4,
            _ => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Error::Trace(_) => "TraceError",
            Error::Degenerate(_) => "DegenerateError",
            Error::Shape { .. } => "ShapeError",
            Error::Domain(_) => "DomainError",
            Error::Budget { .. } => "BudgetExceededError",
            Error::Fan(_) => "FanError",
            Error::Model(_) => "ModelError",
            Error::Chart(_) => "ChartError",
            Error::Nonlinearity(_) => "NonlinearityError",
            Error::Consistency(_) => "ConsistencyError",
            Error::Parse(_) => "ParseError",
        }
    }
}

pub(crate) fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::Shape { expected, got })
    }
}
