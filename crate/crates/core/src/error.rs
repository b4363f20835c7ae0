use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("inversion error: {0}")]
    Inversion(String),
    #[error("insufficient truncation: need order {needed}, have {available}")]
    Truncation { needed: usize, available: usize },
    #[error("degenerate system: {0}")]
    DegenerateSystem(String),
    #[error("configuration mismatch: {0}")]
    ConfigMismatch(String),
    #[error("degenerate configuration: {0}")]
    DegenerateConfig(String),
    #[error("singular point: {0}")]
    SingularPoint(String),
    #[error("solver failure: {0}")]
    Solver(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
