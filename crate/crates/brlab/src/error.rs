use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("fields live on different grids")]
    GridMismatch,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("insufficient quadrature coverage: {0}")]
    Coverage(String),
    #[error("quadrature did not converge: {0}")]
    Quadrature(String),
    #[error("certification failed: {0}")]
    Certification(String),
    #[error("sparsity violation: {0}")]
    Sparsity(String),
    #[error("uncovered point at index {index}: left side {left:e} with empty sparse majorant")]
    Uncovered { index: usize, left: f64 },
    #[error("empty family: {0}")]
    Empty(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("config error at line {line}: {msg}")]
    Config { line: usize, msg: String },
    #[error("csv parse error at line {line}: {msg}")]
    Csv { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
