use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("capability exceeded: {0}")]
    Capability(String),

    #[error("no bound mode: {0}")]
    NoBoundMode(String),

    #[error("numerical degeneracy: {0}")]
    Degenerate(String),

    #[error("resonance not found: {0}")]
    NotFound(String),

    #[error("solver failed to converge: {trace}")]
    Solver { trace: String },

    #[error("search failed: {0}")]
    SearchFailure(String),

    #[error("quadrature accuracy not reached: partial estimate {partial}")]
    Accuracy { partial: f64 },

    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
