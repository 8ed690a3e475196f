use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error(transparent)]
    Core(#[from] bicyclic_core::Error),
}
