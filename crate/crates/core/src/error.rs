use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative scalar {0}")]
    NegativeScalar(String),
    #[error("{what} must be positive, got {value}")]
    NonPositive { what: &'static str, value: String },
    #[error("{target} is not in the product {product}")]
    NotInProduct { target: String, product: String },
    #[error("a compact-topology neighbourhood needs at least one top")]
    EmptyTops,
    #[error("malformed certificate: {0}")]
    MalformedCert(String),
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
}
