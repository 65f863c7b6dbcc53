pub mod model;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid size: {0}")]
    InvalidSize(String),
}

pub type Result<T> = std::result::Result<T, Error>;
