use thiserror::Error;

/// Errors produced by the string, transform and measure operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty string has no rotations")]
    EmptyInput,

    #[error("index {index} out of range for length {len}")]
    OutOfRange { index: usize, len: usize },

    #[error("omega-order undefined for this pair")]
    OmegaUndefined,

    #[error("not a BWT image")]
    NotBwtImage,

    #[error("symbol {0:?} outside the morphism domain")]
    SymbolOutsideDomain(char),

    #[error("invalid macro scheme: {0}")]
    InvalidScheme(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn non_empty(x: &[u8]) -> Result<()> {
    if x.is_empty() {
        Err(Error::EmptyInput)
    } else {
        Ok(())
    }
}
