use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("symbol `{0}` is outside the symbol table")]
    SymbolOutOfTable(String),
    #[error("no value assigned to `{0}`")]
    MissingAssignment(String),
    #[error("`{0}` is assigned zero but appears with a negative power")]
    ZeroToNegativePower(String),
    #[error("not divisible: {0}")]
    NotDivisible(String),
    #[error("cannot normalize: {0}")]
    Normalization(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error("genericity failure: {0}")]
    Genericity(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}
