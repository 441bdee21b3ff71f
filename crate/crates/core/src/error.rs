use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size {0} is outside 2..=256")]
    InvalidAlphabet(usize),

    #[error("symbol {symbol} is not in the alphabet of size {k}")]
    SymbolOutOfRange { symbol: usize, k: usize },

    #[error("requested length {requested} exceeds word length {len}")]
    LengthOutOfRange { requested: usize, len: usize },

    #[error("operation requires a binary alphabet, got k = {0}")]
    NonBinary(usize),

    #[error("{k}^{n} strings exceeds the resource cap of {cap}")]
    ResourceCap { k: usize, n: usize, cap: u64 },

    #[error("invalid construction: {0}")]
    InvalidSpec(String),

    #[error("got {cycles} cycles but {sets} sets")]
    Misaligned { cycles: usize, sets: usize },

    #[error("parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },
}
