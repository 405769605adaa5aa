use thiserror::Error;

/// Errors raised by the library. Each variant maps onto one CLI exit code.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid {field}: {reason} (got {value})")]
    Parameter {
        field: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("invalid symbol {found:?} at position {position}: observations must be '0' or '1'")]
    Symbol { position: usize, found: char },

    #[error("sequence length {len} exceeds the limit of {max}")]
    Length { len: usize, max: usize },

    #[error("capacity exceeded: {what} ({requested} > {limit})")]
    Capacity {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("insufficient data: {len} symbols, block length {block_k} needs at least {needed}")]
    InsufficientData {
        len: usize,
        block_k: usize,
        needed: usize,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
