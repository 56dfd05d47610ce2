use thiserror::Error;

/// Errors surfaced by the public API. Internal invariant violations
/// (e.g. a corrupt multiplication table) panic instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    Dimension {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("module type ({n},{k}) exceeds the configured cap {cap}")]
    TypeTooLarge { n: usize, k: usize, cap: usize },

    #[error("module of type ({n},{k}) is not cyclic: no single generator exists")]
    NotCyclic { n: usize, k: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
