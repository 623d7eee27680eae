use alloc::string::String;
use thiserror::Error;

/// Problems building a graph from raw vertex pairs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0} (pair ({0}, {0}))")]
    Loop(usize),
    #[error("pair ({u}, {v}) has an endpoint outside 0..{n}")]
    OutOfRange { u: usize, v: usize, n: usize },
    #[error("{0} vertices exceeds the limit of {max}", max = crate::MAX_VERTICES)]
    TooManyVertices(usize),
}

/// graph6 decoding and encoding failures. Offsets are byte positions in the
/// input line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("bit field truncated: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("header mismatch at offset {offset}: {reason}")]
    Header { offset: usize, reason: &'static str },
    #[error("{extra} trailing bytes after offset {offset}")]
    Trailing { offset: usize, extra: usize },
    #[error("nonzero padding bits in the final byte at offset {offset}")]
    Padding { offset: usize },
    #[error("multigraph not representable in graph6")]
    Multigraph,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("unknown catalog name {name:?}; valid names: {valid}")]
    UnknownName { name: String, valid: String },
}
