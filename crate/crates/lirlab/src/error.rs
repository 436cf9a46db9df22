use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("bundle {u}-{v} has multiplicity {mult}, expected 1 or 2")]
    BadMultiplicity { u: usize, v: usize, mult: u8 },
    #[error("duplicate bundle {0}-{1}")]
    DuplicateBundle(usize, usize),
    #[error("coloring covers {got} bundles, graph has {expected}")]
    ColoringLength { expected: usize, got: usize },
    #[error("graph already has a doubled bundle")]
    AlreadyDoubled,
    #[error("no bundle with id {0}")]
    UnknownBundle(usize),
    #[error("edge {0}-{1} left uncolored")]
    Uncolored(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid parameters: {0}")]
    InvalidParameter(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("fixture {name}: {reason}")]
    Fixture { name: String, reason: String },
    #[error("construction failed: {0}")]
    Construction(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
