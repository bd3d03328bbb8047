use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(String),
    #[error("repeated edge {0} -- {1}")]
    RepeatedEdge(String, String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("malformed rotation system: {0}")]
    Rotation(String),
    #[error("rotation system is not a sphere embedding: {0}")]
    NotGenusZero(String),
    #[error("graph is disconnected: {0}")]
    Disconnected(String),
    #[error("face is not a simple cycle: {0}")]
    NonPolyhedral(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("graph is not planar")]
    NotPlanar,
    #[error("search result is not a certificate: {0}")]
    NotFound(String),
    /// A constructor produced an object that failed its own post-check.
    #[error("internal construction error: {0}")]
    Internal(String),
    #[error("excess mismatch: counted {counted}, predicted {predicted}")]
    ExcessMismatch { counted: i64, predicted: i64 },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
