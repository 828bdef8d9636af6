use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rational `{0}`")]
    InvalidRational(String),

    #[error("{0} and {1} are not Farey neighbors")]
    NotFareyNeighbors(String, String),

    #[error("{0} is not a complementary triangle of the Farey tessellation")]
    NotFareyTriangle(String),

    #[error("invalid triangle address: {0}")]
    InvalidAddress(String),

    #[error("invalid chain at position {position}: {reason}")]
    InvalidChain { position: usize, reason: String },

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("map is not orientation preserving: {0}")]
    NonMonotone(String),

    #[error("vertex {vertex} needs shear data beyond depth {depth}")]
    BeyondDepth { vertex: String, depth: u32 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("empty window")]
    EmptyWindow,

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("{0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for failures caused by floating-point degeneracy rather than
    /// malformed input. A non-monotone map is an input error.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::Degenerate(_))
    }
}
