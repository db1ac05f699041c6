use thiserror::Error;

/// Errors raised by the library.
///
/// Validators are report-valued and never return these for a failed check;
/// errors signal malformed input or a violated precondition.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown cell `{0}`")]
    UnknownCell(String),

    #[error("operation `{op}` needs a signed coefficient ring, got {ring}")]
    RingCapability { op: &'static str, ring: &'static str },

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("invalid globular set: {0}")]
    InvalidGlobular(String),

    #[error("invalid globular map: {0}")]
    InvalidMap(String),

    #[error("not a coalgebra map: {0}")]
    NotCoalgebraMap(String),

    #[error("not a coalgebra map between group-like coalgebras: image of `{cell}` is {image}")]
    Dichotomy { cell: String, image: String },

    #[error("cell `{0}` is not group-like")]
    NotGroupLike(String),

    #[error("degenerate cell `{0}` has no coproduct in the normalized chains")]
    DegenerateCell(String),

    #[error("elements are not composable at level {level}: {detail}")]
    NotComposable { level: usize, detail: String },

    #[error("closure bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
