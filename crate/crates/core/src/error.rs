use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("index out of range: {0}")]
    Range(String),
    #[error("quaternion has a nonzero e3 component")]
    NotReduced,
    #[error("polynomial is not A-valued (nonzero e3 component)")]
    NotAValued,
    #[error("function is not monogenic: D f does not vanish")]
    NotMonogenic,
    #[error("function has a nonzero hyperholomorphic-constant part")]
    HyperholomorphicPart,
    #[error("operation needs exact coefficients")]
    NotExact,
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
