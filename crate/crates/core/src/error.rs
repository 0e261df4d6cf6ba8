use num_complex::Complex64;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("point {0} lies outside the closed unit disk")]
    Domain(Complex64),

    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("constant term {0} is too close to zero to invert")]
    NearZeroConstant(Complex64),

    #[error("coefficient {0} is not finite")]
    NonFinite(usize),

    #[error("truncation order must be at least 1")]
    ZeroOrder,

    #[error("map is not normalized: {0}")]
    NotNormalized(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("degenerate curve: samples {0} and {1} coincide")]
    DegenerateCurve(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{input} is not in {class} (max residual {residual:.3e})")]
    ClassMembership {
        input: String,
        class: String,
        residual: f64,
    },

    #[error("{curve}: {source}")]
    Curve {
        curve: String,
        #[source]
        source: Box<Error>,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
