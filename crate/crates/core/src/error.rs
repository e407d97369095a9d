use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("mass must be positive and finite, got {0}")]
    NonPositiveMass(f64),
    #[error("momentum magnitude must be non-negative and finite, got {0}")]
    NegativeMomentum(f64),
    #[error("polar angle {0} outside [0, π]")]
    ThetaOutOfRange(f64),
    #[error("azimuth must be finite, got {0}")]
    NonFiniteAzimuth(f64),
    #[error("index {index} out of range for {what}")]
    IndexOutOfRange { what: &'static str, index: usize },
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("linear system is singular")]
    Singular,
    #[error("transformed state of {input} is not proportional to any basis state")]
    NoMatch { input: String },
    #[error("transformed state of {input} matches more than one basis state")]
    AmbiguousMatch { input: String },
    #[error("invalid suite configuration: {0}")]
    InvalidConfig(String),
}
