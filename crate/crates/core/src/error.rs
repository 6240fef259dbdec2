use thiserror::Error;

use crate::measures::FunctionClass;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("truncation order must be at least {required}, got {got}")]
    TruncationTooShort { required: usize, got: usize },

    #[error("coefficient sequence is empty")]
    EmptySeries,

    #[error("series is not normalized (expected a_0 = 0, a_1 = 1)")]
    NotNormalized,

    #[error("expected a unimodular complex number, got modulus {modulus}")]
    NotUnimodular { modulus: f64 },

    #[error("index n must be at least 2, got {0}")]
    IndexTooSmall(usize),

    #[error("point z = {re} + {im}i lies outside the open unit disk")]
    OutsideDisk { re: f64, im: f64 },

    #[error("radius {0} is not in the open interval (0, 1)")]
    RadiusOutOfRange(f64),

    #[error("at least {min} samples are required, got {got}")]
    TooFewSamples { min: usize, got: usize },

    #[error("invalid radius schedule: {0}")]
    InvalidRadii(String),

    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error("class {0} has no measure representation")]
    NoMeasureRepresentation(FunctionClass),

    #[error("lambda must be positive, got {0}")]
    NonPositiveLambda(f64),

    #[error("lambda = {lambda} is outside the range {interval} where the bound for {class} holds")]
    LambdaOutOfRange {
        class: FunctionClass,
        lambda: f64,
        interval: String,
    },

    #[error(
        "mass assignment violates the parity condition: odd-index sum {odd_sum}, even-index sum {even_sum} (both must be 1/2)"
    )]
    ParityViolation { odd_sum: f64, even_sum: f64 },

    #[error("invalid mass assignment: {0}")]
    InvalidAssignment(String),

    #[error("witness does not match class {0}")]
    WitnessMismatch(FunctionClass),

    #[error("invalid optimizer configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid grid resolution {0} (must be at least 10)")]
    InvalidResolution(usize),

    #[error("cannot format a report with no rows")]
    EmptyReport,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
