use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid bit character {0:?} (expected '0' or '1')")]
    InvalidBit(char),

    #[error("row {0} is not a discrete interval for this geometry")]
    NotAnInterval(String),

    #[error("row statistics are undefined for the degenerate row {0}")]
    DegenerateRow(String),

    #[error("matrix violates the {0} regime")]
    RegimeViolation(&'static str),

    #[error("multiplicity of {0} must be at least 1")]
    ZeroMultiplicity(String),

    #[error("invalid interval: {0}")]
    InvalidInterval(String),

    #[error("interval {index} degenerates under the endpoint shift")]
    DegenerateInterval { index: usize },

    #[error("expected every interval to be {0}")]
    WrongEndpointType(&'static str),

    #[error("invalid sensor position: {0}")]
    InvalidSensor(String),

    #[error("sensor set must be nonempty")]
    NoSensors,

    #[error("size limit exceeded: {what} = {value} (max {max})")]
    SizeLimit { what: &'static str, value: usize, max: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
