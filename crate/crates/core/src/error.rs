use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("inadmissible root system type {family}{rank}")]
    InadmissibleType { family: char, rank: usize },

    #[error("cannot parse type label {0:?}")]
    BadTypeLabel(String),

    #[error("cannot parse root coordinates {0:?}")]
    BadCoordinates(String),

    #[error("{0} is not a positive root of {1}")]
    UnknownRoot(String, String),

    #[error("root index {0} out of range")]
    IndexOutOfRange(usize),

    #[error("root {0} is not simple")]
    NotSimple(String),

    #[error("root {0} is not in the ideal")]
    NotInIdeal(String),

    #[error("{{{0}}} is not an order ideal")]
    NotAnIdeal(String),

    #[error("{0} is not a positive root")]
    NotARoot(String),

    #[error("roots {0} and {1} are parallel")]
    ParallelRoots(String, String),

    #[error("certificate is not a supersolving partition: {0}")]
    NotSupersolving(String),

    #[error("predicates disagree on ideal [{ideal}]: {detail}")]
    EquivalenceViolation { ideal: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
