use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("frame must contain at least one label")]
    EmptyFrame,
    #[error("duplicate label {0:?} in frame")]
    DuplicateLabel(String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("operands belong to different frames")]
    FrameMismatch,
    #[error("invalid mass {value} for focal set {set}")]
    InvalidMass { set: String, value: f64 },
    #[error("invalid weight of evidence {0}")]
    InvalidWeight(f64),
    #[error("body carries no mass")]
    NoEvidence,
    #[error("body is not normalized (total mass {0})")]
    NotNormalized(f64),
    #[error("open-world body (m(empty) = {0}); use the smets rule to retain conflict")]
    OpenWorld(f64),
    #[error("total conflict, Dempster undefined")]
    TotalConflict,
    #[error("focal set {0} is not a singleton")]
    NotBayesian(String),
    #[error("reliability {0} outside [0, 1]")]
    InvalidReliability(f64),
    #[error("a testimony chain needs at least one testimony")]
    EmptyChain,
    #[error("threshold {0} outside (0, 1)")]
    InvalidThreshold(f64),
    #[error("invalid coarsening: {0}")]
    InvalidCoarsening(String),
    #[error("invalid refinement: {0}")]
    InvalidRefinement(String),
    #[error("hyperedges must be non-empty")]
    EmptyEdge,
    #[error("set is not contained in the hypothesis region")]
    OutsideRegion,
    #[error("invalid p-box: {0}")]
    InvalidPBox(String),
    #[error("invalid interval list: {0}")]
    InvalidIntervals(String),
    #[error("invalid probability bounds for {label}: lower {lower}, upper {upper}")]
    InvalidBounds { label: String, lower: f64, upper: f64 },
    #[error("malformed input: {0}")]
    Parse(String),
}
