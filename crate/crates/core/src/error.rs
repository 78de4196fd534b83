use thiserror::Error;

/// Errors raised by lattice construction, structure loading and the
/// derived-operation machinery.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate element name `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("order cycle between `{0}` and `{1}` (antisymmetry violated)")]
    CycleDetected(String, String),
    #[error("`{0}` and `{1}` have no greatest lower bound")]
    NoMeet(String, String),
    #[error("`{0}` and `{1}` have no least upper bound")]
    NoJoin(String, String),
    #[error("lattice has no {0} element")]
    NoBound(&'static str),
    #[error("pair (`{0}`, `{1}`) is not a cover although covers_only is set")]
    NotACover(String, String),
    #[error("lattice is empty")]
    EmptyLattice,
    #[error("lattice has {0} elements; explicit lattices are limited to {1}")]
    TooManyElements(usize, usize),
    #[error("operator table `{table}` is partial: no image for `{element}`")]
    PartialTable { table: String, element: String },
    #[error("structure has no complement table")]
    MissingComplement,
    #[error("tables belong to different lattices")]
    HostMismatch,
    #[error("granule references `{0}`, which is not in the universe")]
    GranuleOutOfUniverse(String),
    #[error("granulation has no granules")]
    EmptyGranulation,
    #[error("granulation is not a partition: {0}")]
    NonPartition(String),
    #[error("duplicate universe item `{0}`")]
    DuplicateItem(String),
    #[error("universe has {0} items; at most {1} are supported here")]
    UniverseTooLarge(usize, usize),
    #[error("unknown attribute `{0}`")]
    UnknownAttribute(String),
    #[error("malformed information table: {0}")]
    MalformedTable(String),
    #[error("malformed subset literal `{0}`")]
    BadSubsetLiteral(String),
    #[error("bias audit needs at least one case")]
    EmptyCaseList,
    #[error("case {0} has a zero sharp-measure denominator")]
    DegenerateDenominator(usize),
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("size bound {0} exceeds the supported maximum {1}")]
    BoundExceeded(usize, usize),
    #[error("unsupported format `{0}` for this report")]
    UnsupportedFormat(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::MalformedTable(e.to_string())
    }
}
