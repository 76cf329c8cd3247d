use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Errors reported by the graph, algebra, and group operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    UnknownVertex(String),
    UnknownEdge(String),
    DuplicateVertex(String),
    DuplicateEdge(String),
    /// Contraction is only defined for non-loop edges.
    ContractLoop(String),
    NonSquare {
        rows: usize,
        cols: usize,
    },
    DimensionMismatch(String),
    /// `evaluate` was called without a value for a variable that occurs.
    MissingAssignment(String),
    /// A named hypothesis of a theorem checker failed.
    Hypothesis(String),
    NotStronglyConnected,
    NotEulerian,
    NotBalancedRegular,
    /// The relation lattice has a zero invariant factor.
    InfiniteGroup,
    /// Brute-force enumeration would exceed the configured cap.
    CapExceeded(String),
    InvalidParameter(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownVertex(v) => write!(f, "unknown vertex: {v}"),
            Error::UnknownEdge(e) => write!(f, "unknown edge: {e}"),
            Error::DuplicateVertex(v) => write!(f, "duplicate vertex id: {v}"),
            Error::DuplicateEdge(e) => write!(f, "duplicate edge id: {e}"),
            Error::ContractLoop(e) => write!(f, "cannot contract loop edge: {e}"),
            Error::NonSquare { rows, cols } => {
                write!(f, "matrix is not square: {rows}x{cols}")
            }
            Error::DimensionMismatch(d) => write!(f, "dimension mismatch: {d}"),
            Error::MissingAssignment(v) => {
                write!(f, "no value assigned to variable: {v}")
            }
            Error::Hypothesis(h) => write!(f, "hypothesis violated: {h}"),
            Error::NotStronglyConnected => write!(f, "graph is not strongly connected"),
            Error::NotEulerian => write!(f, "graph is not Eulerian"),
            Error::NotBalancedRegular => write!(f, "graph is not balanced k-regular"),
            Error::InfiniteGroup => write!(f, "quotient group is infinite"),
            Error::CapExceeded(d) => write!(f, "enumeration cap exceeded: {d}"),
            Error::InvalidParameter(d) => write!(f, "invalid parameter: {d}"),
        }
    }
}

impl core::error::Error for Error {}
