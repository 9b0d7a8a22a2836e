use alloc::string::String;
use core::fmt;

/// Errors raised by construction, conversion, and metric operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A relation member is not a valid node id for the structure.
    NodeOutOfBounds { node: u32, n: u32 },
    /// A relation must contain at least one node.
    EmptyRelation,
    /// Graph construction saw a relation whose cardinality is not 2.
    NotDyadic { row: usize, cardinality: usize },
    /// Face enumeration produced more distinct faces than the cap allows.
    FaceCapExceeded { cap: usize },
    /// Maximal-clique enumeration produced more cliques than the cap allows.
    CliqueCapExceeded { cap: usize },
    /// The complex dimension exceeds the requested maximum dimension.
    DimensionCapExceeded { dimension: usize, max_dim: usize },
    /// The structure has no relations where at least one is required.
    EmptyStructure,
    /// A hyperedge index is out of range.
    HyperedgeOutOfBounds { index: usize, len: usize },
    /// Extra overlap requires two distinct hyperedge indices.
    SameHyperedge { index: usize },
    /// Average path length is undefined without a connected node pair.
    NoConnectedPair,
    /// The two input sequences have different lengths.
    LengthMismatch { left: usize, right: usize },
    /// Too few samples for the statistic.
    TooFewSamples { n: usize },
    /// A rank correlation input has no variance.
    ZeroVariance,
    /// A path set must contain at least one path.
    EmptyPathSet,
    /// Paths must contain at least two entries.
    PathTooShort { path: usize, len: usize },
    /// Higher-order network order must be at least 1.
    ZeroOrder,
    /// A label is not known to the label map.
    UnknownLabel(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NodeOutOfBounds { node, n } => {
                write!(f, "node id {node} out of bounds for node count {n}")
            }
            Error::EmptyRelation => write!(f, "relation must contain at least one node"),
            Error::NotDyadic { row, cardinality } => write!(
                f,
                "relation {row} has cardinality {cardinality}, expected exactly 2 for a graph edge"
            ),
            Error::FaceCapExceeded { cap } => {
                write!(f, "face enumeration exceeded cap of {cap} faces")
            }
            Error::CliqueCapExceeded { cap } => {
                write!(f, "maximal-clique enumeration exceeded cap of {cap} cliques")
            }
            Error::DimensionCapExceeded { dimension, max_dim } => write!(
                f,
                "complex dimension {dimension} exceeds requested maximum dimension {max_dim}"
            ),
            Error::EmptyStructure => write!(f, "structure contains no relations"),
            Error::HyperedgeOutOfBounds { index, len } => {
                write!(f, "hyperedge index {index} out of bounds for {len} hyperedges")
            }
            Error::SameHyperedge { index } => {
                write!(f, "extra overlap requires two distinct hyperedge indices, got {index} twice")
            }
            Error::NoConnectedPair => {
                write!(f, "average path length undefined: no connected pair of nodes")
            }
            Error::LengthMismatch { left, right } => {
                write!(f, "sequence lengths differ: {left} vs {right}")
            }
            Error::TooFewSamples { n } => write!(f, "need at least 3 samples, got {n}"),
            Error::ZeroVariance => write!(f, "input sequence has zero variance"),
            Error::EmptyPathSet => write!(f, "path set must contain at least one path"),
            Error::PathTooShort { path, len } => {
                write!(f, "path {path} has {len} entries, need at least 2")
            }
            Error::ZeroOrder => write!(f, "higher-order network order must be at least 1"),
            Error::UnknownLabel(label) => write!(f, "unknown label: {label}"),
        }
    }
}

impl core::error::Error for Error {}
