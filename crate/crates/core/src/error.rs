use thiserror::Error;

/// Errors raised by validation, the codecs, the counting formulas and the oracle.
///
/// Variants that carry a witness name the first offending object found.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Structurally ill-formed input: label out of range, hyperedge of size < 2,
    /// repeated label in an edge, or a duplicated edge.
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("hypergraph is disconnected: vertex {unreachable} cannot be reached from vertex 0")]
    Disconnected { unreachable: usize },

    #[error("hyperedges {first:?} and {second:?} share more than one vertex")]
    EdgeOverlap {
        first: Vec<usize>,
        second: Vec<usize>,
    },

    #[error("hyperedge {edge:?} closes a cycle not contained in any hyperedge")]
    CycleOutsideEdge { edge: Vec<usize> },

    #[error("sum of hyperedge sizes is {sum}, expected n + k = {expected}")]
    SizeIdentityViolated { sum: usize, expected: usize },

    #[error("hyperedge {edge:?} has no unique vertex closest to 0")]
    NonUniqueMarked { edge: Vec<usize> },

    #[error("{0:?} is not a hyperedge of this hypertree")]
    UnknownEdge(Vec<usize>),

    #[error("operation requires at least one hyperedge")]
    EmptyTree,

    #[error("bad partition: {0}")]
    BadPartition(String),

    #[error("word has length {found}, expected {expected}")]
    BadWordLength { expected: usize, found: usize },

    #[error("letter {letter} at position {position} is outside 0..={max}")]
    LetterOutOfRange {
        position: usize,
        letter: usize,
        max: usize,
    },

    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("edge joins two vertices of the same class: {0}")]
    NotBipartite(String),

    #[error("code words have lengths ({found_w}, {found_wprime}), expected ({expected_w}, {expected_wprime})")]
    BadLength {
        expected_w: usize,
        expected_wprime: usize,
        found_w: usize,
        found_wprime: usize,
    },

    #[error("decoding did not produce a tree: {0}")]
    NonTreeCode(String),

    #[error("parts sum to {found}, expected {expected}")]
    PartsMismatch { expected: usize, found: usize },

    #[error("inconsistent profile: {0}")]
    ProfileMismatch(String),

    #[error("parameter {parameter} = {value} exceeds the enumeration bound {bound}")]
    BoundExceeded {
        parameter: &'static str,
        value: usize,
        bound: usize,
    },
}

impl Error {
    /// Short class name used on the command line and in reports.
    pub fn class(&self) -> &'static str {
        match self {
            Error::Malformed(_) => "Malformed",
            Error::Disconnected { .. } => "Disconnected",
            Error::EdgeOverlap { .. } => "EdgeOverlap",
            Error::CycleOutsideEdge { .. } => "CycleOutsideEdge",
            Error::SizeIdentityViolated { .. } => "SizeIdentityViolated",
            Error::NonUniqueMarked { .. } => "NonUniqueMarked",
            Error::UnknownEdge(_) => "UnknownEdge",
            Error::EmptyTree => "EmptyTree",
            Error::BadPartition(_) => "BadPartition",
            Error::BadWordLength { .. } => "BadWordLength",
            Error::LetterOutOfRange { .. } => "LetterOutOfRange",
            Error::NotATree(_) => "NotATree",
            Error::NotBipartite(_) => "NotBipartite",
            Error::BadLength { .. } => "BadLength",
            Error::NonTreeCode(_) => "NonTreeCode",
            Error::PartsMismatch { .. } => "PartsMismatch",
            Error::ProfileMismatch(_) => "ProfileMismatch",
            Error::BoundExceeded { .. } => "BoundExceeded",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
