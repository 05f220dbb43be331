use thiserror::Error;

/// Everything that can go wrong while building or transforming orders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation contains a cycle through `{0}`")]
    Cycle(String),
    #[error("duplicate element id `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("unknown canonical order `{0}`")]
    UnknownName(String),
    #[error("index element `{0}` has no part")]
    MissingPart(String),
    #[error("part at index element `{0}` is empty")]
    EmptyPart(String),
    #[error("expected a chain")]
    NotAChain,
    #[error("expected a finite rooted tree{0}")]
    NotATree(String),
    #[error("palettes differ")]
    PaletteMismatch,
    #[error("unknown colour `{0}`")]
    UnknownColour(String),
    #[error("element `{0}` has no colour")]
    MissingColour(String),
    #[error("member set is empty")]
    EmptySet,
    #[error("size {size} exceeds the configured bound {bound}")]
    TooLarge { size: usize, bound: usize },
    #[error("operation requires a non-empty poset")]
    EmptyPoset,
    #[error("{{{}}} is not an interval", .0.join(","))]
    NotAnInterval(Vec<String>),
    #[error("intervals overlap at `{0}`")]
    Overlap(String),
    #[error("malformed composition sequence: {0}")]
    Malformed(String),
    #[error("missing argument at position {0}")]
    MissingArgument(String),
    #[error("index {index} out of range for length {len}")]
    BadIndex { index: usize, len: usize },
    #[error("missing leaf value at {0}")]
    MissingLeaf(String),
    #[error("label `{0}` is not in the range of the node's labelling")]
    BadLabel(String),
    #[error("not an up-closed chain of internal nodes")]
    NotUpClosedChain,
    #[error("embedding verification failed: {0}")]
    VerificationFailure(String),
    #[error("family is empty")]
    EmptyFamily,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
