use thiserror::Error;

/// Text input rejected at a byte offset.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(pos: usize, msg: impl Into<String>) -> Self {
        ParseError { pos, msg: msg.into() }
    }

    /// Re-anchor an error produced on a substring.
    pub fn shifted(self, offset: usize) -> Self {
        ParseError { pos: self.pos + offset, msg: self.msg }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("decoration {dec} outside 1..{d}")]
    DecorationOutOfRange { dec: u32, d: u32 },
    #[error("vertex {vertex} has invalid parent {parent}")]
    BadParent { vertex: usize, parent: usize },
    #[error("parent relation has a cycle through vertex {0}")]
    Cycle(usize),
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("forest is not heap-ordered at vertex {0}")]
    NotHeapOrdered(usize),
    #[error("not a permutation: {0}")]
    NotPermutation(String),
    #[error("{0} is not a shuffle")]
    NotShuffle(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("degree {requested} exceeds the configured bound {bound}")]
pub struct BoundError {
    pub requested: usize,
    pub bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FnoError {
    #[error("singular atom: vanishing frequency sum at vertex {vertex} for frequencies {freqs}")]
    Singular { vertex: usize, freqs: String },
    #[error("frequency magnitudes tie in atom {0}")]
    MagnitudeTie(String),
    #[error("arity mismatch: forest has {forest} vertices, measure has arity {measure}")]
    ArityMismatch { forest: usize, measure: usize },
    #[error("zero frequency in path component {0}")]
    ZeroFrequency(usize),
    #[error("repeated frequency {freq} in path component {component}")]
    RepeatedFrequency { component: usize, freq: String },
    #[error("letter {letter} has no path component (d = {d})")]
    MissingComponent { letter: u32, d: usize },
}

/// Umbrella error for callers that mix the layers (the command line front end).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Fno(#[from] FnoError),
    #[error("characters live on different structures: {0} and {1}")]
    StructureMismatch(String, String),
}
