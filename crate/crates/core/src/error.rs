use alloc::string::String;

use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} rejected")]
    LoopRejected(usize),
    #[error("vertex pair must consist of two distinct vertices (got {0}, {0})")]
    InvalidPair(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("construction invariant violated: {0}")]
    ConstructionInvariantViolated(String),
    #[error("random generation failed after {tries} tries")]
    GenerationFailed { tries: u64 },
    #[error("graph must be regular")]
    RegularityRequired,
    #[error("girth must be even")]
    EvenGirthRequired,
    #[error("girth must be odd")]
    OddGirthRequired,
    #[error("theorem precondition violated: {0}")]
    TheoremPreconditionViolated(String),
    #[error("graph is acyclic")]
    AcyclicInput,
    #[error("edge {0}-{1} is not in the graph")]
    UnknownEdge(usize, usize),
    #[error("graph has {n} vertices, oracle limit is {max_n}")]
    TooLarge { n: usize, max_n: usize },
    #[error("minimum degree {min_degree} is below 3")]
    MinDegreeTooSmall { min_degree: usize },
    #[error("girth {girth} is below 4")]
    GirthTooSmall { girth: usize },
    #[error("graph is K_{{3,t}}")]
    ExcludedK3t,
    #[error("no girth cycle separates the graph although the preconditions hold")]
    LemmaViolationSuspected,
    #[error("graph is not 2-edge-connected")]
    TwoEdgeConnectivityRequired,
    #[error("graph is not connected")]
    NotConnected,
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
