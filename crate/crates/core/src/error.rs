use thiserror::Error;

use crate::interval::VerifyReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("size limit exceeded: {what} is {actual}, limit {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("dimension mismatch: representation has {rep} vertices, graph has {graph}")]
    DimensionMismatch { rep: usize, graph: usize },

    #[error("non-edge ({0}, {1}) is not separated in any dimension")]
    UncoveredNonedge(usize, usize),

    #[error("edge ({0}, {1}) is separated in some dimension")]
    MissingEdge(usize, usize),

    #[error("graph is not a forest: edge ({0}, {1}) closes a cycle")]
    NotAForest(usize, usize),

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("invalid order: {0}")]
    InvalidOrder(String),

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("input representation does not verify: {0}")]
    InvalidInputRep(String),

    #[error("class map incomplete: {0}")]
    ClassMapIncomplete(String),

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("strategy `{0}` is not available")]
    StrategyUnavailable(&'static str),

    #[error("K_3,{count} on A-triple {triple:?} exceeds 2g+2 = {bound}")]
    GenusCheckFailed {
        triple: [usize; 3],
        count: usize,
        bound: usize,
    },

    #[error("construction `{stage}` produced an invalid representation: {report}")]
    ConstructionFailed {
        stage: &'static str,
        report: VerifyReport,
    },
}
