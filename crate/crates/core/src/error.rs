use thiserror::Error;

/// Errors raised by graph operations, searches and file parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge {{{0}, {1}}}")]
    UnknownEdge(String, String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("self-loop at `{0}`")]
    SelfLoop(String),
    #[error("vertex `{vertex}` has degree {found}, expected {expected}")]
    DegreeMismatch {
        vertex: String,
        expected: usize,
        found: usize,
    },
    #[error("vertices {0:?} do not induce a triangle")]
    NotATriangle([String; 3]),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("search budget of {0} nodes exhausted")]
    BudgetExceeded(u64),
    #[error("rotation system is corrupt: {0}")]
    CorruptRotation(String),
    #[error("invalid separation: {0}")]
    InvalidSeparation(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal invariant broken: {0}")]
    InvariantBroken(String),
    #[error("vertex set is not independent: `{0}` and `{1}` are adjacent")]
    NotIndependent(String, String),
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error("target graph is disconnected")]
    DisconnectedTarget,
    #[error("search failed: {0}")]
    SearchFailed(String),
    #[error("identification failed: {0}")]
    IdentificationFailed(String),
    #[error("rolling trace mismatch: {0}")]
    TraceMismatch(String),
    #[error("assembly failed: {0}")]
    AssemblyFailed(String),
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("duplicate catalog name `{0}`")]
    DuplicateName(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
