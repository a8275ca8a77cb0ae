use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} is outside [1, 62]")]
    OrderOutOfRange(usize),

    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex set must be nonempty")]
    EmptyVertexSet,

    #[error("resulting order {0} exceeds the 62-vertex capacity")]
    CapacityExceeded(usize),

    /// A size guard on an exponential routine was hit.
    #[error("{what}: order {order} is above the limit of {limit}")]
    Guard {
        what: &'static str,
        order: usize,
        limit: usize,
    },

    #[error("invalid graph6: {0}")]
    Graph6(String),

    #[error("invalid edge list (line {line}): {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("invalid blueprint (line {line}): {msg}")]
    BlueprintSyntax { line: usize, msg: String },

    #[error("invalid blueprint: {0}")]
    Blueprint(String),

    #[error("unknown code kind `{0}` (expected one of LD, LTD, OD, OTD, ID, ITD, FD, FTD)")]
    UnknownKind(String),

    #[error("subset search budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("k = {k} is below the minimum of {min} for {what}")]
    KTooSmall { what: String, k: usize, min: usize },

    #[error("k = {k} is above the supported maximum of {max}")]
    KTooLarge { k: usize, max: usize },

    #[error("{0}")]
    Unsupported(String),
}

impl Error {
    /// Malformed textual input: graph6, edge lists, blueprint files, kind names.
    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            Error::Graph6(_)
                | Error::EdgeList { .. }
                | Error::BlueprintSyntax { .. }
                | Error::UnknownKind(_)
        )
    }

    /// A size guard, capacity limit or search budget stopped the computation.
    pub fn is_limit(&self) -> bool {
        matches!(
            self,
            Error::Guard { .. }
                | Error::BudgetExceeded { .. }
                | Error::CapacityExceeded(_)
                | Error::KTooLarge { .. }
        )
    }
}
