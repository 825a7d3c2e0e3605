use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("capacity exceeded: {what} (limit {limit}, got {got})")]
    Capacity {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("vertex set is bound to {set_n} vertices but the graph has {graph_n}")]
    SetMismatch { set_n: usize, graph_n: usize },

    #[error("vertex sets overlap")]
    OverlappingSets,

    /// The input graph induces a forbidden pattern. `embedding[i]` is the host
    /// vertex playing pattern vertex `i`.
    #[error("input induces {pattern} at {embedding:?}")]
    NotFree {
        pattern: String,
        embedding: Vec<usize>,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not perfectly divisible: induced subgraph {0:#x} has no perfect division")]
    NotPerfectlyDivisible(u64),

    /// A structural claim that is proved to hold on the admitted inputs failed.
    /// This always points at an implementation bug.
    #[error("structural assertion failed: {0}")]
    Structural(String),

    #[error("coloring uses {used} colors, exceeding the bound {bound}")]
    BoundViolation { used: usize, bound: usize },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("unknown pattern name `{0}`")]
    UnknownPattern(String),

    #[error("unknown verification target `{0}`")]
    UnknownTarget(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    /// True for errors caused by the caller's input rather than by a failed
    /// internal invariant.
    pub fn is_precondition(&self) -> bool {
        !matches!(self, Error::Structural(_) | Error::BoundViolation { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
