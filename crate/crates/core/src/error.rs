use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("malformed edge list: {0}")]
    EdgeList(String),

    #[error("line {line}: {message}")]
    Stream { line: usize, message: String },

    #[error("order {order} exceeds the limit of {limit} for {what}")]
    SizeBudget { what: &'static str, order: usize, limit: usize },

    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),

    #[error("graph is not connected")]
    Disconnected,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("vertex sets overlap at vertex {0}")]
    Overlap(usize),

    #[error("precondition violated at vertex {vertex}: {message}")]
    Precondition { vertex: usize, message: String },

    #[error("{0} is unavailable: no explicit formula exists")]
    Unavailable(&'static str),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable code, used by the CLI error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::VertexOutOfRange { .. } => "vertex_out_of_range",
            Error::Loop(_) => "loop",
            Error::Graph6(_) => "graph6",
            Error::EdgeList(_) => "edge_list",
            Error::Stream { .. } => "stream",
            Error::SizeBudget { .. } => "size_budget",
            Error::BudgetExceeded(_) => "budget_exceeded",
            Error::Disconnected => "disconnected",
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::UnknownName(_) => "unknown_name",
            Error::Overlap(_) => "overlap",
            Error::Precondition { .. } => "precondition",
            Error::Unavailable(_) => "unavailable",
            Error::Io(_) => "io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
