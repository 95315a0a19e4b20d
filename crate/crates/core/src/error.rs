use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {n} exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge {0}-{1} already present")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} not present")]
    MissingEdge(usize, usize),
}

/// Failure to read a graph from text. Offsets are byte offsets into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("graph6: {message} at byte {offset}")]
    Graph6 { offset: usize, message: String },
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A violated parameter constraint for one of the constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid parameters: {constraint}")]
pub struct ParamError {
    pub constraint: String,
}

impl ParamError {
    pub(crate) fn new(constraint: impl Into<String>) -> Self {
        ParamError {
            constraint: constraint.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error("shift spec violates `{0}`")]
    Shift(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("order {n} exceeds the oracle limit of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("required connectivity must be at least 1")]
    ZeroConnectivity,
    #[error("vertex set does not disconnect the graph")]
    NotACut,
    #[error(transparent)]
    Graph(#[from] GraphError),
}
