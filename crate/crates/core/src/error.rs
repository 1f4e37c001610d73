use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {0} outside 1..={max}", max = crate::graph::MAX_ORDER)]
    Capacity(usize),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    OutOfRange { u: usize, v: usize, n: usize },
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("invalid parameters for {family}: {message}")]
    InvalidParameter { family: String, message: String },
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
}

impl GraphError {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        GraphError::Parse {
            offset,
            message: message.into(),
        }
    }

    pub(crate) fn param(family: &str, message: impl Into<String>) -> Self {
        GraphError::InvalidParameter {
            family: family.to_string(),
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{operation} refuses graphs of order {order}: size guard is {guard}")]
    Capacity {
        operation: &'static str,
        order: usize,
        guard: usize,
    },
    #[error("j must be at least 1")]
    ZeroJ,
    #[error("p must be at least 2 for a star K_1,p")]
    StarTooSmall,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("no index k in 0..={n} satisfies the inequality")]
    NoIndex { n: usize },
    #[error("degree sequence sums to {total} but the graph size is {m}")]
    InconsistentSequence { total: u64, m: usize },
    #[error("statistics were computed for {found}, expected {expected}")]
    MismatchedStats { expected: String, found: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error("{failures} chain violation(s); first on {graph6} (j={j}): {check}")]
    ChainViolation {
        graph6: String,
        j: usize,
        check: String,
        failures: usize,
    },
}
