use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("relation contains a directed cycle through element {0}")]
    CycleDetected(usize),
    #[error("element {id} out of range for a poset on {n} elements")]
    OutOfRange { id: usize, n: usize },
    #[error("posets must have at least one element")]
    EmptyPoset,
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("size budget exceeded: {size} elements requested, budget is {budget}")]
    SizeBudgetExceeded { size: usize, budget: usize },
    #[error("order {0} does not cover the full ground set")]
    NotFullOrder(usize),
    #[error("order {order} is not a partial linear extension: {x} < {y} but {y} precedes {x}")]
    NotPle { order: usize, x: usize, y: usize },
    #[error("order {0} repeats an element or references an unknown one")]
    MalformedOrder(usize),
    #[error("query string needs two distinct elements, got {0} twice")]
    SameElement(usize),
    #[error("pair ({0}, {1}) is not an incomparable pair")]
    NotIncomparable(usize, usize),
    #[error("value exceeds the requested maximum {0}")]
    Exceeded(usize),
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("formula undefined for n = {0}")]
    DomainError(u64),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("hypotheses violated: {0}")]
    HypothesesViolated(String),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("claim {claim} violated: {detail}")]
    ClaimViolated { claim: u8, detail: String },
    #[error("reversibility failed for a layer group: {0}")]
    ReversibilityFailed(String),
    #[error("bounded search exhausted without a certificate: {0}")]
    SearchBudgetExceeded(String),
    #[error("could not parse document: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
