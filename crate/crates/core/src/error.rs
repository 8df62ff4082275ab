use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty set has no packet")]
    EmptyPacket,
    #[error("split undefined for index sets with fewer than two elements")]
    SplitUndefined,
    #[error("not a packet subset: {0}")]
    NotPacketSubset(String),
    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),
    #[error("universe size {0} out of range (1..=16)")]
    UniverseOutOfRange(usize),
    #[error("rank mismatch: expected sets of size {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("not consistent: {0}")]
    NotConsistent(String),
    #[error("order not admissible: {0}")]
    NotAdmissible(String),
    #[error("not a linear order: {0}")]
    NotALinearOrder(String),
    #[error("relation has a cycle through {0}")]
    Cyclic(String),
    #[error("instance exceeds enumeration budget ({0})")]
    BudgetExceeded(String),
    #[error("not a triangulation: {0}")]
    NotATriangulation(String),
    #[error("not a coincidence point: {0}")]
    NotCoincidencePoint(String),
    #[error("non-generic slice: {0}")]
    NonGenericSlice(String),
    #[error("non-generic parameters: tied critical values for {0}")]
    NonGenericParameters(String),
    #[error("rule not applicable: {0}")]
    RuleNotApplicable(String),
    #[error("search budget exceeded after {found} chains")]
    SearchBudgetExceeded { found: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
