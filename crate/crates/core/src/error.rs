use alloc::string::String;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{value} is not a unit modulo {modulus}")]
    NotUnit { value: u64, modulus: u64 },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("parameters give loops or multiple edges: {0}")]
    Degenerate(String),
    #[error("graph is connected")]
    GraphIsConnected,
    #[error("vertex {0} does not belong to this graph")]
    UnknownVertex(String),
    #[error("{0} does not preserve the vertex set of this graph")]
    NotPreserved(&'static str),
    #[error("{0} is not an automorphism")]
    NotAnAutomorphism(String),
    #[error("map is not an isomorphism: {0}")]
    NotAnIsomorphism(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
    #[error("graph too large for exhaustive search: {vertices} vertices exceeds the guard of {guard}")]
    TooLarge { vertices: usize, guard: usize },
    #[error("search budget of {0} nodes exhausted")]
    SearchBudget(u64),
    #[error("not a 2-path")]
    NotATwoPath,
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("cycle length {0} exceeds the cap of 10")]
    CycleLengthCap(usize),
    #[error("invalid code: {0}")]
    InvalidCode(String),
    #[error("classification requires s >= 2 (tightly attached case out of scope)")]
    ClassificationNeedsS2,
    #[error("parameters are not 2-arc-transitive")]
    NotTwoArcTransitive,
    #[error("undecided at this scale: invariants agree and {vertices} vertices exceeds the guard of {guard}")]
    Undecided { vertices: usize, guard: usize },
    #[error("reflection of the 4-cube is not unique: {0} candidates")]
    AmbiguousReflection(usize),
}

pub type Result<T> = core::result::Result<T, Error>;
