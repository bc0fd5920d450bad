use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed partition token `{token}`: {reason}")]
    ParsePartition { token: String, reason: &'static str },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// `π` is not a member of `Π_n` (needs 2 ≤ ℓ(π) ≤ w(π) ≤ n).
    #[error("partition ({partition}) is not in Pi_{n}: {reason}")]
    NotInPi {
        partition: String,
        n: usize,
        reason: &'static str,
    },

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("basis family is empty")]
    EmptyBases,

    #[error("subset {subset} has {found} elements, expected {expected}")]
    WrongSubsetSize {
        subset: String,
        expected: usize,
        found: usize,
    },

    /// Witness `(I, J, i)`: no `j ∈ J∖I` makes `(I∖{i})∪{j}` a basis.
    #[error("exchange property fails for I={i_set}, J={j_set}, i={element}")]
    ExchangeViolation {
        i_set: String,
        j_set: String,
        element: usize,
    },

    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),

    #[error("move rejected: {0}")]
    MoveRejected(String),

    #[error("ground sets differ: {0} vs {1}")]
    GroundSetMismatch(usize, usize),

    #[error("classes live in different rings: {0}")]
    RingMismatch(String),

    #[error("invalid Schubert index ({a1},{a2}) for n={n}")]
    InvalidIndex { a1: usize, a2: usize, n: usize },

    #[error("polynomial is not a Schur expansion: {0}")]
    NonSchurExpressible(String),

    #[error("partition ({0}) is not a Schubert partition (k,1^(m-k))")]
    NotSchubert(String),

    #[error(
        "partition ({0}) is rigid; a tree model needs at least 3 parts (4 for model comparison)"
    )]
    TooFewParts(String),

    #[error("invalid tree model: {0}")]
    InvalidModel(String),

    #[error("fixed locus is not finite; offending rows: {}", .0.join("; "))]
    NonIsolatedFixedLocus(Vec<String>),

    #[error("oracle size bound exceeded: {0}")]
    OracleBound(String),

    /// An internal consistency check failed. Indicates a bug, never bad input.
    #[error("invariant violated: {name}: {detail}")]
    Invariant { name: &'static str, detail: String },
}

impl Error {
    pub fn is_invariant(&self) -> bool {
        matches!(self, Error::Invariant { .. })
    }
}
