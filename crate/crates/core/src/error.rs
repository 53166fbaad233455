use thiserror::Error;

/// Errors raised by the exact-arithmetic, subspace and logic layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("malformed scalar {text:?}: {reason}")]
    ParseScalar { text: String, reason: String },

    #[error("singular Gram matrix: basis rows are linearly dependent")]
    SingularGram,

    #[error("physically meaningless state: the zero vector belongs to no proposition")]
    ZeroState,

    #[error("state subspace must be nontrivial (neither {{0}} nor the full space)")]
    TrivialState,

    #[error("matrix is not an orthogonal projection: {0}")]
    NotProjection(String),

    #[error("context {context:?} needs at least two members, got {count}")]
    TooFewMembers { context: String, count: usize },

    #[error("context {context:?}: member {member:?} is a trivial subspace")]
    TrivialMember { context: String, member: String },

    #[error("context {context:?}: members {first:?} and {second:?} are not orthogonal")]
    NotOrthogonal {
        context: String,
        first: String,
        second: String,
    },

    #[error("context {context:?}: member projections do not sum to the identity")]
    Incomplete { context: String },

    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),

    #[error("no value assigned to proposition {0:?}")]
    MissingLabel(String),

    #[error("bivaluation for {label:?} must be 0 or 1, got {value}")]
    NotBivalent { label: String, value: u8 },

    #[error("invalid spin axis {label:?}: {reason}")]
    InvalidAxis { label: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
