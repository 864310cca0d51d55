use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Group axiom reported when a table fails the commutative group check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupAxiom {
    Binary,
    Associativity,
    Commutativity,
    Identity,
    Inverses,
}

impl std::fmt::Display for GroupAxiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            GroupAxiom::Binary => "operation is not binary",
            GroupAxiom::Associativity => "not associative",
            GroupAxiom::Commutativity => "not commutative",
            GroupAxiom::Identity => "no identity element",
            GroupAxiom::Inverses => "missing inverses",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("domain mismatch: expected {expected}, got {got}")]
    DomainMismatch { expected: u8, got: u8 },

    #[error("value {value} is outside the domain of size {domain}")]
    ValueOutOfDomain { value: u8, domain: u8 },

    #[error("domain size {0} is not supported (expected 2..=10)")]
    BadDomain(u8),

    #[error("index {index} out of range for vectors of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("index set is not strictly increasing")]
    UnsortedIndexSet,

    #[error("operation `{name}` expects {expected} arguments, got {got}")]
    ArityMismatch {
        name: String,
        expected: usize,
        got: usize,
    },

    #[error("operation `{name}`: {msg}")]
    BadOperation { name: String, msg: String },

    #[error("this operation requires the boolean domain, got domain size {0}")]
    NotBoolean(u8),

    #[error("invalid clone specification: {0}")]
    InvalidSpec(String),

    #[error("constants can only be adjoined to a nonempty family")]
    EmptyFamily,

    #[error("saturation budget of {budget} vectors exceeded")]
    BudgetExceeded { budget: usize },

    #[error("not a commutative group: {0}")]
    NotAGroup(GroupAxiom),

    #[error("operation `{0}` is not associative")]
    NotAssociative(String),

    #[error("{0}")]
    Unsupported(String),
}
