use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("galois automorphism index {j} is not coprime to the order {order}")]
    NotCoprime { j: i64, order: u32 },

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("quantum parameter is degenerate (s^4 = 1)")]
    DegenerateParameter,

    #[error("factorial ratio has a pole at the given parameter")]
    Pole,

    #[error("element is not invertible in the symbolic ring: {0}")]
    NotInvertible(String),

    #[error("arity mismatch: {0}")]
    ArityMismatch(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("labels ({0}) are not admissible")]
    NotAdmissible(String),

    #[error("singular linear system")]
    Singular,

    #[error("unreachable table cell: {0}")]
    UnreachableCell(String),
}

pub type Result<T> = std::result::Result<T, Error>;
