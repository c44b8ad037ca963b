use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: expected {expected} variables, found {found}")]
    AmbientMismatch { expected: usize, found: usize },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("the zero ideal is not supported here")]
    ZeroIdeal,

    #[error("the unit ideal is not supported here")]
    UnitIdeal,

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("variable index {index} out of range for a ring with {n} variables")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("an irreducible component needs at least one variable power")]
    EmptyComponent,

    #[error("decomposition is not marked irredundant")]
    NotIrredundant,

    #[error("{what} is {size}, over the limit of {limit}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("total order is not admissible")]
    NotAdmissible,

    #[error("invalid order: {0}")]
    InvalidOrder(String),

    #[error("family needs at least {needed} members, has {found}")]
    FamilyTooShort { needed: usize, found: usize },

    #[error("nothing to polarize: variable {var} has degree {degree}")]
    NothingToPolarize { var: usize, degree: u32 },

    #[error("input is not squarefree")]
    NotSquarefree,

    #[error("invalid component subset: {0}")]
    InvalidSubset(String),

    #[error("malformed transfer context: {0}")]
    MalformedContext(String),

    #[error("defect: {0}")]
    Defect(String),

    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("undeclared variable `{name}` at {line}:{col}")]
    UndeclaredVariable {
        name: String,
        line: usize,
        col: usize,
    },

    #[error("exponent 0 in a component at {line}:{col}")]
    ZeroExponent { line: usize, col: usize },

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("{0}")]
    Usage(String),
}

impl Error {
    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::UndeclaredVariable { .. } | Error::ZeroExponent { .. }
        )
    }

    pub fn is_bound(&self) -> bool {
        matches!(self, Error::BoundExceeded { .. })
    }
}
