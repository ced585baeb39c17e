use thiserror::Error;

/// Errors raised by construction, operations, parsing and search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("element {elem} is not a member of {algebra}")]
    NotMember { elem: String, algebra: String },

    #[error("{0} is not discretely ordered")]
    NotDiscretelyOrdered(String),

    #[error("undefined cover: {0}")]
    UndefinedCover(String),

    #[error("precondition violation: {0}")]
    PreconditionViolation(String),

    #[error("algebra {0} already has adjoined bounds")]
    AlreadyBounded(String),

    #[error("order is not dense: {0}")]
    NotDense(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid field `{field}`: {msg}")]
    Field { field: String, msg: String },

    #[error("unassigned variable `{0}`")]
    UnassignedVariable(String),

    #[error("duplicate element {0}")]
    DuplicateElement(String),

    #[error("closure budget of {budget} elements exceeded at depth {depth}: {distinct_tau} distinct tau-values among {explored} elements so far")]
    BudgetExceeded {
        budget: usize,
        depth: usize,
        explored: usize,
        distinct_tau: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    pub(crate) fn field(field: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Field {
            field: field.into(),
            msg: msg.into(),
        }
    }
}
