use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input is empty")]
    EmptyInput,

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("duplicate element `{0}`")]
    DuplicateElement(String),

    #[error("order relation has a cycle through `{0}` and `{1}`")]
    Cycle(String, String),

    #[error(
        "`{a}` and `{b}` have {maximal_lower_bounds} maximal lower bounds, expected exactly one"
    )]
    NotMeetSemilattice {
        a: String,
        b: String,
        maximal_lower_bounds: usize,
    },

    #[error("family is not closed under intersection: {a} and {b}")]
    NotIntersectionClosed { a: String, b: String },

    #[error("set {0} appears more than once")]
    DuplicateSet(String),

    #[error("not meet-distributive: interval below `{witness}` is not boolean")]
    NotMeetDistributive { witness: String },

    #[error("x- and y-supports overlap")]
    Overlap,

    #[error("S-family is not closed under subsets: {0}")]
    NotSimplicial(String),

    #[error("{what} has size {size}, limit is {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("unknown corpus entry `{0}`")]
    UnknownName(String),

    #[error("malformed input: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
