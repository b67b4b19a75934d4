use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("operation is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("set is not a subgroup")]
    NotASubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("invalid series indices n={n}, k={k}")]
    BadIndices { n: usize, k: usize },

    #[error("brace relation fails at a={0}, b={1}, c={2}")]
    BraceRelationFails(usize, usize, usize),
    #[error("the two group structures disagree on the identity or carrier size")]
    IdentityMismatch,
    #[error("lambda is not a homomorphism at a={0}, b={1}, x={2}")]
    LambdaNotHomomorphism(usize, usize, usize),
    #[error("ring is not radical: circle operation is not a group ({0})")]
    NotRadical(String),
    #[error("not a ring: {0}")]
    NotARing(String),

    #[error("set is not a left ideal")]
    NotALeftIdeal,
    #[error("set is not an ideal")]
    NotAnIdeal,
    #[error("quotient of order {order} exceeds the table limit {limit}")]
    QuotientTooLarge { order: usize, limit: usize },

    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("bad prime {0}: need a prime p >= 5")]
    BadPrime(u64),
    #[error("condition Im(psi_b - id) in ker(phi) violated at basis b=e{b}, c=e{c}")]
    ConditionViolated { b: usize, c: usize },
    #[error("matrix is not invertible: {0}")]
    NotInvertible(String),
    #[error("matrix family does not commute: {0}")]
    NonCommutingFamily(String),
    #[error("matrix order does not divide p: {0}")]
    BadMatrixOrder(String),

    #[error("order {order} exceeds the limit {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("order {order} too large for ideal enumeration (limit {limit})")]
    TooLargeForIdealEnumeration { order: usize, limit: usize },
    #[error("operation requires a table-backed brace")]
    NeedsTable,

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 1,
            Error::TooLarge { .. } | Error::TooLargeForIdealEnumeration { .. } | Error::QuotientTooLarge { .. } => 3,
            _ => 2,
        }
    }
}
