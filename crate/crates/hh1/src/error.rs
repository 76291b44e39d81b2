use thiserror::Error;

/// Crate-wide error type. Zero products of paths are values, not errors;
/// everything here signals bad input or a broken invariant.
#[derive(Debug, Error)]
pub enum Error {
    #[error("characteristic must be 0 or a prime, got {0}")]
    BadCharacteristic(u32),
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("unknown id `{0}`")]
    UnknownId(String),
    #[error("relation {index}: non-parallel paths `{a}` and `{b}` in one relation")]
    NonParallelRelation { index: usize, a: String, b: String },
    #[error("relation {index}: path `{path}` has length {len} < 2")]
    ShortRelation {
        index: usize,
        path: String,
        len: usize,
    },
    #[error("invalid base order: {0}")]
    InvalidOrder(String),
    #[error("paths `{a}` and `{b}` are incomparable under the weight order")]
    IncomparablePaths { a: String, b: String },
    #[error("tip of the zero element requested")]
    ZeroElement,
    #[error("rewriting exceeded {0} steps; the system may not terminate under this order")]
    NonTerminating(usize),
    #[error("basis enumeration hit the length cap {0} without a finiteness certificate")]
    CapExceeded(usize),
    #[error(
        "reduction system is not confluent: {count} unresolved overlap(s), first at `{witness}`"
    )]
    NotConfluent { count: usize, witness: String },
    #[error("algebra is not finite dimensional: unbounded words through `{0}`")]
    InfiniteDimensional(String),
    #[error("relations are not length-homogeneous: `{0}`")]
    NotGraded(String),
    #[error("presentation is not local: {0} vertices")]
    NotLocal(usize),
    #[error("substitution value is not parallel to arrow `{0}`")]
    NotParallel(String),
    #[error("bracket left the cocycle space: {0}")]
    BracketNotClosed(String),
    #[error("invalid Lie structure constants: {0}")]
    InvalidLieTable(String),
    #[error("criterion contradiction: {0}")]
    CriterionContradiction(String),
    #[error("bad family parameters: {0}")]
    BadParameters(String),
    #[error("truncation level must be at least 2, got {0}")]
    BadTruncation(u32),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
