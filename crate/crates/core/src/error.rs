use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid simplicial set: {0}")]
    InvalidSimplicialSet(String),

    #[error("invalid simplicial map: {0}")]
    InvalidMap(String),

    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),

    #[error("invalid coalgebra: {0}")]
    InvalidCoalgebra(String),

    #[error("not a chain map: {0}")]
    NotChainMap(String),

    #[error("coalgebra is not cocommutative: coproduct of {witness} is not fixed by the graded twist")]
    NotCocommutative { witness: String },

    #[error("bound too small: {0}")]
    BoundTooSmall(String),

    #[error("cobar truncation too large: {words} words in degree {degree} (limit {limit})")]
    TruncationTooLarge { degree: usize, words: usize, limit: usize },

    #[error("linear algebra: {0}")]
    LinAlg(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
