use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: expected {expected}, got {actual}")]
    DimensionMismatch {
        op: &'static str,
        expected: usize,
        actual: usize,
    },

    #[error("invalid code dimensions n={n}, k={k} (need 0 < k < n)")]
    InvalidCode { n: usize, k: usize },

    #[error("{erasures} erasures exceed the {redundancy} parity equations")]
    ErasureOverflow { erasures: usize, redundancy: usize },

    #[error("erased parity-check columns are rank deficient (rank {rank} < {erasures})")]
    RankDeficient { rank: usize, erasures: usize },

    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),

    #[error("invalid channel parameter: {0}")]
    InvalidChannel(String),

    #[error("exhaustive ML search refused for k={k} (limit {limit})")]
    MlTooLarge { k: usize, limit: usize },

    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown decoder `{0}`")]
    UnknownDecoder(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub(crate) fn check_len(op: &'static str, expected: usize, actual: usize) -> Result<()> {
    if expected == actual {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { op, expected, actual })
    }
}
