use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("n must be a positive integer, got {0}")]
    NonPositive(i64),

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("cannot parse {input:?} as a partition: {reason}")]
    Parse { input: String, reason: &'static str },

    #[error("partitions of different integers cannot be compared ({left} vs {right})")]
    MismatchedSize { left: u32, right: u32 },

    #[error("n = {n} exceeds the size guard ({limit}); raise the guard explicitly to proceed")]
    SizeGuard { n: u32, limit: u32 },

    #[error("distance query needs at least one source vertex")]
    EmptySources,

    #[error("vertex index {index} out of range for a graph with {count} vertices")]
    VertexOutOfRange { index: usize, count: usize },

    #[error("graph with {vertices} vertices exceeds the clique-search bound of {bound}")]
    CliqueBound { vertices: usize, bound: usize },

    #[error("vertices {from} and {to} are not adjacent")]
    NotAdjacent { from: usize, to: usize },

    #[error("G_{n} has no self-conjugate vertices, so axial/transverse classification is undefined")]
    UndefinedAxis { n: u32 },

    #[error("unknown export format {0:?} (expected json, dot or csv)")]
    UnknownFormat(String),

    #[error("unknown atlas mode {0:?} (expected structure, degree, simplex or central_spine)")]
    UnknownMode(String),

    #[error("invalid range {0:?}")]
    InvalidRange(String),
}
