use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix data has {got} entries, expected {expected} for dimension {dim}")]
    WrongLength { dim: usize, expected: usize, got: usize },

    #[error("matrix dimension must be positive")]
    EmptyMatrix,

    #[error("matrix entry ({row}, {col}) is not finite")]
    NonFinite { row: usize, col: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not Hermitian (max |m_ij - conj(m_ji)| = {0:e})")]
    NotHermitian(f64),

    #[error("trace is not 1 (|tr - 1| = {0:e})")]
    NotUnitTrace(f64),

    #[error("matrix is not positive semi-definite (min eigenvalue = {0:e})")]
    NotPSD(f64),

    #[error("state vector is not normalized (|norm - 1| = {0:e})")]
    NotNormalized(f64),

    #[error("Jacobi eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("could not draw a non-degenerate random matrix after {0} attempts")]
    DegenerateSample(usize),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("weight magnitudes are not symmetric at ({0}, {1})")]
    AsymmetricMagnitude(usize, usize),

    #[error("Laplacian has zero trace: the graph consists only of loops")]
    AllLoops,

    #[error("edge sequence is not a walk in the graph: {0}")]
    NotAWalk(String),

    #[error("{what} = {value} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, value: usize, cap: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("need {needed} power sums, only {available} available")]
    InsufficientPowerSums { needed: usize, available: usize },

    #[error("primes were enumerated up to length {enumerated}, cannot expand to order {requested}")]
    IncompletePrimes { requested: usize, enumerated: usize },

    #[error("coefficient {n} has imaginary part {imag:e}")]
    NonRealCoefficient { n: usize, imag: f64 },

    #[error("zeta function is singular at u = {0}")]
    AtSingularity(crate::C64),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("parse error: {0}")]
    Parse(String),
}
