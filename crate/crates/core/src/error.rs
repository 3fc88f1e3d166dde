use thiserror::Error;

/// Errors produced by the statistics, simulation, and persistence layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("matrix is not symmetric (largest asymmetry {asymmetry:e})")]
    NotSymmetric { asymmetry: f64 },

    #[error("sample size n = {n} is below the minimum {required} required for {what}")]
    SampleTooSmall {
        n: usize,
        required: usize,
        what: &'static str,
    },

    #[error("moment table holds moments up to order {have}, order {need} required")]
    MomentOrder { have: usize, need: usize },

    #[error("{block} is singular or ill-conditioned (condition number {condition:e})")]
    SingularBlock { block: &'static str, condition: f64 },

    #[error("squared canonical correlation {value} lies outside [0, 1] beyond tolerance")]
    EigenvalueOutOfRange { value: f64 },

    #[error("sample covariance matrix is singular")]
    DegenerateSample,

    #[error("Pillai-Bartlett trace is undefined: a squared canonical correlation equals 1")]
    UnitCorrelation,

    #[error("{alternative}: population moments of order {order} do not exist")]
    InfiniteMoments { alternative: String, order: usize },

    #[error("correlation matrix with r = {r} is not positive definite for p = {p}")]
    NotPositiveDefinite { r: f64, p: usize },

    #[error("null table is for {expected}, data requires {found}")]
    TableMismatch { expected: String, found: String },

    #[error("no null table for {0}")]
    MissingTable(String),

    #[error("null calibration failed: {failures} of {replications} normal samples produced no value for {statistic}")]
    CalibrationFailure {
        statistic: String,
        failures: usize,
        replications: usize,
    },

    #[error("corrupt null table file: {0}")]
    CorruptFile(String),

    #[error("unsupported null table format version {0}")]
    UnsupportedVersion(u32),

    #[error("payload checksum mismatch (expected {expected}, computed {computed})")]
    ChecksumMismatch { expected: String, computed: String },

    #[error("metadata declares {expected} values but payload holds {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("cannot parse '{input}': {reason}")]
    Parse { input: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
