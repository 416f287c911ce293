//! Crate-wide error type.

use chrono::NaiveDate;
use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// All failure modes surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    // ---- ingestion / series construction ----
    #[error("file not found: {0}")]
    MissingFile(String),
    #[error("malformed row at line {line}: {reason}")]
    MalformedRow { line: usize, reason: String },
    #[error("dates are not contiguous: gap after {0}")]
    NonContiguousDates(NaiveDate),
    #[error("negative count {value} at {date}")]
    NegativeCount { date: NaiveDate, value: f64 },
    #[error("empty input")]
    EmptyInput,
    #[error("weekly rows are not sorted (offending week start {0})")]
    UnsortedWeeks(NaiveDate),
    #[error("all values missing, nothing to impute")]
    AllMissing,

    // ---- feature construction ----
    #[error("insufficient history: need data from {needed} but it starts at {available}")]
    InsufficientHistory {
        needed: NaiveDate,
        available: NaiveDate,
    },
    #[error("no {column} value joinable at {date}")]
    DateJoinMiss { date: NaiveDate, column: String },

    // ---- synthetic generation ----
    #[error("configured span is too short: {0}")]
    SpanTooShort(String),

    // ---- learners ----
    #[error("degenerate design: {0}")]
    DegenerateDesign(String),
    #[error("non-finite input: {0}")]
    NonFiniteInput(String),
    #[error("too few rows: have {have}, need {need}")]
    TooFewRows { have: usize, need: usize },
    #[error("feature columns do not match the fitted model: {0}")]
    ColumnMismatch(String),
    #[error("invalid hyperparameter: {0}")]
    InvalidHyperparameter(String),
    #[error("linear system is singular: {0}")]
    SingularSystem(String),

    // ---- ensembles ----
    #[error("weight count {weights} does not match member count {members}")]
    WeightCountMismatch { weights: usize, members: usize },
    #[error("ensemble has no members")]
    EmptyMembers,
    #[error("trimmed averaging needs at least 3 members, got {0}")]
    TooFewMembers(usize),
    #[error("inner split is not chronological: {0}")]
    NonChronologicalSplit(String),

    // ---- backtest ----
    #[error("backtest produced no windows")]
    EmptyResult,
    #[error("model `{model}` failed on window {window}: {source}")]
    WindowModelFailed {
        window: usize,
        model: String,
        #[source]
        source: Box<Error>,
    },

    // ---- metrics / statistics ----
    #[error("actual value is zero at position {0}, percentage error undefined")]
    ZeroActual(usize),
    #[error("denominator is zero (constant actuals)")]
    ZeroDenominator,
    #[error("loss sequences have different lengths: {0} vs {1}")]
    LengthMismatch(usize, usize),

    // ---- explanation ----
    #[error("too many features for exact enumeration: {have} > {max}")]
    TooManyFeatures { have: usize, max: usize },
    #[error("model output is not finite while evaluating coalition {0}")]
    NonFiniteModelOutput(String),
    #[error("kernel weight system stayed singular after {0} resampling attempts")]
    SingularWeightSystem(usize),
    #[error("unknown feature `{0}`")]
    UnknownFeature(String),

    // ---- pipeline / cli ----
    #[error("invalid configuration field `{field}`: {reason}")]
    InvalidConfig { field: String, reason: String },
    #[error("unknown model `{0}`")]
    UnknownModel(String),
    #[error("date {0} is outside the evaluated span")]
    DateOutOfRange(NaiveDate),
    #[error("no backtest results found in {0}")]
    MissingResults(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
