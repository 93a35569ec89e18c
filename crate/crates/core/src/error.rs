use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GridError {
    #[error("grid needs at least 4 cells per axis, got {nx}x{ny}")]
    TooFewCells { nx: usize, ny: usize },
    #[error("domain lengths must be positive and finite, got lx={lx}, ly={ly}")]
    NonPositiveLength { lx: f64, ly: f64 },
    #[error("expected {expected} values, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("non-finite value at index {index}")]
    NonFinite { index: usize },
    #[error("components live on different grids")]
    GridMismatch,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EllipticError {
    #[error("right-hand side mean {mean:e} violates the periodic compatibility condition (rms {rms:e})")]
    NonZeroMeanRhs { mean: f64, rms: f64 },
    #[error("conjugate gradients stalled after {iterations} iterations at relative residual {residual:e}")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("invalid Poisson settings: {0}")]
    InvalidSettings(String),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StateError {
    #[error("vorticity has nonzero mean {mean:e}")]
    NonZeroMeanVorticity { mean: f64 },
    #[error("divergence has nonzero mean {mean:e}")]
    NonZeroMeanDivergence { mean: f64 },
    #[error("height {value:e} at cell ({i}, {j}) is below the positivity threshold")]
    NonPositiveHeight { i: usize, j: usize, value: f64 },
    #[error("gravity must be positive and finite, got {0}")]
    NonPositiveGravity(f64),
    #[error("Coriolis parameter must be finite, got {0}")]
    NonFiniteCoriolis(f64),
    #[error("state fields live on different grids")]
    GridMismatch,
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
}

/// Failure inside a single time step.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum StepError {
    #[error(transparent)]
    State(#[from] StateError),
    #[error(transparent)]
    Elliptic(#[from] EllipticError),
    #[error("height fell to {value:e} at cell ({i}, {j}) during RK stage {stage}")]
    HeightUnderflow { stage: usize, i: usize, j: usize, value: f64 },
    #[error("chain-rule residual {which} = {value:e} exceeds {tolerance:e} relative to scale {scale:e}")]
    ChainRuleViolation { which: &'static str, value: f64, scale: f64, tolerance: f64 },
}

#[derive(Debug, Error)]
pub enum SimulationError {
    #[error("invalid run spec: {0}")]
    InvalidRunSpec(String),
    #[error("step {step} (t = {time}) failed: {source}")]
    Step {
        step: usize,
        time: f64,
        #[source]
        source: StepError,
    },
    #[error("output sink failed at step {step}: {source}")]
    Sink {
        step: usize,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConfigError {
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("missing required key `{0}`")]
    MissingRequiredKey(&'static str),
    #[error("line {line}: {message}")]
    ParseError { line: usize, message: String },
}

#[derive(Debug, Error)]
#[error("{path}: {source}")]
pub struct IoError {
    pub path: PathBuf,
    #[source]
    pub source: std::io::Error,
}

impl IoError {
    pub fn new(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Self {
            path: path.into(),
            source,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PresetError {
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    State(#[from] StateError),
    #[error(transparent)]
    Elliptic(#[from] EllipticError),
}
