//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid model parameters: {0}")]
    InvalidParams(String),

    #[error("grid needs at least {min} points, got {got}")]
    GridTooSmall { min: usize, got: usize },

    #[error("grid spacing must be positive (x_min = {x_min}, x_max = {x_max})")]
    DegenerateGrid { x_min: f64, x_max: f64 },

    #[error("stencil needs at least {min} samples, got {got}")]
    StencilTooShort { min: usize, got: usize },

    #[error("field length {got} does not match grid size {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("density must be non-negative, found {value} at node {index}")]
    NegativeDensity { index: usize, value: f64 },

    #[error("state is not normalized: ∫ρ dx = {norm} (tolerance {tol})")]
    NotNormalized { norm: f64, tol: f64 },

    #[error("non-normalizable state has no particle observables")]
    NonNormalizable,

    #[error("solitons require negative coupling (C = {coupling})")]
    SolitonsNeedNegativeCoupling { coupling: f64 },

    #[error("overcritical potential strength: k = {strength} > k_crit = {critical}")]
    OvercriticalPotential { strength: f64, critical: f64 },

    #[error("zero coupling: the model has no characteristic length")]
    ZeroCoupling,

    #[error("packet width parameter t0 = {t0} must exceed the critical value {critical}")]
    PacketBelowCritical { t0: f64, critical: f64 },

    #[error("packet phase offset has a pole at |t| = {pole}")]
    PhaseOffsetPole { pole: f64 },

    #[error("no nonlinear nodeless state: ω = {omega} > ω_crit = {critical}")]
    NoNonlinearState { omega: f64, critical: f64 },

    #[error("particle creation regime: ω = {omega} ≥ ω_creat = {critical}")]
    ParticleCreation { omega: f64, critical: f64 },

    #[error("frequency must be positive, got {0}")]
    NonPositiveFrequency(f64),

    #[error("blow-up detected at step {step} (t = {t})")]
    BlowUp {
        step: usize,
        t: f64,
        trace: Box<crate::evolve::EvolutionTrace>,
    },

    #[error("norm drift {drift:e} exceeds {limit:e} at step {step} (t = {t})")]
    NormDrift {
        step: usize,
        t: f64,
        drift: f64,
        limit: f64,
        trace: Box<crate::evolve::EvolutionTrace>,
    },

    #[error("invalid evolution config: {0}")]
    InvalidConfig(String),

    #[error("scenario error: {0}")]
    Scenario(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}
