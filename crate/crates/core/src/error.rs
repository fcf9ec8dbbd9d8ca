use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: max |A - A^H| = {deviation:e}")]
    NonHermitianInput { deviation: f64 },

    #[error("density matrix is not Hermitian: max |A - A^H| = {deviation:e}")]
    NonHermitian { deviation: f64 },

    #[error("density matrix trace is {trace} (expected 1)")]
    TraceNotOne { trace: f64 },

    #[error("density matrix is not positive semidefinite: smallest eigenvalue {min_eigenvalue:e}")]
    NotPsd { min_eigenvalue: f64 },

    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),

    #[error("{what} = {value} is outside its domain {domain}")]
    DomainError {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix contains a non-finite entry")]
    NonFinite,

    #[error("state is not of X form: largest off-pattern entry {deviation:e}")]
    NotXState { deviation: f64 },

    #[error("state vector norm is {norm} (expected 1)")]
    NotNormalized { norm: f64 },

    #[error("generator is proportional to the identity; span{{I, U}} is one-dimensional")]
    DegenerateBasis,

    #[error("rational composition is singular: |1 + beta^2 mu nu| = {denominator:e}")]
    SingularComposition { denominator: f64 },

    #[error("time scale {scale} of model {model} is zero but the time grid is non-zero")]
    ZeroScale { model: &'static str, scale: &'static str },

    #[error("no closed-form oracle for model {model} on state {state}{detail}")]
    NoOracle {
        model: &'static str,
        state: &'static str,
        detail: &'static str,
    },

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),
}
