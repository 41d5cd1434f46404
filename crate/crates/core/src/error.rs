//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument was outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A beam or object description violated an invariant.
    #[error("invalid specification: {0}")]
    InvalidSpec(String),

    /// Power normalization requested for a beam with no envelope; the radial
    /// power integral of a pure Bessel beam diverges.
    #[error("cannot normalize a pure Bessel beam (infinite power per unit length); set an envelope width")]
    UnsupportedNormalization,

    /// The operation is not defined for the requested polarization or mode content.
    #[error("unsupported configuration: {0}")]
    UnsupportedConfiguration(String),

    /// The Belinfante per-photon kick was requested at a zero of the
    /// denominator Bessel function, where the ratio diverges.
    #[error("Belinfante kick pole at rho = {rho:.6e} m (denominator Bessel zero)")]
    Pole { rho: f64 },

    /// A finite-difference evaluation was requested too close to the axis
    /// for the configured step.
    #[error("finite-difference step underflow: rho = {rho:.6e} m <= step {step:.6e} m")]
    StepUnderflow { rho: f64, step: f64 },

    /// Required configuration was missing or inconsistent.
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
