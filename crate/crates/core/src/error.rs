//! Error taxonomy shared by every evaluator in the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Argument outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A gamma-function or series parameter sits on (or within guard
    /// distance of) a pole.
    #[error("parameter pole: {0}")]
    Pole(String),

    /// The stopping rule never fired within the term budget.
    #[error("series did not converge within {terms} terms (estimate {value:e}, spread {spread:e})")]
    NonConvergence { terms: usize, value: f64, spread: f64 },

    /// The series diverges for the given argument.
    #[error("series diverges: {0}")]
    Divergence(String),

    /// Result exceeds the representable range even after log-space
    /// recombination.
    #[error("range overflow: {0}")]
    Overflow(String),

    /// A quadrature failed to reach its target accuracy.
    #[error("quadrature did not converge: {0}")]
    Quadrature(String),
}
