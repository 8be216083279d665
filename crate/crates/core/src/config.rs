//! Evaluation knobs and the estimate type returned by iterative summations.

use crate::error::{Error, Result};

/// Tolerances and truncation limits governing series and quadrature
/// evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    /// Relative tolerance on the accumulated value.
    pub rel_tol: f64,
    /// Absolute floor added to the relative criterion.
    pub abs_tol: f64,
    /// Hard cap on the number of terms.
    pub max_terms: usize,
    /// Number of successive negligible terms required before a series is
    /// declared converged. One small term is not enough: alternating and
    /// oscillatory series have incidental near-zero terms.
    pub consecutive_small: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            rel_tol: 1e-12,
            abs_tol: 1e-300,
            max_terms: 1_000_000,
            consecutive_small: 3,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::Domain(format!("rel_tol must be positive, got {}", self.rel_tol)));
        }
        if !(self.abs_tol > 0.0) {
            return Err(Error::Domain(format!("abs_tol must be positive, got {}", self.abs_tol)));
        }
        if self.max_terms < 1 {
            return Err(Error::Domain("max_terms must be at least 1".into()));
        }
        if self.consecutive_small < 1 {
            return Err(Error::Domain("consecutive_small must be at least 1".into()));
        }
        Ok(())
    }

    /// Stopping threshold for a partial value of magnitude `|value|`.
    pub(crate) fn threshold(&self, value: f64) -> f64 {
        self.rel_tol * value.abs() + self.abs_tol
    }
}

/// A numerical value produced by an iterative process, together with an
/// error estimate and a convergence verdict.
///
/// Invariant: `converged == true` implies the error estimate met the
/// requested tolerance at the point the process stopped.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesEstimate {
    pub value: f64,
    pub error_estimate: f64,
    pub terms_used: usize,
    pub converged: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_is_valid() {
        assert!(EvalConfig::default().validate().is_ok());
    }

    #[test]
    fn rejects_nonpositive_tolerances() {
        let mut c = EvalConfig::default();
        c.rel_tol = 0.0;
        assert!(c.validate().is_err());
        let mut c = EvalConfig::default();
        c.abs_tol = -1.0;
        assert!(c.validate().is_err());
        let mut c = EvalConfig::default();
        c.max_terms = 0;
        assert!(c.validate().is_err());
        let mut c = EvalConfig::default();
        c.consecutive_small = 0;
        assert!(c.validate().is_err());
    }
}
