//! Generalized hypergeometric series pFq by direct term summation.

use num_complex::Complex64;

use crate::config::{EvalConfig, SeriesEstimate};
use crate::error::{Error, Result};

/// Parameters of a generalized hypergeometric series
/// pFq(a_1..a_p; b_1..b_q; z).
#[derive(Debug, Clone, PartialEq)]
pub struct PfqParams {
    pub upper: Vec<f64>,
    pub lower: Vec<f64>,
    pub argument: f64,
}

impl PfqParams {
    pub fn new(upper: Vec<f64>, lower: Vec<f64>, argument: f64) -> Self {
        PfqParams { upper, lower, argument }
    }
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Index of the last term of a terminating series: the smallest n with
/// some upper parameter equal to -n.
fn termination_index(upper: &[f64]) -> Option<u32> {
    upper
        .iter()
        .filter(|&&a| is_nonpositive_integer(a) && -a <= u32::MAX as f64)
        .map(|&a| (-a) as u32)
        .min()
}

/// Validates parameter poles and convergence of the argument; returns the
/// termination index when the series is a polynomial.
fn check_parameters(
    upper: &[f64],
    lower: &[f64],
    z_abs: f64,
    z_is_real_one: bool,
) -> Result<Option<u32>> {
    let n_t = termination_index(upper);
    for &b in lower {
        if is_nonpositive_integer(b) {
            // (b)_k first vanishes at k = 1 - b; every term up to the
            // termination index must stay clear of it.
            let pole_reached = match n_t {
                Some(n) => (n as f64) > -b,
                None => true,
            };
            if pole_reached {
                return Err(Error::Pole(format!(
                    "lower parameter {b} is a non-positive integer reached before termination"
                )));
            }
        }
    }
    if n_t.is_none() {
        if z_abs > 1.0 {
            return Err(Error::Divergence(format!(
                "non-terminating series with |z| = {z_abs} > 1"
            )));
        }
        if z_abs == 1.0 {
            if !z_is_real_one {
                // |z| = 1, z != 1 is outside Eq.-style convergence
                // statements and not needed by any closed form.
                return Err(Error::Divergence(
                    "non-terminating series on |z| = 1 with z != 1".into(),
                ));
            }
            let balance: f64 = lower.iter().sum::<f64>() - upper.iter().sum::<f64>();
            if balance <= 0.0 {
                return Err(Error::Divergence(format!(
                    "series at z = 1 needs sum(lower) - sum(upper) > 0, got {balance}"
                )));
            }
        }
    }
    Ok(n_t)
}

/// pFq at real argument. Terminates at a negative-integer upper parameter
/// when present; otherwise stops once `consecutive_small` successive terms
/// fall below `rel_tol * |partial sum| + abs_tol`.
pub fn pfq(params: &PfqParams, config: &EvalConfig) -> Result<SeriesEstimate> {
    config.validate()?;
    let z = params.argument;
    let n_t = check_parameters(&params.upper, &params.lower, z.abs(), z == 1.0)?;
    let (value, terms_used) = sum_series(&params.upper, &params.lower, z, n_t, config)?;
    Ok(SeriesEstimate {
        value,
        error_estimate: match n_t {
            Some(_) => 0.0,
            None => config.threshold(value),
        },
        terms_used,
        converged: true,
    })
}

/// pFq at complex argument; used by the inverse-Laplace contour evaluator,
/// the one complex-arithmetic code path in the crate. Returns the value
/// and the number of terms consumed.
pub fn pfq_complex(
    upper: &[f64],
    lower: &[f64],
    z: Complex64,
    config: &EvalConfig,
) -> Result<(Complex64, usize)> {
    config.validate()?;
    let is_real_one = z.im == 0.0 && z.re == 1.0;
    let n_t = check_parameters(upper, lower, z.norm(), is_real_one)?;
    sum_series(upper, lower, z, n_t, config)
}

/// Scalar abstraction letting one summation loop serve f64 and Complex64.
trait SeriesScalar: Copy + std::ops::Add<Output = Self> + std::ops::Mul<Output = Self> {
    const ONE: Self;
    fn scale(self, f: f64) -> Self;
    fn modulus(self) -> f64;
}

impl SeriesScalar for f64 {
    const ONE: f64 = 1.0;
    fn scale(self, f: f64) -> f64 {
        self * f
    }
    fn modulus(self) -> f64 {
        self.abs()
    }
}

impl SeriesScalar for Complex64 {
    const ONE: Complex64 = Complex64::new(1.0, 0.0);
    fn scale(self, f: f64) -> Complex64 {
        self * f
    }
    fn modulus(self) -> f64 {
        self.norm()
    }
}

fn sum_series<T: SeriesScalar>(
    upper: &[f64],
    lower: &[f64],
    z: T,
    n_t: Option<u32>,
    config: &EvalConfig,
) -> Result<(T, usize)> {
    let mut term = T::ONE;
    let mut sum = T::ONE;
    let mut small_run = 0usize;
    let mut k = 0u64;
    loop {
        if let Some(n) = n_t {
            if k >= n as u64 {
                return Ok((sum, (k + 1) as usize));
            }
        }
        if (k + 1) as usize >= config.max_terms {
            return Err(Error::NonConvergence {
                terms: (k + 1) as usize,
                value: sum.modulus(),
                spread: term.modulus(),
            });
        }
        let kf = k as f64;
        let mut ratio = 1.0 / (kf + 1.0);
        for &a in upper {
            ratio *= a + kf;
        }
        for &b in lower {
            ratio /= b + kf;
        }
        term = (term * z).scale(ratio);
        sum = sum + term;
        k += 1;
        if n_t.is_none() {
            if term.modulus() <= config.threshold(sum.modulus()) {
                small_run += 1;
                if small_run >= config.consecutive_small {
                    return Ok((sum, (k + 1) as usize));
                }
            } else {
                small_run = 0;
            }
        }
    }
}
