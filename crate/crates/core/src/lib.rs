//! Numerical kernel for the generalized spiked harmonic oscillator:
//! special functions, closed-form perturbation-series sums with
//! independent oracles, and basis/matrix-element machinery.
//!
//! Layout:
//! - [`hyperfun`]: gamma family, Pochhammer symbols, Laguerre polynomials,
//!   generalized hypergeometric series.
//! - [`sums`]: the target series S(alpha, gamma, x), its closed forms for
//!   even alpha, and three independent evaluators (windowed partial sums,
//!   weighted-Kummer closed identities, inverse-Laplace contour
//!   quadrature).
//! - [`oscillator`]: basis wavefunctions, energies, x^(-alpha) and
//!   Hamiltonian matrix elements, first-order wavefunction correction.

pub mod config;
pub mod error;
pub mod hyperfun;
pub mod oscillator;
pub mod sums;

pub use config::{EvalConfig, SeriesEstimate};
pub use error::{Error, Result};
