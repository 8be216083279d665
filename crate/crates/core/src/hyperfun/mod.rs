//! Scalar special-function kernel: gamma-family functions, Pochhammer
//! symbols, associated Laguerre polynomials, and terminating or convergent
//! generalized hypergeometric series.
//!
//! Everything here is a pure function of its arguments; there is no global
//! state and concurrent use needs no coordination.

pub mod gamma;
pub mod laguerre;
pub mod pfq;
pub mod pochhammer;

pub use gamma::{digamma, gamma, log_gamma};
pub use laguerre::{kummer_terminating, laguerre, two_f_zero_terminating};
pub use pfq::{pfq, pfq_complex, PfqParams};
pub use pochhammer::{ln_pochhammer, pochhammer};
