//! Special functions on complex arguments and deterministic quadrature.
//!
//! Everything in this module is deterministic: fixed node sets, fixed
//! subdivision policy, no randomness, no timestamps.  Repeated calls with
//! the same inputs return bit-identical results.
//!
//! Accuracy contracts (interior of the stated ranges):
//! - [`log_gamma`]: principal branch, relative error `<= 1e-12` for `|z| <= 100`.
//! - [`digamma`]: relative error `<= 1e-10` for `|z| <= 100`.
//! - [`riemann_zeta`]: absolute error `<= 1e-10` on `-1 <= Re s <= 3`,
//!   `|Im s| <= 60` (the implementation remains accurate well beyond).
//! - [`cheb_t`]: relative error `<= 1e-10` on the tested hyperbolic range.

mod cheb;
mod gamma;
mod quad;
mod zeta;

pub use cheb::{cheb_t, cheb_u};
pub use gamma::{digamma, gamma, log_gamma};
pub use quad::{
    gauss_legendre_200, integrate, integrate_complex, integrate_gl200, integrate_half_line,
    QuadratureResult, QuadratureResultComplex,
};
pub use zeta::{
    completed_zeta, completed_zeta_laurent, riemann_zeta, riemann_zeta_and_deriv, zeta_log_deriv,
    CompletedZetaCoefficients,
};

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
