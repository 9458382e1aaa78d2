//! # traceforge
//!
//! Local distributions and test-function calculus for the GL(2) trace
//! formula, together with an exact finite-group oracle and a global
//! assembler that reproduces the classical Selberg trace formula for
//! the modular group.
//!
//! The crate is organized bottom-up:
//!
//! - [`special`] — special functions on complex arguments (log-Gamma,
//!   digamma, Riemann zeta and its logarithmic derivative, completed
//!   zeta), deterministic adaptive quadrature, and Chebyshev functions
//!   of real (not necessarily integer) order.
//! - [`testfn`] — the test-function calculus: smooth bump factories,
//!   the Abel-type transforms of integer order and their inverses, and
//!   the `(phi, Q, g, h)` quadruple pipeline used by every
//!   archimedean distribution.
//! - [`real_local`] — local distributions at a real place: character
//!   values, identity, parabolic, hyperbolic and elliptic terms,
//!   intertwiner factors, and discrete-series pseudo-coefficients.
//! - [`complex_local`] — the same surface at a complex place for the
//!   bi-invariant (spherical) case.
//! - [`padic_local`] — exact rational/cyclotomic local distributions at
//!   a finite place, plus a brute-force finite-group model over
//!   `GL2(Z/p^n)` that certifies the closed forms by explicit summation.
//! - [`assembler`] — the global assembly: named geometric rows,
//!   scattering/residual/one-dimensional terms, the spectral side from
//!   an eigenvalue fixture, and Weyl-law estimates.
//! - [`cli`] — the report-producing command layer used by the thin
//!   `traceforge` binary; every command returns a deterministic,
//!   JSON-serializable run report.
//!
//! Numerical conventions: all quadrature is deterministic (fixed nodes,
//! fixed subdivision policy), so every function in this crate returns
//! bit-identical results across runs on the same platform.  Accuracy
//! targets are stated per routine; typical interior accuracy is 1e-10
//! or better on the documented ranges.

pub mod assembler;
pub mod cli;
pub mod complex_local;
pub mod error;
pub mod padic_local;
pub mod real_local;
pub mod special;
pub mod testfn;

pub use error::{Error, Result};
