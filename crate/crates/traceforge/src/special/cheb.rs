//! Chebyshev functions of the first and second kind.
//!
//! [`cheb_t`] accepts a real (not necessarily integer) order
//! `lambda >= 0` and evaluates by the appropriate trigonometric or
//! hyperbolic branch; for `x <= -1` a non-integer order has no
//! single-valued real value and is a domain error.

use crate::error::{Error, Result};

/// Chebyshev function of the first kind, `T_lambda(x)`, for real order
/// `lambda >= 0`:
///
/// - `|x| < 1`:  `cos(lambda * acos x)`
/// - `x >= 1`:   `cosh(lambda * acosh x)`
/// - `x <= -1`:  integer `lambda` only, `(-1)^lambda cosh(lambda * acosh(-x))`;
///   non-integer orders are a domain error.
pub fn cheb_t(lambda: f64, x: f64) -> Result<f64> {
    if !(lambda >= 0.0) || !lambda.is_finite() {
        return Err(Error::domain(
            "cheb_t",
            format!("order must be a finite real >= 0, got {lambda}"),
        ));
    }
    if !x.is_finite() {
        return Err(Error::domain("cheb_t", "argument must be finite"));
    }
    if x.abs() < 1.0 {
        Ok((lambda * x.acos()).cos())
    } else if x >= 1.0 {
        Ok((lambda * x.acosh()).cosh())
    } else {
        // x <= -1
        if lambda.fract() != 0.0 {
            return Err(Error::domain(
                "cheb_t",
                format!("non-integer order {lambda} is not single-valued for x = {x} <= -1"),
            ));
        }
        let sign = if (lambda as i64) % 2 == 0 { 1.0 } else { -1.0 };
        Ok(sign * (lambda * (-x).acosh()).cosh())
    }
}

/// Chebyshev polynomial of the second kind `U_n(x)` by the three-term
/// recurrence `U_0 = 1`, `U_1 = 2x`, `U_{k+1} = 2x U_k - U_{k-1}`.
pub fn cheb_u(n: u32, x: f64) -> f64 {
    match n {
        0 => 1.0,
        1 => 2.0 * x,
        _ => {
            let mut um1 = 1.0;
            let mut u = 2.0 * x;
            for _ in 2..=n {
                let next = 2.0 * x * u - um1;
                um1 = u;
                u = next;
            }
            u
        }
    }
}
