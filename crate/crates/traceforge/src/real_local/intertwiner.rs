//! The standard intertwining factor at a real place.

use crate::error::{Error, Result};
use crate::special::log_gamma;
use num_complex::Complex64;
use std::f64::consts::PI;

/// The intertwining factor
///
/// ```text
/// lambda_n(s) = i^n sqrt(pi) Gamma(s) Gamma(s + 1/2)
///     / ( Gamma(s + 1/2 + n/2) Gamma(s + 1/2 - n/2) ),
/// ```
///
/// evaluated branch-safely through sums of `log_gamma`.  A pole of a
/// denominator gamma factor gives 0; a pole of a numerator factor is a
/// domain error.
pub fn intertwiner_real(n: u32, s: Complex64) -> Result<Complex64> {
    let half = Complex64::new(0.5, 0.0);
    let nh = Complex64::new(n as f64 / 2.0, 0.0);
    let den1 = log_gamma(s + half + nh);
    let den2 = log_gamma(s + half - nh);
    let (d1, d2) = match (den1, den2) {
        (Ok(a), Ok(b)) => (a, b),
        // 1/Gamma vanishes at the pole.
        _ => return Ok(Complex64::new(0.0, 0.0)),
    };
    let n1 = log_gamma(s).map_err(|_| {
        Error::domain("intertwiner_real", format!("Gamma(s) pole at s = {s}"))
    })?;
    let n2 = log_gamma(s + half).map_err(|_| {
        Error::domain(
            "intertwiner_real",
            format!("Gamma(s + 1/2) pole at s = {s}"),
        )
    })?;
    let ipow = match n % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    };
    Ok(ipow * PI.sqrt() * (n1 + n2 - d1 - d2).exp())
}

/// Logarithmic derivative of the ratio
/// `lambda_n(s) / lambda_{n-2}(s) = (n - 1 - 2s)/(n - 1 + 2s)`:
///
/// ```text
/// d/ds log(lambda_n / lambda_{n-2}) = 1/(s - a) - 1/(s + a),
/// a = (n - 1)/2.
/// ```
///
/// This is the rational factor that drives the residue bookkeeping of
/// the scattering term for discrete-series data.
pub fn intertwiner_real_ratio_log_derivative(n: u32, s: Complex64) -> Result<Complex64> {
    let a = Complex64::new((n as f64 - 1.0) / 2.0, 0.0);
    if (s - a).norm() < 1e-14 || (s + a).norm() < 1e-14 {
        return Err(Error::domain(
            "intertwiner_real_ratio_log_derivative",
            format!("pole of the ratio at s = {s}"),
        ));
    }
    Ok(1.0 / (s - a) - 1.0 / (s + a))
}
