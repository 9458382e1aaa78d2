//! Log-Gamma (principal branch), Gamma, and digamma on the complex plane.
//!
//! Strategy: arguments with `Re z >= 0.5` are shifted with the recurrence
//! until the Stirling series applies, then evaluated by an asymptotic
//! expansion with exact Bernoulli coefficients.  Arguments with
//! `Re z < 0.5` are routed through the reflection formula with a
//! branch-correct `log sin(pi z)` so that [`log_gamma`] is the principal
//! (canonical) branch: real on the positive real axis and conjugate
//! symmetric, `log_gamma(conj z) = conj(log_gamma(z))`.

use crate::error::{Error, Result};
use num_complex::Complex64;

const LN_2PI_HALF: f64 = 0.918_938_533_204_672_7; // ln(2*pi)/2
const LN_PI: f64 = 1.144_729_885_849_400_2;

/// Stirling coefficients `B_{2k} / (2k (2k-1))` for k = 1..=7.
const LOG_GAMMA_COEFFS: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
];

/// Digamma asymptotic coefficients `B_{2k} / (2k)` for k = 1..=7.
const DIGAMMA_COEFFS: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32_760.0,
    1.0 / 12.0,
];

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.floor()
}

/// Stirling series for the canonical log-Gamma; valid once `|w|` is large
/// and `|arg w| < pi` (we apply it for `Re w >= 20` or `|w| >= 30`).
fn stirling_log_gamma(w: Complex64) -> Complex64 {
    let mut series = Complex64::new(0.0, 0.0);
    let w2 = w * w;
    let mut wp = w; // w^{2k-1}
    for &c in LOG_GAMMA_COEFFS.iter() {
        series += c / wp;
        wp *= w2;
    }
    (w - 0.5) * w.ln() - w + LN_2PI_HALF + series
}

/// Branch-correct `log sin(pi z)` matching the canonical log-Gamma
/// reflection: for `Im z >= 0`,
/// `log sin(pi z) = -i pi z + i pi/2 - ln 2 + Log(1 - e^{2 pi i z})`,
/// extended to `Im z < 0` by conjugate symmetry.
fn log_sin_pi(z: Complex64) -> Complex64 {
    if z.im >= 0.0 {
        let e = (Complex64::new(0.0, 2.0 * std::f64::consts::PI) * z).exp();
        Complex64::new(-(2f64.ln()), std::f64::consts::FRAC_PI_2)
            + Complex64::new(0.0, -std::f64::consts::PI) * z
            + (Complex64::new(1.0, 0.0) - e).ln()
    } else {
        log_sin_pi(z.conj()).conj()
    }
}

/// Principal-branch log-Gamma.
///
/// Errors on the poles `z = 0, -1, -2, ...`.  Relative accuracy is
/// `<= 1e-12` for `|z| <= 100` (away from the zeros of log-Gamma itself).
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::domain("log_gamma", "argument must be finite"));
    }
    if is_nonpositive_integer(z) {
        return Err(Error::domain(
            "log_gamma",
            format!("pole at non-positive integer z = {}", z.re),
        ));
    }
    if z.re < 0.5 {
        // Reflection: log Gamma(z) = ln pi - log sin(pi z) - log Gamma(1 - z).
        let other = log_gamma(Complex64::new(1.0, 0.0) - z)?;
        return Ok(Complex64::new(LN_PI, 0.0) - log_sin_pi(z) - other);
    }
    // Shift until Stirling applies.
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < 20.0 && w.norm() < 30.0 {
        shift += w.ln();
        w += 1.0;
    }
    Ok(stirling_log_gamma(w) - shift)
}

/// The Gamma function, computed as `exp(log_gamma(z))`.
/// Errors on the poles `z = 0, -1, -2, ...`.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    Ok(log_gamma(z)?.exp())
}

/// Branch-stable cotangent of `pi z`, evaluated from the half plane where
/// the exponential is contracting.
fn cot_pi(z: Complex64) -> Complex64 {
    if z.im >= 0.0 {
        let e = (Complex64::new(0.0, 2.0 * std::f64::consts::PI) * z).exp();
        Complex64::new(0.0, 1.0) * (e + 1.0) / (e - 1.0)
    } else {
        cot_pi(z.conj()).conj()
    }
}

/// Digamma function `psi(z) = d/dz log Gamma(z)`.
///
/// Errors on the poles `z = 0, -1, -2, ...`.  Relative accuracy is
/// `<= 1e-10` for `|z| <= 100`.
pub fn digamma(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::domain("digamma", "argument must be finite"));
    }
    if is_nonpositive_integer(z) {
        return Err(Error::domain(
            "digamma",
            format!("pole at non-positive integer z = {}", z.re),
        ));
    }
    if z.re < 0.5 {
        // psi(z) = psi(1 - z) - pi cot(pi z)
        let other = digamma(Complex64::new(1.0, 0.0) - z)?;
        return Ok(other - std::f64::consts::PI * cot_pi(z));
    }
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < 20.0 && w.norm() < 30.0 {
        shift += 1.0 / w;
        w += 1.0;
    }
    let w2inv = 1.0 / (w * w);
    let mut series = Complex64::new(0.0, 0.0);
    let mut wp = w2inv; // w^{-2k}
    for &c in DIGAMMA_COEFFS.iter() {
        series += c * wp;
        wp *= w2inv;
    }
    Ok(w.ln() - 0.5 / w - series - shift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::EULER_GAMMA;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn log_gamma_known_values() {
        assert!(log_gamma(c(1.0, 0.0)).unwrap().norm() < 1e-14);
        assert!(log_gamma(c(2.0, 0.0)).unwrap().norm() < 1e-13);
        let half = log_gamma(c(0.5, 0.0)).unwrap();
        assert!((half.re - 0.5 * LN_PI).abs() < 1e-13 && half.im.abs() < 1e-13);
        let g6 = gamma(c(6.0, 0.0)).unwrap();
        assert!((g6.re - 120.0).abs() < 1e-10 && g6.im.abs() < 1e-10);
    }

    #[test]
    fn log_gamma_shift_consistency_5_plus_3i() {
        // Independent evaluation: 40 explicit recurrence steps, then the
        // raw Stirling series at Re = 45 (no additional shifting).
        let z = c(5.0, 3.0);
        let mut shift = Complex64::new(0.0, 0.0);
        let mut w = z;
        for _ in 0..40 {
            shift += w.ln();
            w += 1.0;
        }
        let reference = stirling_log_gamma(w) - shift;
        let value = log_gamma(z).unwrap();
        let rel = (value - reference).norm() / reference.norm();
        assert!(rel < 1e-12, "rel err {rel}");
    }

    #[test]
    fn gamma_recurrence_invariant_seeded() {
        // |log Gamma(z+1) - log Gamma(z) - Log z| on 100 seeded points with
        // Re z in [0.5, 10]: exact identity for the canonical branch.
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..100 {
            let z = c(rng.gen_range(0.5..10.0), rng.gen_range(-10.0..10.0));
            let lhs = log_gamma(z + 1.0).unwrap();
            let rhs = log_gamma(z).unwrap() + z.ln();
            let rel = (lhs - rhs).norm() / (1.0 + lhs.norm());
            assert!(rel < 1e-10, "z = {z}, rel = {rel}");
        }
    }

    #[test]
    fn reflection_invariant_seeded() {
        // Gamma(z) Gamma(1-z) sin(pi z) / pi = 1, checked through exp so the
        // comparison is branch-free.
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..60 {
            let mut re: f64 = rng.gen_range(-4.0..0.4);
            if (re - re.round()).abs() < 0.05 {
                re += 0.07;
            }
            let z = c(re, rng.gen_range(-5.0..5.0));
            let lhs = gamma(z).unwrap() * gamma(Complex64::new(1.0, 0.0) - z).unwrap();
            let rhs = std::f64::consts::PI
                / (Complex64::new(std::f64::consts::PI, 0.0) * z).sin();
            let rel = (lhs - rhs).norm() / rhs.norm();
            assert!(rel < 1e-9, "z = {z}, rel = {rel}");
        }
    }

    #[test]
    fn gamma_half_line_modulus() {
        // |Gamma(1/2 + it)|^2 = pi / cosh(pi t)
        for &t in &[0.5, 1.0, 3.0, 7.0] {
            let g = gamma(c(0.5, t)).unwrap();
            let lhs = g.norm_sqr();
            let rhs = std::f64::consts::PI / (std::f64::consts::PI * t).cosh();
            assert!((lhs - rhs).abs() / rhs < 1e-10, "t = {t}");
        }
    }

    #[test]
    fn conjugate_symmetry() {
        let z = c(3.3, 4.4);
        let a = log_gamma(z).unwrap();
        let b = log_gamma(z.conj()).unwrap();
        assert!((a - b.conj()).norm() < 1e-13);
        let z = c(-2.3, 1.7);
        let a = log_gamma(z).unwrap();
        let b = log_gamma(z.conj()).unwrap();
        assert!((a - b.conj()).norm() < 1e-12);
    }

    #[test]
    fn digamma_known_values() {
        let p1 = digamma(c(1.0, 0.0)).unwrap();
        assert!((p1.re + EULER_GAMMA).abs() < 1e-12 && p1.im.abs() < 1e-13);
        let p2 = digamma(c(2.0, 0.0)).unwrap();
        assert!((p2.re - (1.0 - EULER_GAMMA)).abs() < 1e-12);
        let ph = digamma(c(0.5, 0.0)).unwrap();
        assert!((ph.re + EULER_GAMMA + 2.0 * 2f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn digamma_matches_log_gamma_difference() {
        // Central difference of log_gamma at z = 1 + 10i.
        let z = c(1.0, 10.0);
        let h = 1e-4;
        let fd = (log_gamma(z + h).unwrap() - log_gamma(z - h).unwrap()) / (2.0 * h);
        let psi = digamma(z).unwrap();
        assert!((fd - psi).norm() < 1e-8, "diff {}", (fd - psi).norm());
    }

    #[test]
    fn poles_are_errors() {
        assert!(log_gamma(c(0.0, 0.0)).is_err());
        assert!(log_gamma(c(-2.0, 0.0)).is_err());
        assert!(digamma(c(0.0, 0.0)).is_err());
        assert!(digamma(c(-3.0, 0.0)).is_err());
        assert!(gamma(c(-1.0, 0.0)).is_err());
    }
}
