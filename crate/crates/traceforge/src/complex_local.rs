//! Local distributions at a complex place.
//!
//! The certified calculus is the bi-invariant one (K-type 0): identity
//! and parabolic distributions require a pair with `k_type() == 0` and
//! return a typed unsupported error otherwise.  The hyperbolic orbital
//! distribution is closed-form in `Q` and accepts optional angular
//! parameters `(n, m)` as a documented extension certified only at
//! `n = m = 0`.

use crate::error::{Error, Result};
use crate::real_local::ParabolicValue;
use crate::special::{cheb_u, digamma, gamma, integrate, EULER_GAMMA};
use crate::testfn::{ArchPlace, TestFunctionPair};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Integration cutoff for spectral integrals against `h`.
///
/// The cached-node cosine transform behind `h` resolves oscillations only up
/// to roughly `pi * nodes / length`; for the wider support used at a complex
/// place that wall sits near r = 250, so spectral integrals stop at 200 where
/// the transform is still accurate to ~1e-12.
const RMAX: f64 = 200.0;

/// Irreducible representations of GL(2, C) entering the trace formula.
#[derive(Clone, Copy, Debug)]
pub enum ReprComplex {
    /// Principal series with spectral parameter `s` and angular K-type `n`.
    PrincipalSeries { s: Complex64, n: u32 },
    /// The trivial (one-dimensional) representation.
    OneDimensional,
}

fn require_complex(function: &'static str, pair: &TestFunctionPair) -> Result<()> {
    if pair.place() != ArchPlace::Complex {
        return Err(Error::domain(function, "requires a complex-place pair"));
    }
    Ok(())
}

fn require_spherical(function: &'static str, pair: &TestFunctionPair) -> Result<()> {
    if pair.k_type() != 0 {
        return Err(Error::unsupported(
            function,
            format!(
                "certified only for the bi-invariant calculus (K-type 0), got {}",
                pair.k_type()
            ),
        ));
    }
    Ok(())
}

/// Trace of the pair against an irreducible representation.
pub fn char_value_complex(pair: &TestFunctionPair, repr: &ReprComplex) -> Result<Complex64> {
    require_complex("char_value_complex", pair)?;
    match *repr {
        ReprComplex::PrincipalSeries { s, n } => {
            if n == pair.k_type() {
                pair.h(Complex64::new(0.0, 1.0) * s)
            } else {
                Ok(Complex64::new(0.0, 0.0))
            }
        }
        ReprComplex::OneDimensional => {
            if pair.k_type() == 0 {
                Ok(Complex64::new(pair.h_at_i(0.5)?, 0.0))
            } else {
                Ok(Complex64::new(0.0, 0.0))
            }
        }
    }
}

/// The identity (Plancherel) distribution:
/// `(1/pi) int_R h(r) r^2 dr = phi(0)`.
pub fn identity_complex(pair: &TestFunctionPair) -> Result<f64> {
    require_complex("identity_complex", pair)?;
    require_spherical("identity_complex", pair)?;
    let r = integrate(|t: f64| pair.h_real(t) * t * t, 0.0, RMAX, 1e-9)?;
    Ok(2.0 * r.value / PI)
}

/// The parabolic distribution.  Divergent coefficient `g(0)`; finite part
///
/// ```text
/// h(0)/4 + (log 2pi - gamma) g(0)
///   - (1/pi) int_0^inf h(t) Re psi(1 + 2 i t) dt.
/// ```
pub fn parabolic_complex(pair: &TestFunctionPair) -> Result<ParabolicValue> {
    require_complex("parabolic_complex", pair)?;
    require_spherical("parabolic_complex", pair)?;
    let g0 = pair.g(0.0);
    let h0 = pair.h_real(0.0);
    let psi_int = integrate(
        |t: f64| {
            let psi = digamma(Complex64::new(1.0, 2.0 * t)).map(|v| v.re);
            pair.h_real(t) * psi.unwrap_or(f64::NAN)
        },
        0.0,
        RMAX,
        1e-9,
    )?;
    Ok(ParabolicValue {
        g_at_zero: g0,
        finite_part: h0 / 4.0 + ((2.0 * PI).ln() - EULER_GAMMA) * g0 - 2.0 * psi_int.value / PI,
    })
}

fn check_alpha_complex(function: &'static str, alpha: Complex64) -> Result<()> {
    if alpha == Complex64::new(0.0, 0.0) || alpha == Complex64::new(1.0, 0.0) {
        return Err(Error::domain(
            function,
            format!("alpha = {alpha} is not a regular hyperbolic eigenvalue ratio"),
        ));
    }
    Ok(())
}

/// Hyperbolic orbital distribution at complex eigenvalue ratio `alpha`:
///
/// ```text
/// J = Q(u0) / c,  u0 = |alpha| + 1/|alpha| - 2,  c = |alpha - 1|^2 / |alpha|,
/// ```
///
/// multiplied, for angular parameters `(n, m) != (0, 0)`, by
/// `e^{i m arg(alpha)/2} U_n(cos(arg(alpha)/2))`.  The angular extension
/// is certified only at `n = m = 0`.
pub fn hyperbolic_complex(
    pair: &TestFunctionPair,
    alpha: Complex64,
    n: u32,
    m: i32,
) -> Result<Complex64> {
    require_complex("hyperbolic_complex", pair)?;
    check_alpha_complex("hyperbolic_complex", alpha)?;
    let t = alpha.norm();
    let u0 = t + 1.0 / t - 2.0;
    if u0 >= pair.support_s() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let c = (alpha - 1.0).norm_sqr() / t;
    let base = pair.q(u0) / c;
    if n == 0 && m == 0 {
        return Ok(Complex64::new(base, 0.0));
    }
    let half_arg = alpha.arg() / 2.0;
    let angular = Complex64::from_polar(1.0, m as f64 * half_arg) * cheb_u(n, half_arg.cos());
    Ok(base * angular)
}

/// Weighted hyperbolic distribution (bi-invariant calculus only):
///
/// ```text
/// J^H = (2/lam^2) int_X^{L_C} g(x) sinh(x/2)
///       / ( lam^2 + 2 cosh(x/2) - (|alpha| + 1/|alpha|) ) dx,
/// X = |2 log |alpha||,   lam^2 = |alpha - 1|^2 / |alpha|.
/// ```
///
/// The denominator is bounded below by `lam^2 > 0` on the integration
/// range, so the integrand is smooth.
pub fn hyperbolic_complex_weighted(pair: &TestFunctionPair, alpha: Complex64) -> Result<f64> {
    require_complex("hyperbolic_complex_weighted", pair)?;
    require_spherical("hyperbolic_complex_weighted", pair)?;
    check_alpha_complex("hyperbolic_complex_weighted", alpha)?;
    let t = alpha.norm();
    let lam2 = (alpha - 1.0).norm_sqr() / t;
    let x_lo = (2.0 * t.ln()).abs();
    let lc = pair.support_c();
    if x_lo >= lc {
        return Ok(0.0);
    }
    let shift = t + 1.0 / t;
    let r = integrate(
        |x: f64| {
            let den = lam2 + 2.0 * (x / 2.0).cosh() - shift;
            pair.g(x) * (x / 2.0).sinh() / den
        },
        x_lo,
        lc,
        1e-11,
    )?;
    Ok(2.0 * r.value / lam2)
}

/// The standard intertwining factor at a complex place: `1/(2s)`.
///
/// Equivalently `(1/2pi) zeta_C(2s) / zeta_C(2s + 1)` with
/// `zeta_C(s) = (2 pi)^{1-s} Gamma(s)`; the logarithmic derivative of
/// `zeta_C` at 1 is `-(log 2pi + gamma)`, the constant appearing in
/// [`parabolic_complex`].
pub fn intertwiner_complex(s: Complex64) -> Result<Complex64> {
    if s == Complex64::new(0.0, 0.0) {
        return Err(Error::domain("intertwiner_complex", "pole at s = 0"));
    }
    Ok(1.0 / (2.0 * s))
}

/// `zeta_C(s) = (2 pi)^{1-s} Gamma(s)` (helper for cross-checks and the
/// global residual bookkeeping).
pub fn zeta_complex(s: Complex64) -> Result<Complex64> {
    let two_pi = Complex64::new(2.0 * PI, 0.0);
    Ok(two_pi.powc(Complex64::new(1.0, 0.0) - s) * gamma(s)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testfn::{phi_bump, BumpNormalization};

    fn spherical_pair() -> TestFunctionPair {
        TestFunctionPair::from_phi(ArchPlace::Complex, 0, phi_bump(2.0), 2.0).unwrap()
    }

    #[test]
    fn identity_equals_phi_at_zero() {
        let pair = spherical_pair();
        let id = identity_complex(&pair).unwrap();
        let target = (-1.0f64).exp();
        assert!((id - target).abs() < 2e-6, "{id} vs {target}");
        // Plancherel normalization: phi(1) = phi(0)/(2 pi).
        assert!(((target / (2.0 * PI)) - 0.058549831524).abs() < 1e-12);
        // Same value through the closed inverse phi = -Q' on a g-first pair.
        let c = pair.support_c();
        let gpair = TestFunctionPair::make_bump(
            ArchPlace::Complex,
            0,
            c,
            BumpNormalization::UnitG0,
        )
        .unwrap();
        let id_g = identity_complex(&gpair).unwrap();
        let minus_qp = -gpair.q_prime(0.0).unwrap();
        assert!((id_g - minus_qp).abs() < 2e-6, "{id_g} vs {minus_qp}");
    }

    #[test]
    fn parabolic_frozen_value() {
        let pair = spherical_pair();
        let pv = parabolic_complex(&pair).unwrap();
        assert!((pv.g_at_zero - 0.443993816168).abs() < 1e-9);
        assert!(
            (pv.finite_part - 0.739593336284).abs() < 1e-6,
            "finite = {}",
            pv.finite_part
        );
    }

    #[test]
    fn digamma_reflection_symmetry() {
        for &t in &[0.5, 3.0, 17.0] {
            let plus = digamma(Complex64::new(1.0, 2.0 * t)).unwrap().re;
            let minus = digamma(Complex64::new(1.0, -2.0 * t)).unwrap().re;
            assert!((plus - minus).abs() < 1e-12, "t={t}");
        }
    }

    #[test]
    fn hyperbolic_frozen_values() {
        let pair = spherical_pair();
        let cases = [
            (Complex64::new(1.5, 0.3), 1.6948453526),
            (Complex64::new(0.8, 0.9), 0.6109497296),
            (Complex64::new(2.2, 0.0), 0.3240111381),
        ];
        for &(alpha, want) in &cases {
            let j = hyperbolic_complex(&pair, alpha, 0, 0).unwrap();
            assert!(
                (j.re - want).abs() < 1e-7 && j.im == 0.0,
                "alpha={alpha}: {j} vs {want}"
            );
        }
    }

    #[test]
    fn weighted_hyperbolic_frozen_values() {
        let pair = spherical_pair();
        let general = [
            (Complex64::new(1.4, 0.5), 2.9216648117),
            (Complex64::new(1.8, -0.2), 1.3040266749),
        ];
        for &(alpha, want) in &general {
            let j = hyperbolic_complex_weighted(&pair, alpha).unwrap();
            assert!((j - want).abs() < 1e-6, "alpha={alpha}: {j} vs {want}");
        }
        // Unit-circle ratios: u0 = 0, lower limit X = 0.
        let circle = [
            (PI / 3.0, 0.4251704877),
            (PI / 2.0, 0.1224079560),
            (2.2, 0.0516820411),
        ];
        for &(theta, want) in &circle {
            let alpha = Complex64::from_polar(1.0, theta);
            let j = hyperbolic_complex_weighted(&pair, alpha).unwrap();
            assert!((j - want).abs() < 1e-6, "theta={theta}: {j} vs {want}");
        }
    }

    #[test]
    fn hyperbolic_guards() {
        let pair = spherical_pair();
        assert!(hyperbolic_complex(&pair, Complex64::new(0.0, 0.0), 0, 0).is_err());
        assert!(hyperbolic_complex(&pair, Complex64::new(1.0, 0.0), 0, 0).is_err());
        // |alpha| = 6 puts u0 beyond the support.
        let far = hyperbolic_complex(&pair, Complex64::new(6.0, 0.0), 0, 0).unwrap();
        assert_eq!(far, Complex64::new(0.0, 0.0));
        // Weighted integral empties when |2 log|alpha|| >= L_C.
        let farw =
            hyperbolic_complex_weighted(&pair, Complex64::new(4.1, 0.0)).unwrap();
        assert_eq!(farw, 0.0);
    }

    #[test]
    fn angular_extension_factor() {
        let pair = spherical_pair();
        let alpha = Complex64::new(1.2, 0.4);
        let base = hyperbolic_complex(&pair, alpha, 0, 0).unwrap();
        let ext = hyperbolic_complex(&pair, alpha, 1, 2).unwrap();
        let half = alpha.arg() / 2.0;
        let factor = Complex64::from_polar(1.0, 2.0 * half) * cheb_u(1, half.cos());
        assert!((ext - base * factor).norm() < 1e-13);
    }

    #[test]
    fn spherical_gates() {
        let pair1 =
            TestFunctionPair::from_phi(ArchPlace::Complex, 1, phi_bump(2.0), 2.0).unwrap();
        assert!(matches!(
            identity_complex(&pair1),
            Err(Error::Unsupported { .. })
        ));
        assert!(matches!(
            parabolic_complex(&pair1),
            Err(Error::Unsupported { .. })
        ));
        assert!(matches!(
            hyperbolic_complex_weighted(&pair1, Complex64::new(1.5, 0.0)),
            Err(Error::Unsupported { .. })
        ));
        // Real-place pairs are rejected outright.
        let rpair = TestFunctionPair::from_phi(ArchPlace::Real, 0, phi_bump(2.0), 2.0).unwrap();
        assert!(identity_complex(&rpair).is_err());
    }

    #[test]
    fn char_values() {
        let pair = spherical_pair();
        let s = Complex64::new(0.3, 1.1);
        let matching = ReprComplex::PrincipalSeries { s, n: 0 };
        let v = char_value_complex(&pair, &matching).unwrap();
        let h = pair.h(Complex64::new(0.0, 1.0) * s).unwrap();
        assert!((v - h).norm() < 1e-14);
        let mismatched = ReprComplex::PrincipalSeries { s, n: 2 };
        assert_eq!(
            char_value_complex(&pair, &mismatched).unwrap(),
            Complex64::new(0.0, 0.0)
        );
        let one = char_value_complex(&pair, &ReprComplex::OneDimensional).unwrap();
        assert!((one.re - pair.h_at_i(0.5).unwrap()).abs() < 1e-14);
    }

    #[test]
    fn intertwiner_is_zeta_ratio() {
        assert!(intertwiner_complex(Complex64::new(0.0, 0.0)).is_err());
        for &s in &[
            Complex64::new(0.7, 0.0),
            Complex64::new(0.25, 1.3),
            Complex64::new(-0.4, 0.2),
        ] {
            let direct = intertwiner_complex(s).unwrap();
            let ratio = zeta_complex(2.0 * s).unwrap()
                / zeta_complex(2.0 * s + 1.0).unwrap()
                / (2.0 * PI);
            assert!((direct - ratio).norm() < 1e-10, "s={s}");
        }
        // Logarithmic derivative of zeta_C at 1 equals -(log 2pi + gamma).
        let h = 1e-6;
        let fd = ((zeta_complex(Complex64::new(1.0 + h, 0.0)).unwrap()
            / zeta_complex(Complex64::new(1.0 - h, 0.0)).unwrap())
        .ln()
            / (2.0 * h))
            .re;
        assert!((fd + (2.0 * PI).ln() + EULER_GAMMA).abs() < 1e-8);
    }
}
