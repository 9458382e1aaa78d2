//! The five local distributions at a real place.

use crate::error::{Error, Result};
use crate::special::{cheb_t, digamma, integrate, EULER_GAMMA};
use crate::testfn::{ArchPlace, TestFunctionPair};
use num_complex::Complex64;
use std::f64::consts::PI;

use super::{Parity, ReprReal};

/// Integration cutoff for spectral-parameter integrals against `h(r)`;
/// the transform of a compactly supported smooth `g` decays fast enough
/// that the tail beyond 300 is below 1e-7 for every fixture in use.
const RMAX: f64 = 300.0;

/// Cutoff for the elliptic continuous integral, whose kernel decays like
/// `exp(-2 min(theta, pi - theta) r)`; trusted for
/// `theta in [0.15, pi - 0.15]`.
const ELLIPTIC_RMAX: f64 = 80.0;

fn require_real(function: &'static str, pair: &TestFunctionPair) -> Result<()> {
    if pair.place() != ArchPlace::Real {
        return Err(Error::domain(function, "requires a real-place pair"));
    }
    Ok(())
}

/// Value and regularized finite part of a parabolic (unipotent-type)
/// distribution.  The raw term diverges; `g_at_zero` multiplies the
/// divergent length parameter and `finite_part` is the regularized
/// remainder.
#[derive(Clone, Copy, Debug)]
pub struct ParabolicValue {
    pub g_at_zero: f64,
    pub finite_part: f64,
}

/// Trace of the pair against an irreducible representation.
pub fn char_value_real(pair: &TestFunctionPair, repr: &ReprReal) -> Result<Complex64> {
    require_real("char_value_real", pair)?;
    let n = pair.k_type();
    match *repr {
        ReprReal::PrincipalSeries { s, parity } => {
            if parity == Parity::of(n) {
                pair.h(Complex64::new(0.0, 1.0) * s)
            } else {
                Ok(Complex64::new(0.0, 0.0))
            }
        }
        ReprReal::DiscreteSeries { weight } => {
            if weight < 2 {
                return Err(Error::domain(
                    "char_value_real",
                    format!("discrete series weight must be >= 2, got {weight}"),
                ));
            }
            if n >= weight && (n - weight) % 2 == 0 {
                Ok(Complex64::new(
                    pair.h_at_i((weight as f64 - 1.0) / 2.0)?,
                    0.0,
                ))
            } else {
                Ok(Complex64::new(0.0, 0.0))
            }
        }
        ReprReal::OneDimensional => {
            if n == 0 {
                Ok(Complex64::new(pair.h_at_i(0.5)?, 0.0))
            } else {
                Ok(Complex64::new(0.0, 0.0))
            }
        }
    }
}

/// The identity (Plancherel) distribution.  Equals `phi(0)`:
///
/// ```text
/// sum_{1 <= l <= n, l = n-1 (mod 2)} (l / 4pi) h(i l/2)
///   + (1/4pi) int_R h(r) w_n(r) dr,
/// ```
///
/// with `w_n(r) = r tanh(pi r)` for even `n` and `r coth(pi r)` for
/// odd `n`.
pub fn identity_real(pair: &TestFunctionPair) -> Result<f64> {
    require_real("identity_real", pair)?;
    let n = pair.k_type();
    let mut disc = 0.0;
    let mut l = if n % 2 == 0 { 1 } else { 2 };
    while l <= n {
        disc += (l as f64) / (4.0 * PI) * pair.h_at_i(l as f64 / 2.0)?;
        l += 2;
    }
    let even = n % 2 == 0;
    let cont = integrate(
        |r: f64| {
            let w = if even {
                r * (PI * r).tanh()
            } else if r < 1e-4 {
                1.0 / PI + PI * r * r / 3.0
            } else {
                r / (PI * r).tanh()
            };
            pair.h_real(r) * w
        },
        0.0,
        RMAX,
        1e-9,
    )?;
    Ok(disc + 2.0 * cont.value / (4.0 * PI))
}

/// The parabolic distribution.  The divergent part is proportional to
/// `g(0)`; the finite part is
///
/// ```text
/// (log pi - gamma)/2 g(0) + h(0)/4
///   - (1/2pi) int_R h(r) Re psi(1 + i r) dr
///   + int_0^C g(u) (1 - cosh(n u / 2)) / (2 sinh(u/2)) du.
/// ```
pub fn parabolic_real(pair: &TestFunctionPair) -> Result<ParabolicValue> {
    require_real("parabolic_real", pair)?;
    let n = pair.k_type();
    let g0 = pair.g(0.0);
    let h0 = pair.h_real(0.0);
    let psi_int = integrate(
        |r: f64| {
            let psi = digamma(Complex64::new(1.0, r)).map(|v| v.re);
            pair.h_real(r) * psi.unwrap_or(f64::NAN)
        },
        0.0,
        RMAX,
        1e-9,
    )?;
    let u_int = if n == 0 {
        0.0
    } else {
        let nn = n as f64;
        integrate(
            |u: f64| {
                let ratio = if u < 1e-3 {
                    let n2 = nn * nn;
                    -(n2 * u / 8.0) * (1.0 + u * u * (n2 / 48.0 - 1.0 / 24.0))
                } else {
                    (1.0 - (nn * u / 2.0).cosh()) / (2.0 * (u / 2.0).sinh())
                };
                pair.g(u) * ratio
            },
            0.0,
            pair.support_c(),
            1e-10,
        )?
        .value
    };
    let finite = (PI.ln() - EULER_GAMMA) / 2.0 * g0 + h0 / 4.0 - psi_int.value / PI + u_int;
    Ok(ParabolicValue {
        g_at_zero: g0,
        finite_part: finite,
    })
}

/// Normalization conventions for the hyperbolic distribution.  The
/// default `QOverSinh` is the one certified against the direct orbital
/// integral; the other two are alternative normalizations kept callable
/// for comparison.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum HyperbolicConvention {
    /// `Q(u0) / (2 |sinh(log(alpha)/2)|)` with `u0 = alpha + 1/alpha - 2`.
    #[default]
    QOverSinh,
    /// `g(log(alpha)/2) / cosh(log(alpha)/2)`.
    GCosh,
    /// `g(log(alpha)/2) / |sinh(log(alpha)/2)|`.
    GSinh,
}

fn check_alpha(function: &'static str, alpha: f64) -> Result<Option<f64>> {
    if alpha < 0.0 {
        return Ok(Some(0.0));
    }
    if alpha == 0.0 || alpha == 1.0 {
        return Err(Error::domain(
            function,
            format!("alpha = {alpha} is not a regular hyperbolic eigenvalue ratio"),
        ));
    }
    Ok(None)
}

/// Hyperbolic orbital distribution at eigenvalue ratio `alpha`.
pub fn hyperbolic_real(
    pair: &TestFunctionPair,
    alpha: f64,
    convention: HyperbolicConvention,
) -> Result<f64> {
    require_real("hyperbolic_real", pair)?;
    if let Some(v) = check_alpha("hyperbolic_real", alpha)? {
        return Ok(v);
    }
    let la = alpha.ln();
    match convention {
        HyperbolicConvention::QOverSinh => {
            let u0 = alpha + 1.0 / alpha - 2.0;
            if u0 >= pair.support_s() {
                return Ok(0.0);
            }
            Ok(pair.q(u0) / (2.0 * (la / 2.0).sinh().abs()))
        }
        HyperbolicConvention::GCosh => Ok(pair.g(la / 2.0) / (la / 2.0).cosh()),
        HyperbolicConvention::GSinh => Ok(pair.g(la / 2.0) / (la / 2.0).sinh().abs()),
    }
}

/// The same distribution as [`hyperbolic_real`] (default convention),
/// computed as the direct orbital integral
///
/// ```text
/// int_{-xm}^{xm} phi(u0 + (alpha-1)^2 x^2 / alpha)
///     T_n( (alpha+1) / hypot(alpha+1, (alpha-1)x) ) dx.
/// ```
pub fn hyperbolic_real_direct(pair: &TestFunctionPair, alpha: f64) -> Result<f64> {
    require_real("hyperbolic_real_direct", pair)?;
    if let Some(v) = check_alpha("hyperbolic_real_direct", alpha)? {
        return Ok(v);
    }
    let s = pair.support_s();
    let u0 = alpha + 1.0 / alpha - 2.0;
    if u0 >= s {
        return Ok(0.0);
    }
    let n = pair.k_type() as f64;
    let xm = ((s - u0) * alpha).sqrt() / (alpha - 1.0).abs();
    let r = integrate(
        |x: f64| {
            let u = u0 + (alpha - 1.0).powi(2) * x * x / alpha;
            let ratio = (alpha + 1.0) / (alpha + 1.0).hypot((alpha - 1.0) * x);
            let t = cheb_t(n, ratio).unwrap_or(f64::NAN);
            pair.phi(u).unwrap_or(f64::NAN) * t
        },
        0.0,
        xm,
        1e-10,
    )?;
    Ok(2.0 * r.value)
}

/// Weighted hyperbolic distribution: the integrand of
/// [`hyperbolic_real_direct`] multiplied by `log(1 + x^2)`.
pub fn hyperbolic_real_weighted(pair: &TestFunctionPair, alpha: f64) -> Result<f64> {
    require_real("hyperbolic_real_weighted", pair)?;
    if let Some(v) = check_alpha("hyperbolic_real_weighted", alpha)? {
        return Ok(v);
    }
    let s = pair.support_s();
    let u0 = alpha + 1.0 / alpha - 2.0;
    if u0 >= s {
        return Ok(0.0);
    }
    let n = pair.k_type() as f64;
    let xm = ((s - u0) * alpha).sqrt() / (alpha - 1.0).abs();
    let r = integrate(
        |x: f64| {
            let u = u0 + (alpha - 1.0).powi(2) * x * x / alpha;
            let ratio = (alpha + 1.0) / (alpha + 1.0).hypot((alpha - 1.0) * x);
            let t = cheb_t(n, ratio).unwrap_or(f64::NAN);
            pair.phi(u).unwrap_or(f64::NAN) * t * (x * x).ln_1p()
        },
        0.0,
        xm,
        1e-10,
    )?;
    Ok(2.0 * r.value)
}

/// Elliptic distribution at rotation angle `theta in (0, pi)`.
///
/// The value is a continuous spectral integral plus a discrete sum:
///
/// ```text
/// (1/2|sin th|) int_R h(r) k_n(th, r) dr
///   + sum_{m = n-1-2j > 0} i e^{i m th} h(i m/2) / |sin th|
///   + [n odd] (-i) h(0) / (2 |sin th|),
/// ```
///
/// with `k_n = cosh((pi-2th) r)/cosh(pi r)` for even `n` and
/// `sinh((pi-2th) r)/sinh(pi r)` for odd `n`.  The real part equals the
/// direct orbital integral [`elliptic_real_direct`].
pub fn elliptic_real(pair: &TestFunctionPair, theta: f64) -> Result<Complex64> {
    require_real("elliptic_real", pair)?;
    if !(theta > 0.0 && theta < PI) {
        return Err(Error::domain(
            "elliptic_real",
            format!("theta = {theta} outside the open interval (0, pi)"),
        ));
    }
    let n = pair.k_type();
    let sin_abs = theta.sin().abs();
    let a = PI - 2.0 * theta;
    let even = n % 2 == 0;
    let cont = integrate(
        |r: f64| {
            let kern = if even {
                (a * r).cosh() / (PI * r).cosh()
            } else if r < 1e-4 {
                (a / PI) * (1.0 + (a * a - PI * PI) * r * r / 6.0)
            } else {
                (a * r).sinh() / (PI * r).sinh()
            };
            pair.h_real(r) * kern
        },
        0.0,
        ELLIPTIC_RMAX,
        1e-10,
    )?;
    let mut value = Complex64::new(2.0 * cont.value / (2.0 * sin_abs), 0.0);
    let mut m = n as i64 - 1;
    while m > 0 {
        let phase = Complex64::new(0.0, 1.0) * Complex64::from_polar(1.0, m as f64 * theta);
        value += phase * pair.h_at_i(m as f64 / 2.0)? / sin_abs;
        m -= 2;
    }
    if !even {
        value += Complex64::new(0.0, -pair.h_real(0.0) / (2.0 * sin_abs));
    }
    Ok(value)
}

/// Elliptic distribution as the direct orbital integral:
///
/// ```text
/// 4 pi int_0^{tmax} phi(sin^2 th (e^{4t}+e^{-4t}-2))
///     T_n( 2cos th / hypot(2cos th, 2 sin th cosh 2t) )
///     (e^{2t} - e^{-2t}) dt,
/// ```
///
/// with `tmax = arccosh(1 + S/(2 sin^2 th)) / 4`.
pub fn elliptic_real_direct(pair: &TestFunctionPair, theta: f64) -> Result<f64> {
    require_real("elliptic_real_direct", pair)?;
    if !(theta > 0.0 && theta < PI) {
        return Err(Error::domain(
            "elliptic_real_direct",
            format!("theta = {theta} outside the open interval (0, pi)"),
        ));
    }
    let s = pair.support_s();
    let n = pair.k_type() as f64;
    let s2 = theta.sin() * theta.sin();
    let tmax = (1.0 + s / (2.0 * s2)).acosh() / 4.0;
    let r = integrate(
        |t: f64| {
            let u = s2 * ((4.0 * t).exp() + (-4.0 * t).exp() - 2.0);
            let apd = 2.0 * theta.cos();
            let bmc = 2.0 * theta.sin() * (2.0 * t).cosh();
            let ratio = apd / apd.hypot(bmc);
            let tn = cheb_t(n, ratio).unwrap_or(f64::NAN);
            pair.phi(u).unwrap_or(f64::NAN) * tn * ((2.0 * t).exp() - (-2.0 * t).exp())
        },
        0.0,
        tmax,
        1e-10,
    )?;
    Ok(4.0 * PI * r.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testfn::phi_bump;

    fn pair_n(n: u32) -> TestFunctionPair {
        TestFunctionPair::from_phi(ArchPlace::Real, n, phi_bump(2.0), 2.0).unwrap()
    }

    #[test]
    fn identity_matches_phi_at_zero() {
        let target = (-1.0f64).exp();
        let id0 = identity_real(&pair_n(0)).unwrap();
        assert!((id0 - target).abs() < 2e-7, "n=0: {id0} vs {target}");
        for n in 1..=4 {
            let id = identity_real(&pair_n(n)).unwrap();
            assert!((id - target).abs() < 1e-5, "n={n}: {id} vs {target}");
        }
    }

    #[test]
    fn parabolic_matches_mellin_derivative() {
        // Independent route: F(s) = zeta_phi(s) / zeta_R(s) with
        // zeta_phi(s) = 2 int_0^{sqrt S} phi(x^2) cos(n atan(x/2)) x^{s-1} dx
        // and zeta_R(s) = pi^{-s/2} Gamma(s/2); the finite part equals
        // F'(1) (Richardson-extrapolated central differences).
        use crate::special::gamma;
        let zeta_phi = |s: f64, n: u32| -> f64 {
            let phi = phi_bump(2.0);
            integrate(
                |x: f64| {
                    2.0 * phi(x * x)
                        * (n as f64 * (x / 2.0).atan()).cos()
                        * x.powf(s - 1.0)
                },
                0.0,
                2.0f64.sqrt(),
                1e-12,
            )
            .unwrap()
            .value
        };
        let zeta_r = |s: f64| -> f64 {
            PI.powf(-s / 2.0) * gamma(Complex64::new(s / 2.0, 0.0)).unwrap().re
        };
        let f_ratio = |s: f64, n: u32| zeta_phi(s, n) / zeta_r(s);
        for &n in &[0u32, 2, 3] {
            let h1 = 1e-4;
            let d1 = (f_ratio(1.0 + h1, n) - f_ratio(1.0 - h1, n)) / (2.0 * h1);
            let h2 = h1 / 2.0;
            let d2 = (f_ratio(1.0 + h2, n) - f_ratio(1.0 - h2, n)) / (2.0 * h2);
            let mellin = (4.0 * d2 - d1) / 3.0;
            let pv = parabolic_real(&pair_n(n)).unwrap();
            assert!(
                (pv.finite_part - mellin).abs() < 1e-6,
                "n={n}: finite={} mellin={mellin}",
                pv.finite_part
            );
            // The leading coefficient is g(0) = F(1).
            assert!((pv.g_at_zero - f_ratio(1.0, n)).abs() < 1e-8);
        }
    }

    #[test]
    fn hyperbolic_frozen_values() {
        let frozen = [
            (0u32, 0.8239457812),
            (1, 0.8000804101),
            (2, 0.7311490043),
        ];
        for &(n, want) in &frozen {
            let pair = pair_n(n);
            let closed = hyperbolic_real(&pair, 2.0, HyperbolicConvention::QOverSinh).unwrap();
            let direct = hyperbolic_real_direct(&pair, 2.0).unwrap();
            assert!((closed - want).abs() < 1e-7, "closed n={n}: {closed}");
            assert!((direct - want).abs() < 1e-7, "direct n={n}: {direct}");
        }
        // Wider-support example: S = 3, alpha = 4.
        let pair3 = TestFunctionPair::from_phi(ArchPlace::Real, 0, phi_bump(3.0), 3.0).unwrap();
        let j43 = hyperbolic_real(&pair3, 4.0, HyperbolicConvention::QOverSinh).unwrap();
        assert!((j43 - 0.058004085185).abs() < 1e-9, "{j43}");
        let j43d = hyperbolic_real_direct(&pair3, 4.0).unwrap();
        assert!((j43d - 0.058004085185).abs() < 1e-7, "{j43d}");
    }

    #[test]
    fn hyperbolic_closed_equals_direct() {
        for &alpha in &[1.5, 2.25, 8.0] {
            for n in 0..=2 {
                let pair = pair_n(n);
                let closed =
                    hyperbolic_real(&pair, alpha, HyperbolicConvention::QOverSinh).unwrap();
                let direct = hyperbolic_real_direct(&pair, alpha).unwrap();
                assert!(
                    (closed - direct).abs() < 1e-7,
                    "alpha={alpha} n={n}: {closed} vs {direct}"
                );
            }
        }
    }

    #[test]
    fn hyperbolic_alternative_conventions_differ() {
        let pair = pair_n(0);
        let alpha = 2.0;
        let base = hyperbolic_real(&pair, alpha, HyperbolicConvention::QOverSinh).unwrap();
        let la = alpha.ln();
        let c1 = hyperbolic_real(&pair, alpha, HyperbolicConvention::GCosh).unwrap();
        let c2 = hyperbolic_real(&pair, alpha, HyperbolicConvention::GSinh).unwrap();
        assert!((c1 - pair.g(la / 2.0) / (la / 2.0).cosh()).abs() < 1e-14);
        assert!((c2 - pair.g(la / 2.0) / (la / 2.0).sinh()).abs() < 1e-14);
        assert!((c1 - base).abs() > 1e-3);
        assert!((c2 - base).abs() > 1e-3);
    }

    #[test]
    fn hyperbolic_support_gate_and_guards() {
        let pair = pair_n(0);
        // u0 = 6 + 1/6 - 2 > S = 2: exactly zero.
        assert_eq!(
            hyperbolic_real(&pair, 6.0, HyperbolicConvention::QOverSinh).unwrap(),
            0.0
        );
        assert_eq!(hyperbolic_real_direct(&pair, 6.0).unwrap(), 0.0);
        assert_eq!(hyperbolic_real_weighted(&pair, 6.0).unwrap(), 0.0);
        // Negative ratio contributes nothing.
        assert_eq!(
            hyperbolic_real(&pair, -2.0, HyperbolicConvention::QOverSinh).unwrap(),
            0.0
        );
        // Degenerate ratios are rejected.
        assert!(hyperbolic_real(&pair, 0.0, HyperbolicConvention::QOverSinh).is_err());
        assert!(hyperbolic_real(&pair, 1.0, HyperbolicConvention::QOverSinh).is_err());
    }

    #[test]
    fn weighted_hyperbolic_is_even_smaller_scale_sanity() {
        // log(1 + x^2) vanishes at x = 0, so the weighted integral is
        // smaller than the plain direct integral for concentrated ranges;
        // just pin down finiteness and positivity here.
        let pair = pair_n(0);
        let w = hyperbolic_real_weighted(&pair, 2.0).unwrap();
        assert!(w.is_finite() && w > 0.0);
    }

    #[test]
    fn elliptic_frozen_direct_values() {
        let frozen = [
            (0u32, 0.8451377117),
            (1, 0.3933826493),
            (2, -0.4781833786),
            (3, -0.8371636480),
        ];
        let theta = PI / 3.0;
        for &(n, want) in &frozen {
            let e = elliptic_real_direct(&pair_n(n), theta).unwrap();
            assert!((e - want).abs() < 1e-7, "n={n}: {e} vs {want}");
        }
    }

    #[test]
    fn elliptic_spectral_real_part_matches_direct() {
        for &theta in &[PI / 6.0, PI / 3.0, PI / 2.0, 2.0 * PI / 3.0] {
            for n in 0..=3 {
                let pair = pair_n(n);
                let spectral = elliptic_real(&pair, theta).unwrap();
                let direct = elliptic_real_direct(&pair, theta).unwrap();
                assert!(
                    (spectral.re - direct).abs() < 1e-7,
                    "theta={theta} n={n}: {} vs {direct}",
                    spectral.re
                );
            }
        }
    }

    #[test]
    fn elliptic_right_angle_closed_form() {
        // At theta = pi/2 and n = 0 the direct integral reduces to
        // pi int_0^S phi(y) (y+4)^{-1/2} dy.
        let pair = pair_n(0);
        let direct = elliptic_real_direct(&pair, PI / 2.0).unwrap();
        let phi = phi_bump(2.0);
        let reference = PI
            * integrate(|y: f64| phi(y) / (y + 4.0).sqrt(), 0.0, 2.0, 1e-12)
                .unwrap()
                .value;
        assert!((direct - reference).abs() < 1e-8, "{direct} vs {reference}");
    }

    #[test]
    fn elliptic_rejects_degenerate_angles() {
        let pair = pair_n(0);
        assert!(elliptic_real(&pair, 0.0).is_err());
        assert!(elliptic_real(&pair, PI).is_err());
        assert!(elliptic_real_direct(&pair, 0.0).is_err());
    }

    #[test]
    fn char_values_select_k_types() {
        let pair0 = pair_n(0);
        let pair1 = pair_n(1);
        let s = Complex64::new(0.5, 1.3);
        // Parity selection on principal series.
        let even_repr = ReprReal::PrincipalSeries {
            s,
            parity: Parity::Even,
        };
        let odd_repr = ReprReal::PrincipalSeries {
            s,
            parity: Parity::Odd,
        };
        let v = char_value_real(&pair0, &even_repr).unwrap();
        let h = pair0.h(Complex64::new(0.0, 1.0) * s).unwrap();
        assert!((v - h).norm() < 1e-14);
        assert_eq!(
            char_value_real(&pair0, &odd_repr).unwrap(),
            Complex64::new(0.0, 0.0)
        );
        let v1 = char_value_real(&pair1, &odd_repr).unwrap();
        let h1 = pair1.h(Complex64::new(0.0, 1.0) * s).unwrap();
        assert!((v1 - h1).norm() < 1e-14);
        // Discrete series: needs n >= k with matching parity.
        let d3 = ReprReal::DiscreteSeries { weight: 3 };
        assert_eq!(
            char_value_real(&pair0, &d3).unwrap(),
            Complex64::new(0.0, 0.0)
        );
        let v3 = char_value_real(&pair_n(3), &d3).unwrap();
        assert!((v3.re - pair_n(3).h_at_i(1.0).unwrap()).abs() < 1e-14);
        assert!(char_value_real(&pair0, &ReprReal::DiscreteSeries { weight: 1 }).is_err());
        // One-dimensional representation sees only n = 0.
        let one = ReprReal::OneDimensional;
        assert!((char_value_real(&pair0, &one).unwrap().re
            - pair0.h_at_i(0.5).unwrap())
        .abs()
            < 1e-14);
        assert_eq!(
            char_value_real(&pair1, &one).unwrap(),
            Complex64::new(0.0, 0.0)
        );
    }

    #[test]
    fn real_place_required() {
        let cpair =
            TestFunctionPair::from_phi(ArchPlace::Complex, 0, phi_bump(2.0), 2.0).unwrap();
        assert!(identity_real(&cpair).is_err());
        assert!(parabolic_real(&cpair).is_err());
        assert!(elliptic_real(&cpair, 1.0).is_err());
        assert!(hyperbolic_real(&cpair, 2.0, HyperbolicConvention::QOverSinh).is_err());
    }
}
