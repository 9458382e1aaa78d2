//! Abel-type transforms of integer order and their inverses.
//!
//! The forward transform of order `lambda` at a real place maps a smooth
//! function `phi` supported in `[0, S]` (with `phi(S) = 0`) to
//!
//! ```text
//! A_lambda(phi)(x) = int_0^{sqrt(S-x)} phi(x + xi^2) * K_lambda(x, xi) dxi,
//! K_lambda(x, xi)  = 2 T_lambda( sqrt(x+4) / sqrt(x+4+xi^2) )
//!                  = 2 cos( lambda * atan(xi / sqrt(x+4)) ),
//! ```
//!
//! and the inverse reconstructs `phi` from `Q' = (A_lambda phi)'`:
//!
//! ```text
//! phi(x) = -(1/pi) int_0^{sqrt(S-x)} Q'(x + eta^2)
//!          * 2 cosh( lambda * asinh(eta / sqrt(x+4)) ) deta.
//! ```
//!
//! At a complex place the forward kernel is a Chebyshev function of the
//! second kind; only order 0 admits the closed inverse `phi = -Q'`.

use crate::error::{Error, Result};
use crate::special::{cheb_u, integrate, integrate_complex};
use num_complex::Complex64;

/// Quadrature tolerance used inside the transforms.
const TOL: f64 = 1e-11;

/// Forward kernel at a real place, cosine form (numerically preferred).
pub fn kernel_real(lambda: u32, x: f64, xi: f64) -> f64 {
    2.0 * (lambda as f64 * (xi / (x + 4.0).sqrt()).atan()).cos()
}

/// Forward kernel at a real place, Chebyshev form `2 T_lambda(...)`.
/// Equal to [`kernel_real`]; kept callable for cross-checking.
pub fn kernel_real_chebyshev(lambda: u32, x: f64, xi: f64) -> Result<f64> {
    let ratio = (x + 4.0).sqrt() / (x + 4.0 + xi * xi).sqrt();
    Ok(2.0 * crate::special::cheb_t(lambda as f64, ratio)?)
}

/// Inverse kernel at a real place: `2 cosh(lambda * asinh(eta/sqrt(x+4)))`.
pub fn kernel_real_inverse(lambda: u32, x: f64, eta: f64) -> f64 {
    2.0 * (lambda as f64 * (eta / (x + 4.0).sqrt()).asinh()).cosh()
}

fn check_real_input(function: &'static str, support: f64, x: f64) -> Result<()> {
    if !(support > 0.0) {
        return Err(Error::domain(function, "support S must be positive"));
    }
    if x < 0.0 {
        return Err(Error::domain(
            function,
            format!("argument x = {x} below the domain [0, S]"),
        ));
    }
    Ok(())
}

/// Forward Abel-type transform of order `lambda` at a real place.
/// `phi` must be supported in `[0, S]` with `phi(S) = 0`; for `x >= S`
/// the transform vanishes identically.
pub fn abel_forward_real<F: Fn(f64) -> f64 + ?Sized>(
    phi: &F,
    support: f64,
    lambda: u32,
    x: f64,
) -> Result<f64> {
    check_real_input("abel_forward_real", support, x)?;
    if x >= support {
        return Ok(0.0);
    }
    let m = (support - x).sqrt();
    let r = integrate(
        |xi: f64| phi(x + xi * xi) * kernel_real(lambda, x, xi),
        0.0,
        m,
        TOL,
    )?;
    Ok(r.value)
}

/// Derivative in `x` of the forward transform, by differentiation under
/// the integral sign (the boundary term vanishes because `phi(S) = 0`):
///
/// ```text
/// d/dx A_lambda(phi)(x) = int_0^{sqrt(S-x)} [ phi'(x+xi^2) K_lambda
///     + phi(x+xi^2) * lambda sin(lambda theta) * xi /
///       (sqrt(x+4) (x+4+xi^2)) ] dxi,   theta = atan(xi/sqrt(x+4)).
/// ```
pub fn abel_forward_real_derivative<F: Fn(f64) -> f64 + ?Sized, G: Fn(f64) -> f64 + ?Sized>(
    phi: &F,
    phi_prime: &G,
    support: f64,
    lambda: u32,
    x: f64,
) -> Result<f64> {
    check_real_input("abel_forward_real_derivative", support, x)?;
    if x >= support {
        return Ok(0.0);
    }
    let m = (support - x).sqrt();
    let lam = lambda as f64;
    let r = integrate(
        |xi: f64| {
            let root = (x + 4.0).sqrt();
            let theta = (xi / root).atan();
            let dkernel = lam * (lam * theta).sin() * xi / (root * (x + 4.0 + xi * xi));
            phi_prime(x + xi * xi) * 2.0 * (lam * theta).cos() + phi(x + xi * xi) * dkernel
        },
        0.0,
        m,
        TOL,
    )?;
    Ok(r.value)
}

/// Inverse transform of order `lambda` at a real place, reconstructing
/// `phi` from the derivative `Q'` of `Q = A_lambda(phi)`.
pub fn abel_inverse_real<F: Fn(f64) -> f64 + ?Sized>(
    qprime: &F,
    support: f64,
    lambda: u32,
    x: f64,
) -> Result<f64> {
    check_real_input("abel_inverse_real", support, x)?;
    if x >= support {
        return Ok(0.0);
    }
    let m = (support - x).sqrt();
    let r = integrate(
        |eta: f64| qprime(x + eta * eta) * kernel_real_inverse(lambda, x, eta),
        0.0,
        m,
        TOL,
    )?;
    Ok(-r.value / std::f64::consts::PI)
}

/// Alternative oscillatory form of the forward transform:
///
/// ```text
/// Re int_{-m}^{m} phi(x+xi^2)
///    ( (sqrt(x+4) + i xi) / (sqrt(x+4) - i xi) )^{lambda/2} dxi
/// ```
///
/// with `m = sqrt(S - x)`.  Agrees with [`abel_forward_real`]; exposed to
/// make the equivalence checkable.
pub fn abel_forward_real_oscillatory<F: Fn(f64) -> f64 + ?Sized>(
    phi: &F,
    support: f64,
    lambda: u32,
    x: f64,
) -> Result<f64> {
    check_real_input("abel_forward_real_oscillatory", support, x)?;
    if x >= support {
        return Ok(0.0);
    }
    let m = (support - x).sqrt();
    let half = lambda as f64 / 2.0;
    let root = (x + 4.0).sqrt();
    let r = integrate_complex(
        |xi: f64| {
            let base = Complex64::new(root, xi) / Complex64::new(root, -xi);
            phi(x + xi * xi) * base.powf(half)
        },
        -m,
        m,
        TOL,
    )?;
    Ok(r.value.re)
}

/// Classical half-integral Abel form `int_x^S f(t) / sqrt(t - x) dt`.
/// The integrable endpoint singularity is removed by the substitution
/// `t = x + xi^2`, under which this equals the order-0 forward transform.
pub fn abel_classical<F: Fn(f64) -> f64 + ?Sized>(f: &F, support: f64, x: f64) -> Result<f64> {
    check_real_input("abel_classical", support, x)?;
    if x >= support {
        return Ok(0.0);
    }
    let m = (support - x).sqrt();
    let r = integrate(|xi: f64| 2.0 * f(x + xi * xi), 0.0, m, TOL)?;
    Ok(r.value)
}

/// Forward transform of order `n` at a complex place:
///
/// ```text
/// A_n(phi)(y) = int_0^{S-y} phi(y + t) U_n( sqrt((y+4)/(t+y+4)) ) dt.
/// ```
///
/// For `n = 0` this is `int_y^S phi`.
pub fn abel_forward_complex<F: Fn(f64) -> f64 + ?Sized>(
    phi: &F,
    support: f64,
    n: u32,
    y: f64,
) -> Result<f64> {
    check_real_input("abel_forward_complex", support, y)?;
    if y >= support {
        return Ok(0.0);
    }
    let r = integrate(
        |t: f64| {
            let ratio = ((y + 4.0) / (t + y + 4.0)).sqrt();
            phi(y + t) * cheb_u(n, ratio)
        },
        0.0,
        support - y,
        TOL,
    )?;
    Ok(r.value)
}

/// Inverse transform at a complex place.  Only order 0 has the closed
/// inverse `phi(y) = -Q'(y)`; higher orders are a typed unsupported error.
pub fn abel_inverse_complex<F: Fn(f64) -> f64 + ?Sized>(
    qprime: &F,
    support: f64,
    n: u32,
    y: f64,
) -> Result<f64> {
    check_real_input("abel_inverse_complex", support, y)?;
    if n != 0 {
        return Err(Error::unsupported(
            "abel_inverse_complex",
            format!("closed inverse only available for order 0, got n = {n}"),
        ));
    }
    if y >= support {
        return Ok(0.0);
    }
    Ok(-qprime(y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testfn::{phi_bump, phi_bump_prime};

    #[test]
    fn kernel_forms_agree() {
        for &lambda in &[0u32, 1, 2, 3, 5] {
            for &(x, xi) in &[(0.0, 0.3), (0.5, 0.9), (1.4, 0.1)] {
                let a = kernel_real(lambda, x, xi);
                let b = kernel_real_chebyshev(lambda, x, xi).unwrap();
                assert!((a - b).abs() < 1e-12, "lambda={lambda} x={x} xi={xi}");
            }
        }
    }

    #[test]
    fn oscillatory_form_agrees() {
        let s = 2.0;
        let phi = phi_bump(s);
        for &lambda in &[1u32, 2, 3] {
            for &x in &[0.0, 0.3, 1.0] {
                let a = abel_forward_real(&phi, s, lambda, x).unwrap();
                let b = abel_forward_real_oscillatory(&phi, s, lambda, x).unwrap();
                assert!((a - b).abs() < 1e-8, "lambda={lambda} x={x}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn classical_form_is_order_zero() {
        let s = 2.0;
        let phi = phi_bump(s);
        for &x in &[0.0, 0.5, 1.5] {
            let a = abel_forward_real(&phi, s, 0, x).unwrap();
            let b = abel_classical(&phi, s, x).unwrap();
            assert!((a - b).abs() < 1e-10, "x={x}");
        }
    }

    #[test]
    fn complex_order_zero_is_tail_integral() {
        let s = 2.0;
        let phi = phi_bump(s);
        for &y in &[0.0, 0.4, 1.2] {
            let a = abel_forward_complex(&phi, s, 0, y).unwrap();
            let b = crate::special::integrate(&phi, y, s, 1e-12).unwrap().value;
            assert!((a - b).abs() < 1e-10, "y={y}");
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let s = 2.0;
        let phi = phi_bump(s);
        let dphi = phi_bump_prime(s);
        for &lambda in &[0u32, 2, 3] {
            for &x in &[0.2, 0.8] {
                let h = 1e-5;
                let fd = (abel_forward_real(&phi, s, lambda, x + h).unwrap()
                    - abel_forward_real(&phi, s, lambda, x - h).unwrap())
                    / (2.0 * h);
                let an = abel_forward_real_derivative(&phi, &dphi, s, lambda, x).unwrap();
                assert!((fd - an).abs() < 1e-6, "lambda={lambda} x={x}: {fd} vs {an}");
            }
        }
    }

    #[test]
    fn round_trip_smoke() {
        // Full 50-point round trips for all orders run in the acceptance
        // suite; here a coarse grid as a fast regression.
        let s = 2.0;
        let phi = phi_bump(s);
        let dphi = phi_bump_prime(s);
        for &lambda in &[0u32, 2] {
            for i in 0..10 {
                let x = s * (i as f64) / 10.0;
                let qprime =
                    |y: f64| abel_forward_real_derivative(&phi, &dphi, s, lambda, y).unwrap();
                let rec = abel_inverse_real(&qprime, s, lambda, x).unwrap();
                assert!(
                    (rec - phi(x)).abs() < 1e-6,
                    "lambda={lambda} x={x}: {rec} vs {}",
                    phi(x)
                );
            }
        }
    }

    #[test]
    fn complex_inverse_restrictions() {
        let qp = |_y: f64| 1.0;
        assert!(abel_inverse_complex(&qp, 2.0, 1, 0.5).is_err());
        assert!(abel_inverse_complex(&qp, 2.0, 0, 0.5).is_ok());
    }

    #[test]
    fn domain_errors() {
        let phi = phi_bump(2.0);
        assert!(abel_forward_real(&phi, 2.0, 1, -0.1).is_err());
        assert!(abel_forward_real(&phi, -1.0, 1, 0.1).is_err());
        // Beyond the support the transform vanishes.
        assert_eq!(abel_forward_real(&phi, 2.0, 1, 2.5).unwrap(), 0.0);
    }
}
