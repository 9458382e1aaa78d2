//! Deterministic quadrature: a cached 200-point Gauss–Legendre rule and an
//! adaptive Gauss–Kronrod (G7,K15) integrator with an embedded error
//! estimate.
//!
//! The adaptive integrator bisects deterministically (always at the
//! midpoint, halving the tolerance), so results are bit-identical across
//! runs.  Non-convergence within the subdivision budget is a typed error,
//! never a silent inaccurate answer.

use crate::error::{Error, Result};
use num_complex::Complex64;
use once_cell::sync::Lazy;

/// Result of an adaptive quadrature over a real integrand.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    /// The integral estimate (sum of accepted Kronrod panels).
    pub value: f64,
    /// Sum of the per-panel embedded error estimates `|K15 - G7|`.
    /// This is a conservative bound: the returned Kronrod value is
    /// typically far more accurate than the estimate suggests.
    pub err_estimate: f64,
    /// Number of integrand evaluations performed.
    pub evaluations: u64,
}

/// Result of an adaptive quadrature over a complex integrand.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResultComplex {
    /// The integral estimate.
    pub value: Complex64,
    /// Sum of per-panel `|K15 - G7|` norms.
    pub err_estimate: f64,
    /// Number of integrand evaluations performed.
    pub evaluations: u64,
}

// --- Gauss-Kronrod (G7, K15) nodes and weights on [-1, 1] ---------------
//
// Positive abscissae; odd indices are the embedded 7-point Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_17,
    0.207_784_955_007_898_47,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_225,
    0.063_092_092_629_978_56,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_94,
    0.417_959_183_673_469_4,
];

/// Evaluation budget for one adaptive integral.  Exceeding it is reported
/// as [`Error::QuadratureNonConvergence`].
const MAX_EVALUATIONS: u64 = 4_000_000;
/// Maximum bisection depth.
const MAX_DEPTH: u32 = 52;

trait PanelValue: Copy {
    fn zero() -> Self;
    fn add(self, other: Self) -> Self;
    fn scale(self, s: f64) -> Self;
    fn norm(self) -> f64;
}

impl PanelValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }
    fn norm(self) -> f64 {
        self.abs()
    }
}

impl PanelValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }
    fn norm(self) -> f64 {
        num_complex::Complex::norm(self)
    }
}

/// One (G7, K15) panel on [a, b]: returns (kronrod, |kronrod - gauss|).
fn gk15_panel<V: PanelValue, F: FnMut(f64) -> V>(f: &mut F, a: f64, b: f64) -> (V, f64) {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut kronrod = V::zero();
    let mut gauss = V::zero();
    for (i, &x) in XGK.iter().enumerate() {
        let v = if x == 0.0 {
            f(mid)
        } else {
            f(mid - half * x).add(f(mid + half * x))
        };
        kronrod = kronrod.add(v.scale(WGK[i]));
        if i % 2 == 1 {
            gauss = gauss.add(v.scale(WG[i / 2]));
        }
    }
    let kronrod = kronrod.scale(half);
    let gauss = gauss.scale(half);
    let diff = kronrod.add(gauss.scale(-1.0)).norm();
    (kronrod, diff)
}

/// One panel in the refinement queue.
struct Panel<V> {
    a: f64,
    b: f64,
    value: V,
    err: f64,
    depth: u32,
}

/// Worst-panel-first global refinement: repeatedly bisect the panel with
/// the largest embedded error until the total error estimate is below
/// `tol`.  Ties are broken by interval position, so the refinement order
/// is fully deterministic.  Handles integrable endpoint singularities
/// (the tolerance is global, not halved per level).
fn adaptive<V: PanelValue, F: FnMut(f64) -> V>(
    f: &mut F,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<(V, f64, u64)> {
    let mut evaluations: u64 = 15;
    let (value, err) = gk15_panel(f, a, b);
    if !err.is_finite() || !value.norm().is_finite() {
        return Err(Error::domain(
            "integrate",
            format!("integrand returned a non-finite value on [{a:.6e}, {b:.6e}]"),
        ));
    }
    let mut panels = vec![Panel {
        a,
        b,
        value,
        err,
        depth: 0,
    }];
    let mut total_err = err;
    while total_err > tol {
        if evaluations >= MAX_EVALUATIONS {
            return Err(Error::QuadratureNonConvergence {
                function: "integrate",
                message: format!(
                    "evaluation budget {MAX_EVALUATIONS} exceeded; error estimate \
                     {total_err:.3e} exceeds tolerance {tol:.3e}"
                ),
            });
        }
        // Deterministic worst-panel selection: largest error, then leftmost.
        let mut worst = 0usize;
        for (i, p) in panels.iter().enumerate() {
            let w = &panels[worst];
            if p.err > w.err || (p.err == w.err && p.a < w.a) {
                worst = i;
            }
        }
        let Panel {
            a: pa,
            b: pb,
            err: perr,
            depth,
            ..
        } = panels[worst];
        if depth >= MAX_DEPTH || (pb - pa).abs() < f64::EPSILON * (pa.abs() + pb.abs() + 1.0) {
            return Err(Error::QuadratureNonConvergence {
                function: "integrate",
                message: format!(
                    "panel [{pa:.6e}, {pb:.6e}] cannot be refined further; error \
                     estimate {total_err:.3e} exceeds tolerance {tol:.3e}"
                ),
            });
        }
        let mid = 0.5 * (pa + pb);
        let (lv, le) = gk15_panel(f, pa, mid);
        let (rv, re) = gk15_panel(f, mid, pb);
        evaluations += 30;
        if !(le.is_finite() && re.is_finite() && lv.norm().is_finite() && rv.norm().is_finite()) {
            return Err(Error::domain(
                "integrate",
                format!("integrand returned a non-finite value inside [{pa:.6e}, {pb:.6e}]"),
            ));
        }
        panels[worst] = Panel {
            a: pa,
            b: mid,
            value: lv,
            err: le,
            depth: depth + 1,
        };
        panels.push(Panel {
            a: mid,
            b: pb,
            value: rv,
            err: re,
            depth: depth + 1,
        });
        total_err = total_err - perr + le + re;
        // Periodically recompute the error sum to control floating drift.
        if panels.len() % 64 == 0 {
            total_err = panels.iter().map(|p| p.err).sum();
        }
    }
    // Sum panels in interval order for a reproducible, well-conditioned sum.
    panels.sort_by(|x, y| x.a.total_cmp(&y.a));
    let mut sum = V::zero();
    let mut err_sum = 0.0;
    for p in &panels {
        sum = sum.add(p.value);
        err_sum += p.err;
    }
    Ok((sum, err_sum, evaluations))
}

/// Adaptive Gauss–Kronrod integration of a real integrand over `[a, b]`
/// to absolute tolerance `tol`.
pub fn integrate<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, tol: f64) -> Result<QuadratureResult> {
    if !(tol >= 0.0) {
        return Err(Error::domain("integrate", "tolerance must be non-negative"));
    }
    if a == b {
        return Ok(QuadratureResult {
            value: 0.0,
            err_estimate: 0.0,
            evaluations: 0,
        });
    }
    let (value, err_estimate, evaluations) = adaptive(&mut f, a, b, tol)?;
    Ok(QuadratureResult {
        value,
        err_estimate,
        evaluations,
    })
}

/// Adaptive Gauss–Kronrod integration of a complex integrand over `[a, b]`.
pub fn integrate_complex<F: FnMut(f64) -> Complex64>(
    mut f: F,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<QuadratureResultComplex> {
    if !(tol >= 0.0) {
        return Err(Error::domain("integrate", "tolerance must be non-negative"));
    }
    if a == b {
        return Ok(QuadratureResultComplex {
            value: Complex64::new(0.0, 0.0),
            err_estimate: 0.0,
            evaluations: 0,
        });
    }
    let (value, err_estimate, evaluations) = adaptive(&mut f, a, b, tol)?;
    Ok(QuadratureResultComplex {
        value,
        err_estimate,
        evaluations,
    })
}

/// Integration over the half line `[a, +inf)` for integrands with (at
/// least) exponential decay, via the substitution `x = a - ln u`,
/// `u in (0, 1]`.  The transformed integrand `f(a - ln u) / u` is never
/// evaluated at `u = 0` (all quadrature nodes are interior).
pub fn integrate_half_line<F: FnMut(f64) -> f64>(mut f: F, a: f64, tol: f64) -> Result<QuadratureResult> {
    integrate(
        move |u: f64| {
            let x = a - u.ln();
            f(x) / u
        },
        0.0,
        1.0,
        tol,
    )
}

// --- 200-point Gauss-Legendre rule ---------------------------------------

static GL200: Lazy<Vec<(f64, f64)>> = Lazy::new(|| {
    let n = 200usize;
    let mut nodes = vec![(0.0f64, 0.0f64); n];
    let m = (n + 1) / 2;
    for i in 0..m {
        // Tricomi-type initial guess, then Newton iteration on P_n.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre recurrence: p0 = 1, p1 = x.
            let mut p0 = 1.0f64;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            // p1 = P_n(x), p0 = P_{n-1}(x).
            dp = (n as f64) * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                // One more iteration for full convergence, then stop.
                let mut q0 = 1.0f64;
                let mut q1 = x;
                for k in 2..=n {
                    let kf = k as f64;
                    let q2 = ((2.0 * kf - 1.0) * x * q1 - (kf - 1.0) * q0) / kf;
                    q0 = q1;
                    q1 = q2;
                }
                dp = (n as f64) * (x * q1 - q0) / (x * x - 1.0);
                x -= q1 / dp;
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = (-x.abs(), w);
        nodes[n - 1 - i] = (x.abs(), w);
    }
    nodes
});

/// The cached 200-point Gauss–Legendre nodes and weights on `[-1, 1]`,
/// sorted by node.  Exact for polynomials of degree `<= 399`.
pub fn gauss_legendre_200() -> &'static [(f64, f64)] {
    &GL200
}

/// Single-panel 200-point Gauss–Legendre integration over `[a, b]`.
/// Suitable for smooth integrands; no error estimate is produced.
pub fn integrate_gl200<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64) -> f64 {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut sum = 0.0;
    for &(x, w) in gauss_legendre_200() {
        sum += w * f(mid + half * x);
    }
    sum * half
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_exactness_gl200() {
        // Degree 399 is integrated exactly by the 200-point rule.
        let val = integrate_gl200(|x| x.powi(399), 0.0, 1.0);
        assert!((val - 1.0 / 400.0).abs() < 1e-15, "got {val}");
        let sum_w: f64 = gauss_legendre_200().iter().map(|&(_, w)| w).sum();
        assert!((sum_w - 2.0).abs() < 1e-13);
    }

    #[test]
    fn adaptive_basics() {
        let r = integrate(|x| x * x, 0.0, 1.0, 1e-12).unwrap();
        assert!((r.value - 1.0 / 3.0).abs() < 1e-14);
        let r = integrate(|x| x.sin(), 0.0, std::f64::consts::PI, 1e-12).unwrap();
        assert!((r.value - 2.0).abs() < 1e-12);
        let r = integrate(|x| x.sin(), 0.0, 10.0 * std::f64::consts::PI, 1e-11).unwrap();
        assert!(r.value.abs() < 1e-10);
    }

    #[test]
    fn half_line_exponential() {
        let r = integrate_half_line(|x| (-x).exp(), 0.0, 1e-13).unwrap();
        assert!((r.value - 1.0).abs() <= 1e-12, "got {}", r.value);
        let r = integrate_half_line(|x| x * (-x).exp(), 0.0, 1e-13).unwrap();
        assert!((r.value - 1.0).abs() <= 1e-11, "got {}", r.value);
    }

    #[test]
    fn bit_identical_reruns() {
        let f = |x: f64| (x * 7.3).sin() * (-(x * x)).exp() + x.cos() / (1.0 + x * x);
        let a = integrate(f, 0.0, 25.0, 1e-11).unwrap();
        let b = integrate(f, 0.0, 25.0, 1e-11).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert_eq!(a.err_estimate.to_bits(), b.err_estimate.to_bits());
        assert_eq!(a.evaluations, b.evaluations);
    }

    #[test]
    fn non_convergence_is_an_error() {
        // Zero tolerance cannot be met; must be a typed error, not a panic.
        let r = integrate(|x: f64| x.sin() + 1.0, 0.0, 1.0, 0.0);
        match r {
            Err(crate::error::Error::QuadratureNonConvergence { .. }) => {}
            other => panic!("expected non-convergence error, got {other:?}"),
        }
    }

    #[test]
    fn complex_integrand() {
        // int_0^1 e^{ix} dx = sin 1 + i(1 - cos 1).
        let r = integrate_complex(|x| Complex64::new(0.0, x).exp(), 0.0, 1.0, 1e-13).unwrap();
        assert!((r.value.re - 1f64.sin()).abs() < 1e-13);
        assert!((r.value.im - (1.0 - 1f64.cos())).abs() < 1e-13);
    }
}
