//! Test-function calculus: the quadruple `(phi, Q, g, h)` attached to an
//! archimedean place and a K-type.
//!
//! A pair is built either from the two-sided profile `phi` (supported in
//! `[0, S]`, vanishing at `S`) or from the even function `g` (supported in
//! `[-C, C]`).  The four members are linked by
//!
//! * `Q = A_n(phi)`, an Abel-type transform of order `n` ([`abel`]);
//! * `g(x) = Q(2 cosh x - 2)` at a real place,
//!   `g(x) = Q(2 cosh(x/2) - 2)` at a complex place;
//! * `h(xi) = int_{-C}^{C} g(u) e^{i xi u} du`, evaluated as a fixed
//!   200-node Gauss-Legendre cosine sum over cached values of `g`.
//!
//! The cached-node evaluation makes `h` cheap, deterministic, and entire in
//! `xi`; it is trusted for `|Im xi| <= 50`, which covers every spectral
//! parameter used by the local distributions and holomorphic weights up
//! to 101.

pub mod abel;

pub use abel::{
    abel_classical, abel_forward_complex, abel_forward_real, abel_forward_real_derivative,
    abel_forward_real_oscillatory, abel_inverse_complex, abel_inverse_real,
};

use crate::error::{Error, Result};
use crate::special::{gauss_legendre_200, integrate_gl200};
use num_complex::Complex64;
use once_cell::sync::Lazy;
use std::sync::Arc;

type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Archimedean place flavor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArchPlace {
    Real,
    Complex,
}

/// Normalization modes for [`TestFunctionPair::make_bump`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BumpNormalization {
    /// Scale so that `g(0) = 1`.
    UnitG0,
    /// Scale so that `h(0) = int g = 1`.
    UnitMass,
    /// Scale so that `h(i (k-1)/2) = 1`, the convention used by the
    /// pseudo-coefficient of the weight-`k` discrete series.
    DsWeight(u32),
}

/// Largest `|Im xi|` accepted by the transform `h`.
const H_IM_BOUND: f64 = 50.0;

/// Step factor for numerical five-point derivative stencils, relative to
/// the half-width `C` of the support of `g`.
const STENCIL_STEP: f64 = 1e-5;

/// `int_{-1}^{1} exp(-1/(1-u^2)) du`, the mass of the unit bump profile.
static BUMP_MASS_UNIT: Lazy<f64> = Lazy::new(|| {
    integrate_gl200(
        |u: f64| {
            let d = 1.0 - u * u;
            if d > 0.0 {
                (-1.0 / d).exp()
            } else {
                0.0
            }
        },
        -1.0,
        1.0,
    )
});

/// Mass of the normalized bump profile on `[-1, 1]` (numerically
/// `0.4439938161680786...`).
pub fn bump_mass_unit() -> f64 {
    *BUMP_MASS_UNIT
}

#[derive(Clone, Copy)]
struct HNode {
    x: f64,
    w: f64,
    gx: f64,
}

/// A matched test-function quadruple at one archimedean place.
#[derive(Clone)]
pub struct TestFunctionPair {
    place: ArchPlace,
    n: u32,
    support_s: f64,
    support_c: f64,
    phi: Option<RealFn>,
    q: RealFn,
    qprime: Option<RealFn>,
    g: RealFn,
    g_prime_analytic: Option<RealFn>,
    nodes: Arc<Vec<HNode>>,
}

fn half_width_from_support(place: ArchPlace, support_s: f64) -> f64 {
    let c = (1.0 + support_s / 2.0).acosh();
    match place {
        ArchPlace::Real => c,
        ArchPlace::Complex => 2.0 * c,
    }
}

fn support_from_half_width(place: ArchPlace, support_c: f64) -> f64 {
    match place {
        ArchPlace::Real => 2.0 * support_c.cosh() - 2.0,
        ArchPlace::Complex => 2.0 * (support_c / 2.0).cosh() - 2.0,
    }
}

fn build_nodes(g: &RealFn, support_c: f64) -> Arc<Vec<HNode>> {
    let nodes = gauss_legendre_200()
        .iter()
        .map(|&(t, w)| {
            let x = support_c * (t + 1.0) / 2.0;
            let w = w * support_c / 2.0;
            HNode { x, w, gx: g(x) }
        })
        .collect();
    Arc::new(nodes)
}

fn five_point_first(g: &RealFn, x: f64, h: f64) -> f64 {
    (-g(x + 2.0 * h) + 8.0 * g(x + h) - 8.0 * g(x - h) + g(x - 2.0 * h)) / (12.0 * h)
}

fn five_point_second(g: &RealFn, x: f64, h: f64) -> f64 {
    (-g(x + 2.0 * h) + 16.0 * g(x + h) - 30.0 * g(x) + 16.0 * g(x - h) - g(x - 2.0 * h))
        / (12.0 * h * h)
}

impl TestFunctionPair {
    /// Build the quadruple from the profile `phi`, supported in
    /// `[0, support_s]` with `phi(support_s) = 0`.
    pub fn from_phi<F>(place: ArchPlace, n: u32, phi: F, support_s: f64) -> Result<Self>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        if !(support_s > 0.0) {
            return Err(Error::domain("from_phi", "support S must be positive"));
        }
        let phi: RealFn = Arc::new(phi);
        let q: RealFn = {
            let p = phi.clone();
            let s = support_s;
            match place {
                ArchPlace::Real => {
                    Arc::new(move |y| abel_forward_real(&*p, s, n, y).unwrap_or(f64::NAN))
                }
                ArchPlace::Complex => {
                    Arc::new(move |y| abel_forward_complex(&*p, s, n, y).unwrap_or(f64::NAN))
                }
            }
        };
        let support_c = half_width_from_support(place, support_s);
        let g: RealFn = {
            let q = q.clone();
            match place {
                ArchPlace::Real => Arc::new(move |x: f64| q(2.0 * x.cosh() - 2.0)),
                ArchPlace::Complex => Arc::new(move |x: f64| q(2.0 * (x / 2.0).cosh() - 2.0)),
            }
        };
        let nodes = build_nodes(&g, support_c);
        Ok(Self {
            place,
            n,
            support_s,
            support_c,
            phi: Some(phi),
            q,
            qprime: None,
            g,
            g_prime_analytic: None,
            nodes,
        })
    }

    /// Build the quadruple from the even function `g` supported in
    /// `[-support_c, support_c]`; derivatives of `g` are taken by
    /// five-point stencils.
    pub fn from_g<G>(place: ArchPlace, n: u32, g: G, support_c: f64) -> Result<Self>
    where
        G: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        let g: RealFn = Arc::new(g);
        let h = STENCIL_STEP * support_c;
        let gp: RealFn = {
            let g = g.clone();
            Arc::new(move |x: f64| five_point_first(&g, x, h))
        };
        let second0 = five_point_second(&g, 0.0, h);
        Self::build_from_g(place, n, g, gp, None, second0, support_c)
    }

    /// Like [`Self::from_g`], but with an analytically known first
    /// derivative and second derivative at zero.
    pub fn from_g_with_derivative<G, G1>(
        place: ArchPlace,
        n: u32,
        g: G,
        g_prime: G1,
        g_second_at_zero: f64,
        support_c: f64,
    ) -> Result<Self>
    where
        G: Fn(f64) -> f64 + Send + Sync + 'static,
        G1: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        let g: RealFn = Arc::new(g);
        let gp: RealFn = Arc::new(g_prime);
        let analytic = gp.clone();
        Self::build_from_g(place, n, g, gp, Some(analytic), g_second_at_zero, support_c)
    }

    #[allow(clippy::too_many_arguments)]
    fn build_from_g(
        place: ArchPlace,
        n: u32,
        g: RealFn,
        gp: RealFn,
        g_prime_analytic: Option<RealFn>,
        g_second_at_zero: f64,
        support_c: f64,
    ) -> Result<Self> {
        if !(support_c > 0.0) {
            return Err(Error::domain("from_g", "support C must be positive"));
        }
        let support_s = support_from_half_width(place, support_c);
        let q: RealFn = {
            let g = g.clone();
            let s = support_s;
            match place {
                ArchPlace::Real => Arc::new(move |y: f64| {
                    if y >= s {
                        0.0
                    } else if y <= 0.0 {
                        g(0.0)
                    } else {
                        g((1.0 + y / 2.0).acosh())
                    }
                }),
                ArchPlace::Complex => Arc::new(move |y: f64| {
                    if y >= s {
                        0.0
                    } else if y <= 0.0 {
                        g(0.0)
                    } else {
                        g(2.0 * (1.0 + y / 2.0).acosh())
                    }
                }),
            }
        };
        let qprime: RealFn = {
            let gp = gp.clone();
            let s = support_s;
            match place {
                ArchPlace::Real => Arc::new(move |y: f64| {
                    if y >= s {
                        0.0
                    } else if y <= 1e-10 {
                        g_second_at_zero / 2.0
                    } else {
                        let x = (1.0 + y / 2.0).acosh();
                        gp(x) / (2.0 * x.sinh())
                    }
                }),
                ArchPlace::Complex => Arc::new(move |y: f64| {
                    if y >= s {
                        0.0
                    } else if y <= 1e-10 {
                        2.0 * g_second_at_zero
                    } else {
                        let x = 2.0 * (1.0 + y / 2.0).acosh();
                        gp(x) / (x / 2.0).sinh()
                    }
                }),
            }
        };
        let phi: Option<RealFn> = match place {
            ArchPlace::Real => {
                let qp = qprime.clone();
                let s = support_s;
                Some(Arc::new(move |u: f64| {
                    abel_inverse_real(&*qp, s, n, u).unwrap_or(f64::NAN)
                }))
            }
            ArchPlace::Complex if n == 0 => {
                let qp = qprime.clone();
                let s = support_s;
                Some(Arc::new(move |u: f64| if u >= s { 0.0 } else { -qp(u) }))
            }
            ArchPlace::Complex => None,
        };
        let nodes = build_nodes(&g, support_c);
        Ok(Self {
            place,
            n,
            support_s,
            support_c,
            phi,
            q,
            qprime: Some(qprime),
            g,
            g_prime_analytic,
            nodes,
        })
    }

    /// Smooth compactly supported bump pair
    /// `g(x) = a exp(-1/(1 - (x/C)^2))` with the scale `a` fixed by the
    /// requested normalization.
    pub fn make_bump(
        place: ArchPlace,
        n: u32,
        support_c: f64,
        normalization: BumpNormalization,
    ) -> Result<Self> {
        if !(support_c > 0.0) {
            return Err(Error::domain("make_bump", "support C must be positive"));
        }
        let scale = match normalization {
            BumpNormalization::UnitG0 => std::f64::consts::E,
            BumpNormalization::UnitMass => 1.0 / (support_c * bump_mass_unit()),
            BumpNormalization::DsWeight(k) => {
                if k < 2 {
                    return Err(Error::domain(
                        "make_bump",
                        format!("holomorphic weight must be >= 2, got {k}"),
                    ));
                }
                let sigma = (k as f64 - 1.0) / 2.0;
                if sigma > H_IM_BOUND {
                    return Err(Error::domain(
                        "make_bump",
                        format!("weight {k} puts the normalization point beyond |Im| = 50"),
                    ));
                }
                let unscaled = Self::bump_with_scale(place, n, support_c, 1.0)?;
                let h0 = unscaled.h_at_i(sigma)?;
                if h0 <= 0.0 {
                    return Err(Error::domain("make_bump", "degenerate normalization"));
                }
                1.0 / h0
            }
        };
        Self::bump_with_scale(place, n, support_c, scale)
    }

    fn bump_with_scale(place: ArchPlace, n: u32, support_c: f64, a: f64) -> Result<Self> {
        let c = support_c;
        let g = move |x: f64| {
            let v = x / c;
            let d = 1.0 - v * v;
            if d > 0.0 {
                a * (-1.0 / d).exp()
            } else {
                0.0
            }
        };
        let gp = move |x: f64| {
            let v = x / c;
            let d = 1.0 - v * v;
            if d > 0.0 {
                a * (-1.0 / d).exp() * (-2.0 * v / c) / (d * d)
            } else {
                0.0
            }
        };
        let second0 = -2.0 * a * (-1.0f64).exp() / (c * c);
        Self::from_g_with_derivative(place, n, g, gp, second0, support_c)
    }

    /// The identically-zero pair (useful as a control input).
    pub fn zero(place: ArchPlace, n: u32, support_c: f64) -> Result<Self> {
        Self::from_g_with_derivative(place, n, |_x| 0.0, |_x| 0.0, 0.0, support_c)
    }

    /// Linear combination `a * p1 + b * p2` of two pairs at the same
    /// place, K-type, and support.  All four members combine linearly;
    /// cached nodes combine exactly.
    pub fn combine(a: f64, p1: &Self, b: f64, p2: &Self) -> Result<Self> {
        if p1.place != p2.place || p1.n != p2.n {
            return Err(Error::domain(
                "combine",
                "pairs must share place and K-type",
            ));
        }
        if (p1.support_c - p2.support_c).abs() > 1e-12 {
            return Err(Error::domain("combine", "pairs must share support"));
        }
        let lin = |f1: &RealFn, f2: &RealFn| -> RealFn {
            let f1 = f1.clone();
            let f2 = f2.clone();
            Arc::new(move |x: f64| a * f1(x) + b * f2(x))
        };
        let phi = match (&p1.phi, &p2.phi) {
            (Some(f1), Some(f2)) => Some(lin(f1, f2)),
            _ => None,
        };
        let qprime = match (&p1.qprime, &p2.qprime) {
            (Some(f1), Some(f2)) => Some(lin(f1, f2)),
            _ => None,
        };
        let g_prime_analytic = match (&p1.g_prime_analytic, &p2.g_prime_analytic) {
            (Some(f1), Some(f2)) => Some(lin(f1, f2)),
            _ => None,
        };
        let nodes = p1
            .nodes
            .iter()
            .zip(p2.nodes.iter())
            .map(|(n1, n2)| HNode {
                x: n1.x,
                w: n1.w,
                gx: a * n1.gx + b * n2.gx,
            })
            .collect();
        Ok(Self {
            place: p1.place,
            n: p1.n,
            support_s: p1.support_s,
            support_c: p1.support_c,
            phi,
            q: lin(&p1.q, &p2.q),
            qprime,
            g: lin(&p1.g, &p2.g),
            g_prime_analytic,
            nodes: Arc::new(nodes),
        })
    }

    pub fn place(&self) -> ArchPlace {
        self.place
    }

    /// The K-type order `n` of the pair.
    pub fn k_type(&self) -> u32 {
        self.n
    }

    /// Right endpoint `S` of the support of `phi` and `Q`.
    pub fn support_s(&self) -> f64 {
        self.support_s
    }

    /// Half-width `C` of the support of `g`.
    pub fn support_c(&self) -> f64 {
        self.support_c
    }

    /// The profile `phi(u)`.  Unavailable only for `from_g` pairs at a
    /// complex place with `n > 0`, where no closed inverse exists.
    pub fn phi(&self, u: f64) -> Result<f64> {
        match &self.phi {
            Some(f) => {
                let v = f(u);
                if v.is_nan() {
                    Err(Error::domain("phi", format!("evaluation failed at u = {u}")))
                } else {
                    Ok(v)
                }
            }
            None => Err(Error::unsupported(
                "phi",
                "no closed inverse transform for this pair (complex place, n > 0)",
            )),
        }
    }

    /// The transformed profile `Q(y)`.
    pub fn q(&self, y: f64) -> f64 {
        (self.q)(y)
    }

    /// Derivative `Q'(y)`; available on `from_g` pairs (and combinations
    /// thereof), where it is computed from `g'` by the chain rule.
    pub fn q_prime(&self, y: f64) -> Result<f64> {
        match &self.qprime {
            Some(f) => Ok(f(y)),
            None => Err(Error::unsupported(
                "q_prime",
                "Q' is stored only on pairs built from g",
            )),
        }
    }

    /// The even function `g(x)`.
    pub fn g(&self, x: f64) -> f64 {
        (self.g)(x)
    }

    /// `g'(x)`: analytic when known, else a five-point stencil.
    pub fn g_prime(&self, x: f64) -> f64 {
        match &self.g_prime_analytic {
            Some(f) => f(x),
            None => five_point_first(&self.g, x, STENCIL_STEP * self.support_c),
        }
    }

    /// `g''(x)` by a five-point stencil (on the analytic `g'` if known).
    pub fn g_second(&self, x: f64) -> f64 {
        let h = STENCIL_STEP * self.support_c;
        match &self.g_prime_analytic {
            Some(f) => five_point_first(f, x, h),
            None => five_point_second(&self.g, x, h),
        }
    }

    /// The transform `h(xi) = int_{-C}^{C} g(u) e^{i xi u} du`, evaluated
    /// over the cached nodes.  Requires `|Im xi| <= 50`.
    pub fn h(&self, xi: Complex64) -> Result<Complex64> {
        if xi.im.abs() > H_IM_BOUND {
            return Err(Error::domain(
                "h",
                format!("|Im xi| = {} exceeds the trusted strip 50", xi.im.abs()),
            ));
        }
        let mut sum = Complex64::new(0.0, 0.0);
        for node in self.nodes.iter() {
            sum += (xi * node.x).cos() * (2.0 * node.w * node.gx);
        }
        Ok(sum)
    }

    /// `h(r)` for real `r` (always real-valued).
    pub fn h_real(&self, r: f64) -> f64 {
        let mut sum = 0.0;
        for node in self.nodes.iter() {
            sum += 2.0 * node.w * node.gx * (r * node.x).cos();
        }
        sum
    }

    /// `h(i sigma)` for real `sigma` (real-valued; requires
    /// `|sigma| <= 50`).
    pub fn h_at_i(&self, sigma: f64) -> Result<f64> {
        if sigma.abs() > H_IM_BOUND {
            return Err(Error::domain(
                "h_at_i",
                format!("|sigma| = {} exceeds the trusted strip 50", sigma.abs()),
            ));
        }
        let mut sum = 0.0;
        for node in self.nodes.iter() {
            sum += 2.0 * node.w * node.gx * (sigma * node.x).cosh();
        }
        Ok(sum)
    }
}

/// Reference bump profile `phi(u) = exp(-1/(1-(u/S)^2))` supported in
/// `[0, S]`, used as the standard fixture throughout the tests and
/// examples.
pub fn phi_bump(support_s: f64) -> impl Fn(f64) -> f64 + Send + Sync + Copy {
    move |u: f64| {
        let v = u / support_s;
        let d = 1.0 - v * v;
        if d > 0.0 {
            (-1.0 / d).exp()
        } else {
            0.0
        }
    }
}

/// Derivative of [`phi_bump`].
pub fn phi_bump_prime(support_s: f64) -> impl Fn(f64) -> f64 + Send + Sync + Copy {
    move |u: f64| {
        let v = u / support_s;
        let d = 1.0 - v * v;
        if d > 0.0 {
            (-1.0 / d).exp() * (-2.0 * v) / (support_s * d * d)
        } else {
            0.0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bump_mass_constant() {
        assert!((bump_mass_unit() - 0.443993816168).abs() < 1e-9);
    }

    #[test]
    fn real_phi_first_g_at_zero() {
        // g(0) = Q(0) = A_n(phi)(0) for the standard S = 2 bump profile.
        let frozen = [
            0.7941402196,
            0.7571913825,
            0.6526138070,
            0.4979224278,
            0.3182975721,
        ];
        for (n, want) in frozen.iter().enumerate() {
            let pair =
                TestFunctionPair::from_phi(ArchPlace::Real, n as u32, phi_bump(2.0), 2.0).unwrap();
            let got = pair.g(0.0);
            assert!((got - want).abs() < 1e-8, "n={n}: got {got}, want {want}");
        }
    }

    #[test]
    fn real_phi_first_h_values() {
        let pair = TestFunctionPair::from_phi(ArchPlace::Real, 0, phi_bump(2.0), 2.0).unwrap();
        assert!((pair.h_real(0.0) - 1.343073913128).abs() < 1e-8);
        assert!((pair.h_at_i(0.5).unwrap() - 1.3948477111129).abs() < 1e-8);
        // h(i sigma) agrees with the complex evaluation.
        let via_complex = pair.h(Complex64::new(0.0, 0.5)).unwrap();
        assert!((via_complex.re - pair.h_at_i(0.5).unwrap()).abs() < 1e-13);
        assert!(via_complex.im.abs() < 1e-13);
    }

    #[test]
    fn complex_phi_first_frozen() {
        let pair = TestFunctionPair::from_phi(ArchPlace::Complex, 0, phi_bump(2.0), 2.0).unwrap();
        assert!((pair.g(0.0) - 0.443993816168).abs() < 1e-9);
        assert!((pair.h_real(0.0) - 1.314731294320).abs() < 1e-8);
        // Half-width: L_C = 2 arccosh(2).
        assert!((pair.support_c() - 2.0 * 2.0f64.acosh()).abs() < 1e-14);
    }

    #[test]
    fn from_g_chain_rule_guard() {
        // Unit-scale bump: g''(0) = -2 e^{-1} / C^2, so Q'(0) = g''(0)/2.
        let c = (1.0f64 + 1.0).acosh();
        let pair = TestFunctionPair::bump_with_scale(ArchPlace::Real, 0, c, std::f64::consts::E)
            .unwrap();
        let want = -2.0 / (c * c) / 2.0;
        let got = pair.q_prime(1e-12).unwrap();
        assert!((got - want).abs() < 1e-10, "got {got}, want {want}");
        // Continuity across the guard threshold.
        let near = pair.q_prime(1e-6).unwrap();
        assert!((near - want).abs() < 1e-5);
    }

    #[test]
    fn ds_weight_normalization() {
        let c = (1.0f64 + 1.0).acosh();
        let pair =
            TestFunctionPair::make_bump(ArchPlace::Real, 12, c, BumpNormalization::DsWeight(12))
                .unwrap();
        assert!((pair.h_at_i(5.5).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn unit_mass_normalization() {
        let c = 1.1;
        let pair =
            TestFunctionPair::make_bump(ArchPlace::Real, 0, c, BumpNormalization::UnitMass)
                .unwrap();
        assert!((pair.h_real(0.0) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn unit_g0_normalization() {
        let pair =
            TestFunctionPair::make_bump(ArchPlace::Real, 0, 1.3, BumpNormalization::UnitG0)
                .unwrap();
        assert!((pair.g(0.0) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn combine_is_linear() {
        let c = 1.2;
        let p1 = TestFunctionPair::make_bump(ArchPlace::Real, 0, c, BumpNormalization::UnitG0)
            .unwrap();
        let p2 = TestFunctionPair::make_bump(ArchPlace::Real, 0, c, BumpNormalization::UnitMass)
            .unwrap();
        let comb = TestFunctionPair::combine(2.0, &p1, -0.5, &p2).unwrap();
        let x = 0.3;
        assert!((comb.g(x) - (2.0 * p1.g(x) - 0.5 * p2.g(x))).abs() < 1e-13);
        let r = 1.0;
        assert!((comb.h_real(r) - (2.0 * p1.h_real(r) - 0.5 * p2.h_real(r))).abs() < 1e-12);
        let u = 0.2;
        let want = 2.0 * p1.phi(u).unwrap() - 0.5 * p2.phi(u).unwrap();
        assert!((comb.phi(u).unwrap() - want).abs() < 1e-9);
    }

    #[test]
    fn combine_rejects_mismatch() {
        let p1 = TestFunctionPair::make_bump(ArchPlace::Real, 0, 1.0, BumpNormalization::UnitG0)
            .unwrap();
        let p2 = TestFunctionPair::make_bump(ArchPlace::Real, 1, 1.0, BumpNormalization::UnitG0)
            .unwrap();
        assert!(TestFunctionPair::combine(1.0, &p1, 1.0, &p2).is_err());
        let p3 = TestFunctionPair::make_bump(ArchPlace::Real, 0, 1.5, BumpNormalization::UnitG0)
            .unwrap();
        assert!(TestFunctionPair::combine(1.0, &p1, 1.0, &p3).is_err());
    }

    #[test]
    fn h_strip_guard() {
        let pair = TestFunctionPair::make_bump(ArchPlace::Real, 0, 1.0, BumpNormalization::UnitG0)
            .unwrap();
        assert!(pair.h(Complex64::new(0.0, 51.0)).is_err());
        assert!(pair.h_at_i(-51.0).is_err());
        assert!(pair.h(Complex64::new(3.0, 49.0)).is_ok());
    }

    #[test]
    fn zero_pair_vanishes() {
        let pair = TestFunctionPair::zero(ArchPlace::Real, 0, 1.0).unwrap();
        assert_eq!(pair.g(0.1), 0.0);
        assert_eq!(pair.h_real(2.0), 0.0);
        assert_eq!(pair.q(0.5), 0.0);
        assert_eq!(pair.phi(0.2).unwrap(), 0.0);
    }

    #[test]
    fn complex_from_g_higher_order_has_no_phi() {
        let pair = TestFunctionPair::make_bump(ArchPlace::Complex, 1, 1.0, BumpNormalization::UnitG0)
            .unwrap();
        assert!(matches!(
            pair.phi(0.1),
            Err(crate::Error::Unsupported { .. })
        ));
        // g and h remain fully usable.
        assert!((pair.g(0.0) - 1.0).abs() < 1e-14);
        assert!(pair.h_real(1.0).is_finite());
    }

    #[test]
    fn from_g_round_trip_consistency() {
        // A from_g pair exposes phi via the inverse transform; pushing
        // that phi back through from_phi must reproduce g.
        let c = (1.0f64 + 1.0).acosh(); // S = 2
        let pair = TestFunctionPair::make_bump(ArchPlace::Real, 2, c, BumpNormalization::UnitG0)
            .unwrap();
        let phi_closure = {
            let pair = pair.clone();
            move |u: f64| pair.phi(u).unwrap_or(0.0)
        };
        for &y in &[0.0, 0.4, 1.1] {
            let forward = abel_forward_real(&phi_closure, 2.0, 2, y).unwrap();
            let q = pair.q(y);
            assert!((forward - q).abs() < 1e-6, "y={y}: {forward} vs {q}");
        }
    }
}
