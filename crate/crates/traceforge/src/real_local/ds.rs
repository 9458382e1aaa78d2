//! Pseudo-coefficient of a weight-`k` discrete series, realized as the
//! difference of two bump pairs of K-type `k` and `k - 2` sharing one and
//! the same `g` (hence the same `Q` and the same transform `h`), with `h`
//! normalized so that `h(i (k-1)/2) = 1`.
//!
//! Sharing `g` makes every `h`- or `Q`-based cancellation exact to the
//! last bit: the pseudo-coefficient kills all principal series and all
//! lower discrete series identically, and its hyperbolic distribution is
//! literally zero.

use crate::error::{Error, Result};
use crate::special::integrate;
use crate::testfn::{ArchPlace, BumpNormalization, TestFunctionPair};
use num_complex::Complex64;
use std::f64::consts::PI;

use super::ops::{char_value_real, hyperbolic_real, HyperbolicConvention};
use super::{ParabolicValue, ReprReal};

/// Matrix coefficient surrogate for the weight-`k` discrete series.
#[derive(Clone)]
pub struct PseudoCoefficientDs {
    k: u32,
    pair_k: TestFunctionPair,
    pair_km2: TestFunctionPair,
}

impl PseudoCoefficientDs {
    /// Build the pseudo-coefficient at weight `k >= 2` from the standard
    /// bump with half-width `support_c`.
    pub fn new(k: u32, support_c: f64) -> Result<Self> {
        if k < 2 {
            return Err(Error::domain(
                "PseudoCoefficientDs::new",
                format!("weight must be >= 2, got {k}"),
            ));
        }
        let pair_k = TestFunctionPair::make_bump(
            ArchPlace::Real,
            k,
            support_c,
            BumpNormalization::DsWeight(k),
        )?;
        let pair_km2 = TestFunctionPair::make_bump(
            ArchPlace::Real,
            k - 2,
            support_c,
            BumpNormalization::DsWeight(k),
        )?;
        Ok(Self {
            k,
            pair_k,
            pair_km2,
        })
    }

    pub fn weight(&self) -> u32 {
        self.k
    }

    /// The normalization point `a = (k - 1)/2`.
    pub fn normalization_point(&self) -> f64 {
        (self.k as f64 - 1.0) / 2.0
    }

    /// The K-type `k` constituent.
    pub fn pair_plus(&self) -> &TestFunctionPair {
        &self.pair_k
    }

    /// The K-type `k - 2` constituent (K-type 0 when `k = 2`).
    pub fn pair_minus(&self) -> &TestFunctionPair {
        &self.pair_km2
    }

    /// Trace against an irreducible representation: 1 on the weight-`k`
    /// discrete series, 0 on every principal series and every other
    /// discrete series; for `k = 2` the one-dimensional representation
    /// is also seen (with value `-h(i/2)`).
    pub fn char_value(&self, repr: &ReprReal) -> Result<Complex64> {
        Ok(char_value_real(&self.pair_k, repr)? - char_value_real(&self.pair_km2, repr)?)
    }

    /// Identity distribution of the difference: the shared continuous
    /// parts cancel and only the top discrete term survives,
    /// `(k-1)/(4 pi) h(i (k-1)/2)` (= `(k-1)/(4 pi)` in this
    /// normalization).
    pub fn identity(&self) -> Result<f64> {
        let a = self.normalization_point();
        Ok((self.k as f64 - 1.0) / (4.0 * PI) * self.pair_k.h_at_i(a)?)
    }

    /// Parabolic distribution of the difference.  The divergent
    /// coefficient cancels exactly (shared `g`); the finite part reduces
    /// to the faithful derivative `-int_0^C g(u) sinh((k-1)u/2) du`.
    pub fn parabolic(&self) -> Result<ParabolicValue> {
        Ok(ParabolicValue {
            g_at_zero: 0.0,
            finite_part: self.parabolic_faithful_derivative()?,
        })
    }

    /// `-int_0^C g(u) sinh((k-1) u / 2) du`: the finite parabolic part
    /// actually carried by the difference, obtained from the identity
    /// `cosh((k-2)u/2) - cosh(ku/2) = -2 sinh((k-1)u/2) sinh(u/2)`.
    /// This is the derivative value the global assembler consumes.
    pub fn parabolic_faithful_derivative(&self) -> Result<f64> {
        let a = self.normalization_point();
        let r = integrate(
            |u: f64| self.pair_k.g(u) * (a * u).sinh(),
            0.0,
            self.pair_k.support_c(),
            1e-11,
        )?;
        Ok(-r.value)
    }

    /// The closed-form normalized candidate `h(i (k-1)/2)` (equal to 1
    /// under the pseudo-coefficient normalization).  It does **not**
    /// agree with [`Self::parabolic_faithful_derivative`]; both are kept
    /// so the discrepancy stays measurable.
    pub fn parabolic_normalized_claim(&self) -> Result<f64> {
        self.pair_k.h_at_i(self.normalization_point())
    }

    /// Hyperbolic distribution of the difference: identically zero,
    /// because both constituents share the same `Q`.
    pub fn hyperbolic(&self, alpha: f64) -> Result<f64> {
        let plus = hyperbolic_real(&self.pair_k, alpha, HyperbolicConvention::QOverSinh)?;
        let minus = hyperbolic_real(&self.pair_km2, alpha, HyperbolicConvention::QOverSinh)?;
        Ok(plus - minus)
    }

    /// Elliptic distribution of the difference, in closed form:
    /// `i e^{i(k-1)theta} h(i(k-1)/2) / |sin theta|`.
    pub fn elliptic(&self, theta: f64) -> Result<Complex64> {
        if !(theta > 0.0 && theta < PI) {
            return Err(Error::domain(
                "PseudoCoefficientDs::elliptic",
                format!("theta = {theta} outside the open interval (0, pi)"),
            ));
        }
        let a = self.normalization_point();
        let h = self.pair_k.h_at_i(a)?;
        let phase = Complex64::new(0.0, 1.0)
            * Complex64::from_polar(1.0, (self.k as f64 - 1.0) * theta);
        Ok(phase * h / theta.sin().abs())
    }

    /// The rescaled elliptic candidate `2 pi i e^{i(k-1)theta} / (k |sin
    /// theta|)`.  It differs from [`Self::elliptic`] by the factor
    /// `2 pi / k`; both are kept so the discrepancy stays measurable.
    pub fn elliptic_rescaled_claim(&self, theta: f64) -> Result<Complex64> {
        if !(theta > 0.0 && theta < PI) {
            return Err(Error::domain(
                "PseudoCoefficientDs::elliptic_rescaled_claim",
                format!("theta = {theta} outside the open interval (0, pi)"),
            ));
        }
        let phase = Complex64::new(0.0, 1.0)
            * Complex64::from_polar(1.0, (self.k as f64 - 1.0) * theta);
        Ok(2.0 * PI * phase / (self.k as f64 * theta.sin().abs()))
    }
}
