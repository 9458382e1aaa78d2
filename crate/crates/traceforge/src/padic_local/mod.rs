//! Local distributions at a finite place, in exact arithmetic.
//!
//! Everything in this module is computed over the rationals or over a
//! cyclotomic field `Q(zeta_M)`: rational numbers are [`num_rational::BigRational`],
//! root-of-unity combinations are [`CyclotomicElement`], and values that
//! depend on a complex parameter `s` are Laurent polynomials in
//! `X = q^{-s}` ([`LaurentPolynomial`]).  No floating point enters any
//! computation; `approx` methods exist only for display and for handing
//! values to the global assembler.
//!
//! The module has two halves that check each other:
//!
//! - [`exact`] — closed-form evaluations of the standard local data:
//!   fixed-vector dimension counts, traces of the basic test elements on
//!   the irreducible representations, identity / parabolic / hyperbolic /
//!   elliptic distributions, intertwiner factors, and depth-zero
//!   cuspidal character values.
//! - [`brute`] — an exhaustive finite-group model of `GL2(Z/p^n)` that
//!   recomputes the same quantities by explicit summation (induced
//!   characters via Frobenius sums, orbit sums, unipotent averages) so
//!   the closed forms can be certified exactly, value by value.
//!
//! Closed-form operations accept any prime power `q >= 2` (primality is
//! not needed for the formulas); the brute-force model requires a genuine
//! prime `p` because it works with the residue ring `Z/p^n`, and it is
//! guarded to `p <= 5`, `n <= 2` so group orders stay below `10^7`.

pub mod brute;
pub mod character;
pub mod cyclotomic;
pub mod exact;
pub mod field;
pub mod laurent;

pub use brute::{
    brute_hom_dim, brute_orbital_sum, brute_report, BruteCharacter, BruteRow, DepthZeroModel,
    FiniteGroupModel, Mat,
};
pub use character::PadicCharacter;
pub use cyclotomic::{cyclotomic_polynomial, CyclotomicElement};
pub use exact::{
    depth_zero_character, elliptic_padic, hom_dim_unipotent, hyperbolic_padic, identity_padic,
    intertwiner_padic, iwahori_volumes, ktype_dim, onedim_padic, parabolic_padic,
    spherical_intertwiner_partial_sum, trace_on_rep,
};
pub use field::QuadExtension;
pub use laurent::LaurentPolynomial;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A compactly supported test element at a finite place.
///
/// Each variant is normalized so that its defining projector property
/// holds with constant `1` (see [`exact::trace_on_rep`]).
#[derive(Debug, Clone)]
pub enum TestKind {
    /// Congruence test attached to a smooth character of conductor
    /// exponent `conductor`; `conductor == 0` is the bi-invariant unit
    /// element of the spherical Hecke algebra.
    ///
    /// The optional character payload is required only by operations
    /// that evaluate the character at explicit units (the hyperbolic
    /// distribution); dimension counts and the identity / parabolic
    /// distributions depend on the conductor alone.
    PhiMu {
        /// Conductor exponent `N >= 0` of the character.
        conductor: u32,
        /// Explicit character data, when an operation needs values.
        mu: Option<PadicCharacter>,
    },
    /// Pseudo-coefficient of the square-integrable subrepresentation of
    /// the unramified induced representation (difference of the level-one
    /// projector and the spherical unit).
    PhiSteinberg,
    /// Matrix coefficient of a supercuspidal representation.
    PhiSupercuspidal(SupercuspidalData),
    /// The unramified Hecke operator at the uniformizer (determinant
    /// valuation one, bi-invariant).
    HeckeUnramified,
    /// The ramified Hecke operator of conductor exponent `conductor >= 1`.
    HeckeRamified {
        /// Conductor exponent `N >= 1`.
        conductor: u32,
        /// Explicit character data, when an operation needs values.
        mu: Option<PadicCharacter>,
    },
}

/// Supercuspidal test data.
///
/// Positive-level supercuspidals enter abstractly as a dimension plus an
/// optional fixed-vector profile; the explicit construction is in scope
/// only at depth zero, where the finite-field model is exact.
#[derive(Debug, Clone)]
pub enum SupercuspidalData {
    /// Depth-zero supercuspidal attached to a regular character of the
    /// quadratic extension of the residue field, specified by the power
    /// of the canonical generator character (see [`field::QuadExtension`]).
    DepthZero {
        /// Residue characteristic (prime).
        p: u64,
        /// Power of the canonical order-`q^2 - 1` generator character.
        theta_power: u64,
    },
    /// Abstract supercuspidal: formal degree data only.
    Abstract {
        /// Formal dimension (relative to the depth-zero normalization).
        dim: BigRational,
        /// Whether the inducing datum is ramified (doubles the measure
        /// normalization of the parabolic distribution).
        ramified: bool,
        /// Fixed-vector dimension profile `F(0), F(1), ..., F(K)` under
        /// the upper-triangular unipotent filtration, already normalized;
        /// the last entry is the stable tail value.  Required by the
        /// parabolic distribution.
        hom_profile: Option<Vec<BigRational>>,
    },
}

/// The irreducible smooth representations that the basic test elements
/// see, reduced to the data needed for trace evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReprPadic {
    /// Irreducible principal series whose inducing characters have
    /// conductor exponents `{mu_conductor, 0}`.
    PrincipalSeries {
        /// Conductor exponent of the ramified inducing character.
        mu_conductor: u32,
    },
    /// The square-integrable subrepresentation at level one.
    SteinbergRep,
    /// One-dimensional representation (character composed with the
    /// determinant) of conductor exponent `mu_conductor`.
    OneDimensional {
        /// Conductor exponent of the character.
        mu_conductor: u32,
    },
    /// A supercuspidal representation; only whether it matches the test
    /// datum is relevant to the trace.
    SupercuspidalRep {
        /// Whether this is the representation the test element projects
        /// onto.
        matches_test: bool,
    },
}

/// The two fixed-vector counting families used by [`exact::hom_dim_unipotent`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhoKind {
    /// Induced pair datum of a character with conductor exponent `N >= 1`.
    Mu {
        /// Conductor exponent.
        conductor: u32,
    },
    /// The level-one square-integrable datum (trivial character, level
    /// exponent one).
    OnePrime,
    /// The trivial datum (spherical, level exponent zero).
    OneTrivial,
}

/// An exact scalar: a rational number or a cyclotomic combination.
#[derive(Debug, Clone, PartialEq)]
pub enum PadicValue {
    /// A rational value.
    Rat(BigRational),
    /// A value in `Q(zeta_M)`.
    Cyc(CyclotomicElement),
}

impl PadicValue {
    /// The zero value.
    pub fn zero() -> Self {
        PadicValue::Rat(BigRational::zero())
    }

    /// Rational constructor from an integer.
    pub fn from_int(v: i64) -> Self {
        PadicValue::Rat(BigRational::from_integer(BigInt::from(v)))
    }

    /// True when the value is exactly zero.
    pub fn is_zero(&self) -> bool {
        match self {
            PadicValue::Rat(r) => r.is_zero(),
            PadicValue::Cyc(c) => c.is_zero(),
        }
    }

    /// Rational content, if the value lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            PadicValue::Rat(r) => Some(r.clone()),
            PadicValue::Cyc(c) => c.as_rational(),
        }
    }

    /// Floating-point image (for display and for the assembler).
    pub fn approx(&self) -> Complex64 {
        match self {
            PadicValue::Rat(r) => Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0),
            PadicValue::Cyc(c) => c.approx(),
        }
    }
}

/// A trace value: either a Laurent polynomial in `X = q^{-s}` or a
/// number of the shape `a + b*sqrt(q)` (which arises on one-dimensional
/// representations, where the Hecke eigenvalue involves a half power).
#[derive(Debug, Clone, PartialEq)]
pub enum TraceValue {
    /// Laurent polynomial in `X = q^{-s}`.
    Symbolic(LaurentPolynomial),
    /// The number `a + b * sqrt(q)`.
    WithSqrtQ {
        /// Rational part.
        a: BigRational,
        /// Coefficient of `sqrt(q)`.
        b: BigRational,
    },
}

impl TraceValue {
    /// The constant trace `v` (as a degree-zero Laurent polynomial).
    pub fn constant(v: i64) -> Self {
        TraceValue::Symbolic(LaurentPolynomial::constant(BigRational::from_integer(
            BigInt::from(v),
        )))
    }

    /// Floating-point value at a given `q` and spectral parameter `s`
    /// (only the `Symbolic` variant uses `s`).
    pub fn approx(&self, q: f64, s: Complex64) -> Complex64 {
        match self {
            TraceValue::Symbolic(p) => {
                let x = (-s * q.ln()).exp();
                p.eval_complex(x)
            }
            TraceValue::WithSqrtQ { a, b } => Complex64::new(
                a.to_f64().unwrap_or(f64::NAN) + b.to_f64().unwrap_or(f64::NAN) * q.sqrt(),
                0.0,
            ),
        }
    }

    /// True when the value is a palindromic Laurent polynomial
    /// (invariant under `X -> 1/X`, i.e. under `s -> -s`); `WithSqrtQ`
    /// values are `s`-independent and count as palindromic.
    pub fn is_palindromic(&self) -> bool {
        match self {
            TraceValue::Symbolic(p) => p.is_palindromic(),
            TraceValue::WithSqrtQ { .. } => true,
        }
    }
}

/// A value of the form `coefficient * q^{half_power_of_q / 2}`.
///
/// Half powers of `q` arise in the hyperbolic distribution of the
/// unramified Hecke operator; keeping the half power separate keeps the
/// coefficient exact.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaledPadicValue {
    /// Exact coefficient.
    pub coefficient: PadicValue,
    /// The value is `coefficient * q^(half_power_of_q/2)`.
    pub half_power_of_q: i64,
}

impl ScaledPadicValue {
    /// A plain (integer-power) value.
    pub fn plain(coefficient: PadicValue) -> Self {
        ScaledPadicValue {
            coefficient,
            half_power_of_q: 0,
        }
    }

    /// The zero value.
    pub fn zero() -> Self {
        Self::plain(PadicValue::zero())
    }

    /// True when the coefficient is exactly zero.
    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }

    /// Floating-point image at a given `q`.
    pub fn approx(&self, q: f64) -> Complex64 {
        self.coefficient.approx() * q.powf(self.half_power_of_q as f64 / 2.0)
    }
}

/// Result of the parabolic distribution at a finite place: the value of
/// the attached zeta quotient at the central point together with its
/// derivative there, reported as an exact multiple of `log q`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParabolicPadic {
    /// Value at the central point (always rational).
    pub value: BigRational,
    /// Derivative at the central point, as the coefficient of `log q`.
    pub log_q_coefficient: BigRational,
}

/// A regular hyperbolic conjugacy class `diag(m, 1)` with
/// `m = unit * p^valuation`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HyperbolicClass {
    /// Valuation of `m`.
    pub valuation: i64,
    /// Unit part of `m` (an integer coprime to the residue
    /// characteristic).
    pub unit: i64,
}

/// An elliptic element, given by the coefficients of its characteristic
/// polynomial `X^2 - trace*X + det`.
#[derive(Debug, Clone, PartialEq)]
pub struct EllipticElementData {
    /// Trace of the element.
    pub trace: BigRational,
    /// Determinant of the element.
    pub det: BigRational,
}

impl EllipticElementData {
    /// Convenience constructor from integers.
    pub fn from_ints(trace: i64, det: i64) -> Self {
        EllipticElementData {
            trace: BigRational::from_integer(BigInt::from(trace)),
            det: BigRational::from_integer(BigInt::from(det)),
        }
    }

    /// Discriminant `trace^2 - 4 det` of the characteristic polynomial.
    pub fn discriminant(&self) -> BigRational {
        &self.trace * &self.trace
            - BigRational::from_integer(BigInt::from(4)) * &self.det
    }
}

/// Which local intertwining factor to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntertwinerKind {
    /// Spherical (unramified) factor.
    Spherical,
    /// Factor on a ramified induced representation.
    Ramified,
    /// Factor on the level-one induced representation containing the
    /// square-integrable subrepresentation.
    Steinberg,
}

/// `v_p` of a nonzero rational number.
pub(crate) fn rational_valuation(p: u64, x: &BigRational) -> i64 {
    fn int_val(p: &BigInt, mut n: BigInt) -> i64 {
        let mut v = 0i64;
        let zero = BigInt::zero();
        while (&n % p) == zero {
            n /= p;
            v += 1;
        }
        v
    }
    assert!(!x.is_zero(), "valuation of zero is undefined");
    let p = BigInt::from(p);
    int_val(&p, x.numer().abs()) - int_val(&p, x.denom().abs())
}

/// `p^k` as a `BigInt`.
pub(crate) fn bigint_pow(p: u64, k: u32) -> BigInt {
    BigInt::from(p).pow(k)
}

/// `p^k` as a `BigRational`.
pub(crate) fn rat_pow(p: u64, k: u32) -> BigRational {
    BigRational::from_integer(bigint_pow(p, k))
}

/// `a/b` as a `BigRational`.
#[cfg(test)]
pub(crate) fn ratio(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// Integer `n` as a `BigRational`.
pub(crate) fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `q^e` for a signed exponent, as an exact rational.
pub(crate) fn rat_pow_signed(q: u64, e: i64) -> BigRational {
    if e >= 0 {
        rat_pow(q, e as u32)
    } else {
        BigRational::one() / rat_pow(q, (-e) as u32)
    }
}
