//! Closed-form local distributions at a finite place.
//!
//! Every function here is exact: results are rationals, cyclotomic
//! numbers, Laurent polynomials in `X = q^{-s}`, or rational multiples
//! of `log q`.  The brute-force module recomputes the starred families
//! by explicit summation over `GL2(Z/p^n)`; the unit tests pin both
//! sides against each other.
//!
//! Conventions.  Test elements are normalized as projectors (see
//! [`trace_on_rep`]): the congruence test of conductor `N` divided by
//! its fixed-vector count, the level-one pseudo-coefficient as a
//! difference of two such projectors, supercuspidal matrix coefficients
//! scaled so the trace on the matching representation is one.  All test
//! elements have trivial central character, so conjugacy data may be
//! normalized by the center (determinant valuations are only relevant
//! modulo two, except on Hecke operators, whose support fixes the
//! valuation exactly).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::padic_local::character::is_prime;
use crate::padic_local::cyclotomic::CyclotomicElement;
use crate::padic_local::field::QuadExtension;
use crate::padic_local::laurent::LaurentPolynomial;
use crate::padic_local::{
    bigint_pow, rat_int, rat_pow, rat_pow_signed, rational_valuation, EllipticElementData,
    HyperbolicClass, IntertwinerKind, PadicValue, ParabolicPadic, ReprPadic, RhoKind,
    ScaledPadicValue, SupercuspidalData, TestKind, TraceValue,
};

/// Dimension of the space of vectors fixed by the level-`r` principal
/// congruence filtration inside the representation generated at
/// conductor level `level`.
///
/// `level == 0, r == 0` is the spherical line.  Levels below the
/// conductor carry no fixed vectors and are rejected.
pub fn ktype_dim(q: u64, level: u32, r: u32) -> Result<BigInt> {
    const F: &str = "ktype_dim";
    check_q(F, q)?;
    if level == 0 && r == 0 {
        return Ok(BigInt::one());
    }
    if r < level.max(1) {
        return Err(Error::domain(
            F,
            format!("no fixed vectors at depth {r} below the conductor level {level}"),
        ));
    }
    if level >= 1 && r == level {
        // q^{N-1} (q + 1).
        return Ok(bigint_pow(q, level - 1) * BigInt::from(q + 1));
    }
    if level == 0 && r == 1 {
        return Ok(BigInt::from(q));
    }
    // Remaining cases: r >= 2 with r > level.
    Ok(bigint_pow(q, r - 2) * BigInt::from(q * q - 1))
}

/// Dimension of the space of vectors fixed by the depth-`k` unipotent
/// filtration subgroup in the induced datum `kind`.
pub fn hom_dim_unipotent(q: u64, kind: RhoKind, k: u32) -> Result<BigInt> {
    const F: &str = "hom_dim_unipotent";
    check_q(F, q)?;
    match kind {
        RhoKind::Mu { conductor } => {
            if conductor == 0 {
                return Err(Error::domain(
                    F,
                    "the ramified family needs conductor exponent >= 1",
                ));
            }
            if k == 0 {
                Ok(BigInt::one() + bigint_pow(q, conductor / 2))
            } else if k < conductor {
                Ok(BigInt::from(2) * bigint_pow(q, k))
            } else {
                Ok(bigint_pow(q, conductor) + bigint_pow(q, conductor - 1))
            }
        }
        RhoKind::OnePrime => Ok(if k == 0 {
            BigInt::one()
        } else {
            BigInt::from(q)
        }),
        RhoKind::OneTrivial => Ok(BigInt::one()),
    }
}

/// Trace of a test element on an irreducible representation, as an
/// exact function of the spectral parameter.
///
/// Traces that depend on `s` are Laurent polynomials in `X = q^{-s}`
/// and are palindromic (invariant under `s -> -s`); traces on
/// one-dimensional representations can involve `sqrt(q)`.
pub fn trace_on_rep(test: &TestKind, rep: &ReprPadic, q: u64) -> Result<TraceValue> {
    const F: &str = "trace_on_rep";
    check_q(F, q)?;
    let zero = TraceValue::constant(0);
    let one = TraceValue::constant(1);
    let hecke_pair = || {
        TraceValue::Symbolic(LaurentPolynomial::from_terms([
            (-1, BigRational::one()),
            (1, BigRational::one()),
        ]))
    };
    Ok(match (test, rep) {
        (TestKind::PhiMu { conductor, .. }, ReprPadic::PrincipalSeries { mu_conductor }) => {
            if conductor == mu_conductor {
                one
            } else {
                zero
            }
        }
        (TestKind::PhiMu { conductor: 0, .. }, ReprPadic::OneDimensional { mu_conductor: 0 }) => {
            one
        }
        (TestKind::PhiSteinberg, ReprPadic::SteinbergRep) => one,
        (TestKind::PhiSteinberg, ReprPadic::OneDimensional { mu_conductor: 0 }) => {
            TraceValue::constant(-1)
        }
        (TestKind::PhiSupercuspidal(_), ReprPadic::SupercuspidalRep { matches_test }) => {
            if *matches_test {
                one
            } else {
                zero
            }
        }
        (TestKind::HeckeUnramified, ReprPadic::PrincipalSeries { mu_conductor: 0 }) => {
            hecke_pair()
        }
        (TestKind::HeckeUnramified, ReprPadic::OneDimensional { mu_conductor: 0 }) => {
            // sqrt(q) + 1/sqrt(q) = ((q+1)/q) sqrt(q).
            TraceValue::WithSqrtQ {
                a: BigRational::zero(),
                b: BigRational::new(BigInt::from(q + 1), BigInt::from(q)),
            }
        }
        (
            TestKind::HeckeRamified { conductor, .. },
            ReprPadic::PrincipalSeries { mu_conductor },
        ) => {
            if *conductor >= 1 && conductor == mu_conductor {
                hecke_pair()
            } else {
                zero
            }
        }
        _ => zero,
    })
}

/// The identity distribution (value at the identity, normalized by the
/// formal degree convention of each family).
pub fn identity_padic(test: &TestKind, q: u64) -> Result<BigRational> {
    const F: &str = "identity_padic";
    check_q(F, q)?;
    match test {
        TestKind::PhiMu { conductor: 0, .. } => Ok(BigRational::one()),
        TestKind::PhiMu { conductor: n, .. } => {
            // (q^N + q^{N-1}) / (1 + q^{floor(N/2)}).
            let num = rat_pow(q, *n) + rat_pow(q, *n - 1);
            let den = BigRational::one() + rat_pow(q, *n / 2);
            Ok(num / den)
        }
        TestKind::PhiSteinberg => Ok(rat_int(q as i64 - 1)),
        TestKind::PhiSupercuspidal(SupercuspidalData::DepthZero { p, theta_power }) => {
            if *p != q {
                return Err(Error::domain(
                    F,
                    format!("depth-zero data lives at p = {p}, not q = {q}"),
                ));
            }
            check_regular_theta(F, q, *theta_power)?;
            Ok(rat_int(q as i64 - 1))
        }
        TestKind::PhiSupercuspidal(SupercuspidalData::Abstract { dim, ramified, .. }) => {
            if *ramified {
                Ok(rat_int((1 + q) as i64) / rat_int(2) * dim)
            } else {
                Ok(dim.clone())
            }
        }
        TestKind::HeckeUnramified | TestKind::HeckeRamified { .. } => Ok(BigRational::zero()),
    }
}

/// Trace on the unramified one-dimensional representation.
pub fn onedim_padic(test: &TestKind, q: u64) -> Result<TraceValue> {
    trace_on_rep(test, &ReprPadic::OneDimensional { mu_conductor: 0 }, q)
}

/// The parabolic (weighted unipotent) distribution: the value of the
/// attached zeta quotient at the central point, and its derivative
/// there as an exact multiple of `log q`.
///
/// The computation runs through the fixed-vector profile
/// `F(0), F(1), ...` of the test under the unipotent filtration: the
/// generating series `zeta(X) = sum_k a_k X^k` with
/// `a_k = (F(k) - F(k+1)/q) / (1 - 1/q)` telescopes against the local
/// zeta factor, and `f(X) = (1 - X) zeta(X)` is a polynomial because
/// the profile stabilizes at the conductor.  The reported pair is
/// `(f(1/q), -sum_k k c_k q^{-k})` where `c_k` are the coefficients of
/// `f`.
pub fn parabolic_padic(test: &TestKind, q: u64) -> Result<ParabolicPadic> {
    const F: &str = "parabolic_padic";
    check_q(F, q)?;
    let profile: Vec<BigRational> = match test {
        TestKind::PhiMu { conductor: 0, .. } => vec![BigRational::one()],
        TestKind::PhiMu { conductor: n, .. } => {
            let f0 = BigRational::one() + rat_pow(q, *n / 2);
            let mut prof = vec![BigRational::one()];
            for k in 1..*n {
                prof.push(rat_int(2) * rat_pow(q, k) / &f0);
            }
            prof.push((rat_pow(q, *n) + rat_pow(q, *n - 1)) / &f0);
            prof
        }
        TestKind::PhiSteinberg => vec![BigRational::zero(), rat_int(q as i64 - 1)],
        TestKind::PhiSupercuspidal(SupercuspidalData::DepthZero { p, theta_power }) => {
            if *p != q {
                return Err(Error::domain(
                    F,
                    format!("depth-zero data lives at p = {p}, not q = {q}"),
                ));
            }
            check_regular_theta(F, q, *theta_power)?;
            vec![BigRational::zero(), rat_int(q as i64 - 1)]
        }
        TestKind::PhiSupercuspidal(SupercuspidalData::Abstract {
            hom_profile,
            ramified,
            ..
        }) => {
            let prof = hom_profile.as_ref().ok_or_else(|| {
                Error::domain(
                    F,
                    "abstract supercuspidal data needs a fixed-vector profile",
                )
            })?;
            if prof.is_empty() {
                return Err(Error::domain(F, "fixed-vector profile must be nonempty"));
            }
            let mut out = zeta_pipeline(prof, q)?;
            if *ramified {
                let factor = rat_int(2) / rat_int((1 + q) as i64);
                out.value *= &factor;
                out.log_q_coefficient *= &factor;
            }
            return Ok(out);
        }
        TestKind::HeckeUnramified | TestKind::HeckeRamified { .. } => {
            return Err(Error::unsupported(
                F,
                "parabolic distribution of Hecke operators is out of scope",
            ));
        }
    };
    zeta_pipeline(&profile, q)
}

fn zeta_pipeline(profile: &[BigRational], q: u64) -> Result<ParabolicPadic> {
    let n_stable = profile.len() - 1;
    let one = BigRational::one();
    let qr = rat_int(q as i64);
    let denom = &one - &one / &qr;
    // f(X) = (1 - X) * sum_{k < n} a_k X^k + F(n) X^n.
    let mut f = LaurentPolynomial::monomial(n_stable as i64, profile[n_stable].clone());
    for k in 0..n_stable {
        let a_k = (&profile[k] - &profile[k + 1] / &qr) / &denom;
        f.add_term(k as i64, a_k.clone());
        f.add_term(k as i64 + 1, -a_k);
    }
    let x0 = &one / &qr;
    let value = f.eval_rational(&x0)?;
    let mut logq = BigRational::zero();
    for (k, c) in f.terms() {
        logq -= rat_int(k) * c * rat_pow_signed(q, -k);
    }
    Ok(ParabolicPadic {
        value,
        log_q_coefficient: logq,
    })
}

/// The hyperbolic distribution on the regular class `diag(m, 1)`,
/// `m = unit * p^valuation`.
///
/// With `weighted == false` the plain value is returned; with
/// `weighted == true` the returned quantity is the coefficient of
/// `log q` in the weighted variant (the weight vanishes on the
/// congruence tests and contributes `2/(q-1)` on Hecke operators).
pub fn hyperbolic_padic(
    test: &TestKind,
    q: u64,
    class: &HyperbolicClass,
    weighted: bool,
) -> Result<ScaledPadicValue> {
    const F: &str = "hyperbolic_padic";
    check_q(F, q)?;
    if class.unit == 0 {
        return Err(Error::domain(F, "unit part must be nonzero"));
    }
    if class.valuation == 0 && class.unit == 1 {
        return Err(Error::domain(F, "diag(1, 1) is not a regular class"));
    }
    match test {
        TestKind::PhiMu { conductor, mu } => {
            if weighted {
                // The weight factor vanishes on the congruence tests.
                return Ok(ScaledPadicValue::zero());
            }
            if class.valuation != 0 {
                return Ok(ScaledPadicValue::zero());
            }
            if !is_prime(q) {
                return Err(Error::unsupported(
                    F,
                    "unit-class values use p-adic valuations of 1 - m and need prime q",
                ));
            }
            if class.unit.rem_euclid(q as i64) == 0 {
                return Err(Error::domain(F, "unit part must be coprime to q"));
            }
            let w = rational_valuation(q, &rat_int(1 - class.unit));
            let mu_value = if *conductor == 0 {
                PadicValue::Rat(BigRational::one())
            } else {
                let chi = require_character(F, q, *conductor, mu)?;
                cyc_to_value(chi.eval(class.unit)?)
            };
            Ok(ScaledPadicValue::plain(scale_value(
                mu_value,
                &rat_pow_signed(q, w),
            )))
        }
        TestKind::PhiSteinberg | TestKind::PhiSupercuspidal(_) => Ok(ScaledPadicValue::zero()),
        TestKind::HeckeUnramified => {
            if class.valuation.abs() != 1 {
                return Ok(ScaledPadicValue::zero());
            }
            if weighted {
                let coeff = rat_int(2) / rat_int(q as i64 - 1);
                Ok(ScaledPadicValue::plain(PadicValue::Rat(coeff)))
            } else {
                Ok(ScaledPadicValue {
                    coefficient: PadicValue::Rat(BigRational::one()),
                    half_power_of_q: -1,
                })
            }
        }
        TestKind::HeckeRamified { conductor, mu } => {
            if class.valuation.abs() != 1 {
                return Ok(ScaledPadicValue::zero());
            }
            if !is_prime(q) {
                return Err(Error::unsupported(
                    F,
                    "ramified Hecke values evaluate a character at the unit part and need prime q",
                ));
            }
            let chi = require_character(F, q, *conductor, mu)?;
            let mu_value = cyc_to_value(chi.eval(class.unit)?);
            if weighted {
                let coeff = rat_int(2) / rat_int(q as i64 - 1);
                Ok(ScaledPadicValue::plain(scale_value(mu_value, &coeff)))
            } else {
                Ok(ScaledPadicValue {
                    coefficient: mu_value,
                    half_power_of_q: -1,
                })
            }
        }
    }
}

/// The elliptic distribution: the value of the test element on a
/// regular elliptic class, classified by whether the splitting field is
/// unramified or ramified.
pub fn elliptic_padic(
    test: &TestKind,
    p: u64,
    gamma: &EllipticElementData,
) -> Result<PadicValue> {
    const F: &str = "elliptic_padic";
    if !is_prime(p) {
        return Err(Error::unsupported(
            F,
            "elliptic classification is p-adic and needs prime p",
        ));
    }
    if gamma.det.is_zero() {
        return Err(Error::domain(F, "singular element (determinant zero)"));
    }
    let disc = gamma.discriminant();
    if disc.is_zero() {
        return Err(Error::domain(F, "not regular (discriminant zero)"));
    }
    let v_disc = rational_valuation(p, &disc);
    let unit_part = disc / rat_pow_signed(p, v_disc);
    if v_disc % 2 == 0 && unit_is_square(p, &unit_part)? {
        return Err(Error::domain(
            F,
            "eigenvalues lie in the base field (split class): not elliptic",
        ));
    }
    let unramified = v_disc % 2 == 0;
    let v_det = rational_valuation(p, &gamma.det);
    if !unramified && v_det % 2 == 0 {
        return Err(Error::unsupported(
            F,
            "ramified class with even determinant valuation (unit ramified torus) is out of scope",
        ));
    }
    let zero = PadicValue::zero();
    if unramified {
        match test {
            TestKind::PhiMu { conductor: 0, .. } => Ok(PadicValue::from_int(1)),
            TestKind::PhiMu { .. } => Ok(zero),
            TestKind::PhiSteinberg => Ok(PadicValue::from_int(-2)),
            TestKind::PhiSupercuspidal(SupercuspidalData::DepthZero { p: pp, theta_power }) => {
                if *pp != p {
                    return Err(Error::domain(
                        F,
                        format!("depth-zero data lives at p = {pp}, not {p}"),
                    ));
                }
                if v_det != 0 {
                    return Err(Error::unsupported(
                        F,
                        "normalize the class so the determinant is a unit",
                    ));
                }
                let value = depth_zero_character(p, *theta_power, gamma)?;
                Ok(PadicValue::Cyc(value))
            }
            TestKind::PhiSupercuspidal(SupercuspidalData::Abstract { ramified, .. }) => {
                if *ramified {
                    // A ramified inducing datum pairs to zero with an
                    // unramified torus.
                    Ok(zero)
                } else {
                    Err(Error::unsupported(
                        F,
                        "abstract supercuspidal values on the unramified torus need explicit character data",
                    ))
                }
            }
            TestKind::HeckeUnramified | TestKind::HeckeRamified { .. } => Ok(zero),
        }
    } else {
        match test {
            TestKind::PhiMu { .. } => Ok(zero),
            TestKind::PhiSteinberg => Ok(zero),
            TestKind::PhiSupercuspidal(SupercuspidalData::DepthZero { .. }) => Ok(zero),
            TestKind::PhiSupercuspidal(SupercuspidalData::Abstract { ramified, .. }) => {
                if *ramified {
                    Err(Error::unsupported(
                        F,
                        "abstract supercuspidal values on the ramified torus need explicit character data",
                    ))
                } else {
                    Ok(zero)
                }
            }
            TestKind::HeckeUnramified => Ok(PadicValue::from_int(2)),
            TestKind::HeckeRamified { .. } => Ok(zero),
        }
    }
}

/// The local intertwining factor at `X = q^{-s}`, evaluated at an even
/// integer spectral point `two_s = 2s`.
pub fn intertwiner_padic(kind: IntertwinerKind, q: u64, two_s: i64) -> Result<BigRational> {
    const F: &str = "intertwiner_padic";
    check_q(F, q)?;
    match kind {
        IntertwinerKind::Spherical => {
            if two_s == 0 {
                return Err(Error::domain(F, "pole of the spherical factor at s = 0"));
            }
            let num = BigRational::one() - rat_pow_signed(q, -(two_s + 1));
            let den = BigRational::one() - rat_pow_signed(q, -two_s);
            Ok(num / den)
        }
        IntertwinerKind::Ramified => Ok(BigRational::one()),
        IntertwinerKind::Steinberg => {
            if two_s == 0 || two_s == 1 {
                return Err(Error::domain(
                    F,
                    "zero/pole of the level-one factor at 2s in {0, 1}",
                ));
            }
            let num = BigRational::one() - rat_pow_signed(q, -(two_s - 1));
            let den = BigRational::one() - rat_pow_signed(q, -two_s);
            Ok(num / den)
        }
    }
}

/// Partial sum of the geometric-series expansion of the spherical
/// intertwining factor: `(1 - q^{-(2s+1)}) * sum_{k<terms} q^{-2s k}`.
/// Used to certify [`intertwiner_padic`] against its defining series.
pub fn spherical_intertwiner_partial_sum(q: u64, two_s: i64, terms: u32) -> Result<BigRational> {
    const F: &str = "spherical_intertwiner_partial_sum";
    check_q(F, q)?;
    if two_s <= 0 {
        return Err(Error::domain(F, "the series converges only for 2s > 0"));
    }
    let mut acc = BigRational::zero();
    for k in 0..terms {
        acc += rat_pow_signed(q, -two_s * k as i64);
    }
    Ok((BigRational::one() - rat_pow_signed(q, -(two_s + 1))) * acc)
}

/// The depth-zero cuspidal character value `-(theta(lambda) +
/// theta(lambda^q))` at a regular elliptic element with unit
/// determinant, through the canonical quadratic-extension model.
pub fn depth_zero_character(
    p: u64,
    theta_power: u64,
    gamma: &EllipticElementData,
) -> Result<CyclotomicElement> {
    const F: &str = "depth_zero_character";
    if !is_prime(p) {
        return Err(Error::domain(F, format!("{p} is not prime")));
    }
    check_regular_theta(F, p, theta_power)?;
    let field = QuadExtension::new(p)?;
    let t = unit_residue_mod(F, p, &gamma.trace)?;
    if rational_valuation_or_zero(p, &gamma.det) != 0 {
        return Err(Error::domain(F, "determinant must be a p-adic unit"));
    }
    let d = unit_residue_mod(F, p, &gamma.det)?;
    let (lam, lam_q) = field.roots(t, d).map_err(|_| {
        Error::unsupported(
            F,
            "reduction mod p is not regular elliptic (characteristic polynomial splits mod p)",
        )
    })?;
    let v1 = field.character_value(theta_power, lam)?;
    let v2 = field.character_value(theta_power, lam_q)?;
    Ok(v1.add(&v2)?.neg())
}

/// Volumes of the standard parahoric cells under the Haar normalization
/// `vol(maximal compact) = 1`: the Iwahori subgroup, the nontrivial cell
/// of the spherical Weyl element, and the cell of the affine reflection
/// which normalizes the Iwahori subgroup.
pub fn iwahori_volumes(q: u64) -> (BigRational, BigRational, BigRational) {
    let den = rat_int(1 + q as i64);
    (
        BigRational::one() / &den,
        rat_int(q as i64) / &den,
        BigRational::one() / &den,
    )
}

// ---------------------------------------------------------------------
// Helpers.

fn check_q(f: &'static str, q: u64) -> Result<()> {
    if q < 2 {
        return Err(Error::domain(f, "q must be at least 2"));
    }
    Ok(())
}

fn check_regular_theta(f: &'static str, q: u64, theta_power: u64) -> Result<()> {
    let n = q * q - 1;
    if (theta_power % n) * (q % n) % n == theta_power % n {
        return Err(Error::domain(
            f,
            format!("character power {theta_power} is Galois-fixed mod {n}: not regular"),
        ));
    }
    Ok(())
}

fn require_character<'a>(
    f: &'static str,
    q: u64,
    conductor: u32,
    mu: &'a Option<crate::padic_local::PadicCharacter>,
) -> Result<&'a crate::padic_local::PadicCharacter> {
    let chi = mu.as_ref().ok_or_else(|| {
        Error::unsupported(f, "this value needs explicit character data (mu)")
    })?;
    if chi.p != q {
        return Err(Error::domain(
            f,
            format!("character lives at p = {}, not q = {q}", chi.p),
        ));
    }
    if chi.conductor != conductor {
        return Err(Error::domain(
            f,
            format!(
                "character conductor {} does not match the declared conductor {conductor}",
                chi.conductor
            ),
        ));
    }
    Ok(chi)
}

fn cyc_to_value(c: CyclotomicElement) -> PadicValue {
    match c.as_rational() {
        Some(r) => PadicValue::Rat(r),
        None => PadicValue::Cyc(c),
    }
}

fn scale_value(v: PadicValue, r: &BigRational) -> PadicValue {
    match v {
        PadicValue::Rat(x) => PadicValue::Rat(x * r),
        PadicValue::Cyc(c) => PadicValue::Cyc(c.scale(r)),
    }
}

/// Reduce a p-adic unit (or integer) rational mod p to `0..p`.
fn unit_residue_mod(f: &'static str, p: u64, x: &BigRational) -> Result<u64> {
    let pb = BigInt::from(p);
    let den = x.denom();
    if (den % &pb).is_zero() {
        return Err(Error::domain(f, "value is not p-integral"));
    }
    let num_red = big_mod_u64(x.numer(), p);
    let den_red = big_mod_u64(den, p);
    let inv = mod_inverse(den_red, p)
        .ok_or_else(|| Error::domain(f, "denominator not invertible mod p"))?;
    Ok(num_red * inv % p)
}

/// Euclidean remainder of a big integer by a small modulus.
fn big_mod_u64(x: &BigInt, m: u64) -> u64 {
    use num_traits::ToPrimitive;
    let mb = BigInt::from(m);
    let r = ((x % &mb) + &mb) % &mb;
    r.to_u64().unwrap_or(0)
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m as i128, (a % m) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(m as i128) as u64)
}

fn rational_valuation_or_zero(p: u64, x: &BigRational) -> i64 {
    if x.is_zero() {
        0
    } else {
        rational_valuation(p, x)
    }
}

/// Whether a p-adic unit rational is a square in `Q_p`.
fn unit_is_square(p: u64, u: &BigRational) -> Result<bool> {
    const F: &str = "elliptic_padic";
    if p == 2 {
        // A 2-adic unit is a square iff it is 1 mod 8.
        let r = unit_residue_mod_pk(F, 2, 8, u)?;
        Ok(r == 1)
    } else {
        let r = unit_residue_mod(F, p, u)?;
        Ok(legendre_symbol(r, p) == 1)
    }
}

fn unit_residue_mod_pk(f: &'static str, _p: u64, modulus: u64, x: &BigRational) -> Result<u64> {
    let num_red = big_mod_u64(x.numer(), modulus);
    let den_red = big_mod_u64(x.denom(), modulus);
    let inv = mod_inverse(den_red, modulus)
        .ok_or_else(|| Error::domain(f, "denominator not invertible"))?;
    Ok(num_red * inv % modulus)
}

fn legendre_symbol(a: u64, p: u64) -> i64 {
    let e = (p - 1) / 2;
    let mut acc = 1u64;
    let mut base = a % p;
    let mut k = e;
    while k > 0 {
        if k & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        k >>= 1;
    }
    if acc == 1 {
        1
    } else if acc == p - 1 {
        -1
    } else {
        0
    }
}
