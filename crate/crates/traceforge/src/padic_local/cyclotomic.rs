//! Exact arithmetic in cyclotomic fields `Q(zeta_M)`.
//!
//! Elements are represented on the power basis `1, zeta, ...,
//! zeta^{phi(M)-1}` after reduction modulo the `M`-th cyclotomic
//! polynomial, which is computed exactly by dividing `X^M - 1` by the
//! cyclotomic polynomials of the proper divisors of `M`.  All
//! coefficients are `BigRational`, so sums of roots of unity (character
//! sums, induced-character values) are exact.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use once_cell::sync::Lazy;

use crate::error::{Error, Result};

/// Euler's totient of a small modulus.
pub fn euler_phi(m: u32) -> u32 {
    let mut n = m;
    let mut phi = m;
    let mut p = 2u32;
    while p * p <= n {
        if n % p == 0 {
            phi = phi / p * (p - 1);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        phi = phi / n * (n - 1);
    }
    phi
}

static CYCLO_CACHE: Lazy<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Coefficients (constant term first) of the `m`-th cyclotomic
/// polynomial, computed exactly.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<BigInt>> {
    assert!(m >= 1, "modulus must be positive");
    if let Some(hit) = CYCLO_CACHE.lock().unwrap().get(&m) {
        return Arc::clone(hit);
    }
    // X^m - 1 divided by Phi_d for every proper divisor d of m.
    let mut poly: Vec<BigInt> = vec![BigInt::zero(); (m + 1) as usize];
    poly[0] = BigInt::from(-1);
    poly[m as usize] = BigInt::one();
    for d in 1..m {
        if m % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            poly = exact_div(&poly, &phi_d);
        }
    }
    let arc = Arc::new(poly);
    CYCLO_CACHE.lock().unwrap().insert(m, Arc::clone(&arc));
    arc
}

/// Exact division of integer polynomials (the divisor must be monic and
/// must divide exactly; both are guaranteed for cyclotomic factors).
fn exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    assert!(dn >= dd);
    let mut rem: Vec<BigInt> = num.to_vec();
    let mut quot: Vec<BigInt> = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let lead = rem[k + dd].clone();
        if !lead.is_zero() {
            quot[k] = lead.clone();
            for j in 0..=dd {
                let sub = &lead * &den[j];
                rem[k + j] -= sub;
            }
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division was not exact");
    quot
}

/// An element of `Q(zeta_m)` on the power basis modulo the `m`-th
/// cyclotomic polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicElement {
    m: u32,
    /// Coefficients on `1, zeta, ..., zeta^{phi(m)-1}`.
    c: Vec<BigRational>,
}

impl CyclotomicElement {
    /// The zero element of `Q(zeta_m)`.
    pub fn zero(m: u32) -> Self {
        let deg = euler_phi(m) as usize;
        CyclotomicElement {
            m,
            c: vec![BigRational::zero(); deg],
        }
    }

    /// The rational constant `r` in `Q(zeta_m)`.
    pub fn from_rational(m: u32, r: BigRational) -> Self {
        let mut out = Self::zero(m);
        if out.c.is_empty() {
            // m = 1: Q(zeta_1) = Q, basis is empty only when phi(1) = 1,
            // so this branch is unreachable; keep the invariant anyway.
            out.c.push(r);
        } else {
            out.c[0] = r;
        }
        out
    }

    /// The root of unity `zeta_m^e` (any signed exponent).
    pub fn root_of_unity(m: u32, e: i64) -> Self {
        let em = e.rem_euclid(m as i64) as usize;
        let mut dense = vec![BigRational::zero(); m as usize];
        dense[em] = BigRational::one();
        Self::reduce_dense(m, dense)
    }

    /// Build `sum_e counts[e] * zeta_m^e` from an exponent histogram of
    /// length `m` (exact accumulation of a character sum).
    pub fn from_exponent_counts(m: u32, counts: &[u64]) -> Self {
        assert_eq!(counts.len(), m as usize, "histogram length must equal m");
        let dense: Vec<BigRational> = counts
            .iter()
            .map(|&k| BigRational::from_integer(BigInt::from(k)))
            .collect();
        Self::reduce_dense(m, dense)
    }

    fn reduce_dense(m: u32, mut dense: Vec<BigRational>) -> Self {
        let phi = cyclotomic_polynomial(m);
        let deg = phi.len() - 1;
        while dense.len() > deg {
            let top = dense.len() - 1;
            let lead = dense.pop().unwrap();
            if !lead.is_zero() {
                for j in 0..deg {
                    let sub = &lead * BigRational::from_integer(phi[j].clone());
                    dense[top - deg + j] -= sub;
                }
            }
        }
        dense.resize(deg, BigRational::zero());
        CyclotomicElement { m, c: dense }
    }

    /// The cyclotomic modulus `m`.
    pub fn modulus(&self) -> u32 {
        self.m
    }

    /// True when the element is exactly zero.
    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// Rational content, when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.c.iter().skip(1).all(|x| x.is_zero()) {
            Some(self.c.first().cloned().unwrap_or_else(BigRational::zero))
        } else {
            None
        }
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        let (a, b) = Self::common(self, other)?;
        let c = a.c.iter().zip(b.c.iter()).map(|(x, y)| x + y).collect();
        Ok(CyclotomicElement { m: a.m, c })
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        CyclotomicElement {
            m: self.m,
            c: self.c.iter().map(|x| -x.clone()).collect(),
        }
    }

    /// Product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let (a, b) = Self::common(self, other)?;
        let deg = a.c.len();
        let mut dense = vec![BigRational::zero(); 2 * deg.max(1)];
        for (i, x) in a.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                dense[i + j] += x * y;
            }
        }
        Ok(Self::reduce_dense(a.m, dense))
    }

    /// Scalar multiple.
    pub fn scale(&self, r: &BigRational) -> Self {
        CyclotomicElement {
            m: self.m,
            c: self.c.iter().map(|x| x * r).collect(),
        }
    }

    /// Complex conjugate (`zeta -> zeta^{-1}`).
    pub fn conj(&self) -> Self {
        let mut dense = vec![BigRational::zero(); self.m as usize];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let e = ((self.m as usize) - i) % (self.m as usize);
            dense[e] += x;
        }
        Self::reduce_dense(self.m, dense)
    }

    /// Re-express in `Q(zeta_m2)` where `m` divides `m2`.
    pub fn promote(&self, m2: u32) -> Result<Self> {
        if m2 % self.m != 0 {
            return Err(Error::domain(
                "CyclotomicElement::promote",
                format!("target modulus {} is not a multiple of {}", m2, self.m),
            ));
        }
        if m2 == self.m {
            return Ok(self.clone());
        }
        let step = (m2 / self.m) as usize;
        let mut dense = vec![BigRational::zero(); m2 as usize];
        for (i, x) in self.c.iter().enumerate() {
            if !x.is_zero() {
                dense[i * step] += x;
            }
        }
        Ok(Self::reduce_dense(m2, dense))
    }

    /// Equality as complex numbers, comparing in the compositum.
    pub fn equivalent(&self, other: &Self) -> bool {
        match Self::common(self, other) {
            Ok((a, b)) => a.c == b.c,
            Err(_) => false,
        }
    }

    fn common(a: &Self, b: &Self) -> Result<(Self, Self)> {
        if a.m == b.m {
            return Ok((a.clone(), b.clone()));
        }
        let l = lcm(a.m, b.m);
        Ok((a.promote(l)?, b.promote(l)?))
    }

    /// Floating-point image under `zeta_m -> exp(2 pi i / m)`.
    pub fn approx(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let ang = 2.0 * std::f64::consts::PI * (i as f64) / (self.m as f64);
            acc += Complex64::new(x.to_f64().unwrap_or(f64::NAN), 0.0)
                * Complex64::new(ang.cos(), ang.sin());
        }
        acc
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{x}")?;
            } else if x.is_one() {
                write!(f, "z{}^{}", self.m, i)?;
            } else {
                write!(f, "{}*z{}^{}", x, self.m, i)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
