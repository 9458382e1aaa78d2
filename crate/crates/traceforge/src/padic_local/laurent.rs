//! Laurent polynomials in `X = q^{-s}` with exact rational coefficients.
//!
//! Trace values that depend on the complex parameter `s` only through
//! integer powers of `q^{-s}` are represented exactly as elements of
//! `Q[X, X^{-1}]`.  The map `s -> -s` corresponds to `X -> X^{-1}`, so
//! functional-equation symmetry is the palindrome property
//! `c_k = c_{-k}`.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A Laurent polynomial `sum_k c_k X^k` with `BigRational` coefficients.
///
/// Only nonzero coefficients are stored; the zero polynomial has an
/// empty coefficient map.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i64, BigRational>,
}

impl LaurentPolynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        LaurentPolynomial {
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// A constant polynomial.
    pub fn constant(c: BigRational) -> Self {
        Self::monomial(0, c)
    }

    /// The monomial `c * X^k`.
    pub fn monomial(k: i64, c: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        LaurentPolynomial { coeffs }
    }

    /// Build from `(exponent, coefficient)` pairs (repeated exponents
    /// accumulate).
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigRational)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    /// Add `c * X^k` in place.
    pub fn add_term(&mut self, k: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    /// Coefficient of `X^k` (zero when absent).
    pub fn coeff(&self, k: i64) -> BigRational {
        self.coeffs.get(&k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Iterate over the nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    /// True when this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest and highest exponents with nonzero coefficient, if any.
    pub fn support(&self) -> Option<(i64, i64)> {
        let lo = self.coeffs.keys().next()?;
        let hi = self.coeffs.keys().next_back()?;
        Some((*lo, *hi))
    }

    /// Pointwise sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k, c.clone());
        }
        out
    }

    /// Pointwise difference.
    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k, -c.clone());
        }
        out
    }

    /// Product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (k1, c1) in self.terms() {
            for (k2, c2) in other.terms() {
                out.add_term(k1 + k2, c1 * c2);
            }
        }
        out
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// The involution `X -> X^{-1}`.
    pub fn invert_variable(&self) -> Self {
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(k, v)| (-*k, v.clone())).collect(),
        }
    }

    /// True when the polynomial is invariant under `X -> X^{-1}`.
    pub fn is_palindromic(&self) -> bool {
        *self == self.invert_variable()
    }

    /// Exact evaluation at a nonzero rational point.
    pub fn eval_rational(&self, x: &BigRational) -> Result<BigRational> {
        if x.is_zero() && self.support().map(|(lo, _)| lo < 0).unwrap_or(false) {
            return Err(Error::domain(
                "LaurentPolynomial::eval_rational",
                "evaluation at zero requires nonnegative support",
            ));
        }
        let mut acc = BigRational::zero();
        for (k, c) in self.terms() {
            acc += c * rational_power(x, k)?;
        }
        Ok(acc)
    }

    /// Floating-point evaluation at a complex point.
    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in self.terms() {
            let cf = Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
            acc += cf * x.powi(k as i32);
        }
        acc
    }
}

fn rational_power(x: &BigRational, k: i64) -> Result<BigRational> {
    if k == 0 {
        return Ok(BigRational::one());
    }
    if x.is_zero() {
        if k > 0 {
            return Ok(BigRational::zero());
        }
        return Err(Error::domain(
            "LaurentPolynomial::eval_rational",
            "negative power of zero",
        ));
    }
    if k.abs() > i32::MAX as i64 {
        return Err(Error::domain(
            "LaurentPolynomial::eval_rational",
            "exponent out of range",
        ));
    }
    Ok(x.pow(k as i32))
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms() {
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{c}")?,
                1 => {
                    if c.is_one() {
                        write!(f, "X")?;
                    } else {
                        write!(f, "{c}*X")?;
                    }
                }
                _ => {
                    if c.is_one() {
                        write!(f, "X^{k}")?;
                    } else {
                        write!(f, "{c}*X^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic_local::{rat_int, ratio};

    #[test]
    fn arithmetic_and_cancellation() {
        let p = LaurentPolynomial::from_terms([(-1, rat_int(1)), (1, rat_int(1))]);
        let q = LaurentPolynomial::from_terms([(-1, rat_int(-1)), (0, rat_int(2))]);
        let s = p.add(&q);
        assert_eq!(s.coeff(-1), rat_int(0));
        assert_eq!(s.coeff(0), rat_int(2));
        assert_eq!(s.coeff(1), rat_int(1));
        assert_eq!(s.support(), Some((0, 1)));
        let d = s.sub(&s);
        assert!(d.is_zero());
    }

    #[test]
    fn product_matches_hand_expansion() {
        // (X^{-1} + X)^2 = X^{-2} + 2 + X^2.
        let p = LaurentPolynomial::from_terms([(-1, rat_int(1)), (1, rat_int(1))]);
        let sq = p.mul(&p);
        assert_eq!(sq.coeff(-2), rat_int(1));
        assert_eq!(sq.coeff(0), rat_int(2));
        assert_eq!(sq.coeff(2), rat_int(1));
        assert_eq!(sq.coeff(1), rat_int(0));
    }

    #[test]
    fn palindrome_detection() {
        let p = LaurentPolynomial::from_terms([(-1, rat_int(1)), (1, rat_int(1))]);
        assert!(p.is_palindromic());
        let q = LaurentPolynomial::from_terms([(0, rat_int(1)), (1, rat_int(1))]);
        assert!(!q.is_palindromic());
        assert!(LaurentPolynomial::zero().is_palindromic());
    }

    #[test]
    fn rational_evaluation_is_exact() {
        // f(X) = 1/2 + (3/2) X^2 at X = 1/3: 1/2 + 3/2 * 1/9 = 2/3.
        let f = LaurentPolynomial::from_terms([(0, ratio(1, 2)), (2, ratio(3, 2))]);
        assert_eq!(f.eval_rational(&ratio(1, 3)).unwrap(), ratio(2, 3));
        // Negative exponents at zero must error.
        let g = LaurentPolynomial::monomial(-1, rat_int(1));
        assert!(g.eval_rational(&rat_int(0)).is_err());
    }

    #[test]
    fn complex_evaluation_matches_rational() {
        let f = LaurentPolynomial::from_terms([(-1, rat_int(1)), (1, rat_int(1))]);
        let exact = f.eval_rational(&ratio(1, 4)).unwrap();
        let approx = f.eval_complex(Complex64::new(0.25, 0.0));
        assert!((approx.re - exact.to_f64().unwrap()).abs() < 1e-14);
        assert!(approx.im.abs() < 1e-15);
    }

    #[test]
    fn display_is_readable() {
        let f = LaurentPolynomial::from_terms([(-1, rat_int(1)), (1, rat_int(1))]);
        assert_eq!(format!("{f}"), "X^-1 + X");
    }
}
