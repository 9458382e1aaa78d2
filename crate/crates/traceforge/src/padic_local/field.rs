//! A canonical model of the quadratic extension `F_{q^2} / F_q` for
//! prime `q`.
//!
//! The model is `F_q[t] / (t^2 - a t - b)` with `(a, b)` the
//! lexicographically smallest pair making the polynomial irreducible,
//! and the canonical multiplicative generator is the lexicographically
//! smallest element of full order `q^2 - 1`.  Depth-zero cuspidal data
//! (characters of `F_{q^2}^x`) are expressed through this model, so all
//! values are reproducible constants of the library.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::padic_local::character::is_prime;
use crate::padic_local::cyclotomic::CyclotomicElement;

/// An element `x + y t` of the quadratic extension, with `0 <= x, y < q`.
pub type ExtElement = (u64, u64);

/// The canonical quadratic extension of the prime field `F_q`.
#[derive(Debug, Clone)]
pub struct QuadExtension {
    /// The (prime) residue field size.
    pub q: u64,
    /// Coefficient `a` in `t^2 = a t + b`.
    pub a: u64,
    /// Coefficient `b` in `t^2 = a t + b`.
    pub b: u64,
    group_order: u64,
    generator: ExtElement,
    dlog: HashMap<ExtElement, u64>,
}

impl QuadExtension {
    /// Build the canonical model for a prime `q` (guarded to small `q`).
    pub fn new(q: u64) -> Result<Self> {
        const F: &str = "QuadExtension::new";
        if !is_prime(q) {
            return Err(Error::domain(F, format!("{q} is not prime")));
        }
        if q > 1000 {
            return Err(Error::unsupported(F, "residue field larger than 1000"));
        }
        let (a, b) = find_irreducible(q).ok_or_else(|| {
            Error::domain(F, format!("no irreducible quadratic over F_{q} found"))
        })?;
        let group_order = q * q - 1;
        let mut model = QuadExtension {
            q,
            a,
            b,
            group_order,
            generator: (0, 0),
            dlog: HashMap::new(),
        };
        let generator = model.find_generator()?;
        model.generator = generator;
        let mut dlog = HashMap::with_capacity(group_order as usize);
        let mut x = (1u64, 0u64);
        for k in 0..group_order {
            dlog.insert(x, k);
            x = model.mul(x, generator);
        }
        model.dlog = dlog;
        Ok(model)
    }

    /// Order of the multiplicative group, `q^2 - 1`.
    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    /// The canonical generator of `F_{q^2}^x`.
    pub fn generator(&self) -> ExtElement {
        self.generator
    }

    /// Product in the extension field.
    pub fn mul(&self, u: ExtElement, v: ExtElement) -> ExtElement {
        let q = self.q;
        let (x1, y1) = u;
        let (x2, y2) = v;
        let cross = y1 * y2 % q;
        let x = (x1 * x2 + cross * self.b) % q;
        let y = (x1 * y2 + x2 * y1 + cross * self.a) % q;
        (x, y)
    }

    /// Power in the extension field.
    pub fn pow(&self, mut base: ExtElement, mut e: u64) -> ExtElement {
        let mut acc = (1u64, 0u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Field Frobenius `x -> x^q` (the nontrivial Galois automorphism).
    pub fn frobenius(&self, u: ExtElement) -> ExtElement {
        self.pow(u, self.q)
    }

    /// Discrete logarithm with respect to the canonical generator.
    pub fn dlog(&self, u: ExtElement) -> Result<u64> {
        self.dlog.get(&u).copied().ok_or_else(|| {
            Error::domain("QuadExtension::dlog", "zero has no discrete logarithm")
        })
    }

    /// The matrix of multiplication by `x + y t` on the basis `(1, t)`,
    /// as `[a, b; c, d] = [x, b y; y, x + a y]` — the canonical
    /// embedding of the nonsplit torus into 2x2 matrices over `F_q`.
    pub fn embed(&self, u: ExtElement) -> [u64; 4] {
        let (x, y) = u;
        [x, self.b * y % self.q, y, (x + self.a * y) % self.q]
    }

    /// Both roots `(lambda, lambda^q)` of `X^2 - t X + d` in the
    /// extension, for a polynomial irreducible over `F_q`.
    pub fn roots(&self, t: u64, d: u64) -> Result<(ExtElement, ExtElement)> {
        let q = self.q;
        let t = t % q;
        let d = d % q;
        for x in 0..q {
            for y in 1..q {
                let lam = (x, y);
                let sq = self.mul(lam, lam);
                // lambda^2 - t lambda + d = 0.
                let lhs = (
                    (sq.0 + d + q * q - t * x % (q * q)) % q,
                    (sq.1 + q * q - t * y % (q * q)) % q,
                );
                let lhs = ((lhs.0 + q * q) % q, (lhs.1 + q * q) % q);
                if lhs == (0, 0) {
                    return Ok((lam, self.frobenius(lam)));
                }
            }
        }
        Err(Error::domain(
            "QuadExtension::roots",
            format!("X^2 - {t} X + {d} has no root outside F_{q}: it is reducible over F_{q}"),
        ))
    }

    /// Exponent of the canonical order-`q^2-1` generator character at
    /// `u`, for character power `k`: the value is
    /// `zeta_{q^2-1}^{k * dlog(u)}`.
    pub fn character_exponent(&self, k: u64, u: ExtElement) -> Result<u64> {
        Ok(k.wrapping_mul(self.dlog(u)?) % self.group_order)
    }

    /// Exact character value `theta(u) = zeta_{q^2-1}^{k dlog(u)}`.
    pub fn character_value(&self, k: u64, u: ExtElement) -> Result<CyclotomicElement> {
        let e = self.character_exponent(k, u)?;
        Ok(CyclotomicElement::root_of_unity(
            self.group_order as u32,
            e as i64,
        ))
    }

    /// Whether the power-`k` character is regular: not fixed by the
    /// Galois action, i.e. `k q != k  mod  q^2 - 1`.
    pub fn is_regular_character(&self, k: u64) -> bool {
        (k % self.group_order).wrapping_mul(self.q % self.group_order) % self.group_order
            != k % self.group_order
    }

    fn find_generator(&self) -> Result<ExtElement> {
        let n = self.group_order;
        let factors = prime_factors(n);
        for x in 0..self.q {
            for y in 0..self.q {
                if x == 0 && y == 0 {
                    continue;
                }
                let el = (x, y);
                if factors
                    .iter()
                    .all(|&f| self.pow(el, n / f) != (1, 0))
                {
                    return Ok(el);
                }
            }
        }
        Err(Error::domain(
            "QuadExtension::new",
            "no multiplicative generator found",
        ))
    }
}

fn find_irreducible(q: u64) -> Option<(u64, u64)> {
    for a in 0..q {
        for b in 0..q {
            // t^2 - a t - b irreducible over F_q: no root x in F_q.
            let mut has_root = false;
            for x in 0..q {
                if (x * x + 2 * q * q - a * x % (q * q) - b) % q == 0 {
                    has_root = true;
                    break;
                }
            }
            if !has_root {
                return Some((a, b));
            }
        }
    }
    None
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
