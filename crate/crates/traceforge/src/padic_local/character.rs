//! Smooth characters of the unit group `(Z/p^N)^x` (cyclic cases).
//!
//! A character is specified by its prime `p`, its exact conductor
//! exponent `N`, its order, and the power of the canonical generator
//! character it equals.  The canonical generator character sends the
//! smallest primitive root `g` of `(Z/p^N)^x` to the primitive root of
//! unity `zeta_order`; values are exact [`CyclotomicElement`]s.
//!
//! Supported unit groups are the cyclic ones: odd `p` at any exponent,
//! and `p = 2` with `N <= 2`.  The group `(Z/2)^x` is trivial, so there
//! is no primitive character of conductor exponent one at `p = 2`;
//! requesting one is an error.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::padic_local::cyclotomic::CyclotomicElement;

/// Trial-division primality for the small moduli used here.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A character of `(Z/p^N)^x` of exact conductor exponent `N >= 1`.
#[derive(Debug, Clone)]
pub struct PadicCharacter {
    /// Residue characteristic.
    pub p: u64,
    /// Exact conductor exponent `N >= 1`.
    pub conductor: u32,
    /// Multiplicative order of the character.
    pub order: u32,
    /// Which power of the canonical generator character this is
    /// (coprime to `order`).
    pub power: u32,
    modulus: u64,
    group_order: u64,
    generator: u64,
    dlog: HashMap<u64, u64>,
}

impl PadicCharacter {
    /// Build a character of `(Z/p^N)^x` with the given exact conductor
    /// exponent, order, and generator power.
    pub fn new(p: u64, conductor: u32, order: u32, power: u32) -> Result<Self> {
        const F: &str = "PadicCharacter::new";
        if !is_prime(p) {
            return Err(Error::domain(F, format!("{p} is not prime")));
        }
        if conductor == 0 {
            return Err(Error::domain(
                F,
                "conductor exponent must be >= 1 (use the spherical test for the trivial case)",
            ));
        }
        if p == 2 && conductor == 1 {
            return Err(Error::domain(
                F,
                "the unit group mod 2 is trivial: no primitive character of conductor exponent 1",
            ));
        }
        if p == 2 && conductor > 2 {
            return Err(Error::unsupported(
                F,
                "(Z/2^N)^x is not cyclic for N >= 3; only N <= 2 is supported at p = 2",
            ));
        }
        let modulus = p
            .checked_pow(conductor)
            .ok_or_else(|| Error::domain(F, "modulus overflow"))?;
        if modulus > 10_000_000 {
            return Err(Error::unsupported(F, "modulus exceeds 10^7"));
        }
        let group_order = modulus / p * (p - 1);
        if order == 0 || u64::from(order) > group_order || group_order % u64::from(order) != 0 {
            return Err(Error::domain(
                F,
                format!("order {order} does not divide the unit group order {group_order}"),
            ));
        }
        if gcd(u64::from(power.max(1)), u64::from(order)) != 1 || (power == 0 && order != 1) {
            return Err(Error::domain(
                F,
                "power must be coprime to order (and nonzero unless the order is 1)",
            ));
        }
        let generator = smallest_primitive_root(modulus, group_order, p)?;
        let mut dlog = HashMap::with_capacity(group_order as usize);
        let mut x = 1u64;
        for k in 0..group_order {
            dlog.insert(x, k);
            x = x * generator % modulus;
        }
        let chi = PadicCharacter {
            p,
            conductor,
            order,
            power,
            modulus,
            group_order,
            generator,
            dlog,
        };
        // Exact-conductor check: the character must not factor through
        // the units one level down.
        if !chi.has_exact_conductor() {
            return Err(Error::domain(
                F,
                format!(
                    "order-{order} power-{power} character mod {modulus} has smaller conductor"
                ),
            ));
        }
        Ok(chi)
    }

    /// The quadratic residue character mod an odd prime.
    pub fn legendre(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::domain(
                "PadicCharacter::legendre",
                "the quadratic character at p = 2 has conductor exponent 2; use new(2, 2, 2, 1)",
            ));
        }
        Self::new(p, 1, 2, 1)
    }

    /// The modulus `p^N`.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Order of the unit group `(Z/p^N)^x`.
    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    /// The canonical generator (smallest primitive root) of the unit
    /// group.
    pub fn generator(&self) -> u64 {
        self.generator
    }

    /// True when the character is real-valued (order `<= 2`).
    pub fn is_real(&self) -> bool {
        self.order <= 2
    }

    fn has_exact_conductor(&self) -> bool {
        if self.conductor == 1 {
            return self.order > 1;
        }
        // Nontrivial on 1 + p^{N-1} Z / p^N Z.
        let u0 = 1 + self.modulus / self.p;
        match self.exponent(u0 as i64) {
            Ok(e) => e != 0,
            Err(_) => false,
        }
    }

    /// Discrete logarithm of a unit with respect to the canonical
    /// generator.
    pub fn dlog(&self, u: i64) -> Result<u64> {
        let um = u.rem_euclid(self.modulus as i64) as u64;
        self.dlog.get(&um).copied().ok_or_else(|| {
            Error::domain(
                "PadicCharacter::dlog",
                format!("{u} is not a unit mod {}", self.modulus),
            )
        })
    }

    /// The value exponent `k` such that `chi(u) = zeta_order^k`.
    pub fn exponent(&self, u: i64) -> Result<u64> {
        let k = self.dlog(u)?;
        Ok((u64::from(self.power) * k) % u64::from(self.order))
    }

    /// Exact character value `chi(u)` in `Q(zeta_order)`.
    pub fn eval(&self, u: i64) -> Result<CyclotomicElement> {
        let e = self.exponent(u)?;
        Ok(CyclotomicElement::root_of_unity(
            self.order.max(1),
            e as i64,
        ))
    }

    /// Character value as a sign, for real characters.
    pub fn eval_sign(&self, u: i64) -> Result<i64> {
        if !self.is_real() {
            return Err(Error::domain(
                "PadicCharacter::eval_sign",
                "character is not real-valued",
            ));
        }
        Ok(if self.exponent(u)? == 0 { 1 } else { -1 })
    }
}

impl fmt::Display for PadicCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "character mod {}^{} of order {} (generator {} -> zeta^{})",
            self.p, self.conductor, self.order, self.generator, self.power
        )
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
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

fn smallest_primitive_root(modulus: u64, group_order: u64, p: u64) -> Result<u64> {
    if group_order == 1 {
        return Ok(1);
    }
    let factors = prime_factors(group_order);
    for g in 2..modulus {
        if g % p == 0 {
            continue;
        }
        if factors
            .iter()
            .all(|&f| pow_mod(g, group_order / f, modulus) != 1)
        {
            return Ok(g);
        }
    }
    Err(Error::domain(
        "PadicCharacter::new",
        format!("no primitive root mod {modulus} (non-cyclic unit group)"),
    ))
}
