//! Local distributions at a real place: character values, the identity,
//! parabolic, hyperbolic, and elliptic terms, the standard intertwining
//! factor, and the pseudo-coefficient of a discrete-series representation.
//!
//! Every distribution acts on a [`TestFunctionPair`](crate::testfn::TestFunctionPair)
//! built at [`ArchPlace::Real`](crate::testfn::ArchPlace::Real); the K-type
//! order of the pair selects the isotypic component being traced.

mod ds;
mod intertwiner;
mod ops;

pub use ds::PseudoCoefficientDs;
pub use intertwiner::{intertwiner_real, intertwiner_real_ratio_log_derivative};
pub use ops::{
    char_value_real, elliptic_real, elliptic_real_direct, hyperbolic_real,
    hyperbolic_real_direct, hyperbolic_real_weighted, identity_real, parabolic_real,
    HyperbolicConvention, ParabolicValue,
};

use num_complex::Complex64;

/// Parity of a principal-series representation at a real place.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// Parity of the integer `n`.
    pub fn of(n: u32) -> Self {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Irreducible representations of GL(2, R) with unitary central character
/// that enter the trace formula.
#[derive(Clone, Copy, Debug)]
pub enum ReprReal {
    /// Principal series with spectral parameter `s` and a sign character.
    PrincipalSeries { s: Complex64, parity: Parity },
    /// Discrete series of weight `>= 2`.
    DiscreteSeries { weight: u32 },
    /// The trivial (one-dimensional) representation.
    OneDimensional,
}
