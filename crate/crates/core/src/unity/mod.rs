//! Exact arithmetic on roots of unity.
//!
//! Every pseudo-operator (`⁄`, `∖`, `⊥`, `⊤`, `⊣`) and pseudo-complex
//! number (`𝕴`, `𝕵`) is a [`Rotor`]: a reduced fraction of a full turn.
//! Group structure is decided on the fractions, so it is exact; floating
//! point only enters when a rotor is turned into a [`Complex`] value.

mod group;
mod published;
mod rotor;

use alloc::vec::Vec;
use core::f64::consts::PI;

use thiserror::Error;

use crate::Complex;

pub use group::{multiplication_table, AxiomReport, GroupTable};
pub use published::{compare_published, Discrepancy, NamedGroup};
pub use rotor::{parse_label, Notation, Rotor};

/// Moduli below this are treated as a zero resultant.
pub const ZERO_RESULTANT: f64 = 1e-14;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum UnityError {
    #[error("order must be a positive integer")]
    InvalidOrder,
    #[error("element list is empty")]
    EmptyElements,
    #[error("element {0} appears more than once")]
    DuplicateElements(Rotor),
    #[error("resultant has zero length, so its angle is undefined")]
    ZeroResultant,
}

/// The `n` roots of `z^n = 1`, `exp(2πik/n)` for `k = 0..n`.
pub fn nth_roots(n: u64) -> Result<Vec<Rotor>, UnityError> {
    if n == 0 {
        return Err(UnityError::InvalidOrder);
    }
    (0..n).map(|k| Rotor::new(k as i64, n)).collect()
}

/// The `n` roots of `z^n = -1`, `exp(iπ(2k+1)/n)` for `k = 0..n`.
pub fn negative_nth_roots(n: u64) -> Result<Vec<Rotor>, UnityError> {
    if n == 0 {
        return Err(UnityError::InvalidOrder);
    }
    (0..n)
        .map(|k| Rotor::new(2 * k as i64 + 1, 2 * n))
        .collect()
}

/// Floating sum of one root family. `n = 0` is the empty sum.
pub fn roots_sum(n: u64, negative: bool) -> Complex {
    let family = if negative {
        negative_nth_roots(n)
    } else {
        nth_roots(n)
    };
    family
        .map(|roots| roots.into_iter().map(Rotor::value).sum())
        .unwrap_or_default()
}

/// `g^0, g^1, ...` up to (not including) the first repeat.
pub fn cyclic_closure(generator: Rotor) -> Vec<Rotor> {
    let mut cycle = Vec::with_capacity(generator.order() as usize);
    let mut current = Rotor::IDENTITY;
    loop {
        cycle.push(current);
        current = current * generator;
        if current == Rotor::IDENTITY {
            return cycle;
        }
    }
}

/// A step of `magnitude` units in the direction of `rotor`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RotatedTerm {
    rotor: Rotor,
    magnitude: f64,
}

impl RotatedTerm {
    /// A negative magnitude is stored as its absolute value with the rotor
    /// turned by half a revolution.
    pub fn new(rotor: Rotor, magnitude: f64) -> Self {
        if magnitude.is_sign_negative() && magnitude != 0.0 {
            RotatedTerm {
                rotor: rotor * Rotor::DASHV,
                magnitude: -magnitude,
            }
        } else {
            RotatedTerm {
                rotor,
                magnitude: magnitude.abs(),
            }
        }
    }

    pub fn rotor(&self) -> Rotor {
        self.rotor
    }

    pub fn magnitude(&self) -> f64 {
        self.magnitude
    }

    pub fn value(&self) -> Complex {
        self.rotor.value() * self.magnitude
    }
}

/// Vector sum of a walk of rotated steps. The empty walk ends at the origin.
pub fn chain_resultant(terms: &[RotatedTerm]) -> Complex {
    terms.iter().map(RotatedTerm::value).sum()
}

/// Length and direction of `a·e^{iη₁} + b·e^{iη₂}`.
///
/// The length uses the law of cosines; the direction is the
/// quadrant-aware argument of the sum, reported in `(-π, π]`.
pub fn pair_polar(a: f64, eta1: f64, b: f64, eta2: f64) -> Result<(f64, f64), UnityError> {
    let squared = a * a + b * b + 2.0 * a * b * libm::cos(eta1 - eta2);
    let modulus = libm::sqrt(squared.max(0.0));
    if modulus < ZERO_RESULTANT {
        return Err(UnityError::ZeroResultant);
    }
    let x = a * libm::cos(eta1) + b * libm::cos(eta2);
    let y = a * libm::sin(eta1) + b * libm::sin(eta2);
    Ok((modulus, principal_angle(libm::atan2(y, x))))
}

/// Maps `-π` (which `atan2` returns for `-0.0` ordinates) onto `π`.
pub(crate) fn principal_angle(angle: f64) -> f64 {
    if angle <= -PI {
        angle + 2.0 * PI
    } else {
        angle
    }
}
