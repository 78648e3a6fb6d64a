//! Homogeneous linear recurrences `x_{k+n} = c_0 x_k + … + c_{n-1} x_{k+n-1}`.
//!
//! Iteration is exact (arbitrary-precision integers) whenever every
//! coefficient and seed is an integer; that exact sequence is the reference
//! every closed form is checked against.

use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::Complex;

/// Number of trailing ratios that must agree before a characteristic ratio
/// is reported.
pub const RATIO_WINDOW: usize = 5;
/// Largest allowed change between consecutive ratios inside the window.
pub const RATIO_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum RecurrenceError {
    #[error("a recurrence needs at least one coefficient")]
    EmptyOrder,
    #[error("{coeffs} coefficients but {seeds} seeds")]
    LengthMismatch { coeffs: usize, seeds: usize },
    #[error("coefficients and seeds must be finite")]
    NonFinite,
    #[error("leading coefficient a_n is zero")]
    ZeroLeadingCoefficient,
    #[error("ratio estimation needs at least {needed} iterations, got {got}")]
    TooFewIterations { needed: usize, got: usize },
    #[error("term x_{index} is zero, so the ratio x_{{k+1}}/x_k is undefined")]
    ZeroDivisionInRatio { index: usize },
    #[error("successive ratios still differ by {spread:e} at the end of the run")]
    NonConvergent { spread: f64 },
    #[error("terms overflowed f64 before the ratio settled")]
    Overflow,
}

/// Turns the general form `Σ a_j x_{k+j} = 0` (`a_0..a_n`) into the
/// coefficients `c_j = -a_j / a_n` of the isolated form.
pub fn from_general(a: &[f64]) -> Result<Vec<f64>, RecurrenceError> {
    let (&lead, rest) = a.split_last().ok_or(RecurrenceError::EmptyOrder)?;
    if rest.is_empty() {
        return Err(RecurrenceError::EmptyOrder);
    }
    if lead == 0.0 {
        return Err(RecurrenceError::ZeroLeadingCoefficient);
    }
    if a.iter().any(|v| !v.is_finite()) {
        return Err(RecurrenceError::NonFinite);
    }
    Ok(rest.iter().map(|&aj| -aj / lead).collect())
}

#[derive(Clone, Debug, PartialEq)]
pub struct Recurrence {
    coeffs: Vec<f64>,
    seeds: Vec<f64>,
    integral: bool,
}

fn is_integer(x: f64) -> bool {
    x.is_finite() && libm::trunc(x) == x
}

impl Recurrence {
    /// `coeffs[j]` multiplies `x_{k+j}`; `seeds` are `x_0..x_{n-1}`.
    pub fn new(coeffs: Vec<f64>, seeds: Vec<f64>) -> Result<Self, RecurrenceError> {
        if coeffs.is_empty() {
            return Err(RecurrenceError::EmptyOrder);
        }
        if coeffs.len() != seeds.len() {
            return Err(RecurrenceError::LengthMismatch {
                coeffs: coeffs.len(),
                seeds: seeds.len(),
            });
        }
        if coeffs.iter().chain(&seeds).any(|v| !v.is_finite()) {
            return Err(RecurrenceError::NonFinite);
        }
        let integral = coeffs.iter().chain(&seeds).all(|&v| is_integer(v));
        Ok(Recurrence {
            coeffs,
            seeds,
            integral,
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn seeds(&self) -> &[f64] {
        &self.seeds
    }

    /// True when every coefficient and seed is an integer.
    pub fn is_integral(&self) -> bool {
        self.integral
    }

    /// `1 + max |x_j|` over the seeds.
    pub fn seed_scale(&self) -> f64 {
        1.0 + self.seeds.iter().fold(0.0f64, |m, x| m.max(x.abs()))
    }

    /// The first `count` terms.
    pub fn iterate(&self, count: usize) -> Sequence {
        if self.integral {
            let coeffs: Vec<BigInt> = self.coeffs.iter().map(|&c| to_big(c)).collect();
            let seeds = self.seeds.iter().map(|&x| to_big(x)).collect();
            Sequence::Exact(run(coeffs, seeds, count, |c, x| c * x))
        } else {
            Sequence::Float(run(
                self.coeffs.clone(),
                self.seeds.clone(),
                count,
                |c, x| c * x,
            ))
        }
    }

    pub fn characteristic_polynomial(&self) -> CharPoly {
        CharPoly {
            coeffs: self.coeffs.clone(),
        }
    }

    /// Estimates `lim x_{k+1}/x_k` as `x_iters / x_{iters-1}`.
    ///
    /// The last [`RATIO_WINDOW`] ratios must agree to within
    /// [`RATIO_TOLERANCE`]; oscillating ratios (complex or tied dominant
    /// roots, seeds with no dominant component) are reported as
    /// [`RecurrenceError::NonConvergent`].
    pub fn characteristic_ratio(&self, iters: usize) -> Result<f64, RecurrenceError> {
        let needed = self.order() + 2;
        if iters < needed {
            return Err(RecurrenceError::TooFewIterations { needed, got: iters });
        }
        let terms = self.iterate(iters + 1);
        let first = iters.saturating_sub(RATIO_WINDOW);
        let mut ratios = Vec::with_capacity(RATIO_WINDOW);
        // probe index first so a zero there is reported as such
        for k in (first..iters).rev() {
            let ratio = terms
                .ratio(k)
                .ok_or(RecurrenceError::ZeroDivisionInRatio { index: k })?;
            if !ratio.is_finite() {
                return Err(RecurrenceError::Overflow);
            }
            ratios.push(ratio);
        }
        let spread = ratios
            .windows(2)
            .map(|w| (w[0] - w[1]).abs())
            .fold(0.0f64, f64::max);
        if spread > RATIO_TOLERANCE {
            return Err(RecurrenceError::NonConvergent { spread });
        }
        Ok(ratios[0])
    }
}

fn to_big(x: f64) -> BigInt {
    BigInt::from_f64(x).expect("integral values are finite")
}

fn run<T: Clone + Zero>(
    coeffs: Vec<T>,
    seeds: Vec<T>,
    count: usize,
    mul: impl Fn(&T, &T) -> T,
) -> Vec<T> {
    let n = coeffs.len();
    let mut out: Vec<T> = seeds.into_iter().take(count).collect();
    while out.len() < count {
        let window = &out[out.len() - n..];
        let next = coeffs
            .iter()
            .zip(window)
            .fold(T::zero(), |acc, (c, x)| acc + mul(c, x));
        out.push(next);
    }
    out
}

/// Terms of a recurrence, exact or floating.
#[derive(Clone, Debug, PartialEq)]
pub enum Sequence {
    Exact(Vec<BigInt>),
    Float(Vec<f64>),
}

impl Sequence {
    pub fn len(&self) -> usize {
        match self {
            Sequence::Exact(v) => v.len(),
            Sequence::Float(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Term `k` as the nearest `f64` (infinite if it exceeds the range).
    pub fn value_f64(&self, k: usize) -> f64 {
        match self {
            Sequence::Exact(v) => v[k].to_f64().unwrap_or(if v[k].is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            }),
            Sequence::Float(v) => v[k],
        }
    }

    pub fn to_f64_vec(&self) -> Vec<f64> {
        (0..self.len()).map(|k| self.value_f64(k)).collect()
    }

    /// `x_{k+1} / x_k`, or `None` when `x_k` is zero.
    pub fn ratio(&self, k: usize) -> Option<f64> {
        match self {
            Sequence::Exact(v) => big_ratio(&v[k + 1], &v[k]),
            Sequence::Float(v) => (v[k] != 0.0).then(|| v[k + 1] / v[k]),
        }
    }
}

/// `a / b` rounded to `f64` without converting either operand, so the
/// ratio stays accurate when both terms are far beyond `f64` range.
fn big_ratio(a: &BigInt, b: &BigInt) -> Option<f64> {
    if b.is_zero() {
        return None;
    }
    if a.is_zero() {
        return Some(0.0);
    }
    let negative = (a.sign() == Sign::Minus) != (b.sign() == Sign::Minus);
    let (a, b) = (a.magnitude(), b.magnitude());
    // shift so the integer quotient carries at least 64 significant bits
    let shift = (64 + b.bits() as i64 - a.bits() as i64).max(0);
    let quotient = (a << shift as usize) / b;
    let value = libm::ldexp(quotient.to_f64()?, -(shift as i32));
    Some(if negative { -value } else { value })
}

/// Monic characteristic polynomial `x^n - c_{n-1}x^{n-1} - … - c_1 x - c_0`,
/// stored by its `c` vector.
#[derive(Clone, Debug, PartialEq)]
pub struct CharPoly {
    coeffs: Vec<f64>,
}

impl CharPoly {
    /// `None` for an empty coefficient vector.
    pub fn new(coeffs: Vec<f64>) -> Option<Self> {
        (!coeffs.is_empty()).then_some(CharPoly { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// The `c` vector, `c_0..c_{n-1}`.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// `1 + max |c_j|`; the scale for residual and separation tolerances.
    pub fn scale(&self) -> f64 {
        1.0 + self.coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()))
    }

    /// Ascending coefficients of the monic polynomial, `a_0..a_n` with
    /// `a_j = -c_j` and `a_n = 1`.
    pub fn monic(&self) -> Vec<f64> {
        let mut a: Vec<f64> = self.coeffs.iter().map(|c| -c).collect();
        a.push(1.0);
        a
    }

    pub fn eval(&self, z: Complex) -> Complex {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex::new(1.0, 0.0), |acc, &c| acc * z - c)
    }

    /// Running-error bound for [`CharPoly::eval`] at `z`: roughly what
    /// rounding alone can contribute to `|p(z)|`.
    pub fn eval_error_bound(&self, z: Complex) -> f64 {
        let r = z.norm();
        let magnitude = self
            .monic()
            .iter()
            .rev()
            .fold(0.0, |acc, a| acc * r + a.abs());
        4.0 * (self.degree() as f64 + 1.0) * f64::EPSILON * magnitude
    }
}

impl core::fmt::Display for CharPoly {
    /// Renders `x^2 = x + 1` style text, highest power first.
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let n = self.degree();
        if n == 1 {
            write!(f, "x =")?;
        } else {
            write!(f, "x^{n} =")?;
        }
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0.0 {
                continue;
            }
            match (first, c < 0.0) {
                (true, false) => write!(f, " ")?,
                (true, true) => write!(f, " -")?,
                (false, false) => write!(f, " + ")?,
                (false, true) => write!(f, " - ")?,
            }
            first = false;
            let m = c.abs();
            let power: alloc::string::String = match j {
                0 => {
                    write!(f, "{m}")?;
                    continue;
                }
                1 => "x".into(),
                _ => alloc::format!("x^{j}"),
            };
            if m == 1.0 {
                write!(f, "{power}")?;
            } else {
                write!(f, "{m}{power}")?;
            }
        }
        if first {
            write!(f, " 0")?;
        }
        Ok(())
    }
}
