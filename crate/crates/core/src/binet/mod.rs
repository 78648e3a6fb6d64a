//! Closed forms for recurrence terms.
//!
//! Three routes reach `x_k` without iterating:
//!
//! * [`solve_weights`] fits `x_k = Σ w_j r_j^k + w_{n+1}` to the seeds for
//!   any order;
//! * [`binet2`] and [`binet3`] evaluate the explicit order-2 and order-3
//!   formulas written in terms of the resolvents σ;
//! * [`m_form`] expands `x_k` over operator-signed sums of root powers.
//!
//! Roots, σ values, weights and powers are carried in double-double
//! arithmetic, so rounding to the nearest integer stays exact for integral
//! recurrences up to `|x_k| < 2^52`.

mod explicit;
mod mform;
mod verify;

use alloc::vec::Vec;

use thiserror::Error;

use crate::dd::{Dd, DdComplex};
use crate::linalg::solve;
use crate::recurrence::{Recurrence, RecurrenceError};
use crate::roots::{characteristic_roots, Method, RootError, RootSet};
use crate::Complex;

pub use explicit::{binet2, binet3, component, ComponentKind};
pub use mform::{m_form, MForm};
pub use verify::{verify, EvalPath, PathReport, VerifyReport};

/// Roots closer than this (relative to `1 + max |c_j|`) count as repeated.
pub const DEGENERACY_TOLERANCE: f64 = 1e-7;
/// A root this close to 1 makes the weight system singular.
pub const UNIT_ROOT_TOLERANCE: f64 = 1e-9;
/// Integer snapping is only attempted below this magnitude.
pub const SNAP_LIMIT: f64 = 4_503_599_627_370_496.0; // 2^52

#[derive(Clone, Debug, PartialEq, Error)]
pub enum BinetError {
    #[error(transparent)]
    Recurrence(#[from] RecurrenceError),
    #[error(transparent)]
    Roots(#[from] RootError),
    #[error("characteristic roots are repeated (separation {separation:e})")]
    DegenerateRoots { separation: f64 },
    #[error("weight system is singular: a characteristic root equals 1")]
    SingularSystem,
    #[error("this evaluation needs order {expected}, the recurrence has order {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("order {0} is not supported by this form")]
    UnsupportedOrder(usize),
}

/// `x_k = Σ w_j r_j^k + w_{n+1}` with weights fitted to `x_0..x_n`.
#[derive(Clone, Debug)]
pub struct BinetForm {
    rec: Recurrence,
    roots: RootSet,
    dd_roots: Vec<DdComplex>,
    dd_weights: Vec<DdComplex>,
}

/// One closed-form term.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosedTerm {
    pub value: Complex,
    /// Nearest integer, for integral recurrences with `|value| < 2^52`.
    pub nearest: Option<i64>,
    /// `|value - nearest|` when `nearest` is present.
    pub distance: Option<f64>,
}

impl BinetForm {
    pub fn recurrence(&self) -> &Recurrence {
        &self.rec
    }

    /// Roots in canonical order; `weights()[j]` belongs to `roots().roots[j]`.
    pub fn roots(&self) -> &RootSet {
        &self.roots
    }

    /// `w_1..w_n` followed by the constant `w_{n+1}`.
    pub fn weights(&self) -> Vec<Complex> {
        self.dd_weights.iter().map(|w| w.to_complex()).collect()
    }

    /// The constant term `w_{n+1}`.
    pub fn constant(&self) -> Complex {
        self.dd_weights.last().expect("n + 1 weights").to_complex()
    }

    fn eval_dd(&self, k: u32) -> DdComplex {
        let (last, root_weights) = self.dd_weights.split_last().expect("n + 1 weights");
        root_weights
            .iter()
            .zip(&self.dd_roots)
            .fold(*last, |acc, (&w, &r)| acc + w * r.powu(k))
    }

    pub fn closed_term(&self, k: u32) -> ClosedTerm {
        snap(self.eval_dd(k), self.rec.is_integral())
    }
}

/// Shorthand for [`BinetForm::closed_term`].
pub fn closed_term(form: &BinetForm, k: u32) -> ClosedTerm {
    form.closed_term(k)
}

pub(crate) fn snap(value: DdComplex, integral: bool) -> ClosedTerm {
    let approx = value.to_complex();
    if integral && approx.re.abs() < SNAP_LIMIT {
        let (nearest, frac) = value.re.round_with_distance();
        ClosedTerm {
            value: approx,
            nearest: Some(nearest as i64),
            distance: Some(libm::hypot(frac, approx.im)),
        }
    } else {
        ClosedTerm {
            value: approx,
            nearest: None,
            distance: None,
        }
    }
}

/// `p(z)` and `p'(z)` for the monic characteristic polynomial.
fn eval_with_derivative(coeffs: &[f64], z: DdComplex) -> (DdComplex, DdComplex) {
    let mut p = DdComplex::ONE;
    let mut dp = DdComplex::ZERO;
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z - DdComplex::from(c);
    }
    (p, dp)
}

/// Newton-polishes an `f64` root to double-double accuracy.
pub(crate) fn polish_root(coeffs: &[f64], approx: Complex) -> DdComplex {
    let mut z = DdComplex::from(approx);
    for _ in 0..3 {
        let (p, dp) = eval_with_derivative(coeffs, z);
        if dp.is_zero() {
            break;
        }
        z = z - p / dp;
    }
    z
}

pub(crate) fn check_separation(roots: &[Complex], scale: f64) -> Result<(), BinetError> {
    let separation = crate::roots::min_separation(roots);
    if separation <= DEGENERACY_TOLERANCE * scale {
        return Err(BinetError::DegenerateRoots { separation });
    }
    Ok(())
}

pub(crate) fn dd_seeds(rec: &Recurrence) -> Vec<DdComplex> {
    rec.seeds().iter().map(|&x| DdComplex::from(x)).collect()
}

/// Solves the `(n+1)×(n+1)` system with rows `k = 0..n`
/// `[r_1^k … r_n^k 1] · w = x_k`, where `x_n` comes from the recurrence.
pub fn solve_weights(rec: &Recurrence) -> Result<BinetForm, BinetError> {
    solve_weights_with(rec, Method::Closed)
}

/// [`solve_weights`] with the root solver chosen by `method`.
pub fn solve_weights_with(rec: &Recurrence, method: Method) -> Result<BinetForm, BinetError> {
    let poly = rec.characteristic_polynomial();
    let roots = characteristic_roots(&poly, method)?;
    check_separation(&roots.roots, poly.scale())?;
    if roots
        .roots
        .iter()
        .any(|r| (r - 1.0).norm() <= UNIT_ROOT_TOLERANCE)
    {
        return Err(BinetError::SingularSystem);
    }
    let n = rec.order();
    let dd_roots: Vec<DdComplex> = roots
        .roots
        .iter()
        .map(|&r| polish_root(poly.coeffs(), r))
        .collect();
    let mut rhs = dd_seeds(rec);
    let next = rec
        .coeffs()
        .iter()
        .zip(&rhs)
        .fold(DdComplex::ZERO, |acc, (&c, &x)| {
            acc + DdComplex::from(c) * x
        });
    rhs.push(next);
    let matrix: Vec<Vec<DdComplex>> = (0..=n as u32)
        .map(|k| {
            let mut row: Vec<DdComplex> = dd_roots.iter().map(|r| r.powu(k)).collect();
            row.push(DdComplex::ONE);
            row
        })
        .collect();
    let dd_weights = solve(matrix, rhs).ok_or(BinetError::SingularSystem)?;
    Ok(BinetForm {
        rec: rec.clone(),
        roots,
        dd_roots,
        dd_weights,
    })
}

/// Real value of a double-double complex as `f64`.
pub(crate) fn real_part(z: DdComplex) -> f64 {
    z.re.to_f64()
}

pub(crate) fn dd(x: f64) -> DdComplex {
    DdComplex::real(Dd::new(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rec(c: &[f64], x: &[f64]) -> Recurrence {
        Recurrence::new(c.to_vec(), x.to_vec()).unwrap()
    }

    #[test]
    fn fibonacci_weights() {
        let form = solve_weights(&rec(&[1.0, 1.0], &[0.0, 1.0])).unwrap();
        let w = form.weights();
        let inv = 1.0 / 5f64.sqrt();
        assert!((w[0] - inv).norm() < 1e-15);
        assert!((w[1] + inv).norm() < 1e-15);
        assert!(w[2].norm() < 1e-30);
        let t = form.closed_term(10);
        assert_eq!(t.nearest, Some(55));
        assert!(t.distance.unwrap() < 1e-25);
    }

    #[test]
    fn lucas_weights() {
        let form = solve_weights(&rec(&[1.0, 1.0], &[2.0, 1.0])).unwrap();
        let w = form.weights();
        assert!((w[0] - 1.0).norm() < 1e-15 && (w[1] - 1.0).norm() < 1e-15);
        assert_eq!(form.closed_term(10).nearest, Some(123));
    }

    #[test]
    fn tribonacci_term() {
        let form = solve_weights(&rec(&[1.0; 3], &[0.0, 1.0, 1.0])).unwrap();
        assert_eq!(form.closed_term(10).nearest, Some(149));
        assert_eq!(form.closed_term(0).nearest, Some(0));
    }

    #[test]
    fn seeds_are_reproduced() {
        let r = rec(&[0.5, -1.25, 2.0], &[1.5, -2.0, 0.25]);
        let form = solve_weights(&r).unwrap();
        assert_eq!(form.closed_term(0).nearest, None);
        for (k, &x) in r.seeds().iter().enumerate() {
            assert!((form.closed_term(k as u32).value - x).norm() < 1e-14);
        }
    }

    #[test]
    fn unit_root_is_singular() {
        assert!(matches!(
            solve_weights(&rec(&[0.0, 1.0], &[1.0, 1.0])),
            Err(BinetError::SingularSystem)
        ));
    }

    #[test]
    fn repeated_roots_are_refused() {
        assert!(matches!(
            solve_weights(&rec(&[-1.0, 2.0], &[0.0, 1.0])),
            Err(BinetError::DegenerateRoots { .. })
        ));
    }

    #[test]
    fn numeric_roots_give_the_same_weights() {
        let r = rec(&[1.0; 3], &[0.0, 1.0, 1.0]);
        let closed = solve_weights(&r).unwrap();
        let numeric = solve_weights_with(&r, Method::Numeric).unwrap();
        for (a, b) in closed.weights().iter().zip(numeric.weights()) {
            assert!((a - b).norm() < 1e-14);
        }
        assert_eq!(numeric.closed_term(30).nearest, Some(29_249_425));
    }

    #[test]
    fn order_one() {
        let form = solve_weights(&rec(&[3.0], &[2.0])).unwrap();
        assert_eq!(form.closed_term(5).nearest, Some(486));
        assert!(form.constant().norm() < 1e-30);
    }

    #[test]
    fn polish_reaches_double_double() {
        let phi = polish_root(&[1.0, 1.0], Complex::new(1.618, 0.0));
        let (p, _) = eval_with_derivative(&[1.0, 1.0], phi);
        assert!(p.norm() < 1e-30);
        assert_eq!(vec![real_part(phi)], vec![(1.0 + 5f64.sqrt()) / 2.0]);
    }
}
