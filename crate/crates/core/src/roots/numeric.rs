use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::TAU;

use super::{RootError, RootMethod, RootSet};
use crate::recurrence::CharPoly;
use crate::Complex;

pub const MAX_SWEEPS: usize = 1000;
/// Relative update size at which iteration stops by default.
pub const DEFAULT_TOLERANCE: f64 = 1e-14;
/// Starting angle of the first guess; an irrational fraction of a turn so
/// no guess lands on a symmetry axis of a real polynomial.
const ANGLE_OFFSET: f64 = 0.4;

/// All roots of `poly` by Weierstrass (Durand-Kerner) iteration.
///
/// Guesses start evenly spaced on the circle of radius `1 + max |c_j|`,
/// which encloses every root. A sweep updates each estimate in place by
/// `p(z_i) / Π_{j≠i} (z_i - z_j)`. Iteration stops once every update is
/// below `tol` (relative to `max(1, |z_i|)`) or every residual is already
/// at the rounding level of the evaluation; the second rule ends runs on
/// repeated roots, where updates only shrink linearly.
pub fn numeric_roots(poly: &CharPoly, tol: f64) -> Result<RootSet, RootError> {
    let coeffs = poly.coeffs();
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(RootError::NonFinite);
    }
    let n = poly.degree();
    if n == 1 {
        return Ok(RootSet::new(
            vec![Complex::new(coeffs[0], 0.0)],
            RootMethod::Numeric,
            poly,
        ));
    }
    let radius = poly.scale();
    let mut z: Vec<Complex> = (0..n)
        .map(|k| Complex::from_polar(radius, TAU * k as f64 / n as f64 + ANGLE_OFFSET))
        .collect();
    for _ in 0..MAX_SWEEPS {
        let mut largest = 0.0f64;
        for i in 0..n {
            let mut denom = Complex::new(1.0, 0.0);
            for (j, &zj) in z.iter().enumerate() {
                if j != i {
                    denom *= z[i] - zj;
                }
            }
            if denom.norm() == 0.0 {
                // two estimates collided; nudge this one off the other
                denom = Complex::new(f64::EPSILON * radius, 0.0);
            }
            let step = poly.eval(z[i]) / denom;
            z[i] -= step;
            largest = largest.max(step.norm() / 1f64.max(z[i].norm()));
        }
        if !largest.is_finite() {
            break;
        }
        let settled = z
            .iter()
            .all(|&zi| poly.eval(zi).norm() <= 2.0 * poly.eval_error_bound(zi));
        if largest < tol || settled {
            return Ok(RootSet::new(z, RootMethod::Numeric, poly));
        }
    }
    Err(RootError::NoConvergence { sweeps: MAX_SWEEPS })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[f64]) -> CharPoly {
        CharPoly::new(coeffs.to_vec()).unwrap()
    }

    #[test]
    fn golden_pair() {
        let set = numeric_roots(&poly(&[1.0, 1.0]), DEFAULT_TOLERANCE).unwrap();
        let sqrt5 = 5f64.sqrt();
        assert!((set.roots[0] - (1.0 + sqrt5) / 2.0).norm() <= 1e-12);
        assert!((set.roots[1] - (1.0 - sqrt5) / 2.0).norm() <= 1e-12);
    }

    #[test]
    fn tribonacci_and_tetranacci() {
        let trib = numeric_roots(&poly(&[1.0; 3]), DEFAULT_TOLERANCE).unwrap();
        assert!((trib.roots[0] - 1.839_286_755_214_161).norm() <= 1e-12);
        assert!(trib.roots[1].im > 0.0);
        assert!((trib.roots[1] - trib.roots[2].conj()).norm() <= 1e-12);
        let tetra = numeric_roots(&poly(&[1.0; 4]), DEFAULT_TOLERANCE).unwrap();
        assert!((tetra.roots[0] - 1.927_561_975_482_925).norm() <= 1e-12);
        assert!(tetra.max_residual() <= 1e-12);
    }

    #[test]
    fn order_one_is_exact() {
        let set = numeric_roots(&poly(&[5.0]), DEFAULT_TOLERANCE).unwrap();
        assert_eq!(set.roots, vec![Complex::new(5.0, 0.0)]);
        assert_eq!(set.min_separation, f64::INFINITY);
    }

    #[test]
    fn repeated_roots_terminate() {
        // (x-1)^2 and x^4
        let double = numeric_roots(&poly(&[-1.0, 2.0]), DEFAULT_TOLERANCE).unwrap();
        assert!(double.roots.iter().all(|r| (r - 1.0).norm() < 1e-6));
        let quad_zero = numeric_roots(&poly(&[0.0; 4]), DEFAULT_TOLERANCE).unwrap();
        assert!(quad_zero.roots.iter().all(|r| r.norm() < 1e-3));
        assert!(quad_zero.max_residual() <= 1e-12);
    }

    #[test]
    fn higher_degree() {
        // x^6 = 1
        let mut c = [0.0; 6];
        c[0] = 1.0;
        let set = numeric_roots(&poly(&c), DEFAULT_TOLERANCE).unwrap();
        assert!(set.roots.iter().all(|r| (r.norm() - 1.0).abs() < 1e-12));
        assert!(set.min_separation > 0.99);
    }
}
