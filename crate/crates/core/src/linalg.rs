//! Dense complex linear solves for the small systems that show up here
//! (Vandermonde-type weight systems, at most a handful of unknowns).

use alloc::vec::Vec;
use core::ops::{Add, Div, Mul, Neg, Sub};

use crate::dd::DdComplex;
use crate::Complex;

pub(crate) trait Scalar:
    Copy
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const ZERO: Self;
    fn magnitude(self) -> f64;
    fn conj(self) -> Self;
}

impl Scalar for Complex {
    const ZERO: Self = Complex::new(0.0, 0.0);
    fn magnitude(self) -> f64 {
        self.norm()
    }
    fn conj(self) -> Self {
        Complex::conj(&self)
    }
}

impl Scalar for DdComplex {
    const ZERO: Self = DdComplex::ZERO;
    fn magnitude(self) -> f64 {
        self.norm()
    }
    fn conj(self) -> Self {
        DdComplex::conj(self)
    }
}

/// Solves the square system `a · x = b` by Gaussian elimination with
/// partial pivoting. `None` when a pivot column is exactly zero.
pub(crate) fn solve<T: Scalar>(mut a: Vec<Vec<T>>, mut b: Vec<T>) -> Option<Vec<T>> {
    let n = b.len();
    debug_assert!(a.len() == n && a.iter().all(|row| row.len() == n));
    for col in 0..n {
        let pivot =
            (col..n).max_by(|&i, &j| a[i][col].magnitude().total_cmp(&a[j][col].magnitude()))?;
        if a[pivot][col].magnitude() == 0.0 {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            if factor.magnitude() == 0.0 {
                continue;
            }
            #[allow(clippy::needless_range_loop)]
            for k in col..n {
                let delta = factor * a[col][k];
                a[row][k] = a[row][k] - delta;
            }
            let delta = factor * b[col];
            b[row] = b[row] - delta;
        }
    }
    let mut x = Vec::with_capacity(n);
    x.resize(n, T::ZERO);
    for row in (0..n).rev() {
        let mut acc = b[row];
        for k in row + 1..n {
            acc = acc - a[row][k] * x[k];
        }
        x[row] = acc / a[row][row];
    }
    Some(x)
}

/// Least-squares solution of an overdetermined system through the normal
/// equations, returned with the Euclidean norm of the residual `a·x - b`.
pub(crate) fn least_squares(a: &[Vec<Complex>], b: &[Complex]) -> Option<(Vec<Complex>, f64)> {
    let cols = a.first()?.len();
    let mut normal = Vec::with_capacity(cols);
    let mut rhs = Vec::with_capacity(cols);
    for i in 0..cols {
        let row: Vec<Complex> = (0..cols)
            .map(|j| a.iter().map(|r| r[i].conj() * r[j]).sum())
            .collect();
        normal.push(row);
        rhs.push(a.iter().zip(b).map(|(r, &bk)| r[i].conj() * bk).sum());
    }
    let x = solve(normal, rhs)?;
    let residual = libm::sqrt(
        a.iter()
            .zip(b)
            .map(|(r, &bk)| {
                let fitted: Complex = r.iter().zip(&x).map(|(&aij, &xj)| aij * xj).sum();
                (fitted - bk).norm_sqr()
            })
            .sum::<f64>(),
    );
    Some((x, residual))
}
