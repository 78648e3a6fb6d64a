//! Characteristic roots: closed forms built from permutation resolvents for
//! degrees 2 and 3, simultaneous iteration for everything else.
//!
//! Roots are always listed in descending modulus, then descending real
//! part, then descending imaginary part; that order fixes which root is
//! `r_1` in every formula downstream.

mod numeric;
mod permutation;

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use thiserror::Error;

use crate::recurrence::CharPoly;
use crate::unity::Rotor;
use crate::Complex;

pub use numeric::{numeric_roots, DEFAULT_TOLERANCE, MAX_SWEEPS};
pub use permutation::{
    permutation_tables, roots_from_sigma, sigma_from_roots, PermutationTable, Reconstruction,
};

/// Relative tolerance under which two moduli (or components) count as tied
/// when ordering roots.
pub const ORDER_TOLERANCE: f64 = 1e-9;
/// Largest accepted `|σ1·σ2 - B|`, relative to `1 + |B|`, before the cube
/// root pairing is declared broken.
pub const BRANCH_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum RootError {
    #[error("no convergence after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("no cube-root pairing satisfies σ1·σ2 = B (defect {defect:e})")]
    BranchSelectionFailed { defect: f64 },
    #[error("expected {expected} values, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("degree {0} is not supported here")]
    UnsupportedDegree(usize),
    #[error("σ values are inconsistent (least-squares residual {residual:e})")]
    InconsistentSigmas { residual: f64 },
    #[error("polynomial coefficients must be finite")]
    NonFinite,
}

/// How a [`RootSet`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootMethod {
    Closed2,
    Closed3,
    Numeric,
}

impl RootMethod {
    pub fn name(self) -> &'static str {
        match self {
            RootMethod::Closed2 => "closed2",
            RootMethod::Closed3 => "closed3",
            RootMethod::Numeric => "numeric",
        }
    }
}

/// Which solver [`characteristic_roots`] should prefer.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Method {
    /// Closed forms for degrees 2 and 3, numeric otherwise.
    #[default]
    Closed,
    Numeric,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Complex>,
    pub method: RootMethod,
    /// `|p(r_i)|`, aligned with `roots`.
    pub residuals: Vec<f64>,
    /// Smallest pairwise distance; infinite for a single root.
    pub min_separation: f64,
}

impl RootSet {
    /// Sorts `roots` and records residuals against `poly`.
    pub fn new(mut roots: Vec<Complex>, method: RootMethod, poly: &CharPoly) -> Self {
        sort_roots(&mut roots);
        let residuals = roots.iter().map(|&r| poly.eval(r).norm()).collect();
        let min_separation = min_separation(&roots);
        RootSet {
            roots,
            method,
            residuals,
            min_separation,
        }
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().fold(0.0, |m, &r| m.max(r))
    }

    pub fn dominant(&self) -> Complex {
        self.roots[0]
    }
}

fn ties(x: f64, y: f64) -> bool {
    (x - y).abs() <= ORDER_TOLERANCE * 1f64.max(x.abs()).max(y.abs())
}

fn root_order(a: &Complex, b: &Complex) -> Ordering {
    let (ma, mb) = (a.norm(), b.norm());
    if !ties(ma, mb) {
        return mb.total_cmp(&ma);
    }
    if !ties(a.re, b.re) {
        return b.re.total_cmp(&a.re);
    }
    b.im.total_cmp(&a.im)
}

/// Orders roots by descending modulus, real part, imaginary part, treating
/// values within [`ORDER_TOLERANCE`] as equal. Insertion sort keeps the
/// result well defined even though tolerant comparison is not transitive.
pub fn sort_roots(roots: &mut [Complex]) {
    for i in 1..roots.len() {
        let mut j = i;
        while j > 0 && root_order(&roots[j - 1], &roots[j]) == Ordering::Greater {
            roots.swap(j - 1, j);
            j -= 1;
        }
    }
}

pub fn min_separation(roots: &[Complex]) -> f64 {
    let mut best = f64::INFINITY;
    for (i, a) in roots.iter().enumerate() {
        for b in &roots[i + 1..] {
            best = best.min((a - b).norm());
        }
    }
    best
}

/// σ values and discriminant pieces for a degree-2 or degree-3 polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct ResolventSet {
    pub degree: usize,
    /// `[σ1, -σ1]` for degree 2, `[σ1, σ2]` for degree 3.
    pub sigmas: Vec<Complex>,
    /// `A = 2c2³ + 9c1c2 + 27c0` (degree 3 only).
    pub a: Option<f64>,
    /// `B = c2² + 3c1` (degree 3 only).
    pub b: Option<f64>,
}

impl ResolventSet {
    /// `|σ1·σ2 - B|`, or `None` below degree 3.
    pub fn branch_defect(&self) -> Option<f64> {
        let b = self.b?;
        Some((self.sigmas[0] * self.sigmas[1] - b).norm())
    }
}

/// Roots of `x² = c1·x + c0` as `(c1 ± σ1)/2` with `σ1 = √(c1² + 4c0)`.
pub fn quadratic_roots(c0: f64, c1: f64) -> (RootSet, Complex) {
    let sigma = Complex::new(c1 * c1 + 4.0 * c0, 0.0).sqrt();
    let r = (c1 + sigma) / 2.0;
    let s = (c1 - sigma) / 2.0;
    let poly = CharPoly::new(vec![c0, c1]).expect("two coefficients");
    (RootSet::new(vec![r, s], RootMethod::Closed2, &poly), sigma)
}

pub fn quadratic_resolvents(c0: f64, c1: f64) -> ResolventSet {
    let (_, sigma) = quadratic_roots(c0, c1);
    ResolventSet {
        degree: 2,
        sigmas: vec![sigma, -sigma],
        a: None,
        b: None,
    }
}

/// Real cube root for real input, principal complex root otherwise.
fn cube_root(u: Complex) -> Complex {
    if u.im == 0.0 {
        Complex::new(libm::cbrt(u.re), 0.0)
    } else {
        u.cbrt()
    }
}

/// `σ1, σ2` for `x³ = c2x² + c1x + c0`.
///
/// `σ1³` and `σ2³` are the two roots `(A ± √(A² - 4B³))/2`. Only the
/// cube root of the larger one is taken; the other σ is `B` divided by it,
/// which is the pairing that makes the root formulas correct.
pub fn cubic_resolvents(c0: f64, c1: f64, c2: f64) -> Result<ResolventSet, RootError> {
    let a = 2.0 * c2 * c2 * c2 + 9.0 * c1 * c2 + 27.0 * c0;
    let b = c2 * c2 + 3.0 * c1;
    if !a.is_finite() || !b.is_finite() {
        return Err(RootError::NonFinite);
    }
    let root_disc = Complex::new(a * a - 4.0 * b * b * b, 0.0).sqrt();
    let plus = (a + root_disc) / 2.0;
    let minus = (a - root_disc) / 2.0;
    let (sigma1, sigma2) = if plus.norm() >= minus.norm() {
        let s1 = cube_root(plus);
        let s2 = if s1.norm() == 0.0 {
            cube_root(minus)
        } else {
            b / s1
        };
        (s1, s2)
    } else {
        let s2 = cube_root(minus);
        (b / s2, s2)
    };
    let defect = (sigma1 * sigma2 - b).norm();
    let cube_defect = (sigma1.powi(3) - plus)
        .norm()
        .max((sigma2.powi(3) - minus).norm());
    let scale = 1.0 + plus.norm().max(minus.norm());
    if !(defect <= BRANCH_TOLERANCE * (1.0 + b.abs()) && cube_defect <= BRANCH_TOLERANCE * scale) {
        return Err(RootError::BranchSelectionFailed {
            defect: defect.max(cube_defect),
        });
    }
    Ok(ResolventSet {
        degree: 3,
        sigmas: vec![sigma1, sigma2],
        a: Some(a),
        b: Some(b),
    })
}

/// The three roots `(c2 + σ1 + σ2)/3`, `(c2 ∖σ1 ⁄σ2)/3`, `(c2 ⁄σ1 ∖σ2)/3`
/// in that order (before sorting).
pub(crate) fn cubic_from_sigmas(c2: f64, s1: Complex, s2: Complex) -> [Complex; 3] {
    let w = Rotor::SLASH.value();
    let w2 = Rotor::ASLASH.value();
    [
        (c2 + s1 + s2) / 3.0,
        (c2 + w2 * s1 + w * s2) / 3.0,
        (c2 + w * s1 + w2 * s2) / 3.0,
    ]
}

pub fn cubic_roots(c0: f64, c1: f64, c2: f64) -> Result<RootSet, RootError> {
    let res = cubic_resolvents(c0, c1, c2)?;
    let roots = cubic_from_sigmas(c2, res.sigmas[0], res.sigmas[1]);
    let poly = CharPoly::new(vec![c0, c1, c2]).expect("three coefficients");
    Ok(RootSet::new(roots.to_vec(), RootMethod::Closed3, &poly))
}

/// Resolvents for the closed-form degrees.
pub fn resolvents(poly: &CharPoly) -> Result<ResolventSet, RootError> {
    match *poly.coeffs() {
        [c0, c1] => Ok(quadratic_resolvents(c0, c1)),
        [c0, c1, c2] => cubic_resolvents(c0, c1, c2),
        _ => Err(RootError::UnsupportedDegree(poly.degree())),
    }
}

/// Roots of `poly`, by closed form where one exists and `method` allows it.
pub fn characteristic_roots(poly: &CharPoly, method: Method) -> Result<RootSet, RootError> {
    if poly.coeffs().iter().any(|c| !c.is_finite()) {
        return Err(RootError::NonFinite);
    }
    match (method, poly.coeffs()) {
        (Method::Closed, &[c0, c1]) => Ok(quadratic_roots(c0, c1).0),
        (Method::Closed, &[c0, c1, c2]) => cubic_roots(c0, c1, c2),
        _ => numeric_roots(poly, DEFAULT_TOLERANCE),
    }
}

/// Differences between the elementary symmetric functions of `roots` and
/// the values the coefficients demand: `e_k = (-1)^(k+1) c_{n-k}`.
/// Entry `k-1` is the residual for `e_k`.
pub fn vieta_residuals(roots: &[Complex], poly: &CharPoly) -> Result<Vec<f64>, RootError> {
    let n = poly.degree();
    if roots.len() != n {
        return Err(RootError::ArityMismatch {
            expected: n,
            got: roots.len(),
        });
    }
    // e[k] after folding in each root: e_k of the roots seen so far
    let mut e = vec![Complex::new(0.0, 0.0); n + 1];
    e[0] = Complex::new(1.0, 0.0);
    for (seen, &r) in roots.iter().enumerate() {
        for k in (1..=seen + 1).rev() {
            e[k] = e[k] + e[k - 1] * r;
        }
    }
    let c = poly.coeffs();
    Ok((1..=n)
        .map(|k| {
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            (e[k] - sign * c[n - k]).norm()
        })
        .collect())
}

/// `min over permutations π of max_i |a_i - b_π(i)|`; infinite when the
/// lengths differ. Exhaustive, so meant for the small root counts here.
pub fn matched_distance(a: &[Complex], b: &[Complex]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let mut used = vec![false; b.len()];
    best_match(a, b, &mut used, 0.0, f64::INFINITY)
}

fn best_match(a: &[Complex], b: &[Complex], used: &mut [bool], so_far: f64, mut best: f64) -> f64 {
    let Some((&first, rest)) = a.split_first() else {
        return so_far;
    };
    for j in 0..b.len() {
        if used[j] {
            continue;
        }
        let worst = so_far.max((first - b[j]).norm());
        if worst >= best {
            continue;
        }
        used[j] = true;
        best = best.min(best_match(rest, b, used, worst, best));
        used[j] = false;
    }
    best
}
