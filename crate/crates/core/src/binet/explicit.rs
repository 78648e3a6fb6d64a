//! The explicit order-2 and order-3 formulas and their building blocks.

use super::{check_separation, dd, real_part, BinetError};
use crate::dd::DdComplex;
use crate::recurrence::Recurrence;
use crate::roots::cubic_resolvents;
use crate::unity::Rotor;
use crate::Complex;

/// Roots of `x² = c1x + c0` labelled `r1 = (c1 + σ)/2`, `r2 = (c1 - σ)/2`.
pub(crate) struct Quadratic {
    pub sigma: DdComplex,
    pub roots: [DdComplex; 2],
}

fn quadratic_unchecked(c0: f64, c1: f64) -> Quadratic {
    let disc = dd(c1) * dd(c1) + dd(4.0) * dd(c0);
    let sigma = disc.sqrt();
    let half = |z: DdComplex| z.scale(0.5);
    Quadratic {
        sigma,
        roots: [half(dd(c1) + sigma), half(dd(c1) - sigma)],
    }
}

/// As [`quadratic_unchecked`], refusing repeated roots.
pub(crate) fn quadratic(c0: f64, c1: f64) -> Result<Quadratic, BinetError> {
    let q = quadratic_unchecked(c0, c1);
    let scale = 1.0 + c0.abs().max(c1.abs());
    check_separation(&q.roots.map(DdComplex::to_complex), scale)?;
    Ok(q)
}

/// Roots of `x³ = c2x² + c1x + c0` in resolvent order:
/// `r = (c2 + σ1 + σ2)/3`, `s = (c2 ∖σ1 ⁄σ2)/3`, `t = (c2 ⁄σ1 ∖σ2)/3`.
pub(crate) struct Cubic {
    pub sigma1: DdComplex,
    pub sigma2: DdComplex,
    /// `σ1³ - σ2³`
    pub delta: DdComplex,
    pub roots: [DdComplex; 3],
}

fn cubic_unchecked(c0: f64, c1: f64, c2: f64) -> Result<Cubic, BinetError> {
    let approx = cubic_resolvents(c0, c1, c2)?;
    let (c0d, c1d, c2d) = (dd(c0), dd(c1), dd(c2));
    let a = dd(2.0) * c2d * c2d * c2d + dd(9.0) * c1d * c2d + dd(27.0) * c0d;
    let b = c2d * c2d + dd(3.0) * c1d;
    let root_disc = (a * a - dd(4.0) * b * b * b).sqrt();
    let plus = (a + root_disc).scale(0.5);
    let minus = (a - root_disc).scale(0.5);
    // refine the cube root of the larger branch, derive the other from σ1σ2 = B
    let (sigma1, sigma2) = if plus.norm() >= minus.norm() {
        let s1 = plus.refine_root(approx.sigmas[0], 3);
        let s2 = if s1.is_zero() {
            minus.refine_root(approx.sigmas[1], 3)
        } else {
            b / s1
        };
        (s1, s2)
    } else {
        let s2 = minus.refine_root(approx.sigmas[1], 3);
        (b / s2, s2)
    };
    let w = DdComplex::rotor(Rotor::SLASH);
    let w2 = DdComplex::rotor(Rotor::ASLASH);
    let third = |z: DdComplex| z / dd(3.0);
    let roots = [
        third(c2d + sigma1 + sigma2),
        third(c2d + w2 * sigma1 + w * sigma2),
        third(c2d + w * sigma1 + w2 * sigma2),
    ];
    let delta = sigma1.powu(3) - sigma2.powu(3);
    Ok(Cubic {
        sigma1,
        sigma2,
        delta,
        roots,
    })
}

/// As [`cubic_unchecked`], refusing repeated roots (equivalently
/// `σ1³ = σ2³`).
pub(crate) fn cubic(c0: f64, c1: f64, c2: f64) -> Result<Cubic, BinetError> {
    let cubic = cubic_unchecked(c0, c1, c2)?;
    let scale = 1.0 + c0.abs().max(c1.abs()).max(c2.abs());
    check_separation(&cubic.roots.map(DdComplex::to_complex), scale)?;
    Ok(cubic)
}

fn require_order(rec: &Recurrence, order: usize) -> Result<(), BinetError> {
    if rec.order() != order {
        return Err(BinetError::ArityMismatch {
            expected: order,
            got: rec.order(),
        });
    }
    Ok(())
}

/// Order-2 closed form:
/// `x_k = (2x1 - c1x0)/2 · (r1^k - r2^k)/σ1 + x0/2 · (r1^k + r2^k)`.
pub fn binet2(rec: &Recurrence, k: u32) -> Result<f64, BinetError> {
    require_order(rec, 2)?;
    let (c, x) = (rec.coeffs(), rec.seeds());
    let q = quadratic(c[0], c[1])?;
    let (p1, p2) = (q.roots[0].powu(k), q.roots[1].powu(k));
    let diff_weight = (dd(2.0) * dd(x[1]) - dd(c[1]) * dd(x[0])).scale(0.5);
    let value = diff_weight * (p1 - p2) / q.sigma + dd(x[0]).scale(0.5) * (p1 + p2);
    Ok(real_part(value))
}

/// `r^k ⁄ s^k ∖ t^k` over the resolvent-ordered roots.
fn slash_chain(roots: &[DdComplex; 3], k: u32) -> DdComplex {
    roots[0].powu(k)
        + DdComplex::rotor(Rotor::SLASH) * roots[1].powu(k)
        + DdComplex::rotor(Rotor::ASLASH) * roots[2].powu(k)
}

/// `r^k ∖ s^k ⁄ t^k` over the resolvent-ordered roots.
fn aslash_chain(roots: &[DdComplex; 3], k: u32) -> DdComplex {
    roots[0].powu(k)
        + DdComplex::rotor(Rotor::ASLASH) * roots[1].powu(k)
        + DdComplex::rotor(Rotor::SLASH) * roots[2].powu(k)
}

fn power_sum(roots: &[DdComplex], k: u32) -> DdComplex {
    roots.iter().fold(DdComplex::ZERO, |acc, r| acc + r.powu(k))
}

/// The two bracket numerators of the order-3 formula, `(N1, N2)`, so that
/// `x_k = N1/3 · 𝓐_k - N2/3 · 𝓑_k + x0/3 · 𝓒_k`.
pub(crate) fn cubic_numerators(rec: &Recurrence, cubic: &Cubic) -> (DdComplex, DdComplex) {
    let (c, x) = (rec.coeffs(), rec.seeds());
    let (c1, c2) = (dd(c[1]), dd(c[2]));
    let (x0, x1, x2) = (dd(x[0]), dd(x[1]), dd(x[2]));
    let numerator = |sa: DdComplex, sb: DdComplex| {
        dd(9.0) * sa * x2
            - dd(3.0) * (dd(2.0) * c2 * sa + sb * sb) * x1
            - ((c2 * c2 + dd(6.0) * c1) * sa - c2 * sb * sb) * x0
    };
    (
        numerator(cubic.sigma1, cubic.sigma2),
        numerator(cubic.sigma2, cubic.sigma1),
    )
}

/// Order-3 closed form in the resolvents σ1, σ2.
pub fn binet3(rec: &Recurrence, k: u32) -> Result<f64, BinetError> {
    require_order(rec, 3)?;
    let c = rec.coeffs();
    let cubic = cubic(c[0], c[1], c[2])?;
    let (n1, n2) = cubic_numerators(rec, &cubic);
    let a_k = aslash_chain(&cubic.roots, k) / cubic.delta;
    let b_k = slash_chain(&cubic.roots, k) / cubic.delta;
    let c_k = power_sum(&cubic.roots, k);
    let third = dd(3.0);
    let value = n1 / third * a_k - n2 / third * b_k + dd(rec.seeds()[0]) / third * c_k;
    Ok(real_part(value))
}

/// The named building blocks of the closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    /// `𝓕_k = (r1^k - r2^k)/√(c1² + 4c0)`
    F,
    /// `𝓛_k = r1^k + r2^k`
    L,
    /// `𝓐_k = (r^k ∖ s^k ⁄ t^k)/(σ1³ - σ2³)`
    A,
    /// `𝓑_k = (r^k ⁄ s^k ∖ t^k)/(σ1³ - σ2³)`
    B,
    /// `𝓒_k = r^k + s^k + t^k`
    C,
}

impl ComponentKind {
    pub fn order(self) -> usize {
        match self {
            ComponentKind::F | ComponentKind::L => 2,
            ComponentKind::A | ComponentKind::B | ComponentKind::C => 3,
        }
    }
}

/// Component `kind` at `k`, built from the coefficients of `rec`.
pub fn component(rec: &Recurrence, kind: ComponentKind, k: u32) -> Result<Complex, BinetError> {
    require_order(rec, kind.order())?;
    let c = rec.coeffs();
    let value = match kind {
        // power sums stay defined on repeated roots; the quotients do not
        ComponentKind::L => power_sum(&quadratic_unchecked(c[0], c[1]).roots, k),
        ComponentKind::F => {
            let q = quadratic(c[0], c[1])?;
            (q.roots[0].powu(k) - q.roots[1].powu(k)) / q.sigma
        }
        ComponentKind::C => power_sum(&cubic_unchecked(c[0], c[1], c[2])?.roots, k),
        ComponentKind::A => {
            let cubic = cubic(c[0], c[1], c[2])?;
            aslash_chain(&cubic.roots, k) / cubic.delta
        }
        ComponentKind::B => {
            let cubic = cubic(c[0], c[1], c[2])?;
            slash_chain(&cubic.roots, k) / cubic.delta
        }
    };
    Ok(value.to_complex())
}
