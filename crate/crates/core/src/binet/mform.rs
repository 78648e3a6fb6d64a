//! Expansions of `x_k` over operator-signed power sums,
//! `x_k = Σ_m M_m · (r_1^k ∘ r_2^k ∘ …)` with one signature per term.

use alloc::vec;
use alloc::vec::Vec;

use super::explicit::{cubic, quadratic};
use super::{check_separation, dd, dd_seeds, polish_root, snap, BinetError, ClosedTerm};
use crate::dd::DdComplex;
use crate::linalg::solve;
use crate::recurrence::Recurrence;
use crate::roots::{characteristic_roots, Method};
use crate::unity::Rotor;
use crate::Complex;

const ID: Rotor = Rotor::IDENTITY;

/// Order-4 terms kept after reduction: `(+,+,+,+)`, `(+,⊥,⊤,⊣)`,
/// `(+,⊣,⊥,⊤)` and `(+,⊤,⊣,⊥)`. The remaining signatures `(+,⊥,⊣,⊤)`,
/// `(+,⊤,⊥,⊣)` and `(+,⊣,⊤,⊥)` get coefficient zero.
const QUARTIC_SIGNATURES: [[Rotor; 4]; 4] = [
    [ID, ID, ID, ID],
    [ID, Rotor::PERP, Rotor::TOP, Rotor::DASHV],
    [ID, Rotor::DASHV, Rotor::PERP, Rotor::TOP],
    [ID, Rotor::TOP, Rotor::DASHV, Rotor::PERP],
];

#[derive(Clone, Debug)]
pub struct MForm {
    coeffs: Vec<DdComplex>,
    signatures: Vec<Vec<Rotor>>,
    roots: Vec<DdComplex>,
    integral: bool,
}

impl MForm {
    pub fn order(&self) -> usize {
        self.roots.len()
    }

    /// `M_1..M_m`.
    pub fn coefficients(&self) -> Vec<Complex> {
        self.coeffs.iter().map(|m| m.to_complex()).collect()
    }

    /// The rotor applied to each root power, one row per coefficient.
    pub fn signatures(&self) -> &[Vec<Rotor>] {
        &self.signatures
    }

    /// Roots in the labelling the signatures refer to: `(c1 ± σ1)/2` for
    /// order 2, resolvent order for order 3, canonical order for order 4.
    pub fn roots(&self) -> Vec<Complex> {
        self.roots.iter().map(|r| r.to_complex()).collect()
    }

    fn term(&self, signature: &[Rotor], k: u32) -> DdComplex {
        signature
            .iter()
            .zip(&self.roots)
            .fold(DdComplex::ZERO, |acc, (&rot, r)| {
                acc + DdComplex::rotor(rot) * r.powu(k)
            })
    }

    pub fn evaluate(&self, k: u32) -> ClosedTerm {
        let value = self
            .coeffs
            .iter()
            .zip(&self.signatures)
            .fold(DdComplex::ZERO, |acc, (&m, sig)| {
                acc + m * self.term(sig, k)
            });
        snap(value, self.integral)
    }
}

fn fit(
    signatures: Vec<Vec<Rotor>>,
    roots: Vec<DdComplex>,
    rec: &Recurrence,
) -> Result<MForm, BinetError> {
    let mut form = MForm {
        coeffs: Vec::new(),
        signatures,
        roots,
        integral: rec.is_integral(),
    };
    let matrix: Vec<Vec<DdComplex>> = (0..form.order() as u32)
        .map(|k| {
            form.signatures
                .iter()
                .map(|sig| form.term(sig, k))
                .collect()
        })
        .collect();
    form.coeffs = solve(matrix, dd_seeds(rec)).ok_or(BinetError::SingularSystem)?;
    Ok(form)
}

/// Fits the M-expansion of order 2, 3 or 4 to the seeds.
///
/// Order 2 uses `M1 = x0/2`, `M2 = (2x1 - c1x0)/(2σ1)` directly; orders 3
/// and 4 solve for the coefficients from the seeds. For order 4 only four
/// of the seven signed sums are independent, so the last three
/// coefficients are fixed at zero.
pub fn m_form(rec: &Recurrence) -> Result<MForm, BinetError> {
    let c = rec.coeffs();
    let x = rec.seeds();
    match rec.order() {
        2 => {
            let q = quadratic(c[0], c[1])?;
            let m1 = dd(x[0]).scale(0.5);
            let m2 = (dd(2.0) * dd(x[1]) - dd(c[1]) * dd(x[0])) / (dd(2.0) * q.sigma);
            Ok(MForm {
                coeffs: vec![m1, m2],
                signatures: vec![vec![ID, ID], vec![ID, Rotor::DASHV]],
                roots: q.roots.to_vec(),
                integral: rec.is_integral(),
            })
        }
        3 => {
            let cubic = cubic(c[0], c[1], c[2])?;
            let signatures = vec![
                vec![ID, ID, ID],
                vec![ID, Rotor::SLASH, Rotor::ASLASH],
                vec![ID, Rotor::ASLASH, Rotor::SLASH],
            ];
            fit(signatures, cubic.roots.to_vec(), rec)
        }
        4 => {
            let poly = rec.characteristic_polynomial();
            let set = characteristic_roots(&poly, Method::Closed)?;
            check_separation(&set.roots, poly.scale())?;
            let roots = set
                .roots
                .iter()
                .map(|&r| polish_root(poly.coeffs(), r))
                .collect();
            let signatures = QUARTIC_SIGNATURES.iter().map(|s| s.to_vec()).collect();
            fit(signatures, roots, rec)
        }
        n => Err(BinetError::UnsupportedOrder(n)),
    }
}
