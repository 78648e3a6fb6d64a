//! Permutation tables of the roots under operator signatures, and the σ
//! values they define.
//!
//! A table pairs a signature (one rotor per position) with a list of root
//! orderings. Each row gives one σ: the signature applied to that ordering
//! and summed, e.g. `σ1 = r ⁄ s ∖ t` for the row `r s t` under `(+, ⁄, ∖)`.

use alloc::vec;
use alloc::vec::Vec;

use super::{cubic_from_sigmas, RootError};
use crate::linalg::least_squares;
use crate::unity::Rotor;
use crate::Complex;

/// Largest accepted least-squares residual in quartic reconstruction,
/// relative to `1 + max(|c_top|, |σ|)`.
pub const SIGMA_CONSISTENCY: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationTable {
    pub signature: Vec<Rotor>,
    /// Root labels per row, `0 = r`, `1 = s`, `2 = t`, `3 = u`.
    pub rows: Vec<Vec<usize>>,
}

impl PermutationTable {
    fn new(signature: &[Rotor], rows: &[&[usize]]) -> Self {
        PermutationTable {
            signature: signature.to_vec(),
            rows: rows.iter().map(|r| r.to_vec()).collect(),
        }
    }

    /// True when every position carries the identity (the table of plain
    /// sums).
    pub fn is_symmetric(&self) -> bool {
        self.signature.iter().all(|&r| r == Rotor::IDENTITY)
    }

    pub fn width(&self) -> usize {
        self.signature.len()
    }
}

const CYCLIC2: &[&[usize]] = &[&[0, 1], &[1, 0]];
const CYCLIC3: &[&[usize]] = &[&[0, 1, 2], &[2, 0, 1], &[1, 2, 0]];
const QUARTIC_ARRANGEMENTS: [&[&[usize]]; 6] = [
    &[&[0, 1, 2, 3], &[3, 0, 1, 2], &[2, 3, 0, 1], &[1, 2, 3, 0]],
    &[&[0, 1, 3, 2], &[2, 0, 1, 3], &[3, 2, 0, 1], &[1, 3, 2, 0]],
    &[&[0, 2, 1, 3], &[3, 0, 2, 1], &[1, 3, 0, 2], &[2, 1, 3, 0]],
    &[&[0, 2, 3, 1], &[1, 0, 2, 3], &[3, 1, 0, 2], &[2, 3, 1, 0]],
    &[&[0, 3, 1, 2], &[2, 0, 3, 1], &[1, 2, 0, 3], &[3, 1, 2, 0]],
    &[&[0, 3, 2, 1], &[1, 0, 3, 2], &[2, 1, 0, 3], &[3, 2, 1, 0]],
];
const QUARTIC_SIGNATURE: [Rotor; 4] = [Rotor::IDENTITY, Rotor::PERP, Rotor::TOP, Rotor::DASHV];

/// The tables for degree `n`: the symmetric table first, then the signed
/// ones. Degree 4 has six signed tables, one per arrangement of `s, t, u`
/// after `r`.
pub fn permutation_tables(n: usize) -> Result<Vec<PermutationTable>, RootError> {
    let id = Rotor::IDENTITY;
    match n {
        2 => Ok(vec![
            PermutationTable::new(&[id, id], CYCLIC2),
            PermutationTable::new(&[id, Rotor::DASHV], CYCLIC2),
        ]),
        3 => Ok(vec![
            PermutationTable::new(&[id, id, id], CYCLIC3),
            PermutationTable::new(&[id, Rotor::SLASH, Rotor::ASLASH], CYCLIC3),
            PermutationTable::new(&[id, Rotor::ASLASH, Rotor::SLASH], CYCLIC3),
        ]),
        4 => {
            let mut tables = vec![PermutationTable::new(&[id; 4], QUARTIC_ARRANGEMENTS[0])];
            tables.extend(
                QUARTIC_ARRANGEMENTS
                    .iter()
                    .map(|rows| PermutationTable::new(&QUARTIC_SIGNATURE, rows)),
            );
            Ok(tables)
        }
        _ => Err(RootError::UnsupportedDegree(n)),
    }
}

/// One σ per row of `table`.
pub fn sigma_from_roots(
    roots: &[Complex],
    table: &PermutationTable,
) -> Result<Vec<Complex>, RootError> {
    if roots.len() != table.width() {
        return Err(RootError::ArityMismatch {
            expected: table.width(),
            got: roots.len(),
        });
    }
    Ok(table
        .rows
        .iter()
        .map(|row| {
            row.iter()
                .zip(&table.signature)
                .map(|(&label, rotor)| rotor.value() * roots[label])
                .sum()
        })
        .collect())
}

/// Roots recovered from σ values, in label order `r, s, t, u`.
#[derive(Clone, Debug, PartialEq)]
pub struct Reconstruction {
    pub roots: Vec<Complex>,
    /// Least-squares residual norm (degree 4); zero for the direct
    /// formulas of degrees 2 and 3.
    pub residual: f64,
}

/// Inverts [`sigma_from_roots`].
///
/// * `n = 2`: `sigmas = [σ1]`, `r, s = (c1 ± σ1)/2`.
/// * `n = 3`: `sigmas = [σ1, σ2]`, the root triple `(c2 + σ1 + σ2)/3`,
///   `(c2 ∖σ1 ⁄σ2)/3`, `(c2 ⁄σ1 ∖σ2)/3`.
/// * `n = 4`: `sigmas` holds the first-row σ of each of the six signed
///   tables. Together with `r + s + t + u = c3` these give seven linear
///   equations in four unknowns, solved in the least-squares sense.
pub fn roots_from_sigma(
    c_top: f64,
    sigmas: &[Complex],
    n: usize,
) -> Result<Reconstruction, RootError> {
    let expected = match n {
        2 => 1,
        3 => 2,
        4 => 6,
        _ => return Err(RootError::UnsupportedDegree(n)),
    };
    if sigmas.len() != expected {
        return Err(RootError::ArityMismatch {
            expected,
            got: sigmas.len(),
        });
    }
    let roots = match n {
        2 => vec![(c_top + sigmas[0]) / 2.0, (c_top - sigmas[0]) / 2.0],
        3 => cubic_from_sigmas(c_top, sigmas[0], sigmas[1]).to_vec(),
        _ => return quartic_from_sigmas(c_top, sigmas),
    };
    Ok(Reconstruction {
        roots,
        residual: 0.0,
    })
}

fn quartic_from_sigmas(c_top: f64, sigmas: &[Complex]) -> Result<Reconstruction, RootError> {
    let one = Complex::new(1.0, 0.0);
    let mut matrix = vec![vec![one; 4]];
    let mut rhs = vec![Complex::new(c_top, 0.0)];
    for (rows, &sigma) in QUARTIC_ARRANGEMENTS.iter().zip(sigmas) {
        let mut coeffs = vec![Complex::new(0.0, 0.0); 4];
        for (&label, rotor) in rows[0].iter().zip(&QUARTIC_SIGNATURE) {
            coeffs[label] += rotor.value();
        }
        matrix.push(coeffs);
        rhs.push(sigma);
    }
    let (roots, residual) = least_squares(&matrix, &rhs).ok_or(RootError::InconsistentSigmas {
        residual: f64::INFINITY,
    })?;
    let scale = 1.0 + sigmas.iter().fold(c_top.abs(), |m, s| m.max(s.norm()));
    if residual.is_nan() || residual > SIGMA_CONSISTENCY * scale {
        return Err(RootError::InconsistentSigmas { residual });
    }
    Ok(Reconstruction { roots, residual })
}
