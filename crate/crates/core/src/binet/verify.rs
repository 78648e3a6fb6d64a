//! Cross-checks every closed-form route against exact iteration.

use alloc::vec::Vec;

use super::{binet2, binet3, m_form, solve_weights, BinetError};
use crate::recurrence::Recurrence;
use crate::Complex;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalPath {
    Weights,
    Binet2,
    Binet3,
    MForm,
}

impl EvalPath {
    pub fn name(self) -> &'static str {
        match self {
            EvalPath::Weights => "weights",
            EvalPath::Binet2 => "binet2",
            EvalPath::Binet3 => "binet3",
            EvalPath::MForm => "mform",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PathReport {
    pub path: EvalPath,
    /// `max_k |closed - x_k| / max(1, |x_k|)`.
    pub max_rel_err: f64,
    /// Index where the maximum occurred.
    pub worst_k: u32,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub kmax: u32,
    pub tolerance: f64,
    pub paths: Vec<PathReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.paths.iter().all(|p| p.pass)
    }

    pub fn path(&self, path: EvalPath) -> Option<&PathReport> {
        self.paths.iter().find(|p| p.path == path)
    }
}

fn compare(
    path: EvalPath,
    exact: &[f64],
    tolerance: f64,
    mut closed: impl FnMut(u32) -> Result<Complex, BinetError>,
) -> Result<PathReport, BinetError> {
    let mut report = PathReport {
        path,
        max_rel_err: 0.0,
        worst_k: 0,
        pass: true,
    };
    for (k, &x) in exact.iter().enumerate() {
        let k = k as u32;
        let err = (closed(k)? - x).norm() / 1f64.max(x.abs());
        // the first NaN counts as the worst error
        if err > report.max_rel_err || (err.is_nan() && !report.max_rel_err.is_nan()) {
            report.max_rel_err = err;
            report.worst_k = k;
        }
    }
    report.pass = report.max_rel_err <= tolerance;
    Ok(report)
}

/// Evaluates every applicable route for `k = 0..=kmax` and reports the
/// worst relative error of each: the weight solve always, `binet2` or
/// `binet3` for orders 2 and 3, and the M-expansion for orders 2 to 4.
pub fn verify(rec: &Recurrence, kmax: u32, rel_tol: f64) -> Result<VerifyReport, BinetError> {
    let exact = rec.iterate(kmax as usize + 1).to_f64_vec();
    let form = solve_weights(rec)?;
    let mut paths = Vec::new();
    paths.push(compare(EvalPath::Weights, &exact, rel_tol, |k| {
        Ok(form.closed_term(k).value)
    })?);
    match rec.order() {
        2 => paths.push(compare(EvalPath::Binet2, &exact, rel_tol, |k| {
            binet2(rec, k).map(|v| Complex::new(v, 0.0))
        })?),
        3 => paths.push(compare(EvalPath::Binet3, &exact, rel_tol, |k| {
            binet3(rec, k).map(|v| Complex::new(v, 0.0))
        })?),
        _ => {}
    }
    if (2..=4).contains(&rec.order()) {
        let mform = m_form(rec)?;
        paths.push(compare(EvalPath::MForm, &exact, rel_tol, |k| {
            Ok(mform.evaluate(k).value)
        })?);
    }
    Ok(VerifyReport {
        kmax,
        tolerance: rel_tol,
        paths,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rec(c: &[f64], x: &[f64]) -> Recurrence {
        Recurrence::new(c.to_vec(), x.to_vec()).unwrap()
    }

    fn names(report: &VerifyReport) -> Vec<&'static str> {
        report.paths.iter().map(|p| p.path.name()).collect()
    }

    #[test]
    fn fibonacci_passes() {
        let report = verify(&rec(&[1.0, 1.0], &[0.0, 1.0]), 70, 1e-9).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(names(&report), vec!["weights", "binet2", "mform"]);
    }

    #[test]
    fn tribonacci_passes() {
        let report = verify(&rec(&[1.0; 3], &[0.0, 1.0, 1.0]), 50, 1e-8).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(names(&report), vec!["weights", "binet3", "mform"]);
    }

    #[test]
    fn tetranacci_passes() {
        let report = verify(&rec(&[1.0; 4], &[0.0, 0.0, 0.0, 1.0]), 40, 1e-8).unwrap();
        assert!(report.path(EvalPath::Weights).unwrap().pass);
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn order_five_uses_weights_only() {
        let report = verify(&rec(&[1.0; 5], &[0.0, 0.0, 0.0, 0.0, 1.0]), 40, 1e-8).unwrap();
        assert_eq!(names(&report), vec!["weights"]);
        assert!(report.passed());
    }

    #[test]
    fn fractional_recurrence_passes() {
        let report = verify(&rec(&[0.5, 0.3], &[0.1, 0.7]), 60, 1e-12).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn degenerate_is_an_error() {
        assert!(matches!(
            verify(&rec(&[-1.0, 2.0], &[0.0, 1.0]), 10, 1e-8),
            Err(BinetError::DegenerateRoots { .. })
        ));
    }
}
