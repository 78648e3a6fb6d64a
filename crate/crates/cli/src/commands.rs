use std::f64::consts::PI;

use serde_json::{json, Value};

use pseudo_binet::binet::{
    binet2, binet3, solve_weights_with, verify, BinetError, ClosedTerm, SNAP_LIMIT,
};
use pseudo_binet::expr::{self, ExprError};
use pseudo_binet::recurrence::{CharPoly, Recurrence, Sequence};
use pseudo_binet::roots::{
    characteristic_roots, resolvents, roots_from_sigma, Method, ResolventSet,
};
use pseudo_binet::unity::{compare_published, NamedGroup};
use pseudo_binet::Complex;

use crate::args::{List, MethodArg};
use crate::render::{complex, format_f64, int, num, object, Report};
use crate::CliError;

fn polynomial(coeffs: &List) -> Result<CharPoly, CliError> {
    CharPoly::new(coeffs.0.clone())
        .ok_or_else(|| CliError::Usage("--coeffs needs at least one value".into()))
}

fn recurrence(coeffs: &List, seeds: &List) -> Result<Recurrence, CliError> {
    if coeffs.0.len() != seeds.0.len() {
        return Err(CliError::Usage(format!(
            "--coeffs has {} values but --seeds has {}",
            coeffs.0.len(),
            seeds.0.len()
        )));
    }
    Recurrence::new(coeffs.0.clone(), seeds.0.clone()).map_err(CliError::domain)
}

fn root_method(method: Option<MethodArg>, command: &str) -> Result<Method, CliError> {
    match method {
        None | Some(MethodArg::Closed) => Ok(Method::Closed),
        Some(MethodArg::Numeric) => Ok(Method::Numeric),
        Some(MethodArg::Weights) => Err(CliError::Usage(format!(
            "--method weights does not apply to `{command}`"
        ))),
    }
}

/// Principal argument in `(-π, π]`.
fn principal_arg(z: Complex) -> f64 {
    if z.im == 0.0 && z.re < 0.0 {
        PI
    } else {
        z.arg()
    }
}

fn expr_error(text: &str, err: ExprError) -> CliError {
    let mut message = err.to_string();
    if let Some(span) = err.span() {
        let column = text
            .get(..span.start)
            .map_or(span.start, |prefix| prefix.chars().count());
        let width = text
            .get(span.start..span.end)
            .map_or(1, |s| s.chars().count().max(1));
        message.push_str(&format!(
            "\n  {text}\n  {}{}",
            " ".repeat(column),
            "^".repeat(width)
        ));
    }
    CliError::Domain(message)
}

pub fn eval(text: &str) -> Result<Report, CliError> {
    let parsed = expr::parse(text).map_err(|e| expr_error(text, e))?;
    let z = parsed.evaluate().map_err(|e| expr_error(text, e))?;
    let (modulus, arg) = (z.norm(), principal_arg(z));
    let json = json!({
        "expr": expr::format(&parsed),
        "re": num(z.re),
        "im": num(z.im),
        "mod": num(modulus),
        "arg": num(arg),
    });
    let mut report = Report::new(json, &["re", "im", "mod", "arg"]);
    report.row([z.re, z.im, modulus, arg].map(format_f64).to_vec());
    Ok(report)
}

fn resolvent_json(set: &ResolventSet) -> Value {
    object([
        ("degree", json!(set.degree)),
        ("sigma", set.sigmas.iter().map(|&s| complex(s)).collect()),
        ("A", set.a.map_or(Value::Null, num)),
        ("B", set.b.map_or(Value::Null, num)),
        (
            "branch_defect",
            set.branch_defect().map_or(Value::Null, num),
        ),
    ])
}

pub fn roots(coeffs: &List, method: Option<MethodArg>) -> Result<Report, CliError> {
    let poly = polynomial(coeffs)?;
    let set =
        characteristic_roots(&poly, root_method(method, "roots")?).map_err(CliError::domain)?;
    let roots: Vec<Value> = set
        .roots
        .iter()
        .zip(&set.residuals)
        .map(|(r, &res)| json!({ "re": num(r.re), "im": num(r.im), "residual": num(res) }))
        .collect();
    let resolvent = match poly.degree() {
        2 | 3 => resolvent_json(&resolvents(&poly).map_err(CliError::domain)?),
        _ => Value::Null,
    };
    let json = object([
        ("polynomial", json!(poly.to_string())),
        ("method", json!(set.method.name())),
        ("roots", Value::Array(roots)),
        ("min_separation", num(set.min_separation)),
        ("resolvents", resolvent),
    ]);
    let mut report = Report::new(json, &["index", "re", "im", "residual"]);
    for (j, (r, &res)) in set.roots.iter().zip(&set.residuals).enumerate() {
        report.row(vec![
            j.to_string(),
            format_f64(r.re),
            format_f64(r.im),
            format_f64(res),
        ]);
    }
    Ok(report)
}

pub fn solve(coeffs: &List, seeds: &List, method: Option<MethodArg>) -> Result<Report, CliError> {
    let rec = recurrence(coeffs, seeds)?;
    let method = match method {
        Some(MethodArg::Weights) => Method::Closed,
        other => root_method(other, "solve")?,
    };
    let form = solve_weights_with(&rec, method).map_err(CliError::domain)?;
    let roots = &form.roots().roots;
    let weights = form.weights();
    let constant = form.constant();
    let json = object([
        ("order", json!(rec.order())),
        ("method", json!(form.roots().method.name())),
        ("roots", roots.iter().map(|&r| complex(r)).collect()),
        (
            "weights",
            weights[..roots.len()].iter().map(|&w| complex(w)).collect(),
        ),
        ("constant", complex(constant)),
    ]);
    let mut report = Report::new(json, &["role", "index", "re", "im"]);
    let cells = |role: &str, j: usize, z: Complex| {
        vec![
            role.to_string(),
            j.to_string(),
            format_f64(z.re),
            format_f64(z.im),
        ]
    };
    for (j, &r) in roots.iter().enumerate() {
        report.row(cells("root", j, r));
    }
    for (j, &w) in weights[..roots.len()].iter().enumerate() {
        report.row(cells("weight", j, w));
    }
    report.row(cells("constant", roots.len(), constant));
    Ok(report)
}

fn snap_real(value: f64, integral: bool) -> ClosedTerm {
    let (nearest, distance) = if integral && value.abs() < SNAP_LIMIT {
        let nearest = value.round();
        (Some(nearest as i64), Some((value - nearest).abs()))
    } else {
        (None, None)
    };
    ClosedTerm {
        value: Complex::new(value, 0.0),
        nearest,
        distance,
    }
}

fn closed_term(
    rec: &Recurrence,
    k: u32,
    method: Option<MethodArg>,
) -> Result<(&'static str, ClosedTerm), BinetError> {
    let integral = rec.is_integral();
    match (method, rec.order()) {
        (None | Some(MethodArg::Closed), 2) => Ok(("binet2", snap_real(binet2(rec, k)?, integral))),
        (None | Some(MethodArg::Closed), 3) => Ok(("binet3", snap_real(binet3(rec, k)?, integral))),
        (Some(MethodArg::Numeric), _) => Ok((
            "weights",
            solve_weights_with(rec, Method::Numeric)?.closed_term(k),
        )),
        _ => Ok((
            "weights",
            solve_weights_with(rec, Method::Closed)?.closed_term(k),
        )),
    }
}

fn term_value(seq: &Sequence, k: usize) -> (Value, String) {
    match seq {
        Sequence::Exact(v) => (int(&v[k]), v[k].to_string()),
        Sequence::Float(v) => (num(v[k]), format_f64(v[k])),
    }
}

pub fn term(
    coeffs: &List,
    seeds: &List,
    k: u32,
    method: Option<MethodArg>,
) -> Result<Report, CliError> {
    let rec = recurrence(coeffs, seeds)?;
    let (path, closed) = closed_term(&rec, k, method).map_err(CliError::domain)?;
    let seq = rec.iterate(k as usize + 1);
    let (exact, exact_text) = term_value(&seq, k as usize);
    let json = object([
        ("k", json!(k)),
        ("path", json!(path)),
        ("closed", complex(closed.value)),
        ("nearest", closed.nearest.map_or(Value::Null, |n| json!(n))),
        ("distance", closed.distance.map_or(Value::Null, num)),
        ("integral", json!(rec.is_integral())),
        ("exact", exact),
    ]);
    let mut report = Report::new(json, &["k", "closed_re", "closed_im", "nearest", "exact"]);
    report.row(vec![
        k.to_string(),
        format_f64(closed.value.re),
        format_f64(closed.value.im),
        closed.nearest.map_or_else(String::new, |n| n.to_string()),
        exact_text,
    ]);
    Ok(report)
}

pub fn seq(coeffs: &List, seeds: &List, count: usize) -> Result<Report, CliError> {
    let rec = recurrence(coeffs, seeds)?;
    let seq = rec.iterate(count);
    let terms: Vec<(Value, String)> = (0..seq.len()).map(|k| term_value(&seq, k)).collect();
    let json = object([
        ("count", json!(count)),
        ("integral", json!(rec.is_integral())),
        (
            "terms",
            terms
                .iter()
                .enumerate()
                .map(|(k, (v, _))| json!({ "k": k, "value": v }))
                .collect(),
        ),
    ]);
    let mut report = Report::new(json, &["k", "value"]);
    for (k, (_, text)) in terms.into_iter().enumerate() {
        report.row(vec![k.to_string(), text]);
    }
    Ok(report)
}

/// The report, plus whether every path passed.
pub fn verify_cmd(
    coeffs: &List,
    seeds: &List,
    kmax: u32,
    tol: f64,
) -> Result<(Report, bool), CliError> {
    let rec = recurrence(coeffs, seeds)?;
    let result = verify(&rec, kmax, tol).map_err(CliError::domain)?;
    let paths = result
        .paths
        .iter()
        .map(|p| {
            (
                p.path.name().to_string(),
                json!({ "max_rel_err": num(p.max_rel_err), "worst_k": p.worst_k, "pass": p.pass }),
            )
        })
        .collect::<serde_json::Map<_, _>>();
    let json = object([
        ("kmax", json!(kmax)),
        ("tol", num(tol)),
        ("pass", json!(result.passed())),
        ("paths", Value::Object(paths)),
    ]);
    let mut report = Report::new(json, &["path", "max_rel_err", "worst_k", "pass"]);
    for p in &result.paths {
        report.row(vec![
            p.path.name().to_string(),
            format_f64(p.max_rel_err),
            p.worst_k.to_string(),
            p.pass.to_string(),
        ]);
    }
    Ok((report, result.passed()))
}

pub fn table(group: NamedGroup) -> Report {
    let table = group.table();
    let notation = group.notation();
    let labels: Vec<String> = table
        .elements()
        .iter()
        .map(|&r| notation.label(r))
        .collect();
    let n = table.order();
    let cells: Vec<Vec<String>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| notation.label(table.product(i, j)))
                .collect()
        })
        .collect();
    let axioms = table.axioms();
    let discrepancies = compare_published(group).map_or(Value::Null, |found| {
        found
            .iter()
            .map(|d| {
                json!({
                    "row": notation.label(d.row),
                    "column": notation.label(d.column),
                    "published": d.published,
                    "computed": notation.label(d.computed),
                    "letter_swap": d.letter_swap,
                })
            })
            .collect()
    });
    let json = object([
        ("group", json!(group.name())),
        ("order", json!(n)),
        ("elements", json!(labels)),
        ("table", json!(cells)),
        (
            "axioms",
            json!({
                "closure": axioms.closure,
                "associativity": axioms.associativity,
                "identity": axioms.identity,
                "inverses": axioms.inverses,
                "group": axioms.is_group(),
            }),
        ),
        ("discrepancies", discrepancies),
    ]);
    let mut header = vec!["row".to_string()];
    header.extend(labels.iter().cloned());
    let mut report = Report::new(json, &[]);
    report.header = header;
    for (label, row) in labels.into_iter().zip(cells) {
        let mut line = vec![label];
        line.extend(row);
        report.row(line);
    }
    report
}

pub fn sigma(coeffs: &List) -> Result<Report, CliError> {
    let poly = polynomial(coeffs)?;
    let set = resolvents(&poly).map_err(CliError::domain)?;
    let c_top = *poly.coeffs().last().expect("degree is at least one");
    // degree 2 carries [σ1, -σ1]; only σ1 is independent
    let independent = if set.degree == 2 {
        &set.sigmas[..1]
    } else {
        &set.sigmas[..]
    };
    let rebuilt = roots_from_sigma(c_top, independent, set.degree).map_err(CliError::domain)?;
    let mut json = resolvent_json(&set);
    json["roots"] = rebuilt.roots.iter().map(|&r| complex(r)).collect();
    let mut report = Report::new(json, &["name", "re", "im"]);
    for (j, s) in set.sigmas.iter().enumerate() {
        report.row(vec![
            format!("sigma{}", j + 1),
            format_f64(s.re),
            format_f64(s.im),
        ]);
    }
    for (name, value) in [("A", set.a), ("B", set.b)] {
        if let Some(v) = value {
            report.row(vec![name.to_string(), format_f64(v), format_f64(0.0)]);
        }
    }
    Ok(report)
}
