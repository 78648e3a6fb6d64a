//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Random inputs come from fixed ChaCha seeds.

use std::f64::consts::PI;
use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pseudo_binet::binet::{binet2, binet3, m_form, solve_weights};
use pseudo_binet::expr::{evaluate_str, format, parse, Constant, Expr, ExprError, OpSym};
use pseudo_binet::recurrence::{Recurrence, Sequence};
use pseudo_binet::roots::{
    cubic_resolvents, cubic_roots, matched_distance, numeric_roots, permutation_tables,
    roots_from_sigma, sigma_from_roots, DEFAULT_TOLERANCE,
};
use pseudo_binet::unity::{compare_published, cyclic_closure, roots_sum, NamedGroup, Rotor};
use pseudo_binet::{BigInt, Complex};

type Outcome = Result<String, String>;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn rec(c: &[f64], x: &[f64]) -> Recurrence {
    Recurrence::new(c.to_vec(), x.to_vec()).expect("valid recurrence")
}

fn exact(r: &Recurrence, count: usize) -> Vec<BigInt> {
    match r.iterate(count) {
        Sequence::Exact(v) => v,
        Sequence::Float(_) => panic!("integral recurrence expected"),
    }
}

fn big_to_f64(x: &BigInt) -> f64 {
    x.to_string().parse().expect("integers parse as f64")
}

/// Largest relative error of `closed` against the exact iterates, and
/// whether every rounded value equals its iterate.
fn compare_exact(terms: &[BigInt], mut closed: impl FnMut(u32) -> f64) -> (f64, bool) {
    let mut worst = 0.0f64;
    let mut rounded_ok = true;
    for (k, x) in terms.iter().enumerate() {
        let value = closed(k as u32);
        let xf = big_to_f64(x);
        worst = worst.max((value - xf).abs() / xf.abs().max(1.0));
        rounded_ok &= BigInt::from(value.round() as i64) == *x;
    }
    (worst, rounded_ok)
}

fn criterion_1() -> Outcome {
    let output = Command::new(env!("CARGO_BIN_EXE_pbinet"))
        .args(["eval", "2 / 3"])
        .output()
        .map_err(|e| e.to_string())?;
    let v: serde_json::Value = serde_json::from_slice(&output.stdout).map_err(|e| e.to_string())?;
    let modulus = v["mod"].as_f64().ok_or("missing mod")?;
    let arg = v["arg"].as_f64().ok_or("missing arg")?;
    let angle = 2.0 * PI / 3.0;
    let direct = Complex::new(2.0 + 3.0 * angle.cos(), 3.0 * angle.sin());
    let dm = (modulus - direct.norm())
        .abs()
        .max((modulus - 7f64.sqrt()).abs());
    let da = (arg - direct.im.atan2(direct.re))
        .abs()
        .max((arg - (3.0 * 3f64.sqrt()).atan()).abs());
    check(
        output.status.success() && dm <= 1e-12 && da <= 1e-12,
        format!("pbinet eval \"2 / 3\": |mod - √7| = {dm:.1e}, |arg - atan(3√3)| = {da:.1e}"),
    )
}

fn criterion_2() -> Outcome {
    let worst = (2..=12)
        .flat_map(|n| [roots_sum(n, false).norm(), roots_sum(n, true).norm()])
        .fold(0.0f64, f64::max);
    check(
        worst <= 1e-12,
        format!("max |Σ roots| over n = 2..12, z^n = ±1: {worst:.1e}"),
    )
}

fn criterion_3() -> Outcome {
    let mut problems = Vec::new();
    for group in [NamedGroup::R3, NamedGroup::R4] {
        if compare_published(group) != Some(vec![]) {
            problems.push(format!("{} differs from its printed table", group.name()));
        }
    }
    for (group, generator, order) in [
        (NamedGroup::Union3, Rotor::PSEUDO_I, 6),
        (NamedGroup::Union8, Rotor::PSEUDO_J, 8),
    ] {
        let table = group.table();
        let mut elements = group.elements();
        let mut closure = cyclic_closure(generator);
        elements.sort();
        closure.sort();
        if !table.axioms().is_group() || table.order() != order || elements != closure {
            problems.push(format!(
                "{} is not the cyclic group of order {order}",
                group.name()
            ));
        }
        // every product against plain complex multiplication
        for i in 0..order {
            for j in 0..order {
                let a = table.elements()[i].value() * table.elements()[j].value();
                if (table.product(i, j).value() - a).norm() > 1e-12 {
                    problems.push(format!("{} cell ({i},{j}) is wrong", group.name()));
                }
            }
        }
    }
    let notation = NamedGroup::Union8.notation();
    let mut cells: Vec<(String, String)> = compare_published(NamedGroup::Union8)
        .unwrap_or_default()
        .iter()
        .filter(|d| d.letter_swap)
        .map(|d| (notation.label(d.row), notation.label(d.column)))
        .collect();
    cells.sort();
    let expected: Vec<(String, String)> = [
        ("=1", "=J"),
        ("_1", "=J"),
        ("_1", "_J"),
        ("_1", "~J"),
        ("_J", "=1"),
    ]
    .iter()
    .map(|(r, c)| (r.to_string(), c.to_string()))
    .collect();
    let found = compare_published(NamedGroup::Union8).map_or(0, |d| d.len());
    if cells != expected || found != expected.len() {
        problems.push(format!("union8 discrepancies at {cells:?}"));
    }
    if compare_published(NamedGroup::Union3) != Some(vec![]) {
        problems.push("union3 differs from its printed table".into());
    }
    check(
        problems.is_empty(),
        if problems.is_empty() {
            "R3, R4 match the printed tables; unions are cyclic of orders 6 and 8; union8 misprints only at its 5 I/J cells".into()
        } else {
            problems.join("; ")
        },
    )
}

fn criterion_4() -> Outcome {
    let a = evaluate_str("1 / 1 \\ 1")
        .map_err(|e| e.to_string())?
        .norm();
    let b = evaluate_str("1 _ 1 ~ 1 = 1")
        .map_err(|e| e.to_string())?
        .norm();
    check(
        a <= 1e-14 && b <= 1e-14,
        format!("|1 / 1 \\ 1| = {a:.1e}, |1 _ 1 ~ 1 = 1| = {b:.1e}"),
    )
}

fn criterion_5() -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for (name, seeds) in [("Fibonacci", [0.0, 1.0]), ("Lucas", [2.0, 1.0])] {
        let r = rec(&[1.0, 1.0], &seeds);
        let terms = exact(&r, 71);
        let (err, rounded) = compare_exact(&terms, |k| binet2(&r, k).unwrap_or(f64::NAN));
        ok &= rounded && err <= 1e-9;
        details.push(format!(
            "{name} k ≤ 70 rel err {err:.1e}, rounding exact: {rounded}"
        ));
    }
    check(ok, details.join("; "))
}

fn criterion_6() -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for (name, seeds) in [
        ("Tribonacci", [0.0, 1.0, 1.0]),
        ("tri-Lucas", [3.0, 1.0, 3.0]),
    ] {
        let r = rec(&[1.0; 3], &seeds);
        let terms = exact(&r, 51);
        let (err, rounded) = compare_exact(&terms, |k| binet3(&r, k).unwrap_or(f64::NAN));
        ok &= rounded && err <= 1e-8;
        details.push(format!(
            "{name} k ≤ 50 rel err {err:.1e}, rounding exact: {rounded}"
        ));
    }
    check(ok, details.join("; "))
}

fn criterion_7() -> Outcome {
    let r = rec(&[1.0; 4], &[0.0, 0.0, 0.0, 1.0]);
    let form = solve_weights(&r).map_err(|e| e.to_string())?;
    let mform = m_form(&r).map_err(|e| e.to_string())?;
    let terms = exact(&r, 41);
    let (err, _) = compare_exact(&terms, |k| form.closed_term(k).value.re);
    let agree = (0..=40u32)
        .map(|k| {
            let w = form.closed_term(k).value;
            (mform.evaluate(k).value - w).norm() / w.norm().max(1.0)
        })
        .fold(0.0f64, f64::max);
    check(
        err <= 1e-8 && agree <= 1e-8,
        format!("Tetranacci k ≤ 40: weights rel err {err:.1e}, M-form vs weights {agree:.1e}"),
    )
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut worst_match, mut worst_branch) = (0.0f64, 0.0f64);
    for _ in 0..1000 {
        let [c0, c1, c2] = [(); 3].map(|_| rng.gen_range(-5.0..=5.0));
        let closed = cubic_roots(c0, c1, c2).map_err(|e| e.to_string())?;
        let poly = rec(&[c0, c1, c2], &[0.0; 3]).characteristic_polynomial();
        let numeric = numeric_roots(&poly, DEFAULT_TOLERANCE).map_err(|e| e.to_string())?;
        worst_match = worst_match.max(matched_distance(&closed.roots, &numeric.roots));
        let set = cubic_resolvents(c0, c1, c2).map_err(|e| e.to_string())?;
        let b = c2 * c2 + 3.0 * c1;
        worst_branch =
            worst_branch.max((set.sigmas[0] * set.sigmas[1] - b).norm() / (1.0 + b.abs()));
    }
    let trib = cubic_resolvents(1.0, 1.0, 1.0).map_err(|e| e.to_string())?;
    let dominant = cubic_roots(1.0, 1.0, 1.0)
        .map_err(|e| e.to_string())?
        .dominant();
    let tribonacci = rec(&[1.0; 3], &[0.0, 1.0, 1.0]);
    let dk = numeric_roots(&tribonacci.characteristic_polynomial(), DEFAULT_TOLERANCE)
        .map_err(|e| e.to_string())?
        .dominant();
    let ratio = tribonacci
        .characteristic_ratio(200)
        .map_err(|e| e.to_string())?;
    let oracle_gap = (dk.re - ratio).abs();
    let gap = (dominant.re - 1.8392867552)
        .abs()
        .max((dominant - dk).norm());
    check(
        worst_match <= 1e-8
            && worst_branch <= 1e-9
            && trib.a == Some(38.0)
            && trib.b == Some(4.0)
            && gap <= 1e-9
            && oracle_gap <= 1e-9,
        format!(
            "1000 cubics: closed vs numeric {worst_match:.1e}, σ1σ2 - B {worst_branch:.1e}; \
             (1,1,1): A = {:?}, B = {:?}, dominant {:.10} (DK {:.10}, ratio {:.10})",
            trib.a, trib.b, dominant.re, dk.re, ratio
        ),
    )
}

/// Random roots closed under conjugation, in random label order.
fn real_root_set(rng: &mut ChaCha8Rng, n: usize) -> Vec<Complex> {
    let mut roots = Vec::with_capacity(n);
    while roots.len() < n {
        let re = rng.gen_range(-3.0..3.0);
        if roots.len() + 2 <= n && rng.gen_bool(0.5) {
            let im = rng.gen_range(0.1..3.0);
            roots.extend([Complex::new(re, im), Complex::new(re, -im)]);
        } else {
            roots.push(Complex::new(re, 0.0));
        }
    }
    for j in (1..n).rev() {
        roots.swap(j, rng.gen_range(0..=j));
    }
    roots
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut details = Vec::new();
    let mut ok = true;
    for (n, tol) in [(2, 1e-10), (3, 1e-10), (4, 1e-8)] {
        let tables = permutation_tables(n).map_err(|e| e.to_string())?;
        let mut worst = 0.0f64;
        for _ in 0..1000 {
            let roots = real_root_set(&mut rng, n);
            let c_top = roots.iter().sum::<Complex>().re;
            let sigmas: Vec<Complex> = tables[1..]
                .iter()
                .map(|t| sigma_from_roots(&roots, t).map(|s| s[0]))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            let rebuilt = roots_from_sigma(c_top, &sigmas, n).map_err(|e| e.to_string())?;
            for (a, b) in rebuilt.roots.iter().zip(&roots) {
                worst = worst.max((a - b).norm());
            }
        }
        ok &= worst <= tol;
        details.push(format!("n = {n}: {worst:.1e}"));
    }
    check(
        ok,
        format!(
            "1000 round trips each, worst root error {}",
            details.join(", ")
        ),
    )
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let (mut accepted, mut worst) = (0, 0.0f64);
    while accepted < 200 {
        let n = 2 + accepted % 3;
        let c: Vec<f64> = (0..n)
            .map(|_| f64::from(rng.gen_range(-4i32..=4)))
            .collect();
        let x: Vec<f64> = (0..n)
            .map(|_| f64::from(rng.gen_range(-9i32..=9)))
            .collect();
        let r = rec(&c, &x);
        let roots = numeric_roots(&r.characteristic_polynomial(), DEFAULT_TOLERANCE)
            .map_err(|e| e.to_string())?;
        if roots.min_separation < 1e-3 || roots.roots.iter().any(|z| (z - 1.0).norm() < 1e-3) {
            continue;
        }
        let form = solve_weights(&r).map_err(|e| format!("{r:?}: {e}"))?;
        worst = worst.max(form.constant().norm() / r.seed_scale());
        accepted += 1;
    }
    check(
        worst <= 1e-9,
        format!("200 integral recurrences of orders 2 to 4: max |w_(n+1)| / scale = {worst:.1e}"),
    )
}

fn criterion_11() -> Outcome {
    let fib = rec(&[1.0, 1.0], &[0.0, 1.0]);
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let fib_gap = (fib.characteristic_ratio(90).map_err(|e| e.to_string())? - phi).abs();
    let tetra = rec(&[1.0; 4], &[0.0, 0.0, 0.0, 1.0]);
    let dominant = numeric_roots(&tetra.characteristic_polynomial(), DEFAULT_TOLERANCE)
        .map_err(|e| e.to_string())?
        .dominant();
    let tetra_gap =
        (tetra.characteristic_ratio(90).map_err(|e| e.to_string())? - dominant.re).abs();
    check(
        fib_gap <= 1e-12 && tetra_gap <= 1e-8,
        format!(
            "Fibonacci ratio vs φ {fib_gap:.1e}; Tetranacci ratio vs dominant root {tetra_gap:.1e}"
        ),
    )
}

fn random_expr(rng: &mut ChaCha8Rng, depth: u32) -> Expr {
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..4) {
            0 => Expr::Number(f64::from(rng.gen_range(0u32..100))),
            1 => Expr::Number(rng.gen_range(0.0..50.0)),
            2 => Expr::Const([Constant::I, Constant::J, Constant::SmallI][rng.gen_range(0..3)]),
            _ => Expr::Rot(rng.gen_range(-24..24), rng.gen_range(1..25)),
        };
    }
    match rng.gen_range(0..3) {
        0 => Expr::Chain(
            (0..rng.gen_range(1..5))
                .map(|_| {
                    let op = OpSym::ALL[rng.gen_range(0..OpSym::ALL.len())];
                    (op, random_expr(rng, depth - 1))
                })
                .collect(),
        ),
        1 => Expr::Mul(
            Box::new(random_expr(rng, depth - 1)),
            Box::new(random_expr(rng, depth - 1)),
        ),
        _ => Expr::Pow(Box::new(random_expr(rng, depth - 1)), rng.gen_range(-3..=4)),
    }
}

fn criterion_12() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let tree = random_expr(&mut rng, 5);
        let text = format(&tree);
        let reparsed = parse(&text).map_err(|e| format!("{text}: {e}"))?;
        if format(&reparsed) != text {
            return Err(format!("format is not a fixed point for {text}"));
        }
        match (tree.evaluate(), reparsed.evaluate()) {
            (Ok(a), Ok(b)) => worst = worst.max((a - b).norm() / a.norm().max(1.0)),
            (Err(ExprError::NonFinite), Err(ExprError::NonFinite)) => {}
            (a, b) => return Err(format!("{text}: {a:?} vs {b:?}")),
        }
    }
    check(
        worst <= 1e-12,
        format!("10000 random trees: format∘parse fixed point, worst value drift {worst:.1e}"),
    )
}

fn main() {
    let criteria: [fn() -> Outcome; 12] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
        criterion_11,
        criterion_12,
    ];
    let mut failed = 0;
    for (index, criterion) in criteria.iter().enumerate() {
        match criterion() {
            Ok(detail) => println!("criterion {:>2}: PASS  {detail}", index + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {detail}", index + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
