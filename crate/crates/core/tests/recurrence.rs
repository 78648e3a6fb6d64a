use num_bigint::BigInt;
use proptest::prelude::*;

use pseudo_binet::recurrence::{from_general, Recurrence, RecurrenceError, Sequence};
use pseudo_binet::roots::{numeric_roots, DEFAULT_TOLERANCE};

fn integral_rec() -> impl Strategy<Value = Recurrence> {
    (1usize..6).prop_flat_map(|n| {
        (
            prop::collection::vec(-4i32..5, n),
            prop::collection::vec(-9i32..10, n),
        )
            .prop_map(|(c, x)| {
                Recurrence::new(
                    c.into_iter().map(f64::from).collect(),
                    x.into_iter().map(f64::from).collect(),
                )
                .unwrap()
            })
    })
}

fn exact(seq: &Sequence) -> &[BigInt] {
    match seq {
        Sequence::Exact(v) => v,
        Sequence::Float(_) => panic!("integral recurrences iterate exactly"),
    }
}

proptest! {
    #[test]
    fn shifted_seeds_give_the_shifted_sequence(rec in integral_rec(), len in 0usize..40) {
        let n = rec.order();
        let full = rec.iterate(len + n + 1);
        let full = exact(&full);
        let shifted_seeds: Vec<f64> = full[1..=n].iter().map(|x| x.to_string().parse().unwrap()).collect();
        let shifted = Recurrence::new(rec.coeffs().to_vec(), shifted_seeds).unwrap();
        let tail = shifted.iterate(len + n);
        prop_assert_eq!(exact(&tail), &full[1..]);
    }

    #[test]
    fn every_term_satisfies_the_recurrence(rec in integral_rec()) {
        let seq = rec.iterate(30);
        let terms = exact(&seq);
        let n = rec.order();
        for k in n..terms.len() {
            let expected: BigInt = rec
                .coeffs()
                .iter()
                .zip(&terms[k - n..k])
                .map(|(&c, x)| BigInt::from(c as i64) * x)
                .sum();
            prop_assert_eq!(&terms[k], &expected);
        }
    }

    #[test]
    fn float_iteration_tracks_exact_iteration(rec in integral_rec()) {
        let bumped: Vec<f64> = rec.seeds().iter().map(|x| x + 0.5).collect();
        let float = Recurrence::new(rec.coeffs().to_vec(), bumped.clone()).unwrap();
        let doubled = Recurrence::new(
            rec.coeffs().to_vec(),
            bumped.iter().map(|x| 2.0 * x).collect(),
        )
        .unwrap();
        let (f, d) = (float.iterate(20).to_f64_vec(), doubled.iterate(20).to_f64_vec());
        prop_assert!(matches!(float.iterate(1), Sequence::Float(_)));
        prop_assert!(matches!(doubled.iterate(1), Sequence::Exact(_)));
        for (a, b) in f.iter().zip(&d) {
            prop_assert!((2.0 * a - b).abs() <= 1e-9 * b.abs().max(1.0));
        }
    }

    #[test]
    fn positive_recurrences_approach_the_dominant_root(c in prop::collection::vec(1u32..5, 2..5)) {
        let n = c.len();
        let mut seeds = vec![0.0; n];
        seeds[n - 1] = 1.0;
        let rec = Recurrence::new(c.into_iter().map(f64::from).collect(), seeds).unwrap();
        let ratio = rec.characteristic_ratio(400).unwrap();
        let roots = numeric_roots(&rec.characteristic_polynomial(), DEFAULT_TOLERANCE).unwrap();
        prop_assert!((ratio - roots.dominant().re).abs() <= 1e-9, "{} vs {:?}", ratio, roots.roots);
    }
}

#[test]
fn fibonacci_ratio_reaches_the_golden_ratio() {
    let fib = Recurrence::new(vec![1.0, 1.0], vec![0.0, 1.0]).unwrap();
    let ratio = fib.characteristic_ratio(90).unwrap();
    assert!((ratio - (1.0 + 5f64.sqrt()) / 2.0).abs() <= 1e-12);
}

#[test]
fn exact_iteration_goes_past_floating_range() {
    let fib = Recurrence::new(vec![1.0, 1.0], vec![0.0, 1.0]).unwrap();
    let seq = fib.iterate(2001);
    // F(2000) has 418 digits
    assert_eq!(exact(&seq)[2000].to_string().len(), 418);
    assert_eq!(seq.value_f64(2000), f64::INFINITY);
    let ratio = fib.characteristic_ratio(2000).unwrap();
    assert!((ratio - (1.0 + 5f64.sqrt()) / 2.0).abs() <= 1e-15);
}

#[test]
fn ratio_needs_enough_iterations() {
    let fib = Recurrence::new(vec![1.0, 1.0], vec![0.0, 1.0]).unwrap();
    assert!(matches!(
        fib.characteristic_ratio(3),
        Err(RecurrenceError::TooFewIterations { .. })
    ));
}

#[test]
fn general_form_is_normalized() {
    // 2x_{k+2} = 2x_{k+1} + 2x_k
    assert_eq!(from_general(&[-2.0, -2.0, 2.0]).unwrap(), vec![1.0, 1.0]);
    assert!(from_general(&[1.0, 0.0]).is_err());
}
