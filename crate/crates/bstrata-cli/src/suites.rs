//! The verification suites behind `bstrata verify`: each check runs one
//! documented equivalence at one rank (or one series identity at one
//! order) and reports a pass/fail with the first counterexample.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use bstrata_core::grid::StaircaseColoring;
use bstrata_core::pipes::{classify_cycles, kernel_dimension, tau_of_diagram, verify_lemma_tau};
use bstrata_core::series::{
    binomial, d_series_closed, d_series_sum, exp_x, fubini, stirling, stirling_by_alternating_sum,
    two_minus_exp_x, EgfSeries, PolyT, StrataSeries,
};
use bstrata_core::weyl::bruhat_interval;
use bstrata_core::word::{enumerate_cauchon, is_cauchon, sample_cauchon, Diagram, ReducedWord};
use bstrata_core::SignedPermutation;

/// Documented rank bounds per suite.
pub const LW_MAX_RANK: usize = 5;
pub const TAU_MAX_RANK: usize = 5;
pub const KERNEL_EXHAUSTIVE_MAX_RANK: usize = 5;
pub const KERNEL_SAMPLED_RANKS: [usize; 2] = [6, 7];
pub const KERNEL_SAMPLES: usize = 10_000;
pub const BRUHAT_MAX_RANK: usize = 4;

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bits: Option<String>,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    /// Rank or truncation order the check ran at, as a decimal string.
    pub scope: String,
    /// Number of individual comparisons performed.
    pub checked: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl CheckOutcome {
    fn pass(name: &str, scope: usize, checked: u64) -> Self {
        CheckOutcome {
            name: name.to_string(),
            scope: scope.to_string(),
            checked: checked.to_string(),
            passed: true,
            counterexample: None,
        }
    }

    fn fail(name: &str, scope: usize, checked: u64, counterexample: Counterexample) -> Self {
        CheckOutcome {
            name: name.to_string(),
            scope: scope.to_string(),
            checked: checked.to_string(),
            passed: false,
            counterexample: Some(counterexample),
        }
    }
}

/// Definition-scan test against the colored-tableau criterion, over every
/// one of the `2^t` subsets.
pub fn lw_check(n: usize) -> CheckOutcome {
    let word = ReducedWord::staircase(n).expect("valid rank");
    let mut checked = 0;
    for bits in 0..1u128 << word.len() {
        let d = Diagram::new(n, bits).expect("mask in range");
        let by_scan = is_cauchon(&word, &d).expect("ranks match");
        let by_tableau = StaircaseColoring::from_diagram(&word, &d)
            .expect("ranks match")
            .is_cauchon_lw();
        checked += 1;
        if by_scan != by_tableau {
            return CheckOutcome::fail(
                "lw",
                n,
                checked,
                Counterexample {
                    bits: Some(d.to_hex()),
                    expected: by_scan.to_string(),
                    actual: by_tableau.to_string(),
                },
            );
        }
    }
    CheckOutcome::pass("lw", n, checked)
}

/// `τ_Δ = w^Δ·w^{−1}` over every Cauchon diagram of one rank.
pub fn tau_check(n: usize) -> CheckOutcome {
    let word = ReducedWord::staircase(n).expect("valid rank");
    let mut failure: Option<Counterexample> = None;
    let w_inv = word.max_element().inverse();
    let checked = enumerate_cauchon(&word, |d, wd| {
        if failure.is_some() {
            return;
        }
        if !verify_lemma_tau(&word, d).expect("Cauchon diagram") {
            let t = tau_of_diagram(&word, d).expect("Cauchon diagram");
            failure = Some(Counterexample {
                bits: Some(d.to_hex()),
                expected: wd.compose(&w_inv).expect("equal ranks").window_string(),
                actual: t.window_string(),
            });
        }
    });
    match failure {
        None => CheckOutcome::pass("tau", n, checked),
        Some(c) => CheckOutcome::fail("tau", n, checked, c),
    }
}

fn kernel_compare(word: &ReducedWord, d: &Diagram) -> Result<(), Counterexample> {
    let t = tau_of_diagram(word, d).expect("Cauchon diagram");
    let by_cycles = classify_cycles(&t).dimension;
    let by_kernel = kernel_dimension(&t);
    if by_cycles == by_kernel {
        Ok(())
    } else {
        Err(Counterexample {
            bits: Some(d.to_hex()),
            expected: by_kernel.to_string(),
            actual: by_cycles.to_string(),
        })
    }
}

/// Cycle-formula dimension against the exact kernel dimension, for every
/// Cauchon diagram of one rank.
pub fn kernel_check_exhaustive(n: usize) -> CheckOutcome {
    let word = ReducedWord::staircase(n).expect("valid rank");
    let mut failure: Option<Counterexample> = None;
    let checked = enumerate_cauchon(&word, |d, _| {
        if failure.is_none() {
            if let Err(c) = kernel_compare(&word, d) {
                failure = Some(c);
            }
        }
    });
    match failure {
        None => CheckOutcome::pass("kernel", n, checked),
        Some(c) => CheckOutcome::fail("kernel", n, checked, c),
    }
}

/// The same comparison over seeded random Cauchon diagrams.
pub fn kernel_check_sampled(n: usize, seed: u64, samples: usize) -> CheckOutcome {
    let word = ReducedWord::staircase(n).expect("valid rank");
    let mut failure: Option<Counterexample> = None;
    let mut checked = 0;
    sample_cauchon(&word, seed ^ n as u64, samples, |d, _| {
        checked += 1;
        if failure.is_none() {
            if let Err(c) = kernel_compare(&word, d) {
                failure = Some(c);
            }
        }
    });
    match failure {
        None => CheckOutcome::pass("kernel-sampled", n, checked),
        Some(c) => CheckOutcome::fail("kernel-sampled", n, checked, c),
    }
}

/// `Δ ↦ w^Δ` is injective with image exactly the Bruhat interval
/// `[id, w_max]`.
pub fn bruhat_check(n: usize) -> CheckOutcome {
    let word = ReducedWord::staircase(n).expect("valid rank");
    let mut images: Vec<SignedPermutation> = Vec::new();
    let checked = enumerate_cauchon(&word, |_, wd| images.push(wd.clone()));
    let image_set: std::collections::BTreeSet<SignedPermutation> = images.iter().cloned().collect();
    if image_set.len() != images.len() {
        return CheckOutcome::fail(
            "bruhat",
            n,
            checked,
            Counterexample {
                bits: None,
                expected: format!("{} distinct images", images.len()),
                actual: format!("{} distinct images", image_set.len()),
            },
        );
    }
    let interval = bruhat_interval(&word.max_element());
    if image_set != interval {
        return CheckOutcome::fail(
            "bruhat",
            n,
            checked,
            Counterexample {
                bits: None,
                expected: format!("interval of size {}", interval.len()),
                actual: format!("image of size {}", image_set.len()),
            },
        );
    }
    CheckOutcome::pass("bruhat", n, checked)
}

/// Series self-consistency: the component-weight series both ways to order
/// 12, the Stirling recurrence against the alternating sum to `n = 20`,
/// exp/log inversion to order 20, the inverse-square-root binomial
/// expansion to order 20, and the totals identity `p_n(1) = 2·Fubini(n)`
/// to order 25.
pub fn series_checks() -> Vec<CheckOutcome> {
    let mut out = Vec::new();

    out.push(series_equality_check(
        "series:d-sum-vs-closed",
        12,
        &d_series_sum(12),
        &d_series_closed(12),
    ));

    // Stirling recurrence vs alternating sum
    let mut checked = 0;
    let mut failure = None;
    'stirling: for n in 0..=20usize {
        for j in 0..=n {
            checked += 1;
            let by_recurrence = stirling(n, j).expect("j ≤ n");
            let by_sum = stirling_by_alternating_sum(n, j).expect("j ≤ n");
            if !by_sum.is_integer() || by_sum.to_integer() != by_recurrence {
                failure = Some(Counterexample {
                    bits: None,
                    expected: by_recurrence.to_string(),
                    actual: by_sum.to_string(),
                });
                break 'stirling;
            }
        }
    }
    out.push(match failure {
        None => CheckOutcome::pass("series:stirling", 20, checked),
        Some(c) => CheckOutcome::fail("series:stirling", 20, checked, c),
    });

    // exp/log inversion at order 20, on x and on the weight series
    let x = EgfSeries::x(20);
    let exp_then_log = exp_x(20).log().expect("constant term one");
    out.push(series_equality_check("series:log-exp-x", 20, &exp_then_log, &x));
    let d = d_series_closed(20);
    let roundtrip = d.exp().expect("constant term zero").log().expect("constant term one");
    out.push(series_equality_check("series:exp-log-roundtrip", 20, &roundtrip, &d));

    // (2−e^x)^{−1/2} = Σ_j C(2j,j)(e^x−1)^j/4^j at order 20
    let order = 20;
    let lhs = two_minus_exp_x(order)
        .pow_poly(&PolyT::constant(BigRational::new(BigInt::from(-1), BigInt::from(2))))
        .expect("constant term one");
    let e_minus_one = exp_x(order).sub(&EgfSeries::one(order)).expect("orders match");
    let mut rhs = EgfSeries::one(order);
    let mut power = EgfSeries::one(order);
    for j in 1..=order {
        power = power.mul(&e_minus_one).expect("orders match");
        let c = BigRational::new(binomial(2 * j, j), num_traits::pow(BigInt::from(4), j));
        rhs = rhs.add(&power.scale(&c)).expect("orders match");
    }
    out.push(series_equality_check("series:binomial-inverse-sqrt", order, &lhs, &rhs));

    // totals identity p_n(1) = 2·Fubini(n) at order 25
    let strata = StrataSeries::new(25);
    let mut checked = 0;
    let mut failure = None;
    for n in 1..=25usize {
        checked += 1;
        let total = strata.total(n).expect("within order");
        let doubled = BigInt::from(2) * fubini(n);
        if total != doubled {
            failure = Some(Counterexample {
                bits: None,
                expected: doubled.to_string(),
                actual: total.to_string(),
            });
            break;
        }
    }
    out.push(match failure {
        None => CheckOutcome::pass("series:totals-vs-fubini", 25, checked),
        Some(c) => CheckOutcome::fail("series:totals-vs-fubini", 25, checked, c),
    });

    out
}

fn series_equality_check(name: &str, order: usize, left: &EgfSeries, right: &EgfSeries) -> CheckOutcome {
    let mut checked = 0;
    for n in 0..=order {
        checked += 1;
        let l = left.coeff(n).expect("within order");
        let r = right.coeff(n).expect("within order");
        if l != r {
            return CheckOutcome::fail(
                name,
                order,
                checked,
                Counterexample {
                    bits: None,
                    expected: poly_string(r),
                    actual: poly_string(l),
                },
            );
        }
    }
    CheckOutcome::pass(name, order, checked)
}

/// Readable polynomial rendering for reports, e.g. `2 + 3t + t^2`.
pub fn poly_string(p: &PolyT) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (d, c) in p.coeffs().iter().enumerate() {
        if num_traits::Zero::is_zero(c) {
            continue;
        }
        let coeff = if c.is_integer() { c.numer().to_string() } else { c.to_string() };
        let part = match d {
            0 => coeff,
            1 if c.is_one() => "t".to_string(),
            1 => format!("{coeff}t"),
            _ if c.is_one() => format!("t^{d}"),
            _ => format!("{coeff}t^{d}"),
        };
        parts.push(part);
    }
    parts.join(" + ")
}
