//! Cross-module consistency at small rank: the bijection onto the Bruhat
//! interval, the pipe-dream lemma, the two diagram criteria, and the
//! agreement of cycle-formula dimensions with kernel dimensions and with
//! the generating function. The acceptance suite in `bstrata-cli` repeats
//! these at their full documented ranks.

use std::collections::{BTreeMap, BTreeSet};

use bstrata_core::grid::{StaircaseColoring, SymmetricGrid};
use bstrata_core::pipes::{classify_cycles, kernel_dimension, tau, tau_of_diagram, verify_lemma_tau};
use bstrata_core::series::StrataSeries;
use bstrata_core::weyl::bruhat_interval;
use bstrata_core::word::{enumerate_cauchon, is_cauchon, Diagram, ReducedWord};
use bstrata_core::SignedPermutation;

#[test]
fn w_delta_is_a_bijection_onto_the_bruhat_interval() {
    for n in 1..=3 {
        let word = ReducedWord::staircase(n).unwrap();
        let mut images: Vec<SignedPermutation> = Vec::new();
        enumerate_cauchon(&word, |_, wd| images.push(wd.clone()));
        let set: BTreeSet<SignedPermutation> = images.iter().cloned().collect();
        assert_eq!(set.len(), images.len(), "repeated w^Δ at rank {n}");
        let interval = bruhat_interval(&word.max_element());
        assert_eq!(set, interval, "image differs from [id, w] at rank {n}");
    }
}

#[test]
fn tau_equals_w_delta_times_w_inverse() {
    for n in 1..=4 {
        let word = ReducedWord::staircase(n).unwrap();
        let w_inv = word.max_element().inverse();
        enumerate_cauchon(&word, |d, wd| {
            assert!(verify_lemma_tau(&word, d).unwrap());
            let t = tau_of_diagram(&word, d).unwrap();
            assert_eq!(t, wd.compose(&w_inv).unwrap());
        });
    }
}

#[test]
fn scan_and_tableau_criteria_agree() {
    for n in 1..=4 {
        let word = ReducedWord::staircase(n).unwrap();
        for bits in 0..1u128 << word.len() {
            let d = Diagram::new(n, bits).unwrap();
            let s = StaircaseColoring::from_diagram(&word, &d).unwrap();
            assert_eq!(s.is_cauchon_lw(), is_cauchon(&word, &d).unwrap());
        }
    }
}

#[test]
fn cycle_dimension_equals_kernel_dimension() {
    for n in 1..=4 {
        let word = ReducedWord::staircase(n).unwrap();
        enumerate_cauchon(&word, |d, _| {
            let t = tau_of_diagram(&word, d).unwrap();
            assert_eq!(
                classify_cycles(&t).dimension,
                kernel_dimension(&t),
                "rank {n}, diagram {}",
                d.to_hex()
            );
        });
    }
}

#[test]
fn dimension_histogram_matches_generating_function() {
    let strata = StrataSeries::new(5);
    for n in 1..=5 {
        let word = ReducedWord::staircase(n).unwrap();
        let mut histogram: BTreeMap<usize, u64> = BTreeMap::new();
        enumerate_cauchon(&word, |d, _| {
            let t = tau_of_diagram(&word, d).unwrap();
            *histogram.entry(classify_cycles(&t).dimension).or_insert(0) += 1;
        });
        let p = strata.polynomial(n).unwrap();
        let coefficients = p.integer_coeffs().unwrap();
        let from_series: BTreeMap<usize, u64> = coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
            .map(|(d, c)| (d, u64::try_from(c).unwrap()))
            .collect();
        assert_eq!(histogram, from_series, "rank {n}");
    }
}

#[test]
fn dimension_zero_diagrams_at_rank_two() {
    // the two 0-dimensional diagrams at n = 2: all-black and {1}
    let word = ReducedWord::staircase(2).unwrap();
    let mut zero_dims = Vec::new();
    enumerate_cauchon(&word, |d, _| {
        let t = tau_of_diagram(&word, d).unwrap();
        if classify_cycles(&t).dimension == 0 {
            zero_dims.push(d.bits());
        }
    });
    assert_eq!(zero_dims, vec![0b001, 0b111]);
}

#[test]
fn grid_of_cauchon_diagram_is_symmetric_and_cauchon() {
    let word = ReducedWord::staircase(4).unwrap();
    enumerate_cauchon(&word, |d, _| {
        let s = StaircaseColoring::from_diagram(&word, d).unwrap();
        let g = SymmetricGrid::from_staircase(&s);
        assert!(g.is_mirror_symmetric());
        assert!(g.staircase().is_cauchon_lw());
        assert!(tau(&g).is_ok());
    });
}
