//! Pipe dreams on a symmetric grid and the stratum-dimension formula.
//!
//! Rows of the grid carry the labels `1..=n` (bottom up, repeated on the
//! left and right edges); column `c` carries the label `−(n+1−c)` (top and
//! bottom edges). White squares route bottom→left and right→top; black
//! squares route straight through. Tracing every pipe from the right and
//! bottom edges to the left and top edges defines the signed permutation
//! `τ`.
//!
//! The cycles of `τ` on `±[n]` group into fixed pairs (a), mirror pairs of
//! cycles with negation-free support (b), and single self-negated cycles
//! (c). The dimension of the associated stratum is the number of even
//! groups of type (b) plus the number of odd cycles of type (c), and must
//! agree with the exact kernel dimension of `I + P_τ`. The two routes are
//! kept independent so each can check the other.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::grid::{StaircaseColoring, SymmetricGrid};
use crate::weyl::SignedPermutation;
use crate::word::{first_failure, w_delta, Diagram, ReducedWord};

/// The endpoint map of a pipe dream is just a signed permutation.
pub type PipeEndpoints = SignedPermutation;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Edge {
    Bottom,
    Right,
}

/// Follows one pipe from its start label to its end label. Starts are
/// `i ∈ [n]` on the right edge of row `i` and `−j` on the bottom edge of
/// the column labelled `−j` (column `n+1−j`). Ends on the left edge of row
/// `r` read `r`; ends on the top edge of column `c` read `−(n+1−c)`.
pub fn trace_pipe(g: &SymmetricGrid, start: i32) -> i32 {
    let n = g.size();
    debug_assert!(start != 0 && start.unsigned_abs() as usize <= n);
    let (mut row, mut col, mut edge) = if start > 0 {
        (start as usize, n, Edge::Right)
    } else {
        (1, n + 1 - start.unsigned_abs() as usize, Edge::Bottom)
    };
    loop {
        let black = g.color(row, col).is_black();
        // white: bottom→left and right→top; black: straight through
        let exit_left = match edge {
            Edge::Bottom => !black,
            Edge::Right => black,
        };
        if exit_left {
            if col == 1 {
                return row as i32;
            }
            col -= 1;
            edge = Edge::Right;
        } else {
            if row == n {
                return -((n + 1 - col) as i32);
            }
            row += 1;
            edge = Edge::Bottom;
        }
    }
}

/// The pipe-dream permutation of a mirror-symmetric grid.
pub fn tau(g: &SymmetricGrid) -> Result<PipeEndpoints, Error> {
    if !g.is_mirror_symmetric() {
        return Err(Error::AsymmetricGrid);
    }
    let window = (1..=g.size() as i32).map(|i| trace_pipe(g, i)).collect();
    SignedPermutation::from_window(window)
}

/// The pipe-dream permutation of a Cauchon diagram; rejects non-Cauchon
/// input with the first failing scan step.
pub fn tau_of_diagram(word: &ReducedWord, d: &Diagram) -> Result<PipeEndpoints, Error> {
    if let Some(f) = first_failure(word, d)? {
        return Err(Error::NotCauchon { step: f.step, position: f.position, letter: f.letter });
    }
    let staircase = StaircaseColoring::from_diagram(word, d)?;
    tau(&SymmetricGrid::from_staircase(&staircase))
}

/// Checks `τ_Δ = w^Δ · w^{−1}` for a Cauchon diagram.
pub fn verify_lemma_tau(word: &ReducedWord, d: &Diagram) -> Result<bool, Error> {
    let t = tau_of_diagram(word, d)?;
    let expected = w_delta(word, d)?.compose(&word.max_element().inverse())?;
    Ok(t == expected)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CycleKind {
    /// A pair of fixed points `(i)(−i)`.
    A,
    /// A pair of mirror cycles whose supports are disjoint from their
    /// negatives.
    B,
    /// A single self-negated cycle.
    C,
}

impl CycleKind {
    pub fn label(self) -> &'static str {
        match self {
            CycleKind::A => "a",
            CycleKind::B => "b",
            CycleKind::C => "c",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn label(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

/// One grouped cycle of `τ`: a fixed pair, a mirror pair, or a self-negated
/// cycle, represented by the orbit starting at its smallest positive
/// element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupedCycle {
    pub kind: CycleKind,
    /// Canonical orbit. Type A stores the single fixed point; type B stores
    /// the cycle containing the smallest positive element (its partner is
    /// the elementwise negation); type C stores the whole cycle.
    pub repr: Vec<i32>,
    /// Number of elements of `[n]` the group covers: 1 for A, the common
    /// cycle length for B, half the cycle length for C.
    pub size: usize,
}

impl GroupedCycle {
    pub fn parity(&self) -> Parity {
        if self.size.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Whether the group contributes 1 to the stratum dimension: even type
    /// (b) groups and odd type (c) cycles do.
    pub fn contributes(&self) -> bool {
        matches!(
            (self.kind, self.parity()),
            (CycleKind::B, Parity::Even) | (CycleKind::C, Parity::Odd)
        )
    }

    /// Full support in `±[n]`, ascending.
    pub fn support(&self) -> Vec<i32> {
        let mut s: Vec<i32> = match self.kind {
            CycleKind::C => self.repr.clone(),
            _ => self.repr.iter().flat_map(|&x| [x, -x]).collect(),
        };
        s.sort_unstable();
        s
    }
}

/// All grouped cycles of `τ`, ordered by smallest positive element, plus
/// the stratum dimension they imply.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleClassification {
    pub cycles: Vec<GroupedCycle>,
    pub dimension: usize,
}

pub fn classify_cycles(tau: &PipeEndpoints) -> CycleClassification {
    let n = tau.rank();
    // visited flags for ±[n]: index i−1 for i, n+i−1 for −i
    let mut visited = alloc::vec![false; 2 * n];
    let idx = |x: i32| -> usize {
        if x > 0 {
            x as usize - 1
        } else {
            n + (-x) as usize - 1
        }
    };
    let mut cycles = Vec::new();
    for a in 1..=n as i32 {
        if visited[idx(a)] {
            continue;
        }
        let mut orbit = alloc::vec![a];
        visited[idx(a)] = true;
        let mut x = tau.image(a);
        while x != a {
            visited[idx(x)] = true;
            orbit.push(x);
            x = tau.image(x);
        }
        let self_negated = orbit.contains(&-a);
        let group = if orbit.len() == 1 {
            visited[idx(-a)] = true;
            GroupedCycle { kind: CycleKind::A, repr: orbit, size: 1 }
        } else if self_negated {
            GroupedCycle { kind: CycleKind::C, size: orbit.len() / 2, repr: orbit }
        } else {
            for &x in &orbit {
                visited[idx(-x)] = true;
            }
            GroupedCycle { kind: CycleKind::B, size: orbit.len(), repr: orbit }
        };
        cycles.push(group);
    }
    let dimension = cycles.iter().filter(|c| c.contributes()).count();
    CycleClassification { cycles, dimension }
}

/// Standard disjoint-cycle text, fixed points omitted, e.g.
/// `(1 -4)(-1 4)(2 3 -2 -3)`. The identity prints as `()`.
pub fn cycle_notation(tau: &PipeEndpoints) -> String {
    let classification = classify_cycles(tau);
    let mut out = String::new();
    for group in &classification.cycles {
        match group.kind {
            CycleKind::A => {}
            CycleKind::B => {
                push_cycle(&mut out, group.repr.iter().copied());
                push_cycle(&mut out, group.repr.iter().map(|&x| -x));
            }
            CycleKind::C => {
                push_cycle(&mut out, group.repr.iter().copied());
            }
        }
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

fn push_cycle(out: &mut String, elements: impl Iterator<Item = i32>) {
    out.push('(');
    for (k, x) in elements.enumerate() {
        if k > 0 {
            out.push(' ');
        }
        out.push_str(&alloc::format!("{x}"));
    }
    out.push(')');
}

/// Stratum dimension of a Cauchon diagram via the cycle formula.
pub fn stratum_dimension(word: &ReducedWord, d: &Diagram) -> Result<usize, Error> {
    Ok(classify_cycles(&tau_of_diagram(word, d)?).dimension)
}

/// Rational kernel dimension of `I + P_τ`, by fraction-free elimination on
/// the integer matrix. Independent of the cycle classification.
pub fn kernel_dimension(tau: &PipeEndpoints) -> usize {
    let n = tau.rank();
    let mut m = tau.matrix_rep().rows_i128();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] += 1;
    }
    n - integer_rank(m)
}

/// Rank by Bareiss elimination: exact integer arithmetic, row pivoting,
/// singular columns skipped.
fn integer_rank(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let numerator = m[r][c] * m[rank][col] - m[r][col] * m[rank][c];
                debug_assert_eq!(numerator % prev, 0);
                m[r][c] = numerator / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::is_cauchon;
    use alloc::vec;

    fn grid_of(n: usize, positions: &[usize]) -> SymmetricGrid {
        let word = ReducedWord::staircase(n).unwrap();
        let d = Diagram::from_positions(n, positions).unwrap();
        SymmetricGrid::from_staircase(&StaircaseColoring::from_diagram(&word, &d).unwrap())
    }

    /// The worked 4×4 example: staircase blacks at positions {2,3,5}.
    fn pictured_diagram() -> (ReducedWord, Diagram) {
        (
            ReducedWord::staircase(4).unwrap(),
            Diagram::from_positions(4, &[2, 3, 5]).unwrap(),
        )
    }

    #[test]
    fn all_black_grid_gives_identity() {
        for n in 1..=5 {
            let t = n * (n + 1) / 2;
            let positions: Vec<usize> = (1..=t).collect();
            let g = grid_of(n, &positions);
            assert!(tau(&g).unwrap().is_identity());
        }
    }

    #[test]
    fn all_white_rank_two() {
        let g = grid_of(2, &[]);
        let t = tau(&g).unwrap();
        assert_eq!(t.window(), &[-2, -1]);
    }

    #[test]
    fn pictured_tau() {
        let (word, d) = pictured_diagram();
        assert!(is_cauchon(&word, &d).unwrap());
        let g = SymmetricGrid::from_staircase(
            &StaircaseColoring::from_diagram(&word, &d).unwrap(),
        );
        let t = tau(&g).unwrap();
        assert_eq!(t.window(), &[-4, 3, -2, -1]);
        assert_eq!(cycle_notation(&t), "(1 -4)(-1 4)(2 3 -2 -3)");
    }

    #[test]
    fn pipe_conservation() {
        let word = ReducedWord::staircase(3).unwrap();
        for bits in 0..1u128 << word.len() {
            let d = Diagram::new(3, bits).unwrap();
            let g = SymmetricGrid::from_staircase(
                &StaircaseColoring::from_diagram(&word, &d).unwrap(),
            );
            let mut ends = Vec::new();
            for start in [-3, -2, -1, 1, 2, 3] {
                ends.push(trace_pipe(&g, start));
            }
            let mut sorted = ends.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, vec![-3, -2, -1, 1, 2, 3]);
            // τ(−i) = −τ(i)
            for i in 1..=3usize {
                assert_eq!(ends[3 - i], -ends[2 + i]);
            }
        }
    }

    #[test]
    fn lemma_examples() {
        let word = ReducedWord::staircase(3).unwrap();
        let full = Diagram::full(3).unwrap();
        assert!(tau_of_diagram(&word, &full).unwrap().is_identity());
        assert!(verify_lemma_tau(&word, &full).unwrap());

        let empty = Diagram::empty(3).unwrap();
        assert_eq!(tau_of_diagram(&word, &empty).unwrap(), word.max_element().inverse());
        assert!(verify_lemma_tau(&word, &empty).unwrap());

        let (word, d) = pictured_diagram();
        assert!(verify_lemma_tau(&word, &d).unwrap());
    }

    #[test]
    fn non_cauchon_rejected() {
        let word = ReducedWord::staircase(2).unwrap();
        let d = Diagram::from_positions(2, &[3]).unwrap();
        match tau_of_diagram(&word, &d) {
            Err(Error::NotCauchon { step: 3, position: 1, letter: 2 }) => {}
            other => panic!("expected NotCauchon, got {other:?}"),
        }
        assert!(stratum_dimension(&word, &d).is_err());
        assert!(verify_lemma_tau(&word, &d).is_err());
    }

    #[test]
    fn classification_examples() {
        // identity at n = 2: two fixed pairs, dimension 0
        let id = SignedPermutation::identity(2).unwrap();
        let c = classify_cycles(&id);
        assert_eq!(c.cycles.len(), 2);
        assert!(c.cycles.iter().all(|g| g.kind == CycleKind::A && g.size == 1));
        assert_eq!(c.dimension, 0);
        assert_eq!(cycle_notation(&id), "()");

        // (2 3 −2 −3) with 1, −1 fixed: one even type (c) cycle
        let t = SignedPermutation::from_window(vec![1, 3, -2, 4]).unwrap();
        let c = classify_cycles(&t);
        let group = c.cycles.iter().find(|g| g.kind == CycleKind::C).unwrap();
        assert_eq!(group.size, 2);
        assert_eq!(group.parity(), Parity::Even);
        assert!(!group.contributes());

        // (1 −4)(−1 4) with 2, 3 fixed: one even type (b) pair
        let t = SignedPermutation::from_window(vec![-4, 2, 3, -1]).unwrap();
        let c = classify_cycles(&t);
        let group = c.cycles.iter().find(|g| g.kind == CycleKind::B).unwrap();
        assert_eq!(group.size, 2);
        assert_eq!(group.parity(), Parity::Even);
        assert!(group.contributes());
    }

    #[test]
    fn supports_partition_everything() {
        let word = ReducedWord::staircase(4).unwrap();
        crate::word::enumerate_cauchon(&word, |d, _| {
            let t = tau_of_diagram(&word, d).unwrap();
            let c = classify_cycles(&t);
            let mut all: Vec<i32> = c.cycles.iter().flat_map(|g| g.support()).collect();
            all.sort_unstable();
            let expected: Vec<i32> = (-4..=4).filter(|&x| x != 0).collect();
            assert_eq!(all, expected);
            assert_eq!(c.cycles.iter().map(|g| g.size).sum::<usize>(), 4);
        });
    }

    #[test]
    fn pictured_dimension() {
        let (word, d) = pictured_diagram();
        assert_eq!(stratum_dimension(&word, &d).unwrap(), 1);
        let t = tau_of_diagram(&word, &d).unwrap();
        assert_eq!(kernel_dimension(&t), 1);
    }

    #[test]
    fn dimension_examples() {
        // all-black diagram: identity τ, dimension 0
        let word = ReducedWord::staircase(2).unwrap();
        let full = Diagram::full(2).unwrap();
        assert_eq!(stratum_dimension(&word, &full).unwrap(), 0);

        // n=2, Δ={2}: τ = (1 −1)(2 −2), two odd type (c) cycles
        let d = Diagram::from_positions(2, &[2]).unwrap();
        let t = tau_of_diagram(&word, &d).unwrap();
        assert_eq!(t.window(), &[-1, -2]);
        assert_eq!(stratum_dimension(&word, &d).unwrap(), 2);
        assert_eq!(kernel_dimension(&t), 2);

        // n=1, all-white: single odd type (c) cycle (1 −1)
        let word1 = ReducedWord::staircase(1).unwrap();
        let empty = Diagram::empty(1).unwrap();
        assert_eq!(stratum_dimension(&word1, &empty).unwrap(), 1);
        let t = tau_of_diagram(&word1, &empty).unwrap();
        assert_eq!(kernel_dimension(&t), 1);
    }

    #[test]
    fn kernel_examples() {
        let id = SignedPermutation::identity(3).unwrap();
        assert_eq!(kernel_dimension(&id), 0);
        let neg = SignedPermutation::from_window(vec![-1]).unwrap();
        assert_eq!(kernel_dimension(&neg), 1);
    }

    /// Naive rational elimination, as a check on the fraction-free rank.
    fn rational_kernel_dimension(tau: &SignedPermutation) -> usize {
        let n = tau.rank();
        let mut m: Vec<Vec<f64>> = tau
            .matrix_rep()
            .rows_i128()
            .into_iter()
            .map(|row| row.into_iter().map(|x| x as f64).collect())
            .collect();
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += 1.0;
        }
        // entries stay in a tiny integer range; partial pivoting keeps this
        // exact enough for a test at rank ≤ 5
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| m[r][col].abs() > 1e-9) else {
                continue;
            };
            m.swap(rank, p);
            for r in 0..n {
                if r != rank && m[r][col].abs() > 1e-9 {
                    let f = m[r][col] / m[rank][col];
                    let pivot_row = m[rank].clone();
                    for (cell, p) in m[r].iter_mut().zip(&pivot_row) {
                        *cell -= f * p;
                    }
                }
            }
            rank += 1;
        }
        n - rank
    }

    #[test]
    fn kernel_matches_naive_elimination() {
        for n in 1..=4 {
            let word = ReducedWord::staircase(n).unwrap();
            crate::word::enumerate_cauchon(&word, |d, _| {
                let t = tau_of_diagram(&word, d).unwrap();
                assert_eq!(kernel_dimension(&t), rational_kernel_dimension(&t));
            });
        }
    }

    #[test]
    fn all_black_row_characterization() {
        let word = ReducedWord::staircase(4).unwrap();
        crate::word::enumerate_cauchon(&word, |d, _| {
            let g = SymmetricGrid::from_staircase(
                &StaircaseColoring::from_diagram(&word, d).unwrap(),
            );
            let t = tau(&g).unwrap();
            for i in 1..=4 {
                let all_black = (1..=4).all(|c| g.color(i, c).is_black());
                let fixed = t.image(i as i32) == i as i32;
                assert_eq!(all_black, fixed);
            }
        });
    }

    #[test]
    fn dimension_bounds_and_oracle_agreement() {
        for n in 1..=4 {
            let word = ReducedWord::staircase(n).unwrap();
            crate::word::enumerate_cauchon(&word, |d, _| {
                let t = tau_of_diagram(&word, d).unwrap();
                let dim = classify_cycles(&t).dimension;
                assert!(dim <= n);
                assert_eq!(dim, kernel_dimension(&t));
            });
        }
    }
}
