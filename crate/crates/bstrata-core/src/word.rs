//! The staircase reduced word, Cauchon diagrams and their enumeration.
//!
//! The word for the maximal minimal-coset representative is fixed once per
//! rank: tableau row `r` contributes the letters `n−r+1, …, n`, so the full
//! word reads `n (n−1 n) ⋯ (1 2 ⋯ n)` with `t = n(n+1)/2` letters.
//!
//! A diagram is a subset of word positions stored as a bitmask. The Cauchon
//! scan walks positions `t, t−1, …, 1`, maintaining the right-to-left
//! product `v` of the included reflections, and demands an ascent at every
//! position whether or not that position is included. The enumerator prunes
//! a whole subtree as soon as one ascent fails, which is sound because the
//! test at a position only depends on choices made at later positions.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::weyl::{
    window_apply_simple_right, window_is_right_ascent, SignedPermutation, MAX_RANK,
};

/// The staircase reduced word for a given rank.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReducedWord {
    n: usize,
    letters: Vec<usize>,
}

impl ReducedWord {
    pub fn staircase(n: usize) -> Result<Self, Error> {
        if !(1..=MAX_RANK).contains(&n) {
            return Err(Error::InvalidRank(n));
        }
        let mut letters = Vec::with_capacity(n * (n + 1) / 2);
        for row in 1..=n {
            for col in 1..=row {
                letters.push(n - row + col);
            }
        }
        Ok(ReducedWord { n, letters })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Word length `t = n(n+1)/2`.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letters `i_1, …, i_t` (1-based simple-reflection indices).
    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Letter at position `k ∈ [t]`.
    pub fn letter(&self, k: usize) -> Result<usize, Error> {
        k.checked_sub(1)
            .and_then(|i| self.letters.get(i))
            .copied()
            .ok_or(Error::PositionOutOfRange { position: k, len: self.len() })
    }

    /// The product of the whole word: `w_max^{{1,…,n−1}}`.
    pub fn max_element(&self) -> SignedPermutation {
        let mut w = SignedPermutation::identity(self.n).expect("valid rank");
        for &i in &self.letters {
            w.apply_simple_right(i).expect("valid letter");
        }
        w
    }
}

/// A subset of word positions, bit `k−1` set iff position `k` is a member.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    n: usize,
    bits: u128,
}

impl Diagram {
    pub fn new(n: usize, bits: u128) -> Result<Self, Error> {
        if !(1..=MAX_RANK).contains(&n) {
            return Err(Error::InvalidRank(n));
        }
        let t = n * (n + 1) / 2;
        if t < 128 && bits >> t != 0 {
            return Err(Error::InvalidBitmask { len: t });
        }
        Ok(Diagram { n, bits })
    }

    pub fn empty(n: usize) -> Result<Self, Error> {
        Self::new(n, 0)
    }

    pub fn full(n: usize) -> Result<Self, Error> {
        let d = Self::new(n, 0)?;
        // t ≤ 120 for every admissible rank, so the shift cannot overflow
        let t = n * (n + 1) / 2;
        Ok(Diagram { bits: (1u128 << t) - 1, ..d })
    }

    /// Builds the diagram containing exactly the given positions.
    pub fn from_positions(n: usize, positions: &[usize]) -> Result<Self, Error> {
        let t = n * (n + 1) / 2;
        let mut bits = 0u128;
        for &k in positions {
            if k < 1 || k > t {
                return Err(Error::PositionOutOfRange { position: k, len: t });
            }
            bits |= 1 << (k - 1);
        }
        Self::new(n, bits)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn contains(&self, position: usize) -> bool {
        (1..=128).contains(&position) && self.bits >> (position - 1) & 1 == 1
    }

    /// Number of member positions.
    pub fn cardinality(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn positions(&self) -> Vec<usize> {
        let t = self.n * (self.n + 1) / 2;
        (1..=t).filter(|&k| self.contains(k)).collect()
    }

    /// Lowercase hex of the little-endian bitmask, e.g. `{2,3} ↦ "6"`.
    pub fn to_hex(&self) -> String {
        alloc::format!("{:x}", self.bits)
    }

    pub fn from_hex(n: usize, hex: &str) -> Result<Self, Error> {
        let bits = u128::from_str_radix(hex, 16)
            .map_err(|_| Error::InvalidHex(String::from(hex)))?;
        Self::new(n, bits)
    }
}

impl core::fmt::Debug for Diagram {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Diagram(n={}, bits={:x})", self.n, self.bits)
    }
}

/// Where and why a Cauchon scan failed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ScanFailure {
    /// Scan step `ℓ ∈ [t]`, counted from the end of the word.
    pub step: usize,
    /// Word position `k = t − ℓ + 1` tested at that step.
    pub position: usize,
    /// The letter at that position.
    pub letter: usize,
}

fn check_ranks(word: &ReducedWord, d: &Diagram) -> Result<(), Error> {
    if word.rank() != d.rank() {
        return Err(Error::RankMismatch { left: word.rank(), right: d.rank() });
    }
    Ok(())
}

/// Runs the scan to completion, reporting the first ascent failure if any,
/// together with the full right-to-left product `v^Δ` of the included
/// reflections (accumulated over all positions regardless of failures).
fn scan(word: &ReducedWord, d: &Diagram) -> Result<(Option<ScanFailure>, SignedPermutation), Error> {
    check_ranks(word, d)?;
    let t = word.len();
    let mut v = SignedPermutation::identity(word.rank()).expect("valid rank");
    let mut failure = None;
    for step in 1..=t {
        let position = t - step + 1;
        let letter = word.letters()[position - 1];
        if failure.is_none() && !v.is_right_ascent(letter).expect("valid letter") {
            failure = Some(ScanFailure { step, position, letter });
        }
        if d.contains(position) {
            v.apply_simple_right(letter).expect("valid letter");
        }
    }
    Ok((failure, v))
}

/// Whether the diagram passes the Cauchon scan.
pub fn is_cauchon(word: &ReducedWord, d: &Diagram) -> Result<bool, Error> {
    Ok(scan(word, d)?.0.is_none())
}

/// The first failing scan step, or `None` for Cauchon diagrams.
pub fn first_failure(word: &ReducedWord, d: &Diagram) -> Result<Option<ScanFailure>, Error> {
    Ok(scan(word, d)?.0)
}

/// The subword product `w^Δ = s_{i_1}^Δ ⋯ s_{i_t}^Δ`, obtained as the
/// inverse of the scan's right-to-left product (every factor is an
/// involution, so reversing the product inverts it).
pub fn w_delta(word: &ReducedWord, d: &Diagram) -> Result<SignedPermutation, Error> {
    Ok(scan(word, d)?.1.inverse())
}

/// Depth-first enumeration of all Cauchon diagrams, positions processed
/// from `t` down to `1`, exclude branch before include branch. The visitor
/// receives each diagram together with its `w^Δ`; the return value is the
/// number of diagrams visited.
pub fn enumerate_cauchon<F>(word: &ReducedWord, mut visitor: F) -> u64
where
    F: FnMut(&Diagram, &SignedPermutation),
{
    let mut v: Vec<i32> = (1..=word.rank() as i32).collect();
    let mut bits = 0u128;
    dfs(word, word.len(), &mut v, &mut bits, &mut visitor)
}

fn dfs<F>(word: &ReducedWord, pos: usize, v: &mut Vec<i32>, bits: &mut u128, visitor: &mut F) -> u64
where
    F: FnMut(&Diagram, &SignedPermutation),
{
    if pos == 0 {
        let d = Diagram { n: word.rank(), bits: *bits };
        let w_delta = SignedPermutation::from_window(v.clone())
            .expect("window stays valid")
            .inverse();
        visitor(&d, &w_delta);
        return 1;
    }
    let letter = word.letters()[pos - 1];
    if !window_is_right_ascent(v, letter) {
        return 0;
    }
    let mut count = dfs(word, pos - 1, v, bits, visitor);
    window_apply_simple_right(v, letter);
    *bits |= 1 << (pos - 1);
    count += dfs(word, pos - 1, v, bits, visitor);
    window_apply_simple_right(v, letter);
    *bits &= !(1 << (pos - 1));
    count
}

/// A surviving DFS node after the first `depth` branch choices, i.e. after
/// processing positions `t, …, t−depth+1`. Workers resume the search below
/// such a node; visiting all prefixes of one depth in order reproduces the
/// sequential enumeration exactly.
#[derive(Clone, Debug)]
pub struct DfsPrefix {
    depth: usize,
    bits: u128,
    v: Vec<i32>,
}

impl DfsPrefix {
    pub fn depth(&self) -> usize {
        self.depth
    }
}

/// All surviving DFS nodes at the given depth, in canonical (exclude before
/// include) order. `depth` is clamped to the word length.
pub fn prefix_classes(word: &ReducedWord, depth: usize) -> Vec<DfsPrefix> {
    let depth = depth.min(word.len());
    let mut v: Vec<i32> = (1..=word.rank() as i32).collect();
    let mut bits = 0u128;
    let mut out = Vec::new();
    collect_prefixes(word, word.len(), depth, &mut v, &mut bits, &mut out);
    out
}

fn collect_prefixes(
    word: &ReducedWord,
    pos: usize,
    remaining: usize,
    v: &mut Vec<i32>,
    bits: &mut u128,
    out: &mut Vec<DfsPrefix>,
) {
    if remaining == 0 {
        out.push(DfsPrefix { depth: word.len() - pos, bits: *bits, v: v.clone() });
        return;
    }
    let letter = word.letters()[pos - 1];
    if !window_is_right_ascent(v, letter) {
        return;
    }
    collect_prefixes(word, pos - 1, remaining - 1, v, bits, out);
    window_apply_simple_right(v, letter);
    *bits |= 1 << (pos - 1);
    collect_prefixes(word, pos - 1, remaining - 1, v, bits, out);
    window_apply_simple_right(v, letter);
    *bits &= !(1 << (pos - 1));
}

/// Resumes the enumeration below one prefix node. Summing the returned
/// counts over all classes of one depth gives the total diagram count.
pub fn enumerate_cauchon_from<F>(word: &ReducedWord, prefix: &DfsPrefix, mut visitor: F) -> u64
where
    F: FnMut(&Diagram, &SignedPermutation),
{
    let mut v = prefix.v.clone();
    let mut bits = prefix.bits;
    dfs(word, word.len() - prefix.depth, &mut v, &mut bits, &mut visitor)
}

/// Draws `count` Cauchon diagrams uniformly with replacement: the word is
/// enumerated once and the seeded generator then picks indices into the
/// canonical diagram stream, so the sample sequence is fully determined by
/// the seed. Memory is one bitmask per diagram; meant for the ranks where
/// full enumeration is cheap but exhaustive cross-checking is not.
pub fn sample_cauchon<F>(word: &ReducedWord, seed: u64, count: usize, mut visitor: F)
where
    F: FnMut(&Diagram, &SignedPermutation),
{
    let mut pool: Vec<u128> = Vec::new();
    enumerate_cauchon(word, |d, _| pool.push(d.bits()));
    let mut rng = SplitMix64(seed);
    let bound = pool.len() as u64;
    // reject the tail of the 64-bit range so every index is equally likely
    let zone = u64::MAX - u64::MAX % bound;
    for _ in 0..count {
        let index = loop {
            let r = rng.next();
            if r < zone {
                break (r % bound) as usize;
            }
        };
        let d = Diagram { n: word.rank(), bits: pool[index] };
        let wd = w_delta(word, &d).expect("ranks match");
        visitor(&d, &wd);
    }
}

struct SplitMix64(u64);

impl SplitMix64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::vec;

    #[test]
    fn staircase_letters() {
        assert_eq!(ReducedWord::staircase(1).unwrap().letters(), &[1]);
        assert_eq!(ReducedWord::staircase(2).unwrap().letters(), &[2, 1, 2]);
        assert_eq!(
            ReducedWord::staircase(4).unwrap().letters(),
            &[4, 3, 4, 2, 3, 4, 1, 2, 3, 4]
        );
        assert!(ReducedWord::staircase(0).is_err());
    }

    #[test]
    fn staircase_word_is_reduced() {
        for n in 1..=6 {
            let word = ReducedWord::staircase(n).unwrap();
            assert_eq!(word.len(), n * (n + 1) / 2);
            assert_eq!(word.max_element().length(), word.len());
        }
    }

    #[test]
    fn diagram_bitmask_roundtrip() {
        let d = Diagram::from_positions(2, &[2, 3]).unwrap();
        assert_eq!(d.to_hex(), "6");
        assert_eq!(Diagram::from_hex(2, "6").unwrap(), d);
        assert_eq!(d.positions(), vec![2, 3]);
        assert!(Diagram::from_hex(2, "8").is_err());
        assert!(Diagram::from_hex(2, "zz").is_err());
        assert!(Diagram::from_positions(2, &[4]).is_err());
    }

    #[test]
    fn cauchon_hand_traces() {
        let word = ReducedWord::staircase(2).unwrap();
        let empty = Diagram::empty(2).unwrap();
        assert!(is_cauchon(&word, &empty).unwrap());
        let d3 = Diagram::from_positions(2, &[3]).unwrap();
        assert!(!is_cauchon(&word, &d3).unwrap());
        let d23 = Diagram::from_positions(2, &[2, 3]).unwrap();
        assert!(is_cauchon(&word, &d23).unwrap());
    }

    #[test]
    fn cauchon_set_for_rank_two() {
        let word = ReducedWord::staircase(2).unwrap();
        let expected: BTreeSet<u128> = [0b000, 0b001, 0b010, 0b011, 0b110, 0b111]
            .into_iter()
            .collect();
        let actual: BTreeSet<u128> = (0u128..8)
            .filter(|&bits| is_cauchon(&word, &Diagram::new(2, bits).unwrap()).unwrap())
            .collect();
        assert_eq!(actual, expected);
    }

    #[test]
    fn failure_reporting() {
        let word = ReducedWord::staircase(2).unwrap();
        let d3 = Diagram::from_positions(2, &[3]).unwrap();
        let failure = first_failure(&word, &d3).unwrap().unwrap();
        // ascent holds at steps 1 and 2; step 3 tests position 1 (letter 2)
        assert_eq!(failure.step, 3);
        assert_eq!(failure.position, 1);
        assert_eq!(failure.letter, 2);
    }

    #[test]
    fn w_delta_examples() {
        let word = ReducedWord::staircase(2).unwrap();
        let empty = Diagram::empty(2).unwrap();
        assert!(w_delta(&word, &empty).unwrap().is_identity());
        let full = Diagram::full(2).unwrap();
        assert_eq!(w_delta(&word, &full).unwrap(), word.max_element());
        let d2 = Diagram::from_positions(2, &[2]).unwrap();
        assert_eq!(w_delta(&word, &d2).unwrap().window(), &[2, 1]);
    }

    /// Direct left-to-right product, the definition of `w^Δ`. Cross-check
    /// for the scan-state implementation.
    fn w_delta_direct(word: &ReducedWord, d: &Diagram) -> SignedPermutation {
        let mut w = SignedPermutation::identity(word.rank()).unwrap();
        for k in 1..=word.len() {
            if d.contains(k) {
                w.apply_simple_right(word.letters()[k - 1]).unwrap();
            }
        }
        w
    }

    #[test]
    fn w_delta_matches_direct_product() {
        for n in 1..=4 {
            let word = ReducedWord::staircase(n).unwrap();
            let t = word.len();
            for bits in 0..1u128 << t {
                let d = Diagram::new(n, bits).unwrap();
                assert_eq!(w_delta(&word, &d).unwrap(), w_delta_direct(&word, &d));
            }
        }
    }

    #[test]
    fn rank_mismatch_rejected() {
        let word = ReducedWord::staircase(2).unwrap();
        let d = Diagram::empty(3).unwrap();
        assert!(is_cauchon(&word, &d).is_err());
        assert!(w_delta(&word, &d).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let expected = [2u64, 6, 26, 150, 1082];
        for (n, &want) in (1..=5).zip(&expected) {
            let word = ReducedWord::staircase(n).unwrap();
            assert_eq!(enumerate_cauchon(&word, |_, _| {}), want);
        }
    }

    #[test]
    fn enumeration_matches_naive_scan() {
        for n in 1..=4 {
            let word = ReducedWord::staircase(n).unwrap();
            let mut visited = Vec::new();
            enumerate_cauchon(&word, |d, _| visited.push(d.bits()));
            let naive: Vec<u128> = (0..1u128 << word.len())
                .filter(|&bits| is_cauchon(&word, &Diagram::new(n, bits).unwrap()).unwrap())
                .collect();
            let mut sorted = visited.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, naive);
            // no repeats
            let set: BTreeSet<u128> = visited.iter().copied().collect();
            assert_eq!(set.len(), visited.len());
        }
    }

    #[test]
    fn enumeration_order_is_exclude_first() {
        let word = ReducedWord::staircase(1).unwrap();
        let mut seen = Vec::new();
        enumerate_cauchon(&word, |d, _| seen.push(d.bits()));
        assert_eq!(seen, vec![0, 1]);
    }

    #[test]
    fn enumeration_passes_w_delta() {
        let word = ReducedWord::staircase(3).unwrap();
        enumerate_cauchon(&word, |d, wd| {
            assert_eq!(wd, &w_delta(&word, d).unwrap());
        });
    }

    #[test]
    fn prefix_partition_reproduces_sequential_stream() {
        let word = ReducedWord::staircase(4).unwrap();
        let mut sequential = Vec::new();
        enumerate_cauchon(&word, |d, _| sequential.push(d.bits()));
        for depth in [0, 1, 3, 7, word.len(), word.len() + 5] {
            let mut merged = Vec::new();
            let mut total = 0;
            for class in prefix_classes(&word, depth) {
                total += enumerate_cauchon_from(&word, &class, |d, _| merged.push(d.bits()));
            }
            assert_eq!(merged, sequential, "depth {depth}");
            assert_eq!(total, sequential.len() as u64);
        }
    }

    #[test]
    fn sampling_yields_cauchon_diagrams() {
        let word = ReducedWord::staircase(5).unwrap();
        let mut count = 0;
        sample_cauchon(&word, 0, 200, |d, wd| {
            assert!(is_cauchon(&word, d).unwrap());
            assert_eq!(wd, &w_delta(&word, d).unwrap());
            count += 1;
        });
        assert_eq!(count, 200);
    }

    #[test]
    fn sampling_is_seed_deterministic() {
        let word = ReducedWord::staircase(4).unwrap();
        let mut a = Vec::new();
        sample_cauchon(&word, 42, 50, |d, _| a.push(d.bits()));
        let mut b = Vec::new();
        sample_cauchon(&word, 42, 50, |d, _| b.push(d.bits()));
        assert_eq!(a, b);
        let mut c = Vec::new();
        sample_cauchon(&word, 43, 50, |d, _| c.push(d.bits()));
        assert_ne!(a, c);
    }
}
