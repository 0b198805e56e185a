//! Signed permutations: the Weyl group of type `B_n`.
//!
//! Elements are stored in window notation, the images of `1..=n`. The full
//! map on `±[n]` is always derived through `w(-i) = -w(i)` and never stored.
//! Length and ascent tests go through root images, with the simple roots
//! `α_i = e_i − e_{i+1}` for `i < n` and the short root `α_n = e_n`, so the
//! sign change of `s_n` sits at the last window position.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::Error;

/// Largest supported rank. Diagram bitmasks use `u128`, so the word length
/// `n(n+1)/2` must stay within 128 bits.
pub const MAX_RANK: usize = 15;

/// An element of the hyperoctahedral group `B_n` in window notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    /// The identity element of rank `n`.
    pub fn identity(n: usize) -> Result<Self, Error> {
        check_rank(n)?;
        Ok(SignedPermutation {
            window: (1..=n as i32).collect(),
        })
    }

    /// Builds an element from its window, validating that the absolute
    /// values form a permutation of `[n]`.
    pub fn from_window(window: Vec<i32>) -> Result<Self, Error> {
        let n = window.len();
        check_rank(n)?;
        let mut seen = alloc::vec![false; n];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n {
                return Err(Error::InvalidWindow(format!("entry {v} outside ±[{n}]")));
            }
            if seen[a - 1] {
                return Err(Error::InvalidWindow(format!("absolute value {a} repeated")));
            }
            seen[a - 1] = true;
        }
        Ok(SignedPermutation { window })
    }

    /// The simple reflection `s_i`: for `i < n` the adjacent transposition
    /// of `i` and `i+1`, for `i = n` the sign change at the last position.
    pub fn simple_reflection(n: usize, i: usize) -> Result<Self, Error> {
        let mut s = Self::identity(n)?;
        if i < 1 || i > n {
            return Err(Error::IndexOutOfRange { index: i, rank: n });
        }
        window_apply_simple_right(&mut s.window, i);
        Ok(s)
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// The image of any `i ∈ ±[n]`, via `w(-i) = -w(i)`.
    pub fn image(&self, i: i32) -> i32 {
        let a = i.unsigned_abs() as usize;
        debug_assert!(a >= 1 && a <= self.rank());
        let v = self.window[a - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(k, &v)| v == k as i32 + 1)
    }

    /// Group law: `(a·b)(i) = a(b(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self, Error> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        let window = other.window.iter().map(|&v| self.image(v)).collect();
        Ok(SignedPermutation { window })
    }

    pub fn inverse(&self) -> Self {
        let n = self.rank();
        let mut window = alloc::vec![0i32; n];
        for i in 1..=n {
            let v = self.window[i - 1];
            let a = v.unsigned_abs() as usize;
            window[a - 1] = if v > 0 { i as i32 } else { -(i as i32) };
        }
        SignedPermutation { window }
    }

    /// True iff `ℓ(w·s_i) = ℓ(w) + 1`, decided by whether `w(α_i)` is a
    /// positive root.
    pub fn is_right_ascent(&self, i: usize) -> Result<bool, Error> {
        let n = self.rank();
        if i < 1 || i > n {
            return Err(Error::IndexOutOfRange { index: i, rank: n });
        }
        Ok(window_is_right_ascent(&self.window, i))
    }

    /// Coxeter length: the number of positive roots sent to negative ones.
    pub fn length(&self) -> usize {
        let n = self.rank();
        let w = &self.window;
        let mut len = 0;
        for a in 0..n {
            // short root e_{a+1}
            if w[a] < 0 {
                len += 1;
            }
            for b in a + 1..n {
                // e_a − e_b maps to sign(w_a) e_|w_a| − sign(w_b) e_|w_b|
                if !pair_is_positive(w[a], -w[b]) {
                    len += 1;
                }
                // e_a + e_b
                if !pair_is_positive(w[a], w[b]) {
                    len += 1;
                }
            }
        }
        len
    }

    /// Right-multiplies by `s_i` in place.
    pub fn apply_simple_right(&mut self, i: usize) -> Result<(), Error> {
        let n = self.rank();
        if i < 1 || i > n {
            return Err(Error::IndexOutOfRange { index: i, rank: n });
        }
        window_apply_simple_right(&mut self.window, i);
        Ok(())
    }

    /// The signed permutation matrix `P_σ` with `P[i,|σ(i)|] = sign(σ(i))`.
    pub fn matrix_rep(&self) -> SignedPermMatrix {
        let n = self.rank();
        let mut entries = alloc::vec![0i32; n * n];
        for i in 0..n {
            let v = self.window[i];
            let j = v.unsigned_abs() as usize - 1;
            entries[i * n + j] = v.signum();
        }
        SignedPermMatrix { n, entries }
    }

    /// Window serialization, e.g. `(1,-2)` prints as `"1,-2"`.
    pub fn window_string(&self) -> String {
        let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        parts.join(",")
    }
}

impl core::fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({})", self.window_string())
    }
}

impl core::fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.window_string())
    }
}

fn check_rank(n: usize) -> Result<(), Error> {
    if !(1..=MAX_RANK).contains(&n) {
        Err(Error::InvalidRank(n))
    } else {
        Ok(())
    }
}

/// Whether `sign(u) e_|u| + sign(v) e_|v|` is a positive root (`|u| ≠ |v|`).
/// The combination is positive exactly when the term with the smaller basis
/// index carries coefficient `+1`.
#[inline]
fn pair_is_positive(u: i32, v: i32) -> bool {
    debug_assert!(u.abs() != v.abs());
    if u.abs() < v.abs() {
        u > 0
    } else {
        v > 0
    }
}

/// Root-image ascent test on a raw window. For `i < n` this asks whether
/// `w(e_i − e_{i+1})` is positive; for `i = n` whether `w(e_n)` is.
#[inline]
pub(crate) fn window_is_right_ascent(window: &[i32], i: usize) -> bool {
    let n = window.len();
    if i < n {
        pair_is_positive(window[i - 1], -window[i])
    } else {
        window[n - 1] > 0
    }
}

/// In-place right multiplication by `s_i` on a raw window: swap entries
/// `i, i+1` for `i < n`, negate the last entry for `i = n`.
#[inline]
pub(crate) fn window_apply_simple_right(window: &mut [i32], i: usize) {
    let n = window.len();
    if i < n {
        window.swap(i - 1, i);
    } else {
        window[n - 1] = -window[n - 1];
    }
}

/// Dense `n×n` matrix over `{−1, 0, 1}` with one nonzero per row and column.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedPermMatrix {
    n: usize,
    entries: Vec<i32>,
}

impl SignedPermMatrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = alloc::vec![0i32; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        SignedPermMatrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry at row `i`, column `j` (both 1-based).
    pub fn entry(&self, i: usize, j: usize) -> i32 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut entries = alloc::vec![0i32; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        SignedPermMatrix { n, entries }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut entries = alloc::vec![0i32; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * other.entries[k * n + j];
                }
            }
        }
        SignedPermMatrix { n, entries }
    }

    /// Row-major copy widened to `i128`, for exact elimination.
    pub fn rows_i128(&self) -> Vec<Vec<i128>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.entries[i * self.n + j] as i128).collect())
            .collect()
    }
}

/// All `n²` reflections of `B_n`: one per positive root.
pub fn reflections(n: usize) -> Vec<SignedPermutation> {
    let mut out = Vec::with_capacity(n * n);
    for a in 1..=n {
        // e_a: sign change at a
        let mut w: Vec<i32> = (1..=n as i32).collect();
        w[a - 1] = -(a as i32);
        out.push(SignedPermutation { window: w });
    }
    for a in 1..=n {
        for b in a + 1..=n {
            // e_a − e_b: plain transposition
            let mut w: Vec<i32> = (1..=n as i32).collect();
            w[a - 1] = b as i32;
            w[b - 1] = a as i32;
            out.push(SignedPermutation { window: w });
            // e_a + e_b: transposition with both signs flipped
            let mut w: Vec<i32> = (1..=n as i32).collect();
            w[a - 1] = -(b as i32);
            w[b - 1] = -(a as i32);
            out.push(SignedPermutation { window: w });
        }
    }
    out
}

/// The Bruhat interval `[id, w]`, computed by downward closure over covers
/// `u = v·t` with `ℓ(u) = ℓ(v) − 1`, `t` running over all reflections.
///
/// Exponential in rank; intended for ranks up to 4.
pub fn bruhat_interval(w: &SignedPermutation) -> BTreeSet<SignedPermutation> {
    let refls = reflections(w.rank());
    let mut interval = BTreeSet::new();
    interval.insert(w.clone());
    let mut stack = alloc::vec![(w.clone(), w.length())];
    while let Some((v, lv)) = stack.pop() {
        if lv == 0 {
            continue;
        }
        for t in &refls {
            let u = v.compose(t).expect("equal ranks");
            let lu = u.length();
            if lu + 1 == lv && interval.insert(u.clone()) {
                stack.push((u, lu));
            }
        }
    }
    interval
}

/// Every element of `B_n`, in no particular order. Size `2^n · n!`; meant
/// for exhaustive checks at small rank.
pub fn all_elements(n: usize) -> Vec<SignedPermutation> {
    assert!((1..=8).contains(&n), "exhaustive listing only supported up to rank 8");
    let mut perms: Vec<Vec<i32>> = Vec::new();
    let mut current: Vec<i32> = (1..=n as i32).collect();
    heap_permutations(&mut current, n, &mut perms);
    let mut out = Vec::with_capacity(perms.len() << n);
    for p in perms {
        for mask in 0u32..(1 << n) {
            let window: Vec<i32> = p
                .iter()
                .enumerate()
                .map(|(k, &v)| if mask >> k & 1 == 1 { -v } else { v })
                .collect();
            out.push(SignedPermutation { window });
        }
    }
    out
}

fn heap_permutations(items: &mut Vec<i32>, k: usize, out: &mut Vec<Vec<i32>>) {
    if k == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permutations(items, k - 1, out);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}
