//! Enumeration of torus-invariant strata in the big cell of the quantum
//! minuscule Grassmannian of type `B_n`, with every count checked twice.
//!
//! The crate provides:
//! - [`weyl`]: signed permutations as the type-`B_n` Weyl group:
//!   composition, root-image ascent tests, length, the signed
//!   permutation-matrix representation, and Bruhat intervals.
//! - [`word`]: the fixed staircase reduced word, the Cauchon diagram test,
//!   the subword map `Δ ↦ w^Δ`, and a pruned depth-first enumerator with a
//!   prefix-partitioning contract for deterministic parallel runs.
//! - [`grid`]: staircase colorings, the colored-tableau (Lam–Williams)
//!   criterion, and the mirror-symmetric `n×n` grid.
//! - [`pipes`]: pipe-dream tracing to the signed permutation `τ`, its
//!   cycle classification with the stratum-dimension count, and the
//!   independent exact kernel dimension of `I + P_τ`.
//! - [`series`]: exact truncated EGF arithmetic over polynomials in `t`
//!   with big-rational coefficients, Stirling/Fubini numbers, and the
//!   strata generating function with its counting specializations.
//!
//! Everything is `no_std` (with `alloc`); IO, serialization and the CLI
//! live in the companion `bstrata-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod grid;
pub mod pipes;
pub mod series;
pub mod weyl;
pub mod word;

pub use error::Error;
pub use weyl::{SignedPermMatrix, SignedPermutation, MAX_RANK};
pub use word::{Diagram, ReducedWord};
