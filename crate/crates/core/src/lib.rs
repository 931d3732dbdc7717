//! Construction, verification and exhaustive search of `K_s`-saturated graphs
//! with prescribed minimum degree.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`], [`bitset`]: bitset-row graphs, clique counting, saturation tests.
//! * [`canon`], [`graph6`], [`dot`]: canonical forms and interchange formats.
//! * [`support`]: pre-support / support structures, greedy completion and the
//!   X/Y padding assembly.
//! * [`constructions`]: the named graph families built on top of [`support`].
//! * [`analysis`]: the degree-4 neighborhood partition calculus, the
//!   triangle lower-bound certificate, low-degree classification and closed-form bounds.
//! * [`search`]: isomorph-free enumeration and small-order saturation values.

pub mod analysis;
pub mod bitset;
pub mod canon;
pub mod constructions;
pub mod dot;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod search;
pub mod support;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use error::{Error, Result};
pub use graph::{CliqueCount, Graph};

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}
