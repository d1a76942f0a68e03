//! Exact tools for perfect sequence covering arrays.
//!
//! A PSCA(v, t, λ) is a multiset of permutations of `[v]` in which every
//! ordered t-tuple of distinct symbols occurs as a subsequence of exactly λ
//! rows. This crate verifies such arrays, enumerates the per-symbol column
//! distributions they can have, catalogues them up to isomorphism by adding
//! one symbol at a time, and builds them from permutation groups.

pub mod array;
pub mod catalogue;
pub mod coverage;
pub mod distributions;
pub mod error;
pub mod groups;
pub mod iso;
pub mod perm;
pub mod search;

pub use array::PermArray;
pub use coverage::{covers, verify, Sequence, VerifyResult};
pub use error::{Error, Result};
pub use perm::Permutation;
