//! Universal cycles (u-cycles) and universal words (u-words).
//!
//! A u-cycle for a class of objects is a cyclic sequence in which every
//! object of the class shows up exactly once as a fixed-width window. This
//! crate builds them for
//!
//! * words over a `k`-letter alphabet (de Bruijn sequences, [`debruijn`]),
//! * `d`-dimensional matrices over `{1..k}` ([`debruijn::matrix_ucycle`]),
//! * permutations and `d`-dimensional permutations, compared up to order
//!   isomorphism ([`greedy_ucycle`], [`overlap_graph`]),
//! * set partitions, compared by equality pattern ([`setpartition`]),
//!
//! and checks them with exhaustive, independent coverage oracles
//! ([`verify`]).
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod debruijn;
mod error;
pub mod graph;
pub mod greedy_ucycle;
pub mod outcome;
pub mod overlap_graph;
pub mod patterns;
pub mod setpartition;
pub mod verify;

pub use error::{Error, EulerianViolation, Result};
pub use graph::{Edge, TransitionGraph};
pub use patterns::{PermMatrix, ReducedWindow, WindowKey};

/// Largest value any generated entry may take.
pub const VALUE_BUDGET: u64 = u32::MAX as u64;
