//! Results of greedy runs that may get stuck.

use alloc::vec::Vec;

/// A greedy run that could not be extended before covering every object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stall {
    /// The word at the moment no letter could be appended.
    pub word: Vec<u32>,
    /// Number of distinct objects covered by `word`.
    pub covered: u64,
    /// Number of objects in the class.
    pub total: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UWordOutcome {
    /// Every object is covered exactly once, non-cyclically.
    Complete(Vec<u32>),
    Stalled(Stall),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UCycleOutcome {
    /// The trimmed word covers every object exactly once cyclically.
    Cycle(Vec<u32>),
    /// The greedy produced a u-word, but dropping its last `n - 1` letters
    /// does not give a u-cycle.
    NotCyclic { uword: Vec<u32> },
    Stalled(Stall),
}

impl UCycleOutcome {
    pub fn cycle(&self) -> Option<&[u32]> {
        match self {
            UCycleOutcome::Cycle(w) => Some(w),
            _ => None,
        }
    }
}
