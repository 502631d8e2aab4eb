//! Start searches for the set-partition greedy, spread over worker threads.

use std::num::NonZeroUsize;
use std::thread;

use ucycle_core::setpartition::{
    start_succeeds, PartitionGreedy, SearchMode, SearchOptions, StartSearch, StartSpace,
};
use ucycle_core::Result;

/// Same result as [`ucycle_core::setpartition::search_starts`]. Worker `w`
/// takes the starts whose index is `w` modulo `jobs`; the merged list is
/// sorted, so the output does not depend on `jobs`.
pub fn search_starts_parallel(
    n: usize,
    mode: SearchMode,
    opts: SearchOptions,
    jobs: NonZeroUsize,
) -> Result<StartSearch> {
    let space = StartSpace::new(n, mode, opts)?;
    let jobs = jobs.get().min(space.size.max(1) as usize);
    let space = &space;
    let parts: Vec<Result<Vec<Vec<u32>>>> = thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|w| {
                s.spawn(move || {
                    let mut runner = PartitionGreedy::new(n)?;
                    let mut found = Vec::new();
                    let mut i = w as u64;
                    while i < space.size {
                        let start = space.start(i);
                        if start_succeeds(&mut runner, &start, mode, opts.rule)? {
                            found.push(start);
                        }
                        i += jobs as u64;
                    }
                    Ok(found)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .collect()
    });
    let mut successes = Vec::new();
    for part in parts {
        successes.extend(part?);
    }
    successes.sort();
    Ok(StartSearch {
        n,
        mode,
        alphabet_max: space.alphabet_max,
        successes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ucycle_core::setpartition::search_starts;

    #[test]
    fn matches_sequential_search() {
        for n in 3..=5 {
            for mode in [SearchMode::UWord, SearchMode::UCycle] {
                let seq = search_starts(n, mode, SearchOptions::default()).unwrap();
                for jobs in [1, 3] {
                    let par = search_starts_parallel(n, mode, SearchOptions::default(), NonZeroUsize::new(jobs).unwrap())
                        .unwrap();
                    assert_eq!(par, seq);
                }
            }
        }
    }
}
