//! Greedy constructions for set partitions and the alternating greedy
//! variant for words.
//!
//! A word over `{1, 2, ..}` of length `n` encodes the partition of
//! `{1..n}` in which two positions share a block iff they carry the same
//! letter. Windows are compared by that partition, i.e. by the
//! restricted-growth form of their equality pattern.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::debruijn::{checked_pow, is_cyclic_debruijn, WORD_BUDGET};
use crate::outcome::{Stall, UCycleOutcome, UWordOutcome};
use crate::{Error, Result};

/// Longest window the partition greedy supports.
pub const MAX_PARTITION_N: usize = 12;

/// Largest `n` searched without an explicit override.
pub const DEFAULT_SEARCH_LIMIT: usize = 7;

/// Restricted-growth form of the equality pattern of `w`.
pub fn partition_pattern(w: &[u32]) -> Vec<u32> {
    crate::patterns::equality_pattern(w)
}

/// Blocks of the partition encoded by `w`, as 1-based positions, ordered by
/// their smallest element.
pub fn blocks(w: &[u32]) -> Vec<Vec<usize>> {
    let rgs = partition_pattern(w);
    let count = rgs.iter().copied().max().unwrap_or(0) as usize;
    let mut out = vec![Vec::new(); count];
    for (i, &b) in rgs.iter().enumerate() {
        out[b as usize - 1].push(i + 1);
    }
    out
}

/// Bell number `B(n)`, from the Bell triangle.
pub fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().expect("row is nonempty"));
        for &x in &row {
            let last = *next.last().expect("next is nonempty");
            next.push(last + x);
        }
        row = next;
    }
    row[0]
}

/// Dense numbering of the restricted-growth strings of one length, plus
/// scratch space for computing patterns without allocating.
struct PatternIndex {
    n: usize,
    codes: Vec<u64>,
    firsts: Vec<u32>,
}

impl PatternIndex {
    fn new(n: usize) -> Self {
        let mut codes = Vec::with_capacity(bell(n) as usize);
        let mut rgs = vec![0u32; n];
        fn go(rgs: &mut [u32], i: usize, max: u32, codes: &mut Vec<u64>) {
            if i == rgs.len() {
                codes.push(rgs.iter().fold(0u64, |acc, &x| acc * 16 + x as u64));
                return;
            }
            for x in 1..=max + 1 {
                rgs[i] = x;
                go(rgs, i + 1, max.max(x), codes);
            }
        }
        go(&mut rgs, 0, 0, &mut codes);
        codes.sort_unstable();
        PatternIndex {
            n,
            codes,
            firsts: Vec::with_capacity(n),
        }
    }

    fn len(&self) -> usize {
        self.codes.len()
    }

    /// Index of the pattern of `head` followed by `last`.
    fn index_of(&mut self, head: &[u32], last: u32) -> usize {
        debug_assert_eq!(head.len() + 1, self.n);
        self.firsts.clear();
        let mut code = 0u64;
        for &x in head.iter().chain(core::iter::once(&last)) {
            let label = match self.firsts.iter().position(|&f| f == x) {
                Some(i) => i + 1,
                None => {
                    self.firsts.push(x);
                    self.firsts.len()
                }
            };
            code = code * 16 + label as u64;
        }
        self.codes.binary_search(&code).expect("every pattern is indexed")
    }
}

/// Reusable runner for the partition greedy with a fixed `n`.
pub struct PartitionGreedy {
    index: PatternIndex,
    seen: Vec<bool>,
}

impl PartitionGreedy {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_PARTITION_N {
            return Err(Error::invalid(format!(
                "partition window length must be in 1..={MAX_PARTITION_N}"
            )));
        }
        let index = PatternIndex::new(n);
        let seen = vec![false; index.len()];
        Ok(PartitionGreedy { index, seen })
    }

    pub fn n(&self) -> usize {
        self.index.n
    }

    fn check_start(&self, start: &[u32]) -> Result<()> {
        let n = self.n();
        if start.len() != n - 1 {
            return Err(Error::invalid(format!(
                "start must have length n - 1 = {}, got {}",
                n - 1,
                start.len()
            )));
        }
        if start.contains(&0) {
            return Err(Error::invalid("start letters must be positive"));
        }
        Ok(())
    }

    /// Appends the smallest positive letter that keeps all window patterns
    /// distinct until that is impossible. Candidate letters are `1..=M+1`
    /// with `M` the largest letter so far; anything larger gives the same
    /// pattern as `M + 1`.
    pub fn uword(&mut self, start: &[u32]) -> Result<UWordOutcome> {
        self.check_start(start)?;
        let n = self.n();
        self.seen.iter_mut().for_each(|s| *s = false);
        let mut word = start.to_vec();
        let mut max = word.iter().copied().max().unwrap_or(0);
        let mut covered = 0u64;
        'grow: loop {
            let head_at = word.len() + 1 - n;
            for c in 1..=max + 1 {
                let idx = self.index.index_of(&word[head_at..], c);
                if !self.seen[idx] {
                    self.seen[idx] = true;
                    covered += 1;
                    word.push(c);
                    max = max.max(c);
                    continue 'grow;
                }
            }
            break;
        }
        let total = self.index.len() as u64;
        if covered == total {
            Ok(UWordOutcome::Complete(word))
        } else {
            Ok(UWordOutcome::Stalled(Stall {
                word,
                covered,
                total,
            }))
        }
    }

    /// Runs [`Self::uword`] and drops the last `n - 1` letters. The result
    /// counts as a u-cycle when it satisfies `rule`; every cyclic window,
    /// the wraparound ones included, is checked in both cases.
    pub fn ucycle_with(&mut self, start: &[u32], rule: CycleRule) -> Result<UCycleOutcome> {
        let uword = match self.uword(start)? {
            UWordOutcome::Complete(w) => w,
            UWordOutcome::Stalled(s) => return Ok(UCycleOutcome::Stalled(s)),
        };
        let n = self.n();
        if rule == CycleRule::Closing && uword[uword.len() + 1 - n..] != *start {
            return Ok(UCycleOutcome::NotCyclic { uword });
        }
        let cycle = &uword[..uword.len() + 1 - n];
        self.seen.iter_mut().for_each(|s| *s = false);
        let len = cycle.len();
        let mut window = vec![0u32; n];
        for s in 0..len {
            for (o, slot) in window.iter_mut().enumerate() {
                *slot = cycle[(s + o) % len];
            }
            let idx = self.index.index_of(&window[..n - 1], window[n - 1]);
            if core::mem::replace(&mut self.seen[idx], true) {
                return Ok(UCycleOutcome::NotCyclic { uword });
            }
        }
        Ok(UCycleOutcome::Cycle(cycle.to_vec()))
    }

    pub fn ucycle(&mut self, start: &[u32]) -> Result<UCycleOutcome> {
        self.ucycle_with(start, CycleRule::Closing)
    }
}

/// When a complete u-word, trimmed by `n - 1` letters, counts as a u-cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CycleRule {
    /// The u-word ends with its own start, so the greedy run closes up
    /// letter for letter.
    #[default]
    Closing,
    /// Every cyclic window of the trimmed word has a distinct pattern.
    Windows,
}

pub fn greedy_partition_uword(n: usize, start: &[u32]) -> Result<UWordOutcome> {
    PartitionGreedy::new(n)?.uword(start)
}

pub fn greedy_partition_ucycle(n: usize, start: &[u32]) -> Result<UCycleOutcome> {
    PartitionGreedy::new(n)?.ucycle(start)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    UWord,
    UCycle,
}

impl SearchMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchMode::UWord => "uword",
            SearchMode::UCycle => "ucycle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchOptions {
    /// Starts are drawn from `{1..=alphabet_max}^(n-1)`; `None` means
    /// [`default_alphabet_max`].
    pub alphabet_max: Option<u32>,
    pub rule: CycleRule,
    /// Lift the refusal for `n` above [`DEFAULT_SEARCH_LIMIT`].
    pub allow_heavy: bool,
}

/// Largest start letter searched by default: `n - 1` for u-words and `n`
/// for u-cycles.
pub fn default_alphabet_max(n: usize, mode: SearchMode) -> u32 {
    match mode {
        SearchMode::UWord => (n as u32).saturating_sub(1).max(1),
        SearchMode::UCycle => n as u32,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StartSearch {
    pub n: usize,
    pub mode: SearchMode,
    pub alphabet_max: u32,
    /// Starts for which the greedy succeeds, in lexicographic order.
    pub successes: Vec<Vec<u32>>,
}

/// The start space of a search, validated against the heavy-run limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StartSpace {
    pub n: usize,
    pub alphabet_max: u32,
    pub size: u64,
}

impl StartSpace {
    pub fn new(n: usize, mode: SearchMode, opts: SearchOptions) -> Result<Self> {
        if n == 0 || n > MAX_PARTITION_N {
            return Err(Error::invalid(format!(
                "partition window length must be in 1..={MAX_PARTITION_N}"
            )));
        }
        let alphabet_max = opts.alphabet_max.unwrap_or_else(|| default_alphabet_max(n, mode));
        if alphabet_max == 0 {
            return Err(Error::invalid("alphabet must be nonempty"));
        }
        let size = checked_pow(alphabet_max as u64, n - 1, "start count", u64::MAX)?;
        if n > DEFAULT_SEARCH_LIMIT && !opts.allow_heavy {
            let steps = |m: usize| checked_pow(m as u64, m - 1, "", u64::MAX).unwrap_or(u64::MAX) as u128 * bell(m) as u128;
            return Err(Error::BudgetExceeded {
                what: "estimated greedy steps of a start search without the heavy-run override",
                requested: size as u128 * bell(n) as u128,
                limit: steps(DEFAULT_SEARCH_LIMIT),
            });
        }
        Ok(StartSpace {
            n,
            alphabet_max,
            size,
        })
    }

    /// The `i`-th start in lexicographic order.
    pub fn start(&self, mut i: u64) -> Vec<u32> {
        let a = self.alphabet_max as u64;
        let mut out = vec![0u32; self.n - 1];
        for slot in out.iter_mut().rev() {
            *slot = (i % a) as u32 + 1;
            i /= a;
        }
        out
    }
}

/// Whether the greedy run from `start` succeeds in the given mode.
pub fn start_succeeds(
    runner: &mut PartitionGreedy,
    start: &[u32],
    mode: SearchMode,
    rule: CycleRule,
) -> Result<bool> {
    Ok(match mode {
        SearchMode::UWord => matches!(runner.uword(start)?, UWordOutcome::Complete(_)),
        SearchMode::UCycle => matches!(runner.ucycle_with(start, rule)?, UCycleOutcome::Cycle(_)),
    })
}

/// Runs the greedy from every start in `{1..=a}^(n-1)` and collects the
/// starts that succeed, in lexicographic order.
pub fn search_starts(n: usize, mode: SearchMode, opts: SearchOptions) -> Result<StartSearch> {
    let space = StartSpace::new(n, mode, opts)?;
    let mut runner = PartitionGreedy::new(n)?;
    let mut successes = Vec::new();
    for i in 0..space.size {
        let start = space.start(i);
        if start_succeeds(&mut runner, &start, mode, opts.rule)? {
            successes.push(start);
        }
    }
    Ok(StartSearch {
        n,
        mode,
        alphabet_max: space.alphabet_max,
        successes,
    })
}

/// Greedy over `{0..k-1}` that alternates between appending the smallest
/// and the largest letter keeping all length-`n` factors distinct, smallest
/// first. Ends when neither choice is available at the current turn.
pub fn alternating_greedy_words(n: usize, k: u32, start: &[u32]) -> Result<UCycleOutcome> {
    if n == 0 || k == 0 {
        return Err(Error::invalid("need n >= 1 and k >= 1"));
    }
    if let Some(&bad) = start.iter().find(|&&x| x >= k) {
        return Err(Error::invalid(format!("start letter {bad} is outside 0..{k}")));
    }
    let total = checked_pow(k as u64, n, "k^n", WORD_BUDGET)?;
    let code = |w: &[u32]| w.iter().fold(0u64, |acc, &x| acc * k as u64 + x as u64);
    let mut seen = vec![false; total as usize];
    let mut covered = 0u64;
    for w in start.windows(n) {
        if core::mem::replace(&mut seen[code(w) as usize], true) {
            return Err(Error::invalid("start repeats a length-n factor"));
        }
        covered += 1;
    }
    let mut word = start.to_vec();
    let mut smallest_turn = true;
    loop {
        let feasible = |c: u32, word: &[u32], seen: &[bool]| {
            if word.len() + 1 < n {
                return true;
            }
            let head = &word[word.len() + 1 - n..];
            let v = code(head) * k as u64 + c as u64;
            !seen[v as usize]
        };
        let pick = if smallest_turn {
            (0..k).find(|&c| feasible(c, &word, &seen))
        } else {
            (0..k).rev().find(|&c| feasible(c, &word, &seen))
        };
        let Some(c) = pick else { break };
        word.push(c);
        if word.len() >= n {
            seen[code(&word[word.len() - n..]) as usize] = true;
            covered += 1;
        }
        smallest_turn = !smallest_turn;
    }
    if covered < total {
        return Ok(UCycleOutcome::Stalled(Stall {
            word,
            covered,
            total,
        }));
    }
    let cycle = word[..word.len() - (n - 1)].to_vec();
    if is_cyclic_debruijn(&cycle, n, k) {
        Ok(UCycleOutcome::Cycle(cycle))
    } else {
        Ok(UCycleOutcome::NotCyclic { uword: word })
    }
}
