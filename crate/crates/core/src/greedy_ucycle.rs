//! Greedy u-words and u-cycles for `d`-dimensional permutations.
//!
//! A `d`-dimensional `n`-permutation is stored as `d - 1` rows, each a
//! permutation of `1..=n` (the top row `1 2 .. n` is implicit). The greedy
//! algorithm starts from `I_{d;n-1}` and repeatedly appends the column given
//! by the lowest-ranked extension of the last `n - 1` columns whose reduced
//! `n`-column window has not been seen yet. Once no extension is possible the
//! matrix is a u-word `U'_{d;n}`; dropping its last `n - 1` columns and
//! reducing gives the u-cycle `U_{d;n}`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::patterns::{reduce_word, ReducedWindow};
use crate::{Error, PermMatrix, Result};

/// Rank `i` of an extension together with its tuple `(i_1, .., i_{d-1})`,
/// each coordinate in `1..=m+1`. Ranks are 1-based and follow the
/// lexicographic order of tuples (first row most significant).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionIndex {
    tuple: Vec<u32>,
    rank: u64,
    columns: usize,
}

impl ExtensionIndex {
    /// Number of extensions of an `m`-column matrix with `rows` rows.
    pub fn count(columns: usize, rows: usize) -> Option<u64> {
        (0..rows).try_fold(1u64, |acc, _| acc.checked_mul(columns as u64 + 1))
    }

    pub fn from_rank(rank: u64, columns: usize, rows: usize) -> Result<Self> {
        let count = Self::count(columns, rows)
            .ok_or_else(|| Error::invalid("extension count overflows"))?;
        if rank == 0 || rank > count {
            return Err(Error::invalid(format!(
                "extension rank {rank} is outside 1..={count}"
            )));
        }
        let radix = columns as u64 + 1;
        let mut rest = rank - 1;
        let mut tuple = vec![0u32; rows];
        for slot in tuple.iter_mut().rev() {
            *slot = (rest % radix) as u32 + 1;
            rest /= radix;
        }
        Ok(ExtensionIndex {
            tuple,
            rank,
            columns,
        })
    }

    pub fn from_tuple(tuple: Vec<u32>, columns: usize) -> Result<Self> {
        let radix = columns as u64 + 1;
        if tuple.iter().any(|&t| t == 0 || t as u64 > radix) {
            return Err(Error::invalid(format!(
                "extension coordinates must lie in 1..={radix}"
            )));
        }
        let rank = tuple
            .iter()
            .try_fold(0u64, |acc, &t| acc.checked_mul(radix)?.checked_add(t as u64 - 1))
            .ok_or_else(|| Error::invalid("extension rank overflows"))?
            + 1;
        Ok(ExtensionIndex {
            tuple,
            rank,
            columns,
        })
    }

    /// The smallest extension, rank 1.
    pub fn smallest(columns: usize, rows: usize) -> Self {
        ExtensionIndex {
            tuple: vec![1; rows],
            rank: 1,
            columns,
        }
    }

    /// The largest extension, which appends one more than each row maximum.
    pub fn largest(columns: usize, rows: usize) -> Self {
        let tuple = vec![columns as u32 + 1; rows];
        Self::from_tuple(tuple, columns).expect("largest extension is in range")
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }

    pub fn tuple(&self) -> &[u32] {
        &self.tuple
    }

    pub fn columns(&self) -> usize {
        self.columns
    }
}

/// The column `B` appended by extension `idx` of the matrix `rows`: in row
/// `j`, the `i_j`-th smallest entry, or one more than the row maximum when
/// `i_j = m + 1`.
pub fn extension_column<R: AsRef<[u32]>>(rows: &[R], idx: &ExtensionIndex) -> Result<Vec<u32>> {
    if rows.len() != idx.tuple.len() {
        return Err(Error::invalid(format!(
            "extension has {} coordinates but the matrix has {} rows",
            idx.tuple.len(),
            rows.len()
        )));
    }
    rows.iter()
        .zip(&idx.tuple)
        .map(|(row, &t)| {
            let row = row.as_ref();
            if row.len() != idx.columns {
                return Err(Error::invalid(format!(
                    "extension is for {} columns but the row has {}",
                    idx.columns,
                    row.len()
                )));
            }
            if t as usize == row.len() + 1 {
                Ok(row.iter().copied().max().unwrap_or(0) + 1)
            } else {
                let mut sorted = row.to_vec();
                sorted.sort_unstable();
                Ok(sorted[t as usize - 1])
            }
        })
        .collect()
}

/// `C_B(rows) B`: every entry of row `j` that is `>= b_j` goes up by one,
/// then `B` is appended as a new column.
pub fn apply_extension(rows: &[Vec<u32>], b: &[u32]) -> Vec<Vec<u32>> {
    rows.iter()
        .zip(b)
        .map(|(row, &bj)| {
            let mut out: Vec<u32> = row.iter().map(|&x| if x >= bj { x + 1 } else { x }).collect();
            out.push(bj);
            out
        })
        .collect()
}

/// The `idx`-th extension of `pi`.
pub fn extend(pi: &PermMatrix, idx: &ExtensionIndex) -> Result<PermMatrix> {
    if idx.columns != pi.columns() {
        return Err(Error::invalid(format!(
            "extension is for {} columns but the matrix has {}",
            idx.columns,
            pi.columns()
        )));
    }
    let b = extension_column(pi.rows(), idx)?;
    Ok(PermMatrix::from_rows_unchecked(apply_extension(pi.rows(), &b)))
}

/// Number of `d`-dimensional `n`-permutations, `(n!)^(d-1)`, if it fits the
/// value budget together with the `n - 1` extra u-word columns.
pub fn multiperm_count(d: usize, n: usize) -> Result<u64> {
    if d < 2 || n == 0 {
        return Err(Error::invalid(format!("need d >= 2 and n >= 1, got d={d}, n={n}")));
    }
    let fact = (1..=n as u64).try_fold(1u64, |acc, x| acc.checked_mul(x));
    let count = fact.and_then(|f| (0..d - 1).try_fold(1u64, |acc, _| acc.checked_mul(f)));
    match count {
        Some(c) if c + n as u64 - 1 <= crate::VALUE_BUDGET => Ok(c),
        _ => {
            let f = (1..=n as u128).fold(1u128, |a, x| a.saturating_mul(x));
            let requested = (0..d - 1).fold(1u128, |a, _| a.saturating_mul(f));
            Err(Error::BudgetExceeded {
                what: "u-word length (n!)^(d-1) + n - 1",
                requested: requested.saturating_add(n as u128 - 1),
                limit: crate::VALUE_BUDGET as u128,
            })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyStep {
    /// Step number `k`, 1-based: the step that produces `U'_{d;n,k}`.
    pub k: u64,
    /// The chosen extension of the last `n - 1` columns.
    pub index: ExtensionIndex,
}

/// Full record of a greedy run.
#[derive(Debug, Clone)]
pub struct GreedyTrace {
    d: usize,
    n: usize,
    ranks: Vec<u32>,
    uword: PermMatrix,
    ucycle: PermMatrix,
    terminal: ReducedWindow,
}

impl GreedyTrace {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of extension steps taken after the seed `I_{d;n-1}`.
    pub fn step_count(&self) -> usize {
        self.ranks.len()
    }

    /// Chosen ranks, one per step.
    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    pub fn steps(&self) -> impl Iterator<Item = GreedyStep> + '_ {
        let rows = self.d - 1;
        let cols = self.n - 1;
        self.ranks.iter().enumerate().map(move |(i, &r)| GreedyStep {
            k: i as u64 + 1,
            index: ExtensionIndex::from_rank(r as u64, cols, rows).expect("recorded rank is valid"),
        })
    }

    /// The u-word `U'_{d;n}`.
    pub fn uword(&self) -> &PermMatrix {
        &self.uword
    }

    /// The u-cycle `U_{d;n}`.
    pub fn ucycle(&self) -> &PermMatrix {
        &self.ucycle
    }

    /// Reduced form of the last `n` columns of the u-word. The run stops
    /// exactly when this is the identity.
    pub fn terminal_window(&self) -> &ReducedWindow {
        &self.terminal
    }

    /// Rebuilds every intermediate matrix `U'_{d;n,0}, U'_{d;n,1}, ..` by
    /// applying the recorded extensions with explicit relabelling. Each step
    /// rewrites the whole matrix, so this is meant for small instances.
    pub fn replay(&self) -> Replay<'_> {
        Replay {
            trace: self,
            current: Some(seed(self.d - 1, self.n)),
            next_step: 0,
        }
    }
}

pub struct Replay<'a> {
    trace: &'a GreedyTrace,
    current: Option<PermMatrix>,
    next_step: usize,
}

impl Iterator for Replay<'_> {
    type Item = PermMatrix;

    fn next(&mut self) -> Option<PermMatrix> {
        let out = self.current.take()?;
        if let Some(&rank) = self.trace.ranks.get(self.next_step) {
            let n = self.trace.n;
            let rows = self.trace.d - 1;
            let idx = ExtensionIndex::from_rank(rank as u64, n - 1, rows).expect("valid rank");
            let suffix = out.window_rows(out.columns() + 1 - n, n - 1);
            let b = extension_column(&suffix, &idx).expect("shape matches");
            self.current = Some(PermMatrix::from_rows_unchecked(apply_extension(out.rows(), &b)));
            self.next_step += 1;
        }
        Some(out)
    }
}

fn seed(rows: usize, n: usize) -> PermMatrix {
    PermMatrix::identity(rows, n - 1)
}

/// Per-row doubly linked list of columns in increasing order of value.
/// Index 0 is the sentinel; column `c` lives at `c + 1`.
struct ValueOrder {
    next: Vec<u32>,
    prev: Vec<u32>,
}

impl ValueOrder {
    fn with_capacity(cap: usize) -> Self {
        let mut next = Vec::with_capacity(cap + 1);
        let mut prev = Vec::with_capacity(cap + 1);
        next.push(0);
        prev.push(0);
        ValueOrder { next, prev }
    }

    fn grow(&mut self) -> u32 {
        self.next.push(0);
        self.prev.push(0);
        (self.next.len() - 1) as u32
    }

    fn insert_after(&mut self, anchor: u32, node: u32) {
        let after = self.next[anchor as usize];
        self.next[anchor as usize] = node;
        self.prev[after as usize] = node;
        self.next[node as usize] = after;
        self.prev[node as usize] = anchor;
    }

    fn values(&self) -> Vec<u32> {
        let mut out = vec![0u32; self.next.len() - 1];
        let mut node = self.next[0];
        let mut v = 1;
        while node != 0 {
            out[node as usize - 1] = v;
            v += 1;
            node = self.next[node as usize];
        }
        out
    }
}

/// Bitmap over the packed keys of all `d`-dimensional `n`-permutations.
struct SeenSet {
    bits: Vec<u64>,
}

impl SeenSet {
    fn new(len: u64) -> Self {
        SeenSet {
            bits: vec![0; (len as usize).div_ceil(64)],
        }
    }

    fn contains(&self, i: u64) -> bool {
        self.bits[(i / 64) as usize] >> (i % 64) & 1 == 1
    }

    fn insert(&mut self, i: u64) {
        self.bits[(i / 64) as usize] |= 1 << (i % 64);
    }
}

/// Dense index of a reduced window: per-row Lehmer ranks in radix `n!`.
fn dense_index(rows: &[Vec<u32>], fact: u64) -> u64 {
    rows.iter()
        .fold(0u64, |acc, r| acc * fact + crate::patterns::lehmer_rank(r) as u64)
}

/// Runs the greedy algorithm for `d`-dimensional `n`-permutations.
///
/// Only the reduced `n - 1`-column suffix is examined when testing
/// candidates. Already placed columns are never rewritten: each row keeps its
/// columns in a linked list ordered by value, so `C_B` is a single insertion
/// and concrete values are assigned once at the end.
pub fn greedy_uword(d: usize, n: usize) -> Result<GreedyTrace> {
    let total = multiperm_count(d, n)?;
    let rows = d - 1;
    let fact: u64 = (1..=n as u64).product();
    let candidates = ExtensionIndex::count(n - 1, rows).expect("n^(d-1) <= (n!)^(d-1)");
    let final_len = (total + n as u64 - 1) as usize;

    let mut orders: Vec<ValueOrder> = (0..rows)
        .map(|_| {
            let mut o = ValueOrder::with_capacity(final_len);
            let mut last = 0;
            for _ in 0..n - 1 {
                let node = o.grow();
                o.insert_after(last, node);
                last = node;
            }
            o
        })
        .collect();
    let mut columns = n - 1;
    // reduced form of the last n - 1 columns
    let mut suffix: Vec<Vec<u32>> = vec![(1..n as u32).collect(); rows];
    let mut seen = SeenSet::new(total);
    let mut ranks: Vec<u32> = Vec::with_capacity(total as usize);
    let mut terminal: Option<Vec<Vec<u32>>> = None;
    let mut candidate: Vec<Vec<u32>> = vec![vec![0; n]; rows];
    let mut tuple = vec![1u32; rows];

    loop {
        let mut chosen = None;
        tuple.iter_mut().for_each(|t| *t = 1);
        for rank in 1..=candidates {
            if rank > 1 {
                // odometer increment, last row fastest
                for t in tuple.iter_mut().rev() {
                    if (*t as usize) < n {
                        *t += 1;
                        break;
                    }
                    *t = 1;
                }
            }
            for ((cand, suf), &t) in candidate.iter_mut().zip(&suffix).zip(&tuple) {
                for (c, &x) in cand.iter_mut().zip(suf) {
                    *c = if x >= t { x + 1 } else { x };
                }
                cand[n - 1] = t;
            }
            let key = dense_index(&candidate, fact);
            if !seen.contains(key) {
                seen.insert(key);
                chosen = Some(rank);
                break;
            }
        }
        let Some(rank) = chosen else { break };
        ranks.push(rank as u32);

        let start = columns + 1 - n;
        for ((order, suf), &t) in orders.iter_mut().zip(&suffix).zip(&tuple) {
            let node = order.grow();
            if n == 1 {
                order.insert_after(0, node);
                continue;
            }
            if (t as usize) < n {
                let p = suf.iter().position(|&x| x == t).expect("suffix is a permutation");
                let anchor = order.prev[start + p + 1];
                order.insert_after(anchor, node);
            } else {
                let p = suf.iter().position(|&x| x as usize == n - 1).expect("suffix is a permutation");
                order.insert_after((start + p + 1) as u32, node);
            }
        }
        columns += 1;
        for (suf, cand) in suffix.iter_mut().zip(&candidate) {
            let first = cand[0];
            for (s, &c) in suf.iter_mut().zip(&cand[1..]) {
                *s = if c > first { c - 1 } else { c };
            }
        }
        terminal = Some(candidate.clone());
    }

    let uword_rows: Vec<Vec<u32>> = orders.iter().map(ValueOrder::values).collect();
    let uword = PermMatrix::from_rows_unchecked(uword_rows);
    let keep = uword.columns() + 1 - n;
    let ucycle_rows = uword
        .rows()
        .iter()
        .map(|r| reduce_word(&r[..keep]))
        .collect::<Result<Vec<_>>>()?;
    let terminal = match terminal {
        Some(rows) => ReducedWindow::from_reduced(rows)?,
        None => ReducedWindow::identity(rows, n),
    };
    Ok(GreedyTrace {
        d,
        n,
        ranks,
        uword,
        ucycle: PermMatrix::from_rows_unchecked(ucycle_rows),
        terminal,
    })
}

/// The u-cycle `U_{d;n}`.
pub fn greedy_ucycle(d: usize, n: usize) -> Result<PermMatrix> {
    Ok(greedy_uword(d, n)?.ucycle)
}

/// Replaces every entry `v` of row `row` (1-based) by `m + 1 - v`.
pub fn complement_row(u: &PermMatrix, row: usize) -> Result<PermMatrix> {
    if row == 0 || row > u.row_count() {
        return Err(Error::invalid(format!(
            "row {row} is outside 1..={}",
            u.row_count()
        )));
    }
    let m = u.columns() as u32;
    let target = &u.rows()[row - 1];
    if !crate::patterns::is_permutation(target) {
        return Err(Error::invalid(format!("row {row} is not a permutation of 1..={m}")));
    }
    let mut rows = u.rows().to_vec();
    rows[row - 1] = target.iter().map(|&v| m + 1 - v).collect();
    Ok(PermMatrix::from_rows_unchecked(rows))
}

/// All `2^(d-1)` matrices obtained by complementing a subset of the rows of
/// `u`. Member `s` complements row `j + 1` whenever bit `j` of `s` is set,
/// so member 0 is `u` itself.
pub fn complement_family(u: &PermMatrix) -> Result<Vec<PermMatrix>> {
    let rows = u.row_count();
    if rows >= usize::BITS as usize {
        return Err(Error::invalid("too many rows to enumerate complements"));
    }
    (0..1usize << rows)
        .map(|mask| {
            (0..rows)
                .filter(|j| mask >> j & 1 == 1)
                .try_fold(u.clone(), |acc, j| complement_row(&acc, j + 1))
        })
        .collect()
}
