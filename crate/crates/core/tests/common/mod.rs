//! Brute-force reference implementations for the integration tests. Nothing
//! here calls the library; every window is recomputed from scratch.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// Reduced form by counting, for each entry, the entries below it.
pub fn reduce(w: &[u32]) -> Vec<u32> {
    w.iter()
        .map(|&x| w.iter().filter(|&&y| y < x).count() as u32 + 1)
        .collect()
}

pub fn reduce_rows(rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
    rows.iter().map(|r| reduce(r)).collect()
}

/// Reduced windows of `n` consecutive columns, taken linearly.
pub fn linear_windows(rows: &[Vec<u32>], n: usize) -> Vec<Vec<Vec<u32>>> {
    let m = rows[0].len();
    (0..(m + 1).saturating_sub(n))
        .map(|s| rows.iter().map(|r| reduce(&r[s..s + n])).collect())
        .collect()
}

/// Reduced windows of `n` cyclically consecutive columns.
pub fn cyclic_windows(rows: &[Vec<u32>], n: usize) -> Vec<Vec<Vec<u32>>> {
    let m = rows[0].len();
    (0..m)
        .map(|s| {
            rows.iter()
                .map(|r| reduce(&(0..n).map(|o| r[(s + o) % m]).collect::<Vec<_>>()))
                .collect()
        })
        .collect()
}

fn all_distinct<T: Ord>(items: &[T]) -> bool {
    let set: BTreeSet<&T> = items.iter().collect();
    set.len() == items.len()
}

/// Candidate matrix for extension `rank` (1-based) of the last `n - 1`
/// columns of `rows`, applied to the whole matrix.
pub fn naive_extension(rows: &[Vec<u32>], n: usize, rank: u64) -> Vec<Vec<u32>> {
    let m = n - 1;
    let radix = n as u64;
    let mut rest = rank - 1;
    let mut tuple = vec![0u64; rows.len()];
    for t in tuple.iter_mut().rev() {
        *t = rest % radix + 1;
        rest /= radix;
    }
    rows.iter()
        .zip(&tuple)
        .map(|(row, &t)| {
            let suffix = &row[row.len() - m..];
            let mut sorted = suffix.to_vec();
            sorted.sort();
            let b = if t as usize == m + 1 {
                suffix.iter().max().copied().unwrap_or(0) + 1
            } else {
                sorted[t as usize - 1]
            };
            let mut out: Vec<u32> = row.iter().map(|&x| if x >= b { x + 1 } else { x }).collect();
            out.push(b);
            out
        })
        .collect()
}

/// The greedy u-word, choosing at every step the lowest rank whose result
/// has pairwise distinct reduced windows. Returns the chosen ranks and the
/// final matrix.
pub fn naive_greedy(d: usize, n: usize) -> (Vec<u64>, Vec<Vec<u32>>) {
    let mut rows: Vec<Vec<u32>> = vec![(1..n as u32).collect(); d - 1];
    let count = (n as u64).pow(d as u32 - 1);
    let mut ranks = Vec::new();
    loop {
        let next = (1..=count).find_map(|r| {
            let cand = naive_extension(&rows, n, r);
            all_distinct(&linear_windows(&cand, n)).then_some((r, cand))
        });
        match next {
            Some((r, cand)) => {
                ranks.push(r);
                rows = cand;
            }
            None => return (ranks, rows),
        }
    }
}

/// Restricted-growth string of `w`, by first occurrence.
pub fn rgs(w: &[u32]) -> Vec<u32> {
    let mut seen: Vec<u32> = Vec::new();
    w.iter()
        .map(|x| match seen.iter().position(|y| y == x) {
            Some(i) => i as u32 + 1,
            None => {
                seen.push(*x);
                seen.len() as u32
            }
        })
        .collect()
}

/// Set partitions of an `n`-set, counted by enumerating all words over
/// `1..=n` and collecting distinct restricted-growth strings.
pub fn brute_bell(n: usize) -> usize {
    let mut set = BTreeSet::new();
    let total = (n as u64).pow(n as u32);
    for mut i in 0..total {
        let mut w = vec![0u32; n];
        for x in w.iter_mut() {
            *x = (i % n as u64) as u32 + 1;
            i /= n as u64;
        }
        set.insert(rgs(&w));
    }
    set.len()
}

/// Set-partition greedy from `start`, rescanning every window each step.
/// Returns the final word and whether every partition was covered.
pub fn naive_partition_greedy(n: usize, start: &[u32], bell: usize) -> (Vec<u32>, bool) {
    let mut word = start.to_vec();
    let mut seen: Vec<Vec<u32>> = Vec::new();
    loop {
        let max = word.iter().copied().max().unwrap_or(0);
        let next = (1..=max + 1).find(|&c| {
            let mut w = word.clone();
            w.push(c);
            let pats: Vec<Vec<u32>> = w.windows(n).map(rgs).collect();
            all_distinct(&pats)
        });
        match next {
            Some(c) => {
                word.push(c);
                seen = word.windows(n).map(rgs).collect();
            }
            None => return (word, seen.len() == bell),
        }
    }
}

/// Every `(d-1)`-row matrix whose rows are permutations of `1..=n`.
pub fn all_multiperms(d: usize, n: usize) -> Vec<Vec<Vec<u32>>> {
    fn perms(n: usize) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n as u32);
                out.push(q);
            }
        }
        out
    }
    let ps = perms(n);
    let mut out: Vec<Vec<Vec<u32>>> = vec![vec![]];
    for _ in 0..d - 1 {
        out = out
            .into_iter()
            .flat_map(|m| {
                ps.iter().map(move |p| {
                    let mut m2 = m.clone();
                    m2.push(p.clone());
                    m2
                })
            })
            .collect();
    }
    out
}

/// Exactly-once cyclic coverage of all `d`-dimensional `n`-permutations.
pub fn covers_multiperms_cyclically(rows: &[Vec<u32>], d: usize, n: usize) -> bool {
    let mut got = cyclic_windows(rows, n);
    got.sort();
    let mut want = all_multiperms(d, n);
    want.sort();
    got == want
}

pub fn word(s: &str) -> Vec<u32> {
    s.bytes().map(|b| (b - b'0') as u32).collect()
}
