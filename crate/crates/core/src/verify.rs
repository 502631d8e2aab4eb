//! Exhaustive exactly-once coverage checks.
//!
//! Each checker enumerates its whole universe of objects by brute force and
//! compares it against the multiset of windows of the candidate. Nothing here
//! calls into the generators; the only shared code is the reduction and
//! equality-pattern primitives in [`crate::patterns`].

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::debruijn::MatrixUCycleSpec;
use crate::patterns::{equality_pattern, reduce_word, WindowKey};
use crate::{Error, Result};

/// A window or universe member, written as rows.
pub type Object = Vec<Vec<u32>>;

/// Number of duplicates, missing objects and unexpected windows listed in a
/// report; the counts are always complete.
pub const REPORT_CAP: usize = 20;

/// Largest universe the checkers will enumerate.
pub const UNIVERSE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Duplicate {
    pub object: Object,
    /// 1-based start positions of every window covering `object`.
    pub positions: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unexpected {
    /// 1-based start position of the window.
    pub position: usize,
    pub window: Object,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageReport {
    pub total_expected: u64,
    /// Number of windows scanned.
    pub windows: u64,
    /// Distinct universe members covered at least once.
    pub covered: u64,
    pub duplicates: Vec<Duplicate>,
    pub duplicate_count: u64,
    pub missing: Vec<Object>,
    pub missing_count: u64,
    /// Windows that are not members of the universe at all.
    pub unexpected: Vec<Unexpected>,
    pub unexpected_count: u64,
}

impl CoverageReport {
    /// Every member covered exactly once and nothing else covered.
    pub fn verdict(&self) -> bool {
        self.duplicate_count == 0
            && self.missing_count == 0
            && self.unexpected_count == 0
            && self.covered == self.total_expected
    }
}

fn tally<K: Ord>(
    mut universe: Vec<K>,
    windows: impl Iterator<Item = Option<K>>,
    window_object: impl Fn(usize) -> Object,
    key_object: impl Fn(&K) -> Object,
) -> CoverageReport {
    universe.sort_unstable();
    universe.dedup();
    let mut found: Vec<(K, usize)> = Vec::new();
    let mut report = CoverageReport {
        total_expected: universe.len() as u64,
        windows: 0,
        covered: 0,
        duplicates: Vec::new(),
        duplicate_count: 0,
        missing: Vec::new(),
        missing_count: 0,
        unexpected: Vec::new(),
        unexpected_count: 0,
    };
    let unexpected_at = |report: &mut CoverageReport, pos: usize| {
        report.unexpected_count += 1;
        if report.unexpected.len() < REPORT_CAP {
            report.unexpected.push(Unexpected {
                position: pos + 1,
                window: window_object(pos),
            });
        }
    };
    for (pos, key) in windows.enumerate() {
        report.windows += 1;
        match key {
            Some(k) => found.push((k, pos)),
            None => unexpected_at(&mut report, pos),
        }
    }
    found.sort_unstable();

    let mut u = 0;
    let mut i = 0;
    while i < found.len() {
        let mut j = i + 1;
        while j < found.len() && found[j].0 == found[i].0 {
            j += 1;
        }
        let key = &found[i].0;
        while u < universe.len() && universe[u] < *key {
            report.missing_count += 1;
            if report.missing.len() < REPORT_CAP {
                report.missing.push(key_object(&universe[u]));
            }
            u += 1;
        }
        if u < universe.len() && universe[u] == *key {
            u += 1;
            report.covered += 1;
            if j - i > 1 {
                report.duplicate_count += 1;
                if report.duplicates.len() < REPORT_CAP {
                    report.duplicates.push(Duplicate {
                        object: key_object(key),
                        positions: found[i..j].iter().map(|(_, p)| p + 1).collect(),
                    });
                }
            }
        } else {
            let mut positions: Vec<usize> = found[i..j].iter().map(|(_, p)| *p).collect();
            positions.sort_unstable();
            for p in positions {
                unexpected_at(&mut report, p);
            }
        }
        i = j;
    }
    while u < universe.len() {
        report.missing_count += 1;
        if report.missing.len() < REPORT_CAP {
            report.missing.push(key_object(&universe[u]));
        }
        u += 1;
    }
    if report.unexpected.len() > 1 {
        report.unexpected.sort_by_key(|x| x.position);
    }
    report
}

fn cyclic_factor(w: &[u32], start: usize, n: usize) -> Vec<u32> {
    (0..n).map(|o| w[(start + o) % w.len()]).collect()
}

fn window_count(len: usize, n: usize, cyclic: bool) -> usize {
    if cyclic {
        len
    } else {
        (len + 1).saturating_sub(n)
    }
}

/// Checks that the cyclic factors of length `n` of `w` are exactly the
/// members of `set`, each once.
pub fn verify_word_ucycle(w: &[u32], set: &[Vec<u32>]) -> Result<CoverageReport> {
    verify_words(w, set, true)
}

/// As [`verify_word_ucycle`], with linear windows unless `cyclic` is set.
pub fn verify_words(w: &[u32], set: &[Vec<u32>], cyclic: bool) -> Result<CoverageReport> {
    let Some(first) = set.first() else {
        return Err(Error::invalid("the target set is empty"));
    };
    let n = first.len();
    if set.iter().any(|s| s.len() != n) {
        return Err(Error::invalid("target words have different lengths"));
    }
    let count = if w.is_empty() { 0 } else { window_count(w.len(), n, cyclic) };
    Ok(tally(
        set.to_vec(),
        (0..count).map(|s| Some(cyclic_factor(w, s, n))),
        |s| vec![cyclic_factor(w, s, n)],
        |k| vec![k.clone()],
    ))
}

fn all_words(n: usize, alphabet: impl Iterator<Item = u32> + Clone) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                alphabet.clone().map(move |x| {
                    let mut w = prefix.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn check_universe(size: Option<u64>, what: &'static str) -> Result<u64> {
    match size {
        Some(s) if s <= UNIVERSE_BUDGET => Ok(s),
        _ => Err(Error::BudgetExceeded {
            what,
            requested: size.map_or(u128::MAX, u128::from),
            limit: UNIVERSE_BUDGET as u128,
        }),
    }
}

/// Checks that `w` is a cyclic de Bruijn sequence: every word of length `n`
/// over `{0..k-1}` occurs exactly once as a cyclic factor.
pub fn verify_debruijn(w: &[u32], n: usize, k: u32) -> Result<CoverageReport> {
    verify_debruijn_windows(w, n, k, true)
}

/// As [`verify_debruijn`], with linear windows unless `cyclic` is set.
pub fn verify_debruijn_windows(w: &[u32], n: usize, k: u32, cyclic: bool) -> Result<CoverageReport> {
    check_universe((k as u64).checked_pow(n as u32), "k^n words")?;
    let universe = all_words(n, 0..k);
    if universe.is_empty() || n == 0 {
        return Err(Error::invalid("need n >= 1 and k >= 1"));
    }
    verify_words(w, &universe, cyclic)
}

/// All permutations of `1..=n` in lexicographic order.
pub(crate) fn all_permutations(n: usize) -> Vec<Vec<u32>> {
    let mut p: Vec<u32> = (1..=n as u32).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("pivot exists");
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

/// Checks that every `d`-dimensional `n`-permutation appears exactly once as
/// `n` consecutive columns of `rows` in reduced form. Windows are taken
/// cyclically when `cyclic` is set. `rows` may repeat values; a window in
/// which a row repeats a value matches no permutation and is reported as
/// unexpected.
pub fn verify_multiperm_ucycle(
    rows: &[Vec<u32>],
    d: usize,
    n: usize,
    cyclic: bool,
) -> Result<CoverageReport> {
    if d < 2 || n == 0 {
        return Err(Error::invalid("need d >= 2 and n >= 1"));
    }
    if rows.len() != d - 1 {
        return Err(Error::invalid(format!(
            "expected {} rows for d = {d}, got {}",
            d - 1,
            rows.len()
        )));
    }
    let m = rows[0].len();
    if rows.iter().any(|r| r.len() != m) {
        return Err(Error::invalid("rows have different lengths"));
    }
    let fact = (1..=n as u64).try_fold(1u64, |a, x| a.checked_mul(x));
    let size = fact.and_then(|f| (0..d - 1).try_fold(1u64, |a, _| a.checked_mul(f)));
    check_universe(size, "(n!)^(d-1) permutations")?;

    let perms = all_permutations(n);
    let mut universe = Vec::with_capacity(size.unwrap_or(0) as usize);
    let mut digits = vec![0usize; d - 1];
    loop {
        let tuple: Vec<&Vec<u32>> = digits.iter().map(|&i| &perms[i]).collect();
        universe.push(WindowKey::of_reduced(&tuple));
        let Some(pos) = (0..digits.len()).rev().find(|&i| digits[i] + 1 < perms.len()) else {
            break;
        };
        digits[pos] += 1;
        digits[pos + 1..].iter_mut().for_each(|x| *x = 0);
    }

    let window = |s: usize| -> Object {
        rows.iter()
            .map(|r| (0..n).map(|o| r[(s + o) % m]).collect())
            .collect()
    };
    let count = if m == 0 { 0 } else { window_count(m, n, cyclic) };
    Ok(tally(
        universe,
        (0..count).map(|s| {
            let reduced = window(s)
                .iter()
                .map(|r| reduce_word(r))
                .collect::<Result<Vec<_>>>()
                .ok()?;
            Some(WindowKey::of_reduced(&reduced))
        }),
        window,
        |k| k.decode(),
    ))
}

/// All restricted-growth strings of length `n`.
fn all_rgs(n: usize) -> Vec<Vec<u32>> {
    fn go(prefix: &mut Vec<u32>, max: u32, n: usize, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for x in 1..=max + 1 {
            prefix.push(x);
            go(prefix, max.max(x), n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), 0, n, &mut out);
    out
}

/// Checks that every set partition of an `n`-set appears exactly once as
/// the equality pattern of a length-`n` window of `w`.
pub fn verify_partition_ucycle(w: &[u32], n: usize, cyclic: bool) -> Result<CoverageReport> {
    if n == 0 {
        return Err(Error::invalid("need n >= 1"));
    }
    if n > 12 {
        return Err(Error::BudgetExceeded {
            what: "partition window length",
            requested: n as u128,
            limit: 12,
        });
    }
    let count = if w.is_empty() { 0 } else { window_count(w.len(), n, cyclic) };
    Ok(tally(
        all_rgs(n),
        (0..count).map(|s| Some(equality_pattern(&cyclic_factor(w, s, n)))),
        |s| vec![cyclic_factor(w, s, n)],
        |k| vec![k.clone()],
    ))
}

/// Checks that every `n1 x .. x nd` matrix over `{1..k}` appears exactly
/// once as `n_d` cyclically consecutive slices. Each slice is a flattened
/// (row-major) `(d-1)`-dimensional matrix.
pub fn verify_matrix_ucycle(slices: &[Vec<u32>], spec: &MatrixUCycleSpec) -> Result<CoverageReport> {
    verify_matrix_windows(slices, spec, true)
}

/// As [`verify_matrix_ucycle`], with linear windows unless `cyclic` is set.
pub fn verify_matrix_windows(
    slices: &[Vec<u32>],
    spec: &MatrixUCycleSpec,
    cyclic: bool,
) -> Result<CoverageReport> {
    let cells = spec.slice_cells();
    if let Some((i, s)) = slices.iter().enumerate().find(|(_, s)| s.len() != cells) {
        return Err(Error::invalid(format!(
            "slice {} has {} entries, expected {cells}",
            i + 1,
            s.len()
        )));
    }
    let depth = spec.depth();
    let size = (spec.k as u64).checked_pow((cells * depth) as u32);
    check_universe(size, "matrix count")?;
    let universe = all_words(cells * depth, 1..=spec.k);
    let window = |s: usize| -> Vec<u32> {
        (0..depth)
            .flat_map(|o| slices[(s + o) % slices.len()].iter().copied())
            .collect()
    };
    let count = if slices.is_empty() { 0 } else { window_count(slices.len(), depth, cyclic) };
    Ok(tally(
        universe,
        (0..count).map(|s| Some(window(s))),
        |s| (0..depth).map(|o| slices[(s + o) % slices.len()].clone()).collect(),
        |k| k.chunks(cells.max(1)).map(|c| c.to_vec()).collect(),
    ))
}
