//! Order-isomorphism machinery.
//!
//! Two sequences of distinct integers are order-isomorphic when every pair
//! of positions compares the same way in both. The reduced form of a
//! sequence is the unique permutation of `1..=len` order-isomorphic to it;
//! for a matrix the reduction is applied to each row on its own.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Returns the permutation of `1..=w.len()` that is order-isomorphic to `w`.
///
/// Fails when `w` repeats a letter.
pub fn reduce_word(w: &[u32]) -> Result<Vec<u32>> {
    let mut order: Vec<usize> = (0..w.len()).collect();
    order.sort_unstable_by_key(|&i| w[i]);
    let mut out = vec![0u32; w.len()];
    for (rank, pair) in order.iter().enumerate() {
        if rank > 0 && w[order[rank - 1]] == w[*pair] {
            return Err(Error::invalid(format!(
                "letter {} occurs more than once in the window",
                w[*pair]
            )));
        }
        out[*pair] = rank as u32 + 1;
    }
    Ok(out)
}

/// True when `w` is a permutation of `1..=w.len()`.
pub fn is_permutation(w: &[u32]) -> bool {
    let mut seen = vec![false; w.len()];
    for &x in w {
        let Some(slot) = (x as usize).checked_sub(1).and_then(|i| seen.get_mut(i)) else {
            return false;
        };
        if *slot {
            return false;
        }
        *slot = true;
    }
    true
}

/// Restricted-growth form of the equality pattern of `w`: the first
/// distinct letter becomes 1, the next new letter 2, and so on.
pub fn equality_pattern(w: &[u32]) -> Vec<u32> {
    let mut firsts: Vec<u32> = Vec::new();
    w.iter()
        .map(|x| match firsts.iter().position(|f| f == x) {
            Some(i) => i as u32 + 1,
            None => {
                firsts.push(*x);
                firsts.len() as u32
            }
        })
        .collect()
}

fn factorial_u128(n: u32) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, x| acc.checked_mul(x))
}

/// Lehmer rank (0-based, lexicographic) of a permutation of `1..=p.len()`.
///
/// `p` must be a permutation and `p.len()!` must fit in a `u128`.
pub fn lehmer_rank(p: &[u32]) -> u128 {
    let w = p.len();
    // Fenwick tree over values, filled right to left.
    let mut tree = vec![0u32; w + 1];
    let mut rank = 0u128;
    let mut radix = 1u128;
    for (i, &v) in p.iter().enumerate().rev() {
        let mut smaller = 0u32;
        let mut j = v as usize - 1;
        while j > 0 {
            smaller += tree[j];
            j &= j - 1;
        }
        let mut j = v as usize;
        while j <= w {
            tree[j] += 1;
            j += j & j.wrapping_neg();
        }
        let place = (w - 1 - i) as u128;
        if place > 0 {
            radix *= place;
        }
        rank += smaller as u128 * radix;
    }
    rank
}

/// Inverse of [`lehmer_rank`].
pub fn lehmer_unrank(mut rank: u128, w: usize) -> Vec<u32> {
    let mut pool: Vec<u32> = (1..=w as u32).collect();
    let mut out = Vec::with_capacity(w);
    for i in 0..w {
        let f = factorial_u128((w - 1 - i) as u32).unwrap_or(u128::MAX);
        let digit = (rank / f) as usize;
        rank %= f;
        out.push(pool.remove(digit));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum KeyCode {
    /// Row ranks concatenated in mixed radix `w!`.
    Packed(u128),
    /// Reduced rows written out, used when the packed form would overflow.
    Wide(Vec<u32>),
}

/// Canonical key of a reduced window. Two windows have equal keys iff they
/// have the same shape and are row-wise order-isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WindowKey {
    rows: u32,
    width: u32,
    code: KeyCode,
}

impl WindowKey {
    /// Key of rows that are already reduced (each a permutation of `1..=w`).
    pub fn of_reduced<R: AsRef<[u32]>>(rows: &[R]) -> Self {
        let width = rows.first().map_or(0, |r| r.as_ref().len());
        let packed = factorial_u128(width as u32).and_then(|f| {
            rows.iter().try_fold(0u128, |acc, r| {
                acc.checked_mul(f)?.checked_add(lehmer_rank(r.as_ref()))
            })
        });
        // Packing must be injective over the whole radix range, not only
        // for this particular value.
        let fits = factorial_u128(width as u32)
            .and_then(|f| (0..rows.len()).try_fold(1u128, |acc, _| acc.checked_mul(f)))
            .is_some();
        let code = match packed {
            Some(v) if fits => KeyCode::Packed(v),
            _ => KeyCode::Wide(rows.iter().flat_map(|r| r.as_ref().iter().copied()).collect()),
        };
        WindowKey {
            rows: rows.len() as u32,
            width: width as u32,
            code,
        }
    }

    pub fn row_count(&self) -> usize {
        self.rows as usize
    }

    pub fn width(&self) -> usize {
        self.width as usize
    }

    /// Recovers the reduced rows this key was built from.
    pub fn decode(&self) -> Vec<Vec<u32>> {
        let w = self.width as usize;
        match &self.code {
            KeyCode::Packed(v) => {
                let f = factorial_u128(self.width).unwrap_or(1);
                let mut v = *v;
                let mut rows = Vec::with_capacity(self.rows as usize);
                for _ in 0..self.rows {
                    rows.push(lehmer_unrank(v % f, w));
                    v /= f;
                }
                rows.reverse();
                rows
            }
            KeyCode::Wide(flat) => flat.chunks(w.max(1)).map(|c| c.to_vec()).collect(),
        }
    }
}

/// Reduced form of a window together with its canonical key.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedWindow {
    rows: Vec<Vec<u32>>,
    key: WindowKey,
}

impl ReducedWindow {
    /// Reduces every row of `rows`.
    pub fn reduce<R: AsRef<[u32]>>(rows: &[R]) -> Result<Self> {
        let width = rows.first().map_or(0, |r| r.as_ref().len());
        if rows.iter().any(|r| r.as_ref().len() != width) {
            return Err(Error::invalid("window rows have different lengths"));
        }
        let reduced = rows
            .iter()
            .map(|r| reduce_word(r.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let key = WindowKey::of_reduced(&reduced);
        Ok(ReducedWindow { rows: reduced, key })
    }

    /// Wraps rows that are known to be reduced already.
    pub fn from_reduced(rows: Vec<Vec<u32>>) -> Result<Self> {
        let width = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != width || !is_permutation(r)) {
            return Err(Error::invalid("rows are not permutations of a common length"));
        }
        let key = WindowKey::of_reduced(&rows);
        Ok(ReducedWindow { rows, key })
    }

    /// The identity window `I`: every row is `1 2 .. width`.
    pub fn identity(rows: usize, width: usize) -> Self {
        let row: Vec<u32> = (1..=width as u32).collect();
        let rows = vec![row; rows];
        let key = WindowKey::of_reduced(&rows);
        ReducedWindow { rows, key }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn key(&self) -> &WindowKey {
        &self.key
    }

    pub fn width(&self) -> usize {
        self.key.width()
    }

    pub fn into_rows(self) -> Vec<Vec<u32>> {
        self.rows
    }
}

impl PartialOrd for ReducedWindow {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ReducedWindow {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.rows.cmp(&other.rows)
    }
}

impl fmt::Display for ReducedWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_compact_rows(f, &self.rows, "/")
    }
}

pub(crate) fn write_compact_rows(
    f: &mut fmt::Formatter<'_>,
    rows: &[Vec<u32>],
    row_sep: &str,
) -> fmt::Result {
    let compact = rows.iter().flatten().all(|&x| x < 10);
    for (i, row) in rows.iter().enumerate() {
        if i > 0 {
            f.write_str(row_sep)?;
        }
        for (j, x) in row.iter().enumerate() {
            if j > 0 && !compact {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
    }
    Ok(())
}

/// A matrix with `d - 1` rows in which each row holds distinct positive
/// integers and the columns are pairwise distinct. The implicit top row
/// `1 2 .. m` of a `d`-dimensional permutation is never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermMatrix {
    rows: Vec<Vec<u32>>,
}

impl PermMatrix {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::invalid("a matrix needs at least one row"));
        }
        let m = rows[0].len();
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::invalid("matrix rows have different lengths"));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.contains(&0) {
                return Err(Error::invalid(format!("row {} contains 0", i + 1)));
            }
            let mut sorted = row.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|p| p[0] == p[1]) {
                return Err(Error::invalid(format!("row {} repeats an entry", i + 1)));
            }
        }
        let mut cols: Vec<Vec<u32>> = (0..m).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
        cols.sort_unstable();
        if cols.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::invalid("matrix has two equal columns"));
        }
        Ok(PermMatrix { rows })
    }

    /// A one-row matrix.
    pub fn from_word(word: Vec<u32>) -> Result<Self> {
        Self::new(vec![word])
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        debug_assert!(!rows.is_empty());
        PermMatrix { rows }
    }

    /// `I_{d;width}` without its top row: `rows` copies of `1 2 .. width`.
    pub fn identity(rows: usize, width: usize) -> Self {
        PermMatrix {
            rows: ReducedWindow::identity(rows.max(1), width).into_rows(),
        }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<u32>> {
        self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns `m`.
    pub fn columns(&self) -> usize {
        self.rows[0].len()
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    /// Columns `start .. start + width`, wrapping around when `start + width`
    /// runs past the end.
    pub fn window_rows(&self, start: usize, width: usize) -> Vec<Vec<u32>> {
        window_rows(&self.rows, start, width)
    }
}

impl fmt::Display for PermMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_compact_rows(f, &self.rows, "\n")
    }
}

pub(crate) fn window_rows<R: AsRef<[u32]>>(rows: &[R], start: usize, width: usize) -> Vec<Vec<u32>> {
    rows.iter()
        .map(|r| {
            let r = r.as_ref();
            (0..width).map(|o| r[(start + o) % r.len()]).collect()
        })
        .collect()
}

/// Reduces each row of `m`.
pub fn reduce_matrix(m: &PermMatrix) -> Result<ReducedWindow> {
    ReducedWindow::reduce(m.rows())
}

/// All width-`width` windows of `m` in reduced form, in order of their first
/// column. Linear mode yields `m - width + 1` windows; cyclic mode yields `m`
/// windows, the last `width - 1` of which wrap around.
pub fn windows(m: &PermMatrix, width: usize, cyclic: bool) -> Result<Vec<ReducedWindow>> {
    let cols = m.columns();
    if width == 0 || width > cols {
        return Err(Error::invalid(format!(
            "window width {width} must be between 1 and the column count {cols}"
        )));
    }
    let count = if cyclic { cols } else { cols - width + 1 };
    (0..count)
        .map(|s| ReducedWindow::reduce(&m.window_rows(s, width)))
        .collect()
}
