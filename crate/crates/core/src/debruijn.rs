//! De Bruijn sequences and u-cycles for `d`-dimensional matrices.
//!
//! Word-level operations use the alphabet `{0..k-1}`. Matrix entries use
//! `{1..k}`; [`matrix_ucycle`] does the conversion.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::outcome::{Stall, UCycleOutcome};
use crate::{Error, Result, TransitionGraph};

/// Upper bound on `k^n` for the bit tables and graphs built here.
pub const WORD_BUDGET: u64 = 1 << 26;

pub(crate) fn checked_pow(base: u64, exp: usize, what: &'static str, limit: u64) -> Result<u64> {
    let v = (0..exp).try_fold(1u64, |acc, _| acc.checked_mul(base));
    match v {
        Some(v) if v <= limit => Ok(v),
        _ => Err(Error::BudgetExceeded {
            what,
            requested: (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base as u128)),
            limit: limit as u128,
        }),
    }
}

/// Martin's greedy construction.
///
/// Starting from `start` (default `(k-1)^(n-1)`), repeatedly appends the
/// smallest letter of `{0..k-1}` that keeps all length-`n` factors
/// distinct, then drops the `n - 1` rightmost letters. With the default
/// start the result is always a de Bruijn sequence of length `k^n`.
pub fn martin(n: usize, k: u32, start: Option<&[u32]>) -> Result<UCycleOutcome> {
    if n == 0 || k == 0 {
        return Err(Error::invalid("martin needs n >= 1 and k >= 1"));
    }
    let total = checked_pow(k as u64, n, "k^n", WORD_BUDGET)?;
    let mut word: Vec<u32> = match start {
        Some(s) => s.to_vec(),
        None => vec![k - 1; n - 1],
    };
    if let Some(&bad) = word.iter().find(|&&x| x >= k) {
        return Err(Error::invalid(format!("start letter {bad} is outside 0..{k}")));
    }
    let k64 = k as u64;
    let mut seen = vec![false; total as usize];
    let mut covered = 0u64;
    for w in word.windows(n) {
        let code = w.iter().fold(0u64, |acc, &x| acc * k64 + x as u64);
        if core::mem::replace(&mut seen[code as usize], true) {
            return Err(Error::invalid("start repeats a length-n factor"));
        }
        covered += 1;
    }
    // radix code of the last n-1 letters
    let tail_len = (n - 1).min(word.len());
    let suffix_mod = total / k64;
    let mut tail = word[word.len() - tail_len..]
        .iter()
        .fold(0u64, |acc, &x| acc * k64 + x as u64);
    loop {
        let base = (tail % suffix_mod) * k64;
        let pick = (0..k64).find(|&c| word.len() + 1 < n || !seen[(base + c) as usize]);
        let Some(c) = pick else { break };
        if word.len() + 1 >= n {
            seen[(base + c) as usize] = true;
            covered += 1;
        }
        word.push(c as u32);
        tail = base + c;
    }
    if covered < total {
        return Ok(UCycleOutcome::Stalled(Stall {
            word,
            covered,
            total,
        }));
    }
    let uword = word;
    let cycle = uword[..uword.len() - (n - 1)].to_vec();
    if is_cyclic_debruijn(&cycle, n, k) {
        Ok(UCycleOutcome::Cycle(cycle))
    } else {
        Ok(UCycleOutcome::NotCyclic { uword })
    }
}

pub(crate) fn is_cyclic_debruijn(w: &[u32], n: usize, k: u32) -> bool {
    let total = (k as u64).pow(n as u32);
    if w.len() as u64 != total {
        return false;
    }
    let mut seen = vec![false; total as usize];
    (0..w.len()).all(|s| {
        let code = (0..n).fold(0u64, |acc, o| acc * k as u64 + w[(s + o) % w.len()] as u64);
        !core::mem::replace(&mut seen[code as usize], true)
    })
}

/// The de Bruijn graph `B(n, k)`: vertices are the `k^n` words of length
/// `n` (vertex `i` is the base-`k` expansion of `i`), with an edge
/// `x1..xn -> x2..x(n+1)` labelled `x1..x(n+1)` for every letter `x(n+1)`.
pub fn debruijn_graph(n: usize, k: u32) -> Result<TransitionGraph<Vec<u32>, Vec<u32>>> {
    if k == 0 {
        return Err(Error::invalid("alphabet must be nonempty"));
    }
    let vertices = checked_pow(k as u64, n, "k^n", WORD_BUDGET)?;
    checked_pow(k as u64, n + 1, "k^(n+1)", WORD_BUDGET)?;
    let labels: Vec<Vec<u32>> = (0..vertices).map(|i| digits(i, k, n)).collect();
    let mut g = TransitionGraph::with_vertices(labels);
    for v in 0..vertices {
        for x in 0..k {
            let head = (v * k as u64 + x as u64) % vertices;
            let mut label = g.vertex(v as usize).clone();
            label.push(x);
            g.add_edge(v as usize, head as usize, label);
        }
    }
    Ok(g)
}

/// Line graph of a word-labelled graph, with edge labels merged the way
/// de Bruijn graphs need: `x1..xm` followed by `x2..x(m+1)` gives
/// `x1..x(m+1)`.
pub fn line_graph(g: &TransitionGraph<Vec<u32>, Vec<u32>>) -> TransitionGraph<Vec<u32>, Vec<u32>> {
    g.line_graph(|a, b| {
        let mut l = a.clone();
        if let Some(&last) = b.last() {
            l.push(last);
        }
        l
    })
}

fn digits(mut value: u64, k: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0u32; len];
    for slot in out.iter_mut().rev() {
        *slot = (value % k as u64) as u32;
        value /= k as u64;
    }
    out
}

/// A de Bruijn sequence of order `n` read off an Eulerian cycle of
/// `B(n-1, k)`: the first letters of the successive edge labels.
pub fn debruijn_via_euler(n: usize, k: u32) -> Result<Vec<u32>> {
    if n == 0 {
        return Err(Error::invalid("order must be at least 1"));
    }
    let g = debruijn_graph(n - 1, k)?;
    let cycle = g.eulerian_cycle()?;
    Ok(cycle.iter().map(|&e| g.edge(e).label[0]).collect())
}

/// Lexicographically least rotation of a cyclic word.
pub fn canonical_rotation(w: &[u32]) -> Vec<u32> {
    (0..w.len().max(1))
        .map(|s| w.iter().cycle().skip(s).take(w.len()).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

/// Shape and alphabet of a family of `d`-dimensional matrices
/// `n1 x .. x nd` over `{1..k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixUCycleSpec {
    pub dims: Vec<usize>,
    pub k: u32,
}

impl MatrixUCycleSpec {
    pub fn new(dims: Vec<usize>, k: u32) -> Result<Self> {
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::invalid("dimensions must be a nonempty list of positive sizes"));
        }
        if k == 0 {
            return Err(Error::invalid("alphabet size must be positive"));
        }
        let spec = MatrixUCycleSpec { dims, k };
        spec.letters()?;
        Ok(spec)
    }

    /// Number of cells in one `(d-1)`-dimensional slice.
    pub fn slice_cells(&self) -> usize {
        self.dims[..self.dims.len() - 1].iter().product()
    }

    /// Length of the window, `n_d`.
    pub fn depth(&self) -> usize {
        self.dims[self.dims.len() - 1]
    }

    /// `K = k^(n1 ... n(d-1))`, the number of distinct slices.
    pub fn letters(&self) -> Result<u64> {
        checked_pow(self.k as u64, self.slice_cells(), "slice alphabet size", crate::VALUE_BUDGET)
    }

    /// `K^(n_d)`, the number of matrices and the u-cycle length.
    pub fn matrix_count(&self) -> Result<u64> {
        checked_pow(self.letters()?, self.depth(), "matrix count", WORD_BUDGET)
    }

    /// The slice with lexicographic index `letter`, flattened row-major.
    pub fn decode_slice(&self, letter: u32) -> Vec<u32> {
        digits(letter as u64, self.k, self.slice_cells())
            .into_iter()
            .map(|x| x + 1)
            .collect()
    }
}

/// A u-cycle for `d`-dimensional matrices: a cyclic sequence of
/// `(d-1)`-dimensional slices (each flattened row-major) in which every
/// matrix shows up exactly once as `n_d` consecutive slices.
pub fn matrix_ucycle(spec: &MatrixUCycleSpec) -> Result<Vec<Vec<u32>>> {
    let letters = spec.letters()?;
    spec.matrix_count()?;
    let word = match martin(spec.depth(), letters as u32, None)? {
        UCycleOutcome::Cycle(w) => w,
        // martin with its default start always closes up
        other => unreachable!("default-start greedy did not close: {other:?}"),
    };
    Ok(word.into_iter().map(|l| spec.decode_slice(l)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(o: UCycleOutcome) -> Vec<u32> {
        match o {
            UCycleOutcome::Cycle(w) => w,
            other => panic!("expected a cycle, got {other:?}"),
        }
    }

    #[test]
    fn martin_examples() {
        assert_eq!(cycle(martin(2, 3, None).unwrap()), [2, 0, 0, 1, 0, 2, 1, 1, 2]);
        assert_eq!(cycle(martin(1, 2, None).unwrap()), [0, 1]);
        let w = cycle(martin(3, 2, None).unwrap());
        assert_eq!(canonical_rotation(&w), [0, 0, 0, 1, 0, 1, 1, 1]);
        let w = cycle(martin(2, 2, None).unwrap());
        assert_eq!(canonical_rotation(&w), [0, 0, 1, 1]);
    }

    #[test]
    fn martin_reports_stalls() {
        match martin(2, 2, Some(&[0])).unwrap() {
            UCycleOutcome::Stalled(s) => {
                assert_eq!(s.word, [0, 0, 1, 0]);
                assert_eq!((s.covered, s.total), (3, 4));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(martin(2, 2, Some(&[1])).unwrap(), UCycleOutcome::Cycle(vec![1, 0, 0, 1]));
        assert!(martin(2, 2, Some(&[2])).is_err());
        assert!(martin(2, 2, Some(&[0, 0, 0])).is_err());
    }

    #[test]
    fn debruijn_graph_shapes() {
        let g = debruijn_graph(2, 2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 8));
        let g = debruijn_graph(1, 1).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 1));
        assert_eq!(g.edge(0).head, 0);
        let g = debruijn_graph(3, 2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (8, 16));
        assert!((0..8).all(|v| g.out_degree(v) == 2));
        assert_eq!(line_graph(&debruijn_graph(2, 3).unwrap()).vertex_count(), 27);
    }

    #[test]
    fn euler_route_examples() {
        assert_eq!(canonical_rotation(&debruijn_via_euler(2, 2).unwrap()), [0, 0, 1, 1]);
        assert_eq!(
            canonical_rotation(&debruijn_via_euler(3, 2).unwrap()),
            [0, 0, 0, 1, 0, 1, 1, 1]
        );
        assert_eq!(debruijn_via_euler(2, 3).unwrap().len(), 9);
        assert!(debruijn_via_euler(0, 3).is_err());
    }

    #[test]
    fn matrix_slices_decode_lexicographically() {
        let spec = MatrixUCycleSpec::new(vec![2, 2], 2).unwrap();
        assert_eq!(spec.letters().unwrap(), 4);
        let decoded: Vec<Vec<u32>> = (0..4).map(|l| spec.decode_slice(l)).collect();
        assert_eq!(decoded, [vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
        assert_eq!(matrix_ucycle(&spec).unwrap().len(), 16);

        let spec = MatrixUCycleSpec::new(vec![1], 2).unwrap();
        assert_eq!(matrix_ucycle(&spec).unwrap(), [vec![1], vec![2]]);
        assert!(MatrixUCycleSpec::new(vec![], 2).is_err());
        assert!(MatrixUCycleSpec::new(vec![2, 0], 2).is_err());
        assert!(MatrixUCycleSpec::new(vec![40, 2], 2).is_err());
    }
}
