//! Overlap graphs of multi-dimensional permutations and the graph route to
//! u-cycles.
//!
//! A vertex of `P_d(n)` is a `d`-dimensional `n`-permutation, stored as its
//! `d - 1` non-trivial rows. There is an edge `X -> Y` when, in every row, the
//! last `n - 1` entries of `X` are order-isomorphic to the first `n - 1`
//! entries of `Y`. `P_2(n)` is the graph `P(n)` of overlapping permutations.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::TransitionGraph;
use crate::patterns::{reduce_word, ReducedWindow};
use crate::verify::all_permutations;
use crate::{Error, Result};

/// Default cap on the vertex count `(n!)^(d-1)`.
pub const DEFAULT_VERTEX_BUDGET: u64 = 100_000;

/// Default cap on node expansions in [`hamiltonian_cycle`].
pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

/// Rows of a reduced overlap, the label of an edge.
pub type Overlap = Vec<Vec<u32>>;

#[derive(Debug, Clone)]
pub struct OverlapGraph {
    pub graph: TransitionGraph<ReducedWindow, Overlap>,
    pub d: usize,
    pub n: usize,
}

impl OverlapGraph {
    /// Index of the vertex with the given reduced rows.
    pub fn find(&self, rows: &[Vec<u32>]) -> Option<usize> {
        self.graph
            .vertices()
            .binary_search_by(|v| v.rows().cmp(rows))
            .ok()
    }
}

fn reduced_rows(rows: &[Vec<u32>], range: core::ops::Range<usize>) -> Overlap {
    rows.iter()
        .map(|r| reduce_word(&r[range.clone()]).expect("rows of a permutation are distinct"))
        .collect()
}

/// Every `d`-dimensional `n`-permutation, rows in lexicographic order.
fn all_multiperms(d: usize, n: usize) -> Vec<Vec<Vec<u32>>> {
    let perms = all_permutations(n);
    let mut out = Vec::new();
    let mut digits = vec![0usize; d - 1];
    loop {
        out.push(digits.iter().map(|&i| perms[i].clone()).collect());
        let Some(pos) = (0..digits.len()).rev().find(|&i| digits[i] + 1 < perms.len()) else {
            break;
        };
        digits[pos] += 1;
        digits[pos + 1..].iter_mut().for_each(|x| *x = 0);
    }
    out
}

pub fn build_overlap_graph(d: usize, n: usize) -> Result<OverlapGraph> {
    build_overlap_graph_with_budget(d, n, DEFAULT_VERTEX_BUDGET)
}

/// Builds `P_d(n)`. Vertices are in lexicographic order of their rows and
/// the out-edges of each vertex follow the same order.
pub fn build_overlap_graph_with_budget(d: usize, n: usize, budget: u64) -> Result<OverlapGraph> {
    if d < 2 || n == 0 {
        return Err(Error::invalid("need d >= 2 and n >= 1"));
    }
    let fact = (1..=n as u64).try_fold(1u64, |a, x| a.checked_mul(x));
    let count = fact.and_then(|f| (0..d - 1).try_fold(1u64, |a, _| a.checked_mul(f)));
    match count {
        Some(c) if c <= budget => {}
        _ => {
            return Err(Error::BudgetExceeded {
                what: "overlap graph vertices (n!)^(d-1)",
                requested: count.map_or(u128::MAX, u128::from),
                limit: budget as u128,
            })
        }
    }
    let vertices: Vec<ReducedWindow> = all_multiperms(d, n)
        .into_iter()
        .map(|rows| ReducedWindow::from_reduced(rows).expect("rows are permutations"))
        .collect();
    let mut by_prefix: BTreeMap<Overlap, Vec<usize>> = BTreeMap::new();
    for (i, v) in vertices.iter().enumerate() {
        by_prefix.entry(reduced_rows(v.rows(), 0..n - 1)).or_default().push(i);
    }
    let suffixes: Vec<Overlap> = vertices.iter().map(|v| reduced_rows(v.rows(), 1..n)).collect();
    let mut graph = TransitionGraph::with_vertices(vertices);
    for (x, suffix) in suffixes.into_iter().enumerate() {
        for &y in &by_prefix[&suffix] {
            graph.add_edge(x, y, suffix.clone());
        }
    }
    Ok(OverlapGraph { graph, d, n })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cluster {
    /// Reduced first `n - 1` columns shared by the members.
    pub signature: Overlap,
    pub members: Vec<usize>,
}

/// Groups vertices by the reduced form of their first `n - 1` columns, in
/// signature order.
pub fn cluster_by_signature(g: &OverlapGraph) -> Vec<Cluster> {
    let mut map: BTreeMap<Overlap, Vec<usize>> = BTreeMap::new();
    for (i, v) in g.graph.vertices().iter().enumerate() {
        map.entry(reduced_rows(v.rows(), 0..g.n - 1)).or_default().push(i);
    }
    map.into_iter()
        .map(|(signature, members)| Cluster { signature, members })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HamiltonSearch {
    /// A validated Hamiltonian cycle, as vertex indices starting at vertex 0.
    Found(Vec<usize>),
    /// No cycle was found. `exhausted` is set when the search space was
    /// fully explored before the budget ran out.
    Unknown { expansions: u64, exhausted: bool },
}

/// Depth-first backtracking from vertex 0, trying successors in vertex
/// order. Each vertex pushed onto the path counts as one expansion.
pub fn hamiltonian_cycle<V, E>(g: &TransitionGraph<V, E>, budget: u64) -> HamiltonSearch {
    let n = g.vertex_count();
    if n == 0 {
        return HamiltonSearch::Unknown {
            expansions: 0,
            exhausted: true,
        };
    }
    let succ: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut s: Vec<usize> = g.successors(v).filter(|&w| w != v || n == 1).collect();
            s.sort_unstable();
            s.dedup();
            s
        })
        .collect();
    let mut on_path = vec![false; n];
    let mut path = vec![0usize];
    let mut cursor = vec![0usize];
    on_path[0] = true;
    let mut expansions = 1u64;
    while let Some(&v) = path.last() {
        if path.len() == n && succ[v].contains(&0) {
            debug_assert!(g.is_hamiltonian_cycle(&path));
            return HamiltonSearch::Found(path);
        }
        let top = cursor.len() - 1;
        let next = if path.len() < n {
            succ[v][cursor[top]..].iter().position(|&w| !on_path[w])
        } else {
            None
        };
        match next {
            Some(off) => {
                let w = succ[v][cursor[top] + off];
                cursor[top] += off + 1;
                if expansions == budget {
                    return HamiltonSearch::Unknown {
                        expansions,
                        exhausted: false,
                    };
                }
                expansions += 1;
                on_path[w] = true;
                path.push(w);
                cursor.push(0);
            }
            None => {
                on_path[v] = false;
                path.pop();
                cursor.pop();
            }
        }
    }
    HamiltonSearch::Unknown {
        expansions,
        exhausted: true,
    }
}

/// Order relations forced on the entries of a candidate u-cycle by a
/// Hamiltonian cycle of `P_d(n)`. Position `j` of the cycle carries one
/// unknown value per row; the `i`-th cycle vertex dictates the relative
/// order of the values at positions `i, i+1, .., i+n-1` (cyclically).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImpliedOrder {
    /// Number of positions.
    pub len: usize,
    /// Per row, the pairs `(p, q)` with value at `p` < value at `q`.
    pub rows: Vec<BTreeSet<(usize, usize)>>,
}

impl ImpliedOrder {
    /// A directed cycle among the relations of `row`, if there is one.
    pub fn cycle_in(&self, row: usize) -> Option<Vec<usize>> {
        let adj = self.adjacency(row);
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut state = vec![0u8; self.len];
        for root in 0..self.len {
            if state[root] != 0 {
                continue;
            }
            let mut stack = vec![(root, 0usize)];
            state[root] = 1;
            while let Some(&mut (v, ref mut i)) = stack.last_mut() {
                if let Some(&w) = adj[v].get(*i) {
                    *i += 1;
                    match state[w] {
                        0 => {
                            state[w] = 1;
                            stack.push((w, 0));
                        }
                        1 => {
                            let from = stack.iter().position(|&(u, _)| u == w).expect("w is on the stack");
                            return Some(stack[from..].iter().map(|&(u, _)| u).collect());
                        }
                        _ => {}
                    }
                } else {
                    state[v] = 2;
                    stack.pop();
                }
            }
        }
        None
    }

    /// True when no row's relations contain a directed cycle.
    pub fn is_acyclic(&self) -> bool {
        (0..self.rows.len()).all(|r| self.cycle_in(r).is_none())
    }

    fn adjacency(&self, row: usize) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.len];
        for &(p, q) in &self.rows[row] {
            adj[p].push(q);
        }
        adj
    }

    /// The covering pairs of `row`: relations not implied by transitivity
    /// from the others. Requires the row to be acyclic.
    pub fn cover_relations(&self, row: usize) -> BTreeSet<(usize, usize)> {
        let adj = self.adjacency(row);
        let mut out = BTreeSet::new();
        for p in 0..self.len {
            // positions reachable from p in two or more steps
            let mut far = vec![false; self.len];
            let mut stack: Vec<usize> = adj[p].iter().flat_map(|&c| adj[c].iter().copied()).collect();
            while let Some(v) = stack.pop() {
                if !far[v] {
                    far[v] = true;
                    stack.extend(adj[v].iter().copied());
                }
            }
            out.extend(adj[p].iter().filter(|&&q| !far[q]).map(|&q| (p, q)));
        }
        out
    }
}

/// Reads the relations forced by `cycle`, a sequence of vertices of
/// `P_d(n)`.
pub fn implied_order(cycle: &[ReducedWindow], d: usize, n: usize) -> Result<ImpliedOrder> {
    if d < 2 || n == 0 {
        return Err(Error::invalid("need d >= 2 and n >= 1"));
    }
    if cycle.iter().any(|v| v.rows().len() != d - 1 || v.width() != n) {
        return Err(Error::invalid(format!(
            "cycle vertices must be {}-row permutations of width {n}",
            d - 1
        )));
    }
    let len = cycle.len();
    let mut rows = vec![BTreeSet::new(); d - 1];
    for (i, v) in cycle.iter().enumerate() {
        for (r, row) in v.rows().iter().enumerate() {
            for p in 0..n {
                for q in p + 1..n {
                    let (a, b) = ((i + p) % len, (i + q) % len);
                    rows[r].insert(if row[p] < row[q] { (a, b) } else { (b, a) });
                }
            }
        }
    }
    Ok(ImpliedOrder { len, rows })
}

/// Assigns each position, per row, the number of elements on the longest
/// chain of relations ending at it.
pub fn linearize(order: &ImpliedOrder) -> Result<Vec<Vec<u32>>> {
    let mut out = Vec::with_capacity(order.rows.len());
    for r in 0..order.rows.len() {
        if let Some(witness) = order.cycle_in(r) {
            return Err(Error::CyclicOrder { row: r, witness });
        }
        let adj = order.adjacency(r);
        let mut indeg = vec![0usize; order.len];
        for &(_, q) in &order.rows[r] {
            indeg[q] += 1;
        }
        let mut level = vec![1u32; order.len];
        let mut ready: Vec<usize> = (0..order.len).filter(|&v| indeg[v] == 0).collect();
        while let Some(v) = ready.pop() {
            for &w in &adj[v] {
                level[w] = level[w].max(level[v] + 1);
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.push(w);
                }
            }
        }
        out.push(level);
    }
    Ok(out)
}

fn check_permutation(p: &[u32]) -> Result<()> {
    if crate::patterns::is_permutation(p) {
        Ok(())
    } else {
        Err(Error::invalid("not a permutation of 1..n"))
    }
}

/// Keys for `n`-permutations: the heads for `n - 1`, in order, each with
/// `n` appended. The single key for `n = 2` is `12`.
pub fn keys(n: usize) -> Result<Vec<Vec<u32>>> {
    match n {
        0 | 1 => Err(Error::invalid("keys need n >= 2")),
        2 => Ok(vec![vec![1, 2]]),
        _ => {
            let mut out = Vec::new();
            for key in keys(n - 1)? {
                for mut head in heads(&key)? {
                    head.push(n as u32);
                    out.push(head);
                }
            }
            Ok(out)
        }
    }
}

/// Heads generated from `key` by displacement: the values `i + 1` and `i`
/// are swapped for `i = n - 1` down to `2`, each swap applied to the
/// previous head.
pub fn heads(key: &[u32]) -> Result<Vec<Vec<u32>>> {
    Ok(keygroup_heads(&[key.to_vec()])?
        .into_iter()
        .map(|mut rows| rows.swap_remove(0))
        .collect())
}

/// Cyclic left shifts of `head`, starting with `head` itself.
pub fn rotations(head: &[u32]) -> Result<Vec<Vec<u32>>> {
    check_permutation(head)?;
    if head.first() != Some(&1) {
        return Err(Error::invalid("a head must begin with 1"));
    }
    Ok(rotate_rows(&[head.to_vec()])
        .into_iter()
        .map(|mut rows| rows.swap_remove(0))
        .collect())
}

fn rotate_rows(rows: &[Vec<u32>]) -> Vec<Vec<Vec<u32>>> {
    let n = rows[0].len();
    (0..n)
        .map(|s| {
            rows.iter()
                .map(|r| reduce_word(&[&r[s..], &r[..s]].concat()).expect("rows are permutations"))
                .collect()
        })
        .collect()
}

/// Heads of a key group. The first row is the key; each displacement on it
/// swaps two columns, and the same columns are swapped in the other rows.
fn keygroup_heads(key_rows: &[Vec<u32>]) -> Result<Vec<Vec<Vec<u32>>>> {
    let key = &key_rows[0];
    let n = key.len();
    for r in key_rows {
        check_permutation(r)?;
        if r.len() != n {
            return Err(Error::invalid("key rows have different lengths"));
        }
    }
    if n < 2 || key[0] != 1 || key[n - 1] != n as u32 {
        return Err(Error::invalid("a key must begin with 1 and end with n"));
    }
    let mut current = key_rows.to_vec();
    let mut out = vec![current.clone()];
    for i in (2..n as u32).rev() {
        let p = current[0].iter().position(|&x| x == i + 1).expect("value present");
        let q = current[0].iter().position(|&x| x == i).expect("value present");
        for row in &mut current {
            row.swap(p, q);
        }
        out.push(current.clone());
    }
    Ok(out)
}

/// The list for a key group read column by column: for each head, its
/// rotations with all rows shifted together.
pub fn keygroup_list(key_rows: &[Vec<u32>]) -> Result<Vec<Vec<Vec<u32>>>> {
    if key_rows.is_empty() {
        return Err(Error::invalid("a key group needs at least one row"));
    }
    Ok(keygroup_heads(key_rows)?
        .iter()
        .flat_map(|h| rotate_rows(h))
        .collect())
}

fn is_overlap_edge(x: &[Vec<u32>], y: &[Vec<u32>]) -> bool {
    let n = x[0].len();
    x.iter()
        .zip(y)
        .all(|(a, b)| reduce_word(&a[1..]).ok() == reduce_word(&b[..n - 1]).ok())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyGroupCheck {
    pub list: Vec<Vec<Vec<u32>>>,
    /// Index `i` of the first pair `list[i] -> list[i + 1]` (cyclically)
    /// that is not an edge.
    pub broken_at: Option<usize>,
}

impl KeyGroupCheck {
    pub fn is_cycle(&self) -> bool {
        self.broken_at.is_none()
    }
}

/// Builds the key group of the 3-dimensional permutation with non-trivial
/// rows `key2` and `key3` and checks whether its list closes into a cycle
/// of `P_3(n)`.
pub fn d3_keygroup_cycle_check(key2: &[u32], key3: &[u32]) -> Result<KeyGroupCheck> {
    let list = keygroup_list(&[key2.to_vec(), key3.to_vec()])?;
    let len = list.len();
    let broken_at = (0..len).find(|&i| !is_overlap_edge(&list[i], &list[(i + 1) % len]));
    Ok(KeyGroupCheck { list, broken_at })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct S4Switch {
    pub part1: Vec<Vec<u32>>,
    pub part2: Vec<Vec<u32>>,
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub a_prime: Vec<u32>,
    pub b_prime: Vec<u32>,
    /// Hamiltonian cycle of `P(4)`, validated against the graph.
    pub cycle: Vec<Vec<u32>>,
}

/// Joins the two key cycles of `S_4` by exchanging their last elements
/// `a = 2134` and `b = 2143`. The predecessors `a' = 4213` and `b' = 3214`
/// then lead into `b` and `a` respectively.
pub fn s4_switch() -> Result<S4Switch> {
    let g = build_overlap_graph(2, 4)?;
    let idx = |p: &Vec<u32>| g.find(core::slice::from_ref(p)).expect("p is a 4-permutation");
    let edge = |x: &Vec<u32>, y: &Vec<u32>| g.graph.has_edge(idx(x), idx(y));
    let key_list = keys(4)?;
    let mut parts = Vec::new();
    for key in &key_list {
        let part: Vec<Vec<u32>> = heads(key)?
            .iter()
            .map(|h| rotations(h))
            .collect::<Result<Vec<_>>>()?
            .concat();
        let len = part.len();
        if !(0..len).all(|i| edge(&part[i], &part[(i + 1) % len])) {
            return Err(Error::invalid("a key part is not a cycle of P(4)"));
        }
        parts.push(part);
    }
    let (part2, part1) = (parts.pop().expect("two keys"), parts.pop().expect("two keys"));
    let last = part1.len() - 1;
    let (a, b) = (part1[last].clone(), part2[last].clone());
    let (a_prime, b_prime) = (part1[last - 1].clone(), part2[last - 1].clone());
    if !edge(&a_prime, &b) || !edge(&b_prime, &a) {
        return Err(Error::invalid("switch edges are missing from P(4)"));
    }
    let cycle: Vec<Vec<u32>> = part1[..last]
        .iter()
        .chain(core::iter::once(&b))
        .chain(&part2[..last])
        .chain(core::iter::once(&a))
        .cloned()
        .collect();
    let indices: Vec<usize> = cycle.iter().map(idx).collect();
    if !g.graph.is_hamiltonian_cycle(&indices) {
        return Err(Error::invalid("switched list is not a Hamiltonian cycle"));
    }
    Ok(S4Switch {
        part1,
        part2,
        a,
        b,
        a_prime,
        b_prime,
        cycle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(s: &str) -> Vec<u32> {
        s.bytes().map(|b| (b - b'0') as u32).collect()
    }

    fn ps(items: &[&str]) -> Vec<Vec<u32>> {
        items.iter().map(|s| p(s)).collect()
    }

    fn vertex(g: &OverlapGraph, rows: &[&str]) -> usize {
        g.find(&ps(rows)).unwrap()
    }

    #[test]
    fn p3_shape() {
        let g = build_overlap_graph(2, 3).unwrap();
        assert_eq!((g.graph.vertex_count(), g.graph.edge_count()), (6, 18));
        for s in ["123", "321"] {
            let v = vertex(&g, &[s]);
            assert!(g.graph.has_edge(v, v));
        }
        let x = vertex(&g, &["132"]);
        let succ: Vec<_> = g.graph.successors(x).map(|y| g.graph.vertex(y).to_string()).collect();
        assert_eq!(succ, ["213", "312", "321"]);
    }

    #[test]
    fn trivial_and_d3_shapes() {
        let g = build_overlap_graph(2, 1).unwrap();
        assert_eq!((g.graph.vertex_count(), g.graph.edge_count()), (1, 1));
        let g = build_overlap_graph(3, 3).unwrap();
        assert_eq!(g.graph.vertex_count(), 36);
        assert!((0..36).all(|v| g.graph.out_degree(v) == 9 && g.graph.in_degree(v) == 9));
        assert!(matches!(build_overlap_graph(2, 9), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn clusters() {
        let sizes = |d, n| -> Vec<usize> {
            cluster_by_signature(&build_overlap_graph(d, n).unwrap())
                .iter()
                .map(|c| c.members.len())
                .collect()
        };
        assert_eq!(sizes(2, 3), [3, 3]);
        assert_eq!(sizes(2, 1), [1]);
        assert_eq!(sizes(3, 2), [4]);
        let c = cluster_by_signature(&build_overlap_graph(2, 3).unwrap());
        assert_eq!(c[0].signature, [p("12")]);
        assert_eq!(c[1].signature, [p("21")]);
    }

    #[test]
    fn hamiltonian_search() {
        for (d, n) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3)] {
            let g = build_overlap_graph(d, n).unwrap();
            match hamiltonian_cycle(&g.graph, DEFAULT_SEARCH_BUDGET) {
                HamiltonSearch::Found(c) => assert!(g.graph.is_hamiltonian_cycle(&c)),
                other => panic!("({d},{n}): {other:?}"),
            }
        }
        let g = build_overlap_graph(2, 4).unwrap();
        assert_eq!(
            hamiltonian_cycle(&g.graph, 3),
            HamiltonSearch::Unknown {
                expansions: 3,
                exhausted: false
            }
        );
    }

    fn paper_cycle() -> Vec<ReducedWindow> {
        ["132", "312", "123", "231", "321", "213"]
            .iter()
            .map(|s| ReducedWindow::from_reduced(vec![p(s)]).unwrap())
            .collect()
    }

    #[test]
    fn figure_poset_and_linear_extension() {
        let order = implied_order(&paper_cycle(), 2, 3).unwrap();
        assert!(order.is_acyclic());
        let (a, b, c, d, e, f) = (0, 1, 2, 3, 4, 5);
        let expected: BTreeSet<_> = [(a, c), (a, f), (c, d), (f, d), (d, b), (d, e)].into_iter().collect();
        assert_eq!(order.cover_relations(0), expected);
        assert_eq!(linearize(&order).unwrap(), [p("142342")]);
    }

    #[test]
    fn trivial_orders() {
        let one = [ReducedWindow::from_reduced(vec![vec![1]]).unwrap()];
        let order = implied_order(&one, 2, 1).unwrap();
        assert!(order.rows[0].is_empty());
        assert_eq!(linearize(&order).unwrap(), [[1]]);
    }

    #[test]
    fn cyclic_order_is_refused() {
        let order = ImpliedOrder {
            len: 3,
            rows: vec![[(0, 1), (1, 2), (2, 0)].into_iter().collect()],
        };
        match linearize(&order) {
            Err(Error::CyclicOrder { row: 0, witness }) => assert_eq!(witness.len(), 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn keys_heads_rotations() {
        assert_eq!(keys(3).unwrap(), [p("123")]);
        assert_eq!(keys(4).unwrap(), ps(&["1234", "1324"]));
        let k5 = keys(5).unwrap();
        assert_eq!(k5.len(), 6);
        assert!(k5.iter().all(|k| k[0] == 1 && k[4] == 5));
        assert_eq!(heads(&p("1234")).unwrap(), ps(&["1234", "1243", "1342"]));
        assert_eq!(heads(&p("1324")).unwrap(), ps(&["1324", "1423", "1432"]));
        assert_eq!(heads(&p("123")).unwrap(), ps(&["123", "132"]));
        assert_eq!(rotations(&p("1234")).unwrap(), ps(&["1234", "2341", "3412", "4123"]));
        assert_eq!(rotations(&[1]).unwrap(), [[1]]);
        assert_eq!(rotations(&p("132")).unwrap(), ps(&["132", "321", "213"]));
        assert!(heads(&p("2134")).is_err());
        assert!(rotations(&p("213")).is_err());
    }

    #[test]
    fn every_permutation_is_reached_once() {
        for n in 3..=6 {
            let mut all: Vec<Vec<u32>> = Vec::new();
            for k in keys(n).unwrap() {
                for h in heads(&k).unwrap() {
                    all.extend(rotations(&h).unwrap());
                }
            }
            all.sort();
            assert_eq!(all, all_permutations(n));
        }
    }

    #[test]
    fn s4_switch_joins_the_parts() {
        let s = s4_switch().unwrap();
        assert_eq!((s.a.clone(), s.b.clone()), (p("2134"), p("2143")));
        assert_eq!((s.a_prime.clone(), s.b_prime.clone()), (p("4213"), p("3214")));
        assert_eq!(s.part1.len(), 12);
        assert_eq!(s.part2.len(), 12);
        let mut sorted = s.cycle.clone();
        sorted.sort();
        assert_eq!(sorted, all_permutations(4));
        let g = build_overlap_graph(2, 4).unwrap();
        assert!(g.graph.has_edge(vertex(&g, &["4213"]), vertex(&g, &["2143"])));
        assert!(!g.graph.has_edge(vertex(&g, &["2134"]), vertex(&g, &["3214"])));
    }

    #[test]
    fn d3_keygroups() {
        let fig7 = d3_keygroup_cycle_check(&p("123"), &p("132")).unwrap();
        assert!(fig7.is_cycle());
        assert_eq!(
            fig7.list,
            [
                ps(&["123", "132"]),
                ps(&["231", "321"]),
                ps(&["312", "213"]),
                ps(&["132", "123"]),
                ps(&["321", "231"]),
                ps(&["213", "312"]),
            ]
        );
        assert!(d3_keygroup_cycle_check(&p("123"), &p("123")).unwrap().is_cycle());
        let fig8 = d3_keygroup_cycle_check(&p("123"), &p("231")).unwrap();
        assert!(!fig8.is_cycle());
        assert_eq!(
            fig8.list,
            [
                ps(&["123", "231"]),
                ps(&["231", "312"]),
                ps(&["312", "123"]),
                ps(&["132", "213"]),
                ps(&["321", "132"]),
                ps(&["213", "321"]),
            ]
        );
        assert!(d3_keygroup_cycle_check(&p("123"), &p("12")).is_err());
        assert!(d3_keygroup_cycle_check(&p("213"), &p("123")).is_err());
    }
}
