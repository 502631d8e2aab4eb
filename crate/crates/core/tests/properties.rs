mod common;

use std::collections::BTreeSet;

use common::{brute_bell, linear_windows, naive_extension, naive_partition_greedy, reduce, rgs};
use proptest::prelude::*;
use ucycle_core::debruijn::{debruijn_via_euler, martin};
use ucycle_core::greedy_ucycle::greedy_uword;
use ucycle_core::outcome::{UCycleOutcome, UWordOutcome};
use ucycle_core::overlap_graph::{build_overlap_graph, hamiltonian_cycle, implied_order, linearize, HamiltonSearch};
use ucycle_core::patterns::{is_permutation, lehmer_rank, lehmer_unrank, reduce_word, windows};
use ucycle_core::setpartition::{bell, greedy_partition_uword, partition_pattern, search_starts, SearchMode, SearchOptions};
use ucycle_core::verify::{verify_debruijn, verify_multiperm_ucycle};
use ucycle_core::{PermMatrix, ReducedWindow, WindowKey};

const INSTANCES: [(usize, usize); 12] =
    [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (5, 2)];

fn distinct_values(max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::btree_set(0u32..1000, 1..=max_len)
        .prop_flat_map(|s| Just(s.into_iter().collect::<Vec<_>>()).prop_shuffle())
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

proptest! {
    #[test]
    fn reduce_matches_counting(w in distinct_values(9)) {
        let r = reduce_word(&w).unwrap();
        prop_assert_eq!(&r, &reduce(&w));
        prop_assert!(is_permutation(&r));
        prop_assert_eq!(reduce_word(&r).unwrap(), r);
    }

    #[test]
    fn reduce_ignores_increasing_relabels(w in distinct_values(9), a in 1u32..5, b in 0u32..50) {
        let moved: Vec<u32> = w.iter().map(|&x| a * x + b).collect();
        prop_assert_eq!(reduce_word(&moved).unwrap(), reduce_word(&w).unwrap());
    }

    #[test]
    fn window_counts(w in distinct_values(12), n in 1usize..6) {
        prop_assume!(n <= w.len());
        let m = PermMatrix::new(vec![reduce(&w)]).unwrap();
        prop_assert_eq!(windows(&m, n, false).unwrap().len(), (w.len() + 1).saturating_sub(n));
        prop_assert_eq!(windows(&m, n, true).unwrap().len(), w.len());
    }

    #[test]
    fn lehmer_roundtrip(width in 1usize..12, seed in any::<u128>()) {
        let rank = seed % factorial(width);
        let p = lehmer_unrank(rank, width);
        prop_assert!(is_permutation(&p));
        prop_assert_eq!(lehmer_rank(&p), rank);
    }

    #[test]
    fn window_key_decodes(rows in 1usize..4, width in 1usize..7, seed in any::<u64>()) {
        let f = factorial(width);
        let m: Vec<Vec<u32>> = (0..rows)
            .map(|i| lehmer_unrank((seed as u128).wrapping_mul(i as u128 + 7) % f, width))
            .collect();
        prop_assert_eq!(WindowKey::of_reduced(&m).decode(), m);
    }

    #[test]
    fn pattern_is_rgs_and_ignores_relabels(w in prop::collection::vec(1u32..6, 0..12), shift in 0u32..20) {
        let p = partition_pattern(&w);
        prop_assert_eq!(&p, &rgs(&w));
        let mut perm: Vec<u32> = (1..6).collect();
        perm.rotate_left(shift as usize % 5);
        let moved: Vec<u32> = w.iter().map(|&x| perm[x as usize - 1] + shift).collect();
        prop_assert_eq!(partition_pattern(&moved), p);
    }

    #[test]
    fn greedy_prefixes_have_distinct_windows(i in 0..INSTANCES.len(), pick in any::<prop::sample::Index>()) {
        let (d, n) = INSTANCES[i];
        let t = greedy_uword(d, n).unwrap();
        let prefixes: Vec<Vec<Vec<u32>>> = t.replay().map(|m| m.rows().to_vec()).collect();
        prop_assert_eq!(prefixes.len(), t.ranks().len() + 1);
        let k = pick.index(prefixes.len());
        let windows = linear_windows(&prefixes[k], n);
        let set: BTreeSet<_> = windows.iter().collect();
        prop_assert_eq!(set.len(), windows.len());
        for row in &prefixes[k] {
            prop_assert!(is_permutation(row));
        }
        if k + 1 < prefixes.len() {
            let later = linear_windows(&prefixes[k + 1], n);
            prop_assert_eq!(&later[..windows.len()], &windows[..]);
        }
    }

    #[test]
    fn greedy_picks_the_smallest_rank(i in 0..INSTANCES.len(), pick in any::<prop::sample::Index>()) {
        let (d, n) = INSTANCES[i];
        let t = greedy_uword(d, n).unwrap();
        prop_assume!(!t.ranks().is_empty());
        let prefixes: Vec<_> = t.replay().collect();
        let k = pick.index(t.ranks().len());
        let chosen = t.ranks()[k] as u64;
        let rows = prefixes[k].rows();
        prop_assert_eq!(&naive_extension(rows, n, chosen), prefixes[k + 1].rows());
        for lower in 1..chosen {
            let w = linear_windows(&naive_extension(rows, n, lower), n);
            let set: BTreeSet<_> = w.iter().collect();
            prop_assert!(set.len() < w.len(), "rank {} was free at step {}", lower, k);
        }
    }

    #[test]
    fn partition_uword_matches_oracle(n in 3usize..6, raw in prop::collection::vec(1u32..6, 5)) {
        let start: Vec<u32> = raw[..n - 1].iter().map(|&x| (x - 1) % n as u32 + 1).collect();
        let b = bell(n) as usize;
        let (word, full) = naive_partition_greedy(n, &start, b);
        match greedy_partition_uword(n, &start).unwrap() {
            UWordOutcome::Complete(w) => {
                prop_assert!(full);
                prop_assert_eq!(w.len(), b + n - 1);
                prop_assert_eq!(w, word);
            }
            UWordOutcome::Stalled(s) => {
                prop_assert!(!full);
                prop_assert_eq!(s.word, word);
            }
        }
    }

    #[test]
    fn martin_and_euler_verify(n in 1usize..5, k in 1u32..4) {
        let start = vec![k - 1; n.saturating_sub(1)];
        match martin(n, k, Some(&start)).unwrap() {
            UCycleOutcome::Cycle(w) => {
                prop_assert_eq!(w.len() as u64, (k as u64).pow(n as u32));
                prop_assert!(verify_debruijn(&w, n, k).unwrap().verdict());
            }
            other => prop_assert!(false, "martin({}, {}) gave {:?}", n, k, other),
        }
        let w = debruijn_via_euler(n, k).unwrap();
        prop_assert!(verify_debruijn(&w, n, k).unwrap().verdict());
    }
}

#[test]
fn window_keys_are_injective() {
    for width in 1..=5 {
        let keys: BTreeSet<WindowKey> = (0..factorial(width))
            .map(|r| WindowKey::of_reduced(&[lehmer_unrank(r, width)]))
            .collect();
        assert_eq!(keys.len() as u128, factorial(width));
    }
    let pairs: BTreeSet<WindowKey> = (0..6)
        .flat_map(|a| (0..6).map(move |b| WindowKey::of_reduced(&[lehmer_unrank(a, 3), lehmer_unrank(b, 3)])))
        .collect();
    assert_eq!(pairs.len(), 36);
}

#[test]
fn greedy_ends_on_identity_only() {
    for (d, n) in INSTANCES {
        let t = greedy_uword(d, n).unwrap();
        let id = ReducedWindow::identity(d - 1, n);
        let windows = linear_windows(t.uword().rows(), n);
        let hits: Vec<usize> = windows
            .iter()
            .enumerate()
            .filter(|(_, w)| w.as_slice() == id.rows())
            .map(|(i, _)| i)
            .collect();
        assert_eq!(hits, [windows.len() - 1], "({d},{n})");
        assert!(verify_multiperm_ucycle(t.ucycle().rows(), d, n, true).unwrap().verdict());
    }
}

#[test]
fn bell_matches_enumeration() {
    for n in 1..=7 {
        assert_eq!(bell(n) as usize, brute_bell(n), "n={n}");
    }
}

#[test]
fn successful_starts_use_distinct_letters() {
    for n in 3..=6 {
        for mode in [SearchMode::UWord, SearchMode::UCycle] {
            let found = search_starts(n, mode, SearchOptions::default()).unwrap().successes;
            if mode == SearchMode::UWord {
                assert!(!found.is_empty(), "n={n}");
            }
            for s in found {
                let letters: BTreeSet<u32> = s.iter().copied().collect();
                assert_eq!(letters.len(), s.len(), "n={n} {s:?}");
            }
        }
    }
}

#[test]
fn overlap_graphs_are_regular_and_routes_linearize() {
    for (d, n) in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)] {
        let g = build_overlap_graph(d, n).unwrap();
        let deg = n.pow(d as u32 - 1);
        for v in 0..g.graph.vertex_count() {
            assert_eq!(g.graph.out_degree(v), deg);
            assert_eq!(g.graph.in_degree(v), deg);
        }
        let HamiltonSearch::Found(cycle) = hamiltonian_cycle(&g.graph, 1_000_000) else {
            panic!("no route for ({d},{n})");
        };
        let vertices: Vec<ReducedWindow> = cycle.iter().map(|&v| g.graph.vertex(v).clone()).collect();
        let order = implied_order(&vertices, d, n).unwrap();
        if let Ok(rows) = linearize(&order) {
            assert!(verify_multiperm_ucycle(&rows, d, n, true).unwrap().verdict(), "({d},{n})");
        }
    }
}
