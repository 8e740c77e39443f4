mod common;

use bipower_core::gallery::{random_bipartite_with_pm, random_matched_tree};
use bipower_core::graph::{bipartition, Side};
use bipower_core::ham::{ham_cycle, laceable_ham_path, tree_ham_path};
use bipower_core::verify::{
    brute_ham_path, crossing_count, crossing_counts, verify_bipower_cycle, verify_bipower_path, Traversal,
    DEFAULT_ORACLE_BOUND,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tree_paths_cross_twice(half in 1usize..40, seed in any::<u64>()) {
        let (t, m) = random_matched_tree(half, seed).unwrap();
        for (x, y) in m.pairs() {
            for (a, b) in [(x, y), (y, x)] {
                let p = tree_ham_path(&t, &m, a, b).unwrap();
                let report = verify_bipower_path(&t, p.vertices(), a, b, 3);
                prop_assert!(report.passed(), "{:?}", report);
                for (u, v) in t.edges().filter(|&(u, v)| !m.contains(u, v)) {
                    prop_assert_eq!(crossing_count(&t, p.vertices(), Traversal::Open, (u, v)).unwrap(), 2);
                }
            }
        }
    }

    #[test]
    fn laceable_agrees_with_search(half in 1usize..6, extra in 0usize..12, seed in any::<u64>()) {
        let (g, m) = random_bipartite_with_pm(half, extra, seed).unwrap();
        let parts = bipartition(&g).unwrap();
        let cube = bipower_core::bipower(&g, 3);
        for x in parts.part(Side::X) {
            for y in parts.part(Side::Y) {
                let p = laceable_ham_path(&g, &m, x, y).unwrap();
                prop_assert!(verify_bipower_path(&g, p.vertices(), x, y, 3).passed());
                prop_assert!(brute_ham_path(&cube, x, y, DEFAULT_ORACLE_BOUND).unwrap().is_some());
            }
        }
    }

    #[test]
    fn cycles_are_valid(half in 2usize..60, extra in 0usize..30, seed in any::<u64>()) {
        let (g, m) = random_bipartite_with_pm(half, extra, seed).unwrap();
        let c = ham_cycle(&g, &m).unwrap();
        prop_assert!(verify_bipower_cycle(&g, c.vertices(), 3).passed());
    }

    #[test]
    fn crossing_routes_agree(half in 1usize..20, seed in any::<u64>(), shuffle_seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let (t, _) = random_matched_tree(half, seed).unwrap();
        let mut seq: Vec<usize> = (0..t.n()).collect();
        seq.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(shuffle_seed));
        for traversal in [Traversal::Open, Traversal::Closed] {
            let bulk = crossing_counts(&t, &seq, traversal).unwrap();
            for e in t.edges() {
                prop_assert_eq!(bulk[&e], crossing_count(&t, &seq, traversal, e).unwrap());
            }
        }
    }
}

#[test]
fn tree_cycle_crossings_are_two() {
    for seed in 0..50 {
        let (t, m) = random_matched_tree(25, seed).unwrap();
        let c = ham_cycle(&t, &m).unwrap();
        let counts = crossing_counts(&t, c.vertices(), Traversal::Closed).unwrap();
        for ((u, v), k) in counts {
            if !m.contains(u, v) {
                assert_eq!(k, 2);
            } else {
                assert_eq!(k % 2, 0);
            }
        }
    }
}
