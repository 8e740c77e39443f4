use bipower_core::gallery::random_bipartite_with_pm;
use bipower_core::graph::{is_connected, is_tree};
use bipower_core::infinite::{
    canonical_lift, cycle_sequence, family, infinite_certificate, matched_quotient, normal_spanning_tree,
    stabilization_check, truncate_saturated, FAMILY_NAMES,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn quotient_tree_lifts(half in 1usize..25, extra in 0usize..40, seed in any::<u64>()) {
        let (g, m) = random_bipartite_with_pm(half, extra, seed).unwrap();
        let q = matched_quotient(&g, &m).unwrap();
        prop_assert!(is_connected(&q));
        let qt = normal_spanning_tree(&q, 0).unwrap();
        prop_assert!(qt.is_normal_in(&q));
        let t = canonical_lift(&g, &m, &qt.to_graph()).unwrap();
        prop_assert!(is_tree(&t));
        prop_assert!(t.is_subgraph_of(&g));
        prop_assert!(m.pairs().iter().all(|&(u, v)| t.has_edge(u, v)));
    }
}

#[test]
fn truncations_are_saturated_induced_subgraphs() {
    for name in FAMILY_NAMES {
        let lazy = family(name).unwrap();
        for r in 0..7 {
            let t = truncate_saturated(lazy.as_ref(), r).unwrap();
            assert!(t.matching.is_perfect());
            t.matching.validate_perfect_in(&t.graph).unwrap();
            for u in 0..t.n() {
                let nbrs = lazy.neighbors(t.label(u));
                for v in 0..t.n() {
                    assert_eq!(t.graph.has_edge(u, v), nbrs.contains(&t.label(v)), "{name} r={r}");
                }
                let outside = nbrs.iter().any(|&l| t.id(l).is_none());
                assert_eq!(outside, t.boundary.contains(&u));
            }
        }
    }
}

#[test]
fn stabilized_classes_keep_half_the_tail() {
    for name in FAMILY_NAMES {
        let lazy = family(name).unwrap();
        for top in 3..=7 {
            let schedule: Vec<usize> = (1..=top).collect();
            let seq = cycle_sequence(lazy.as_ref(), &schedule).unwrap();
            let st = stabilization_check(&seq).unwrap();
            for w in &st.windows {
                assert!(2 * w.largest.len() >= w.tail.len(), "{name} {top} window {}", w.step);
            }
        }
    }
}

#[test]
fn certificates_are_deterministic() {
    for name in FAMILY_NAMES {
        let lazy = family(name).unwrap();
        let a = infinite_certificate(lazy.as_ref(), &[1, 2, 3, 4, 5]).unwrap();
        let b = infinite_certificate(lazy.as_ref(), &[1, 2, 3, 4, 5]).unwrap();
        assert_eq!(a, b);
    }
}
