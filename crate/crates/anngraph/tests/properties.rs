//! Property-based tests: invariants of the adjacency predicates, the
//! coloring, and the export formats under randomly drawn supports.

use proptest::prelude::*;

use anngraph::adjacency::{
    adjacent, ag_adjacent, ann_class_count, gamma_adjacent, wgamma_adjacent,
    wgamma_adjacent_by_search,
};
use anngraph::coloring::{
    color_classes_are_chains, expected_palette, greedy_chain_coloring, verify_coloring,
};
use anngraph::export::{graph_document, parse_json, rebuild, to_json};
use anngraph::model::enumerate_vertices;
use anngraph::{Graph, GraphKind, PointSet, ReducedGraph};

/// Strategy drawing a point count and two (possibly equal) supports over it.
fn support_pair(max_n: u32) -> impl Strategy<Value = (PointSet, PointSet)> {
    (2..=max_n).prop_flat_map(|n| {
        let proper = 1..(1u64 << n) - 1;
        (proper.clone(), proper)
            .prop_map(move |(a, b)| (PointSet::new(a, n).unwrap(), PointSet::new(b, n).unwrap()))
    })
}

proptest! {
    /// All three predicates depend only on the unordered pair.
    #[test]
    fn adjacency_is_symmetric((a, b) in support_pair(12)) {
        prop_assert_eq!(gamma_adjacent(a, b), gamma_adjacent(b, a));
        prop_assert_eq!(ag_adjacent(a, b), ag_adjacent(b, a));
        prop_assert_eq!(wgamma_adjacent(a, b), wgamma_adjacent(b, a));
    }

    /// Disjoint supports are incomparable, and distinct classes are always
    /// weakly adjacent: each graph's edges contain the previous one's.
    #[test]
    fn adjacency_is_nested((a, b) in support_pair(12)) {
        if gamma_adjacent(a, b) {
            prop_assert!(ag_adjacent(a, b));
        }
        if a != b && ag_adjacent(a, b) {
            prop_assert!(wgamma_adjacent(a, b));
        }
    }

    /// The closed-form weak adjacency agrees with the exhaustive witness
    /// search it replaced.
    #[test]
    fn weak_adjacency_matches_witness_search((a, b) in support_pair(12)) {
        prop_assert_eq!(wgamma_adjacent(a, b), wgamma_adjacent_by_search(a, b));
    }

    /// Complementing both supports is an involution and preserves
    /// incomparability, hence annihilator adjacency.
    #[test]
    fn complement_preserves_annihilator_adjacency((a, b) in support_pair(12)) {
        prop_assert_eq!(a.complement().complement(), a);
        prop_assert_eq!(ag_adjacent(a, b), ag_adjacent(a.complement(), b.complement()));
    }

    /// The classes annihilating a support are the nonempty subsets of its
    /// complement.
    #[test]
    fn annihilator_count_counts_disjoint_supports((a, _) in support_pair(10)) {
        let disjoint = enumerate_vertices(a.point_count())
            .unwrap()
            .into_iter()
            .filter(|&b| gamma_adjacent(a, b))
            .count() as u64;
        prop_assert_eq!(disjoint, ann_class_count(a));
    }

    /// The two-phase coloring stays proper, hits the predicted palette, and
    /// keeps every color class totally ordered by inclusion.
    #[test]
    fn coloring_invariants_hold(n in 2u32..=9) {
        let c = greedy_chain_coloring(n).unwrap();
        let g = ReducedGraph::build(n, GraphKind::Annihilator).unwrap();
        let v = verify_coloring(&g, &c).unwrap();
        prop_assert!(v.proper, "violation at {:?}", v.violation);
        prop_assert_eq!(v.palette, expected_palette(n));
        prop_assert!(color_classes_are_chains(&c));
    }

    /// JSON export roundtrips by value and by bytes, and the rebuilt graph
    /// matches the original adjacency.
    #[test]
    fn export_roundtrips(n in 2u32..=7, kind_idx in 0usize..3) {
        let kind = GraphKind::ALL[kind_idx];
        let g = ReducedGraph::build(n, kind).unwrap();
        let doc = graph_document(&g).unwrap();
        let json = to_json(&doc);
        let back = parse_json(&json).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(to_json(&back), json);

        let dense = rebuild(&back).unwrap();
        prop_assert_eq!(dense.vertex_count(), g.vertex_count());
        for u in 0..g.vertex_count() {
            for w in u + 1..g.vertex_count() {
                prop_assert_eq!(dense.adjacent(u, w), g.adjacent(u, w));
            }
        }
    }

    /// The dispatching predicate agrees with the per-kind predicates.
    #[test]
    fn kind_dispatch_agrees((a, b) in support_pair(12)) {
        prop_assert_eq!(adjacent(GraphKind::ZeroDivisor, a, b), gamma_adjacent(a, b));
        prop_assert_eq!(adjacent(GraphKind::Annihilator, a, b), ag_adjacent(a, b));
        prop_assert_eq!(adjacent(GraphKind::WeaklyZeroDivisor, a, b), wgamma_adjacent(a, b));
    }
}
