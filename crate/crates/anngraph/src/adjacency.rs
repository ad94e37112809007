//! Adjacency predicates for the three graphs, stated purely in terms of the
//! supports of the two function classes.

use crate::model::{GraphKind, PointSet};

/// Zero-divisor adjacency: the product vanishes everywhere, which for
/// supports means they are disjoint.
pub fn gamma_adjacent(a: PointSet, b: PointSet) -> bool {
    a.is_disjoint(b)
}

/// Annihilator adjacency: the annihilator of the product strictly exceeds
/// both individual annihilators, which for supports means neither contains
/// the other.
pub fn ag_adjacent(a: PointSet, b: PointSet) -> bool {
    a.is_incomparable(b)
}

/// Weak zero-divisor adjacency for distinct classes: there are nonzero
/// annihilating witnesses with disjoint supports, one inside each
/// complement.
///
/// For distinct nonempty proper supports such witnesses always exist (two
/// equal singleton complements would force the classes to coincide), so
/// distinct classes are always adjacent and the reduced graph is complete.
pub fn wgamma_adjacent(a: PointSet, b: PointSet) -> bool {
    a != b || wgamma_same_class_adjacent(a)
}

/// Weak zero-divisor adjacency between two distinct scalar multiples of the
/// same class: the two witnesses must live disjointly inside the one
/// complement, so it needs at least two points.
pub fn wgamma_same_class_adjacent(a: PointSet) -> bool {
    a.complement().len() >= 2
}

/// Dispatches on the graph kind, for distinct classes.
pub fn adjacent(kind: GraphKind, a: PointSet, b: PointSet) -> bool {
    match kind {
        GraphKind::ZeroDivisor => gamma_adjacent(a, b),
        GraphKind::Annihilator => ag_adjacent(a, b),
        GraphKind::WeaklyZeroDivisor => wgamma_adjacent(a, b),
    }
}

/// Whether two distinct copies of the same class are adjacent; only the weak
/// graph ever joins them.
pub fn same_class_adjacent(kind: GraphKind, a: PointSet) -> bool {
    match kind {
        GraphKind::ZeroDivisor | GraphKind::Annihilator => false,
        GraphKind::WeaklyZeroDivisor => wgamma_same_class_adjacent(a),
    }
}

/// Number of nonzero classes annihilating a class with support `a`: the
/// nonempty subsets of the complement.
pub fn ann_class_count(a: PointSet) -> u64 {
    (1u64 << a.complement().len()) - 1
}

/// Weak adjacency decided by exhaustive search over witness pairs, kept as a
/// debug oracle for the closed forms above. Enumerates nonempty `C` inside
/// the complement of `a` and checks that the complement of `b` still has a
/// point outside `C`.
pub fn wgamma_adjacent_by_search(a: PointSet, b: PointSet) -> bool {
    let ac = a.complement().bits();
    let bc = b.complement().bits();
    let mut c = ac;
    loop {
        if c != 0 && bc & !c != 0 {
            return true;
        }
        if c == 0 {
            return false;
        }
        c = (c - 1) & ac;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::enumerate_vertices;

    fn ps(points: &[u32], n: u32) -> PointSet {
        PointSet::from_points(points, n).unwrap()
    }

    #[test]
    fn gamma_examples() {
        assert!(gamma_adjacent(ps(&[1], 4), ps(&[2, 3], 4)));
        assert!(!gamma_adjacent(ps(&[1, 2], 4), ps(&[2, 3], 4)));
    }

    #[test]
    fn ag_examples() {
        assert!(ag_adjacent(ps(&[1, 2], 4), ps(&[2, 3], 4)));
        assert!(!ag_adjacent(ps(&[1], 4), ps(&[1, 2], 4)));
        assert!(ag_adjacent(ps(&[1], 4), ps(&[2], 4)));
    }

    #[test]
    fn wgamma_distinct_classes_always_adjacent() {
        for n in 2..=8 {
            let vs = enumerate_vertices(n).unwrap();
            for (i, &a) in vs.iter().enumerate() {
                for &b in &vs[i + 1..] {
                    assert!(wgamma_adjacent(a, b), "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn wgamma_same_class_rule() {
        assert!(wgamma_same_class_adjacent(ps(&[1], 3)));
        assert!(!wgamma_same_class_adjacent(ps(&[1, 2], 3)));
        for n in 2..=8 {
            for a in enumerate_vertices(n).unwrap() {
                assert_eq!(
                    wgamma_same_class_adjacent(a),
                    a.complement().len() >= 2,
                    "n={n} a={a}"
                );
            }
        }
    }

    #[test]
    fn closed_forms_match_witness_search() {
        for n in 2..=8 {
            let vs = enumerate_vertices(n).unwrap();
            for &a in &vs {
                assert_eq!(
                    wgamma_same_class_adjacent(a),
                    wgamma_adjacent_by_search(a, a),
                    "same class n={n} a={a}"
                );
                for &b in &vs {
                    if a != b {
                        assert_eq!(
                            wgamma_adjacent(a, b),
                            wgamma_adjacent_by_search(a, b),
                            "n={n} a={a} b={b}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn hierarchy_gamma_ag_wgamma() {
        for n in 2..=10 {
            let vs = enumerate_vertices(n).unwrap();
            for (i, &a) in vs.iter().enumerate() {
                for &b in &vs[i + 1..] {
                    if gamma_adjacent(a, b) {
                        assert!(ag_adjacent(a, b), "n={n} a={a} b={b}");
                    }
                    if ag_adjacent(a, b) {
                        assert!(wgamma_adjacent(a, b), "n={n} a={a} b={b}");
                    }
                }
            }
        }
    }

    #[test]
    fn three_kinds_coincide_exactly_for_two_points() {
        for n in 2..=8 {
            let vs = enumerate_vertices(n).unwrap();
            let mut equal = true;
            for (i, &a) in vs.iter().enumerate() {
                for &b in &vs[i + 1..] {
                    if gamma_adjacent(a, b) != wgamma_adjacent(a, b) {
                        equal = false;
                    }
                }
            }
            assert_eq!(equal, n == 2, "n={n}");
        }
    }

    #[test]
    fn predicates_are_symmetric() {
        for n in 2..=7 {
            let vs = enumerate_vertices(n).unwrap();
            for &a in &vs {
                for &b in &vs {
                    if a == b {
                        continue;
                    }
                    for kind in GraphKind::ALL {
                        assert_eq!(adjacent(kind, a, b), adjacent(kind, b, a));
                    }
                }
            }
        }
    }

    #[test]
    fn ag_is_self_complementary_under_support_complement() {
        for n in 2..=8 {
            let vs = enumerate_vertices(n).unwrap();
            for &a in &vs {
                for &b in &vs {
                    if a != b {
                        assert_eq!(
                            ag_adjacent(a, b),
                            ag_adjacent(a.complement(), b.complement())
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn ann_class_count_examples() {
        assert_eq!(ann_class_count(ps(&[1, 2], 4)), 3);
        assert_eq!(ann_class_count(ps(&[1, 2, 3], 4)), 1);
        assert_eq!(ann_class_count(ps(&[1], 4)), 7);
    }
}
