//! Finite model of the ring: functions are identified by their support on the
//! set of isolated points `{x_1, ..., x_n}`, so every graph vertex is a
//! nonempty proper subset of those points, stored as a `u64` bitmask.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{ModelError, MAX_POINTS, MIN_POINTS};

/// Cap on `n` for operations that materialize all `2^n - 2` vertices.
pub const ENUMERATION_CAP: u32 = 20;

/// Nonempty proper subset of the `n` isolated points.
///
/// Bit `i` set means the point `x_{i+1}` belongs to the set. A vertex of any
/// of the graphs is the support of a function class, which is exactly such a
/// subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PointSet {
    bits: u64,
    n: u32,
}

impl PointSet {
    /// Builds a support from a bitmask over `n` points.
    ///
    /// # Examples
    /// ```
    /// use anngraph::model::PointSet;
    /// let a = PointSet::new(0b101, 3).unwrap();
    /// assert_eq!(a.len(), 2);
    /// assert!(PointSet::new(0b111, 3).is_err());
    /// ```
    pub fn new(bits: u64, n: u32) -> Result<Self, ModelError> {
        if !(MIN_POINTS..=MAX_POINTS).contains(&n) {
            return Err(ModelError::PointCount(n));
        }
        let full = (1u64 << n) - 1;
        if bits == 0 || bits & !full != 0 || bits == full {
            return Err(ModelError::NotProperSupport { bits, n });
        }
        Ok(PointSet { bits, n })
    }

    /// Builds a support from 1-based point indices.
    pub fn from_points(points: &[u32], n: u32) -> Result<Self, ModelError> {
        let mut bits = 0u64;
        for &p in points {
            if p == 0 || p > n {
                return Err(ModelError::PointIndex(p, n));
            }
            bits |= 1 << (p - 1);
        }
        PointSet::new(bits, n)
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn point_count(self) -> u32 {
        self.n
    }

    /// Number of points in the set, i.e. the level it occupies. Always in
    /// `1..n` — the constructors reject empty and full supports.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(self) -> u32 {
        self.bits.count_ones()
    }

    /// The complementary support within the same `n` points.
    ///
    /// For a class with support `A`, the functions annihilating it are
    /// exactly those supported inside this complement.
    pub fn complement(self) -> PointSet {
        let full = (1u64 << self.n) - 1;
        PointSet {
            bits: full ^ self.bits,
            n: self.n,
        }
    }

    /// 1-based point indices in ascending order.
    pub fn points(self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.len() as usize);
        let mut b = self.bits;
        while b != 0 {
            out.push(b.trailing_zeros() + 1);
            b &= b - 1;
        }
        out
    }

    pub fn contains_point(self, p: u32) -> bool {
        p >= 1 && p <= self.n && self.bits >> (p - 1) & 1 == 1
    }

    pub fn is_disjoint(self, other: PointSet) -> bool {
        self.bits & other.bits == 0
    }

    pub fn is_subset_of(self, other: PointSet) -> bool {
        self.bits & !other.bits == 0
    }

    /// Whether neither set contains the other.
    pub fn is_incomparable(self, other: PointSet) -> bool {
        !self.is_subset_of(other) && !other.is_subset_of(self)
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "x{p}")?;
        }
        write!(f, "}}")
    }
}

/// Lexicographic comparison of two equal-sized supports, reading their point
/// indices in ascending order.
///
/// Equivalent to asking whether the smallest point in the symmetric
/// difference belongs to `a`.
pub fn lex_cmp(a: u64, b: u64) -> Ordering {
    let d = a ^ b;
    if d == 0 {
        Ordering::Equal
    } else if a & (d & d.wrapping_neg()) != 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Strict level order within one level: `a` precedes `b` in the
/// lexicographic order of their ascending point sequences.
///
/// # Errors
/// The order is only defined for supports of equal size over the same points.
pub fn lex_lt(a: PointSet, b: PointSet) -> Result<bool, ModelError> {
    if a.point_count() != b.point_count() {
        return Err(ModelError::SpaceMismatch(a.point_count(), b.point_count()));
    }
    if a.len() != b.len() {
        return Err(ModelError::LevelMismatch(a.len(), b.len()));
    }
    Ok(lex_cmp(a.bits(), b.bits()) == Ordering::Less)
}

/// All supports of size `k` over `n` points, in lexicographic order.
pub fn level(n: u32, k: u32) -> Result<Vec<PointSet>, ModelError> {
    if !(MIN_POINTS..=MAX_POINTS).contains(&n) {
        return Err(ModelError::PointCount(n));
    }
    if n > ENUMERATION_CAP {
        return Err(ModelError::TooLarge {
            n,
            cap: ENUMERATION_CAP,
        });
    }
    assert!(
        k >= 1 && k < n,
        "level {k} is not a vertex level for n = {n}"
    );
    let mut masks: Vec<u64> = (1..(1u64 << n) - 1)
        .filter(|m| m.count_ones() == k)
        .collect();
    masks.sort_by(|&a, &b| lex_cmp(a, b));
    Ok(masks.into_iter().map(|bits| PointSet { bits, n }).collect())
}

/// All `2^n - 2` vertices in canonical order: level 1 up to level `n - 1`,
/// each level sorted lexicographically.
pub fn enumerate_vertices(n: u32) -> Result<Vec<PointSet>, ModelError> {
    if !(MIN_POINTS..=MAX_POINTS).contains(&n) {
        return Err(ModelError::PointCount(n));
    }
    if n > ENUMERATION_CAP {
        return Err(ModelError::TooLarge {
            n,
            cap: ENUMERATION_CAP,
        });
    }
    let mut out = Vec::with_capacity((1usize << n) - 2);
    for k in 1..n {
        out.extend(level(n, k)?);
    }
    Ok(out)
}

/// Exact binomial coefficient; the values used here stay within `u64`.
pub fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k as u64 {
        acc = acc * (n as u64 - i) / (i + 1);
    }
    acc
}

/// Size of a graph parameter: a finite value or one of the two infinite
/// cardinalities that occur for these rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Cardinal {
    Finite(u64),
    Aleph0,
    Continuum,
}

impl Cardinal {
    fn rank(self) -> (u8, u64) {
        match self {
            Cardinal::Finite(v) => (0, v),
            Cardinal::Aleph0 => (1, 0),
            Cardinal::Continuum => (2, 0),
        }
    }
}

impl PartialOrd for Cardinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cardinal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinal::Finite(v) => write!(f, "{v}"),
            Cardinal::Aleph0 => write!(f, "aleph_0"),
            Cardinal::Continuum => write!(f, "continuum"),
        }
    }
}

/// Which of the three graphs on the same vertex set is meant.
///
/// With supports `A = supp f` and `B = supp g`:
/// zero-divisor adjacency is `A ∩ B = ∅` (the product vanishes),
/// annihilator adjacency is incomparability of `A` and `B`,
/// weak adjacency asks for disjoint nonzero annihilator witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GraphKind {
    ZeroDivisor,
    Annihilator,
    WeaklyZeroDivisor,
}

impl GraphKind {
    pub const ALL: [GraphKind; 3] = [
        GraphKind::ZeroDivisor,
        GraphKind::Annihilator,
        GraphKind::WeaklyZeroDivisor,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            GraphKind::ZeroDivisor => "gamma",
            GraphKind::Annihilator => "ag",
            GraphKind::WeaklyZeroDivisor => "wgamma",
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl std::str::FromStr for GraphKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "gamma" | "zero-divisor" => Ok(GraphKind::ZeroDivisor),
            "ag" | "annihilator" => Ok(GraphKind::Annihilator),
            "wgamma" | "weakly-zero-divisor" => Ok(GraphKind::WeaklyZeroDivisor),
            other => Err(format!(
                "unknown graph kind {other:?}, expected gamma, ag or wgamma"
            )),
        }
    }
}

/// Shape of the underlying space: finitely many isolated points, or
/// countably many (every parameter that grows with `n` becomes infinite).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpaceModel {
    FiniteIsolated { n: u32 },
    InfiniteIsolated,
}

impl SpaceModel {
    pub fn finite(n: u32) -> Result<Self, ModelError> {
        if (MIN_POINTS..=MAX_POINTS).contains(&n) {
            Ok(SpaceModel::FiniteIsolated { n })
        } else {
            Err(ModelError::PointCount(n))
        }
    }
}

impl fmt::Display for SpaceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceModel::FiniteIsolated { n } => write!(f, "finite isolated model, n = {n}"),
            SpaceModel::InfiniteIsolated => write!(f, "countably infinite isolated model"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_full_and_out_of_range() {
        assert!(PointSet::new(0, 3).is_err());
        assert!(PointSet::new(0b111, 3).is_err());
        assert!(PointSet::new(0b1000, 3).is_err());
        assert!(PointSet::new(1, 1).is_err());
        assert!(PointSet::new(1, 63).is_err());
        assert!(PointSet::new(1, 62).is_ok());
    }

    #[test]
    fn complement_is_an_involution() {
        for n in 2..=8 {
            for v in enumerate_vertices(n).unwrap() {
                let c = v.complement();
                assert_eq!(c.complement(), v);
                assert_eq!(v.len() + c.len(), n);
                assert!(v.is_disjoint(c));
            }
        }
    }

    #[test]
    fn points_roundtrip() {
        let a = PointSet::from_points(&[1, 3], 4).unwrap();
        assert_eq!(a.bits(), 0b0101);
        assert_eq!(a.points(), vec![1, 3]);
        assert_eq!(a.to_string(), "{x1,x3}");
        assert!(a.contains_point(3));
        assert!(!a.contains_point(2));
        assert!(PointSet::from_points(&[0], 4).is_err());
        assert!(PointSet::from_points(&[5], 4).is_err());
    }

    #[test]
    fn vertex_count_is_two_to_n_minus_two() {
        for n in 2..=12 {
            assert_eq!(enumerate_vertices(n).unwrap().len(), (1usize << n) - 2);
        }
        assert_eq!(enumerate_vertices(5).unwrap().len(), 30);
    }

    #[test]
    fn enumeration_is_by_level_then_lex() {
        let vs = enumerate_vertices(4).unwrap();
        let levels: Vec<u32> = vs.iter().map(|v| v.len()).collect();
        let mut sorted = levels.clone();
        sorted.sort_unstable();
        assert_eq!(levels, sorted);

        let level2: Vec<String> = vs
            .iter()
            .filter(|v| v.len() == 2)
            .map(|v| v.to_string())
            .collect();
        assert_eq!(
            level2,
            ["{x1,x2}", "{x1,x3}", "{x1,x4}", "{x2,x3}", "{x2,x4}", "{x3,x4}"]
        );
    }

    #[test]
    fn lex_order_examples() {
        let n = 4;
        let a = PointSet::from_points(&[1, 3], n).unwrap();
        let b = PointSet::from_points(&[2, 3], n).unwrap();
        assert!(lex_lt(a, b).unwrap());
        assert!(!lex_lt(b, a).unwrap());
        let c = PointSet::from_points(&[1, 4], n).unwrap();
        let d = PointSet::from_points(&[2, 3], n).unwrap();
        assert!(lex_lt(c, d).unwrap());
        assert!(!lex_lt(a, a).unwrap());
    }

    #[test]
    fn lex_order_rejects_cross_level_comparison() {
        let a = PointSet::from_points(&[1], 4).unwrap();
        let b = PointSet::from_points(&[1, 2], 4).unwrap();
        assert_eq!(lex_lt(a, b), Err(ModelError::LevelMismatch(1, 2)));
        let c = PointSet::from_points(&[1], 5).unwrap();
        assert!(matches!(lex_lt(a, c), Err(ModelError::SpaceMismatch(4, 5))));
    }

    #[test]
    fn lex_order_is_total_on_each_level() {
        for n in [5u32, 8] {
            for k in 1..n {
                let vs = level(n, k).unwrap();
                for i in 0..vs.len() {
                    for j in 0..vs.len() {
                        let lt = lex_lt(vs[i], vs[j]).unwrap();
                        let gt = lex_lt(vs[j], vs[i]).unwrap();
                        match i.cmp(&j) {
                            Ordering::Less => assert!(lt && !gt),
                            Ordering::Equal => assert!(!lt && !gt),
                            Ordering::Greater => assert!(!lt && gt),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lex_order_matches_sequence_comparison() {
        for k in 1..6 {
            let vs = level(6, k).unwrap();
            let mut by_seq = vs.clone();
            by_seq.sort_by_key(|v| v.points());
            assert_eq!(vs, by_seq);
        }
    }

    #[test]
    fn least_level_element_is_prefix() {
        for n in 2..=8 {
            for k in 1..n {
                let first = level(n, k).unwrap()[0];
                let prefix: Vec<u32> = (1..=k).collect();
                assert_eq!(first.points(), prefix);
            }
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(12, 6), 924);
        assert_eq!(binomial(16, 8), 12870);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(62, 31), 465428353255261088);
    }

    #[test]
    fn cardinal_ordering() {
        assert!(Cardinal::Finite(u64::MAX) < Cardinal::Aleph0);
        assert!(Cardinal::Aleph0 < Cardinal::Continuum);
        assert!(Cardinal::Finite(2) < Cardinal::Finite(3));
        assert_eq!(Cardinal::Aleph0.to_string(), "aleph_0");
    }

    #[test]
    fn graph_kind_parsing() {
        assert_eq!("ag".parse::<GraphKind>(), Ok(GraphKind::Annihilator));
        assert_eq!("GAMMA".parse::<GraphKind>(), Ok(GraphKind::ZeroDivisor));
        assert_eq!(
            "wgamma".parse::<GraphKind>(),
            Ok(GraphKind::WeaklyZeroDivisor)
        );
        assert!("zg".parse::<GraphKind>().is_err());
    }

    #[test]
    fn enumeration_caps() {
        assert!(enumerate_vertices(1).is_err());
        assert!(enumerate_vertices(21).is_err());
        assert!(matches!(
            enumerate_vertices(21),
            Err(ModelError::TooLarge { n: 21, cap: 20 })
        ));
    }
}
